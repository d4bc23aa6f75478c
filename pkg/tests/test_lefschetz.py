import pytest

from src.algebra.scalars import I, ONE, crat, i_power
from src.errors import BidegreeMismatch, DegenerateForm
from src.forms import lefschetz as lz
from src.forms.altform import AltForm, merge_sign, sort_sign
from src.forms.hermitian import HermitianForm, random_hermitian
from src.algebra.linalg import identity


def test_sign_helpers():
    assert merge_sign((0, 2), (1,)) == ((0, 1, 2), -1)
    assert merge_sign((0,), (0,)) == (None, 0)
    assert sort_sign((2, 0, 1)) == ((0, 1, 2), 1)
    assert sort_sign((1, 1)) == (None, 0)


def test_theta_wedge_anticommutes():
    a, b = AltForm.theta(2, 0), AltForm.theta_bar(2, 1)
    assert a.wedge(b) == -(b.wedge(a))
    assert a.wedge(a).is_zero()
    assert b.wedge(a).component((0,), (1,)) == -ONE


def test_omega_squared_flat(flat_lefschetz):
    sq = flat_lefschetz.L(flat_lefschetz.omega)
    assert sq.terms == {((0, 1), (0, 1)): crat(2)}


def test_lambda_of_omega_is_dimension(rng):
    for n in (2, 3):
        lef = lz.Lefschetz(random_hermitian(rng, n, definite=False))
        assert lef.Lambda(lef.omega) == AltForm.scalar(n, crat(n))


def test_bidegree_checks():
    mixed = AltForm.theta(2, 0) + AltForm.theta_bar(2, 0)
    with pytest.raises(BidegreeMismatch):
        mixed.bidegree()
    assert mixed.bidegrees() == {(1, 0), (0, 1)}


def test_degenerate_metric_rejected():
    h = identity(2)
    h[1, 1] = crat(0)
    with pytest.raises(DegenerateForm):
        HermitianForm.from_matrix(h)
    h = identity(2)
    h[0, 1] = I
    with pytest.raises(DegenerateForm):
        HermitianForm.from_matrix(h)


@pytest.mark.parametrize("definite", [True, False])
def test_sl2_and_adjointness(rng, definite):
    lef = lz.Lefschetz(random_hermitian(rng, 3, definite=definite))
    for p, q in [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)]:
        phi = lz.random_form(rng, 3, p, q)
        assert lz.sl2_relations(lef, phi)
        for m in (1, 2):
            assert lz.lambda_L_power(lef, phi, m)
            assert lz.lambda_power_L(lef, phi, m)
    for p, q in [(0, 0), (1, 0), (1, 2)]:
        phi, psi = lz.random_form(rng, 3, p, q), lz.random_form(rng, 3, p + 1, q + 1)
        assert lz.adjointness(lef, phi, psi)


def test_primitive_forms(rng):
    lef = lz.Lefschetz(random_hermitian(rng, 3, definite=False))
    basis = lef.primitive_basis(1, 1)
    assert len(basis) == 8
    for b in basis:
        assert lef.Lambda(b).is_zero()
    phi = lef.random_primitive(rng, 1, 1)
    for m in range(0, 2):
        for k in range(0, m + 1):
            assert lz.lambda_k_L_m_primitive(lef, phi, k, m)


@pytest.mark.parametrize("case, bidegree", [("i", (3, 3)), ("ii", (3, 2)), ("iii", (2, 2)),
                                            ("iv", (1, 1)), ("iv", (0, 0)), ("v", (2, 1))])
def test_top_degree_identities(rng, case, bidegree):
    lef = lz.Lefschetz(random_hermitian(rng, 3, definite=False))
    phi = lz.random_form(rng, 3, *bidegree)
    assert lz.diff_form_identity(lef, case, phi)


def test_top_degree_identity_rejects_bidegree(rng, flat_lefschetz):
    with pytest.raises(BidegreeMismatch):
        lz.diff_form_identity(flat_lefschetz, "i", lz.random_form(rng, 2, 1, 1))


def test_component_formulas(rng):
    lef = lz.Lefschetz(random_hermitian(rng, 3))
    top = lz.random_form(rng, 3, 3, 3)
    assert lef.Lambda(top, 3).coefficient(((), ())) == lz.lambda_top_formula(lef, top)
    sub = lz.random_form(rng, 3, 3, 2)
    assert lef.Lambda(sub, 2) == lz.lambda_n_minus_1_formula(lef, sub)


def test_conjugation_commutes_with_operators(rng):
    lef = lz.Lefschetz(random_hermitian(rng, 2, definite=False))
    phi = lz.random_form(rng, 2, 1, 0)
    assert phi.conjugate().bidegree() == (0, 1)
    assert phi.conjugate().conjugate() == phi
    assert lef.L(phi).conjugate() == lef.L(phi.conjugate())
    assert lef.omega.conjugate() == lef.omega


def test_contraction_is_an_antiderivation(rng):
    a, b = lz.random_form(rng, 3, 1, 1), lz.random_form(rng, 3, 1, 0)
    for index in range(3):
        for barred in (False, True):
            lhs = a.wedge(b).contract(index, barred)
            rhs = a.contract(index, barred).wedge(b) + a.wedge(b.contract(index, barred))
            assert lhs == rhs


def test_h_grading(flat_lefschetz):
    phi = AltForm.theta(2, 1)
    assert flat_lefschetz.H(phi) == phi
    assert i_power(2) == -ONE


@pytest.mark.slow
def test_identities_n4(rng):
    lef = lz.Lefschetz(random_hermitian(rng, 4, definite=False))
    for case, bidegree in [("i", (4, 4)), ("ii", (4, 3)), ("iii", (3, 3)), ("iv", (2, 2)), ("v", (3, 2))]:
        assert lz.diff_form_identity(lef, case, lz.random_form(rng, 4, *bidegree))
