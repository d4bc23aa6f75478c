import pytest
from sympy.polys.domains import QQ

from src.algebra.invariants import Basis, InvariantPoly, monomial, partitions_of, random_invariant, reduce_mod_c1
from src.algebra.symmetric import SigmaPoly
from src.errors import InvalidDimension, NotMonomial, WrongDegree
from src.pipelines.ci_sweep import degree_tuples, run_sweep
from src.pipelines.complete_intersection import (
    CIData,
    PiValue,
    chern_number,
    evaluate_pi,
    expected_leading_term,
    injectivity_witness,
    leading_term,
    total_chern,
    total_chern_via_degrees,
    total_Iprime,
    validate_positivity,
)


def c(k, maxgen=4):
    return InvariantPoly.generator(Basis.CHERN, k, maxgen)


def test_golden_value_cubic_threefold_section():
    assert str(total_Iprime(c(2), CIData(2, 3, (3, 3, 3)))) == "-108*pi"


def test_symbolic_total_chern_n2_r3():
    c1, c2 = total_chern(CIData(2, 3))
    s1, s2 = SigmaPoly.sigma(3, 1), SigmaPoly.sigma(3, 2)
    assert c1.poly == (SigmaPoly.constant(3, 6) - s1).poly
    assert c2.poly == (SigmaPoly.constant(3, 15) - s1 * 6 + s1 * s1 - s2).poly


@pytest.mark.parametrize("n, r", [(1, 1), (2, 3), (3, 2)])
def test_total_chern_routes_agree(n, r):
    ci = CIData(n, r)
    assert [x.poly for x in total_chern(ci)] == [x.poly for x in total_chern_via_degrees(ci)]


def test_numeric_chern_number_of_cubic_surface():
    # c2 of a cubic surface in CP^3 is its Euler number 9
    assert chern_number(c(2), CIData(2, 1, (3,))) == QQ(9)


def test_c1_multiples_integrate_to_zero(rng):
    ci = CIData(3, 4, (2, 3, 3, 5))
    for _ in range(5):
        psi = random_invariant(rng, 2, 3)
        assert total_Iprime(c(1, 3) * psi, ci).is_zero()
    assert str(total_Iprime(c(1) * c(1), CIData(2, 3))) == "0"


def test_reduction_mod_c1_keeps_value(rng):
    ci = CIData(3, 4, (2, 2, 3, 4))
    phi = random_invariant(rng, 3, 3)
    assert str(total_Iprime(phi, ci)) == str(total_Iprime(reduce_mod_c1(phi), ci))


def test_symbolic_value_specializes(rng):
    phi = random_invariant(rng, 2, 2)
    symbolic = total_Iprime(phi, CIData(2, 3))
    assert str(evaluate_pi(symbolic, (2, 3, 5))) == str(total_Iprime(phi, CIData(2, 3, (2, 3, 5))))


@pytest.mark.parametrize("n, parts, want", [
    (2, (2,), "-sigma2*sigma3"),
    (3, (3,), "-sigma3*sigma4"),
    pytest.param(4, (2, 2), "sigma2^2*sigma5", marks=pytest.mark.slow),
])
def test_leading_term_values(n, parts, want):
    assert str(leading_term(monomial(parts, n), CIData(n, n + 1))) == want


def _monomial_cases():
    for n in range(2, 6):
        for parts in partitions_of(n, min_part=2):
            marks = [pytest.mark.slow] if n >= 4 else []
            yield pytest.param(n, parts, marks=marks, id=f"n{n}-{'.'.join(map(str, parts))}")


@pytest.mark.parametrize("n, parts", list(_monomial_cases()))
def test_leading_term_matches_closed_form(n, parts):
    phi = monomial(parts, n) * QQ(3, 2)
    ci = CIData(n, n + 1)
    assert leading_term(phi, ci).poly == expected_leading_term(phi, ci).poly


def test_leading_term_needs_c1_free_monomial():
    with pytest.raises(NotMonomial):
        leading_term(c(2) + c(1) * c(1), CIData(2, 3))
    with pytest.raises(NotMonomial):
        leading_term(c(1) * c(1), CIData(2, 3))


def test_wrong_degree_message():
    with pytest.raises(WrongDegree, match="degree 3 ≠ n = 2"):
        total_Iprime(c(3), CIData(2, 3, (3, 3, 3)))
    with pytest.raises(WrongDegree, match="not homogeneous"):
        total_Iprime(c(2) + c(1), CIData(2, 3))


def test_injectivity_n3():
    monomials, results, distinct = injectivity_witness(3, 4)
    assert [str(m) for m in monomials] == ["c3"]
    assert distinct


@pytest.mark.slow
def test_injectivity_n4():
    monomials, results, distinct = injectivity_witness(4, 5)
    assert len(monomials) == 2
    assert distinct


def test_positivity_warnings():
    report = validate_positivity(CIData(2, 2, (2, 2)))
    assert not report.ok
    assert any(w.startswith("canonical bundle not positive") for w in report.warnings)
    assert any("r > n fails (r = 2, n = 2)" in w for w in report.warnings)
    assert validate_positivity(CIData(2, 3, (3, 3, 3))).ok


def test_invalid_ci_data():
    with pytest.raises(InvalidDimension):
        CIData(0, 1)
    with pytest.raises(InvalidDimension):
        CIData(2, 3, (3, 3))
    with pytest.raises(InvalidDimension):
        CIData(2, 1, (0,))


def test_pi_value_printing():
    assert str(PiValue(QQ(1))) == "pi"
    assert str(PiValue(QQ(-1))) == "-pi"
    assert str(PiValue(QQ(0))) == "0"
    assert str(PiValue(QQ(-3, 2))) == "-3/2*pi"
    assert str(PiValue(SigmaPoly.sigma(2, 2))) == "(sigma2)*pi"


def test_sweep_rows_are_sorted(tmp_path):
    tuples = degree_tuples(3, 2, 3)
    assert tuples[0] == (2, 2, 2) and tuples[-1] == (3, 3, 3) and len(tuples) == 4
    out = tmp_path / "sweep.csv"
    frame = run_sweep(c(2, 2), 2, list(reversed(tuples)), workers=2, report_csv=out)
    assert list(frame.columns) == ["degrees", "transformed_chern_number", "total_iprime", "warnings"]
    assert frame["transformed_chern_number"].iloc[-1] == "324"
    assert list(frame["degrees"]) == ["2,2,2", "2,2,3", "2,3,3", "3,3,3"]
    assert frame["total_iprime"].iloc[-1] == "-108*pi"
    assert out.exists()
