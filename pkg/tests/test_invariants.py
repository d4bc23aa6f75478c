import pytest
from sympy.polys.domains import QQ

from src.algebra import invariants as inv
from src.algebra.invariants import Basis, InvariantPoly, Mode
from src.errors import DegreeMismatch, InvalidDimension


def c(k, maxgen=4):
    return InvariantPoly.generator(Basis.CHERN, k, maxgen)


def T(k, maxgen=4):
    return InvariantPoly.generator(Basis.POWER, k, maxgen)


def test_newton_tables():
    assert str(inv.to_power_basis(c(2))) == "-1/2*T2 + 1/2*T1^2"
    assert str(inv.to_chern_basis(T(2))) == "-2*c2 + c1^2"
    assert inv.to_chern_basis(T(3)) == c(1) * c(1) * c(1) - c(1) * c(2) * 3 + c(3) * 3


def test_newton_oracle_on_values():
    assert inv.newton_oracle([QQ(1), QQ(2), QQ(-1, 3)])
    assert inv.newton_oracle([QQ(5)], maxgen=4)


def test_basis_roundtrip(rng):
    for degree in range(1, 6):
        phi = inv.random_invariant(rng, degree, 5)
        assert inv.to_chern_basis(inv.to_power_basis(phi)).poly == phi.poly


def test_t1_transforms_to_zero_in_both_modes():
    for mode in Mode:
        assert inv.einstein_transform(T(1), 3, mode).is_zero()
        assert inv.einstein_transform(T(1), None, mode).is_zero()


def test_base_transform_of_c2():
    out = inv.einstein_transform(c(2), 2, Mode.BASE)
    assert str(out) == "c2 - 1/3*c1^2"


def test_domain_transform_of_c2():
    out = inv.einstein_transform(c(2), 2, Mode.DOMAIN)
    assert str(out) == "c2 - 3/8*c1^2"


@pytest.mark.parametrize("n", range(1, 9))
def test_c3_is_a_third_of_t3(n):
    lhs = inv.einstein_transform(c(3), n, Mode.DOMAIN)
    rhs = inv.einstein_transform(T(3), n, Mode.DOMAIN) * QQ(1, 3)
    assert lhs == rhs


def test_c3_symbolic_n():
    lhs = inv.einstein_transform(c(3), None, Mode.DOMAIN)
    rhs = inv.einstein_transform(T(3), None, Mode.DOMAIN) * QQ(1, 3)
    assert lhs == rhs
    assert "n + 2" in str(lhs)


@pytest.mark.parametrize("m", range(1, 9))
def test_domain_transform_matches_oracle(m):
    for n in (1, 2, 5):
        assert inv.einstein_transform(T(m, m), n, Mode.DOMAIN) == inv.einstein_oracle(m, n, Mode.DOMAIN)


@pytest.mark.parametrize("m", range(1, 7))
def test_base_transform_matches_oracle(m):
    assert inv.einstein_transform(T(m, m), 3, Mode.BASE) == inv.base_mode_oracle(m, 3)


def test_transform_kills_c1_multiples(rng):
    psi = inv.random_invariant(rng, 2, 4)
    for mode in Mode:
        assert inv.einstein_transform(c(1) * psi, 3, mode).is_zero()


def test_transform_is_multiplicative_and_idempotent(rng):
    a = inv.random_invariant(rng, 2, 4)
    b = inv.random_invariant(rng, 3, 4)
    ab = inv.einstein_transform(a * b, 4, Mode.DOMAIN)
    assert ab == inv.einstein_transform(a, 4, Mode.DOMAIN) * inv.einstein_transform(b, 4, Mode.DOMAIN)
    assert inv.einstein_transform(ab, 4, Mode.DOMAIN) == ab


def test_invalid_dimension():
    with pytest.raises(InvalidDimension):
        inv.einstein_transform(c(2), 0, Mode.DOMAIN)


def test_reduce_mod_c1_drops_c1_terms():
    phi = c(2) * c(2) + c(1) * c(3)
    assert inv.reduce_mod_c1(phi) == c(2) * c(2)


def test_homogeneous_parts():
    phi = c(2) + c(1) * c(3) + InvariantPoly.constant(QQ(7), maxgen=4)
    assert phi.degrees() == {0, 2, 4}
    assert not phi.is_homogeneous(4)
    assert phi.homogeneous_part(4) == c(1) * c(3)


def test_check_same_degree():
    inv.check_same_degree(c(2), c(1) * c(1))
    with pytest.raises(DegreeMismatch):
        inv.check_same_degree(c(2), c(3))


def test_partitions():
    assert inv.partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert inv.partitions_of(4, min_part=2) == [(4,), (2, 2)]


def test_equal_polys_hash_equal():
    small = InvariantPoly.generator(Basis.CHERN, 2, 2)
    wide = InvariantPoly.generator(Basis.CHERN, 2, 5)
    power = inv.to_power_basis(wide)
    assert small == wide == power
    assert hash(small) == hash(wide) == hash(power)
    assert len({small, wide, power}) == 1
