import pytest

from src.algebra.expansion import chern_expansion, composition_holds, expand_TW, format_expansion
from src.errors import InvalidDimension


@pytest.mark.parametrize("m", range(1, 7))
def test_expansions_compose_to_identity(m):
    assert composition_holds(m, 3)
    assert composition_holds(m, None)


def test_expand_tw_low_degree():
    p = expand_TW(2, 1)
    ring = p.ring
    w, psi1, psi2 = ring.gens[0], ring.gens[1], ring.gens[2]
    assert p == psi2 + 2 * w * psi1 + 3 * w ** 2


def test_chern_expansion_n1():
    parts = chern_expansion(1)
    assert [str(p) for p in parts] == ["-3", "2*c1"]
    assert format_expansion(parts) == "Phi_0 = -3; Phi_1 = 2*c1"


@pytest.mark.parametrize("n", range(1, 6))
def test_chern_expansion_is_graded(n):
    parts = chern_expansion(n)
    assert len(parts) == n + 1
    for m, phi in enumerate(parts):
        assert phi.is_homogeneous(m)


def test_chern_expansion_rejects_n0():
    with pytest.raises(InvalidDimension):
        chern_expansion(0)
