import pytest

from src.algebra.invariants import Basis, InvariantPoly, to_chern_basis
from src.errors import ExpressionSyntaxError, GeneratorOutOfRange
from src.processors.expression_parser import parse_phi, tokenize
from src.processors.rules_config import GENERATOR_BASIS, TOKEN_PATTERNS


def test_tokenize_skips_spaces():
    kinds = [t.kind for t in tokenize("2*c1 ^2 - 1/3*T2")]
    assert kinds == ["NUMBER", "STAR", "GENERATOR", "CARET", "NUMBER", "MINUS", "NUMBER", "STAR", "GENERATOR"]


def test_chern_expression_prints_canonically():
    phi = parse_phi("c3*c2 - 1/3*c1^2*c3")
    assert phi.basis is Basis.CHERN
    assert str(phi) == "c2*c3 - 1/3*c1^2*c3"


def test_pure_power_sums_stay_in_power_basis():
    phi = parse_phi("T1**2 + T2")
    assert phi.basis is Basis.POWER
    assert str(phi) == "T2 + T1^2"


def test_mixed_expression_is_converted():
    phi = parse_phi("T2 + 2*c2")
    assert phi.basis is Basis.CHERN
    assert str(phi) == "c1^2"


def test_leading_sign_and_repeated_factors():
    phi = parse_phi("-c1*c1 + 2")
    c1 = InvariantPoly.generator(Basis.CHERN, 1, 8)
    assert phi == InvariantPoly.constant(2, maxgen=8) - c1 * c1
    assert to_chern_basis(parse_phi("T1")) == c1


@pytest.mark.parametrize("src, position", [("c2 + $", 5), ("c2 c3", 3), ("c2 +", 4)])
def test_syntax_errors_carry_position(src, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_phi(src)
    assert info.value.position == position
    assert "^" in str(info.value)


def test_division_by_zero():
    with pytest.raises(ExpressionSyntaxError, match="division by zero"):
        parse_phi("1/0*c2")


def test_generator_out_of_range():
    with pytest.raises(GeneratorOutOfRange):
        parse_phi("c9", maxgen=8)
    with pytest.raises(GeneratorOutOfRange):
        parse_phi("T0")


def test_empty_expression():
    with pytest.raises(ExpressionSyntaxError, match="empty expression"):
        parse_phi("   ")


def test_generator_letters_map_to_bases():
    assert GENERATOR_BASIS == {"c": Basis.CHERN, "T": Basis.POWER}
    assert parse_phi("c1*T1").basis is Basis.CHERN


def test_token_patterns_match_at_position():
    patterns = dict(TOKEN_PATTERNS)
    assert patterns["GENERATOR"].match("2*c12", 2).groups() == ("c", "12")
    assert patterns["NUMBER"].match("c1 3/4", 3).group() == "3/4"
