"""Parser for polynomial expressions in c_k / T_k such as "c2 - 1/3*c1^2"."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from sympy.polys.domains import QQ

from src.algebra.invariants import Basis, InvariantPoly, basis_ring, to_chern_basis, to_power_basis
from src.algebra.scalars import rat
from src.errors import ExpressionSyntaxError, GeneratorOutOfRange
from .rules_config import GENERATOR_BASIS, TOKEN_PATTERNS

logger = logging.getLogger(__name__)


@dataclass
class Token:
    kind: str
    text: str
    position: int


def tokenize(src: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(src):
        for kind, pattern in TOKEN_PATTERNS:
            m = pattern.match(src, pos)
            if m:
                if kind != "SPACE":
                    tokens.append(Token(kind, m.group(0), pos))
                pos = m.end()
                break
        else:
            raise ExpressionSyntaxError(f"unexpected character {src[pos]!r}", src, pos)
    return tokens


class _Parser:
    """expr := ['+'|'-'] term (('+'|'-') term)* ; term := factor ('*' factor)* ;
    factor := NUMBER | GENERATOR ['^' NUMBER]."""

    def __init__(self, src: str, maxgen: int):
        self.src = src
        self.maxgen = maxgen
        self.tokens = tokenize(src)
        self.i = 0
        self.bases_seen: Set[Basis] = set()

    def _peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _fail(self, message: str) -> ExpressionSyntaxError:
        tok = self._peek()
        pos = tok.position if tok else len(self.src)
        return ExpressionSyntaxError(message, self.src, pos)

    def parse(self) -> List[Tuple[object, Dict[Tuple[str, int], int]]]:
        if not self.tokens:
            raise self._fail("empty expression")
        terms = []
        sign = 1
        tok = self._peek()
        if tok and tok.kind in ("PLUS", "MINUS"):
            sign = -1 if tok.kind == "MINUS" else 1
            self.i += 1
        terms.append(self._term(sign))
        while self._peek() is not None:
            tok = self._peek()
            if tok.kind not in ("PLUS", "MINUS"):
                raise self._fail(f"expected '+' or '-', found {tok.text!r}")
            self.i += 1
            terms.append(self._term(-1 if tok.kind == "MINUS" else 1))
        return terms

    def _term(self, sign: int):
        coeff = QQ(sign)
        powers: Dict[Tuple[str, int], int] = {}
        coeff_box = [coeff]
        self._factor(powers, coeff_box)
        while self._peek() is not None and self._peek().kind == "STAR":
            self.i += 1
            self._factor(powers, coeff_box)
        return coeff_box[0], powers

    def _factor(self, powers: Dict[Tuple[str, int], int], coeff_box: list) -> None:
        tok = self._peek()
        if tok is None:
            raise self._fail("unexpected end of expression")
        if tok.kind == "NUMBER":
            self.i += 1
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                raise ExpressionSyntaxError("division by zero", self.src, tok.position)
            coeff_box[0] = coeff_box[0] * rat(int(num), int(den or 1))
            return
        if tok.kind != "GENERATOR":
            raise self._fail(f"expected a number or generator, found {tok.text!r}")
        self.i += 1
        letter, k = tok.text[0], int(tok.text[1:])
        if k < 1 or k > self.maxgen:
            raise GeneratorOutOfRange(f"{tok.text}: generator index must be in 1..{self.maxgen}")
        self.bases_seen.add(GENERATOR_BASIS[letter])
        exp = 1
        nxt = self._peek()
        if nxt is not None and nxt.kind == "CARET":
            self.i += 1
            e_tok = self._peek()
            if e_tok is None or e_tok.kind != "NUMBER" or "/" in e_tok.text:
                raise self._fail("expected an integer exponent")
            self.i += 1
            exp = int(e_tok.text)
        key = (letter, k)
        powers[key] = powers.get(key, 0) + exp


def parse_phi(src: str, maxgen: int = 8) -> InvariantPoly:
    """Parse src into an InvariantPoly over QQ.

    Pure T_k input stays in the power basis. Chern or mixed input is returned
    in the Chern basis.
    """
    parser = _Parser(src, maxgen)
    terms = parser.parse()
    chern = basis_ring(Basis.CHERN, maxgen, QQ)
    power = basis_ring(Basis.POWER, maxgen, QQ)
    cpart, tpart = chern.zero, power.zero
    for coeff, powers in terms:
        c_exp = [0] * maxgen
        t_exp = [0] * maxgen
        for (letter, k), e in powers.items():
            (c_exp if letter == "c" else t_exp)[k - 1] += e
        if any(t_exp):
            tpart = tpart + power.from_dict({tuple(t_exp): coeff}) * chern_factor(c_exp, power)
        else:
            cpart = cpart + chern.from_dict({tuple(c_exp): coeff})
    if parser.bases_seen == {Basis.POWER}:
        return InvariantPoly(Basis.POWER, tpart)
    out = InvariantPoly(Basis.CHERN, cpart)
    if tpart:
        out = out + to_chern_basis(InvariantPoly(Basis.POWER, tpart))
    logger.debug("parsed %r -> %s", src, out)
    return out


def chern_factor(c_exp: List[int], power_ring) -> object:
    """Π c_k^e rewritten in the T basis, so mixed terms multiply in one ring."""
    if not any(c_exp):
        return power_ring.one
    chern = basis_ring(Basis.CHERN, len(c_exp), QQ)
    mono = InvariantPoly(Basis.CHERN, chern.from_dict({tuple(c_exp): QQ.one}))
    return to_power_basis(mono).poly
