"""
Text syntax for sequence specs.

    spec     := [head] [scale] FAMILY "[" affine "]" [divisor]
    head     := "shift0:" | "shiftA=" rational ":"
    scale    := "(" affine ")*"            -- must read i+1
              | "(2^(" affine ")-1)*"      -- must read i
    divisor  := "/" term "!" | "/(" affine ")!"   -- must read i
    FAMILY   := B | Bx | E | Ex | E1 | Ehalf | Bhalf
    affine   := term (("+" | "-") term)*,  term := [digits] "k" | digits

The bracket, scale and divisor are written in the index k of the sequence
being described. For a shifted spec that is the index of b, so
"shift0:B[k-1]" means b_0 = 0, b_k = B_{k-1}.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Tuple

from ..errors import MalformedSpecError, SpecParseError
from ..exact.poly import Poly
from ..exact.rational import format_rational
from .spec import Family, Scale, SequenceSpec

# Longest tokens first so that "E1" is not read as "E".
_FAMILY_TOKENS = sorted((f.value for f in Family), key=len, reverse=True)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")
_DIGITS_RE = re.compile(r"\d+")

Affine = Tuple[int, int]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None) -> SpecParseError:
        return SpecParseError(message, self.text, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            raise self.error(f"Expected '{literal}'")

    def rational(self) -> Fraction:
        self.skip_ws()
        match = _RATIONAL_RE.match(self.text, self.pos)
        if not match:
            raise self.error("Expected a rational number")
        value = match.group(0)
        numerator, _, denominator = value.partition("/")
        if denominator and int(denominator) == 0:
            raise self.error("Zero denominator")
        self.pos = match.end()
        return Fraction(int(numerator), int(denominator or 1))

    def term(self) -> Affine:
        """One `[digits]k` or `digits` term, as (k-coefficient, constant)."""
        self.skip_ws()
        match = _DIGITS_RE.match(self.text, self.pos)
        number = None
        if match:
            number = int(match.group(0))
            self.pos = match.end()
        if self.pos < len(self.text) and self.text[self.pos] == "k":
            self.pos += 1
            return (1 if number is None else number, 0)
        if number is None:
            raise self.error("Expected an index term such as '2k' or '3'")
        return (0, number)

    def affine(self) -> Affine:
        start = self.pos
        sign = -1 if self.accept("-") else 1
        m, c = self.term()
        m, c = sign * m, sign * c
        while True:
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
            dm, dc = self.term()
            m, c = m + sign * dm, c + sign * dc
        if m < 1:
            raise self.error("Index must grow with k (coefficient of k >= 1)", start)
        return m, c

    def family(self) -> Family:
        self.skip_ws()
        for token in _FAMILY_TOKENS:
            if self.text.startswith(token, self.pos):
                self.pos += len(token)
                return Family.from_token(token)
        raise self.error(f"Expected a family ({', '.join(f.value for f in Family)})")

    def parse(self) -> SequenceSpec:
        head = None
        if self.accept("shift0:"):
            head = Fraction(0)
        elif self.accept("shiftA="):
            head = self.rational()
            self.expect(":")

        scale = Scale.NONE
        scale_affine = None
        scale_pos = None
        if self.peek("(2^("):
            scale_pos = self.pos
            self.pos += len("(2^(")
            scale_affine = self.affine()
            self.expect(")-1)*")
            scale = Scale.TIMES_TWO_POWER_MINUS_ONE
        elif self.peek("("):
            scale_pos = self.pos
            self.pos += 1
            scale_affine = self.affine()
            self.expect(")*")
            scale = Scale.TIMES_INDEX_PLUS_ONE

        family = self.family()
        self.expect("[")
        index_pos = self.pos
        m, written = self.affine()
        self.expect("]")

        if self.peek("/"):
            if scale != Scale.NONE:
                raise self.error("A spec takes at most one scaling rule")
            divisor_pos = self.pos
            self.pos += 1
            if self.accept("("):
                divisor = self.affine()
                self.expect(")")
            else:
                divisor = self.term()
            self.expect("!")
            if divisor != (m, written):
                raise self.error("Factorial divisor must repeat the bracketed index", divisor_pos)
            scale = Scale.DIV_FACTORIAL

        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("Unexpected trailing input")

        if scale == Scale.TIMES_INDEX_PLUS_ONE and scale_affine != (m, written + 1):
            raise self.error("Multiplier must be the bracketed index plus one", scale_pos)
        if scale == Scale.TIMES_TWO_POWER_MINUS_ONE and scale_affine != (m, written):
            raise self.error("Power of two must repeat the bracketed index", scale_pos)

        offset = written + m if head is not None else written
        if offset < 0:
            raise self.error("Index map reaches negative indices", index_pos)
        try:
            return SequenceSpec(family, m, offset, scale, head)
        except MalformedSpecError as exc:
            raise self.error(str(exc), index_pos) from exc


def parse_spec(text: str) -> SequenceSpec:
    """
    Parse a spec string such as "(2k+1)*E[2k]" or "shift0:E1[2k-1]/(2k-1)!".

    Raises:
        SpecParseError: With the position of the offending character.
    """
    return _Parser(text).parse()


def _format_affine(m: int, c: int) -> str:
    head = "k" if m == 1 else f"{m}k"
    if c == 0:
        return head
    return f"{head}{c:+d}"


def format_spec(spec: SequenceSpec) -> str:
    """Inverse of `parse_spec` (up to whitespace)."""
    m = spec.multiplier
    written = spec.offset - m if spec.is_shifted else spec.offset
    index = _format_affine(m, written)

    head = ""
    if spec.is_shifted:
        alpha = spec.head_override
        if isinstance(alpha, Poly):
            if not alpha.is_constant():
                raise ValueError("Only rational head overrides have a text form")
            alpha = alpha.constant_value()
        head = "shift0:" if alpha == 0 else f"shiftA={format_rational(alpha)}:"

    prefix = suffix = ""
    if spec.scale == Scale.TIMES_INDEX_PLUS_ONE:
        prefix = f"({_format_affine(m, written + 1)})*"
    elif spec.scale == Scale.TIMES_TWO_POWER_MINUS_ONE:
        prefix = f"(2^({index})-1)*"
    elif spec.scale == Scale.DIV_FACTORIAL:
        suffix = f"/{index}!" if written == 0 else f"/({index})!"

    return f"{head}{prefix}{spec.family.value}[{index}]{suffix}"
