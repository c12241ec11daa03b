"""Bernoulli/Euler generators and the SequenceSpec descriptor."""

from .grammar import format_spec, parse_spec
from .numbers import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_shifted_half,
    euler_at_one,
    euler_number,
    euler_poly,
    euler_shifted_half,
)
from .spec import Family, Scale, SequenceSpec, term

__all__ = [
    "Family",
    "Scale",
    "SequenceSpec",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_shifted_half",
    "euler_at_one",
    "euler_number",
    "euler_poly",
    "euler_shifted_half",
    "format_spec",
    "parse_spec",
    "term",
]
