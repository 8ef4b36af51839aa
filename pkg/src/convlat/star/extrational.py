"""Nonnegative rationals extended by a top element INF (written "inf")."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

from ..geom.rational import RationalParseError, format_rational, parse_rational


@total_ordering
class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("convlat-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "inf"


INF = _Infinity()
ExtRational = Union[Fraction, _Infinity]


def parse_ext(text) -> ExtRational:
    if text is INF:
        return INF
    if isinstance(text, str) and text.strip().lower() in ("inf", "∞", "infinity"):
        return INF
    return parse_rational(text)


def format_ext(a: ExtRational) -> str:
    return "inf" if a is INF else format_rational(a)


def ext_mul(c: Fraction, a: ExtRational) -> ExtRational:
    """c * a for c > 0."""
    return INF if a is INF else c * a


__all__ = ["INF", "ExtRational", "parse_ext", "format_ext", "ext_mul", "RationalParseError"]
