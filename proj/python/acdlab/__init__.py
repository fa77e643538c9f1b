"""Exact character tables and average character degree statistics."""

from fractions import Fraction

from . import _core
from ._core import (
    ConstructionError,
    DomainError,
    InputError,
    ParseError,
    SizeLimitError,
    canonical_spec,
    default_catalog,
    degrees,
    group_order,
    is_p_nilpotent,
    stats,
    table_json,
)

__all__ = [
    "ConstructionError",
    "DomainError",
    "InputError",
    "ParseError",
    "SizeLimitError",
    "abelian3_formula",
    "acd",
    "audit",
    "bound_f",
    "canonical_spec",
    "default_catalog",
    "degrees",
    "group_order",
    "is_p_nilpotent",
    "stats",
    "table_json",
]


def _fraction(text: str) -> Fraction:
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def acd(spec: str, field: str = "C", p: int | None = None) -> Fraction:
    """Average degree of the irreducible characters of `spec` with values in `field`
    and, when p is given, degree prime to p."""
    return _fraction(_core.acd(spec, field, p))


def bound_f(p: int, x: int = 1) -> Fraction:
    return _fraction(_core.bound_f(p, x))


def abelian3_formula(p: int, a: int, d: int, index: int) -> Fraction:
    return _fraction(_core.abelian3_formula(p, a, d, index))


def audit(theorem: str, catalog: list[str] | None = None, jobs: int = 1) -> list[dict]:
    """Audit rows as dicts; acd and bound stay exact 'n/d' strings."""
    return _core.audit(theorem, catalog, jobs)
