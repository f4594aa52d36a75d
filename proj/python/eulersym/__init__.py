"""Exact symbol systems, Legendre transforms and Euler-symmetric embeddings.

Rationals are returned as ``fractions.Fraction``; inputs may be ``int``,
``Fraction`` or ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _eulersym
from ._eulersym import CatalogError, HomogeneityError, ParseError, Source

__all__ = [
    "CatalogError",
    "HomogeneityError",
    "ParseError",
    "Source",
    "Result",
    "parse",
    "catalog",
    "analyze",
    "legendre",
    "smooth_check",
    "embed",
    "act",
    "limit",
    "curve_limit",
    "relations",
    "catalog_list",
    "catalog_build",
    "catalog_verify",
    "catalog_classify",
    "point_to_json",
    "point_from_report",
    "fractions",
]

RationalLike = Union[int, str, Fraction]


class Result(dict):
    """A report dictionary with a ``passed`` attribute (False when a check failed)."""

    passed: bool = True


def _q(x: RationalLike) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def _qs(xs: Iterable[RationalLike]) -> list[str]:
    return [_q(x) for x in xs]


def _load(raw: str) -> Result:
    data = json.loads(raw)
    out = Result(data["report"])
    out.passed = bool(data["passed"])
    return out


def _source(poly: Union[str, Source]) -> Source:
    return poly if isinstance(poly, Source) else Source.from_expression(poly)


def fractions(values: Sequence[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def point_from_report(point: dict) -> dict:
    """Converts a serialized point to Fractions: {"t", "w", "dual"}."""
    return {
        "t": Fraction(point["t"]),
        "w": fractions(point["w"]),
        "dual": [fractions(b) for b in point["dual"]],
    }


def point_to_json(point: dict) -> str:
    return json.dumps(
        {"t": _q(point["t"]), "w": _qs(point["w"]), "dual": [_qs(b) for b in point.get("dual", [])]}
    )


def parse(text: str) -> Source:
    return Source.from_expression(text)


def catalog(names: str) -> Source:
    return Source.from_catalog(names)


def analyze(poly, seed: int = 0) -> Result:
    return _load(_eulersym.analyze(_source(poly), seed))


def legendre(poly, seed: int = 0, certify: bool = False, points: int = 64) -> Result:
    return _load(_eulersym.legendre(_source(poly), seed, certify, points))


def smooth_check(poly, seed: int = 0) -> Result:
    return _load(_eulersym.smooth_check(_source(poly), seed))


def embed(poly, t: RationalLike, w: Iterable[RationalLike]) -> Result:
    return _load(_eulersym.embed(_source(poly), _q(t), _qs(w)))


def act(poly, v: Iterable[RationalLike], point: dict) -> Result:
    return _load(_eulersym.act(_source(poly), _qs(v), point_to_json(point)))


def limit(poly, point: dict, direction: str) -> Result:
    return _load(_eulersym.limit(_source(poly), point_to_json(point), direction))


def curve_limit(poly, point: dict, v: Iterable[RationalLike]) -> Result:
    return _load(_eulersym.curve_limit(_source(poly), point_to_json(point), _qs(v)))


def relations(poly, point: dict) -> Result:
    return _load(_eulersym.relations(_source(poly), point_to_json(point)))


def catalog_list() -> Result:
    return _load(_eulersym.catalog_list())


def catalog_build(name: str) -> Result:
    return _load(_eulersym.catalog_build(name))


def catalog_verify(name: str, seed: int = 0) -> Result:
    return _load(_eulersym.catalog_verify(name, seed))


def catalog_classify(names: str, seed: int = 0) -> Result:
    return _load(_eulersym.catalog_classify(names, seed))
