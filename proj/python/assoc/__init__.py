"""Exact Loday associahedra, their cellular diagonal and operad structure.

Coordinates are returned as :class:`fractions.Fraction`. Inputs may be
fractions, integers or strings such as ``"3/4"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _core

__all__ = [
    "Cell",
    "Transition",
    "aw_diagonal",
    "binary_trees",
    "compose",
    "cube_diagonal",
    "dg_formula",
    "graft",
    "loday_point",
    "magical_pairs",
    "normal_cone_pairs",
    "off",
    "planar_trees",
    "pointwise_diagonal",
    "realization",
    "sample_pairs",
    "subdivision_volumes",
    "tamari_leq",
    "transition_map",
    "tree_dimension",
    "verify",
]

binary_trees = _core.binary_trees
planar_trees = _core.planar_trees
tamari_leq = _core.tamari_leq
graft = _core.graft
tree_dimension = _core.tree_dimension
dg_formula = _core.dg_formula
off = _core.off
verify = _core.verify


class Cell(NamedTuple):
    F: str
    G: str
    dim_f: int
    dim_g: int


class Transition(NamedTuple):
    point: tuple[Fraction, ...]
    error_bound: Fraction
    exact: bool


def _out(values: Iterable[str]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def _in(values: Sequence[Fraction | int | str]) -> list[str]:
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floats are not accepted; use Fraction or a 'p/q' string")
        q = Fraction(v)
        out.append(f"{q.numerator}/{q.denominator}")
    return out


def _cells(raw) -> list[Cell]:
    return [Cell(*c) for c in raw]


def _rationals(obj):
    """Recursively turns the string coordinates of the JSON schema into fractions."""
    if isinstance(obj, dict):
        return {k: (v if k in ("tree", "weight") else _rationals(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_rationals(v) for v in obj]
    if isinstance(obj, str):
        return Fraction(obj)
    return obj


def loday_point(tree: str, weight: Sequence[int]) -> tuple[Fraction, ...]:
    """M(t, w) for a binary tree given by its encoding, e.g. ``"((||)|)"``."""
    return _out(_core.loday_point(tree, list(weight)))


def realization(weight: Sequence[int]) -> dict:
    """K_w as ``{weight, vertices: [{tree, coords}], facets: [{tree, normal, rhs}], orientation}``.

    Trees are nested lists with ``[]`` for a leaf.
    """
    return _rationals(json.loads(_core.realization_json(list(weight))))


def magical_pairs(arity: int) -> list[Cell]:
    return _cells(_core.magical_pairs(arity))


def normal_cone_pairs(weight: Sequence[int]) -> list[Cell]:
    return _cells(_core.normal_cone_pairs(list(weight)))


def sample_pairs(weight: Sequence[int], trials: int = 1000, seed: int = 1) -> list[Cell]:
    return _cells(_core.sample_pairs(list(weight), trials, seed))


def pointwise_diagonal(weight: Sequence[int], z: Sequence[Fraction | int | str]):
    """Returns ``(lo, hi, lo_face, hi_face)`` with ``(lo + hi) / 2 == z``."""
    lo, hi, f, g = _core.pointwise_diagonal(list(weight), _in(z))
    return _out(lo), _out(hi), f, g


def subdivision_volumes(weight: Sequence[int]) -> tuple[list[Fraction], Fraction]:
    volumes, total = _core.subdivision_volumes(list(weight))
    return list(_out(volumes)), Fraction(total)


def transition_map(source: Sequence[int], target: Sequence[int], z, depth: int = 8) -> Transition:
    point, bound, exact = _core.transition_map(list(source), list(target), _in(z), depth)
    return Transition(_out(point), Fraction(bound), exact)


def compose(m: int, i: int, n: int, x, y, depth: int = 8) -> Transition:
    point, bound, exact = _core.compose(m, i, n, _in(x), _in(y), depth)
    return Transition(_out(point), Fraction(bound), exact)


def aw_diagonal(n: int, z):
    lo, hi = _core.aw_diagonal(n, _in(z))
    return _out(lo), _out(hi)


def cube_diagonal(n: int, z):
    lo, hi = _core.cube_diagonal(n, _in(z))
    return _out(lo), _out(hi)
