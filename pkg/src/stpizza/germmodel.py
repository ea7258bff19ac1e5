"""Hölder triangles modelled as chains of ruled patches, and the exact
distance kernel from an arc to such a triangle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arcspace import Arc, affine_combination, tord
from .errors import (
    DegeneratePatch,
    DimensionMismatch,
    NotNormallyEmbedded,
    PizzaError,
    RulingOutOfRange,
)
from .exacts import INF, Exp, GPoly, half, is_inf, series_divide

ONE = GPoly.const(1)


@dataclass(frozen=True)
class RuledPatch:
    left_anchor_index: int
    right_anchor_index: int
    exponent: Exp


@dataclass(frozen=True)
class TriangleModel:
    anchors: tuple[Arc, ...]
    patches: tuple[RuledPatch, ...]
    beta: Exp

    @property
    def ambient_dim(self) -> int:
        return self.anchors[0].dim

    @property
    def m(self) -> int:
        return len(self.patches)

    def to_json(self) -> list:
        return [a.to_json() for a in self.anchors]


def ruling_is_valid(w: GPoly) -> bool:
    """True iff ``0 <= w(t) <= 1`` for all small ``t > 0``."""
    if w.dim is not None or (w.terms and w.terms[0][0] < 0):
        return False
    return w.sign_at_zero() >= 0 and (ONE - w).sign_at_zero() >= 0


@dataclass(frozen=True)
class ArcLoc:
    """An arc of a triangle: patch ``patch`` (1-based) with ruling ``w``.

    The arc is ``(1 - w)·a_{patch-1} + w·a_patch``.
    """

    patch: int
    ruling: GPoly

    def __post_init__(self):
        if not ruling_is_valid(self.ruling):
            raise RulingOutOfRange(f"ruling {self.ruling} leaves [0, 1]")

    @classmethod
    def const(cls, patch: int, c) -> "ArcLoc":
        return cls(patch, GPoly.const(c))

    def constant_value(self):
        """The ruling as a rational if it is constant, else ``None``."""
        if self.ruling.is_zero():
            return Fraction(0)
        if len(self.ruling.terms) == 1 and self.ruling.terms[0][0] == 0:
            return self.ruling.terms[0][1]
        return None

    def __str__(self):
        return f"patch {self.patch}, w = {self.ruling}"


def validate_triangle(anchors: Sequence[Arc]) -> TriangleModel:
    anchors = tuple(anchors)
    if len(anchors) < 2:
        raise PizzaError("a triangle needs at least two anchor arcs")
    dim = anchors[0].dim
    for a in anchors:
        if a.dim != dim:
            raise DimensionMismatch(f"anchors in dimensions {dim} and {a.dim}")
    patches = []
    for j in range(1, len(anchors)):
        e = tord(anchors[j - 1], anchors[j])
        if is_inf(e):
            raise DegeneratePatch(f"anchors {j - 1} and {j} coincide")
        patches.append(RuledPatch(j - 1, j, e))
    for i in range(len(anchors)):
        for j in range(i + 2, len(anchors)):
            chain = min(p.exponent for p in patches[i:j])
            actual = tord(anchors[i], anchors[j])
            if actual != chain:
                raise NotNormallyEmbedded(
                    f"tord(a{i}, a{j}) = {actual} but the chain between them has exponent {chain}"
                )
    beta = min(p.exponent for p in patches)
    return TriangleModel(anchors, tuple(patches), beta)


def eval_arc(m: TriangleModel, loc: ArcLoc) -> Arc:
    if not 1 <= loc.patch <= m.m:
        raise RulingOutOfRange(f"patch index {loc.patch} not in 1..{m.m}")
    return affine_combination(m.anchors[loc.patch - 1], m.anchors[loc.patch], loc.ruling)


def anchor_loc(m: TriangleModel, i: int) -> ArcLoc:
    """Location of anchor ``i``; anchor 0 is the left end of patch 1."""
    return ArcLoc.const(1, 0) if i == 0 else ArcLoc.const(i, 1)


def _interior_ruling(ed: GPoly, dd: GPoly, precision: Exp) -> GPoly:
    extra = 0
    while True:
        prec = Fraction(1000) if is_inf(precision) else precision + extra
        w, exact = series_divide(ed, dd, prec, max_terms=64)
        if ruling_is_valid(w) or extra > 8:
            return w
        extra += 1


def _patch_distance(g: Arc, m: TriangleModel, j: int):
    """Order, nearest location and the squared distance as ``num/den``."""
    if g.dim != m.ambient_dim:
        raise DimensionMismatch(f"arc in dimension {g.dim}, triangle in {m.ambient_dim}")
    a, b = m.anchors[j - 1], m.anchors[j]
    e = g.coords - a.coords
    d = b.coords - a.coords
    ed = e.inner(d)
    dd = d.norm2()
    if ed.sign_at_zero() <= 0:
        sq = e.norm2()
        return half(sq.ord()), ArcLoc.const(j, 0), sq, ONE
    if (ed - dd).sign_at_zero() >= 0:
        sq = (e - d).norm2()
        return half(sq.ord()), ArcLoc.const(j, 1), sq, ONE
    gap = e.norm2() * dd - ed * ed
    order = half(gap.ord() - dd.ord()) if not gap.is_zero() else INF
    # an error ρ in the ruling moves the arc by ρ·|d|, of order ord(ρ) + β_j
    w = _interior_ruling(ed, dd, order - m.patches[j - 1].exponent)
    return order, ArcLoc(j, w), gap, dd


def patch_distance_order(g: Arc, m: TriangleModel, j: int) -> tuple[Exp, ArcLoc]:
    """Order of ``dist(g(t), segment)`` for patch ``j`` and the nearest location."""
    order, loc, _, _ = _patch_distance(g, m, j)
    return order, loc


def distance_order(g: Arc, m: TriangleModel) -> Exp:
    return max(patch_distance_order(g, m, j)[0] for j in range(1, m.m + 1))


def nearest_with_order(g: Arc, m: TriangleModel) -> tuple[Exp, ArcLoc]:
    """The nearest point of ``m`` for small ``t`` and the order of the distance.

    Patches are compared by their exact squared-distance functions, so a tie
    in order goes to the patch that is actually closer; only identical
    distance functions fall back to the lowest patch index.
    """
    best = None
    for j in range(1, m.m + 1):
        cand = _patch_distance(g, m, j)
        if best is None:
            best = cand
            continue
        _, _, num, den = cand
        _, _, bnum, bden = best
        if (num * bden - bnum * den).sign_at_zero() < 0:
            best = cand
    return best[0], best[1]


def nearest_arc(g: Arc, m: TriangleModel) -> ArcLoc:
    return nearest_with_order(g, m)[1]
