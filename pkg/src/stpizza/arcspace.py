"""Arcs as graph-normalized germ curves and their tangency orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, ExponentBelowOne, NotNormalized
from .exacts import GPoly, Exp, half

_T = GPoly.t()


@dataclass(frozen=True)
class Arc:
    """A germ curve ``t ↦ (t, x_2(t), …, x_n(t))`` stored as a vector GPoly."""

    coords: GPoly

    @property
    def dim(self) -> int:
        return self.coords.dim

    def component(self, i: int) -> GPoly:
        return self.coords.component(i)

    def __sub__(self, other: "Arc") -> GPoly:
        return self.coords - other.coords

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords.components()) + ")"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords.components()]


def validate_arc(candidate: GPoly | Sequence[GPoly]) -> Arc:
    """Check graph normalization and return the canonical :class:`Arc`."""
    if not isinstance(candidate, GPoly):
        candidate = GPoly.from_components(list(candidate))
    if candidate.dim is None or candidate.dim < 1:
        raise DimensionMismatch("an arc needs a vector of at least one coordinate")
    if candidate.component(0) != _T:
        raise NotNormalized(f"first coordinate must be exactly t, got {candidate.component(0)}")
    for e, _ in candidate.terms:
        if e < 1:
            raise ExponentBelowOne(f"exponent {e} < 1 in {candidate}")
    return Arc(candidate)


def make_arc(*coords) -> Arc:
    """Build an arc from the coordinates after the first, each a GPoly or a mapping."""
    comps = [_T] + [c if isinstance(c, GPoly) else GPoly(c) for c in coords]
    return validate_arc(comps)


def tord(g1: Arc, g2: Arc) -> Exp:
    """Tangency order: half the order of the squared distance."""
    if g1.dim != g2.dim:
        raise DimensionMismatch(f"arcs in dimensions {g1.dim} and {g2.dim}")
    return half((g1.coords - g2.coords).norm2().ord())


def affine_combination(a: Arc, b: Arc, w: GPoly) -> Arc:
    """The arc ``(1 - w)·a + w·b`` for a scalar ruling ``w``."""
    return Arc(a.coords + w * (b.coords - a.coords))


def lift(a: Arc, offset: Sequence[GPoly | dict]) -> Arc:
    """Add an offset to the coordinates after the first."""
    comps = [_T] + [c if isinstance(c, GPoly) else GPoly(c) for c in offset]
    if len(comps) != a.dim:
        raise DimensionMismatch("offset length does not match arc dimension")
    comps[0] = GPoly.zero()
    return Arc(a.coords + GPoly.from_components(comps))


__all__ = ["Arc", "validate_arc", "make_arc", "tord", "affine_combination", "lift"]
