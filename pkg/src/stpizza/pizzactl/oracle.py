"""Floating-point corroboration of exact orders.

Sample arcs are evaluated at ``t = 2^-k``; the distance from each point to
the partner triangle (a union of segments) is computed in high precision and
the slope of ``log2(dist)`` against ``log2(t)`` is fitted by least squares.
"""

from __future__ import annotations

import functools
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from ..arcspace import Arc
from ..errors import OracleMismatch
from ..exacts import Exp, GPoly, format_exp, is_inf
from ..germmodel import ArcLoc, TriangleModel, distance_order, eval_arc
from ..pizza import build_minimal_pizza, order_profile
from .scene import GEOMETRIC, Scene

DEFAULT_KS = tuple(range(10, 41))
PRECISION_DIGITS = 170
# exact orders at or above this are not corroborated
MAX_CHECKED_ORDER = 10
# an infinite order must push distances below t^INF_FLOOR
INF_FLOOR = 12


@dataclass(frozen=True)
class OracleCheck:
    label: str
    exact: Exp
    fitted: float | None
    ok: bool


@dataclass(frozen=True)
class OracleResult:
    checks: tuple[OracleCheck, ...]
    tolerance: float

    @property
    def mismatches(self) -> list[OracleCheck]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            fit = "below floor" if c.fitted is None else f"{c.fitted:.4f}"
            out.append(f"{'ok ' if c.ok else 'BAD'} {c.label}: exact {format_exp(c.exact)}, fitted {fit}")
        return out


def _eval(p: GPoly, k: int):
    total = mpmath.mpf(0)
    for e, c in p.terms:
        total += mpmath.mpf(c.numerator) / c.denominator * mpmath.power(2, -k * mpmath.mpf(e.numerator) / e.denominator)
    return total


def _point(a: Arc, k: int) -> list:
    return [_eval(c, k) for c in a.coords.components()]


def point_segment_distance(x, p, q):
    d = [qi - pi for pi, qi in zip(p, q)]
    e = [xi - pi for pi, xi in zip(p, x)]
    dd = sum(v * v for v in d)
    w = sum(a * b for a, b in zip(e, d)) / dd
    w = min(max(w, mpmath.mpf(0)), mpmath.mpf(1))
    return mpmath.sqrt(sum((ei - w * di) ** 2 for ei, di in zip(e, d)))


@functools.lru_cache(maxsize=1024)
def _anchor_points(m: TriangleModel, k: int, dps: int) -> tuple:
    return tuple(_point(a, k) for a in m.anchors)


def numeric_distance(g: Arc, m: TriangleModel, k: int):
    x = _point(g, k)
    pts = _anchor_points(m, k, mpmath.mp.dps)
    return min(point_segment_distance(x, pts[j - 1], pts[j]) for j in range(1, len(pts)))


def fitted_order(g: Arc, m: TriangleModel, ks: Sequence[int] = DEFAULT_KS):
    """Least-squares slope, or ``None`` when every distance is below the floor."""
    with mpmath.workdps(PRECISION_DIGITS):
        dists = [(k, numeric_distance(g, m, k)) for k in ks]
        if all(d < mpmath.power(2, -k * INF_FLOOR) for k, d in dists):
            return None
        xs = [float(-k) for k, d in dists]
        ys = [float(mpmath.log(d, 2)) if d > 0 else float(-k * INF_FLOOR * 2) for k, d in dists]
    return statistics.linear_regression(xs, ys).slope


def check_arc(label: str, g: Arc, m: TriangleModel, ks, tolerance: float):
    exact = distance_order(g, m)
    if not is_inf(exact) and exact >= MAX_CHECKED_ORDER:
        return None
    fitted = fitted_order(g, m, ks)
    if is_inf(exact):
        return OracleCheck(label, exact, fitted, fitted is None)
    ok = fitted is not None and abs(fitted - float(exact)) <= tolerance
    return OracleCheck(label, exact, fitted, ok)


def sample_locs(T: TriangleModel, Tp: TriangleModel, samples: int, seed: int) -> list[tuple[str, ArcLoc]]:
    """Zone and slice representatives, approach arcs at every station, and
    ``samples`` seeded random constant rulings."""
    locs = []
    p = build_minimal_pizza(T, Tp)
    for k, z in enumerate(p.zones):
        locs.append((f"zone {k}", z.rep))
    for ell, s in enumerate(p.slices, 1):
        locs.append((f"slice {ell} generic", s.generic))
    for st in order_profile(T, Tp).stations:
        for delta in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            for side in (1, -1):
                w = GPoly.const(st.c) + GPoly.monomial(delta, side)
                if (st.c == 0 and side < 0) or (st.c == 1 and side > 0):
                    continue
                locs.append((f"station {st.patch}:{st.c} side {side:+d} delta {delta}", ArcLoc(st.patch, w)))
    rng = random.Random(seed)
    for n in range(samples):
        j = rng.randint(1, T.m)
        c = Fraction(rng.randint(1, 31), 32)
        locs.append((f"random {n} patch {j} w={c}", ArcLoc.const(j, c)))
    return locs


def oracle_check(scene: Scene, samples: int = 8, seed: int = 0, ks: Sequence[int] = DEFAULT_KS,
                 tolerance: float = 0.05, strict: bool = False) -> OracleResult:
    """Compare exact distance orders on sampled arcs of both triangles with fitted slopes."""
    if scene.kind != GEOMETRIC:
        raise ValueError("the oracle needs a geometric scene")
    checks = []
    for label, A, B in (("T", scene.T, scene.Tp), ("T'", scene.Tp, scene.T)):
        for name, loc in sample_locs(A, B, samples, seed):
            c = check_arc(f"{label} {name}", eval_arc(A, loc), B, ks, tolerance)
            if c is not None:
                checks.append(c)
    result = OracleResult(tuple(checks), tolerance)
    if strict and result.mismatches:
        raise OracleMismatch("; ".join(f"{c.label} exact {format_exp(c.exact)} fitted {c.fitted}"
                                       for c in result.mismatches))
    return result
