"""Order profile of ``f = dist(·, T′)`` along the link of ``T`` and the
minimal pizza built from it.

Along patch ``j`` of ``T`` every arc is ``(1 - w)·a_{j-1} + w·a_j``.  For a
constant ruling ``w = c`` the squared-distance quantities are quadratics in
``c`` with GPoly coefficients, so the order only jumps at finitely many
*stations*: the anchors and the rational roots of leading-coefficient
polynomials.  Near a station ``c0`` the arcs ``w = c0 ± t^δ`` sweep the link
and the order is a piecewise affine function ``F(δ)`` whose breakpoints are
crossings of finitely many lines; each affine piece is a pizza slice.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arcspace import tord
from .errors import DeepBreakpoint, IrrationalBreakpoint, PizzaError
from .exacts import INF, AffineFn, Exp, ExpInterval, GPoly, format_exp, is_inf
from .germmodel import ArcLoc, TriangleModel, distance_order, eval_arc, patch_distance_order, ruling_is_valid

PREV, NEXT, NONE = "prev", "next", "none"
MAXIMUM, MINIMUM, NEITHER = "maximum", "minimum", "neither"


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class PizzaSlice:
    beta: Exp
    q_prev: Exp
    q_next: Exp
    mu: AffineFn
    support: str
    generic: Optional[ArcLoc] = field(default=None, compare=False)

    @property
    def Q(self) -> ExpInterval:
        return ExpInterval.spanning(self.q_prev, self.q_next)

    @property
    def is_point(self) -> bool:
        return self.q_prev == self.q_next

    def width_at(self, q: Exp) -> Exp:
        return self.beta if self.is_point else self.mu(q)


@dataclass(frozen=True)
class ZoneRecord:
    q: Exp
    nu: Exp
    kind: str
    rep: Optional[ArcLoc] = field(default=None, compare=False)


@dataclass(frozen=True)
class PizzaData:
    slices: tuple[PizzaSlice, ...]
    zones: tuple[ZoneRecord, ...]
    orientation: str = "forward"

    @property
    def q_sequence(self) -> list[Exp]:
        return [z.q for z in self.zones]

    def maximum_zones(self) -> list[int]:
        return [i for i, z in enumerate(self.zones) if z.kind == MAXIMUM]


@dataclass(frozen=True)
class Station:
    patch: int
    c: Fraction
    order: Exp

    @property
    def loc(self) -> ArcLoc:
        return ArcLoc.const(self.patch, self.c)


@dataclass(frozen=True)
class Piece:
    """Arcs ``w = c0 + side·t^δ`` on patch ``patch`` for δ between ``lo`` and ``hi``
    with order ``A·δ + B``."""

    patch: int
    c0: Fraction
    side: int
    lo: Fraction
    hi: Exp
    A: Fraction
    B: Exp
    patch_beta: Exp
    link_start: ArcLoc
    link_end: ArcLoc

    def F(self, delta: Exp) -> Exp:
        if is_inf(self.B):
            return INF
        if is_inf(delta):
            return INF if self.A > 0 else self.B
        return self.A * delta + self.B

    @property
    def q_start(self) -> Exp:
        return self.F(self.hi) if self.side > 0 else self.F(self.lo)

    @property
    def q_end(self) -> Exp:
        return self.F(self.lo) if self.side > 0 else self.F(self.hi)

    @property
    def beta(self) -> Exp:
        return self.patch_beta + self.lo

    def as_slice(self) -> "_Proto":
        qs, qe = self.q_start, self.q_end
        if self.A == 0 or is_inf(self.B):
            return _Proto(self.beta, qs, qe, None, self.link_start, self.link_end)
        a = 1 / self.A
        law = (a, self.patch_beta - self.B * a)
        return _Proto(self.beta, qs, qe, law, self.link_start, self.link_end)


@dataclass
class _Proto:
    """A slice under construction; ``law`` is ``(a, b)`` or ``None`` for a point slice."""

    beta: Exp
    q_prev: Exp
    q_next: Exp
    law: Optional[tuple]
    start: ArcLoc
    end: ArcLoc

    @property
    def is_point(self) -> bool:
        return self.law is None

    def mu(self, q: Exp) -> Exp:
        if self.law is None:
            return self.beta
        a, b = self.law
        return INF if is_inf(q) else a * q + b

    width_at = mu


@dataclass(frozen=True)
class OrderProfile:
    stations: tuple[Station, ...]
    pieces: tuple[Piece, ...]

    @property
    def breakpoints(self):
        return [((s.patch, s.c), s.order) for s in self.stations]


# ---------------------------------------------------------------------------
# family quantities


def _quantities(T: TriangleModel, j: int, Tp: TriangleModel) -> list[tuple[GPoly, GPoly, GPoly]]:
    """Every quantity deciding patch distances, as ``P0 + x·P1 + x²·P2`` in the ruling ``x``."""
    A = T.anchors[j - 1].coords
    dT = T.anchors[j].coords - A
    out = []
    for k in range(1, Tp.m + 1):
        P = Tp.anchors[k - 1].coords
        D = Tp.anchors[k].coords - P
        DD = D.norm2()
        A0 = A - P
        A1 = A0 - D
        a0d, tdd = A0.inner(D), dT.inner(D)
        z = GPoly.zero()
        out.append((a0d, tdd, z))
        out.append((a0d - DD, tdd, z))
        out.append((A0.norm2(), A0.inner(dT) * 2, dT.norm2()))
        out.append((A1.norm2(), A1.inner(dT) * 2, dT.norm2()))
        out.append((
            A0.norm2() * DD - a0d * a0d,
            (A0.inner(dT) * DD - a0d * tdd) * 2,
            dT.norm2() * DD - tdd * tdd,
        ))
    return out


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _roots_in_unit_interval(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Roots in (0, 1) of ``c0 + c1 x + c2 x²``; irrational ones raise."""
    c0, c1, c2 = coeffs
    if c2 == 0:
        if c1 == 0:
            return []
        r = -c0 / c1
        return [r] if 0 < r < 1 else []
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    s = _rational_sqrt(disc)
    if s is None:
        # only a problem if a real root actually lies inside (0, 1)
        lo, hi = Fraction(0), Fraction(1)
        f = lambda x: c0 + c1 * x + c2 * x * x
        vertex = -c1 / (2 * c2)
        pts = sorted({lo, hi, min(max(vertex, lo), hi)})
        for u, v in zip(pts, pts[1:]):
            if f(u) * f(v) < 0 or (f(v) == 0 and v == vertex and 0 < v < 1):
                raise IrrationalBreakpoint(
                    f"cancellation locus of {c2}x² + {c1}x + {c0} is irrational"
                )
        return []
    return sorted({r for r in ((-c1 - s) / (2 * c2), (-c1 + s) / (2 * c2)) if 0 < r < 1})


def critical_rulings(T: TriangleModel, j: int, Tp: TriangleModel) -> list[Fraction]:
    """Constant rulings in (0, 1) of patch ``j`` where some leading term cancels."""
    found = set()
    for quad in _quantities(T, j, Tp):
        e = min(p.ord() for p in quad)
        if is_inf(e):
            continue
        found.update(_roots_in_unit_interval([Fraction(p.coeff(e)) for p in quad]))
    return sorted(found)


def stations_of_patch(T: TriangleModel, j: int, Tp: TriangleModel) -> list[Fraction]:
    return [Fraction(0)] + critical_rulings(T, j, Tp) + [Fraction(1)]


# ---------------------------------------------------------------------------
# approach profiles


def _approach_ruling(c0: Fraction, side: int, delta: Fraction) -> GPoly:
    return GPoly.const(c0) + GPoly.monomial(delta, side)


def _expanded(T, j, Tp, c0, side):
    """Each quantity as ``R0 + R1·u + R2·u²`` in the offset ``u = side·(w - c0)``."""
    for P0, P1, P2 in _quantities(T, j, Tp):
        yield [P0 + P1 * c0 + P2 * (c0 * c0), (P1 + P2 * (2 * c0)) * side, P2]


def _crossings(T, j, Tp, c0, side) -> list[Fraction]:
    xs = set()
    for R in _expanded(T, j, Tp, c0, side):
        lines = [(R[k].ord(), k) for k in range(3) if not R[k].is_zero()]
        for (o1, k1) in lines:
            for (o2, k2) in lines:
                if k1 < k2:
                    d = (o1 - o2) / (k2 - k1)
                    if d > 0:
                        xs.add(d)
    return sorted(xs)


def _has_positive_root(a0: Fraction, a1: Fraction, a2: Fraction) -> bool:
    if a2 == 0:
        return a1 != 0 and -a0 / a1 > 0
    if a0 * a2 < 0:
        return True
    if a0 == 0:
        return -a1 / a2 > 0
    return a1 * a1 - 4 * a0 * a2 >= 0 and -a1 / a2 > 0


def _norm_roots(T, j, Tp, c0, side, delta) -> set[Fraction]:
    """Positive ``c`` where a squared norm or Gram gap cancels along ``w = c0 + side·c·t^δ``.

    These quantities are nonnegative for every real ruling, so their leading
    coefficient in ``c`` only has double, hence rational, roots.  The sign
    tests are skipped: the clamped and interior distances agree where they
    switch, so their roots cannot move the order.
    """
    roots = set()
    for idx, R in enumerate(_expanded(T, j, Tp, c0, side)):
        if idx % 5 < 2:
            continue
        terms = {k: R[k].ord() + k * delta for k in range(3) if not R[k].is_zero()}
        if len(terms) < 2:
            continue
        e = min(terms.values())
        a0, a1, a2 = (Fraction(R[k].coeff(e - k * delta)) if terms.get(k) == e else Fraction(0) for k in range(3))
        if a2 == 0:
            if a1 != 0 and -a0 / a1 > 0:
                roots.add(-a0 / a1)
            continue
        disc = a1 * a1 - 4 * a0 * a2
        sq = _rational_sqrt(disc)
        if sq is None:
            if disc > 0 and (a0 * a2 < 0 or -a1 / a2 > 0):
                raise IrrationalBreakpoint(f"patch {j}: irrational cancellation along w = {c0} ± c·t^{delta}")
            continue
        roots.update(r for r in ((-a1 - sq) / (2 * a2), (-a1 + sq) / (2 * a2)) if r > 0)
    return roots


def _check_shallow(T, j, Tp, c0, side, deltas, pieces) -> None:
    """Raise if an arc ``w = c0 + side·c·t^δ`` at a crossing exponent δ beats the generic order."""
    for delta in deltas:
        A, B = next((A, B) for lo, hi, A, B in pieces if lo < delta <= hi)
        generic = INF if is_inf(B) else A * delta + B
        for c in sorted(_norm_roots(T, j, Tp, c0, side, delta)):
            w = GPoly.const(c0) + GPoly.monomial(delta, side * c)
            if not ruling_is_valid(w):
                continue
            order = distance_order(eval_arc(T, ArcLoc(j, w)), Tp)
            if order > generic:
                raise DeepBreakpoint(
                    f"patch {j}: order {format_exp(order)} > {format_exp(generic)} on the arc w = {w}; "
                    "breakpoints off constant rulings are not supported"
                )


def _upper_envelope(lines, lo: Fraction, hi: Exp):
    """Pieces ``(lo, hi, A, B)`` of ``max`` of affine lines on ``(lo, hi)``."""
    if any(is_inf(b) for _, b in lines):
        return [(lo, hi, Fraction(0), INF)]
    cuts = {lo}
    for i, (a1, b1) in enumerate(lines):
        for a2, b2 in lines[i + 1:]:
            if a1 != a2:
                x = (b2 - b1) / (a1 - a2)
                if lo < x < hi:
                    cuts.add(x)
    cuts = sorted(cuts) + [hi]
    out = []
    for u, v in zip(cuts, cuts[1:]):
        mid = u + 1 if is_inf(v) else (u + v) / 2
        a, b = max(lines, key=lambda ln: (ln[0] * mid + ln[1], ln[0]))
        if out and out[-1][2] == a and out[-1][3] == b:
            out[-1] = (out[-1][0], v, a, b)
        else:
            out.append((u, v, a, b))
    return out


def approach_profile(T: TriangleModel, Tp: TriangleModel, j: int, c0: Fraction, side: int):
    """Exact piecewise affine order ``F(δ)`` of the arcs ``w = c0 + side·t^δ``, δ > 0.

    Returns a list of ``(lo, hi, A, B)`` with ``F = A·δ + B`` on ``(lo, hi)``,
    ordered by increasing δ; the last piece has ``hi = ∞``.
    """
    xs = _crossings(T, j, Tp, c0, side)
    bounds = [Fraction(0)] + xs + [INF]
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        if is_inf(hi):
            d1, d2 = lo + 1, lo + 2
        else:
            d1, d2 = lo + (hi - lo) / 3, lo + 2 * (hi - lo) / 3
        g1 = eval_arc(T, ArcLoc(j, _approach_ruling(c0, side, d1)))
        g2 = eval_arc(T, ArcLoc(j, _approach_ruling(c0, side, d2)))
        lines = []
        for k in range(1, Tp.m + 1):
            y1 = patch_distance_order(g1, Tp, k)[0]
            y2 = patch_distance_order(g2, Tp, k)[0]
            if is_inf(y1) or is_inf(y2):
                lines.append((Fraction(0), INF))
                continue
            a = (y2 - y1) / (d2 - d1)
            lines.append((a, y1 - a * d1))
        for piece in _upper_envelope(lines, lo, hi):
            if out and out[-1][2:] == piece[2:]:
                out[-1] = (out[-1][0], piece[1]) + piece[2:]
            else:
                out.append(piece)
    _check_shallow(T, j, Tp, c0, side, xs, out)
    return out


# ---------------------------------------------------------------------------
# the profile along the whole link


def _approach_loc(j: int, c0: Fraction, side: int, delta: Exp, generic: Fraction) -> ArcLoc:
    if is_inf(delta):
        return ArcLoc.const(j, c0)
    if delta == 0:
        return ArcLoc.const(j, generic)
    return ArcLoc(j, _approach_ruling(c0, side, delta))


@functools.lru_cache(maxsize=256)
def order_profile(T: TriangleModel, Tp: TriangleModel) -> OrderProfile:
    stations: list[Station] = []
    pieces: list[Piece] = []
    for j in range(1, T.m + 1):
        beta_j = T.patches[j - 1].exponent
        cs = stations_of_patch(T, j, Tp)
        for c in cs:
            if j > 1 and c == 0:
                continue
            order = distance_order(eval_arc(T, ArcLoc.const(j, c)), Tp)
            stations.append(Station(j, c, order))
        for ca, cb in zip(cs, cs[1:]):
            mid = (ca + cb) / 2
            right = approach_profile(T, Tp, j, ca, +1)
            for lo, hi, A, B in reversed(right):
                pieces.append(Piece(
                    j, ca, +1, lo, hi, A, B, beta_j,
                    _approach_loc(j, ca, +1, hi, mid), _approach_loc(j, ca, +1, lo, mid),
                ))
            left = approach_profile(T, Tp, j, cb, -1)
            for lo, hi, A, B in left:
                pieces.append(Piece(
                    j, cb, -1, lo, hi, A, B, beta_j,
                    _approach_loc(j, cb, -1, lo, mid), _approach_loc(j, cb, -1, hi, mid),
                ))
    for p1, p2 in zip(pieces, pieces[1:]):
        if p1.q_end != p2.q_start:
            raise PizzaError(
                f"order profile is discontinuous at {p1.link_end}: {p1.q_end} vs {p2.q_start}"
            )
    return OrderProfile(tuple(stations), tuple(pieces))


def q_range(profile: OrderProfile) -> ExpInterval:
    """Orders attained along the link; contiguity is checked piece by piece."""
    qs = [p.q_start for p in profile.pieces] + [profile.pieces[-1].q_end]
    lo, hi = min(qs), max(qs)
    covered = sorted((ExpInterval.spanning(p.q_start, p.q_end) for p in profile.pieces),
                     key=lambda iv: (iv.lo, iv.hi))
    reach = covered[0].lo
    for iv in covered:
        if iv.lo > reach:
            raise PizzaError(f"orders along the link skip ({format_exp(reach)}, {format_exp(iv.lo)})")
        reach = max(reach, iv.hi)
    return ExpInterval(lo, hi)


# ---------------------------------------------------------------------------
# link order


def link_key_cmp(m: TriangleModel, x: ArcLoc, y: ArcLoc) -> int:
    """-1, 0 or 1 as ``x`` comes before, equals or follows ``y`` along the link."""
    def norm(loc):
        if loc.patch < m.m and loc.ruling == GPoly.const(1):
            return loc.patch + 1, GPoly.zero()
        return loc.patch, loc.ruling

    (jx, wx), (jy, wy) = norm(x), norm(y)
    if jx != jy:
        return -1 if jx < jy else 1
    return (wx - wy).sign_at_zero()


# ---------------------------------------------------------------------------
# merging into a minimal pizza


def _weakly_monotone(seq) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:])) or all(a >= b for a, b in zip(seq, seq[1:]))


def _merge(A: _Proto, B: _Proto) -> Optional[_Proto]:
    """The union of adjacent slices if it is again a pizza slice, else ``None``."""
    q = A.q_next
    if not _weakly_monotone([A.q_prev, q, B.q_next]):
        return None
    beta = min(A.beta, B.beta)
    if A.law is None and B.law is None:
        law = None
    elif A.law is None:
        if not B.mu(q) <= A.beta:
            return None
        law = B.law
    elif B.law is None:
        if not A.mu(q) <= B.beta:
            return None
        law = A.law
    else:
        if A.law != B.law:
            return None
        law = A.law
    return _Proto(beta, A.q_prev, B.q_next, law, A.start, B.end)


def merge_greedy(protos: Sequence[_Proto]) -> list[_Proto]:
    out: list[_Proto] = []
    for p in protos:
        if out:
            merged = _merge(out[-1], p)
            if merged is not None:
                out[-1] = merged
                continue
        out.append(p)
    return out


def zone_kinds(qs: Sequence[Exp], beta: Exp) -> list[str]:
    """Maximum/minimum labels of zones with orders ``qs`` on a triangle of exponent ``beta``."""
    p = len(qs) - 1
    kinds = []
    for i, q in enumerate(qs):
        nbrs = [qs[k] for k in (i - 1, i + 1) if 0 <= k <= p]
        if not nbrs:
            kinds.append(MAXIMUM if beta < q else MINIMUM)
            continue
        if 0 < i < p:
            if q >= max(nbrs):
                kinds.append(MAXIMUM)
            elif q <= min(nbrs):
                kinds.append(MINIMUM)
            else:
                kinds.append(NEITHER)
        else:
            if beta < q and q >= nbrs[0]:
                kinds.append(MAXIMUM)
            elif q <= nbrs[0]:
                kinds.append(MINIMUM)
            else:
                kinds.append(NEITHER)
    return kinds


def depth(mu_left: Exp, mu_right: Exp) -> Exp:
    """Depth of a zone from the widths on its two sides."""
    return max(mu_left, mu_right)


def _side_width(slices: Sequence, start: int, step: int, q: Exp) -> Exp:
    """Width at order ``q`` of a zone, seen through the slices from ``start`` onward."""
    best = INF
    k = start
    while 0 <= k < len(slices):
        s = slices[k]
        if s.is_point and s.q_prev == q:
            best = min(best, s.beta)
            k += step
            continue
        best = min(best, s.width_at(q))
        break
    return best


def zone_depths(slices: Sequence) -> list[Exp]:
    nus = [INF]
    for ell in range(1, len(slices)):
        q = slices[ell].q_prev
        nus.append(depth(_side_width(slices, ell - 1, -1, q), _side_width(slices, ell, 1, q)))
    nus.append(INF)
    return nus


def generic_in(m: TriangleModel, x: ArcLoc, y: ArcLoc) -> ArcLoc:
    """An arc between ``x`` and ``y`` with tangency order ``tord(x, y)`` to both."""
    gx, gy = eval_arc(m, x), eval_arc(m, y)
    beta = tord(gx, gy)
    cands = []
    if x.patch == y.patch:
        cands.append(ArcLoc(x.patch, (x.ruling + y.ruling) * Fraction(1, 2)))
    cands.append(ArcLoc(x.patch, (x.ruling + GPoly.const(1)) * Fraction(1, 2)))
    cands.append(ArcLoc(y.patch, y.ruling * Fraction(1, 2)))
    cands.extend(ArcLoc.const(j, Fraction(1, 2)) for j in range(x.patch, y.patch + 1))
    cands.extend(ArcLoc.const(j, 1) for j in range(x.patch, y.patch))
    for c in cands:
        if link_key_cmp(m, x, c) < 0 and link_key_cmp(m, c, y) < 0:
            g = eval_arc(m, c)
            if tord(g, gx) == beta and tord(g, gy) == beta:
                return c
    raise PizzaError(f"no generic arc found between {x} and {y}")


def _finish(T: TriangleModel, Tp: TriangleModel, merged: Sequence[_Proto], reps=None) -> PizzaData:
    if reps is None:
        reps = [merged[0].start] + [s.end for s in merged]
    arcs = [eval_arc(T, r) for r in reps]
    qs = [distance_order(g, Tp) for g in arcs]
    nus = zone_depths(merged)
    kinds = zone_kinds(qs, T.beta)
    slices = []
    for ell, s in enumerate(merged):
        beta = tord(arcs[ell], arcs[ell + 1])
        if beta != s.beta:
            raise PizzaError(f"slice {ell + 1}: exponent {s.beta} disagrees with tord of its ends {beta}")
        if qs[ell] != s.q_prev or qs[ell + 1] != s.q_next:
            raise PizzaError(f"slice {ell + 1}: end orders disagree with the profile")
        slices.append(make_slice(beta, s.q_prev, s.q_next, s.law, generic_in(T, s.start, s.end)))
    zones = [ZoneRecord(q, nu, k, r) for q, nu, k, r in zip(qs, nus, kinds, reps)]
    return PizzaData(tuple(slices), tuple(zones))


def make_slice(beta, q_prev, q_next, law, generic=None) -> PizzaSlice:
    dom = ExpInterval.spanning(q_prev, q_next)
    if law is None or q_prev == q_next:
        value = beta if law is None else law[0] * q_prev + law[1]
        return PizzaSlice(beta, q_prev, q_next, AffineFn(Fraction(0), value, dom), NONE, generic)
    a, b = law
    mu = AffineFn(Fraction(a), Fraction(b), dom)
    hi_end = PREV if q_prev > q_next else NEXT
    lo_end = NEXT if hi_end == PREV else PREV
    support = hi_end if a > 0 else lo_end if a < 0 else NONE
    return PizzaSlice(beta, q_prev, q_next, mu, support, generic)


def _protos(T: TriangleModel, Tp: TriangleModel) -> list[_Proto]:
    return merge_greedy([p.as_slice() for p in order_profile(T, Tp).pieces])


def build_minimal_pizza(T: TriangleModel, Tp: TriangleModel, zone_reps=None) -> PizzaData:
    """Minimal pizza of ``dist(·, Tp)`` on ``T``.

    Zone orders and slice exponents are read off the zone representatives;
    passing ``zone_reps`` substitutes other arcs of the same zones.
    """
    merged = _protos(T, Tp)
    if zone_reps is not None and len(zone_reps) != len(merged) + 1:
        raise PizzaError(f"expected {len(merged) + 1} zone representatives")
    return _finish(T, Tp, merged, zone_reps)


def merge_reverse(protos: Sequence[_Proto]) -> list[_Proto]:
    """Greedy merging right-to-left, for checking sweep-direction independence."""
    out: list[_Proto] = []
    for p in reversed(protos):
        if out:
            merged = _merge(p, out[-1])
            if merged is not None:
                out[-1] = merged
                continue
        out.append(p)
    return out[::-1]


# ---------------------------------------------------------------------------
# queries on a built pizza


def locate(T: TriangleModel, p: PizzaData, loc: ArcLoc):
    """``("zone", i)`` if ``loc`` is the representative of zone ``i``, else ``("slice", ℓ)`` (1-based)."""
    for i, z in enumerate(p.zones):
        if link_key_cmp(T, loc, z.rep) == 0:
            return "zone", i
    for ell in range(1, len(p.slices) + 1):
        if link_key_cmp(T, p.zones[ell - 1].rep, loc) < 0 < link_key_cmp(T, p.zones[ell].rep, loc):
            return "slice", ell
    raise PizzaError(f"{loc} is not on the link of the triangle")


def width(loc: ArcLoc, T: TriangleModel, Tp: TriangleModel) -> Exp:
    """Width of the arc ``loc`` of ``T`` with respect to ``dist(·, Tp)``."""
    p = build_minimal_pizza(T, Tp)
    q = distance_order(eval_arc(T, loc), Tp)
    kind, idx = locate(T, p, loc)
    if kind == "slice":
        return p.slices[idx - 1].width_at(q)
    sides = []
    if idx > 0:
        sides.append(p.slices[idx - 1].width_at(q))
    if idx < len(p.slices):
        sides.append(p.slices[idx].width_at(q))
    return min(sides)


def is_elementary(p: PizzaData) -> bool:
    return _weakly_monotone(p.q_sequence)


def slice_signature(s: PizzaSlice):
    return (s.beta, s.q_prev, s.q_next, s.mu.a, s.mu.b, s.support)


def pizza_equivalent(p1: PizzaData, p2: PizzaData) -> bool:
    return len(p1.slices) == len(p2.slices) and all(
        slice_signature(a) == slice_signature(b) for a, b in zip(p1.slices, p2.slices)
    )


def check_width_axioms(p: PizzaData) -> list[str]:
    """Violations of the slice axioms; an empty list means the pizza passes."""
    diags = []
    for ell, s in enumerate(p.slices, 1):
        dom = ExpInterval.spanning(s.q_prev, s.q_next)
        if s.mu.domain != dom:
            diags.append(f"slice {ell}: width law domain {s.mu.domain} differs from Q = {dom}")
            continue
        for q in (dom.lo, dom.hi):
            mu = s.mu(q)
            if not s.beta <= mu <= max(q, s.beta):
                diags.append(
                    f"slice {ell}: width {format_exp(mu)} at q = {format_exp(q)} "
                    f"outside [beta, max(q, beta)] = [{format_exp(s.beta)}, {format_exp(max(q, s.beta))}]"
                )
        if s.is_point:
            if s.support != NONE:
                diags.append(f"slice {ell}: point slice must not have a supporting side")
            continue
        if s.support == NONE:
            diags.append(f"slice {ell}: non-point slice needs a supporting side")
            continue
        at_support = s.mu(s.q_prev if s.support == PREV else s.q_next)
        at_other = s.mu(s.q_next if s.support == PREV else s.q_prev)
        if not at_support > at_other:
            diags.append(f"slice {ell}: width is not maximal at the supporting side")
    for ell in range(1, len(p.slices)):
        if p.slices[ell - 1].q_next != p.slices[ell].q_prev:
            diags.append(f"zone {ell}: adjacent slices disagree on the order")
    if len(p.zones) == len(p.slices) + 1:
        for ell, s in enumerate(p.slices):
            if p.zones[ell].q != s.q_prev or p.zones[ell + 1].q != s.q_next:
                diags.append(f"slice {ell + 1}: end orders differ from the zone table")
    else:
        diags.append("zone count must be slice count + 1")
    return diags
