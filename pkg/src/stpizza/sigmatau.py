"""Maximum zones, the characteristic permutation σ, the signed slice
correspondence τ, and equivalence of the resulting invariants."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .arcspace import Arc, tord
from .errors import (
    AmbiguousSigma,
    AmbiguousTau,
    PizzaError,
    SigmaViolation,
    TauViolation,
    Undetermined,
)
from .exacts import Exp, format_exp
from .germmodel import ArcLoc, TriangleModel, distance_order, eval_arc, nearest_with_order
from .pizza import (
    PizzaData,
    PizzaSlice,
    build_minimal_pizza,
    check_width_axioms,
    is_elementary,
    locate,
    pizza_equivalent,
    zone_depths,
    zone_kinds,
)

PLUS, MINUS = "+", "-"


@dataclass(frozen=True)
class SignedPair:
    l: int
    lp: int
    sign: str


@dataclass(frozen=True)
class SigmaTau:
    pizza_T: PizzaData
    pizza_Tp: PizzaData
    sigma: tuple[tuple[int, int], ...]
    tau: tuple[SignedPair, ...]


@dataclass(frozen=True)
class Verdict:
    answer: str  # "yes", "no" or "unknown"
    reason: str


def triangle_beta(p: PizzaData) -> Exp:
    return min(s.beta for s in p.slices)


def classify_zones(p: PizzaData, beta: Exp) -> PizzaData:
    kinds = zone_kinds(p.q_sequence, beta)
    return replace(p, zones=tuple(replace(z, kind=k) for z, k in zip(p.zones, kinds)))


def check_tord_tord(T: TriangleModel, Tp: TriangleModel) -> bool:
    """Both boundary pairs ``(a_0, a′_0)`` and ``(a_m, a′_m′)`` are regular."""
    return regular_pair(T.anchors[0], Tp.anchors[0], T, Tp) and regular_pair(
        T.anchors[-1], Tp.anchors[-1], T, Tp
    )


def regular_pair(g: Arc, gp: Arc, T: TriangleModel, Tp: TriangleModel) -> bool:
    return distance_order(g, Tp) == tord(g, gp) == distance_order(gp, T)


def transversal(s: PizzaSlice) -> bool:
    if s.is_point:
        return s.mu(s.q_prev) == s.q_prev
    return s.mu.a == 1 and s.mu.b == 0


def zone_contains(m: TriangleModel, p: PizzaData, k: int, theta_loc: ArcLoc, q: Exp) -> bool:
    """Whether the arc ``theta_loc`` of order ``q`` lies in zone ``k`` of ``p``.

    Zone ``k`` is the ``ν_k``-zone around its representative, cut off at the
    neighbouring zones: the arc must have order ``q_k``, tangency order at
    least ``ν_k`` to the representative, and sit on one of the two slices
    adjacent to the zone.
    """
    z = p.zones[k]
    if q != z.q:
        return False
    kind, idx = locate(m, p, theta_loc)
    if kind == "zone":
        return idx == k
    if idx not in (k, k + 1):
        return False
    return tord(eval_arc(m, theta_loc), eval_arc(m, z.rep)) >= z.nu


def _closest_zone(theta_loc: ArcLoc, m: TriangleModel, p: PizzaData, q: Exp, indices: Sequence[int]):
    """The zone among ``indices`` containing the arc ``theta_loc`` of order ``q``.

    When several zones contain it (through a shared point slice) the one with
    the highest contact to its representative wins; ``ValueError`` on a tie.
    """
    theta = eval_arc(m, theta_loc)
    scored = [
        (tord(theta, eval_arc(m, p.zones[k].rep)), k)
        for k in indices
        if zone_contains(m, p, k, theta_loc, q)
    ]
    if not scored:
        return None
    scored.sort(key=lambda s: s[0], reverse=True)
    if len(scored) > 1 and scored[0][0] == scored[1][0]:
        raise ValueError([k for c, k in scored if c == scored[0][0]])
    return scored[0][1]


def compute_sigma(T: TriangleModel, Tp: TriangleModel, pT: PizzaData, pTp: PizzaData):
    """``σ`` as a tuple of 1-based pairs ``(i, i′)`` over maximum zones."""
    maxT, maxTp = pT.maximum_zones(), pTp.maximum_zones()
    if len(maxT) != len(maxTp):
        raise SigmaViolation(f"{len(maxT)} maximum zones on T but {len(maxTp)} on T'")
    sigma = []
    for i, zi in enumerate(maxT, 1):
        z = pT.zones[zi]
        qbar, theta_loc = nearest_with_order(eval_arc(T, z.rep), Tp)
        if qbar != z.q:
            raise SigmaViolation(f"maximum zone {i}: contact order {qbar} differs from q = {z.q}")
        try:
            k = _closest_zone(theta_loc, Tp, pTp, qbar, maxTp)
        except ValueError as tie:
            raise AmbiguousSigma(f"maximum zone {i} projects equally close to zones {tie.args[0]}")
        if k is None:
            raise SigmaViolation(f"maximum zone {i} does not project into a maximum zone of T'")
        ip = maxTp.index(k) + 1
        zp = pTp.zones[k]
        if zp.nu != z.nu:
            raise SigmaViolation(f"maximum zone {i}: depth {z.nu} but partner depth {zp.nu}")
        sigma.append((i, ip))
    check_sigma(pT, pTp, sigma)
    return tuple(sigma)


def check_sigma(pT: PizzaData, pTp: PizzaData, sigma) -> None:
    maxT, maxTp = pT.maximum_zones(), pTp.maximum_zones()
    images = [ip for _, ip in sigma]
    if sorted(i for i, _ in sigma) != list(range(1, len(maxT) + 1)):
        raise SigmaViolation("sigma is not defined on every maximum zone")
    if sorted(images) != list(range(1, len(maxTp) + 1)):
        raise SigmaViolation("sigma is not a bijection")
    for i, ip in sigma:
        z, zp = pT.zones[maxT[i - 1]], pTp.zones[maxTp[ip - 1]]
        if z.q != zp.q or z.nu != zp.nu:
            raise SigmaViolation(f"sigma({i}) = {ip} changes the order or depth of the zone")
    last, lastp = len(pT.zones) - 1, len(pTp.zones) - 1
    lookup = dict(sigma)
    for zi, zpi in ((0, 0), (last, lastp)):
        if zi in maxT:
            i = maxT.index(zi) + 1
            if zpi not in maxTp or lookup[i] != maxTp.index(zpi) + 1:
                raise SigmaViolation("sigma must fix the boundary maximum zones")


def _same_width(s: PizzaSlice, sp: PizzaSlice) -> bool:
    if {s.q_prev, s.q_next} != {sp.q_prev, sp.q_next}:
        return False
    if s.is_point:
        return s.mu(s.q_prev) == sp.mu(sp.q_prev)
    return s.mu.a == sp.mu.a and s.mu.b == sp.mu.b


def zones_touch(T, Tp, pT: PizzaData, pTp: PizzaData, k: int, kp: int) -> bool:
    """Whether zone ``k`` of ``T`` and zone ``kp`` of ``T′`` reach contact ``q``.

    Holds when both zones have order ``q`` and either the representatives meet
    at order ``q`` or one representative projects into the other zone.
    """
    q = pT.zones[k].q
    if pTp.zones[kp].q != q:
        return False
    g, gp = eval_arc(T, pT.zones[k].rep), eval_arc(Tp, pTp.zones[kp].rep)
    if tord(g, gp) >= q:
        return True
    qbar, loc = nearest_with_order(g, Tp)
    if qbar == q and zone_contains(Tp, pTp, kp, loc, distance_order(eval_arc(Tp, loc), T)):
        return True
    qbar, loc = nearest_with_order(gp, T)
    return qbar == q and zone_contains(T, pT, k, loc, distance_order(eval_arc(T, loc), Tp))


def compute_tau(T: TriangleModel, Tp: TriangleModel, pT: PizzaData, pTp: PizzaData):
    tau = []
    for ell, s in enumerate(pT.slices, 1):
        if transversal(s):
            continue
        _, theta_loc = nearest_with_order(eval_arc(T, s.generic), Tp)
        kind, lp = locate(Tp, pTp, theta_loc)
        if kind != "slice":
            raise AmbiguousTau(f"slice {ell} projects onto zone {lp} of T'")
        sp = pTp.slices[lp - 1]
        if transversal(sp) or not _same_width(s, sp):
            raise TauViolation(f"slice {ell} faces slice {lp} of T' with a different width law")
        if not s.is_point:
            sign = PLUS if s.q_prev == sp.q_prev else MINUS
        else:
            L, R = ell - 1, ell
            Lp, Rp = lp - 1, lp
            plus = zones_touch(T, Tp, pT, pTp, L, Lp) and zones_touch(T, Tp, pT, pTp, R, Rp)
            minus = zones_touch(T, Tp, pT, pTp, L, Rp) and zones_touch(T, Tp, pT, pTp, R, Lp)
            if plus == minus:
                raise AmbiguousTau(f"slice {ell}: end zones fit slice {lp} of T' in both or neither order")
            sign = PLUS if plus else MINUS
        tau.append(SignedPair(ell, lp, sign))
    check_tau(pT, pTp, tau)
    return tuple(tau)


def check_tau(pT: PizzaData, pTp: PizzaData, tau) -> None:
    nt = [ell for ell, s in enumerate(pT.slices, 1) if not transversal(s)]
    ntp = [ell for ell, s in enumerate(pTp.slices, 1) if not transversal(s)]
    if sorted(p.l for p in tau) != nt or sorted(p.lp for p in tau) != ntp:
        raise TauViolation("tau is not a bijection between non-transversal slices")
    for p in tau:
        if not _same_width(pT.slices[p.l - 1], pTp.slices[p.lp - 1]):
            raise TauViolation(f"tau pairs slices {p.l} and {p.lp} with different Q or width")
        if p.sign not in (PLUS, MINUS):
            raise TauViolation(f"sign {p.sign!r} is not + or -")


def recompute_signs(pT: PizzaData, pTp: PizzaData, sigma, tau_unsigned) -> tuple[SignedPair, ...]:
    """Signs of ``τ`` derived from the pizzas and ``σ`` alone."""
    maxT, maxTp = pT.maximum_zones(), pTp.maximum_zones()
    image = {maxT[i - 1]: maxTp[ip - 1] for i, ip in sigma}
    out = []
    for pair in tau_unsigned:
        ell, lp = pair[0], pair[1]
        s, sp = pT.slices[ell - 1], pTp.slices[lp - 1]
        if not s.is_point:
            sign = PLUS if s.q_prev == sp.q_prev else MINUS
        elif ell - 1 in image or ell in image:
            zi, plus_target, minus_target = (
                (ell - 1, lp - 1, lp) if ell - 1 in image else (ell, lp, lp - 1)
            )
            if image[zi] == plus_target:
                sign = PLUS
            elif image[zi] == minus_target:
                sign = MINUS
            else:
                raise Undetermined(f"slice {ell}: end zone maps away from slice {lp}")
        else:
            left = [z for z in image if z < ell - 1]
            right = [z for z in image if z > ell]
            if not left or not right:
                raise Undetermined(f"slice {ell}: no flanking maximum zones on both sides")
            sign = PLUS if image[max(left)] < image[min(right)] else MINUS
        out.append(SignedPair(ell, lp, sign))
    return tuple(out)


def sigma_tau_from_triangles(T: TriangleModel, Tp: TriangleModel) -> SigmaTau:
    """The στ-pizza of a geometric pair, with the sign-determinism cross-check."""
    if not check_tord_tord(T, Tp):
        raise SigmaViolation("boundary arcs do not form regular pairs")
    pT = build_minimal_pizza(T, Tp)
    pTp = build_minimal_pizza(Tp, T)
    sigma = compute_sigma(T, Tp, pT, pTp)
    tau = compute_tau(T, Tp, pT, pTp)
    again = recompute_signs(pT, pTp, sigma, [(p.l, p.lp) for p in tau])
    if again != tau:
        raise PizzaError("combinatorial signs disagree with the geometric signs")
    return SigmaTau(pT, pTp, sigma, tau)


def validate_chart(st: SigmaTau) -> list[str]:
    """Consistency diagnostics for an abstract στ-pizza; empty when valid."""
    diags = []
    for label, p in (("T", st.pizza_T), ("T'", st.pizza_Tp)):
        diags += [f"pizza {label}: {d}" for d in check_width_axioms(p)]
        expected = zone_kinds(p.q_sequence, triangle_beta(p))
        got = [z.kind for z in p.zones]
        if got != expected:
            diags.append(f"pizza {label}: zone kinds {got} but the orders imply {expected}")
        nus = zone_depths(p.slices)
        for k, (z, nu) in enumerate(zip(p.zones, nus)):
            if z.nu != nu:
                diags.append(f"pizza {label}: zone {k} has depth {format_exp(z.nu)}, widths give {format_exp(nu)}")
    if diags:
        return diags
    try:
        check_sigma(st.pizza_T, st.pizza_Tp, st.sigma)
        check_tau(st.pizza_T, st.pizza_Tp, st.tau)
        again = recompute_signs(st.pizza_T, st.pizza_Tp, st.sigma, [(p.l, p.lp) for p in st.tau])
        if again != tuple(st.tau):
            diags.append("tau signs are not the ones determined by the pizzas and sigma")
    except PizzaError as err:
        diags.append(str(err))
    return diags


def st_equivalent(A: SigmaTau, B: SigmaTau) -> bool:
    return st_difference(A, B) is None


def st_difference(A: SigmaTau, B: SigmaTau) -> Optional[str]:
    """First difference between two στ-pizzas, or ``None`` if equivalent."""
    if not pizza_equivalent(A.pizza_T, B.pizza_T):
        return "pizzas on T differ"
    if not pizza_equivalent(A.pizza_Tp, B.pizza_Tp):
        return "pizzas on T' differ"
    if len(A.sigma) != len(B.sigma):
        return "sigma has different length"
    for (i, a), (_, b) in zip(sorted(A.sigma), sorted(B.sigma)):
        if a != b:
            return f"sigma differs at index {i}"
    if len(A.tau) != len(B.tau):
        return "tau has different length"
    for x, y in zip(A.tau, B.tau):
        if (x.l, x.lp) != (y.l, y.lp):
            return f"tau differs at slice {x.l}"
        if x.sign != y.sign:
            return f"tau sign differs at slice {x.l}"
    return None


def graph_representable(T: TriangleModel, Tp: TriangleModel) -> Verdict:
    if not check_tord_tord(T, Tp):
        return Verdict("no", "boundary arcs do not form regular pairs")
    st = sigma_tau_from_triangles(T, Tp)
    if is_elementary(st.pizza_T):
        return Verdict("yes", "T is elementary with respect to the distance to T'")
    images = [ip for _, ip in sorted(st.sigma)]
    if images != sorted(images):
        return Verdict("no", "sigma does not preserve the order of maximum zones")
    negative = [p.l for p in st.tau if p.sign == MINUS]
    if negative:
        return Verdict("no", f"tau reverses orientation at slice {negative[0]}")
    return Verdict("unknown", "T is not elementary and no necessary condition fails")
