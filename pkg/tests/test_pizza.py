from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stpizza.arcspace import make_arc
from stpizza.corpus import load, scene_names
from stpizza.errors import DeepBreakpoint
from stpizza.exacts import INF, GPoly
from stpizza.germmodel import ArcLoc, distance_order, eval_arc, validate_triangle
from stpizza.pizza import (
    MAXIMUM,
    MINIMUM,
    NEITHER,
    NEXT,
    NONE,
    PREV,
    PizzaData,
    ZoneRecord,
    build_minimal_pizza,
    check_width_axioms,
    critical_rulings,
    is_elementary,
    link_key_cmp,
    locate,
    make_slice,
    merge_greedy,
    merge_reverse,
    order_profile,
    pizza_equivalent,
    q_range,
    stations_of_patch,
    width,
    zone_depths,
    zone_kinds,
)

GEOMETRIC = [n for n in scene_names() if load(n).kind == "geometric"]


def pizzas(name):
    s = load(name)
    return build_minimal_pizza(s.T, s.Tp), build_minimal_pizza(s.Tp, s.T)


def table(p: PizzaData):
    return [(s.beta, s.q_prev, s.q_next, s.mu.a, s.mu.b, s.support) for s in p.slices]


class TestCorpusPizzas:
    def test_shared_edge(self):
        p, _ = pizzas("shared-edge")
        assert table(p) == [(1, INF, 1, 1, 0, PREV)]
        assert [z.kind for z in p.zones] == [MAXIMUM, MINIMUM]
        assert is_elementary(p)

    def test_hover(self):
        for p in pizzas("hover"):
            assert table(p) == [(1, 2, 2, 0, 1, NONE)]
            assert [(z.q, z.kind) for z in p.zones] == [(2, MAXIMUM), (2, MAXIMUM)]

    def test_tilt(self):
        for p in pizzas("tilt"):
            assert table(p) == [(1, INF, 2, 1, -1, PREV)]

    @pytest.mark.parametrize("name", ["ladder-1", "ladder-2"])
    def test_ladder(self, name):
        expected = [
            (F(3, 2), 2, 2, 0, F(3, 2), NONE),
            (2, 2, 3, 1, 0, NEXT),
            (2, 3, 3, 0, 2, NONE),
            (2, 3, 2, 1, 0, PREV),
            (F(3, 2), 2, 2, 0, F(3, 2), NONE),
        ]
        for p in pizzas(name):
            assert table(p) == expected
            assert [z.q for z in p.zones] == [2, 2, 3, 3, 2, 2]
            assert [z.nu for z in p.zones] == [INF, 2, 3, 3, 2, INF]
            assert [z.kind for z in p.zones] == [MAXIMUM, MINIMUM, MAXIMUM, MAXIMUM, MINIMUM, MAXIMUM]
            assert not is_elementary(p)

    def test_ladders_have_equivalent_pizzas(self):
        for p1, p2 in zip(pizzas("ladder-1"), pizzas("ladder-2")):
            assert pizza_equivalent(p1, p2)
            assert p1 == p2

    @pytest.mark.parametrize("name", GEOMETRIC)
    def test_width_axioms(self, name):
        for p in pizzas(name):
            assert check_width_axioms(p) == []

    @pytest.mark.parametrize("name", GEOMETRIC)
    def test_generic_arc_width_is_beta(self, name):
        s = load(name)
        for A, B in ((s.T, s.Tp), (s.Tp, s.T)):
            p = build_minimal_pizza(A, B)
            for sl in p.slices:
                assert locate(A, p, sl.generic)[0] == "slice"
                assert width(sl.generic, A, B) == sl.beta


class TestProfile:
    def test_stations_on_ladder(self):
        s = load("ladder-1")
        prof = order_profile(s.T, s.Tp)
        assert all(0 <= st.c <= 1 for st in prof.stations)
        anchors = {(1, 0)} | {(j, 1) for j in range(1, s.T.m + 1)}
        assert {(st.patch, st.c) for st in prof.stations} >= anchors
        for j in range(1, s.T.m + 1):
            assert stations_of_patch(s.T, j, s.Tp) == [0, *critical_rulings(s.T, j, s.Tp), 1]

    @pytest.mark.parametrize("name", GEOMETRIC)
    def test_merge_direction_does_not_matter(self, name):
        s = load(name)
        protos = [p.as_slice() for p in order_profile(s.T, s.Tp).pieces]
        fwd, rev = merge_greedy(protos), merge_reverse(protos)
        key = lambda ps: [(p.beta, p.q_prev, p.q_next, p.law) for p in ps]
        assert key(fwd) == key(rev)


def toward_slice(m, loc: ArcLoc, step: int, delta_total):
    """The arc at tangency ``delta_total`` from ``loc``, on the side ``step`` of it."""
    j, w = loc.patch, loc.ruling
    if w == GPoly.const(1) and step > 0 and j < m.m:
        j, w = j + 1, GPoly.zero()
    if w.is_zero() and step < 0 and j > 1:
        j, w = j - 1, GPoly.const(1)
    return ArcLoc(j, w + GPoly.monomial(delta_total - m.patches[j - 1].exponent, step))


class TestSliceInvariants:
    @pytest.mark.parametrize("name", GEOMETRIC)
    def test_q_range_is_contiguous(self, name):
        s = load(name)
        p = build_minimal_pizza(s.T, s.Tp)
        iv = q_range(order_profile(s.T, s.Tp))
        assert (iv.lo, iv.hi) == (min(p.q_sequence), max(p.q_sequence))

    @pytest.mark.parametrize("name", GEOMETRIC)
    def test_width_follows_the_affine_law(self, name):
        s = load(name)
        checked = 0
        for A, B in ((s.T, s.Tp), (s.Tp, s.T)):
            p = build_minimal_pizza(A, B)
            for ell, sl in enumerate(p.slices, 1):
                if sl.is_point:
                    continue
                rep = p.zones[ell - 1 if sl.support == PREV else ell].rep
                step = 1 if sl.support == PREV else -1
                lo, hi = sl.Q.lo, sl.Q.hi
                hi = lo + 2 if hi == INF else hi
                for q in (lo + (hi - lo) / 3, (lo + hi) / 2):
                    mu0 = sl.mu(q)
                    if not mu0 > sl.beta:
                        continue
                    loc = toward_slice(A, rep, step, mu0)
                    g = eval_arc(A, loc)
                    assert locate(A, p, loc) == ("slice", ell)
                    assert distance_order(g, B) == q
                    checked += 1
        if any(not sl.is_point for sl in build_minimal_pizza(s.T, s.Tp).slices):
            assert checked > 0


class TestLinkOrder:
    T = validate_triangle([make_arc({}, {}), make_arc({2: 1}, {}), make_arc({2: 1}, {1: 1})])

    def test_patch_boundary_is_one_point(self):
        assert link_key_cmp(self.T, ArcLoc.const(1, 1), ArcLoc.const(2, 0)) == 0

    @pytest.mark.parametrize(
        "x,y,sign",
        [
            (ArcLoc.const(1, F(1, 3)), ArcLoc.const(1, F(1, 2)), -1),
            (ArcLoc.const(2, 0), ArcLoc.const(1, F(1, 2)), 1),
            (ArcLoc(1, GPoly({0: F(1, 2), 1: 1})), ArcLoc.const(1, F(1, 2)), 1),
            (ArcLoc.const(2, F(1, 2)), ArcLoc.const(2, F(1, 2)), 0),
        ],
    )
    def test_order(self, x, y, sign):
        assert link_key_cmp(self.T, x, y) == sign
        assert link_key_cmp(self.T, y, x) == -sign


class TestZoneLabels:
    @pytest.mark.parametrize(
        "qs,beta,kinds",
        [
            ([2, 2], 1, [MAXIMUM, MAXIMUM]),
            ([INF, 1], 1, [MAXIMUM, MINIMUM]),
            ([2, 3, 2], 1, [MINIMUM, MAXIMUM, MINIMUM]),
            ([2, 3, 4], 1, [MINIMUM, NEITHER, MAXIMUM]),
            ([1], 1, [MINIMUM]),
        ],
    )
    def test_kinds(self, qs, beta, kinds):
        assert zone_kinds(qs, beta) == kinds

    def test_depths_use_the_wider_side(self):
        slices = [make_slice(F(3, 2), 2, 3, (1, 0)), make_slice(2, 3, 3, None), make_slice(2, 3, 2, (1, 0))]
        assert zone_depths(slices) == [INF, 3, 3, INF]


class TestWidthAxiomChecker:
    def test_reports_violations(self):
        bad = make_slice(1, 3, 2, (2, 0))  # width 6 at q = 3 exceeds max(q, beta)
        p = PizzaData((bad,), (ZoneRecord(3, INF, MAXIMUM), ZoneRecord(2, INF, MINIMUM)))
        assert any("outside" in d for d in check_width_axioms(p))

    def test_zone_table_mismatch(self):
        s = make_slice(1, 2, 2, None)
        p = PizzaData((s,), (ZoneRecord(2, INF, MAXIMUM),))
        assert "zone count must be slice count + 1" in check_width_axioms(p)


class TestDeepBreakpoint:
    def test_crossing_off_a_constant_ruling_is_rejected(self):
        # T' dips through T along w = t/(1+t) on the second patch
        base = [({},), ({2: 1},), ({2: 1, F(3, 2): 1},)]
        T = validate_triangle([make_arc(*b, {}) for b in base])
        Tp = validate_triangle([make_arc(*b, z) for b, z in zip(base, [{}, {3: 1}, {2: -1}])])
        with pytest.raises(DeepBreakpoint, match="w = 1\\*t\\^1"):
            build_minimal_pizza(T, Tp)


# random two-patch triangles over the strip, lifted pointwise in z
lifts = st.sampled_from([{}, {2: 1}, {F(5, 2): 1}, {3: 1}, {2: -1}, {3: 2}])


class TestRandomPairs:
    @settings(max_examples=20, deadline=None)
    @given(st.lists(lifts, min_size=3, max_size=3))
    def test_axioms_hold_on_random_lifts(self, zs):
        base = [({}, ), ({2: 1},), ({2: 1, F(3, 2): 1},)]
        T = validate_triangle([make_arc(*b, {}) for b in base])
        Tp = validate_triangle([make_arc(*b, z) for b, z in zip(base, zs)])
        for A, B in ((T, Tp), (Tp, T)):
            try:
                p = build_minimal_pizza(A, B)
            except DeepBreakpoint:
                assume(False)
            assert check_width_axioms(p) == []
            for sl in p.slices:
                assert width(sl.generic, A, B) == sl.beta
            reached = {z.q for z in p.zones}
            for j in range(1, A.m + 1):
                for c in (F(1, 4), F(3, 4)):
                    loc = ArcLoc.const(j, c)
                    kind, idx = locate(A, p, loc)
                    if kind == "slice":
                        sl = p.slices[idx - 1]
                        assert width(loc, A, B) >= sl.beta
            assert reached
