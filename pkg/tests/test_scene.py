from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stpizza.arcspace import Arc
from stpizza.corpus import load, scene_names, scene_path
from stpizza.errors import InvalidRational, SceneSyntaxError, UnknownField, ValidationError
from stpizza.germmodel import validate_triangle
from stpizza.pizzactl.scene import (
    GEOMETRIC,
    Scene,
    chart_json,
    dumps,
    parse_scene,
    serialize_scene,
)

from .conftest import FIXTURES, gpolys

HOVER = {
    "kind": "geometric",
    "name": "h",
    "geometric": {
        "ambient_dim": 3,
        "T": [[[], []], [[["1", "1"]], []]],
        "Tp": [[[], [["2", "1"]]], [[["1", "1"]], [["2", "1"]]]],
    },
}


def text(obj) -> str:
    return json.dumps(obj)


def edited(path, value):
    obj = json.loads(json.dumps(HOVER))
    target = obj
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = value
    return text(obj)


class TestParsing:
    def test_minimal_scene(self):
        s = parse_scene(text(HOVER))
        assert s.kind == GEOMETRIC and s.T.m == 1 and s.ambient_dim == 3

    def test_coordinate_zero_may_be_given(self):
        obj = json.loads(text(HOVER))
        obj["geometric"]["T"][0].insert(0, [["1", "1"]])
        obj["geometric"]["T"][1].insert(0, [["1", "1"]])
        assert parse_scene(text(obj)).T == parse_scene(text(HOVER)).T

    def test_integer_literals_are_exact(self):
        s = parse_scene(edited(["geometric", "Tp", 1, 1], [[2, 1]]))
        assert s.Tp == parse_scene(text(HOVER)).Tp

    def test_floats_are_rejected(self):
        with pytest.raises(InvalidRational):
            parse_scene(text(HOVER).replace('["2", "1"]', '[2.0, "1"]', 1))

    def test_unknown_field_has_location(self):
        with pytest.raises(UnknownField) as err:
            parse_scene(edited(["geometric", "colour"], "red"))
        assert err.value.location == "geometric.colour"

    def test_bad_rational_has_location(self):
        with pytest.raises(InvalidRational) as err:
            parse_scene(edited(["geometric", "Tp", 0, 1], [["2", "one"]]))
        assert err.value.location == "geometric.Tp[0][1][0]"

    def test_syntax_error_has_line(self):
        with pytest.raises(SceneSyntaxError) as err:
            parse_scene('{"kind": "geometric",\n "name": }')
        assert err.value.location.startswith("line 2")

    @pytest.mark.parametrize(
        "path,value,exc",
        [
            (["kind"], "mystery", SceneSyntaxError),
            (["name"], 7, SceneSyntaxError),
            (["geometric", "ambient_dim"], "3", SceneSyntaxError),
            (["geometric", "T"], {}, SceneSyntaxError),
            (["geometric", "T", 0], "arc", SceneSyntaxError),
            (["abstract"], {}, UnknownField),
        ],
    )
    def test_malformed(self, path, value, exc):
        with pytest.raises(exc):
            parse_scene(edited(path, value))

    def test_missing_field(self):
        obj = json.loads(text(HOVER))
        del obj["geometric"]["Tp"]
        with pytest.raises(SceneSyntaxError, match="missing field 'Tp'"):
            parse_scene(text(obj))


class TestValidation:
    def test_arc_below_one(self):
        with pytest.raises(ValidationError, match=r"geometric\.T\[1\]"):
            parse_scene(edited(["geometric", "T", 1, 0], [["1/2", "1"]]))

    def test_wrong_arity(self):
        with pytest.raises(ValidationError, match="ambient dimension"):
            parse_scene(edited(["geometric", "T", 1], [[], [], [], []]))

    def test_partial_hover_fails_regularity(self):
        with pytest.raises(ValidationError, match="regular"):
            parse_scene((FIXTURES / "partial-hover.json").read_text())

    def test_validation_can_be_deferred(self):
        s = parse_scene((FIXTURES / "partial-hover.json").read_text(), validate=False)
        assert s.name == "partial-hover"

    def test_bad_chart_is_rejected(self):
        obj = json.loads(scene_path("one-loop").read_text())
        obj["abstract"]["tau"][1][2] = "+"
        with pytest.raises(ValidationError, match="signs"):
            parse_scene(text(obj))


class TestSerialization:
    @pytest.mark.parametrize("name", scene_names())
    def test_corpus_round_trip(self, name):
        original = scene_path(name).read_text()
        scene = parse_scene(original)
        again = serialize_scene(scene)
        assert again == original
        assert parse_scene(again) == scene

    def test_dumps_is_canonical(self):
        a = dumps({"b": [1, 2], "a": {"y": "1", "x": "2"}})
        assert a == '{"a": {"x": "2", "y": "1"}, "b": [1, 2]}\n'
        wide = dumps({"k": ["x" * 30] * 4})
        assert wide.splitlines()[1].startswith('  "k": [')

    def test_chart_json_is_stable(self):
        st = load("one-loop").chart
        assert chart_json(st) == json.loads(scene_path("one-loop").read_text())["abstract"]

    @settings(max_examples=60, deadline=None)
    @given(st.lists(gpolys(), min_size=2, max_size=2), st.lists(gpolys(), min_size=2, max_size=2))
    def test_random_triangles_round_trip(self, offs_a, offs_b):
        from stpizza.arcspace import make_arc
        from stpizza.errors import PizzaError

        try:
            T = validate_triangle([make_arc(*offs_a), make_arc(*offs_b)])
        except PizzaError:
            return
        scene = Scene(GEOMETRIC, "random", T=T, Tp=T)
        again = parse_scene(serialize_scene(scene), validate=False)
        assert again.T == T
        assert all(isinstance(a, Arc) for a in again.T.anchors)
