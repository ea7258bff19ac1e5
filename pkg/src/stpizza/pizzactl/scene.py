"""Scene files: parsing with located errors, validation and serialization.

A scene is JSON text whose rationals are strings such as ``"3/2"`` or
``"inf"``.  Geometric scenes list the anchor arcs of both triangles; abstract
charts carry the two pizzas, σ and τ directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..arcspace import Arc, validate_arc
from ..errors import InvalidRational, PizzaError, SceneSyntaxError, UnknownField, ValidationError
from ..exacts import AffineFn, ExpInterval, GPoly, format_exp, format_rational, parse_exp, parse_rational
from ..germmodel import TriangleModel, validate_triangle
from ..pizza import MAXIMUM, MINIMUM, NEITHER, NEXT, NONE, PREV, PizzaData, PizzaSlice, ZoneRecord
from ..sigmatau import (
    MINUS,
    PLUS,
    SigmaTau,
    SignedPair,
    check_tord_tord,
    validate_chart,
)

GEOMETRIC, ABSTRACT = "geometric", "abstract"


@dataclass(frozen=True)
class Scene:
    kind: str
    name: str
    description: str = ""
    T: Optional[TriangleModel] = None
    Tp: Optional[TriangleModel] = None
    chart: Optional[SigmaTau] = None

    @property
    def ambient_dim(self) -> Optional[int]:
        return self.T.ambient_dim if self.T is not None else None


# ---------------------------------------------------------------------------
# reading


def _reject_float(text):
    raise InvalidRational(f"decimal literal {text} is not exact; write rationals as strings")


def _fields(obj, loc: str, required: set, optional: set = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise SceneSyntaxError("expected an object", loc)
    for key in obj:
        if key not in required and key not in optional:
            raise UnknownField(f"unknown field {key!r}", f"{loc}.{key}" if loc else key)
    for key in sorted(required):
        if key not in obj:
            raise SceneSyntaxError(f"missing field {key!r}", loc)
    return obj


def _rational(value, loc: str) -> Fraction:
    if isinstance(value, bool):
        raise InvalidRational("expected a rational", loc)
    if isinstance(value, int):
        return Fraction(value)
    return parse_rational(value, loc)


def _exp(value, loc: str):
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return parse_exp(value, loc)


def _int(value, loc: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SceneSyntaxError("expected an integer", loc)
    return value


def _gpoly(value, loc: str) -> GPoly:
    if not isinstance(value, list):
        raise SceneSyntaxError("a polynomial is a list of [exponent, coefficient] pairs", loc)
    terms = []
    for k, pair in enumerate(value):
        ploc = f"{loc}[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SceneSyntaxError("expected an [exponent, coefficient] pair", ploc)
        terms.append((_rational(pair[0], ploc), _rational(pair[1], ploc)))
    return GPoly(terms)


def _arc(value, dim: int, loc: str) -> Arc:
    if not isinstance(value, list):
        raise SceneSyntaxError("an arc is a list of coordinate polynomials", loc)
    comps = [_gpoly(c, f"{loc}[{i}]") for i, c in enumerate(value)]
    if len(comps) == dim - 1:
        comps = [GPoly.t()] + comps
    if len(comps) != dim:
        raise ValidationError(f"{loc}: arc has {len(comps)} coordinates, ambient dimension is {dim}")
    try:
        return validate_arc(comps)
    except PizzaError as err:
        raise ValidationError(f"{loc}: {err}") from err


def _triangle(value, dim: int, loc: str) -> TriangleModel:
    if not isinstance(value, list):
        raise SceneSyntaxError("a triangle is a list of anchor arcs", loc)
    arcs = [_arc(a, dim, f"{loc}[{i}]") for i, a in enumerate(value)]
    try:
        return validate_triangle(arcs)
    except PizzaError as err:
        raise ValidationError(f"{loc}: {err}") from err


def _choice(value, options, loc: str) -> str:
    if value not in options:
        raise SceneSyntaxError(f"expected one of {sorted(options)}, got {value!r}", loc)
    return value


def _pizza(value, loc: str) -> PizzaData:
    obj = _fields(value, loc, {"slices", "zones"}, {"orientation"})
    slices = []
    for k, sv in enumerate(obj["slices"]):
        sloc = f"{loc}.slices[{k}]"
        s = _fields(sv, sloc, {"beta", "q_prev", "q_next", "mu", "support"})
        mu = _fields(s["mu"], f"{sloc}.mu", {"a", "b"})
        q_prev, q_next = _exp(s["q_prev"], f"{sloc}.q_prev"), _exp(s["q_next"], f"{sloc}.q_next")
        try:
            law = AffineFn(_rational(mu["a"], f"{sloc}.mu.a"), _rational(mu["b"], f"{sloc}.mu.b"),
                           ExpInterval.spanning(q_prev, q_next))
        except PizzaError as err:
            raise ValidationError(f"{sloc}.mu: {err}") from err
        slices.append(PizzaSlice(
            _exp(s["beta"], f"{sloc}.beta"), q_prev, q_next, law,
            _choice(s["support"], {PREV, NEXT, NONE}, f"{sloc}.support"),
        ))
    zones = []
    for k, zv in enumerate(obj["zones"]):
        zloc = f"{loc}.zones[{k}]"
        z = _fields(zv, zloc, {"q", "nu", "kind"})
        zones.append(ZoneRecord(
            _exp(z["q"], f"{zloc}.q"), _exp(z["nu"], f"{zloc}.nu"),
            _choice(z["kind"], {MAXIMUM, MINIMUM, NEITHER}, f"{zloc}.kind"),
        ))
    return PizzaData(tuple(slices), tuple(zones), obj.get("orientation", "forward"))


def _chart(value, loc: str) -> SigmaTau:
    obj = _fields(value, loc, {"pizza_T", "pizza_Tp", "sigma", "tau"})
    sigma = []
    for k, pair in enumerate(obj["sigma"]):
        ploc = f"{loc}.sigma[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SceneSyntaxError("expected [i, i']", ploc)
        sigma.append((_int(pair[0], ploc), _int(pair[1], ploc)))
    tau = []
    for k, triple in enumerate(obj["tau"]):
        ploc = f"{loc}.tau[{k}]"
        if not isinstance(triple, list) or len(triple) != 3:
            raise SceneSyntaxError('expected [l, l\', "+" or "-"]', ploc)
        tau.append(SignedPair(_int(triple[0], ploc), _int(triple[1], ploc),
                              _choice(triple[2], {PLUS, MINUS}, ploc)))
    return SigmaTau(_pizza(obj["pizza_T"], f"{loc}.pizza_T"), _pizza(obj["pizza_Tp"], f"{loc}.pizza_Tp"),
                    tuple(sorted(sigma)), tuple(sorted(tau, key=lambda p: p.l)))


def parse_scene(text: str, validate: bool = True) -> Scene:
    """Parse scene text; raises :class:`SceneParseError` or :class:`ValidationError`."""
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as err:
        raise SceneSyntaxError(err.msg, f"line {err.lineno} column {err.colno}") from err
    obj = _fields(data, "", {"kind", "name"}, {"description", GEOMETRIC, ABSTRACT})
    kind = _choice(obj["kind"], {GEOMETRIC, ABSTRACT}, "kind")
    name = obj["name"]
    if not isinstance(name, str):
        raise SceneSyntaxError("expected a string", "name")
    description = obj.get("description", "")
    if kind not in obj:
        raise SceneSyntaxError(f"missing field {kind!r}", "")
    other = ABSTRACT if kind == GEOMETRIC else GEOMETRIC
    if other in obj:
        raise UnknownField(f"field {other!r} does not belong to a {kind} scene", other)
    if kind == GEOMETRIC:
        g = _fields(obj[GEOMETRIC], GEOMETRIC, {"ambient_dim", "T", "Tp"})
        dim = _int(g["ambient_dim"], "geometric.ambient_dim")
        scene = Scene(kind, name, description,
                      T=_triangle(g["T"], dim, "geometric.T"), Tp=_triangle(g["Tp"], dim, "geometric.Tp"))
    else:
        scene = Scene(kind, name, description, chart=_chart(obj[ABSTRACT], ABSTRACT))
    if validate:
        validate_scene(scene)
    return scene


def validate_scene(scene: Scene) -> None:
    if scene.kind == GEOMETRIC:
        if not check_tord_tord(scene.T, scene.Tp):
            raise ValidationError("boundary arcs of T and T' do not form regular pairs")
    else:
        diags = validate_chart(scene.chart)
        if diags:
            raise ValidationError("; ".join(diags))


def load_scene(path: str, validate: bool = True) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read(), validate)


# ---------------------------------------------------------------------------
# writing


def _gpoly_json(p: GPoly) -> list:
    return [[format_rational(e), format_rational(c)] for e, c in p.terms]


def _arc_json(a: Arc) -> list:
    return [_gpoly_json(c) for c in a.coords.components()[1:]]


def pizza_json(p: PizzaData) -> dict:
    return {
        "orientation": p.orientation,
        "slices": [
            {
                "beta": format_exp(s.beta),
                "q_prev": format_exp(s.q_prev),
                "q_next": format_exp(s.q_next),
                "mu": {"a": format_rational(s.mu.a), "b": format_rational(s.mu.b)},
                "support": s.support,
            }
            for s in p.slices
        ],
        "zones": [{"q": format_exp(z.q), "nu": format_exp(z.nu), "kind": z.kind} for z in p.zones],
    }


def chart_json(st: SigmaTau) -> dict:
    return {
        "pizza_T": pizza_json(st.pizza_T),
        "pizza_Tp": pizza_json(st.pizza_Tp),
        "sigma": [list(pair) for pair in sorted(st.sigma)],
        "tau": [[p.l, p.lp, p.sign] for p in sorted(st.tau, key=lambda p: p.l)],
    }


def scene_json(scene: Scene) -> dict:
    out = {"kind": scene.kind, "name": scene.name}
    if scene.description:
        out["description"] = scene.description
    if scene.kind == GEOMETRIC:
        out[GEOMETRIC] = {
            "ambient_dim": scene.T.ambient_dim,
            "T": [_arc_json(a) for a in scene.T.anchors],
            "Tp": [_arc_json(a) for a in scene.Tp.anchors],
        }
    else:
        out[ABSTRACT] = chart_json(scene.chart)
    return out


def _format(obj, indent: int) -> str:
    flat = json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(", ", ": "))
    if not isinstance(obj, (dict, list)) or len(flat) + indent <= 88 or not obj:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_format(obj[k], indent + 2)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _format(v, indent + 2) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, short lists kept on one line."""
    return _format(obj, 0) + "\n"


def serialize_scene(scene: Scene) -> str:
    return dumps(scene_json(scene))
