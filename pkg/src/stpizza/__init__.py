"""Exact outer-Lipschitz invariants of pairs of Hölder triangles."""

from .arcspace import Arc, make_arc, tord, validate_arc
from .exacts import INF, AffineFn, ExpInterval, GPoly
from .germmodel import ArcLoc, TriangleModel, distance_order, eval_arc, nearest_arc, validate_triangle
from .pizza import PizzaData, PizzaSlice, ZoneRecord, build_minimal_pizza, is_elementary, pizza_equivalent
from .sigmatau import SigmaTau, SignedPair, graph_representable, sigma_tau_from_triangles, st_equivalent

__all__ = [
    "INF", "GPoly", "AffineFn", "ExpInterval",
    "Arc", "make_arc", "validate_arc", "tord",
    "ArcLoc", "TriangleModel", "validate_triangle", "eval_arc", "distance_order", "nearest_arc",
    "PizzaData", "PizzaSlice", "ZoneRecord", "build_minimal_pizza", "is_elementary", "pizza_equivalent",
    "SigmaTau", "SignedPair", "sigma_tau_from_triangles", "st_equivalent", "graph_representable",
]
