from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from stpizza.arcspace import make_arc
from stpizza.corpus import CORPUS_DIR, load
from stpizza.exacts import GPoly

FIXTURES = Path(__file__).parent / "fixtures"

# small exponent grid with mixed denominators keeps orders interesting
EXPONENTS = [Fraction(n, d) for d in (1, 2, 3) for n in range(d, 4 * d + 1)]

exponents = st.sampled_from(sorted(set(EXPONENTS)))
coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def gpolys(draw, max_terms: int = 3):
    terms = draw(st.lists(st.tuples(exponents, coefficients), max_size=max_terms))
    return GPoly(terms)


@st.composite
def arcs(draw, dim: int = 3):
    return make_arc(*[draw(gpolys()) for _ in range(dim - 1)])


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS_DIR


@pytest.fixture(scope="session")
def corpus():
    return load


@pytest.fixture(scope="session")
def partial_hover():
    from stpizza.pizzactl.scene import load_scene

    return load_scene(str(FIXTURES / "partial-hover.json"), validate=False)


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in criterion order."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], props["title"], outcome, rep.duration))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(rows):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}  ({duration:.1f}s)")
