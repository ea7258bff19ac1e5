"""Pipeline orchestration and deterministic text/JSON reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..exacts import format_exp, format_rational
from ..pizza import PizzaData, check_width_axioms, is_elementary
from ..sigmatau import SigmaTau, Verdict, graph_representable, sigma_tau_from_triangles, st_difference
from .render import render_svg
from .scene import GEOMETRIC, Scene, chart_json, dumps


@dataclass(frozen=True)
class Report:
    name: str
    kind: str
    st: SigmaTau
    elementary_T: bool
    elementary_Tp: bool
    verdict: Optional[Verdict] = None
    diagnostics: tuple = field(default_factory=tuple)


def run_pipeline(scene: Scene) -> Report:
    if scene.kind == GEOMETRIC:
        st = sigma_tau_from_triangles(scene.T, scene.Tp)
        verdict = graph_representable(scene.T, scene.Tp)
    else:
        st, verdict = scene.chart, None
    diags = [f"T: {d}" for d in check_width_axioms(st.pizza_T)]
    diags += [f"T': {d}" for d in check_width_axioms(st.pizza_Tp)]
    return Report(scene.name, scene.kind, st, is_elementary(st.pizza_T), is_elementary(st.pizza_Tp),
                  verdict, tuple(diags))


def compare_reports(a: Report, b: Report) -> str:
    diff = st_difference(a.st, b.st)
    return "equivalent" if diff is None else f"not equivalent: {diff}"


def report_json(r: Report) -> dict:
    out = {
        "name": r.name,
        "kind": r.kind,
        "sigma_tau": chart_json(r.st),
        "elementary": {"T": r.elementary_T, "Tp": r.elementary_Tp},
        "diagnostics": list(r.diagnostics),
    }
    if r.verdict is not None:
        out["graph_representable"] = {"answer": r.verdict.answer, "reason": r.verdict.reason}
    return out


def _law(s) -> str:
    if s.is_point:
        return format_exp(s.mu(s.q_prev))
    a, b = s.mu.a, s.mu.b
    head = "q" if a == 1 else f"{format_rational(a)}q"
    if b == 0:
        return head
    return f"{head} {'+' if b > 0 else '-'} {format_rational(abs(b))}"


def _pizza_lines(label: str, p: PizzaData) -> list[str]:
    lines = [f"pizza on {label}: {len(p.slices)} slice(s)"]
    lines.append(f"  {'slice':>5}  {'beta':>6}  {'Q':>12}  {'mu':>10}  support")
    for ell, s in enumerate(p.slices, 1):
        q = (
            f"{{{format_exp(s.q_prev)}}}"
            if s.is_point
            else f"{format_exp(s.q_prev)} -> {format_exp(s.q_next)}"
        )
        lines.append(f"  {ell:>5}  {format_exp(s.beta):>6}  {q:>12}  {_law(s):>10}  {s.support}")
    lines.append(f"  {'zone':>5}  {'q':>6}  {'nu':>6}  kind")
    for k, z in enumerate(p.zones):
        lines.append(f"  {k:>5}  {format_exp(z.q):>6}  {format_exp(z.nu):>6}  {z.kind}")
    return lines


def report_text(r: Report) -> str:
    lines = [f"scene {r.name} ({r.kind})", ""]
    lines += _pizza_lines("T", r.st.pizza_T)
    lines.append("")
    lines += _pizza_lines("T'", r.st.pizza_Tp)
    lines.append("")
    sigma = ", ".join(f"{i}->{ip}" for i, ip in sorted(r.st.sigma)) or "(no maximum zones)"
    tau = ", ".join(f"({p.l},{p.lp},{p.sign})" for p in r.st.tau) or "(all slices transversal)"
    lines.append(f"sigma: {sigma}")
    lines.append(f"tau:   {tau}")
    lines.append(f"elementary: T {'yes' if r.elementary_T else 'no'}, T' {'yes' if r.elementary_Tp else 'no'}")
    if r.verdict is not None:
        lines.append(f"graph representable: {r.verdict.answer} ({r.verdict.reason})")
    for d in r.diagnostics:
        lines.append(f"diagnostic: {d}")
    return "\n".join(lines) + "\n"


def render_report(r: Report, fmt: str) -> str:
    if fmt == "json":
        return dumps(report_json(r))
    if fmt == "svg":
        return render_svg(r)
    return report_text(r)
