"""SVG link diagrams: the link of T on top, the link of T′ below.

Zones are drawn as disks whose radius shrinks as the order grows, so higher
contact looks tighter.  Maximum zones paired by σ are joined by a line
labelled with their common order; slices paired by τ are joined by a shaded
band, drawn crossed when the pair is negatively oriented.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from ..exacts import format_exp, is_inf

WIDTH, HEIGHT = 760, 360
LEFT, RIGHT = 70, 690
Y_T, Y_TP = 90, 270


def _xs(n_zones: int) -> list[float]:
    if n_zones == 1:
        return [(LEFT + RIGHT) / 2]
    step = (RIGHT - LEFT) / (n_zones - 1)
    return [LEFT + k * step for k in range(n_zones)]


def _radius(q) -> float:
    return 3.0 if is_inf(q) else max(3.0, 26.0 / float(q))


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _text(x, y, s, size=12, anchor="middle", cls="label") -> str:
    return (f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" text-anchor="{anchor}" '
            f'class="{cls}">{escape(s)}</text>')


def _link(label: str, pizza, y: float, above: bool) -> list[str]:
    xs = _xs(len(pizza.zones))
    out = [f'<line x1="{LEFT}" y1="{y}" x2="{RIGHT}" y2="{y}" stroke="black" stroke-width="2"/>',
           _text(LEFT - 40, y + 4, label, 16, "start")]
    dy = -1 if above else 1
    for ell, s in enumerate(pizza.slices, 1):
        mid = (xs[ell - 1] + xs[ell]) / 2
        out.append(_text(mid, y + dy * 34, f"T{ell}: β={format_exp(s.beta)}", 11))
    for k, z in enumerate(pizza.zones):
        fill = "#c44" if z.kind == "maximum" else "#48c" if z.kind == "minimum" else "#999"
        out.append(f'<circle cx="{_fmt(xs[k])}" cy="{y}" r="{_fmt(_radius(z.q))}" fill="{fill}" '
                   f'fill-opacity="0.45" stroke="{fill}"/>')
        out.append(_text(xs[k], y + dy * 16 + (4 if not above else 0), f"q={format_exp(z.q)}", 10))
    return out


def render_svg(report) -> str:
    pT, pTp = report.st.pizza_T, report.st.pizza_Tp
    xT, xTp = _xs(len(pT.zones)), _xs(len(pTp.zones))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        _text(WIDTH / 2, 24, f"{report.name}", 16, cls="title"),
    ]
    for pair in report.st.tau:
        a, b = xT[pair.l - 1], xT[pair.l]
        c, d = xTp[pair.lp - 1], xTp[pair.lp]
        if pair.sign == "-":
            c, d = d, c
        pts = f"{_fmt(a)},{Y_T} {_fmt(b)},{Y_T} {_fmt(d)},{Y_TP} {_fmt(c)},{Y_TP}"
        parts.append(f'<polygon points="{pts}" fill="#8a8" fill-opacity="0.25" stroke="#686" '
                     f'stroke-width="0.8"/>')
        mid_x = (a + b + c + d) / 4
        parts.append(_text(mid_x, (Y_T + Y_TP) / 2 + 14, f"τ {pair.sign}", 11))
    maxT, maxTp = pT.maximum_zones(), pTp.maximum_zones()
    for i, ip in sorted(report.st.sigma):
        x1, x2 = xT[maxT[i - 1]], xTp[maxTp[ip - 1]]
        q = pT.zones[maxT[i - 1]].q
        parts.append(f'<line x1="{_fmt(x1)}" y1="{Y_T}" x2="{_fmt(x2)}" y2="{Y_TP}" stroke="#c44" '
                     f'stroke-dasharray="5,3"/>')
        parts.append(_text((x1 + x2) / 2 + 8, (Y_T + Y_TP) / 2 - 6, format_exp(q), 11, "start"))
    parts += _link("T", pT, Y_T, True)
    parts += _link("T′", pTp, Y_TP, False)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
