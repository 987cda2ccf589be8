"""Static SVG scatter of a genus-2 ledger: x = k_2, y = k_1, one marker per
degree class and the diagonal k_1 = k_2 as a guide."""

from __future__ import annotations

from .vanishing import VanishingLedger

SIZE = 520
MARGIN = 50
STYLES = [
    ("black", "circle"),
    ("blue", "triangle"),
    ("red", "square"),
]


def _legend_text(e: int) -> str:
    return "Concentrated in [0]" if e == 0 else f"Concentrated in [0,{e}]"


def _marker(shape: str, x: float, y: float, color: str) -> str:
    if shape == "circle":
        return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="white" stroke="{color}"/>'
    if shape == "triangle":
        pts = f"{x:.2f},{y - 3:.2f} {x - 3:.2f},{y + 2.5:.2f} {x + 3:.2f},{y + 2.5:.2f}"
        return f'<polygon points="{pts}" fill="white" stroke="{color}"/>'
    return (f'<rect x="{x - 2.5:.2f}" y="{y - 2.5:.2f}" width="5" height="5" '
            f'fill="white" stroke="{color}"/>')


def render_svg(ledger: VanishingLedger) -> str:
    if ledger.ctx.g != 2:
        raise ValueError("SVG plots are only drawn for g = 2; use export for higher genus")
    lo, hi = ledger.box.kmin - 1, max(ledger.box.kmax, 0) + 5
    span = hi - lo
    inner = SIZE - 2 * MARGIN

    def sx(k2: int) -> float:
        return MARGIN + (k2 - lo) / span * inner

    def sy(k1: int) -> float:
        return SIZE - MARGIN - (k1 - lo) / span * inner

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>g={ledger.ctx.g} p={ledger.ctx.p} box=[{ledger.box.kmin},{ledger.box.kmax}]</title>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        # axes through the origin
        f'<line x1="{sx(lo):.2f}" y1="{sy(0):.2f}" x2="{sx(hi):.2f}" y2="{sy(0):.2f}" stroke="gray"/>',
        f'<line x1="{sx(0):.2f}" y1="{sy(lo):.2f}" x2="{sx(0):.2f}" y2="{sy(hi):.2f}" stroke="gray"/>',
        f'<text x="{sx(lo):.2f}" y="{sy(0) + 16:.2f}" font-size="12">k_2</text>',
        f'<text x="{sx(0) + 6:.2f}" y="{sy(lo):.2f}" font-size="12">k_1</text>',
        f'<line x1="{sx(lo):.2f}" y1="{sy(lo):.2f}" x2="{sx(hi):.2f}" y2="{sy(hi):.2f}" '
        f'stroke="black" stroke-width="0.8" class="diagonal"/>',
    ]
    for e in range(ledger.ctx.d):
        color, shape = STYLES[e % len(STYLES)]
        out.append(f'<g class="degree-{e}">')
        for k1, k2 in sorted(ledger.concentrated(e)):
            out.append(_marker(shape, sx(k2), sy(k1), color))
        out.append("</g>")
    out.append('<g class="legend">')
    for e in range(ledger.ctx.d):
        color, shape = STYLES[e % len(STYLES)]
        y = MARGIN + 16 * e
        out.append(_marker(shape, MARGIN + 10, y, color))
        out.append(f'<text x="{MARGIN + 20}" y="{y + 4}" font-size="11">{_legend_text(e)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
