"""SVG sketches of the real affine trace (z = 1) of an arrangement.

Floating point only; nothing here feeds back into any exact computation.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .arrangement import Arrangement, ConicSpec, LineSpec

CONIC_SAMPLES = 512
CANVAS = 600
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#e377c2")


class DegenerateWindow(ValueError):
    pass


def parse_window(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise DegenerateWindow(f"window needs four numbers x0,y0,x1,y1, got {text!r}")
    try:
        x0, y0, x1, y1 = (float(p) for p in parts)
    except ValueError:
        raise DegenerateWindow(f"window has a non-numeric entry: {text!r}") from None
    return check_window((x0, y0, x1, y1))


def check_window(window):
    x0, y0, x1, y1 = window
    if not all(math.isfinite(v) for v in window):
        raise DegenerateWindow("window bounds must be finite")
    if x0 == x1 or y0 == y1:
        raise DegenerateWindow("degenerate window: zero width or height")
    return (min(x0, x1), min(y0, y1), max(x0, x1), max(y0, y1))


def line_segment(line: LineSpec, window) -> list[tuple[float, float]]:
    """Two points of the line spanning the window, or [] for the line at infinity."""
    a, b, c = (float(v) for v in line.coefficients)
    x0, y0, x1, y1 = window
    if a == 0 and b == 0:
        return []
    if abs(b) >= abs(a):
        return [(x, -(a * x + c) / b) for x in (x0, x1)]
    return [(-(b * y + c) / a, y) for y in (y0, y1)]


def _param_range(window, center, scale) -> float:
    x0, y0, x1, y1 = window
    reach = max(abs(x0 - center[0]), abs(x1 - center[0]), abs(y0 - center[1]), abs(y1 - center[1]))
    return math.sqrt(2) * reach / max(scale, 1e-12) + 1.0


def conic_branches(conic: ConicSpec, window) -> list[list[tuple[float, float]]]:
    """Polylines sampling the real affine points of a smooth conic."""
    A, B, C, D, E, F = (float(v) for v in conic.coefficients)
    Q = np.array([[A, D / 2], [D / 2, B]])
    L = np.array([E, F])
    evals, evecs = np.linalg.eigh(Q)
    n = CONIC_SAMPLES
    if abs(np.linalg.det(Q)) > 1e-12 * max(1.0, np.abs(Q).max() ** 2):
        center = -np.linalg.solve(Q, L) / 2
        g = C + L @ center / 2
        l1, l2 = evals
        if l1 * l2 > 0:
            if -g / l1 <= 0:
                return []
            a, b = math.sqrt(-g / l1), math.sqrt(-g / l2)
            th = np.linspace(0, 2 * math.pi, n)
            u = np.stack([a * np.cos(th), b * np.sin(th)])
            pts = (evecs @ u).T + center
            return [[tuple(p) for p in pts]]
        # hyperbola: the axis whose eigenvalue has sign opposite to g carries the vertices
        i, j = (0, 1) if -g / l1 > 0 else (1, 0)
        a, b = math.sqrt(-g / evals[i]), math.sqrt(g / evals[j])
        S = math.asinh(_param_range(window, center, min(a, b)))
        s = np.linspace(-S, S, n // 2)
        out = []
        for sign in (1, -1):
            u = np.zeros((2, len(s)))
            u[i] = sign * a * np.cosh(s)
            u[j] = b * np.sinh(s)
            pts = (evecs @ u).T + center
            out.append([tuple(p) for p in pts])
        return out
    # parabola: Q = l v v^T, w spans the kernel
    k = int(np.argmax(np.abs(evals)))
    lam, v, w = evals[k], evecs[:, k], evecs[:, 1 - k]
    lv, lw = L @ v, L @ w
    if abs(lw) < 1e-15:
        return []
    # |s| <= |p| for every point p = s v + u w, so this covers the window
    S = _param_range(window, (0.0, 0.0), 1.0)
    s = np.linspace(-S, S, n)
    u = -(lam * s * s + lv * s + C) / lw
    pts = np.outer(s, v) + np.outer(u, w)
    return [[tuple(p) for p in pts]]


def render_svg(arr: Arrangement, window, points=(), unmarked=()) -> str:
    """SVG 1.1 text; ``points`` are affine (x, y) markers, ``unmarked`` textual notes."""
    x0, y0, x1, y1 = check_window(window)
    w = CANVAS
    h = max(1, round(CANVAS * (y1 - y0) / (x1 - x0)))
    sx, sy = w / (x1 - x0), h / (y1 - y0)

    def to_px(p):
        return (p[0] - x0) * sx, (y1 - p[1]) * sy

    def path(pts):
        coords = [to_px(p) for p in pts]
        return "M " + " L ".join(f"{x:.3f},{y:.3f}" for x, y in coords)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f"<title>real affine trace, window {x0:g},{y0:g},{x1:g},{y1:g}</title>",
        '<defs><clipPath id="win"><rect x="0" y="0" '
        f'width="{w}" height="{h}"/></clipPath></defs>',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black"/>',
        '<g clip-path="url(#win)" fill="none" stroke-width="1.5">',
    ]
    for idx, comp in enumerate(arr.components):
        color = COLORS[idx % len(COLORS)]
        label = escape(arr.component_label(idx))
        if comp.degree == 1:
            seg = line_segment(comp, (x0, y0, x1, y1))
            polys = [seg] if seg else []
        else:
            polys = conic_branches(comp, (x0, y0, x1, y1))
        for poly in polys:
            out.append(f'<path class="component" id="{label}" stroke="{color}" d="{path(poly)}"/>')
    out.append("</g>")
    for p in points:
        if x0 <= p[0] <= x1 and y0 <= p[1] <= y1:
            cx, cy = to_px(p)
            out.append(f'<circle class="singular" cx="{cx:.3f}" cy="{cy:.3f}" r="4" fill="black"/>')
    if unmarked:
        out.append("<desc>" + escape("; ".join(unmarked)) + "</desc>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
