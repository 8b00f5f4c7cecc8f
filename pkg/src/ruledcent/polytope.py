"""Moment polytopes of the standard toric actions and their deterministic
SVG / JSON serializations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import SymplecticForm, format_rational_pq, is_hamiltonian_torus
from .errors import NotHamiltonian
from .weights import WeightTable

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Polytope:
    """Quadrilateral moment image: vertices in the order P, Q, R, S and the
    four edges with their homology labels."""

    vertices: tuple[tuple[str, Point], ...]
    edges: tuple[tuple[tuple[str, str], str], ...]

    def vertex(self, name: str) -> Point:
        for vname, pt in self.vertices:
            if vname == name:
                return pt
        raise KeyError(name)


def _class_label(sign: str, k: int) -> str:
    return "B" if k == 0 else f"B{sign}{k}F"


def moment_polytope(form: SymplecticForm, r: int) -> Polytope:
    """Moment image of the index-r torus: a trapezoid with horizontal sides
    at heights 0 and 1, left side vertical, and slanted right side."""
    if not is_hamiltonian_torus(form, r):
        raise NotHamiltonian(f"no Hamiltonian torus of index {r} at lambda = {form.lam}")
    lam = form.lam
    k = r // 2
    zero, one = Fraction(0), Fraction(1)
    if r % 2 == 0:
        top_x, top_label = lam - k, _class_label("-", k)
    else:
        top_x, top_label = lam - (k + 1), _class_label("-", k + 1)
    bottom_label = _class_label("+", k)
    vertices = (
        ("P", (zero, zero)),
        ("Q", (zero, one)),
        ("R", (top_x, one)),
        ("S", (lam + k, zero)),
    )
    edges = (
        (("P", "Q"), "F"),
        (("Q", "R"), top_label),
        (("R", "S"), "F"),
        (("S", "P"), bottom_label),
    )
    return Polytope(vertices, edges)


def polytope_area(p: Polytope) -> Fraction:
    """Shoelace area, exact."""
    pts = [pt for _, pt in p.vertices]
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def polytope_json_dict(p: Polytope) -> dict:
    """JSON form with rationals as p/q strings."""
    return {
        "vertices": [
            {"name": name, "x": format_rational_pq(x), "y": format_rational_pq(y)}
            for name, (x, y) in p.vertices
        ],
        "edges": [
            {"from": a, "to": b, "label": label} for (a, b), label in p.edges
        ],
    }


def _fmt_scaled(x: Fraction) -> str:
    """Decimal string of a rational, exact when terminating, else rounded to
    6 places; trailing zeros stripped. Deterministic, float-free."""
    v = x * 100
    if v.denominator == 1:
        return str(v.numerator)
    scaled = v * 10**6
    # round half away from zero on exact integers
    q, rem = divmod(abs(scaled.numerator), scaled.denominator)
    if 2 * rem >= scaled.denominator:
        q += 1
    sign = "-" if v < 0 else ""
    whole, frac = divmod(q, 10**6)
    text = f"{sign}{whole}.{frac:06d}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def _svg_text(x: str, y: str, content: str) -> str:
    return f'  <text x="{x}" y="{y}" font-size="8">{content}</text>'


def render_svg(p: Polytope, decorations: WeightTable | None = None) -> bytes:
    """Deterministic SVG: one polygon in vertex order, vertex labels (with
    weight pairs when given), edge labels at midpoints. Coordinates are
    scaled by 100 and the viewBox pads the bounding box by 10% per side."""
    xs = [pt[0] for _, pt in p.vertices]
    ys = [pt[1] for _, pt in p.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    w, h = x1 - x0, y1 - y0
    pad_x, pad_y = w / 10, h / 10
    view = " ".join(
        _fmt_scaled(v)
        for v in (x0 - pad_x, y0 - pad_y, w + 2 * pad_x, h + 2 * pad_y)
    )
    points = " ".join(
        f"{_fmt_scaled(pt[0])},{_fmt_scaled(pt[1])}" for _, pt in p.vertices
    )
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}">',
        f'  <polygon points="{points}" fill="none" stroke="black"/>',
    ]
    for name, (x, y) in p.vertices:
        label = name
        if decorations is not None:
            pair = decorations.at(name)
            label = f"{name} {{{pair[0]},{pair[1]}}}"
        lines.append(_svg_text(_fmt_scaled(x), _fmt_scaled(y), label))
    for (a, b), label in p.edges:
        ax, ay = p.vertex(a)
        bx, by = p.vertex(b)
        lines.append(_svg_text(_fmt_scaled((ax + bx) / 2), _fmt_scaled((ay + by) / 2), label))
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
