"""Minimal deterministic SVG output.

Every coordinate is formatted with a fixed number of decimals and elements
are emitted in construction order, so identical inputs produce
byte-identical files.  Math coordinates have y pointing up; the canvas
flips y on output.
"""

from __future__ import annotations

from .domain import Vec

_FMT = "{:.6f}"


def _f(x: float) -> str:
    s = _FMT.format(x)
    return "0.000000" if s == "-0.000000" else s


class SvgCanvas:
    """A square canvas over the math window [-half, half]^2."""

    def __init__(self, half_extent: float, size_px: int = 640) -> None:
        self.half = half_extent
        self.size = size_px
        self.elements: list[str] = []

    def _pt(self, p: Vec) -> str:
        return f"{_f(p[0])},{_f(-p[1])}"

    def comment(self, text: str) -> None:
        self.elements.append(f"<!-- {text} -->")

    def polyline(self, points: list[Vec], stroke: str = "#000000",
                 width: float = 0.01, closed: bool = False) -> None:
        tag = "polygon" if closed else "polyline"
        pts = " ".join(self._pt(p) for p in points)
        self.elements.append(
            f'<{tag} points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_f(width)}"/>'
        )

    def polygon(self, points: list[Vec], stroke: str = "#000000",
                width: float = 0.01, fill: str = "none") -> None:
        pts = " ".join(self._pt(p) for p in points)
        self.elements.append(
            f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="{_f(width)}"/>'
        )

    def circle(self, center: Vec, r: float, stroke: str = "#000000",
               width: float = 0.01, fill: str = "none") -> None:
        self.elements.append(
            f'<circle cx="{_f(center[0])}" cy="{_f(-center[1])}" r="{_f(r)}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="{_f(width)}"/>'
        )

    def dot(self, center: Vec, r: float, fill: str = "#c02020") -> None:
        self.elements.append(
            f'<circle cx="{_f(center[0])}" cy="{_f(-center[1])}" r="{_f(r)}" '
            f'fill="{fill}" stroke="none"/>'
        )

    def text(self, anchor: Vec, s: str, font_size: float,
             color: str = "#000000") -> None:
        self.elements.append(
            f'<text x="{_f(anchor[0])}" y="{_f(-anchor[1])}" '
            f'font-size="{_f(font_size)}" font-family="monospace" '
            f'fill="{color}">{s}</text>'
        )

    def tostring(self) -> str:
        h = self.half
        header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{self.size}" height="{self.size}" '
            f'viewBox="{_f(-h)} {_f(-h)} {_f(2 * h)} {_f(2 * h)}">\n'
        )
        body = "\n".join(self.elements)
        return header + body + "\n</svg>\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.tostring())
