"""Space-time figure emission: ascii text, plain PBM/PGM rasters, SVG.

The pyramid layout mirrors the hand-drawn style of difference triangles:
row t is one cell shorter than row t-1 and is centered beneath it, so each
child sits visually between its two parents. Raster output uses the plain
(ASCII) portable-bitmap and portable-graymap formats so golden files stay
diffable, and every writer here is deterministic: identical inputs give
byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .eca import EcaDiagram
from .engine import Pyramid
from .patterns import HighlightMask

__all__ = [
    "ALIGNMENTS",
    "FORMATS",
    "PALETTES",
    "RenderSpec",
    "ShapeMismatch",
    "render_ascii",
    "render_compare",
    "render_eca",
    "render_pbm",
    "render_pgm",
    "render_pyramid",
    "render_svg",
]

FORMATS = ("ascii", "pbm", "pgm", "svg")
ALIGNMENTS = ("centered", "left")
PALETTES = ("values", "mask", "grayscale")

FILLED_GLYPH = "#"
EMPTY_GLYPH = "."
_PNM_LINE = 70  # plain-format line length cap


class ShapeMismatch(ValueError):
    """Mask and pyramid shapes disagree."""


@dataclass(frozen=True)
class RenderSpec:
    """How to draw: output format, raster scale, layout and colors.

    ``palette`` picks what unhighlighted cells show: ``"values"`` keeps the
    digits (ascii) or flat fill (svg), ``"mask"`` blanks them to '.', and
    ``"grayscale"`` shades by value, darkest at each row's maximum.
    """

    format: str = "ascii"
    cell_px: int = 1
    alignment: str = "centered"
    palette: str = "values"
    highlight_color: str = "#1a1a1a"
    base_color: str = "#ffffff"
    grid_color: str = "#c8c8c8"

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"format is one of {FORMATS}, got {self.format!r}")
        if self.alignment not in ALIGNMENTS:
            raise ValueError(f"alignment is one of {ALIGNMENTS}, got {self.alignment!r}")
        if self.palette not in PALETTES:
            raise ValueError(f"palette is one of {PALETTES}, got {self.palette!r}")
        if self.cell_px < 1:
            raise ValueError("cell_px is at least 1")


def _check_congruent(p: Pyramid, mask: HighlightMask | None) -> None:
    if mask is not None and not mask.congruent_with(p):
        raise ShapeMismatch(
            f"mask {mask.height}x{mask.base_width} vs pyramid {p.height}x{p.base_width}"
        )


# ---------------------------------------------------------------- ascii


def render_ascii(
    p: Pyramid,
    mask: HighlightMask | None = None,
    spec: RenderSpec | None = None,
) -> str:
    """One text line per generation.

    Centered alignment indents row t by t half-cell widths so children sit
    between their parents. With a mask, matched cells become
    :data:`FILLED_GLYPH`; unmatched cells keep their digits under the
    ``"values"`` palette or turn into '.' under ``"mask"``.
    """
    spec = spec or RenderSpec()
    _check_congruent(p, mask)
    token_rows: list[list[str]] = []
    for t, row in enumerate(p.rows):
        tokens = []
        for i, v in enumerate(row):
            if mask is not None and mask.rows[t][i]:
                tokens.append(FILLED_GLYPH)
            elif mask is not None and spec.palette == "mask":
                tokens.append(EMPTY_GLYPH)
            else:
                tokens.append(str(int(v)))
        token_rows.append(tokens)
    width = max(len(tok) for tokens in token_rows for tok in tokens)
    half = (width + 2) // 2  # half the cell pitch (token + one space), rounded up
    lines = []
    for t, tokens in enumerate(token_rows):
        indent = " " * (t * half) if spec.alignment == "centered" else ""
        lines.append(indent + " ".join(tok.rjust(width) for tok in tokens))
    return "\n".join(lines)


# ------------------------------------------------------------- rasters


def _band_offset(total_px: int, row_px: int, alignment: str) -> int:
    return (total_px - row_px) // 2 if alignment == "centered" else 0


def _mask_grid(mask: HighlightMask, cell_px: int, alignment: str) -> np.ndarray:
    w = mask.base_width * cell_px
    grid = np.zeros((mask.height * cell_px, w), dtype=bool)
    for t, row in enumerate(mask.rows):
        x0 = _band_offset(w, row.size * cell_px, alignment)
        band = np.repeat(row, cell_px)
        grid[t * cell_px : (t + 1) * cell_px, x0 : x0 + band.size] = band[None, :]
    return grid


def _row_grays(row: np.ndarray) -> np.ndarray:
    """Per-row shading: the row maximum is black, zero is white."""
    m = int(row.max())
    if m == 0:
        return np.full(row.size, 255, dtype=np.uint8)
    scaled = (255 * (m - row.astype(np.int64))) // m
    return scaled.astype(np.uint8)


def _gray_grid(p: Pyramid, cell_px: int, alignment: str) -> np.ndarray:
    w = p.base_width * cell_px
    grid = np.full((p.height * cell_px, w), 255, dtype=np.uint8)
    for t, row in enumerate(p.rows):
        x0 = _band_offset(w, row.size * cell_px, alignment)
        band = np.repeat(_row_grays(row), cell_px)
        grid[t * cell_px : (t + 1) * cell_px, x0 : x0 + band.size] = band[None, :]
    return grid


def _serialize_pbm(grid: np.ndarray) -> bytes:
    h, w = grid.shape
    lines = [f"P1\n{w} {h}"]
    for pixel_row in grid:
        bits = "".join("1" if v else "0" for v in pixel_row)
        lines.extend(bits[i : i + _PNM_LINE] for i in range(0, len(bits), _PNM_LINE))
    return ("\n".join(lines) + "\n").encode("ascii")


def _serialize_pgm(grid: np.ndarray) -> bytes:
    h, w = grid.shape
    lines = [f"P2\n{w} {h}\n255"]
    for pixel_row in grid:
        line = ""
        for v in pixel_row:
            tok = str(int(v))
            if not line:
                line = tok
            elif len(line) + 1 + len(tok) <= _PNM_LINE:
                line += " " + tok
            else:
                lines.append(line)
                line = tok
        lines.append(line)
    return ("\n".join(lines) + "\n").encode("ascii")


def render_pbm(mask: HighlightMask, spec: RenderSpec | None = None) -> bytes:
    """Plain portable bitmap of a highlight mask; matched cells are black.

    Each cell becomes a ``cell_px`` square; row t occupies the t-th band,
    centered (or flush left). Output is bit-exact for identical inputs.
    """
    spec = spec or RenderSpec()
    return _serialize_pbm(_mask_grid(mask, spec.cell_px, spec.alignment))


def render_pgm(p: Pyramid, spec: RenderSpec | None = None) -> bytes:
    """Plain portable graymap of an unmasked pyramid, shaded by value."""
    spec = spec or RenderSpec()
    return _serialize_pgm(_gray_grid(p, spec.cell_px, spec.alignment))


# ----------------------------------------------------------------- svg


def _gray_hex(g: int) -> str:
    return f"#{g:02x}{g:02x}{g:02x}"


def _svg_open(w: float, h: float) -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{w:g}" height="{h:g}" viewBox="0 0 {w:g} {h:g}" '
        'shape-rendering="crispEdges">'
    )


def _svg_rect(x: float, y: float, size: int, fill: str, stroke: str | None) -> str:
    edge = f' stroke="{stroke}" stroke-width="1"' if stroke else ""
    return f'<rect x="{x:g}" y="{y:g}" width="{size}" height="{size}" fill="{fill}"{edge}/>'


def _svg_pyramid_rects(
    p: Pyramid,
    mask: HighlightMask | None,
    spec: RenderSpec,
    y_origin: float = 0.0,
    x_origin: float = 0.0,
) -> list[str]:
    cp = spec.cell_px
    w = p.base_width * cp
    stroke = spec.grid_color if cp >= 6 else None
    shade = spec.palette == "grayscale" or (mask is None and spec.palette == "values")
    rects = []
    for t, row in enumerate(p.rows):
        x0 = x_origin + _band_offset_exact(w, row.size * cp, spec.alignment)
        grays = _row_grays(row) if shade else None
        for i, v in enumerate(row):
            if mask is not None and mask.rows[t][i]:
                fill = spec.highlight_color
            elif grays is not None:
                fill = _gray_hex(int(grays[i]))
            else:
                fill = spec.base_color
            rects.append(_svg_rect(x0 + i * cp, y_origin + t * cp, cp, fill, stroke))
    return rects


def _band_offset_exact(total_px: float, row_px: float, alignment: str) -> float:
    return (total_px - row_px) / 2 if alignment == "centered" else 0.0


def render_svg(
    p: Pyramid,
    mask: HighlightMask | None = None,
    spec: RenderSpec | None = None,
) -> str:
    """SVG 1.1 document with one rectangle per cell, emitted row-major.

    Highlighted cells take the highlight color; without a mask the cells
    are shaded by value so the triangle stays readable.
    """
    spec = spec or RenderSpec()
    _check_congruent(p, mask)
    cp = spec.cell_px
    parts = [_svg_open(p.base_width * cp, p.height * cp)]
    parts.extend(_svg_pyramid_rects(p, mask, spec))
    parts.append("</svg>")
    return "\n".join(parts)


def _svg_diagram_rects(
    d: EcaDiagram,
    spec: RenderSpec,
    y_origin: float = 0.0,
    x_origin: float = 0.0,
) -> list[str]:
    cp = spec.cell_px
    stroke = spec.grid_color if cp >= 6 else None
    rects = []
    for t in range(len(d)):
        for i, v in enumerate(d.rows[t]):
            fill = spec.highlight_color if v else spec.base_color
            rects.append(_svg_rect(x_origin + i * cp, y_origin + t * cp, cp, fill, stroke))
    return rects


# ----------------------------------------------------------------- eca


def render_eca(d: EcaDiagram, spec: RenderSpec | None = None) -> str | bytes:
    """Rectangular rendering of an elementary-CA diagram; 1 is ink.

    Dispatches on ``spec.format``: ascii ('#' and '.'), pbm, pgm or svg.
    """
    spec = spec or RenderSpec()
    if spec.format == "ascii":
        return "\n".join(
            "".join(FILLED_GLYPH if v else EMPTY_GLYPH for v in row) for row in d.rows
        )
    if spec.format == "pbm":
        grid = np.kron(d.rows != 0, np.ones((spec.cell_px, spec.cell_px), dtype=bool))
        return _serialize_pbm(grid)
    if spec.format == "pgm":
        gray = np.where(d.rows != 0, 0, 255).astype(np.uint8)
        grid = np.kron(gray, np.ones((spec.cell_px, spec.cell_px), dtype=np.uint8))
        return _serialize_pgm(grid)
    parts = [_svg_open(d.width * spec.cell_px, len(d) * spec.cell_px)]
    parts.extend(_svg_diagram_rects(d, spec))
    parts.append("</svg>")
    return "\n".join(parts)


# ----------------------------------------------------------- dispatch


def render_pyramid(
    p: Pyramid,
    mask: HighlightMask | None = None,
    spec: RenderSpec | None = None,
) -> str | bytes:
    """Render a pyramid in ``spec.format``, with or without a mask."""
    spec = spec or RenderSpec()
    if spec.format == "ascii":
        return render_ascii(p, mask, spec)
    if spec.format == "svg":
        return render_svg(p, mask, spec)
    if spec.format == "pbm":
        if mask is None:
            raise ValueError("pbm renders a highlight mask; supply a pattern")
        _check_congruent(p, mask)
        return render_pbm(mask, spec)
    if mask is not None:
        raise ValueError("pgm renders the unmasked pyramid; drop the pattern")
    return render_pgm(p, spec)


def render_compare(
    d: EcaDiagram,
    p: Pyramid,
    mask: HighlightMask,
    spec: RenderSpec | None = None,
    diagram_label: str = "elementary rule",
    pyramid_label: str = "difference pyramid",
) -> str | bytes:
    """Both panels in one artifact, diagram above pyramid.

    ascii stacks labeled panels; pbm stacks the rasters on a shared
    canvas; svg stacks the cell grids. pgm has no sensible two-panel
    composition and is rejected.
    """
    spec = spec or RenderSpec()
    _check_congruent(p, mask)
    cp = spec.cell_px
    if spec.format == "ascii":
        panel_spec = replace(spec, palette="mask")
        return (
            f"== {diagram_label} ==\n"
            + render_eca(d, replace(spec, format="ascii"))
            + f"\n\n== {pyramid_label} ==\n"
            + render_ascii(p, mask, panel_spec)
        )
    if spec.format == "pbm":
        top = np.kron(d.rows != 0, np.ones((cp, cp), dtype=bool))
        bottom = _mask_grid(mask, cp, spec.alignment)
        w = max(top.shape[1], bottom.shape[1])
        canvas = np.zeros((top.shape[0] + cp + bottom.shape[0], w), dtype=bool)
        x_top = (w - top.shape[1]) // 2
        x_bot = (w - bottom.shape[1]) // 2
        canvas[: top.shape[0], x_top : x_top + top.shape[1]] = top
        canvas[top.shape[0] + cp :, x_bot : x_bot + bottom.shape[1]] = bottom
        return _serialize_pbm(canvas)
    if spec.format == "svg":
        w = max(d.width, p.base_width) * cp
        h = (len(d) + 1 + p.height) * cp
        parts = [_svg_open(w, h)]
        parts.extend(_svg_diagram_rects(d, spec, x_origin=(w - d.width * cp) / 2))
        parts.extend(
            _svg_pyramid_rects(
                p, mask, spec, y_origin=(len(d) + 1) * cp, x_origin=(w - p.base_width * cp) / 2
            )
        )
        parts.append("</svg>")
        return "\n".join(parts)
    raise ValueError("compare artifacts support ascii, pbm or svg")
