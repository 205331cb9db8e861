"""Reference elementary cellular automaton (radius-1 binary, Wolfram numbering).

Used to regenerate classic rule diagrams next to difference-pyramid
highlights. Bit k of the rule number is the successor of the neighborhood
whose (left, center, right) bits encode the value k, so rule 90 is
"left XOR right" and rule 0 maps everything to 0.

Unlike the shrinking difference pyramid, these diagrams keep a constant
width, so edges need a boundary policy: ``"zero"`` supplies 0 for the
missing neighbors (an explicit sea of zeros), ``"periodic"`` wraps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .engine import RowLike, as_row, pascal_mod2
from .patterns import HighlightMask

__all__ = [
    "BOUNDARIES",
    "EcaDiagram",
    "EcaRule",
    "NonBinaryCell",
    "OutOfRange",
    "eca_evolve",
    "eca_step",
    "impulse_agreement",
    "impulse_row",
    "rule_table",
]

BOUNDARIES = ("zero", "periodic")


class OutOfRange(ValueError):
    """Rule number outside 0..255."""


class NonBinaryCell(ValueError):
    """Elementary rules are defined on {0, 1} cells only."""


@dataclass(frozen=True)
class EcaRule:
    """A rule number with its expanded 8-entry lookup table.

    ``table[k]`` is the successor bit of the neighborhood
    ``k = 4*left + 2*center + right``.
    """

    number: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != 8 or any(b not in (0, 1) for b in self.table):
            raise ValueError("rule table has exactly 8 binary entries")
        encoded = sum(b << k for k, b in enumerate(self.table))
        if encoded != self.number:
            raise ValueError(f"table encodes rule {encoded}, not {self.number}")


def rule_table(number: int) -> EcaRule:
    """Expand a Wolfram rule number into its lookup table."""
    number = int(number)
    if not 0 <= number <= 255:
        raise OutOfRange(f"rule numbers run 0..255, got {number}")
    return EcaRule(number, tuple((number >> k) & 1 for k in range(8)))


RuleLike = Union[int, EcaRule]


def _as_rule(rule: RuleLike) -> EcaRule:
    return rule if isinstance(rule, EcaRule) else rule_table(rule)


def _as_binary_row(row: RowLike) -> np.ndarray:
    r = as_row(row)
    if (r > 1).any():
        raise NonBinaryCell("elementary rows hold only 0 and 1")
    return r.astype(np.uint8)


def impulse_row(width: int, index: int | None = None) -> np.ndarray:
    """A row of zeros with a single 1 (centered unless ``index`` is given)."""
    if width < 1:
        raise ValueError("width is at least 1")
    hot = width // 2 if index is None else index
    if not 0 <= hot < width:
        raise ValueError(f"impulse index {hot} outside a width-{width} row")
    row = np.zeros(width, dtype=np.uint8)
    row[hot] = 1
    return row


def eca_step(row: RowLike, rule: RuleLike, boundary: str = "zero") -> np.ndarray:
    """One synchronous update; the width never changes."""
    r = _as_binary_row(row)
    rl = _as_rule(rule)
    if boundary == "zero":
        padded = np.pad(r, 1, mode="constant")
    elif boundary == "periodic":
        padded = np.pad(r, 1, mode="wrap")
    else:
        raise ValueError(f"boundary is one of {BOUNDARIES}, got {boundary!r}")
    idx = (padded[:-2] << 2) | (padded[1:-1] << 1) | padded[2:]
    return np.asarray(rl.table, dtype=np.uint8)[idx]


@dataclass(frozen=True)
class EcaDiagram:
    """Constant-width space-time diagram: ``rows[t]`` is generation t."""

    rows: np.ndarray  # shape (generations + 1, width), uint8
    rule: EcaRule
    boundary: str

    @property
    def width(self) -> int:
        return self.rows.shape[1]

    @property
    def generations(self) -> int:
        return self.rows.shape[0] - 1

    def __len__(self) -> int:
        return self.rows.shape[0]


def eca_evolve(
    initial: RowLike,
    rule: RuleLike,
    generations: int,
    boundary: str = "zero",
) -> EcaDiagram:
    """Evolve ``initial`` for ``generations`` steps; row 0 is the input."""
    if generations < 0:
        raise ValueError("generations is non-negative")
    rl = _as_rule(rule)
    first = _as_binary_row(initial)
    rows = np.zeros((generations + 1, first.size), dtype=np.uint8)
    rows[0] = first
    for t in range(generations):
        rows[t + 1] = eca_step(rows[t], rl, boundary)
    rows.setflags(write=False)
    return EcaDiagram(rows, rl, boundary)


def impulse_agreement(mask: HighlightMask, impulse_index: int) -> tuple[float, float]:
    """Cone-cell agreement of a highlight mask against the binomial parity.

    For a pyramid grown from an impulse input (lone 1 at ``impulse_index``),
    the cells that can depend on the impulse in generation t sit at indices
    ``impulse_index - t + k`` for k = 0..t, and carry ``binomial(t, k) mod 2``.
    Returns ``(direct, complement)``: the fraction of existing cone cells
    where the mask equals that parity, and where it equals its negation.
    Either ratio at 1.0 certifies an exact structural reproduction.
    """
    j0 = int(impulse_index)
    total = direct = complement = 0
    for t, row in enumerate(mask.rows):
        for k in range(t + 1):
            i = j0 - t + k
            if 0 <= i < row.size:
                bit = pascal_mod2(t, k)
                total += 1
                if bool(row[i]) == bool(bit):
                    direct += 1
                else:
                    complement += 1
    if total == 0:
        raise ValueError("no cone cells: impulse index outside the pyramid")
    return direct / total, complement / total
