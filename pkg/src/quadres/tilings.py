"""Domino tilings of the checkerboard and the parity corollary.

The number of perfect domino tilings of a rows-by-cols board is odd
exactly when the board's light/dark neighbor matrix is invertible mod 2,
which happens exactly when gcd(rows+1, cols+1) = 1.  The count here is an
independent combinatorial oracle: exhaustive backtracking, no determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .checkers import Board, neighbor_matrix

MAX_BRUTE_CELLS = 42


def count_tilings(rows: int, cols: int) -> int:
    """Exact number of perfect domino tilings, by backtracking.

    Cells are covered in scan order: the first uncovered cell tries a
    horizontal then a vertical domino.  Boards over MAX_BRUTE_CELLS cells
    are rejected; use tiling_parity_check for the parity alone.
    """
    if rows < 0 or cols < 0:
        raise ValueError("dimensions must be nonnegative")
    if rows * cols > MAX_BRUTE_CELLS:
        raise ValueError(
            f"{rows}x{cols} exceeds the {MAX_BRUTE_CELLS}-cell brute-force bound; "
            "use tiling_parity_check for parity only"
        )
    if rows * cols % 2 == 1:
        return 0
    if rows == 0 or cols == 0:
        return 1  # empty board: the empty tiling

    full = (1 << (rows * cols)) - 1

    def fill(used: int) -> int:
        if used == full:
            return 1
        i = ((~used & full) & -(~used & full)).bit_length() - 1
        r, c = divmod(i, cols)
        total = 0
        if c + 1 < cols and not used >> (i + 1) & 1:
            total += fill(used | 1 << i | 1 << (i + 1))
        if r + 1 < rows and not used >> (i + cols) & 1:
            total += fill(used | 1 << i | 1 << (i + cols))
        return total

    return fill(0)


@dataclass(frozen=True)
class TilingReport:
    """Tiling parity versus the mod-2 invertibility and gcd criteria."""

    rows: int
    cols: int
    count: int | None
    parity: str  # "even" or "odd"
    gcd_flag: bool  # gcd(rows+1, cols+1) == 1
    rank_full: bool  # neighbor matrix invertible mod 2

    @property
    def consistent(self) -> bool:
        agree = (self.parity == "odd") == self.gcd_flag == self.rank_full
        if self.count is not None:
            agree = agree and (self.count % 2 == 1) == (self.parity == "odd")
        return agree


def tiling_parity_check(rows: int, cols: int) -> TilingReport:
    """Compare tiling-count parity, matrix invertibility, and the gcd condition.

    The exact count is included when the board is within the brute-force
    bound; beyond it the parity is read from the matrix.
    """
    if rows < 1 or cols < 1:
        raise ValueError("dimensions must be positive")
    gcd_flag = math.gcd(rows + 1, cols + 1) == 1
    rank_full = neighbor_matrix(Board(rows=rows, cols=cols)).is_invertible()
    if rows * cols <= MAX_BRUTE_CELLS:
        count = count_tilings(rows, cols)
        parity = "odd" if count % 2 else "even"
    else:
        count = None
        parity = "odd" if rank_full else "even"
    return TilingReport(
        rows=rows,
        cols=cols,
        count=count,
        parity=parity,
        gcd_flag=gcd_flag,
        rank_full=rank_full,
    )
