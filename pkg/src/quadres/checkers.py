"""The parity-checkers puzzle on an (m-1)-by-(n-1) checkerboard.

Squares are addressed 0-based as (col, row) with row 0 at the bottom; the
lower-left square (0, 0) is dark, so a square is dark exactly when
col + row is even.  A puzzle is a set of pebbles on light squares; a
solution is a set of checkers on dark squares such that the light squares
with an odd number of orthogonally adjacent checkers are exactly the
pebbled ones.  Counting mod 2 this is a linear map, and the board
coordinates are the billiard lattice points shifted by (-1, -1): square
(col, row) sits at lattice point (col+1, row+1) of the m-by-n rectangle.

Three solvers are provided: the greedy top-to-bottom "light chasing" pass
combined with the billiards two-coloring for the bottom-row residue, a
bit-packed Gaussian elimination over GF(2), and (for gcd > 1 boards) the
kernel construction from the once-visited billiard points.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .billiards import Rect, bottom_bounce_times, crossings, kernel_checkers, trace_path, two_color_checkers
from .symbols import SymbolEvidence


class PuzzleNotUniquelySolvable(ValueError):
    """Raised when gcd(m, n) > 1 and the puzzle has zero or many solutions."""


Square = tuple[int, int]

_ORTHO = ((-1, 0), (1, 0), (0, -1), (0, 1))


@dataclass(frozen=True)
class Board:
    """An (m-1)-by-(n-1) checkerboard: rows = m-1, cols = n-1 (possibly 0)."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"board dimensions must be nonnegative, got {self.rows}x{self.cols}")

    def is_dark(self, col: int, row: int) -> bool:
        return (col + row) % 2 == 0

    def in_bounds(self, col: int, row: int) -> bool:
        return 0 <= col < self.cols and 0 <= row < self.rows

    def light_squares(self) -> list[Square]:
        """Light squares in row-major order, bottom row first."""
        return [(c, r) for r in range(self.rows) for c in range(self.cols) if (c + r) % 2 == 1]

    def dark_squares(self) -> list[Square]:
        """Dark squares in row-major order, bottom row first."""
        return [(c, r) for r in range(self.rows) for c in range(self.cols) if (c + r) % 2 == 0]

    def neighbors(self, col: int, row: int) -> list[Square]:
        return [(col + dc, row + dr) for dc, dr in _ORTHO if self.in_bounds(col + dc, row + dr)]


def _validate_support(board: Board, squares: frozenset[Square], dark: bool, kind: str) -> None:
    for col, row in squares:
        if not board.in_bounds(col, row):
            raise ValueError(f"{kind} square {(col, row)} outside {board.rows}x{board.cols} board")
        if board.is_dark(col, row) != dark:
            shade = "dark" if dark else "light"
            raise ValueError(f"{kind} square {(col, row)} is not a {shade} square")


@dataclass(frozen=True)
class PebbleSet:
    """A mod-2 configuration on the light squares."""

    board: Board
    squares: frozenset[Square]

    def __post_init__(self) -> None:
        _validate_support(self.board, self.squares, dark=False, kind="pebble")

    def __xor__(self, other: "PebbleSet") -> "PebbleSet":
        if other.board != self.board:
            raise ValueError("cannot combine configurations on different boards")
        return PebbleSet(self.board, self.squares ^ other.squares)

    def bits(self) -> tuple[int, ...]:
        """0/1 vector over light squares in board order."""
        return tuple(1 if sq in self.squares else 0 for sq in self.board.light_squares())


@dataclass(frozen=True)
class CheckerSet:
    """A mod-2 configuration on the dark squares."""

    board: Board
    squares: frozenset[Square]

    def __post_init__(self) -> None:
        _validate_support(self.board, self.squares, dark=True, kind="checker")

    def __xor__(self, other: "CheckerSet") -> "CheckerSet":
        if other.board != self.board:
            raise ValueError("cannot combine configurations on different boards")
        return CheckerSet(self.board, self.squares ^ other.squares)

    def bits(self) -> tuple[int, ...]:
        """0/1 vector over dark squares in board order."""
        return tuple(1 if sq in self.squares else 0 for sq in self.board.dark_squares())


def pebbles(board: Board, *squares: Square) -> PebbleSet:
    return PebbleSet(board, frozenset(squares))


def checkers_at(board: Board, *squares: Square) -> CheckerSet:
    return CheckerSet(board, frozenset(squares))


def bottom_row_puzzle(board: Board) -> PebbleSet:
    """Pebbles on every light square of the bottom row."""
    return PebbleSet(board, frozenset((c, 0) for c in range(1, board.cols, 2) if board.rows > 0))


def left_column_puzzle(board: Board) -> PebbleSet:
    """Pebbles on every light square of the leftmost column."""
    return PebbleSet(board, frozenset((0, r) for r in range(1, board.rows, 2) if board.cols > 0))


def apply_checkers(c: CheckerSet) -> PebbleSet:
    """The puzzle a checker configuration solves.

    A light square gets a pebble exactly when an odd number of its (up to
    four) orthogonal neighbors carry checkers; every orthogonal neighbor of
    a light square is dark, so this is well defined.
    """
    board = c.board
    lit: set[Square] = set()
    for col, row in c.squares:
        for nbr in board.neighbors(col, row):
            if nbr in lit:
                lit.discard(nbr)
            else:
                lit.add(nbr)
    return PebbleSet(board, frozenset(lit))


def light_chase(p: PebbleSet) -> tuple[CheckerSet, PebbleSet]:
    """Greedy pass: satisfy every light square above the bottom row.

    Rows are processed top to bottom; whenever a light square's parity
    constraint is still wrong, a checker goes on the square directly below
    it.  Returns (partial, residual) with residual = p XOR
    apply_checkers(partial), supported on the bottom row only.
    """
    board = p.board
    placed: set[Square] = set()
    for row in range(board.rows - 1, 0, -1):
        for col in range(board.cols):
            if board.is_dark(col, row):
                continue
            parity = sum(1 for nbr in board.neighbors(col, row) if nbr in placed) % 2
            want = 1 if (col, row) in p.squares else 0
            if parity != want:
                placed.add((col, row - 1))
    partial = CheckerSet(board, frozenset(placed))
    return partial, p ^ apply_checkers(partial)


def solve_single_pebble(m: int, n: int, k: int) -> CheckerSet:
    """Solution of the puzzle with one pebble at bottom-row square 2k.

    Built from the billiards two-coloring: checkers go on the board squares
    of the path self-crossings that straddle the bottom bounce at (2k, 0),
    after the (-1, -1) shift from lattice points to squares.  The resulting
    pebble is at 0-based column 2k-1.
    """
    if math.gcd(m, n) != 1:
        raise PuzzleNotUniquelySolvable(f"gcd({m}, {n}) > 1")
    points = two_color_checkers(Rect(m=m, n=n), k)
    board = Board(rows=m - 1, cols=n - 1)
    return CheckerSet(board, frozenset((x - 1, y - 1) for x, y in points))


def solve(p: PebbleSet) -> CheckerSet:
    """The unique solution of a pebble puzzle on a coprime board.

    Light chasing reduces the puzzle to a bottom-row residual; the residual
    is then cleared by superposing single-pebble solutions, all read off
    one traced path (a crossing ends up with a checker when it straddles an
    odd number of the chosen bottom bounces).
    """
    board = p.board
    m, n = board.rows + 1, board.cols + 1
    if math.gcd(m, n) != 1:
        raise PuzzleNotUniquelySolvable(f"board {board.rows}x{board.cols} has gcd({m}, {n}) > 1")
    partial, residual = light_chase(p)
    acc = set(partial.squares)
    if residual.squares:
        path = trace_path(Rect(m=m, n=n))
        times = bottom_bounce_times(path)
        cuts = sorted(times[col + 1] for col, _ in residual.squares)
        for c in crossings(path):
            if (bisect_left(cuts, c.t2) - bisect_right(cuts, c.t1)) % 2:
                sq = (c.x - 1, c.y - 1)
                if sq in acc:
                    acc.discard(sq)
                else:
                    acc.add(sq)
    return CheckerSet(board, frozenset(acc))


class Mod2Matrix:
    """Dense matrix over GF(2) with bit-packed rows (bit j of row i = entry ij)."""

    def __init__(self, rows: int, cols: int, data: list[int]):
        if len(data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self.data = list(data)

    def entry(self, i: int, j: int) -> int:
        return self.data[i] >> j & 1

    def solve(self, rhs: int) -> "Gf2Solution":
        """Gauss-Jordan on the augmented system; pivots take the lowest available row."""
        aug = [self.data[i] | ((rhs >> i & 1) << self.cols) for i in range(self.rows)]
        pivots: list[int] = []
        row = 0
        for col in range(self.cols):
            sel = next((r for r in range(row, self.rows) if aug[r] >> col & 1), None)
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            for r in range(self.rows):
                if r != row and aug[r] >> col & 1:
                    aug[r] ^= aug[row]
            pivots.append(col)
            row += 1
        # Non-pivot rows are zero in every column, so only their rhs bit matters.
        consistent = all(aug[r] >> self.cols & 1 == 0 for r in range(row, self.rows))
        particular = None
        if consistent:
            particular = 0
            for i, col in enumerate(pivots):
                if aug[i] >> self.cols & 1:
                    particular |= 1 << col
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = 1 << free
            for i, col in enumerate(pivots):
                if aug[i] >> free & 1:
                    v |= 1 << col
            basis.append(v)
        return Gf2Solution(consistent=consistent, particular=particular, kernel_basis=tuple(basis), rank=len(pivots))

    def rank(self) -> int:
        return self.solve(0).rank

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


@dataclass(frozen=True)
class Gf2Solution:
    """Raw elimination outcome: bit-packed vectors over the column index."""

    consistent: bool
    particular: int | None
    kernel_basis: tuple[int, ...]
    rank: int

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel_basis


def neighbor_matrix(board: Board) -> Mod2Matrix:
    """The light-by-dark adjacency matrix of the checker-to-pebble map."""
    lights = board.light_squares()
    darks = board.dark_squares()
    index = {sq: j for j, sq in enumerate(darks)}
    data = []
    for col, row in lights:
        bits = 0
        for nbr in board.neighbors(col, row):
            bits |= 1 << index[nbr]
        data.append(bits)
    return Mod2Matrix(rows=len(lights), cols=len(darks), data=data)


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of the elimination solver.

    Exactly one of three shapes: unique solution; singular but consistent
    (a particular solution plus a nonempty kernel basis); or inconsistent
    (no solution, kernel basis still reported).
    """

    board: Board
    consistent: bool
    solution: CheckerSet | None
    kernel_basis: tuple[CheckerSet, ...]

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel_basis


def _unpack(board: Board, bits: int) -> CheckerSet:
    darks = board.dark_squares()
    return CheckerSet(board, frozenset(sq for j, sq in enumerate(darks) if bits >> j & 1))


def solve_elimination(p: PebbleSet) -> EliminationResult:
    """Solve a pebble puzzle by GF(2) elimination, independent of the geometry."""
    board = p.board
    matrix = neighbor_matrix(board)
    rhs = 0
    for i, bit in enumerate(p.bits()):
        if bit:
            rhs |= 1 << i
    raw = matrix.solve(rhs)
    return EliminationResult(
        board=board,
        consistent=raw.consistent,
        solution=_unpack(board, raw.particular) if raw.particular is not None else None,
        kernel_basis=tuple(_unpack(board, v) for v in raw.kernel_basis),
    )


def kernel_element(m: int, n: int) -> CheckerSet:
    """A nonempty checker set with no pebbles, for gcd(m, n) > 1.

    The checkers sit on the board squares of the billiard lattice points
    that the main path visits exactly once.
    """
    if math.gcd(m, n) == 1:
        raise ValueError(f"gcd({m}, {n}) = 1: the kernel is trivial")
    points = kernel_checkers(Rect(m=m, n=n))
    board = Board(rows=m - 1, cols=n - 1)
    return CheckerSet(board, frozenset((x - 1, y - 1) for x, y in points))


def bottom_row_symbol(m: int, n: int) -> SymbolEvidence:
    """(m|n) as (-1)^s where s counts checkers in the bottom-row solution."""
    if math.gcd(m, n) != 1:
        raise PuzzleNotUniquelySolvable(f"gcd({m}, {n}) > 1")
    board = Board(rows=m - 1, cols=n - 1)
    s = len(solve(bottom_row_puzzle(board)).squares)
    return SymbolEvidence(value=-1 if s % 2 else 1, negative_bounce_count=s, base_bounces=())


def combined_puzzle_count(m: int, n: int) -> int:
    """Checker count of the bottom-row-plus-left-column puzzle.

    For odd coprime m and n it equals (m-1)(n-1)/4 and has the parity of
    s + t, the counts of the two one-sided solutions.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"m and n must both be odd, got {m}, {n}")
    if math.gcd(m, n) != 1:
        raise ValueError(f"m and n must be coprime, got gcd={math.gcd(m, n)}")
    board = Board(rows=m - 1, cols=n - 1)
    puzzle = bottom_row_puzzle(board) ^ left_column_puzzle(board)
    return len(solve(puzzle).squares)
