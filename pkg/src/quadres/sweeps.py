"""Verification sweeps: every identity the library claims, over finite grids.

Each check family enumerates a grid of inputs, evaluates an identity on
each cell, and reports the cells that fail.  Families are exposed to the
CLI `verify` command and reused directly by the test suite.

Cells are coarse units of work (one denominator, or one (m, n) pair), so a
sweep can be partitioned across processes; results are merged in cell
order, which keeps output deterministic regardless of scheduling.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import checkers as ck
from . import oracles, symbols, tilings
from .billiards import Rect, base_bounces, bottom_bounce_times, crossings, trace_path

Cell = tuple
Failure = dict
CheckFn = Callable[[Cell], tuple[int, list[Failure]]]


@dataclass(frozen=True)
class FamilyResult:
    name: str
    checked: int
    failures: tuple[Failure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _odd_primes(limit: int) -> list[int]:
    return [n for n in range(3, limit + 1) if oracles.is_odd_prime(n)]


# --- euler: billiard symbol vs Euler's criterion, prime denominators ---

def _euler_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("euler", n) for n in _odd_primes(max_n)]


def _euler_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n = cell
    checked = 0
    failures = []
    for m in range(1, 2 * n + 1):
        if m % n == 0:
            continue
        checked += 1
        got = symbols.billiard_symbol(m, n).value
        want = oracles.euler_symbol(m, n)
        if got != want:
            failures.append({"m": m, "n": n, "billiard": got, "euler": want})
    return checked, failures


# --- zolotarev: billiard symbol vs permutation sign, even denominators included ---

def _zolotarev_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("zolotarev", n, max_m) for n in range(1, max_n + 1)]


def _zolotarev_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n, max_m = cell
    checked = 0
    failures = []
    for m in range(1, max_m + 1):
        if math.gcd(m, n) != 1:
            continue
        checked += 1
        got = symbols.billiard_symbol(m, n).value
        want = oracles.zolotarev_perm_sign(m, n)
        if got != want:
            failures.append({"m": m, "n": n, "billiard": got, "zolotarev": want})
    return checked, failures


# --- jacobi: billiard symbol vs Jacobi symbol, odd denominators ---

def _jacobi_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("jacobi", n, max_m) for n in range(1, max_n + 1, 2)]


def _jacobi_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n, max_m = cell
    checked = 0
    failures = []
    for m in range(1, max_m + 1):
        checked += 1
        got = symbols.billiard_symbol(m, n).value
        want = oracles.jacobi_symbol(m, n)
        if got != want:
            failures.append({"m": m, "n": n, "billiard": got, "jacobi": want})
    return checked, failures


# --- supplements: closed forms for (n-1|n) and (2|n) ---

def _supplements_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("supplements", n) for n in range(3, max_n + 1, 2)]


def _supplements_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n = cell
    failures = []
    want_minus = symbols.symbol_supplement_minus_one(n)
    got_minus = symbols.billiard_symbol(n - 1, n).value
    if want_minus != got_minus:
        failures.append({"n": n, "identity": "minus_one", "closed": want_minus, "billiard": got_minus})
    want_two = symbols.symbol_supplement_two(n)
    got_two = symbols.billiard_symbol(2, n).value
    if want_two != got_two:
        failures.append({"n": n, "identity": "two", "closed": want_two, "billiard": got_two})
    return 2, failures


# --- almost_reciprocity: (m|n)(n|m) = (m|n-m) for odd m < n ---

def _almost_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("almost_reciprocity", n) for n in range(3, max_n + 1, 2)]


def _almost_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n = cell
    checked = 0
    failures = []
    for m in range(1, n, 2):
        checked += 1
        rec = symbols.check_almost_reciprocity(m, n)
        if not rec.ok:
            failures.append({"m": m, "n": n, "lhs": rec.lhs, "rhs": rec.rhs})
    return checked, failures


# --- mod4: closed form for odd numerator over even denominator ---

def _mod4_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("mod4", d, max_m) for d in range(2, max_n + 1, 2)]


def _mod4_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, d, max_m = cell
    checked = 0
    failures = []
    for m in range(1, max_m + 1, 2):
        if math.gcd(m, d) != 1:
            continue
        checked += 1
        want = symbols.mod4_symbol(m, d)
        got = symbols.billiard_symbol(m, d).value
        if want != got:
            failures.append({"m": m, "d": d, "closed": want, "billiard": got})
    return checked, failures


# --- reciprocity: (m|n)(n|m) = (-1)^((m-1)(n-1)/4) for coprime odd m, n ---

def _reciprocity_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("reciprocity", n, max_m) for n in range(3, max_n + 1, 2)]


def _reciprocity_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, n, max_m = cell
    checked = 0
    failures = []
    for m in range(3, max_m + 1, 2):
        if math.gcd(m, n) != 1:
            continue
        checked += 1
        rec = symbols.check_reciprocity(m, n)
        if not rec.ok:
            failures.append({"m": m, "n": n, "lhs": rec.lhs, "rhs": rec.rhs})
    return checked, failures


# --- checkers_symbol: bottom-row puzzle parity vs billiards, plus the
# --- per-bounce bridge between single-pebble solutions and bounce signs ---

BRIDGE_DEFAULT = 30


def _checkers_cells(max_m: int, max_n: int) -> list[Cell]:
    cells: list[Cell] = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            if math.gcd(m, n) == 1:
                cells.append(("checkers_sym", m, n))
    bridge_m = min(max_m, BRIDGE_DEFAULT)
    bridge_n = min(max_n, BRIDGE_DEFAULT)
    for m in range(1, bridge_m + 1):
        for n in range(1, bridge_n + 1):
            if math.gcd(m, n) == 1:
                cells.append(("checkers_bridge", m, n))
    return cells


def _checkers_check(cell: Cell) -> tuple[int, list[Failure]]:
    kind, m, n = cell
    if kind == "checkers_sym":
        got = ck.bottom_row_symbol(m, n).value
        want = symbols.billiard_symbol(m, n).value
        if got != want:
            return 1, [{"m": m, "n": n, "checkers": got, "billiard": want}]
        return 1, []
    path = trace_path(Rect(m=m, n=n))
    cross = crossings(path)
    failures = []
    checked = 0
    for x, sign, t in base_bounces(path):
        checked += 1
        straddles = sum(1 for c in cross if c.t1 < t < c.t2)
        if (sign > 0) != (straddles % 2 == 0):
            failures.append({"m": m, "n": n, "k": x // 2, "sign": sign, "checkers": straddles})
    return checked, failures


# --- kernel: unique solvability iff coprime; explicit kernel element otherwise ---

def _kernel_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("kernel", m, n) for m in range(2, max_m + 1) for n in range(2, max_n + 1)]


def _kernel_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, m, n = cell
    failures = []
    invertible = ck.neighbor_matrix(ck.Board(rows=m - 1, cols=n - 1)).is_invertible()
    coprime = math.gcd(m, n) == 1
    if invertible != coprime:
        failures.append({"m": m, "n": n, "invertible": invertible, "coprime": coprime})
    if not coprime:
        elem = ck.kernel_element(m, n)
        if not elem.squares:
            failures.append({"m": m, "n": n, "kernel": "empty"})
        elif ck.apply_checkers(elem).squares:
            failures.append({"m": m, "n": n, "kernel": "nonzero image"})
    return 1, failures


# --- superposition: combined puzzle count equals (m-1)(n-1)/4 ---

def _superposition_cells(max_m: int, max_n: int) -> list[Cell]:
    return [
        ("superposition", m, n)
        for m in range(3, max_m + 1, 2)
        for n in range(3, max_n + 1, 2)
        if math.gcd(m, n) == 1
    ]


def _superposition_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, m, n = cell
    failures = []
    board = ck.Board(rows=m - 1, cols=n - 1)
    s = len(ck.solve(ck.bottom_row_puzzle(board)).squares)
    t = len(ck.solve(ck.left_column_puzzle(board)).squares)
    u = ck.combined_puzzle_count(m, n)
    if u != (m - 1) * (n - 1) // 4:
        failures.append({"m": m, "n": n, "u": u, "formula": (m - 1) * (n - 1) // 4})
    if u % 2 != (s + t) % 2:
        failures.append({"m": m, "n": n, "u": u, "s": s, "t": t})
    return 1, failures


# --- tilings: tiling-count parity vs invertibility vs gcd ---

def _tilings_cells(max_m: int, max_n: int) -> list[Cell]:
    return [("tilings", r, c) for r in range(1, max_m + 1) for c in range(1, max_n + 1)]


def _tilings_check(cell: Cell) -> tuple[int, list[Failure]]:
    _, rows, cols = cell
    report = tilings.tiling_parity_check(rows, cols)
    if not report.consistent:
        return 1, [{
            "rows": rows,
            "cols": cols,
            "count": report.count,
            "gcd_flag": report.gcd_flag,
            "rank_full": report.rank_full,
        }]
    return 1, []


@dataclass(frozen=True)
class Family:
    name: str
    make_cells: Callable[[int, int], list[Cell]]
    check: CheckFn
    default_max_m: int
    default_max_n: int
    description: str


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("euler", _euler_cells, _euler_check, 398, 199,
               "billiard symbol = Euler criterion for odd primes n, 1 <= m <= 2n"),
        Family("zolotarev", _zolotarev_cells, _zolotarev_check, 100, 100,
               "billiard symbol = permutation sign for coprime m, n (even n included)"),
        Family("jacobi", _jacobi_cells, _jacobi_check, 151, 151,
               "billiard symbol = Jacobi symbol for odd n"),
        Family("supplements", _supplements_cells, _supplements_check, 199, 199,
               "closed forms for (n-1|n) and (2|n) vs billiards, odd n"),
        Family("almost_reciprocity", _almost_cells, _almost_check, 201, 201,
               "(m|n)(n|m) = (m|n-m) for odd m < n"),
        Family("mod4", _mod4_cells, _mod4_check, 201, 200,
               "closed form for (m|d), m odd, d even, coprime"),
        Family("reciprocity", _reciprocity_cells, _reciprocity_check, 199, 199,
               "(m|n)(n|m) = (-1)^((m-1)(n-1)/4) for coprime odd m, n >= 3"),
        Family("checkers_symbol", _checkers_cells, _checkers_check, 50, 50,
               f"bottom-row puzzle parity = billiard symbol; bounce-sign bridge (capped at {BRIDGE_DEFAULT})"),
        Family("kernel", _kernel_cells, _kernel_check, 14, 14,
               "neighbor map invertible iff gcd(m, n) = 1; explicit kernel element otherwise"),
        Family("superposition", _superposition_cells, _superposition_check, 31, 31,
               "combined bottom+left puzzle count = (m-1)(n-1)/4, odd coprime m, n"),
        Family("tilings", _tilings_cells, _tilings_check, 6, 6,
               "domino tiling parity = mod-2 invertibility = gcd condition"),
    )
}


def _run_cell(cell: Cell) -> tuple[int, list[Failure]]:
    family = _CELL_DISPATCH[cell[0]]
    return family(cell)


_CELL_DISPATCH: dict[str, CheckFn] = {
    "euler": _euler_check,
    "zolotarev": _zolotarev_check,
    "jacobi": _jacobi_check,
    "supplements": _supplements_check,
    "almost_reciprocity": _almost_check,
    "mod4": _mod4_check,
    "reciprocity": _reciprocity_check,
    "checkers_sym": _checkers_check,
    "checkers_bridge": _checkers_check,
    "kernel": _kernel_check,
    "superposition": _superposition_check,
    "tilings": _tilings_check,
}


def run_family(name: str, max_m: int | None = None, max_n: int | None = None,
               parallelism: int = 1) -> FamilyResult:
    """Run one check family and merge per-cell results in cell order."""
    family = FAMILIES[name]
    cells = family.make_cells(max_m or family.default_max_m, max_n or family.default_max_n)
    if parallelism > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_run_cell, cells, chunksize=max(1, len(cells) // (4 * parallelism))))
    else:
        results = [_run_cell(cell) for cell in cells]
    checked = sum(c for c, _ in results)
    failures: list[Failure] = []
    for _, fails in results:
        failures.extend(fails)
    return FamilyResult(name=name, checked=checked, failures=tuple(failures))
