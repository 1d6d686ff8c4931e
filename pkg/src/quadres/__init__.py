"""Quadratic-residue symbols computed three independent ways.

Arithmetic billiards (bounce signs on an integer rectangle), parity
checkers (mod-2 puzzle solutions on the shifted checkerboard), and the
classical number-theory oracles, together with the identity chain that
proves quadratic reciprocity from the geometry.
"""

__version__ = "0.1.0"

from .billiards import (
    BilliardPath,
    BounceEvent,
    Crossing,
    Rect,
    Wall,
    base_bounces,
    crossings,
    kernel_checkers,
    position_at,
    trace_path,
    two_color_checkers,
)
from .checkers import (
    Board,
    CheckerSet,
    Mod2Matrix,
    PebbleSet,
    PuzzleNotUniquelySolvable,
    apply_checkers,
    bottom_row_puzzle,
    bottom_row_symbol,
    combined_puzzle_count,
    kernel_element,
    left_column_puzzle,
    light_chase,
    neighbor_matrix,
    solve,
    solve_elimination,
    solve_single_pebble,
)
from .oracles import (
    SymbolValue,
    euler_symbol,
    gcd,
    is_odd_prime,
    jacobi_symbol,
    mod_pow,
    residue_table,
    wilson_pairing_check,
    zolotarev_perm_sign,
)
from .render import RenderSpec, render_board_ascii, render_board_svg, render_path_svg
from .symbols import (
    SymbolEvidence,
    billiard_symbol,
    check_almost_reciprocity,
    check_reciprocity,
    mod4_symbol,
    symbol_supplement_minus_one,
    symbol_supplement_two,
)
from .tilings import TilingReport, count_tilings, tiling_parity_check

__all__ = [
    "__version__",
    "BilliardPath",
    "Board",
    "BounceEvent",
    "CheckerSet",
    "Crossing",
    "Mod2Matrix",
    "PebbleSet",
    "PuzzleNotUniquelySolvable",
    "Rect",
    "RenderSpec",
    "SymbolEvidence",
    "SymbolValue",
    "TilingReport",
    "Wall",
    "apply_checkers",
    "base_bounces",
    "billiard_symbol",
    "bottom_row_puzzle",
    "bottom_row_symbol",
    "check_almost_reciprocity",
    "check_reciprocity",
    "combined_puzzle_count",
    "count_tilings",
    "crossings",
    "euler_symbol",
    "gcd",
    "is_odd_prime",
    "jacobi_symbol",
    "kernel_checkers",
    "kernel_element",
    "left_column_puzzle",
    "light_chase",
    "mod4_symbol",
    "mod_pow",
    "neighbor_matrix",
    "position_at",
    "render_board_ascii",
    "render_board_svg",
    "render_path_svg",
    "residue_table",
    "solve",
    "solve_elimination",
    "solve_single_pebble",
    "symbol_supplement_minus_one",
    "symbol_supplement_two",
    "tiling_parity_check",
    "trace_path",
    "two_color_checkers",
    "wilson_pairing_check",
    "zolotarev_perm_sign",
]
