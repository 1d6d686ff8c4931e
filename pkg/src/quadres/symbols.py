"""The billiards residue symbol (m|n) and the identities it satisfies.

(m|n) is the product of the bottom-bounce signs of the m-by-n billiard
path, 0 when gcd(m, n) > 1, and +1 for an empty product.  It extends the
Legendre symbol to arbitrary positive m and n, including even n, where it
agrees with the permutation-sign (Zolotarev) definition rather than the
Kronecker symbol: in particular (5|8) = +1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .oracles import SymbolValue


@dataclass(frozen=True)
class SymbolEvidence:
    """A symbol value together with the parity witness that produced it.

    For billiards evidence, negative_bounce_count is the number of negative
    bottom bounces and base_bounces lists them all as (x, sign); the value
    is (-1) to that count, or 0 when gcd(m, n) > 1 and the bounce set would
    be incomplete.  Checkers-based evidence reuses the same shape with the
    checker count in negative_bounce_count and no bounce list.
    """

    value: SymbolValue
    negative_bounce_count: int
    base_bounces: tuple[tuple[int, int], ...]


def _bottom_signs(m: int, n: int) -> list[tuple[int, int]]:
    """(x, sign) of every bottom bounce of the m-by-n path, in time order.

    Bottom contacts happen at the multiples of 2m before lcm(m, n); the
    sign and abscissa come from folding the time into the x period 2n.
    This avoids building the full event list, which matters in sweeps.
    """
    total = math.lcm(m, n)
    period = 2 * n
    out = []
    for t in range(2 * m, total, 2 * m):
        r = t % period
        if r < n:
            out.append((r, 1))
        else:
            out.append((period - r, -1))
    return out


def billiard_symbol(m: int, n: int) -> SymbolEvidence:
    """(m|n) from the bottom-bounce signs of m-by-n billiards.

    0 when gcd(m, n) > 1 (without tracing); +1 for n = 1 or any other path
    with no bottom bounces, by the empty-product convention.  m larger than
    n is fine: the rectangle just gets tall.
    """
    if m < 1 or n < 1:
        raise ValueError(f"sides must be positive, got {m}x{n}")
    if math.gcd(m, n) != 1:
        return SymbolEvidence(value=0, negative_bounce_count=0, base_bounces=())
    bounces = _bottom_signs(m, n)
    negatives = sum(1 for _, s in bounces if s < 0)
    return SymbolEvidence(
        value=-1 if negatives % 2 else 1,
        negative_bounce_count=negatives,
        base_bounces=tuple(bounces),
    )


def symbol_supplement_minus_one(n: int) -> SymbolValue:
    """Closed form for (n-1|n): +1 iff n = 1 mod 4.  n odd, >= 3."""
    _require_odd(n)
    return 1 if n % 4 == 1 else -1


def symbol_supplement_two(n: int) -> SymbolValue:
    """Closed form for (2|n): +1 iff n = +-1 mod 8.  n odd, >= 3."""
    _require_odd(n)
    return 1 if n % 8 in (1, 7) else -1


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of a symbol identity plus the evidence behind them."""

    m: int
    n: int
    lhs: SymbolValue
    rhs: SymbolValue
    witnesses: tuple[SymbolEvidence, ...]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def check_almost_reciprocity(m: int, n: int) -> IdentityCheck:
    """Verify (m|n)(n|m) = (m|n-m) for odd m < n.

    Both sides are computed from billiards; both are 0 when gcd(m, n) > 1.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"m and n must both be odd, got {m}, {n}")
    if m >= n:
        raise ValueError(f"need m < n, got m={m}, n={n}")
    ev_mn = billiard_symbol(m, n)
    ev_nm = billiard_symbol(n, m)
    ev_red = billiard_symbol(m, n - m)
    return IdentityCheck(
        m=m,
        n=n,
        lhs=ev_mn.value * ev_nm.value,
        rhs=ev_red.value,
        witnesses=(ev_mn, ev_nm, ev_red),
    )


def mod4_symbol(m: int, d: int) -> SymbolValue:
    """Closed form for (m|d) with m odd, d even, coprime.

    +1 when d = 2 mod 4; (-1)^((m-1)/2) when d = 0 mod 4.  Agrees with
    billiard_symbol(m, d).
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    if d < 2 or d % 2 == 1:
        raise ValueError(f"d must be even and positive, got {d}")
    if math.gcd(m, d) != 1:
        raise ValueError(f"m and d must be coprime, got gcd={math.gcd(m, d)}")
    if d % 4 == 2:
        return 1
    return -1 if (m - 1) // 2 % 2 else 1


def check_reciprocity(m: int, n: int) -> IdentityCheck:
    """Verify (m|n)(n|m) = (-1)^((m-1)(n-1)/4) for coprime odd m, n >= 3."""
    if m < 3 or n < 3 or m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"m and n must be odd and >= 3, got {m}, {n}")
    if math.gcd(m, n) != 1:
        raise ValueError(f"m and n must be coprime, got gcd={math.gcd(m, n)}")
    ev_mn = billiard_symbol(m, n)
    ev_nm = billiard_symbol(n, m)
    exponent = (m - 1) * (n - 1) // 4
    return IdentityCheck(
        m=m,
        n=n,
        lhs=ev_mn.value * ev_nm.value,
        rhs=-1 if exponent % 2 else 1,
        witnesses=(ev_mn, ev_nm),
    )
