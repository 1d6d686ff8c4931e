"""Exact simulation of arithmetic billiards on an integer rectangle.

A ball starts in the lower-left corner (0, 0) of an m-by-n rectangle
(height m along y, width n along x), moves at 45 degrees with a speed of
one unit-square diagonal per time unit, reflects off the walls, and stops
when it reaches another corner at time lcm(m, n).

Coordinates follow the usual axes: x in [0, n], y in [0, m].  Both
coordinates are triangle waves of time, so every wall contact and every
lattice-point visit happens at an integer time and can be computed
exactly, without stepping the ball.

Sign convention for a bounce: contacts with the bottom or top wall are
positive when the ball moves left-to-right, contacts with the left or
right wall are positive when it moves upward.  The motion component
parallel to the wall is unchanged by the reflection, so the sign does not
depend on whether the incoming or outgoing direction is read.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Wall(Enum):
    BOTTOM = "bottom"
    TOP = "top"
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Rect:
    """Rectangle of height m (vertical side) and width n (horizontal side)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"rectangle sides must be positive, got {self.m}x{self.n}")

    @property
    def length(self) -> int:
        """Travel time from the start corner to the end corner."""
        return math.lcm(self.m, self.n)


@dataclass(frozen=True)
class BounceEvent:
    """One wall contact: time, position, wall, and direction sign."""

    t: int
    x: int
    y: int
    wall: Wall
    sign: int


@dataclass(frozen=True)
class Crossing:
    """Interior lattice point the path traverses twice, in crossing directions."""

    x: int
    y: int
    t1: int
    t2: int


@dataclass(frozen=True)
class BilliardPath:
    """Complete corner-to-corner trajectory.

    vertices lists the start corner, every reflection point in time order,
    and the end corner; consecutive vertices differ by a 45-degree segment.
    """

    rect: Rect
    vertices: tuple[tuple[int, int], ...]
    bounces: tuple[BounceEvent, ...]
    end: tuple[int, int]
    length: int

    def vertex_times(self) -> tuple[int, ...]:
        """Times at which the path is at each vertex."""
        return (0,) + tuple(b.t for b in self.bounces) + (self.length,)


def _fold(t: int, side: int) -> tuple[int, int]:
    """Triangle wave: coordinate and outgoing direction at time t (period 2*side)."""
    r = t % (2 * side)
    if r < side:
        return r, 1
    return 2 * side - r, -1


def position_at(rect: Rect, t: int) -> tuple[int, int, int, int]:
    """Ball state (x, y, dx, dy) at integer time t in [0, lcm(m, n)].

    dx, dy give the outgoing direction (the post-reflection direction when
    the ball is on a wall).  At the final corner the direction is undefined
    and reported as (0, 0).
    """
    if t < 0 or t > rect.length:
        raise ValueError(f"t={t} outside [0, {rect.length}]")
    x, dx = _fold(t, rect.n)
    y, dy = _fold(t, rect.m)
    if t == rect.length:
        return x, y, 0, 0
    return x, y, dx, dy


def trace_path(rect: Rect) -> BilliardPath:
    """Trace the full path event by event.

    Bounce times are exactly the multiples of m (top/bottom contacts) and
    of n (left/right contacts) in the open interval (0, lcm(m, n)); a time
    divisible by both would be a corner and those occur only at the end.
    Neither the start nor the end corner is a bounce.
    """
    m, n = rect.m, rect.n
    total = rect.length
    times = sorted(set(range(m, total, m)) | set(range(n, total, n)))

    bounces = []
    vertices = [(0, 0)]
    for t in times:
        x, y, dx, dy = position_at(rect, t)
        if y == 0:
            wall, sign = Wall.BOTTOM, dx
        elif y == m:
            wall, sign = Wall.TOP, dx
        elif x == 0:
            wall, sign = Wall.LEFT, dy
        else:
            wall, sign = Wall.RIGHT, dy
        bounces.append(BounceEvent(t=t, x=x, y=y, wall=wall, sign=sign))
        vertices.append((x, y))

    ex, ey, _, _ = position_at(rect, total)
    vertices.append((ex, ey))
    return BilliardPath(
        rect=rect,
        vertices=tuple(vertices),
        bounces=tuple(bounces),
        end=(ex, ey),
        length=total,
    )


def base_bounces(path: BilliardPath) -> list[tuple[int, int, int]]:
    """Bottom-wall bounces in time order, as (x, sign, t) triples."""
    return [(b.x, b.sign, b.t) for b in path.bounces if b.wall is Wall.BOTTOM]


def crossings(path: BilliardPath) -> list[Crossing]:
    """Interior lattice points the path visits exactly twice, transversally.

    Found by walking each straight segment between consecutive events and
    recording interior lattice-point visits.  When gcd(m, n) = 1 there are
    exactly (m-1)(n-1)/2 crossings.  Sorted by (x, y).
    """
    visits = _interior_visits(path)
    out = []
    for (x, y), vs in sorted(visits.items()):
        if len(vs) != 2:
            continue
        (t1, d1), (t2, d2) = vs
        if d1 == d2 or d1 == (-d2[0], -d2[1]):
            continue  # same diagonal twice: not a crossing
        out.append(Crossing(x=x, y=y, t1=t1, t2=t2))
    return out


def _interior_visits(path: BilliardPath) -> dict[tuple[int, int], list[tuple[int, tuple[int, int]]]]:
    """Map interior lattice point -> [(t, direction), ...] in time order.

    The path is on a wall exactly at event times, so the lattice points at
    times strictly between consecutive events are all interior.
    """
    times = path.vertex_times()
    visits: dict[tuple[int, int], list[tuple[int, tuple[int, int]]]] = {}
    for i in range(len(times) - 1):
        t0, t1 = times[i], times[i + 1]
        x0, y0 = path.vertices[i]
        x1, y1 = path.vertices[i + 1]
        span = t1 - t0
        dx = (x1 - x0) // span
        dy = (y1 - y0) // span
        for k in range(1, span):
            visits.setdefault((x0 + dx * k, y0 + dy * k), []).append((t0 + k, (dx, dy)))
    return visits


def bottom_bounce_times(path: BilliardPath) -> dict[int, int]:
    """Map bottom-bounce abscissa -> bounce time."""
    return {b.x: b.t for b in path.bounces if b.wall is Wall.BOTTOM}


def two_color_checkers(rect: Rect, k: int) -> set[tuple[int, int]]:
    """Self-crossings whose two transits straddle the bottom bounce at (2k, 0).

    Coloring the path with one color before that bounce and another after
    it, these are the crossings where the two colors meet.  Requires
    gcd(m, n) = 1 and 0 < 2k < n, so the bounce at (2k, 0) exists.
    """
    if math.gcd(rect.m, rect.n) != 1:
        raise ValueError(f"sides must be coprime, got {rect.m}x{rect.n}")
    if not 0 < 2 * k < rect.n:
        raise ValueError(f"need 0 < 2k < n, got k={k}, n={rect.n}")
    path = trace_path(rect)
    tk = bottom_bounce_times(path).get(2 * k)
    if tk is None:
        raise ValueError(f"no bottom bounce at ({2 * k}, 0) on {rect.m}x{rect.n}")
    return {(c.x, c.y) for c in crossings(path) if c.t1 < tk < c.t2}


def kernel_checkers(rect: Rect) -> set[tuple[int, int]]:
    """Interior lattice points the corner-to-corner path visits exactly once.

    These exist exactly when gcd(m, n) > 1 (the path exits early and covers
    only part of the diagonal grid); the set is then nonempty.
    """
    if math.gcd(rect.m, rect.n) == 1:
        raise ValueError(f"sides {rect.m}x{rect.n} are coprime: every interior point is covered twice")
    visits = _interior_visits(trace_path(rect))
    return {p for p, vs in visits.items() if len(vs) == 1}
