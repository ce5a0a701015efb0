"""Small planar-geometry helpers shared across the package.

Everything works on plain ``(x, y)`` tuples; heavier array math lives in the
modules that need it.
"""

from __future__ import annotations

import math

Point = tuple[float, float]

TWO_PI = 2.0 * math.pi

#: Default tolerance for distance-threshold ties and tangency residuals.
EPS = 1e-9


def norm_angle(a: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    r = a % TWO_PI
    if r > math.pi:
        r -= TWO_PI
    return r


def mod2pi(a: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    return a % TWO_PI


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def unit(angle: float) -> Point:
    return (math.cos(angle), math.sin(angle))


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def scale(p: Point, s: float) -> Point:
    return (p[0] * s, p[1] * s)


def rot90(p: Point) -> Point:
    """Rotate a vector by +90 degrees (counterclockwise)."""
    return (-p[1], p[0])


def rotate(p: Point, angle: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def angle_of(p: Point) -> float:
    return math.atan2(p[1], p[0])


def clamp_unit(x: float, tol: float = 1e-9) -> float:
    """Clamp to [-1, 1] for acos/asin, allowing tol of numeric overshoot."""
    if x > 1.0:
        if x > 1.0 + tol:
            raise ValueError(f"value {x!r} outside [-1, 1] beyond tolerance")
        return 1.0
    if x < -1.0:
        if x < -1.0 - tol:
            raise ValueError(f"value {x!r} outside [-1, 1] beyond tolerance")
        return -1.0
    return x
