"""Oriented endpoints, adjacent circles and the canonical coordinate frame.

All downstream analysis normalizes the start pose to the origin with heading
zero; the four distances between adjacent-circle centers drive every
classification that follows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import EPS, Point, add, angle_of, dist, norm_angle, rotate

__all__ = [
    "Pose",
    "OrientedCircle",
    "RigidMotion",
    "CenterDistances",
    "canonical_frame",
    "adjacent_circles",
    "center_distances",
    "proximity_case",
]


@dataclass(frozen=True)
class Pose:
    """A point of the plane with a heading, in units of the turning radius.

    The heading is normalized to (-pi, pi] at construction and both
    coordinates must be finite.
    """

    x: float
    y: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.theta)):
            raise ValueError(f"pose components must be finite: {self}")
        object.__setattr__(self, "theta", norm_angle(self.theta))

    @property
    def position(self) -> Point:
        return (self.x, self.y)

    def direction(self) -> Point:
        return (math.cos(self.theta), math.sin(self.theta))

    def reversed(self) -> "Pose":
        """The same point traversed the opposite way (heading flipped by pi)."""
        return Pose(self.x, self.y, self.theta + math.pi)

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "theta_rad": self.theta}

    @classmethod
    def from_json(cls, obj: dict) -> "Pose":
        return cls(obj["x"], obj["y"], obj["theta_rad"])


@dataclass(frozen=True)
class OrientedCircle:
    """Unit-radius circle with a turning sense, 'L' (ccw) or 'R' (cw)."""

    center: Point
    sense: str

    #: All circles in this geometry have the unit turning radius.
    radius: float = 1.0

    def __post_init__(self):
        if self.sense not in ("L", "R"):
            raise ValueError(f"sense must be 'L' or 'R', got {self.sense!r}")
        if self.radius != 1.0:
            raise ValueError("only unit-radius circles are supported")


@dataclass(frozen=True)
class RigidMotion:
    """Plane isometry p -> R(angle) p + translation."""

    angle: float
    translation: Point

    def apply(self, p: Point) -> Point:
        return add(rotate(p, self.angle), self.translation)

    def apply_pose(self, pose: Pose) -> Pose:
        px, py = self.apply((pose.x, pose.y))
        return Pose(px, py, pose.theta + self.angle)

    def inverse(self) -> "RigidMotion":
        t = rotate((-self.translation[0], -self.translation[1]), -self.angle)
        return RigidMotion(-self.angle, t)

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """The motion applying ``other`` first, then ``self``."""
        return RigidMotion(
            self.angle + other.angle,
            add(rotate(other.translation, self.angle), self.translation),
        )


@dataclass(frozen=True)
class CenterDistances:
    """Distances between adjacent-circle centers of two poses.

    ``ll`` pairs the left circle of the start with the left circle of the
    goal, ``lr`` the left of the start with the right of the goal, etc.
    """

    ll: float
    rr: float
    lr: float
    rl: float


def canonical_frame(x: Pose, y: Pose) -> tuple[RigidMotion, Pose]:
    """Rigid motion taking ``x`` to the origin pose, applied to ``y``.

    Returns the motion and the transformed goal; every closed-form evaluation
    downstream assumes this normalized frame.
    """
    motion = RigidMotion(-x.theta, rotate((-x.x, -x.y), -x.theta))
    return motion, motion.apply_pose(y)


def adjacent_circles(p: Pose) -> tuple[OrientedCircle, OrientedCircle]:
    """The two unit circles tangent to the pose, left and right of its heading.

    Left is the counterclockwise side: its center sits at the position plus
    the heading vector rotated by +90 degrees.
    """
    s, c = math.sin(p.theta), math.cos(p.theta)
    left = OrientedCircle((p.x - s, p.y + c), "L")
    right = OrientedCircle((p.x + s, p.y - c), "R")
    return left, right


def center_distances(x: Pose, y: Pose) -> CenterDistances:
    """The four Euclidean distances between adjacent-circle centers."""
    xl, xr = adjacent_circles(x)
    yl, yr = adjacent_circles(y)
    return CenterDistances(
        ll=dist(xl.center, yl.center),
        rr=dist(xr.center, yr.center),
        lr=dist(xl.center, yr.center),
        rl=dist(xr.center, yl.center),
    )


def proximity_case(x: Pose, y: Pose, tol: float = EPS) -> str:
    """Which of the four same-side center-distance regimes holds.

    Case 'i': both ll and rr at least 4; 'ii'/'iii': exactly one below 4
    (left / right respectively); 'iv': both below 4. Values within ``tol``
    of 4 count as "at least 4".
    """
    d = center_distances(x, y)
    ll_far = d.ll >= 4.0 - tol
    rr_far = d.rr >= 4.0 - tol
    if ll_far and rr_far:
        return "i"
    if not ll_far and rr_far:
        return "ii"
    if ll_far and not rr_far:
        return "iii"
    return "iv"
