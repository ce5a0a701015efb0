"""Piecewise circle-and-segment paths (cs paths) and their bookkeeping.

A path is a start pose plus an ordered run of unit-radius arcs and straight
segments; zero-measure pieces are dropped at construction so every stored
segment has positive measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import EPS, TWO_PI, Point, mod2pi
from .frame import Pose, adjacent_circles

__all__ = [
    "Arc",
    "Line",
    "CsPath",
    "segment_end",
    "path_length",
    "total_turning",
    "sample",
]


@dataclass(frozen=True)
class Arc:
    """Arc of a unit circle: turning sense 'L'/'R' and angle in (0, 2*pi)."""

    sense: str
    angle: float

    def __post_init__(self):
        if self.sense not in ("L", "R"):
            raise ValueError(f"arc sense must be 'L' or 'R', got {self.sense!r}")
        if not (0.0 < self.angle < TWO_PI):
            raise ValueError(f"arc angle must lie in (0, 2*pi), got {self.angle!r}")

    @property
    def length(self) -> float:
        return self.angle

    @property
    def turning(self) -> float:
        return self.angle if self.sense == "L" else -self.angle


@dataclass(frozen=True)
class Line:
    """Straight segment of positive length."""

    length: float

    def __post_init__(self):
        if not self.length > 0.0:
            raise ValueError(f"line length must be positive, got {self.length!r}")

    @property
    def turning(self) -> float:
        return 0.0


Segment = Arc | Line


def segment_end(start: Pose, seg: Segment) -> Pose:
    """Pose reached by following one segment from ``start``."""
    if isinstance(seg, Line):
        return Pose(
            start.x + seg.length * math.cos(start.theta),
            start.y + seg.length * math.sin(start.theta),
            start.theta,
        )
    left, right = adjacent_circles(start)
    if seg.sense == "L":
        cx, cy = left.center
        phi = math.atan2(start.y - cy, start.x - cx) + seg.angle
        return Pose(cx + math.cos(phi), cy + math.sin(phi), start.theta + seg.angle)
    cx, cy = right.center
    phi = math.atan2(start.y - cy, start.x - cx) - seg.angle
    return Pose(cx + math.cos(phi), cy + math.sin(phi), start.theta - seg.angle)


def _pose_at(start: Pose, seg: Segment, s: float) -> Pose:
    """Pose after arc length ``s`` along one segment."""
    if isinstance(seg, Line):
        return Pose(
            start.x + s * math.cos(start.theta),
            start.y + s * math.sin(start.theta),
            start.theta,
        )
    part = Arc(seg.sense, min(s, seg.angle)) if s > 0 else None
    return segment_end(start, part) if part else start


@dataclass(frozen=True)
class CsPath:
    """Concatenation of unit arcs and lines, anchored at a start pose.

    ``type_tag`` records the construction family (LSL, RSR, LSR, RSL, LRL,
    RLR or 'degenerate' for the zero-length path).
    """

    start: Pose
    segments: tuple[Segment, ...]
    type_tag: str = "degenerate"

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def length(self) -> float:
        return sum(s.length for s in self.segments)

    @property
    def turning(self) -> float:
        """Total signed turning: + for left arcs, - for right arcs."""
        return sum(s.turning for s in self.segments)

    def joints(self) -> list[Pose]:
        """Poses at segment boundaries, start first, end last."""
        out = [self.start]
        for seg in self.segments:
            out.append(segment_end(out[-1], seg))
        return out

    def end(self) -> Pose:
        p = self.start
        for seg in self.segments:
            p = segment_end(p, seg)
        return p

    def to_json(self) -> dict:
        segs = []
        for s in self.segments:
            if isinstance(s, Arc):
                segs.append({"arc": {"sense": s.sense, "angle": s.angle}})
            else:
                segs.append({"line": {"length": s.length}})
        return {"start": self.start.to_json(), "segments": segs, "type": self.type_tag}

    @classmethod
    def from_json(cls, obj: dict) -> "CsPath":
        segs: list[Segment] = []
        for s in obj["segments"]:
            if "arc" in s:
                segs.append(Arc(s["arc"]["sense"], s["arc"]["angle"]))
            else:
                segs.append(Line(s["line"]["length"]))
        return cls(Pose.from_json(obj["start"]), tuple(segs), obj["type"])


def path_length(p: CsPath) -> float:
    """Arc length: arc angles (radius one) plus line lengths."""
    return p.length


def total_turning(p: CsPath) -> float:
    """Signed turning, the grouping key for homotopy bookkeeping."""
    return p.turning


def sample(p: CsPath, n: int) -> list[Pose]:
    """``n`` poses equally spaced in arc length from start to end.

    The last pose coincides with the integrated end pose; n must be >= 2.
    """
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    total = p.length
    joints = p.joints()
    if total <= 0.0:
        return [p.start] * n

    out = []
    # cumulative start lengths of each segment
    cum = [0.0]
    for seg in p.segments:
        cum.append(cum[-1] + seg.length)
    for k in range(n):
        s = total * k / (n - 1)
        if s >= total - EPS:
            out.append(joints[-1])
            continue
        i = 0
        while i + 1 < len(cum) and cum[i + 1] <= s:
            i += 1
        out.append(_pose_at(joints[i], p.segments[i], s - cum[i]))
    return out
