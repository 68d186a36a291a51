"""Discrete causal geometry of the two-dimensional Minkowski net.

Minimal double cones of unit diameter tile a thickened Cauchy surface:
integer-site cones are centered at time 0, half-integer-site cones sit a
half step below, and integer time translates of both fill the plane.  In
null coordinates ``u = t + x`` and ``v = t - x`` every minimal cone
occupies a unit cell with integer corner ``(a, b)``:

* integer site x, time step t      ->  (a, b) = (x + t, t - x)
* half-integer site x, time step t ->  (a, b) = (x - 1/2 + t, t - x - 1/2)

Every double cone of the net is then an axis-aligned rectangle of cells,
and pasts, light cones and wedges are quadrants, so all causal predicates
reduce to integer comparisons.  The three past notions for a pair of
regions (union / intersection / pointwise intersection of backward
cones) stay infinite; they are exposed as membership predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True, order=True)
class HalfIndex:
    """Half-integer spatial index, stored as twice its value (exact)."""

    twice: int

    @staticmethod
    def of(value) -> "HalfIndex":
        tw = round(2 * value)
        if abs(2 * value - tw) > 1e-9:
            raise ValueError(f"{value} is not a half-integer")
        return HalfIndex(int(tw))

    @property
    def value(self) -> float:
        return self.twice / 2.0

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def shifted(self, steps: int) -> "HalfIndex":
        return HalfIndex(self.twice + 2 * steps)

    def __repr__(self) -> str:
        return f"{self.twice // 2}" if self.is_integer else f"{self.twice}/2"


Cell = Tuple[int, int]


@dataclass(frozen=True, order=True)
class MinimalCone:
    """Minimal double cone: spatial index plus integer time translate."""

    x: HalfIndex
    t: int = 0

    @staticmethod
    def at(x, t: int = 0) -> "MinimalCone":
        return MinimalCone(HalfIndex.of(x), t)

    @property
    def cell(self) -> Cell:
        if self.x.is_integer:
            half = self.x.twice // 2
            return (half + self.t, self.t - half)
        return ((self.x.twice - 1) // 2 + self.t, self.t - (self.x.twice + 1) // 2)

    @staticmethod
    def from_cell(cell: Cell) -> "MinimalCone":
        a, b = cell
        tw = a - b
        t = (a + b) // 2 if tw % 2 == 0 else (a + b + 1) // 2
        return MinimalCone(HalfIndex(tw), t)

    @property
    def center(self) -> Tuple[float, float]:
        """(t, x) center of the cone in Minkowski coordinates."""
        a, b = self.cell
        return ((a + b) / 2.0, (a - b) / 2.0)

    def translated(self, dt: int = 0, dx: int = 0) -> "MinimalCone":
        a, b = self.cell
        return MinimalCone.from_cell((a + dt + dx, b + dt - dx))


def causally_precedes(c1: MinimalCone, c2: MinimalCone) -> bool:
    """True when c1 lies in the backward light cone of c2 (cells compare
    componentwise in null coordinates)."""
    a1, b1 = c1.cell
    a2, b2 = c2.cell
    return a1 <= a2 and b1 <= b2


def cones_spacelike(c1: MinimalCone, c2: MinimalCone) -> bool:
    """Strict spacelike separation: |dx| > |dt| between cell centers."""
    a1, b1 = c1.cell
    a2, b2 = c2.cell
    return (a1 - a2) * (b1 - b2) < 0


@dataclass(frozen=True)
class Region:
    """Canonical double cone of the net: a rectangle of minimal-cone cells."""

    a1: int
    a2: int
    b1: int
    b2: int

    def __post_init__(self):
        if self.a1 > self.a2 or self.b1 > self.b2:
            raise ValueError("empty region")

    @staticmethod
    def from_cones(cones: Iterable[MinimalCone]) -> "Region":
        cells = [c.cell for c in cones]
        if not cells:
            raise ValueError("a region needs at least one minimal cone")
        return Region(
            a1=min(a for a, _ in cells),
            a2=max(a for a, _ in cells),
            b1=min(b for _, b in cells),
            b2=max(b for _, b in cells),
        )

    @staticmethod
    def cauchy_interval(lo, hi) -> "Region":
        """Surface double cone spanned by the minimal cones at indices lo..hi."""
        return span_cone(MinimalCone.at(lo), MinimalCone.at(hi))

    @property
    def n_plus(self) -> int:
        return self.a2 - self.a1 + 1

    @property
    def n_minus(self) -> int:
        return self.b2 - self.b1 + 1

    @property
    def n_cones(self) -> int:
        """Generator count n(O) = n_+ + n_- - 1."""
        return self.n_plus + self.n_minus - 1

    @property
    def minimals(self) -> tuple:
        """Every minimal cone contained in the region."""
        return tuple(
            MinimalCone.from_cell((a, b))
            for a in range(self.a1, self.a2 + 1)
            for b in range(self.b1, self.b2 + 1)
        )

    @property
    def base_cones(self) -> tuple:
        """The n(O) cones on the past rim (a = a1 or b = b1); these form the
        earliest generating slice of the region."""
        out = [MinimalCone.from_cell((self.a1, b)) for b in range(self.b1, self.b2 + 1)]
        out += [
            MinimalCone.from_cell((a, self.b1)) for a in range(self.a1 + 1, self.a2 + 1)
        ]
        return tuple(sorted(out))

    def contains_cone(self, c: MinimalCone) -> bool:
        a, b = c.cell
        return self.a1 <= a <= self.a2 and self.b1 <= b <= self.b2

    def contains_region(self, other: "Region") -> bool:
        return (
            self.a1 <= other.a1
            and other.a2 <= self.a2
            and self.b1 <= other.b1
            and other.b2 <= self.b2
        )

    def translated(self, dt: int = 0, dx: int = 0) -> "Region":
        return Region(
            self.a1 + dt + dx, self.a2 + dt + dx, self.b1 + dt - dx, self.b2 + dt - dx
        )

    def join(self, other: "Region") -> "Region":
        """Smallest double cone containing both regions."""
        return Region(
            min(self.a1, other.a1),
            max(self.a2, other.a2),
            min(self.b1, other.b1),
            max(self.b2, other.b2),
        )

    def intersect(self, pred: "Quadrant") -> "Region":
        """Intersection with a quadrant predicate, again a rectangle."""
        a1 = self.a1 if pred.a_min is None else max(self.a1, pred.a_min)
        a2 = self.a2 if pred.a_max is None else min(self.a2, pred.a_max)
        b1 = self.b1 if pred.b_min is None else max(self.b1, pred.b_min)
        b2 = self.b2 if pred.b_max is None else min(self.b2, pred.b_max)
        return Region(a1, a2, b1, b2)

    def describe(self) -> dict:
        return {
            "cells": [[c.x.value, c.t] for c in sorted(self.minimals)],
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_cones": self.n_cones,
        }

    def __repr__(self) -> str:
        return f"Region(a=[{self.a1},{self.a2}], b=[{self.b1},{self.b2}])"


def span_cone(c1: MinimalCone, c2: MinimalCone) -> Region:
    """Smallest double cone of the net containing both minimal cones."""
    return Region.from_cones([c1, c2])


def spacelike_separated(r1: Region, r2: Region) -> bool:
    """True when every cone of r1 is strictly spacelike to every cone of r2."""
    return (r1.a2 < r2.a1 and r2.b2 < r1.b1) or (r2.a2 < r1.a1 and r1.b2 < r2.b1)


def left_of(r1: Region, r2: Region) -> bool:
    """r1 sits in the left wedge of r2 (and is spacelike to it)."""
    return r1.a2 < r2.a1 and r1.b1 > r2.b2


@dataclass(frozen=True)
class Quadrant:
    """Membership predicate over minimal cones; None bounds are infinite."""

    a_min: int | None = None
    a_max: int | None = None
    b_min: int | None = None
    b_max: int | None = None
    label: str = ""

    def __call__(self, c: MinimalCone) -> bool:
        a, b = c.cell
        return (
            (self.a_min is None or a >= self.a_min)
            and (self.a_max is None or a <= self.a_max)
            and (self.b_min is None or b >= self.b_min)
            and (self.b_max is None or b <= self.b_max)
        )

    def contains_region(self, r: Region) -> bool:
        return all(self(c) for c in r.minimals)

    def describe(self) -> dict:
        return {
            "label": self.label,
            "a_min": self.a_min,
            "a_max": self.a_max,
            "b_min": self.b_min,
            "b_max": self.b_max,
        }


@dataclass(frozen=True)
class PredicateUnion:
    members: tuple
    label: str = ""

    def __call__(self, c: MinimalCone) -> bool:
        return any(p(c) for p in self.members)

    def contains_region(self, r: Region) -> bool:
        return all(self(c) for c in r.minimals)

    def describe(self) -> dict:
        return {"label": self.label, "union": [p.describe() for p in self.members]}


def backward_cone(r: Region) -> Quadrant:
    """Smallest backward light cone containing the region."""
    return Quadrant(a_max=r.a2, b_max=r.b2, label="I_minus")


def forward_cone(r: Region) -> Quadrant:
    return Quadrant(a_min=r.a1, b_min=r.b1, label="I_plus")


def left_wedge(r: Region) -> Quadrant:
    """Smallest left wedge containing the region."""
    return Quadrant(a_max=r.a2, b_min=r.b1, label="W_left")


def right_wedge(r: Region) -> Quadrant:
    return Quadrant(a_min=r.a1, b_max=r.b2, label="W_right")


def wedges_and_bounds(r: Region):
    """(W_left, W_right, I_plus, I_minus) membership predicates for r."""
    return left_wedge(r), right_wedge(r), forward_cone(r), backward_cone(r)


def wpast(r1: Region, r2: Region) -> PredicateUnion:
    """Weak common past: union of the backward cones."""
    return PredicateUnion(
        members=(backward_cone(r1), backward_cone(r2)), label="wpast"
    )


def cpast(r1: Region, r2: Region) -> Quadrant:
    """Common past: intersection of the backward cones."""
    return Quadrant(
        a_max=min(r1.a2, r2.a2), b_max=min(r1.b2, r2.b2), label="cpast"
    )


def spast(r1: Region, r2: Region) -> Quadrant:
    """Strong common past: cones preceding every point of both regions."""
    return Quadrant(
        a_max=min(r1.a1, r2.a1) - 1, b_max=min(r1.b1, r2.b1) - 1, label="spast"
    )


def first_guess_common_past(r1: Region, r2: Region) -> Tuple[Region, int]:
    """Time-shifted join of the two regions: the smallest downward translate
    of r1 v r2 that fits inside their common past.  Returns (region, shift)."""
    joined = r1.join(r2)
    past = cpast(r1, r2)
    t = 0
    while t < 4 * (joined.n_cones + 2):
        cand = joined.translated(dt=-t)
        if past.contains_region(cand):
            return cand, t
        t += 1
    raise ValueError("no downward translate of the join fits the common past")
