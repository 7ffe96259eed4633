"""Points of P^1 x P^1 and fat point configurations."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .exactmath import Matrix

VERTICAL = "vertical"
HORIZONTAL = "horizontal"
Direction = Literal["vertical", "horizontal"]


class NotProjectivePoint(ValueError):
    pass


class DuplicatePointError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ProjCoord:
    """A point ``[u:v]`` of P^1, stored with its first nonzero entry equal to 1."""

    u: Fraction
    v: Fraction

    def __post_init__(self):
        if self.u == 0 and self.v == 0:
            raise NotProjectivePoint("not a projective point: (0, 0)")
        lead = self.u if self.u != 0 else self.v
        if lead != 1:
            raise ValueError(f"[{self.u}:{self.v}] is not in canonical form")

    @classmethod
    def from_pair(cls, u, v) -> ProjCoord:
        u, v = Fraction(u), Fraction(v)
        if u == 0 and v == 0:
            raise NotProjectivePoint("not a projective point: (0, 0)")
        if u != 0:
            return cls(Fraction(1), v / u)
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def affine(cls, t) -> ProjCoord:
        """The point ``[1:t]``."""
        return cls(Fraction(1), Fraction(t))

    @property
    def pair(self) -> tuple[Fraction, Fraction]:
        return (self.u, self.v)

    def __str__(self) -> str:
        return f"[{self.u}:{self.v}]"


@dataclass(frozen=True, order=True)
class ProductPoint:
    x: ProjCoord
    y: ProjCoord

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def normalize_point(rawx: Sequence, rawy: Sequence) -> ProductPoint:
    """Build a point from two raw homogeneous pairs.

    >>> str(normalize_point((2, 0), (3, 3)))
    '([1:0],[1:1])'
    """
    return ProductPoint(ProjCoord.from_pair(*rawx), ProjCoord.from_pair(*rawy))


def affine_point(a, b) -> ProductPoint:
    """The point ``([1:a], [1:b])``."""
    return ProductPoint(ProjCoord.affine(a), ProjCoord.affine(b))


def _as_point(p) -> ProductPoint:
    if isinstance(p, ProductPoint):
        return p
    rawx, rawy = p
    return normalize_point(rawx, rawy)


@dataclass(frozen=True)
class FatPointConfig:
    """Distinct points with positive multiplicities, sorted lexicographically.

    Use :func:`make_config` to build one from loose input.
    """

    points: tuple[ProductPoint, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.points) != len(self.mults):
            raise ValueError("points and mults differ in length")
        if any(m < 1 for m in self.mults):
            raise ValueError("multiplicities must be positive")
        if len(set(self.points)) != len(self.points):
            raise DuplicatePointError("points are not distinct")
        if list(self.points) != sorted(self.points):
            raise ValueError("points must be sorted; use make_config")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(zip(self.points, self.mults))

    @property
    def is_reduced(self) -> bool:
        return all(m == 1 for m in self.mults)

    def scaled(self, m: int) -> FatPointConfig:
        """Multiply every multiplicity by ``m`` (``m >= 1``)."""
        if m < 1:
            raise ValueError("scale factor must be positive")
        return FatPointConfig(self.points, tuple(m * k for k in self.mults))

    def reduced(self) -> FatPointConfig:
        return FatPointConfig(self.points, (1,) * len(self.points))

    def x_coords(self) -> tuple[ProjCoord, ...]:
        return tuple(sorted({p.x for p in self.points}))

    def y_coords(self) -> tuple[ProjCoord, ...]:
        return tuple(sorted({p.y for p in self.points}))

    def fiber_bound(self) -> int:
        """Degree ``k`` such that a union of fibers of bi-degree <= (k, k) vanishes on the scheme.

        Taking every vertical fiber through the support, each with the largest
        multiplicity among its points, gives a form of bi-degree ``(bound_V, 0)``;
        likewise horizontally.  The smaller of the two is returned.
        """
        if not self.points:
            return 0
        vert: dict[ProjCoord, int] = defaultdict(int)
        hor: dict[ProjCoord, int] = defaultdict(int)
        for p, m in self:
            vert[p.x] = max(vert[p.x], m)
            hor[p.y] = max(hor[p.y], m)
        return min(sum(vert.values()), sum(hor.values()))

    def __str__(self) -> str:
        body = ", ".join(
            str(p) if m == 1 else f"{m}*{p}" for p, m in self
        )
        return "{" + body + "}"


def make_config(points: Iterable, mults: Iterable[int] | None = None) -> FatPointConfig:
    """Canonicalise, drop zero multiplicities, reject duplicates, sort.

    ``points`` may hold :class:`ProductPoint` objects or raw pairs
    ``((u, v), (u', v'))``.  ``mults`` defaults to all ones.
    """
    pts = [_as_point(p) for p in points]
    ms = [1] * len(pts) if mults is None else [int(m) for m in mults]
    if len(ms) != len(pts):
        raise ValueError(f"{len(pts)} points but {len(ms)} multiplicities")
    for i, m in enumerate(ms):
        if m < 0:
            raise ValueError(f"negative multiplicity {m} at index {i}")
    seen: dict[ProductPoint, int] = {}
    for i, (p, m) in enumerate(zip(pts, ms)):
        if p in seen:
            raise DuplicatePointError(
                f"points at indices {seen[p]} and {i} coincide: {p}"
            )
        seen[p] = i
    kept = sorted((p, m) for p, m in zip(pts, ms) if m > 0)
    return FatPointConfig(tuple(p for p, _ in kept), tuple(m for _, m in kept))


def affine_config(coords: Iterable[tuple], mults: Iterable[int] | None = None) -> FatPointConfig:
    """Config from affine pairs ``(a, b)`` meaning ``([1:a], [1:b])``."""
    return make_config([affine_point(a, b) for a, b in coords], mults)


def grid_config(xs: Iterable, ys: Iterable, m: int = 1) -> FatPointConfig:
    """The grid ``xs x ys`` of affine points, all with multiplicity ``m``."""
    pts = [affine_point(a, b) for a in xs for b in ys]
    return make_config(pts, [m] * len(pts))


def is_grid(Z: FatPointConfig) -> tuple[bool, tuple[ProjCoord, ...], tuple[ProjCoord, ...]]:
    """Whether the support of ``Z`` is a full product ``Z_V x Z_H``.

    Returns the flag together with the sorted distinct x- and y-coordinates.
    """
    zv, zh = Z.x_coords(), Z.y_coords()
    flag = len(Z) == len(zv) * len(zh)
    return flag, zv, zh


def missing_grid_points(Z: FatPointConfig) -> list[ProductPoint]:
    """Product pairs ``(v, h)`` of the coordinate sets that are not in ``Z``."""
    have = set(Z.points)
    return [
        ProductPoint(v, h) for v in Z.x_coords() for h in Z.y_coords()
        if ProductPoint(v, h) not in have
    ]


@dataclass(frozen=True)
class Fiber:
    """A fiber of one of the projections: ``{x = base}`` (vertical) or ``{y = base}``."""

    direction: Direction
    base: ProjCoord

    def __post_init__(self):
        if self.direction not in (VERTICAL, HORIZONTAL):
            raise ValueError(f"unknown fiber direction {self.direction!r}")

    def contains(self, P: ProductPoint) -> bool:
        return (P.x if self.direction == VERTICAL else P.y) == self.base

    def linear_form(self) -> tuple[Fraction, Fraction]:
        """Coefficients ``(l0, l1)`` of the linear form ``l0*t0 + l1*t1`` cutting the fiber.

        For base ``[a:b]`` this is ``a*t1 - b*t0``, so the fiber at ``[1:0]`` is ``t1``.
        """
        return (-self.base.v, self.base.u)

    def __str__(self) -> str:
        return f"{self.direction} fiber at {self.base}"


def on_single_fiber(Z: FatPointConfig) -> Fiber | None:
    """A fiber containing every point of ``Z`` (vertical preferred), else ``None``."""
    if not Z.points:
        raise ValueError("empty configuration")
    zv, zh = Z.x_coords(), Z.y_coords()
    if len(zv) == 1:
        return Fiber(VERTICAL, zv[0])
    if len(zh) == 1:
        return Fiber(HORIZONTAL, zh[0])
    return None


def _chart(c: ProjCoord) -> Matrix:
    if c.u == 1:
        return Matrix([[1, 0], [-c.v, 1]])
    return Matrix([[0, 1], [1, 0]])


def chart_inverse(c: ProjCoord) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Inverse of the chart matrix sending ``c`` to ``[1:0]``, as nested tuples."""
    if c.u == 1:
        return ((Fraction(1), Fraction(0)), (c.v, Fraction(1)))
    return ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))


def chart_transform(P: ProductPoint) -> tuple[Matrix, Matrix]:
    """Invertible matrices ``(A, B)`` with ``A @ P.x ~ (1, 0)`` and ``B @ P.y ~ (1, 0)``."""
    return _chart(P.x), _chart(P.y)


def apply_chart(A: Matrix, c: ProjCoord) -> ProjCoord:
    u, v = A.apply(c.pair)
    return ProjCoord.from_pair(u, v)
