"""Interpolation matrices for fat points in a given bi-degree.

A form of bi-degree ``(d1, d2)`` is stored as a ``(d1+1) x (d2+1)`` grid whose
entry ``(i, j)`` multiplies ``x0^(d1-i) x1^i y0^(d2-j) y1^j``.  Vanishing to
order ``m`` at a point ``P`` is imposed by moving ``P`` to ``([1:0],[1:0])``
with :func:`~fatpoints.geometry.chart_transform` and asking that every
coefficient of ``x1^u y1^v`` with ``u + v < m`` vanish.  No derivatives are
involved, so the same rows work in any characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .exactmath import (
    DEFAULT_PRIME,
    Matrix,
    certified_kernel_vector,
    kernel_basis,
    rank,
    rank_modp,
)
from .geometry import (
    HORIZONTAL,
    FatPointConfig,
    Fiber,
    ProductPoint,
    ProjCoord,
    chart_inverse,
)


class BiDegree(NamedTuple):
    d1: int
    d2: int

    @classmethod
    def of(cls, d1: int, d2: int) -> BiDegree:
        if d1 < 0 or d2 < 0:
            raise ValueError(f"invalid bi-degree ({d1}, {d2})")
        return cls(int(d1), int(d2))

    @property
    def dim(self) -> int:
        """Dimension of the space of forms of this bi-degree."""
        return (self.d1 + 1) * (self.d2 + 1)

    def monomials(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.d1 + 1) for j in range(self.d2 + 1)]


def _bidegree(d) -> BiDegree:
    return d if isinstance(d, BiDegree) else BiDegree.of(*d)


@dataclass(frozen=True)
class BiForm:
    """A nonzero bi-homogeneous form; see the module docstring for the layout."""

    deg: BiDegree
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        d1, d2 = self.deg
        if len(self.coeffs) != d1 + 1 or any(len(r) != d2 + 1 for r in self.coeffs):
            raise ValueError(f"coefficient grid does not match bi-degree {self.deg}")
        if not any(c for r in self.coeffs for c in r):
            raise ValueError("the zero form is not a BiForm")

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence]) -> BiForm:
        rows = tuple(tuple(Fraction(c) for c in r) for r in grid)
        return cls(BiDegree.of(len(rows) - 1, len(rows[0]) - 1), rows)

    @classmethod
    def from_vector(cls, deg: BiDegree, v: Sequence) -> BiForm:
        d1, d2 = deg
        n = d2 + 1
        return cls(deg, tuple(tuple(Fraction(v[i * n + j]) for j in range(n)) for i in range(d1 + 1)))

    @classmethod
    def monomial(cls, i: int, di: int, j: int, dj: int, c=1) -> BiForm:
        """``c * x0^(di-i) x1^i y0^(dj-j) y1^j``."""
        grid = [[0] * (dj + 1) for _ in range(di + 1)]
        grid[i][j] = c
        return cls.from_grid(grid)

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(c for r in self.coeffs for c in r)

    def normalized(self) -> BiForm:
        lead = next(c for c in self.vector() if c)
        return BiForm(self.deg, tuple(tuple(c / lead for c in r) for r in self.coeffs))

    def __mul__(self, other: BiForm) -> BiForm:
        a1, a2 = self.deg
        b1, b2 = other.deg
        out = [[Fraction(0)] * (a2 + b2 + 1) for _ in range(a1 + b1 + 1)]
        for i, r in enumerate(self.coeffs):
            for j, c in enumerate(r):
                if not c:
                    continue
                for k, s in enumerate(other.coeffs):
                    for l, e in enumerate(s):
                        if e:
                            out[i + k][j + l] += c * e
        return BiForm.from_grid(out)

    def __call__(self, P: ProductPoint) -> Fraction:
        """Value at the representative ``((u, v), (u', v'))`` of ``P``."""
        x0, x1 = P.x.pair
        y0, y1 = P.y.pair
        d1, d2 = self.deg
        return sum(
            c * x0 ** (d1 - i) * x1**i * y0 ** (d2 - j) * y1**j
            for i, r in enumerate(self.coeffs)
            for j, c in enumerate(r)
        )

    def grid_strings(self) -> list[list[str]]:
        return [[str(c) for c in r] for r in self.coeffs]


def fiber_form(F: Fiber) -> BiForm:
    """The linear form cutting out ``F``, of bi-degree (1,0) or (0,1)."""
    l0, l1 = F.linear_form()
    if F.direction == HORIZONTAL:
        return BiForm.from_grid([[l0, l1]])
    return BiForm.from_grid([[l0], [l1]])


def _plain(x: Fraction) -> int | Fraction:
    # int arithmetic is much cheaper than Fraction for integral coordinates
    return x.numerator if x.denominator == 1 else x


@lru_cache(maxsize=4096)
def _expansions(c: ProjCoord, d: int, order: int) -> tuple[tuple[Fraction, ...], ...]:
    """For each ``i <= d``: first ``order`` coefficients in ``s`` of ``t0^(d-i) t1^i``
    after substituting ``t = chart_inverse(c) @ (1, s)``."""
    (r00, r01), (r10, r11) = (tuple(map(_plain, r)) for r in chart_inverse(c))
    out = []
    for i in range(d + 1):
        poly = [1]
        for lin in [(r00, r01)] * (d - i) + [(r10, r11)] * i:
            nxt = [0] * min(len(poly) + 1, order)
            for k, a in enumerate(poly):
                if not a:
                    continue
                if k < order:
                    nxt[k] += a * lin[0]
                if k + 1 < order:
                    nxt[k + 1] += a * lin[1]
            poly = nxt
        poly = poly + [0] * (order - len(poly))
        out.append(tuple(poly[:order]))
    return tuple(out)


@dataclass(frozen=True)
class ConditionsMatrix:
    matrix: Matrix
    row_labels: tuple[tuple[int, tuple[int, int]], ...]
    col_labels: tuple[tuple[int, int], ...]


def n_conditions(Z: FatPointConfig) -> int:
    return sum(m * (m + 1) // 2 for m in Z.mults)


def conditions_matrix(Z: FatPointConfig, d) -> ConditionsMatrix:
    """Rows are the vanishing conditions of ``Z``, columns the monomials of bi-degree ``d``.

    Its kernel is the space of forms of bi-degree ``d`` in
    ``I(P_1)^m_1 ∩ ... ∩ I(P_s)^m_s``.
    """
    d = _bidegree(d)
    cols = tuple(d.monomials())
    rows = []
    labels = []
    for k, (P, m) in enumerate(Z):
        X = _expansions(P.x, d.d1, m)
        Y = _expansions(P.y, d.d2, m)
        for u in range(m):
            for v in range(m - u):
                rows.append([X[i][u] * Y[j][v] for i, j in cols])
                labels.append((k, (u, v)))
    return ConditionsMatrix(Matrix(rows, ncols=len(cols)), tuple(labels), cols)


def h0(Z: FatPointConfig, d) -> int:
    """Dimension of the forms of bi-degree ``d`` vanishing on the fat point scheme ``Z``."""
    d = _bidegree(d)
    return d.dim - rank(conditions_matrix(Z, d).matrix)


def h0_modp(Z: FatPointConfig, d, p: int = DEFAULT_PRIME) -> int:
    """Same count computed over F_p.  Always ``>= h0(Z, d)``."""
    d = _bidegree(d)
    return d.dim - rank_modp(conditions_matrix(Z, d).matrix, p)


def has_section(Z: FatPointConfig, d, modp: int | None = None) -> bool:
    """Whether ``h0(Z, d) > 0``, decided exactly over Q.

    With ``modp`` set, a zero count over F_p settles the question (the modular
    rank never exceeds the rational one).  A positive count is confirmed by an
    exactly verified rational kernel vector, falling back to the full rational
    rank when no such vector is found.
    """
    d = _bidegree(d)
    if modp is None:
        return h0(Z, d) > 0
    M = conditions_matrix(Z, d).matrix
    if d.dim - rank_modp(M, modp) == 0:
        return False
    if certified_kernel_vector(M) is not None:
        return True
    return d.dim - rank(M) > 0


def witness_form(Z: FatPointConfig, d) -> BiForm | None:
    """First kernel basis vector of the conditions matrix as a form, or ``None``."""
    d = _bidegree(d)
    M = conditions_matrix(Z, d).matrix
    basis = kernel_basis(M)
    if not basis:
        return None
    return BiForm.from_vector(d, basis[0])


def transformed_coeffs(f: BiForm, P: ProductPoint) -> list[list[Fraction]]:
    """Coefficients of ``f`` after moving ``P`` to ``([1:0],[1:0])``, indexed by ``(u, v)``."""
    d1, d2 = f.deg
    X = _expansions(P.x, d1, d1 + 1)
    Y = _expansions(P.y, d2, d2 + 1)
    out = [[Fraction(0)] * (d2 + 1) for _ in range(d1 + 1)]
    for i, r in enumerate(f.coeffs):
        for j, c in enumerate(r):
            if not c:
                continue
            for u in range(d1 + 1):
                xu = X[i][u]
                if xu:
                    row = out[u]
                    for v in range(d2 + 1):
                        row[v] += c * xu * Y[j][v]
    return out


def mult_at(f: BiForm, P: ProductPoint) -> int:
    """Multiplicity of the curve ``f = 0`` at ``P`` (0 if ``f(P) != 0``)."""
    T = transformed_coeffs(f, P)
    return min(u + v for u, r in enumerate(T) for v, c in enumerate(r) if c)


def _divide_binary(g: Sequence[Fraction], l0: Fraction, l1: Fraction) -> list[Fraction] | None:
    """Exact quotient of ``sum g_i t0^(d-i) t1^i`` by ``l0*t0 + l1*t1``, or ``None``."""
    d = len(g) - 1
    if d == 0:
        return None
    q = [Fraction(0)] * d
    if l0:
        for i in range(d):
            q[i] = (g[i] - (l1 * q[i - 1] if i else 0)) / l0
        if g[d] != l1 * q[d - 1]:
            return None
    else:
        if g[0]:
            return None
        for i in range(1, d + 1):
            q[i - 1] = g[i] / l1
    return q


def divide_by_fiber(f: BiForm, F: Fiber) -> BiForm | None:
    """``f / L_F`` when the linear form ``L_F`` of the fiber divides ``f``, else ``None``."""
    l0, l1 = F.linear_form()
    d1, d2 = f.deg
    if F.direction == HORIZONTAL:
        if d2 == 0:
            return None
        rows = []
        for r in f.coeffs:
            q = _divide_binary(r, l0, l1)
            if q is None:
                return None
            rows.append(q)
        return BiForm.from_grid(rows)
    if d1 == 0:
        return None
    cols = []
    for j in range(d2 + 1):
        q = _divide_binary([f.coeffs[i][j] for i in range(d1 + 1)], l0, l1)
        if q is None:
            return None
        cols.append(q)
    return BiForm.from_grid([[cols[j][i] for j in range(d2 + 1)] for i in range(d1)])
