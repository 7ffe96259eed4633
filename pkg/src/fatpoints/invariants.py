"""Initial degrees alpha*, alpha+ of symbolic powers and related sequences.

For a configuration ``Z`` the symbolic power ``I^(m)`` is the ideal of the fat
point scheme ``mZ``; :func:`alpha_star` and :func:`alpha_plus` search bi-degrees
for the least degree at which the interpolation matrix acquires a kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .exactmath import DEFAULT_PRIME
from .geometry import FatPointConfig
from .linsys import BiDegree, BiForm, has_section, witness_form

STAR = "star"
PLUS = "plus"
Variant = Literal["star", "plus"]


def _check_variant(variant: str) -> None:
    if variant not in (STAR, PLUS):
        raise ValueError(f"variant must be 'star' or 'plus', got {variant!r}")


def _degrees(variant: str, d: int):
    if variant == STAR:
        yield BiDegree(d, d)
    else:
        for k in range(d + 1):
            yield BiDegree(k, d - k)


def _found(Z: FatPointConfig, variant: str, d: int, modp: int | None) -> BiDegree | None:
    for deg in _degrees(variant, d):
        if has_section(Z, deg, modp):
            return deg
    return None


@lru_cache(maxsize=65536)
def _search(Z: FatPointConfig, variant: str, modp: int | None) -> tuple[int, BiDegree]:
    # Sections of degree d times x0*y0 (star) or x0 (plus) give sections of
    # degree d+1, so existence is monotone in d and bisection finds the least d.
    lo, hi = 0, Z.fiber_bound()
    best = _found(Z, variant, hi, modp)
    if best is None:
        raise AssertionError(f"no section at the fiber bound {hi} for {Z}")
    while lo < hi:
        mid = (lo + hi) // 2
        deg = _found(Z, variant, mid, modp)
        if deg is None:
            lo = mid + 1
        else:
            hi, best = mid, deg
    return hi, best


def alpha_weighted(
    Z: FatPointConfig, variant: Variant = STAR, *, modp: int | None = None
) -> int:
    """alpha* or alpha+ of the scheme ``Z`` with its stored multiplicities.

    The empty configuration gives 0 (constants are sections of O(0,0)).
    Passing ``modp`` screens each bi-degree over F_p and confirms over Q; the
    result is identical to the purely rational scan.
    """
    _check_variant(variant)
    return _search(Z, variant, modp)[0]


def alpha_split(
    Z: FatPointConfig, variant: Variant = STAR, m: int | None = None, *, modp: int | None = None
) -> tuple[int, BiDegree]:
    """The invariant together with the first bi-degree realising it."""
    _check_variant(variant)
    return _search(Z if m is None else Z.scaled(m), variant, modp)


def alpha_star(Z: FatPointConfig, m: int | None = None, *, modp: int | None = None) -> int:
    """Least ``k`` with a nonzero form of bi-degree ``(k, k)`` vanishing on ``mZ``.

    With ``m=None`` the stored multiplicities are used as they are.
    """
    return alpha_split(Z, STAR, m, modp=modp)[0]


def alpha_plus(Z: FatPointConfig, m: int | None = None, *, modp: int | None = None) -> int:
    """Least ``k1 + k2`` with a nonzero form of bi-degree ``(k1, k2)`` vanishing on ``mZ``."""
    return alpha_split(Z, PLUS, m, modp=modp)[0]


def alpha(Z: FatPointConfig, variant: Variant, m: int | None = None, *, modp: int | None = None) -> int:
    return alpha_split(Z, variant, m, modp=modp)[0]


def alpha_witness(
    Z: FatPointConfig, variant: Variant = STAR, m: int | None = None, *, modp: int | None = None
) -> tuple[int, BiDegree, BiForm]:
    """Invariant, bi-degree and an explicit form realising it."""
    scheme = Z if m is None else Z.scaled(m)
    value, deg = alpha_split(scheme, variant, modp=modp)
    return value, deg, witness_form(scheme, deg)


def alpha_sequence(
    Z: FatPointConfig, M: int, variant: Variant = STAR, *, modp: int | None = None
) -> list[int]:
    """``[alpha(I^(1)), ..., alpha(I^(M))]``."""
    return [alpha(Z, variant, m, modp=modp) for m in range(1, M + 1)]


@dataclass(frozen=True)
class JumpVector:
    """Successive increments ``alpha(I^(m)) - alpha(I^(m-1))`` for ``m = 1..M``.

    The plus variant is an extension: only the star jumps are classical.
    """

    variant: str
    values: tuple[int, ...]

    def __post_init__(self):
        _check_variant(self.variant)

    def is_consistent(self) -> bool:
        """Plus jumps are all >= 1; star jumps are >= 0 with no two consecutive zeros."""
        if self.variant == PLUS:
            return all(v >= 1 for v in self.values)
        if any(v < 0 for v in self.values):
            return False
        return not any(a == 0 == b for a, b in zip(self.values, self.values[1:]))


def jump_vector(
    Z: FatPointConfig, M: int, variant: Variant = STAR, *, modp: int | None = None
) -> JumpVector:
    if M < 1:
        raise ValueError("M must be at least 1")
    seq = [0] + alpha_sequence(Z, M, variant, modp=modp)
    return JumpVector(variant, tuple(b - a for a, b in zip(seq, seq[1:])))


def jumps_from_alphas(alphas, variant: Variant = STAR) -> JumpVector:
    seq = [0] + list(alphas)
    return JumpVector(variant, tuple(b - a for a, b in zip(seq, seq[1:])))


@dataclass(frozen=True)
class GridSequenceState:
    a_m: int
    b_m: int
    m: int

    @property
    def alpha(self) -> int:
        return max(self.a_m, self.b_m)


def _check_grid_sides(a: int, b: int) -> None:
    # the recursion says nothing useful for degenerate grids
    if a < 1 or b < 1:
        raise ValueError(f"grid sides must be positive, got ({a}, {b})")


def grid_steps(a: int, b: int, M: int) -> list[GridSequenceState]:
    """States ``m = 0..M`` of the two-counter recursion for an ``(a, b)``-grid.

    At each step the a-counter advances by ``a`` when ``a_{m-1} + a <= b_{m-1} + b``
    and otherwise the b-counter advances by ``b``.
    """
    _check_grid_sides(a, b)
    if M < 0:
        raise ValueError("m must be nonnegative")
    am, bm = 0, 0
    out = [GridSequenceState(0, 0, 0)]
    for m in range(1, M + 1):
        if am + a <= bm + b:
            am += a
        else:
            bm += b
        out.append(GridSequenceState(am, bm, m))
    return out


def grid_sequence(a: int, b: int, m: int) -> GridSequenceState:
    return grid_steps(a, b, m)[-1]


def grid_alpha_star(a: int, b: int, m: int) -> int:
    """Closed-form alpha* of the ``m``-th symbolic power of an ``(a, b)``-grid."""
    if m < 1:
        raise ValueError("m must be positive")
    return grid_sequence(a, b, m).alpha


def recover_grid(J: JumpVector) -> tuple[int, int]:
    """Recover the sides ``(a, b)``, ``a <= b``, of a grid from its star jumps.

    ``a`` is the first jump; with ``r`` the first index whose jump drops below
    ``a``, ``b`` is the sum of the first ``r`` jumps.
    """
    if J.variant != STAR:
        raise ValueError("grid recovery needs the star jump vector")
    if not J.values:
        raise ValueError("jump vector too short")
    a = J.values[0]
    for r, f in enumerate(J.values, start=1):
        if f < a:
            return a, sum(J.values[:r])
    raise ValueError("jump vector too short")


def grid_minus_point_alpha(a: int, m: int) -> int:
    """alpha*(I^(m)) for an ``(a, a)``-grid with one point removed, ``a >= 5``."""
    if a < 5:
        raise ValueError("closed form holds only for a >= 5")
    if m < 1:
        raise ValueError("m must be positive")
    k = (m + 1) // 2
    return k * a - 1 if m % 2 else k * a


@dataclass(frozen=True)
class WaldschmidtBounds:
    variant: str
    lower: Fraction | None
    upper: Fraction
    m_used: int

    def __post_init__(self):
        if self.lower is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")


def waldschmidt_bounds(
    Z: FatPointConfig, variant: Variant = STAR, M: int = 4, *, modp: int | None = None
) -> WaldschmidtBounds:
    """Exact bounds on the Waldschmidt constant from the first ``M`` symbolic powers.

    The upper bound is ``min alpha(I^(m))/m`` (the constant is an infimum).
    For the star variant of a reduced configuration the lower bound is
    ``alpha*(I)/2``; otherwise no lower bound is reported.
    """
    _check_variant(variant)
    if not Z.points:
        raise ValueError("empty configuration")
    if M < 1:
        raise ValueError("M must be at least 1")
    seq = alpha_sequence(Z, M, variant, modp=modp)
    upper = min(Fraction(v, m) for m, v in enumerate(seq, start=1))
    lower = None
    if variant == STAR and Z.is_reduced:
        lower = Fraction(seq[0], 2)
    return WaldschmidtBounds(variant, lower, upper, M)
