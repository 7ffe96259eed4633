"""Exact dense linear algebra over Q and over prime fields.

Rational matrices hold ``int`` or :class:`fractions.Fraction` entries
(integral values are always stored as ``int``); modular matrices hold plain
``int`` residues in ``[0, p)``.  Ranks over Q are computed by
fraction-free (Bareiss) elimination on an integer copy of the matrix, so no
rational normalisation happens inside the elimination loop.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = 1_000_003

Scalar = Fraction | int


class MixedModeError(TypeError):
    """Raised when rational and modular entries are combined in one matrix."""


class ModulusError(ValueError):
    """Raised when an entry cannot be reduced modulo the requested prime."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Matrix:
    """Immutable dense matrix, either over Q (``modulus is None``) or over F_p.

    >>> Matrix([[1, 2], [2, 4]]).shape
    (2, 2)
    """

    __slots__ = ("_rows", "nrows", "ncols", "modulus")

    def __init__(
        self,
        rows: Iterable[Sequence[Scalar]],
        ncols: int | None = None,
        modulus: int | None = None,
    ):
        data = [tuple(r) for r in rows]
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for i, r in enumerate(data):
            if len(r) != ncols:
                raise ValueError(f"row {i} has {len(r)} entries, expected {ncols}")
        if modulus is None:
            data = [tuple(_as_fraction(x) for x in r) for r in data]
        else:
            if not is_prime(modulus):
                raise ValueError(f"modulus {modulus} is not prime")
            data = [tuple(_as_residue(x, modulus) for x in r) for r in data]
        self._rows = tuple(data)
        self.nrows = len(data)
        self.ncols = ncols
        self.modulus = modulus

    @classmethod
    def identity(cls, n: int, modulus: int | None = None) -> Matrix:
        return cls(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)],
            ncols=n,
            modulus=modulus,
        )

    @classmethod
    def zeros(cls, nrows: int, ncols: int, modulus: int | None = None) -> Matrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols, modulus=modulus)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.modulus == other.modulus
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.modulus, self._rows))

    def __repr__(self) -> str:
        tag = "Q" if self.modulus is None else f"GF({self.modulus})"
        return f"Matrix<{self.nrows}x{self.ncols} over {tag}>"

    def transpose(self) -> Matrix:
        cols = [[r[j] for r in self._rows] for j in range(self.ncols)]
        return Matrix(cols, ncols=self.nrows, modulus=self.modulus)

    def apply(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Return ``M @ v``."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        out = [sum(a * b for a, b in zip(r, v)) for r in self._rows]
        if self.modulus is not None:
            out = [int(x) % self.modulus for x in out]
        return tuple(out)


def _as_fraction(x) -> int | Fraction:
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    raise MixedModeError(f"rational matrix entry must be int or Fraction, got {x!r}")


def _as_residue(x, p: int) -> int:
    if isinstance(x, Fraction) or not isinstance(x, (int, np.integer)):
        raise MixedModeError(f"modular matrix entry must be an int residue, got {x!r}")
    x = int(x)
    if not 0 <= x < p:
        raise MixedModeError(f"residue {x} outside [0, {p})")
    return x


def _integer_rows(M: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in M.rows:
        den = lcm(*(x.denominator for x in r if type(x) is not int))
        if den == 1:
            out.append(list(r))
        else:
            out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def bareiss_rank(A: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.  ``A`` is consumed."""
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            a = abs(A[i][c])
            if a > best_abs:
                best, best_abs = i, a
        if best < 0:
            continue
        if best != r:
            A[r], A[best] = A[best], A[r]
        prow = A[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = A[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def _rank_residues(A: np.ndarray, p: int) -> int:
    """Gaussian elimination over F_p on a residue array (modified in place)."""
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = A[r + 1 :, c]
        if below.any():
            A[r + 1 :, c:] = (A[r + 1 :, c:] - np.outer(below, A[r, c:])) % p
        r += 1
    return r


def _residue_array(rows: Sequence[Sequence[int]], ncols: int, p: int) -> np.ndarray:
    # int64 holds (p-1)**2 for every p < 2**31
    dtype = np.int64 if p < 2**31 else object
    if not rows:
        return np.zeros((0, ncols), dtype=dtype)
    return np.array(rows, dtype=dtype).reshape(len(rows), ncols)


def _residues(M: Matrix, p: int) -> np.ndarray:
    """Entrywise reduction of a rational matrix as a residue array."""
    if M.modulus is not None:
        raise MixedModeError("matrix is already modular")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = []
    for i, r in enumerate(M.rows):
        if all(type(x) is int for x in r):
            out.append(r)
            continue
        row = []
        for j, x in enumerate(r):
            if type(x) is int:
                row.append(x)
            elif x.denominator % p == 0:
                raise ModulusError(
                    f"entry ({i}, {j}) = {x} has denominator divisible by {p}"
                )
            else:
                row.append(x.numerator * pow(x.denominator, -1, p))
        out.append(row)
    A = np.array(out, dtype=object).reshape(M.nrows, M.ncols) % p
    return A.astype(np.int64) if p < 2**31 else A


def reduce_mod(M: Matrix, p: int) -> Matrix:
    """Reduce a rational matrix entrywise modulo ``p``."""
    return Matrix(_residues(M, p).tolist(), ncols=M.ncols, modulus=p)


def rank(M: Matrix) -> int:
    """Exact rank of ``M`` over its own field."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.modulus is None:
        return bareiss_rank(_integer_rows(M))
    A = _residue_array(M.rows, M.ncols, M.modulus)
    return _rank_residues(A, M.modulus)


def rank_modp(M: Matrix, p: int = DEFAULT_PRIME) -> int:
    """Rank of the reduction of a rational matrix over F_p.

    Never exceeds ``rank(M)``.  Raises :class:`ModulusError` if ``p`` divides
    some denominator.
    """
    if M.nrows == 0 or M.ncols == 0:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return 0
    return _rank_residues(_residues(M, p), p)


def _rref(rows: list[list], p: int | None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q (Fractions) or F_p (ints)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        i = next((k for k in range(r, nrows) if rows[k][c]), None)
        if i is None:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        if p is None:
            rows[r] = [x / piv for x in rows[r]]
        else:
            inv = pow(piv, -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
        prow = rows[r]
        for k in range(nrows):
            f = rows[k][c]
            if k != r and f:
                if p is None:
                    rows[k] = [a - f * b for a, b in zip(rows[k], prow)]
                else:
                    rows[k] = [(a - f * b) % p for a, b in zip(rows[k], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def kernel_basis(M: Matrix) -> list[tuple[Scalar, ...]]:
    """A basis of the right kernel, each vector scaled so its first nonzero entry is 1.

    Vectors are returned in order of their free column, so the list is
    deterministic for a given matrix.
    """
    p = M.modulus
    if p is None:
        # clear denominators first: cheaper Fraction arithmetic, same kernel
        rows = [[Fraction(x) for x in r] for r in _integer_rows(M)]
    else:
        rows = [list(r) for r in M.rows]
    red, pivots = _rref(rows, p)
    pivot_set = set(pivots)
    zero = Fraction(0) if p is None else 0
    one = Fraction(1) if p is None else 1
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [zero] * M.ncols
        v[f] = one
        for row, c in zip(red, pivots):
            v[c] = -row[f] if p is None else (-row[f]) % p
        basis.append(normalize_vector(v, p))
    return basis


def normalize_vector(v: Sequence[Scalar], p: int | None = None) -> tuple[Scalar, ...]:
    """Scale ``v`` so that its first nonzero entry is 1."""
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("cannot normalize the zero vector")
    if p is None:
        return tuple(Fraction(x) / lead for x in v)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in v)


def _rref_residues(A: np.ndarray, p: int) -> list[int]:
    """In-place reduced row echelon form over F_p; returns the pivot columns."""
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit, c:] = (A[hit, c:] - np.outer(col[hit], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def rational_reconstruction(u: int, N: int) -> Fraction | None:
    """The fraction ``a/b`` with ``a = u*b (mod N)`` and ``|a|, b <= sqrt(N/2)``, if any."""
    u %= N
    bound = isqrt(N // 2)
    r0, r1 = N, u
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def _crt_pair(a: int, n: int, b: int, p: int) -> int:
    # x = a (mod n), x = b (mod p)
    return a + n * ((b - a) * pow(n, -1, p) % p)


@cache
def large_primes(count: int) -> tuple[int, ...]:
    """The ``count`` largest primes below 2**31, descending."""
    out = []
    n = 2**31 - 1
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n -= 2
    return tuple(out)


def certified_kernel_vector(M: Matrix, max_primes: int = 40) -> tuple[Fraction, ...] | None:
    """A nonzero rational ``v`` with ``M @ v == 0`` checked exactly, or ``None``.

    The first reduced-echelon kernel vector is computed modulo several primes,
    lifted by CRT and rational reconstruction, and accepted only after the
    product ``M @ v`` is verified to vanish over Q.  ``None`` means no
    certificate was found within ``max_primes`` primes; it does not prove
    that the kernel is trivial.
    """
    if M.modulus is not None:
        raise MixedModeError("certified kernel vectors are computed for rational matrices")
    ncols = M.ncols
    if ncols == 0:
        return None
    if M.nrows == 0:
        return (Fraction(1),) + (Fraction(0),) * (ncols - 1)
    ints = _integer_rows(M)
    big = np.array(ints, dtype=object)
    ref_pivots: list[int] | None = None
    acc: list[int] = []
    N = 1
    for p in large_primes(max_primes):
        A = (big % p).astype(np.int64)
        pivots = _rref_residues(A, p)
        if len(pivots) == ncols:
            return None
        if ref_pivots is None or len(pivots) > len(ref_pivots):
            # a larger rank means the earlier primes were unlucky; restart
            ref_pivots, acc, N = pivots, [], 1
        elif pivots != ref_pivots:
            continue
        free = next(c for c in range(ncols) if c not in set(pivots))
        v = [0] * ncols
        v[free] = 1
        for row, c in enumerate(pivots):
            v[c] = int(-A[row, free]) % p
        acc = v if not acc else [_crt_pair(a, N, b, p) for a, b in zip(acc, v)]
        N *= p
        cand = [rational_reconstruction(a, N) for a in acc]
        if any(x is None for x in cand):
            continue
        den = lcm(*(x.denominator for x in cand))
        w = [x.numerator * (den // x.denominator) for x in cand]
        if all(sum(a * b for a, b in zip(r, w) if a) == 0 for r in ints):
            return tuple(cand)
    return None
