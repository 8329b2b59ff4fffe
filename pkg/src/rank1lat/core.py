"""Exact integer linear algebra and residue arithmetic.

Everything here works on Python integers (and :class:`fractions.Fraction`
where a division is unavoidable), so no result is ever rounded.
"""
from __future__ import annotations

import itertools
import operator
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exceptions import DimensionMismatch, NotInvertible, SingularBasis

# Exact rationals (continued fractions, Gram-Schmidt data) use the stdlib type.
Rational = Fraction

MIN_DIM = 2
MAX_DIM = 5


class ExactVector(tuple):
    """Immutable integer vector of dimension 2 to 5.

    Behaves like a tuple for comparison and hashing, but ``+``, ``-`` and
    ``*`` act component-wise / as scalar multiplication.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        vec = super().__new__(cls, (operator.index(e) for e in entries))
        if not MIN_DIM <= len(vec) <= MAX_DIM:
            raise DimensionMismatch(
                f"vector dimension must be in [{MIN_DIM}, {MAX_DIM}], got {len(vec)}")
        return vec

    @property
    def dim(self) -> int:
        return len(self)

    @property
    def norm_sq(self) -> int:
        return sum(e * e for e in self)

    def dot(self, other: Sequence[int]) -> int:
        if len(other) != len(self):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")
        return sum(a * b for a, b in zip(self, other))

    def __add__(self, other):
        if len(other) != len(self):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")
        return ExactVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(other) != len(self):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")
        return ExactVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return ExactVector(-a for a in self)

    def __mul__(self, k):
        return ExactVector(operator.index(k) * a for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"ExactVector({tuple(self)!r})"


def canonical_sign(v: Sequence[int]) -> tuple[int, ...]:
    """Return ``v`` or ``-v``, whichever is lexicographically larger.

    Equivalently: the first nonzero entry is made positive.
    """
    for e in v:
        if e > 0:
            return tuple(v)
        if e < 0:
            return tuple(-x for x in v)
    return tuple(v)


def sym_residue(x: int, N: int) -> int:
    """Representative of ``x mod N`` in ``(-N/2, N/2]``.

    >>> sym_residue(-676, 61)
    -5
    >>> sym_residue(122, 244)
    122
    """
    r = x % N
    return r - N if 2 * r > N else r


def mod_inverse(a: int, N: int) -> int:
    """Inverse of ``a`` modulo ``N`` as an integer in ``[1, N-1]``."""
    if N < 2:
        raise ValueError(f"modulus must be >= 2, got {N}")
    if gcd(a, N) != 1:
        raise NotInvertible(f"gcd({a}, {N}) = {gcd(a, N)}")
    return pow(a, -1, N)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def det_rows(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def transpose(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(c) for c in zip(*rows)]


class LatticeBasis:
    """Square integer basis whose *columns* generate a lattice.

    The determinant is computed once at construction; a zero determinant is
    rejected with :class:`SingularBasis`.
    """

    __slots__ = ("columns", "det")

    def __init__(self, columns: Iterable[Iterable[int]]):
        cols = tuple(ExactVector(c) for c in columns)
        if not cols or any(len(c) != len(cols) for c in cols):
            raise DimensionMismatch(
                f"need {len(cols)} columns of length {len(cols)}")
        d = det_rows(cols)  # det(M) == det(M^T)
        if d == 0:
            raise SingularBasis("basis columns are linearly dependent")
        self.columns = cols
        self.det = d

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatticeBasis":
        """Build from a matrix given row by row (columns are the basis)."""
        return cls(transpose(rows))

    @classmethod
    def identity(cls, dim: int) -> "LatticeBasis":
        return cls([[int(i == j) for i in range(dim)] for j in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[int]]:
        return transpose(self.columns)

    def gram(self) -> list[list[int]]:
        return [[u.dot(v) for v in self.columns] for u in self.columns]

    def norms_sq(self) -> list[int]:
        return [c.norm_sq for c in self.columns]

    def apply(self, coeffs: Sequence[int]) -> ExactVector:
        """Lattice vector ``sum(coeffs[j] * columns[j])``."""
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for dim {self.dim}")
        return ExactVector(
            sum(x * c[i] for x, c in zip(coeffs, self.columns))
            for i in range(self.dim))

    def __iter__(self):
        return iter(self.columns)

    def __len__(self):
        return len(self.columns)

    def __eq__(self, other):
        if not isinstance(other, LatticeBasis):
            return NotImplemented
        return self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return f"LatticeBasis({[tuple(c) for c in self.columns]!r})"


def det(basis: LatticeBasis) -> int:
    return basis.det


def solve_rational(rows: Sequence[Sequence[int]],
                   rhs_cols: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Solve ``A X = B`` exactly; ``A`` given by rows, ``B`` by columns.

    Returns ``X`` as a list of columns.
    """
    n = len(rows)
    m = [[Fraction(v) for v in rows[i]] + [Fraction(col[i]) for col in rhs_cols]
         for i in range(n)]
    width = len(m[0])
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise SingularBasis("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [v * inv for v in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return [[m[i][n + j] for i in range(n)] for j in range(width - n)]


def unimodular_equivalent(b1: LatticeBasis, b2: LatticeBasis) -> bool:
    """True iff both bases generate the same lattice.

    Checks that ``b1^{-1} b2`` is an integer matrix of determinant +-1.
    """
    if b1.dim != b2.dim:
        raise DimensionMismatch(f"{b1.dim} != {b2.dim}")
    if abs(b1.det) != abs(b2.det):
        return False
    cols = solve_rational(b1.rows(), b2.columns)
    if any(v.denominator != 1 for c in cols for v in c):
        return False
    return abs(det_rows([[int(v) for v in c] for c in cols])) == 1


def hermite_basis(generators: Iterable[Sequence[int]], dim: int) -> LatticeBasis:
    """Hermite-form basis (column ``j`` vanishes above row ``j``) of the integer span of ``generators``.

    The generators must span a full-rank lattice in ``Z^dim``.
    """
    vecs = [list(g) for g in generators if any(g)]
    if any(len(v) != dim for v in vecs):
        raise DimensionMismatch("generator length differs from dim")
    pivots: list[list[int]] = []
    for j in range(dim):
        active = [v for v in vecs if v[j] != 0]
        rest = [v for v in vecs if v[j] == 0]
        if not active:
            raise SingularBasis("generators do not span a full-rank lattice")
        piv = active[0]
        for v in active[1:]:
            g, x, y = xgcd(piv[j], v[j])
            a, b = piv[j] // g, v[j] // g
            piv, v = ([x * p + y * q for p, q in zip(piv, v)],
                      [a * q - b * p for p, q in zip(piv, v)])
            if any(v):
                rest.append(v)
        if piv[j] < 0:
            piv = [-p for p in piv]
        pivots.append(piv)
        vecs = rest
    # reduce entries above each pivot into [0, pivot)
    for j in range(dim):
        for i in range(j):
            q = pivots[i][j] // pivots[j][j]
            if q:
                pivots[i] = [a - q * b for a, b in zip(pivots[i], pivots[j])]
    # pivots[i] has zeros before index i; use them as basis columns
    return LatticeBasis(pivots)


def signed_permutations(dim: int):
    """All ``dim x dim`` signed permutation maps as (perm, signs) pairs."""
    for perm in itertools.permutations(range(dim)):
        for signs in itertools.product((1, -1), repeat=dim):
            yield perm, signs


def apply_signed_permutation(v: Sequence[int], perm, signs) -> ExactVector:
    return ExactVector(signs[i] * v[perm[i]] for i in range(len(v)))
