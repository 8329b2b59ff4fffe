"""Exact shortest vectors, successive minima and Minkowski reduction (dim <= 5).

All comparisons are on exact integer squared norms. Enumeration uses the
Gram-Schmidt data of the Gram matrix as :class:`fractions.Fraction`, so
the search region is never rounded.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from . import kernels
from .core import (
    ExactVector,
    LatticeBasis,
    canonical_sign,
    det_rows,
    sym_residue,
)
from .exceptions import SingularBasis
from .modlat import GeneratorSpec


@dataclass(frozen=True)
class ReductionReport:
    reduced_basis: LatticeBasis
    lambda1_sq: int
    successive_minima_sq: tuple[int, ...]
    normalized: float
    certified: bool
    shortest_vector: ExactVector = field(default=None)


def normalized_length(lambda_sq: int, covolume: int, dim: int) -> float:
    """``lambda_1 / covolume^(1/dim)``; for a point set this is ``lambda / N^((d-1)/d)``."""
    if lambda_sq <= 0:
        return 0.0
    return math.exp(0.5 * math.log(lambda_sq) - math.log(abs(covolume)) / dim)


def tie_key(v):
    """Order among equally long vectors.

    Sign is fixed so the first nonzero entry is positive; then vectors whose
    first nonzero entry comes earlier win, then the lexicographically
    smaller one. So ``e_1`` precedes ``e_2``, and ``(1, 13, 169)`` precedes
    ``(13, 169, 1)``.
    """
    c = canonical_sign(v)
    return next((i for i, e in enumerate(c) if e), len(c)), c


# --- preprocessing ---------------------------------------------------------

def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def pair_reduce(columns: Sequence[Sequence[int]]):
    """Pairwise (Lagrange-style) size reduction iterated to a fixed point.

    Returns ``(cols, coeffs)`` where ``cols[j] = sum_i coeffs[j][i] * columns[i]``,
    sorted by squared norm.
    """
    cols = [list(c) for c in columns]
    d = len(cols)
    coeffs = [[int(i == j) for i in range(d)] for j in range(d)]
    norms = [_dot(c, c) for c in cols]
    changed = True
    while changed:
        changed = False
        for i in range(d):
            for j in range(d):
                if i == j or norms[j] == 0:
                    continue
                g = _dot(cols[i], cols[j])
                # strict decrease of |cols[i]| only when |2g| > |cols[j]|^2
                if 2 * abs(g) <= norms[j]:
                    continue
                q = (2 * g + norms[j]) // (2 * norms[j])
                cols[i] = [a - q * b for a, b in zip(cols[i], cols[j])]
                coeffs[i] = [a - q * b for a, b in zip(coeffs[i], coeffs[j])]
                norms[i] = _dot(cols[i], cols[i])
                changed = True
    order = sorted(range(d), key=lambda k: (norms[k], tie_key(cols[k])))
    return [cols[k] for k in order], [coeffs[k] for k in order]


def _gso(gram):
    d = len(gram)
    mu = [[Fraction(0)] * d for _ in range(d)]
    B = [Fraction(0)] * d
    for i in range(d):
        for j in range(i):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * B[k]
            mu[i][j] = s / B[j]
        s = Fraction(gram[i][i])
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * B[k]
        if s <= 0:
            raise SingularBasis("Gram matrix is not positive definite")
        B[i] = s
    return mu, B


def enumerate_vectors(cols: Sequence[Sequence[int]], radius: int,
                      visit: Callable[[int, tuple], int | None]) -> None:
    """Call ``visit(norm_sq, coeffs)`` for every nonzero lattice vector with ``norm_sq <= radius``.

    ``visit`` may return a smaller radius, which prunes the rest of the
    search (Fincke-Pohst with shrinking bound).
    """
    d = len(cols)
    gram = [[_dot(u, v) for v in cols] for u in cols]
    mu, B = _gso(gram)
    x = [0] * d
    bound = [radius]

    def level(i, partial):
        c = Fraction(0)
        for j in range(i + 1, d):
            if x[j]:
                c -= mu[j][i] * x[j]
        start = math.ceil(c)
        for step in (1, -1):
            xi = start if step == 1 else start - 1
            while True:
                t = partial + B[i] * (xi - c) ** 2
                if t > bound[0]:
                    break
                x[i] = xi
                if i == 0:
                    if any(x):
                        norm = t.numerator  # exact integer here
                        new = visit(norm, tuple(x))
                        if new is not None:
                            bound[0] = new
                else:
                    level(i - 1, t)
                xi += step
        x[i] = 0

    level(d - 1, Fraction(0))


def _combine(cols, coeffs):
    d = len(cols[0])
    return tuple(sum(x * c[k] for x, c in zip(coeffs, cols)) for k in range(d))


def _best_vector(vectors):
    return ExactVector(min((canonical_sign(v) for v in vectors), key=tie_key))


# --- shortest vector -------------------------------------------------------

def shortest_vector(basis: LatticeBasis) -> tuple[int, ExactVector]:
    """Exact ``lambda_1^2`` and a shortest vector.

    Ties are broken by :func:`tie_key`.
    """
    cols, _ = pair_reduce(basis.columns)
    best = [_dot(cols[0], cols[0])]
    found: list[tuple] = []

    def visit(norm, x):
        if norm < best[0]:
            best[0] = norm
            found.clear()
        if norm == best[0]:
            found.append(_combine(cols, x))
            return norm
        return None

    enumerate_vectors(cols, best[0], visit)
    return best[0], _best_vector(found)


def _vectors_within(cols, radius):
    out = []

    def visit(norm, x):
        v = _combine(cols, x)
        if canonical_sign(v) == v:
            out.append((norm, v, x))

    enumerate_vectors(cols, radius, visit)
    out.sort(key=lambda t: (t[0], tie_key(t[1])))
    return out


def _minor_gcd(vectors: Sequence[Sequence[int]]) -> int:
    """gcd of all k x k minors of the d x k matrix with the given columns.

    1 iff the vectors extend to a basis; 0 iff they are dependent.
    """
    k = len(vectors)
    d = len(vectors[0])
    g = 0
    for rows in itertools.combinations(range(d), k):
        g = gcd(g, det_rows([[v[r] for v in vectors] for r in rows]))
        if g == 1:
            break
    return g


def successive_minima(basis: LatticeBasis) -> list[int]:
    """``[lambda_1^2, ..., lambda_d^2]`` by greedy independent selection."""
    cols, _ = pair_reduce(basis.columns)
    d = len(cols)
    radius = max(_dot(c, c) for c in cols)
    chosen: list[tuple] = []
    minima: list[int] = []
    for norm, _, x in _vectors_within(cols, radius):
        if _minor_gcd(chosen + [x]) != 0:
            chosen.append(x)
            minima.append(norm)
            if len(chosen) == d:
                return minima
    raise AssertionError("independent basis columns were not enumerated")


def minkowski_reduce(basis: LatticeBasis) -> ReductionReport:
    """Greedy Minkowski reduction.

    Vector ``i`` is a shortest lattice vector that extends the previous
    ``i - 1`` to a basis (ties: :func:`tie_key`), which is the
    defining property of a Minkowski-reduced basis in every dimension.
    """
    cols, _ = pair_reduce(basis.columns)
    d = len(cols)
    radius = max(_dot(c, c) for c in cols)
    while True:
        chosen_x: list[tuple] = []
        chosen_v: list[tuple] = []
        for norm, v, x in _vectors_within(cols, radius):
            if _minor_gcd(chosen_x + [x]) == 1:
                chosen_x.append(x)
                chosen_v.append(v)
                if len(chosen_x) == d:
                    break
        if len(chosen_x) == d:
            break
        radius *= 2
    reduced = LatticeBasis(chosen_v)
    lam = reduced.columns[0].norm_sq
    return ReductionReport(
        reduced_basis=reduced,
        lambda1_sq=lam,
        successive_minima_sq=tuple(successive_minima(reduced)),
        normalized=normalized_length(lam, reduced.det, d),
        certified=is_minkowski_reduced(reduced),
        shortest_vector=reduced.columns[0],
    )


def is_minkowski_reduced(basis: LatticeBasis) -> bool:
    """Exact Minkowski-reducedness test.

    Requires nondecreasing norms and, for each ``i``, that no lattice vector
    ``w = sum x_j b_j`` with ``gcd(x_i, ..., x_d) = 1`` is shorter than
    ``b_i``. For ``i <= 3`` this contains the classical conditions
    ``|b_i + sum_{j<i} x_j b_j| >= |b_i|``. The first norm is also checked
    against :func:`shortest_vector`.
    """
    norms = basis.norms_sq()
    if any(a > b for a, b in zip(norms, norms[1:])):
        return False
    d = basis.dim
    cols, coeffs = pair_reduce(basis.columns)
    violated = [False]

    def visit(norm, y):
        x = [sum(y[j] * coeffs[j][i] for j in range(d)) for i in range(d)]
        g = 0
        for i in range(d - 1, -1, -1):
            g = gcd(g, x[i])
            if g == 1 and norm < norms[i]:
                violated[0] = True
                return 0
        return None

    enumerate_vectors(cols, norms[-1] - 1, visit)
    if violated[0]:
        return False
    return norms[0] == shortest_vector(basis)[0]


def box_conditions_hold(basis: LatticeBasis, box: int = 3) -> bool:
    """Norm ordering plus ``|b_i + sum_{j<i} x_j b_j| >= |b_i|`` for ``|x_j| <= box``."""
    cols = basis.columns
    norms = basis.norms_sq()
    if any(a > b for a, b in zip(norms, norms[1:])):
        return False
    for i in range(1, basis.dim):
        for xs in itertools.product(range(-box, box + 1), repeat=i):
            w = cols[i]
            for xj, cj in zip(xs, cols):
                w = w + xj * cj
            if w.norm_sq < norms[i]:
                return False
    return True


# --- brute-force oracle ----------------------------------------------------

def _half_variants(v, N):
    # entries equal to N/2 have an equally short representative -N/2
    idx = [k for k, e in enumerate(v) if 2 * e == N]
    for signs in itertools.product((1, -1), repeat=len(idx)):
        w = list(v)
        for k, s in zip(idx, signs):
            w[k] = s * w[k]
        yield tuple(w)


def svp_oracle(spec: GeneratorSpec) -> tuple[int, ExactVector]:
    """Shortest vector of the underlying lattice by scanning residue classes.

    Every lattice vector is congruent to ``n * gen`` mod ``N`` for some
    ``n``; the shortest representative of class ``n != 0`` has symmetric
    residue coordinates, and class 0 contributes ``N * e_i``. Only
    ``n <= N // 2`` is scanned since class ``N - n`` is the negation.
    """
    N, gen, d = spec.N, spec.gen, spec.dim
    best, ns = kernels.oracle_argmin(N, gen)
    vectors = []
    if best < 0 or N * N <= best:
        vectors += [tuple(N * (i == j) for i in range(d)) for j in range(d)]
    if best < 0 or N * N < best:
        return N * N, _best_vector(vectors)
    for n in ns:
        vectors.extend(_half_variants([sym_residue(n * a, N) for a in gen], N))
    return best, _best_vector(vectors)


def oracle_lambda_sq(spec: GeneratorSpec) -> int:
    """``lambda_1^2`` only (faster than :func:`svp_oracle`)."""
    return kernels.oracle_min(spec.N, spec.gen)
