"""Rank-1 modular point sets and their underlying lattices.

A generator ``v = (a_1, ..., a_d)`` and modulus ``N`` define the point set

    { (n*a_1 mod N, ..., n*a_d mod N) : 0 <= n < N }  in  [0, N-1]^d,

which is the intersection of the cube with the lattice ``Z*v + N*Z^d``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import core, kernels
from .core import ExactVector, LatticeBasis, mod_inverse
from .exceptions import CapExceeded, InvalidAxes, InvalidGenerator

DEFAULT_PAIR_CAP = 5000


@dataclass(frozen=True)
class GeneratorSpec:
    """Modulus ``N`` and generating tuple of a point set.

    ``len(gen)`` is the dimension. With ``relaxed=False`` the first entry
    must be a unit mod ``N`` (so the ``N`` points are distinct); with
    ``relaxed=True`` only ``gcd(N, a_1, ..., a_d) == 1`` is required.
    Entries are taken in ``[1, N-1]``; order and repeats are not restricted
    because reordering coordinates does not change distances.
    """

    N: int
    gen: tuple[int, ...]
    relaxed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "gen", tuple(int(a) for a in self.gen))
        N, gen = self.N, self.gen
        if N < 2:
            raise InvalidGenerator(f"modulus must be >= 2, got {N}")
        if not core.MIN_DIM <= len(gen) <= core.MAX_DIM:
            raise InvalidGenerator(f"generator length must be 2..5, got {len(gen)}")
        if any(not 0 < a < N for a in gen):
            raise InvalidGenerator(f"generator entries must lie in [1, {N - 1}]: {gen}")
        if self.relaxed:
            g = N
            for a in gen:
                g = gcd(g, a)
            if g != 1:
                raise InvalidGenerator(f"gcd(N, gen) = {g} != 1")
        elif gcd(N, gen[0]) != 1:
            raise InvalidGenerator(
                f"gcd({N}, {gen[0]}) != 1; pass relaxed=True for such generators")

    @property
    def dim(self) -> int:
        return len(self.gen)

    def __str__(self):
        return f"N={self.N} gen={','.join(map(str, self.gen))}"


def normalize_generator(spec: GeneratorSpec) -> GeneratorSpec:
    """Scale so the leading entry is 1, then sort the remaining entries.

    Raises :class:`NotInvertible` when the leading entry shares a factor
    with ``N``.
    """
    inv = mod_inverse(spec.gen[0], spec.N)
    scaled = [a * inv % spec.N for a in spec.gen]
    return GeneratorSpec(spec.N, (1, *sorted(scaled[1:])), relaxed=False)


def build_point_set(spec: GeneratorSpec) -> list[ExactVector]:
    """The ``N`` points ordered by ``n``; duplicates kept for relaxed specs."""
    return [ExactVector(n * a % spec.N for a in spec.gen) for n in range(spec.N)]


def _anti_diagonal_basis(N: int, gen: Sequence[int]) -> LatticeBasis:
    # columns N*e_{d-1}, ..., N*e_1 then the generator; requires gen[0] == 1
    d = len(gen)
    cols = [[N if i == d - 1 - j else 0 for i in range(d)] for j in range(d - 1)]
    cols.append(list(gen))
    return LatticeBasis(cols)


def build_basis(spec: GeneratorSpec) -> LatticeBasis:
    """Basis of the lattice ``Z*v + N*Z^d`` whose cube intersection is the point set.

    If the leading entry is a unit the generator is rescaled to lead with 1
    (same lattice, coordinates unchanged) and the basis is

        columns  N*e_d, ..., N*e_2, (1, a_2, ..., a_d),

    i.e. rows ``(0,...,0,1), (0,...,N,a_2), ..., (N,0,...,0,a_d)``. Otherwise
    the Hermite normal form of ``{v} u {N*e_i}`` is returned.
    """
    N, gen = spec.N, spec.gen
    if gcd(N, gen[0]) == 1:
        inv = mod_inverse(gen[0], N)
        return _anti_diagonal_basis(N, [a * inv % N for a in gen])
    gens = [list(gen)] + [[N * (i == j) for i in range(spec.dim)] for j in range(spec.dim)]
    return core.hermite_basis(gens, spec.dim)


def project_2d(spec: GeneratorSpec, axes: tuple[int, int]) -> LatticeBasis:
    """Basis of the projection of the lattice onto coordinates ``axes``.

    The projection is ``Z*(a_i, a_j) + N*Z^2``. When ``a_i`` is a unit the
    basis is ``(0, N), (1, a_j / a_i mod N)``.
    """
    i, j = axes
    if i == j or not (0 <= i < spec.dim and 0 <= j < spec.dim):
        raise InvalidAxes(f"invalid axes {axes} for dimension {spec.dim}")
    N = spec.N
    ai, aj = spec.gen[i] % N, spec.gen[j] % N
    if gcd(ai, N) == 1:
        return LatticeBasis([(0, N), (1, aj * mod_inverse(ai, N) % N)])
    return core.hermite_basis([(ai, aj), (N, 0), (0, N)], 2)


def degenerate_sum_check(N: int, b: int, x: int) -> bool:
    """True iff ``x * (1 + b + b^2) == 0 (mod N)``."""
    return x * (1 + b + b * b) % N == 0


def pointset_min_distance(spec: GeneratorSpec, cap: int = DEFAULT_PAIR_CAP) -> int:
    """Minimal squared distance over all pairs of the literal point set.

    O(N^2) pairs; refuses ``N > cap``.
    """
    if spec.N > cap:
        raise CapExceeded(f"N={spec.N} exceeds pairwise-scan cap {cap}")
    return kernels.pointset_min_sq(spec.N, spec.gen)


def lattice_contains(basis: LatticeBasis, v: Sequence[int]) -> bool:
    """Membership test via an exact rational solve."""
    (coeffs,) = core.solve_rational(basis.rows(), [list(v)])
    return all(c.denominator == 1 for c in coeffs)


def same_generator_class(s1: GeneratorSpec, s2: GeneratorSpec) -> bool:
    """True iff the two lattices are congruent via a signed coordinate permutation.

    This covers rescaling by units, reordering, and ``a_i -> N - a_i``.
    """
    if s1.N != s2.N or s1.dim != s2.dim:
        return False
    b1, b2 = build_basis(s1), build_basis(s2)
    for perm, signs in core.signed_permutations(s1.dim):
        cols = [core.apply_signed_permutation(c, perm, signs) for c in b1.columns]
        if core.unimodular_equivalent(LatticeBasis(cols), b2):
            return True
    return False


def projections_congruent(p: LatticeBasis, q: LatticeBasis) -> bool:
    """2-D lattices equal up to one of the eight signed coordinate maps."""
    for perm, signs in core.signed_permutations(2):
        cols = [core.apply_signed_permutation(c, perm, signs) for c in p.columns]
        if core.unimodular_equivalent(LatticeBasis(cols), q):
            return True
    return False


def all_orderings(spec: GeneratorSpec):
    """Every permutation of the generator that is still a valid spec."""
    for perm in sorted(set(itertools.permutations(spec.gen))):
        try:
            yield GeneratorSpec(spec.N, perm, relaxed=spec.relaxed)
        except InvalidGenerator:
            continue
