"""Explicit lattice families, reference lattices and Hermite-type bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import LatticeBasis
from .exceptions import ParamOutOfRange
from .modlat import GeneratorSpec, build_basis
from .svp import minkowski_reduce, normalized_length


@dataclass(frozen=True)
class RadicalConstant:
    """Product of rational powers of integers, e.g. ``2^(1/2) * 3^(-1/4)``."""

    factors: tuple[tuple[int, Fraction], ...]

    @classmethod
    def power(cls, base: int, exponent) -> "RadicalConstant":
        return cls(((base, Fraction(exponent)),))

    def __float__(self):
        return float(math.prod(b ** float(e) for b, e in self.factors))

    def __mul__(self, other: "RadicalConstant") -> "RadicalConstant":
        acc: dict[int, Fraction] = {}
        for b, e in self.factors + other.factors:
            acc[b] = acc.get(b, Fraction(0)) + e
        return RadicalConstant(tuple(sorted((b, e) for b, e in acc.items() if e)))

    def sqrt(self) -> "RadicalConstant":
        return RadicalConstant(tuple((b, e / 2) for b, e in self.factors))

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{b}^({e})" for b, e in self.factors)


ONE = RadicalConstant(())

# Hermite constants gamma_d for d = 2..5
GAMMA = {
    2: RadicalConstant.power(2, 1) * RadicalConstant.power(3, Fraction(-1, 2)),
    3: RadicalConstant.power(2, Fraction(1, 3)),
    4: RadicalConstant.power(2, Fraction(1, 2)),
    5: RadicalConstant.power(2, Fraction(3, 5)),
}

# gamma_d^d as an exact rational, used for integer bound checks
_GAMMA_POW_D = {2: Fraction(4, 3), 3: Fraction(2), 4: Fraction(4), 5: Fraction(8)}


@dataclass(frozen=True)
class BoundConstants:
    gamma: dict
    fcc_basis: LatticeBasis
    hex_basis: tuple[tuple[float, float], tuple[float, float]]


REFERENCE = BoundConstants(
    gamma=GAMMA,
    fcc_basis=LatticeBasis.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]]),
    # columns (1, 0) and (1/2, sqrt(3)/2)
    hex_basis=((1.0, 0.0), (0.5, math.sqrt(3) / 2)),
)


def hermite_bound(dim: int, N: int) -> float:
    """Upper bound ``sqrt(gamma_dim) * N^((dim-1)/dim)`` on the shortest distance."""
    if dim not in GAMMA:
        raise ParamOutOfRange(f"dimension must be 2..5, got {dim}")
    return float(GAMMA[dim].sqrt()) * N ** ((dim - 1) / dim)


def within_hermite_bound(lambda_sq: int, N: int, dim: int) -> bool:
    """Exact test of ``lambda^2 <= gamma_d * N^(2(d-1)/d)`` (raised to the d-th power)."""
    g = _GAMMA_POW_D[dim]
    return lambda_sq ** dim * g.denominator <= g.numerator * N ** (2 * (dim - 1))


def rhombohedral_angle(basis: LatticeBasis):
    """Angle between basis edges; a float if all three pairwise angles agree, else the triple."""
    if basis.dim != 3:
        raise ValueError("rhombohedral angle needs a 3-dimensional basis")
    c = basis.columns
    angles = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        cos = c[i].dot(c[j]) / math.sqrt(c[i].norm_sq * c[j].norm_sq)
        angles.append(math.acos(max(-1.0, min(1.0, cos))))
    if max(angles) - min(angles) <= 1e-9:
        return angles[0]
    return tuple(angles)


@dataclass(frozen=True)
class FamilyPoint:
    family_id: str
    param: int
    N: int
    gen: tuple[int, ...]
    predicted_lambda_sq: int
    candidate_basis: LatticeBasis
    limit_constant: RadicalConstant

    @property
    def spec(self) -> GeneratorSpec:
        return GeneratorSpec(self.N, self.gen)

    @property
    def dim(self) -> int:
        return len(self.gen)

    @property
    def predicted_normalized(self) -> float:
        return normalized_length(self.predicted_lambda_sq, self.N ** (self.dim - 1), self.dim)


def family_thm1(m: int) -> FamilyPoint:
    """``N = m^3 - 1``, ``v = (1, m, m^2)``; approaches the cubic lattice."""
    if m < 3:
        raise ParamOutOfRange(f"m must be >= 3, got {m}")
    N = m ** 3 - 1
    basis = LatticeBasis([(1, m, m * m), (-m, -m * m, -1), (-m * m, -1, -m)])
    return FamilyPoint("thm1_cubic", m, N, (1, m, m * m), 1 + m ** 2 + m ** 4, basis, ONE)


def family_thm2(k: int) -> FamilyPoint:
    """``b = 2k+1``, ``N = (b^3 - 1)/2``, ``v = (1, b, b^2)``; approaches FCC."""
    if k < 1:
        raise ParamOutOfRange(f"k must be >= 1, got {k}")
    b = 2 * k + 1
    N = (b ** 3 - 1) // 2
    kb = k * b
    basis = LatticeBasis([
        (-k, -kb, k + kb),
        (-kb, k + kb, -k),
        (k + kb + 1, k + 1, k + kb + k + 1),
    ])
    lam = 2 * k * k * (3 + 6 * k + 4 * k * k)
    return FamilyPoint("thm2_fcc3d", k, N, (1, b, b * b), lam, basis,
                       RadicalConstant.power(2, Fraction(1, 6)))


def family_thm3_4d(k: int) -> FamilyPoint:
    """``b = 2k+1``, ``N = (b^4 - 1)/2``, ``v = (1, b, b^2, b^3)``."""
    if k < 1:
        raise ParamOutOfRange(f"k must be >= 1, got {k}")
    b = 2 * k + 1
    N = (b ** 4 - 1) // 2
    s = k + k * b + k * b * b
    basis = LatticeBasis([
        (-k, -k * b, -k * b * b, s),
        (-k * b, -k * b * b, s, -k),
        (-s, k, k * b, k * b * b),
        (k + k * b + 1, 2 * k + k * b + k * b * b + 1) * 2,
    ])
    lam = k * k * (1 + b ** 2 + b ** 4) + s * s
    return FamilyPoint("thm3_4d", k, N, (1, b, b ** 2, b ** 3), lam, basis,
                       RadicalConstant.power(2, Fraction(1, 4)))


def family_thm3_5d(k: int) -> FamilyPoint:
    """``b = 2k+1``, ``N = (b^5 - 1)/2``, ``v = (1, b, ..., b^4)``."""
    if k < 1:
        raise ParamOutOfRange(f"k must be >= 1, got {k}")
    b = 2 * k + 1
    N = (b ** 5 - 1) // 2
    f = 4 * k * (k + 1) * (2 * k * k + 2 * k + 1)
    p = 2 * k * k + 2 * k + 1
    q = (4 * k * k + 2 * k + 1) * (k + 1)
    basis = LatticeBasis([
        (-k, -k * b, -k * b ** 2, -k * b ** 3, f),
        (k * b ** 2, k * b ** 3, -f, k, k * b),
        (-k * b ** 3, f, -k, -k * b, -k * b ** 2),
        (-f, k, k * b, k * b ** 2, k * b ** 3),
        (p * b, p * b * b, q, q * b, p),
    ])
    lam = k * k * (1 + b ** 2 + b ** 4 + b ** 6) + f * f
    return FamilyPoint("thm3_5d", k, N, tuple(b ** i for i in range(5)), lam, basis,
                       RadicalConstant.power(2, Fraction(3, 10)))


def hex_partial_quotients(s: int) -> list[int]:
    """``[2, 1, 2, 1, ..., 1, 2]`` with ``4s + 3`` terms."""
    return [2 if i % 2 == 0 else 1 for i in range(4 * s + 3)]


def continued_fraction(quotients) -> Fraction:
    """Value of ``[0; q_1, q_2, ..., q_n]``, evaluated bottom-up."""
    x = Fraction(0)
    for q in reversed(quotients):
        x = 1 / (q + x)
    return x


def convergents(quotients) -> list[Fraction]:
    """Successive convergents of ``[0; q_1, ..., q_n]``."""
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    out = []
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Fraction(p, q))
    return out


HEX_SLOPE_LIMIT = (math.sqrt(3) - 1) / 2


def family_hex2d(s: int) -> FamilyPoint:
    """Two-dimensional family ``(N_s, (1, b_s))`` with ``b_s / N_s`` a convergent of ``(sqrt(3) - 1)/2``."""
    if s < 0:
        raise ParamOutOfRange(f"s must be >= 0, got {s}")
    frac = continued_fraction(hex_partial_quotients(s))
    N, b = frac.denominator, frac.numerator
    report = minkowski_reduce(build_basis(GeneratorSpec(N, (1, b))))
    return FamilyPoint("hex_2d", s, N, (1, b), report.lambda1_sq, report.reduced_basis,
                       GAMMA[2].sqrt())


FAMILIES = {
    "thm1_cubic": (family_thm1, 3),
    "thm2_fcc3d": (family_thm2, 1),
    "thm3_4d": (family_thm3_4d, 1),
    "thm3_5d": (family_thm3_5d, 1),
    "hex_2d": (family_hex2d, 0),
}


def family_point(family_id: str, param: int) -> FamilyPoint:
    try:
        fn, _ = FAMILIES[family_id]
    except KeyError:
        raise ParamOutOfRange(f"unknown family {family_id!r}; choose from {sorted(FAMILIES)}")
    return fn(param)


def exceeds_normalized(lam_sq: int, N: int, ref_lam_sq: int, ref_N: int, dim: int = 3) -> bool:
    """Exact ``sqrt(lam_sq)/N^((d-1)/d) > sqrt(ref_lam_sq)/ref_N^((d-1)/d)``."""
    e = 2 * (dim - 1)
    return lam_sq ** dim * ref_N ** e > ref_lam_sq ** dim * N ** e


def first_thm2_beating(ref_lam_sq: int = 1891, ref_N: int = 244, k_max: int = 10_000) -> FamilyPoint:
    """Smallest ``k`` whose FCC-family lattice beats the reference normalized length."""
    for k in range(1, k_max + 1):
        p = family_thm2(k)
        if exceeds_normalized(p.predicted_lambda_sq, p.N, ref_lam_sq, ref_N):
            return p
    raise ParamOutOfRange(f"no k <= {k_max} beats the reference")
