"""Invariant suites behind ``rank1lat verify``.

Each check returns ``(passed, detail)``. Functions are looked up through
their modules at call time so a patched implementation is what gets
checked.
"""
from __future__ import annotations

import random
import time
from math import gcd
from dataclasses import dataclass

from . import core, families, modlat, search, svp

TABLE1 = [
    # N, x, bx, bx^2, normalized (as printed)
    (61, -4, 9, -5, 0.7127),
    (122, 10, 8, -18, 0.7830),
    (183, -14, 1, 13, 0.5935),
    (244, 19, 3, 39, 1.11366),
    (366, -28, 2, 26, 0.7477),
    (549, -42, 3, 39, 0.8560),
    (732, -56, 4, 52, 0.9421),
    (1098, -84, 6, 78, 1.0785),
    (2196, -168, 12, 156, 1.0032),
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def random_spec(rng: random.Random, n_max: int, dims=(2, 3, 4, 5)) -> modlat.GeneratorSpec:
    """Random strict spec with distinct sorted entries and a unit leading entry."""
    while True:
        d = rng.choice(dims)
        N = rng.randint(d + 1, n_max)
        gen = sorted(rng.sample(range(1, N), d))
        if gcd(N, gen[0]) == 1:
            return modlat.GeneratorSpec(N, tuple(gen))


def check_sym_residue():
    for N in range(2, 60):
        for x in range(-3 * N, 3 * N):
            r = core.sym_residue(x, N)
            if (r - x) % N or not (-N < 2 * r <= N):
                return False, f"sym_residue({x}, {N}) = {r}"
    if core.sym_residue(-676, 61) != -5:
        return False, "sym_residue(-676, 61) != -5"
    return True, "congruence and range on 2 <= N < 60"


def check_mod_inverse():
    for N in range(2, 200):
        for a in range(1, N):
            if gcd(a, N) == 1 and a * core.mod_inverse(a, N) % N != 1:
                return False, f"mod_inverse({a}, {N})"
    return True, "round trip for all units mod N < 200"


def check_golden_244():
    spec = modlat.GeneratorSpec(244, (1, 13, 169))
    lam, _ = svp.svp_oracle(spec)
    rep = svp.minkowski_reduce(modlat.build_basis(spec))
    want = {(19, 3, 39), (3, 39, 19), (39, 19, 3)}
    got = {core.canonical_sign(c) for c in rep.reduced_basis}
    angle = families.rhombohedral_angle(rep.reduced_basis)
    ok = (lam == 1891 and rep.lambda1_sq == 1891 and got == want
          and abs(rep.normalized - 1.11366) <= 5e-5
          and isinstance(angle, float) and abs(angle - 1.06572) <= 1e-5)
    return ok, f"lambda^2={lam}, normalized={rep.normalized:.6f}, angle={angle}"


def table1_vector(N: int, b: int = 13):
    """``(x, bx, bx^2)`` as tabulated: the longer vector of the reduced 2-D projection basis.

    Signed so that the middle coordinate is positive.
    """
    spec = modlat.GeneratorSpec(N, (1, b % N, b * b % N))
    proj = svp.minkowski_reduce(modlat.project_2d(spec, (0, 1))).reduced_basis
    x, bx = proj.columns[1]
    if bx < 0 or (bx == 0 and x < 0):
        x, bx = -x, -bx
    return x, bx, core.sym_residue(x * b * b, N)


def check_table1_columns():
    bad = [N for N, *xs, _ in TABLE1 if table1_vector(N) != tuple(xs)]
    return not bad, f"mismatching rows: {bad}" if bad else "x, bx, bx^2 match for all nine rows"


def check_oracle_equivalence(count: int, n_max: int, seed: int = 2024):
    rng = random.Random(seed)
    for _ in range(count):
        spec = random_spec(rng, n_max)
        a = modlat.pointset_min_distance(spec)
        b, _ = svp.shortest_vector(modlat.build_basis(spec))
        c, _ = svp.svp_oracle(spec)
        if not a == b == c:
            return False, f"{spec}: pointset={a} enumeration={b} oracle={c}"
    return True, f"{count} random specs, N <= {n_max}"


def check_family(family_id: str, params, certify: bool = False):
    for p in params:
        fp = families.family_point(family_id, p)
        lam, _ = svp.svp_oracle(fp.spec)
        if lam != fp.predicted_lambda_sq:
            return False, f"{family_id}({p}): oracle {lam} != predicted {fp.predicted_lambda_sq}"
        if not families.within_hermite_bound(lam, fp.N, fp.dim):
            return False, f"{family_id}({p}) violates the Hermite bound"
        if certify:
            basis = modlat.build_basis(fp.spec)
            if not core.unimodular_equivalent(fp.candidate_basis, basis):
                return False, f"{family_id}({p}): candidate basis spans another lattice"
            if not svp.is_minkowski_reduced(fp.candidate_basis):
                return False, f"{family_id}({p}): candidate basis not reduced"
    return True, f"params {params[0]}..{params[-1]}"


def check_scan_bound(n_min: int, n_max: int):
    recs = search.scan_range(n_min, n_max)
    bad = [r.N for r in recs if not families.within_hermite_bound(r.lambda_sq, r.N, 3)]
    return not bad, f"{len(recs)} records" if not bad else f"bound violated at N={bad}"


def check_relaxed_remark():
    out = []
    for N, gen, val, tol in ((20, (6, 15, 18), 1.0942, 5e-4), (78, (15, 65, 75), 1.09965, 5e-5)):
        rec = search.best_for_N(N, relaxed=True)
        same = modlat.same_generator_class(
            modlat.GeneratorSpec(N, rec.best_gen, relaxed=True),
            modlat.GeneratorSpec(N, gen, relaxed=True))
        if not same or abs(rec.normalized - val) > tol:
            return False, f"N={N}: {rec}"
        out.append(f"N={N}: {rec.normalized:.6f}")
    return True, ", ".join(out)


def suite(scope: str):
    quick = [
        ("sym_residue", check_sym_residue),
        ("mod_inverse", check_mod_inverse),
        ("golden_244", check_golden_244),
        ("table1_columns", check_table1_columns),
        ("oracle_equivalence", lambda: check_oracle_equivalence(60, 150)),
        ("thm1_family", lambda: check_family("thm1_cubic", list(range(3, 9)))),
        ("thm2_family", lambda: check_family("thm2_fcc3d", list(range(1, 9)))),
    ]
    if scope == "quick":
        return quick
    if scope != "full":
        raise ValueError(f"unknown scope {scope!r}")
    return quick + [
        ("oracle_equivalence_500", lambda: check_oracle_equivalence(500, 500, seed=7)),
        ("thm1_family_certified", lambda: check_family("thm1_cubic", list(range(3, 21)), True)),
        ("thm2_family_certified", lambda: check_family("thm2_fcc3d", list(range(1, 32)), True)),
        ("thm3_4d_certified", lambda: check_family("thm3_4d", list(range(1, 7)), True)),
        ("thm3_5d_certified", lambda: check_family("thm3_5d", list(range(1, 5)), True)),
        ("scan_hermite_bound", lambda: check_scan_bound(10, 150)),
        ("relaxed_remark", check_relaxed_remark),
    ]


def run(scope: str = "quick") -> list[CheckResult]:
    results = []
    for name, fn in suite(scope):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
