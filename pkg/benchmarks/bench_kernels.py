"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from rank1lat import _kernels_py

try:
    from rank1lat import _kernels as compiled
except ImportError:
    compiled = None

CASES = [
    ("oracle_min N=137312 d=3", "oracle_min", (137312, (1, 65, 4225))),
    ("oracle_min N=515150 d=3", "oracle_min", (515150, (1, 101, 10201))),
    ("oracle_min N=1171 d=5", "oracle_min", (1171, (1, 7, 49, 343, 1230 % 1171))),
    ("pointset_min_sq N=500 d=4", "pointset_min_sq", (500, (1, 7, 49, 343))),
    ("scan_strict_b N=150 b=13", "scan_strict_b", (150, 13)),
    ("scan_relaxed_a N=78 a=3", "scan_relaxed_a", (78, 3)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':<28}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for name, fn_name, fn_args in CASES:
        tp, rp = best_of(getattr(_kernels_py, fn_name), fn_args, args.repeat)
        if compiled is None:
            print(f"{name:<28}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc, rc = best_of(getattr(compiled, fn_name), fn_args, args.repeat)
        assert rp == rc, (name, rp, rc)
        print(f"{name:<28}{tp:>12.4f}{tc:>12.5f}{tp / tc:>9.0f}x")


if __name__ == "__main__":
    main()
