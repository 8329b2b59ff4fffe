"""Pure-Python kernels. Reference semantics for the compiled ``_kernels``.

Every function takes a modulus ``N`` and a generator tuple and scans the
residue classes ``n * gen mod N``. Squared norms use symmetric residues in
``(-N/2, N/2]``. Both implementations must return identical values.
"""
from math import gcd


def oracle_min(N, gen, floor=0):
    """Exact lambda_1^2 of the lattice ``{n*gen} + N*Z^d``.

    Minimum over ``n = 1..N//2`` of the residue norm, and ``N*N`` (the
    vectors ``N*e_i``). If ``floor > 0`` the scan stops as soon as the
    running minimum drops below ``floor``; the returned value is then only
    guaranteed to be ``< floor``.
    """
    half = N // 2
    best = N * N
    d = len(gen)
    res = [0] * d
    for n in range(1, half + 1):
        s = 0
        for i in range(d):
            r = res[i] + gen[i]
            if r >= N:
                r -= N
            res[i] = r
            if r > half:
                r -= N
            s += r * r
        if 0 < s < best:
            best = s
            if best < floor:
                return best
    return best


def oracle_argmin(N, gen):
    """Minimal nonzero residue norm over ``n = 1..N//2`` and every ``n`` attaining it.

    Does not consider the ``N*e_i`` vectors. Returns ``(-1, [])`` when all
    residues vanish.
    """
    half = N // 2
    best = -1
    ns = []
    for n in range(1, half + 1):
        s = 0
        for a in gen:
            r = n * a % N
            if r > half:
                r -= N
            s += r * r
        if s == 0:
            continue
        if best < 0 or s < best:
            best = s
            ns = [n]
        elif s == best:
            ns.append(n)
    return best, ns


def scan_strict_b(N, b):
    """Best ``c`` in ``b+1..N-1`` for generators ``(1, b, c)``.

    Returns ``(lambda_sq, c, scanned)``; ties keep the smallest ``c``.
    """
    best = -1
    best_c = -1
    scanned = 0
    for c in range(b + 1, N):
        scanned += 1
        lam = oracle_min(N, (1, b, c), best if best > 0 else 0)
        if lam > best:
            best = lam
            best_c = c
    return best, best_c, scanned


def scan_relaxed_a(N, a):
    """Best ``(b, c)`` with ``a < b < c < N`` and ``gcd(N, a, b, c) == 1``.

    Returns ``(lambda_sq, b, c, scanned)``; ties keep the lexicographically
    smallest ``(b, c)``.
    """
    best = -1
    best_b = best_c = -1
    scanned = 0
    ga = gcd(N, a)
    for b in range(a + 1, N - 1):
        gb = gcd(ga, b)
        for c in range(b + 1, N):
            if gcd(gb, c) != 1:
                continue
            scanned += 1
            lam = oracle_min(N, (a, b, c), best if best > 0 else 0)
            if lam > best:
                best = lam
                best_b, best_c = b, c
    return best, best_b, best_c, scanned


def pointset_min_sq(N, gen):
    """Minimal squared distance between distinct points ``n*gen mod N``, ``0 <= n < N``.

    Literal coordinates in ``[0, N-1]`` (no wrap-around). Coinciding points
    count as distance 0.
    """
    pts = [tuple(n * a % N for a in gen) for n in range(N)]
    best = -1
    for i in range(N):
        p = pts[i]
        for j in range(i + 1, N):
            q = pts[j]
            s = 0
            for x, y in zip(p, q):
                s += (x - y) * (x - y)
                if best >= 0 and s >= best:
                    break
            else:
                if best < 0 or s < best:
                    best = s
    return best
