# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_kernels_py``.

Inputs must satisfy ``N < 2**30`` and ``0 <= gen[i] < N`` so that every
intermediate value fits in a signed 64-bit integer (the dispatcher in
``kernels.py`` enforces this).
"""

ctypedef long long i64

cdef enum:
    MAXD = 5


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef i64 _oracle_min(i64 N, const i64* gen, int d, i64 floor) noexcept nogil:
    cdef i64 half = N // 2
    cdef i64 best = N * N
    cdef i64 res[MAXD]
    cdef i64 n, r, s
    cdef int i
    for i in range(d):
        res[i] = 0
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


cdef int _load(gen, i64* out) except -1:
    cdef int d = len(gen)
    if d > MAXD:
        raise ValueError("dimension > 5")
    for i in range(d):
        out[i] = gen[i]
    return d


def oracle_min(i64 N, gen, i64 floor=0):
    cdef i64 g[MAXD]
    cdef int d = _load(gen, g)
    cdef i64 out
    with nogil:
        out = _oracle_min(N, g, d, floor)
    return out


def oracle_argmin(i64 N, gen):
    cdef i64 g[MAXD]
    cdef int d = _load(gen, g)
    cdef i64 half = N // 2
    cdef i64 best = -1
    cdef i64 n, r, s
    cdef int i
    ns = []
    for n in range(1, half + 1):
        s = 0
        for i in range(d):
            r = (n * g[i]) % N
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


def scan_strict_b(i64 N, i64 b):
    cdef i64 g[3]
    cdef i64 best = -1, best_c = -1, scanned = 0, lam, c
    g[0] = 1
    g[1] = b
    with nogil:
        for c in range(b + 1, N):
            scanned += 1
            g[2] = c
            lam = _oracle_min(N, g, 3, best if best > 0 else 0)
            if lam > best:
                best = lam
                best_c = c
    return best, best_c, scanned


def scan_relaxed_a(i64 N, i64 a):
    cdef i64 g[3]
    cdef i64 best = -1, best_b = -1, best_c = -1, scanned = 0
    cdef i64 lam, b, c, ga, gb
    g[0] = a
    with nogil:
        ga = _gcd(N, a)
        for b in range(a + 1, N - 1):
            gb = _gcd(ga, b)
            g[1] = b
            for c in range(b + 1, N):
                if _gcd(gb, c) != 1:
                    continue
                scanned += 1
                g[2] = c
                lam = _oracle_min(N, g, 3, best if best > 0 else 0)
                if lam > best:
                    best = lam
                    best_b = b
                    best_c = c
    return best, best_b, best_c, scanned


def pointset_min_sq(i64 N, gen):
    cdef i64 g[MAXD]
    cdef int d = _load(gen, g)
    cdef i64 best = -1, s, t
    cdef i64 i, j
    cdef int k
    cdef i64[:, ::1] pts
    import array
    buf = array.array("q", bytes(8 * N * d))
    pts = memoryview(buf).cast("B").cast("q", (N, d))
    for i in range(N):
        for k in range(d):
            pts[i, k] = (i * g[k]) % N
    with nogil:
        for i in range(N):
            for j in range(i + 1, N):
                s = 0
                for k in range(d):
                    t = pts[i, k] - pts[j, k]
                    s += t * t
                    if best >= 0 and s >= best:
                        break
                if best < 0 or s < best:
                    best = s
    return best
