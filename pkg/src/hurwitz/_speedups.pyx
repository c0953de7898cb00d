# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the transposition-tuple enumeration.

Mirrors hurwitz._oracle_py.count_factorizations exactly; that module is
the reference, this one is the fast path picked at import time. See the
pure-Python source for the algorithm notes.
"""


cdef enum:
    MAX_D = 12
    MAX_R = 64
    MAX_M = 66  # MAX_D * (MAX_D - 1) // 2


cdef struct Walk:
    int d
    int r
    int m
    long long identity
    long long transitive
    int ti[MAX_M]
    int tj[MAX_M]
    int perm[MAX_D]
    int path[MAX_R]


cdef bint _short_of_identity(Walk* w, int left) noexcept nogil:
    # more swaps needed than slots left? (needs d - cycles swaps)
    cdef bint seen[MAX_D]
    cdef int i, j, cycles = 0
    for i in range(w.d):
        seen[i] = False
    for i in range(w.d):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = w.perm[j]
    return w.d - cycles > left


cdef bint _connects(Walk* w) noexcept nogil:
    # union-find over the letters joined by the chosen transpositions
    cdef int parent[MAX_D]
    cdef int i, k, a, b, roots = 0
    for i in range(w.d):
        parent[i] = i
    for k in range(w.r):
        a = w.ti[w.path[k]]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = w.tj[w.path[k]]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a != b:
            parent[a] = b
    for i in range(w.d):
        if parent[i] == i:
            roots += 1
    return roots == 1


cdef void _walk(Walk* w, int k) noexcept nogil:
    cdef int left = w.r - k
    cdef int e, i, j, tmp
    if left == 0:
        for i in range(w.d):
            if w.perm[i] != i:
                return
        w.identity += 1
        if _connects(w):
            w.transitive += 1
        return
    if left <= w.d - 2 and _short_of_identity(w, left):
        return
    for e in range(w.m):
        i = w.ti[e]
        j = w.tj[e]
        tmp = w.perm[i]
        w.perm[i] = w.perm[j]
        w.perm[j] = tmp
        w.path[k] = e
        _walk(w, k + 1)
        tmp = w.perm[i]
        w.perm[i] = w.perm[j]
        w.perm[j] = tmp


def count_factorizations(int d, int r):
    """Count r-tuples of transpositions of {0, ..., d-1} whose product is
    the identity; returns (identity, transitive) as in hurwitz._oracle_py.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if r < 0:
        raise ValueError("r must be a nonnegative integer")
    if d == 1:
        return (1, 1) if r == 0 else (0, 0)
    if d > MAX_D or r > MAX_R:
        raise ValueError(
            f"enumeration for d={d}, r={r} exceeds compiled kernel limits"
        )

    cdef Walk w
    cdef int i, j, e = 0
    w.d = d
    w.r = r
    w.m = d * (d - 1) // 2
    w.identity = 0
    w.transitive = 0
    for i in range(d):
        w.perm[i] = i
    for i in range(d):
        for j in range(i + 1, d):
            w.ti[e] = i
            w.tj[e] = j
            e += 1
    with nogil:
        _walk(&w, 0)
    return (int(w.identity), int(w.transitive))
