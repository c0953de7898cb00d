"""Pure-Python kernel for the transposition-tuple enumeration.

Reference implementation; hurwitz._speedups does the same walk compiled.
The running product lives in a single list that is swapped in place on
the way down the tree and swapped back on the way up. A subtree is
abandoned when the product provably cannot return to the identity in the
remaining slots (it needs letters-minus-cycles more transpositions);
that test uses only the cycle structure of the product, so no tuple that
counts is ever skipped.
"""


def count_factorizations(d: int, r: int) -> tuple[int, int]:
    """Count r-tuples of transpositions of {0, ..., d-1} whose product is
    the identity.

    Returns (identity, transitive): the first counts every such tuple,
    the second only those whose transpositions connect all d letters.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if r < 0:
        raise ValueError("r must be a nonnegative integer")
    if d == 1:
        # no transpositions exist; the empty tuple covers the one letter
        return (1, 1) if r == 0 else (0, 0)

    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    perm = list(range(d))
    identity = list(range(d))
    path = [0] * r
    counts = [0, 0]

    def short_of_identity(left):
        # more swaps needed than slots left? (needs d - cycles swaps)
        seen = [False] * d
        cycles = 0
        for i in range(d):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return d - cycles > left

    def walk(k):
        left = r - k
        if left == 0:
            if perm == identity:
                counts[0] += 1
                if _connects(pairs, path, d):
                    counts[1] += 1
            return
        # the product never needs more than d-1 swaps, so the test can
        # only fire in the bottom d-2 levels; skip it above them
        if left <= d - 2 and short_of_identity(left):
            return
        for e, (i, j) in enumerate(pairs):
            perm[i], perm[j] = perm[j], perm[i]
            path[k] = e
            walk(k + 1)
            perm[i], perm[j] = perm[j], perm[i]

    walk(0)
    return counts[0], counts[1]


def _connects(pairs, path, d):
    """True if the chosen transpositions join all d letters (union-find)."""
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in path:
        i, j = pairs[e]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return sum(1 for x in range(d) if parent[x] == x) == 1
