"""Finite group multiplication tables used across the test suite."""

from itertools import permutations


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table(n):
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}

    def compose(p, q):
        # (p o q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(n))

    return [[index[compose(p, q)] for q in elems] for p in elems]


def dihedral_table(n):
    """D_n of order 2n; elements (r, s) = rotation^r * flip^s."""
    elems = [(r, s) for s in range(2) for r in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def compose(a, b):
        r1, s1 = a
        r2, s2 = b
        if s1 == 0:
            return ((r1 + r2) % n, s2)
        return ((r1 - r2) % n, 1 - s2)

    return [[index[compose(a, b)] for b in elems] for a in elems]
