"""Brute-force reference computations, deliberately independent of the package
algorithms they check."""

from itertools import product

from brauer_relations import FiniteGroup


def naive_closure(G: FiniteGroup, gens) -> frozenset:
    """Square the set until it stops growing."""
    s = {0} | set(gens)
    while True:
        bigger = {G.table[a][b] for a in s for b in s}
        if bigger <= s:
            return frozenset(s)
        s |= bigger


def brute_subgroups(G: FiniteGroup) -> set:
    """Subgroups generated by at most two elements, then closed under joins."""
    n = G.order
    subs = {naive_closure(G, [a, b]) for a in range(n) for b in range(a, n)}
    while True:
        new = {naive_closure(G, A | B) for A in subs for B in subs} - subs
        if not new:
            return subs
        subs |= new


def naive_conjugacy_classes(G: FiniteGroup) -> set:
    n = G.order
    inv = [G.table[x].index(0) for x in range(n)]
    return {frozenset(G.table[G.table[g][x]][inv[g]] for g in range(n)) for x in range(n)}


def perm_char_by_conjugates(G: FiniteGroup, members, g: int) -> int:
    """(1/|H|) * #{x : x^-1 g x in H}."""
    H = set(members)
    inv = [G.table[x].index(0) for x in range(G.order)]
    count = sum(1 for x in range(G.order) if G.table[G.table[inv[x]][g]][x] in H)
    assert count % len(H) == 0
    return count // len(H)


def box_relations(matrix, bound=3):
    """All coefficient vectors in [-bound, bound]^rows killing the matrix."""
    import numpy as np

    M = np.array(matrix, dtype=np.int64)
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.array(list(product(rng, repeat=M.shape[0])), dtype=np.int64)
    hits = grids[~np.any(grids @ M, axis=1)]
    return {tuple(int(x) for x in row) for row in hits}
