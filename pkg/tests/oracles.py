"""Brute-force reference computations, kept independent of the library paths
they check: no tables from the library's hom checker, no atom-wise
inequality test."""

from __future__ import annotations

from itertools import product

import networkx as nx


def closure_pairs(elements, pairs):
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    g.add_edges_from(pairs)
    tc = nx.transitive_closure(g, reflexive=True)
    return {(x, y) for x in elements for y in elements if tc.has_edge(x, y)}


def glb(L, x, y):
    lower = [z for z in L.elements if L.leq(z, x) and L.leq(z, y)]
    best = [z for z in lower if all(L.leq(w, z) for w in lower)]
    assert len(best) == 1
    return best[0]


def lub(L, x, y):
    upper = [z for z in L.elements if L.leq(x, z) and L.leq(y, z)]
    best = [z for z in upper if all(L.leq(z, w) for w in upper)]
    assert len(best) == 1
    return best[0]


def greatest_relative_pseudocomplement(L, x, y):
    """max{z : glb(z, x) <= y}, found by scanning for the unique maximum."""
    cands = [z for z in L.elements if L.leq(glb(L, z, x), y)]
    top = [z for z in cands if all(L.leq(w, z) for w in cands)]
    assert len(top) == 1
    return top[0]


def atoms_of(name):
    """Atom set of a powerset-algebra element name such as ``e1+e3``."""
    return frozenset() if name == "0" else frozenset(name.split("+"))


def brute_homs(L, B, heyting=False):
    """All maps L -> B (as dicts) preserving the structure, by exhaustion.

    ``B`` must be a powerset algebra; its operations are recomputed from the
    atom sets spelled out in the element names.
    """
    universe = frozenset().union(*(atoms_of(b) for b in B.elements))
    by_set = {atoms_of(b): b for b in B.elements}

    def bmeet(a, b):
        return by_set[atoms_of(a) & atoms_of(b)]

    def bjoin(a, b):
        return by_set[atoms_of(a) | atoms_of(b)]

    def bimp(a, b):
        return by_set[(universe - atoms_of(a)) | atoms_of(b)]

    out = []
    for values in product(B.elements, repeat=len(L)):
        f = dict(zip(L.elements, values))
        if f[L.bottom] != "0" or atoms_of(f[L.top]) != universe:
            continue
        ok = all(
            f[glb(L, x, y)] == bmeet(f[x], f[y]) and f[lub(L, x, y)] == bjoin(f[x], f[y])
            for x in L.elements
            for y in L.elements
        )
        if ok and heyting:
            ok = all(
                f[greatest_relative_pseudocomplement(L, x, y)] == bimp(f[x], f[y])
                for x in L.elements
                for y in L.elements
            )
        if ok:
            out.append(f)
    return out


def brute_semantic(homs, X, Y):
    """Every hom whose graph contains X hits Y."""
    for f in homs:
        if all(f[x] == a for x, a in X) and not any(f[y] == b for y, b in Y):
            return False
    return True


def combinatorial_cut_holds(n):
    """Exhaustively check: if every U meets L or misses R-complement, L meets R.

    Subsets of ``range(n)`` are bitmasks.  Returns the list of
    counterexamples ``(L, R)`` (expected empty).
    """
    full = (1 << n) - 1
    bad = []
    for left in range(1 << n):
        for right in range(1 << n):
            if all((u & left) or (~u & full & right) for u in range(1 << n)):
                if not left & right:
                    bad.append((left, right))
    return bad
