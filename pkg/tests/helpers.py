"""Independent oracles shared by the test modules.

Everything here deliberately avoids the package's own algorithms: brute
force, closed formulas, recurrences, and numpy's dense eigensolver serve
as the second route for every value the package computes.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from histspec import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search isomorphism test (test-suite fallback only)."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gdeg = g.degrees()
    hdeg = h.degrees()
    # Map vertices in degree-class order to prune early.
    for perm in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            if gdeg[v] != hdeg[perm[v]]:
                ok = False
                break
        if not ok:
            continue
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges()):
            return True
    return False


def brute_cut_vertices(g: Graph) -> frozenset[int]:
    """Remove each vertex in turn and test connectivity of the rest."""
    out = set()
    for v in range(g.n):
        rest = [w for w in range(g.n) if w != v]
        if not rest:
            continue
        sub = g.induced_subgraph(rest)
        if not sub.is_connected():
            out.add(v)
    return frozenset(out)


def connected_labeled_count(n: int) -> int:
    """Standard recurrence for the number of connected labeled graphs."""
    c = {}
    for k in range(1, n + 1):
        total = 2 ** comb(k, 2)
        c[k] = total - sum(
            comb(k - 1, j - 1) * c[j] * 2 ** comb(k - j, 2) for j in range(1, k)
        )
    return c[n]


def all_labeled_graphs(n: int):
    """Every labeled graph of order n, built straight from edge subsets."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        yield Graph(n, edges)


def combo_spanning_trees(g: Graph) -> list[tuple]:
    """All spanning trees by trying every (n-1)-subset of edges."""
    edges = list(g.edges())
    out = []
    for subset in itertools.combinations(edges, g.n - 1):
        parent = list(range(g.n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            out.append(subset)
    return out


def kirchhoff_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: determinant of a Laplacian minor."""
    if g.n == 1:
        return 1
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges():
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    minor = lap[1:, 1:]
    return round(float(np.linalg.det(minor)))


def eigvalsh_rho(g: Graph) -> float:
    """Reference spectral radius from numpy's dense symmetric solver."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1])


def labeled_copy_count(g: Graph) -> int:
    """Number of distinct labeled copies of g, by brute relabelling."""
    seen = set()
    for perm in itertools.permutations(range(g.n)):
        seen.add(g.relabel(perm).rows)
    return len(seen)


def random_connected(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    """Uniform G(n, p) conditioned on connectivity, by rejection."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        keep = rng.random(len(pairs)) < p
        g = Graph(n, [pairs[i] for i in np.nonzero(keep)[0]])
        if g.is_connected():
            return g


def tree_has_degree_two(n: int, edges) -> bool:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return 2 in deg
