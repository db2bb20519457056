"""Simple undirected graphs as adjacency bitset rows, plus the named
extremal families and structural predicates used throughout the project.

Vertices are dense 0-indexed integers.  Each adjacency row is a Python int
whose bit w is set when the vertex is adjacent to w, so neighborhood
algebra (unions, intersections, BFS frontiers) is plain integer bit
twiddling.  Graph values are immutable after construction and safe to
share across worker processes.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Graph:
    """Immutable simple undirected graph on n >= 1 vertices."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "Graph":
        """Build from precomputed bitset rows, validating symmetry."""
        rows = tuple(int(r) for r in rows)
        if n < 1 or len(rows) != n:
            raise ValueError(f"need {n} rows, got {len(rows)}")
        g = cls.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        mask = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~mask:
                raise ValueError(f"row {v} has bits beyond vertex {n - 1}")
            if r >> v & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
        for u in range(n):
            for v in _bits(rows[u]):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def _from_rows_unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Fast path for the scanner; caller guarantees symmetry.
        g = cls.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        return g

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def m(self) -> int:
        """Number of edges."""
        total = sum(r.bit_count() for r in self.rows)
        return total // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(r):
                yield (u, v)

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge (u, v) added."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u},{v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows_unchecked(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge (u, v) removed."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows_unchecked(self.n, tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex v renamed to perm[v]."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph._from_rows_unchecked(self.n, tuple(rows))

    # -- connectivity ------------------------------------------------------

    def is_connected(self) -> bool:
        full = (1 << self.n) - 1
        return _reach(self.rows, 1, full) == full

    def cut_vertices(self) -> frozenset[int]:
        """Articulation vertices, by iterative low-link DFS.

        Input must be connected.
        """
        if not self.is_connected():
            raise ValueError("cut_vertices requires a connected graph")
        n = self.n
        if n <= 2:
            return frozenset()
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        ap = [False] * n
        timer = 0
        # Explicit stack of (vertex, iterator over remaining neighbor bits).
        disc[0] = low[0] = timer
        timer += 1
        stack = [(0, self.rows[0])]
        root_children = 0
        while stack:
            v, rest = stack[-1]
            if rest:
                w = (rest & -rest).bit_length() - 1
                stack[-1] = (v, rest & (rest - 1))
                if disc[w] == -1:
                    parent[w] = v
                    if v == 0:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, self.rows[w]))
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    low[p] = min(low[p], low[v])
                    if p != 0 and low[v] >= disc[p]:
                        ap[p] = True
        if root_children > 1:
            ap[0] = True
        return frozenset(v for v in range(n) if ap[v])

    def is_2_connected(self) -> bool:
        """Connected with no cut vertex.  Defined only for n >= 3."""
        if self.n < 3:
            raise ValueError("2-connectivity is defined for n >= 3")
        return self.is_connected() and not self.cut_vertices()

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertex set, relabelled 0..k-1."""
        vs = sorted(set(vertices))
        if not vs:
            raise ValueError("induced_subgraph needs a nonempty vertex set")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise ValueError("vertex set not contained in the graph")
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            for w in _bits(self.rows[v]):
                if w in index:
                    rows[index[v]] |= 1 << index[w]
        return Graph._from_rows_unchecked(len(vs), tuple(rows))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def _reach(rows, start_mask: int, alive: int) -> int:
    """Vertices reachable from start_mask inside alive, as a bitmask."""
    visited = start_mask & alive
    frontier = visited
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= alive & ~visited
        visited |= nxt
        frontier = nxt
    return visited


def is_connected_after_removal(g: Graph, v: int) -> bool:
    """Whether g - v is connected (single-vertex removal check)."""
    if g.n == 1:
        raise ValueError("cannot remove the only vertex")
    alive = ((1 << g.n) - 1) ^ (1 << v)
    start = alive & -alive
    return _reach(g.rows, start, alive) == alive


# -- named families ---------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph._from_rows_unchecked(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("complete bipartite needs p, q >= 1")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(n: int) -> Graph:
    """Star on n vertices (one center joined to n - 1 leaves)."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return complete_bipartite(1, n - 1)


def family_L(n: int) -> Graph:
    """Clique on n - 2 vertices with a two-vertex pendant path.

    Canonical labelling: vertices 0, 1 form the pendant path (0 is the
    pendant end), vertex 2 is the clique attachment point, and vertices
    2..n-1 induce the clique.
    """
    if n < 4:
        raise ValueError("this family needs n >= 4")
    edges = [(0, 1), (1, 2)]
    edges += [(i, j) for i in range(2, n) for j in range(i + 1, n)]
    return Graph(n, edges)


def family_B(n: int) -> Graph:
    """Clique on n - 3 vertices plus a 3-vertex path attached at both ends.

    Canonical labelling: vertices 0, 1, 2 form the path (1 in the middle),
    its ends 0 and 2 join clique vertices 3 and 4 respectively, and
    vertices 3..n-1 induce the clique.
    """
    if n < 6:
        raise ValueError("this family needs n >= 6")
    edges = [(0, 1), (1, 2), (0, 3), (2, 4)]
    edges += [(i, j) for i in range(3, n) for j in range(i + 1, n)]
    return Graph(n, edges)


_FAMILIES = {
    "complete": (complete, 1),
    "K": (complete, 1),
    "path": (path_graph, 1),
    "P": (path_graph, 1),
    "cycle": (cycle, 1),
    "C": (cycle, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "Kpq": (complete_bipartite, 2),
    "star": (star, 1),
    "L": (family_L, 1),
    "B": (family_B, 1),
}


def make_family(name: str, *params: int) -> Graph:
    """Construct a named family member, e.g. make_family("L", 7)."""
    if name not in _FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(_FAMILIES)}")
    ctor, arity = _FAMILIES[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# -- rigid-family recognition ------------------------------------------------
#
# Both families are uniquely determined by the adjacency pattern around
# their low-degree vertices plus completeness of the remaining clique, so
# recognition never needs a general isomorphism engine.


def is_family_L(g: Graph) -> bool:
    """Whether g is isomorphic to the pendant-path family of its order."""
    n = g.n
    if n < 4:
        return False
    for p in range(n):
        if g.rows[p].bit_count() != 1:
            continue
        q = g.rows[p].bit_length() - 1
        if g.rows[q].bit_count() != 2:
            continue
        r = g.rows[q] ^ (1 << p)
        r = r.bit_length() - 1
        rest = ((1 << n) - 1) ^ (1 << p) ^ (1 << q)
        if not rest >> r & 1:
            continue
        # p and q have exactly the path edges; all other edges must form a
        # clique on the remaining n - 2 vertices.
        if _is_clique(g, rest):
            return True
    return False


def is_family_B(g: Graph) -> bool:
    """Whether g is isomorphic to the attached-3-path family of its order."""
    n = g.n
    if n < 6:
        return False
    for w in range(n):
        if g.rows[w].bit_count() != 2:
            continue
        a = (g.rows[w] & -g.rows[w]).bit_length() - 1
        c = (g.rows[w] ^ (1 << a)).bit_length() - 1
        if g.rows[a].bit_count() != 2 or g.rows[c].bit_count() != 2:
            continue
        x = g.rows[a] ^ (1 << w)
        y = g.rows[c] ^ (1 << w)
        if x == 0 or y == 0:
            continue
        x = x.bit_length() - 1
        y = y.bit_length() - 1
        if x == y or x in (a, w, c) or y in (a, w, c):
            continue
        rest = ((1 << n) - 1) ^ (1 << a) ^ (1 << w) ^ (1 << c)
        if _is_clique(g, rest):
            return True
    return False


def _is_clique(g: Graph, member_mask: int) -> bool:
    for v in _bits(member_mask):
        if g.rows[v] & member_mask != member_mask ^ (1 << v):
            return False
    return True
