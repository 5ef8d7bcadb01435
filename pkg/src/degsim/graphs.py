"""Simple undirected graphs and every construction the toolkit certifies.

Vertex-order conventions matter here: the certificates produced by
``degsim.certify`` are block matrices whose blocks assume the orderings
documented on each constructor.  In short:

  union/join        g's vertices first, then h's
  products          pair (u, v) gets index u * |V(h)| + v
  coalesce          s keeps its labels, t's non-root vertices are appended
  k_sum             x-rest, then the merged vertices (in list order), y-rest
  rooted_product    x keeps its labels, each attached copy's non-root
                    vertices appended in sequence
  attach_pendants   pendant blocks first (classes by ascending degree, copies
                    within a class, class members in index order), originals
                    last in their original order
  add_join_vertices new independent blocks first (in the order degrees are
                    listed), originals last
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadVertexListError,
    MalformedGraph6Error,
    NoSuchEdgeError,
    NotSwitchableError,
    OutOfRangeError,
    UnknownDegreeClassError,
)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise OutOfRangeError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    # -- basic queries ------------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        return [[1 if j in self._adj[i] else 0 for j in range(self.n)] for i in range(self.n)]

    def degree_matrix(self) -> list[list[int]]:
        return [[len(self._adj[i]) if i == j else 0 for j in range(self.n)] for i in range(self.n)]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_regular(self) -> bool:
        degs = self.degrees()
        return not degs or min(degs) == max(degs)

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def degree_classes(self) -> dict[int, list[int]]:
        """Map degree -> sorted list of vertices having that degree."""
        out: dict[int, list[int]] = {}
        for v in range(self.n):
            out.setdefault(self.degree(v), []).append(v)
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise BadVertexListError("relabeling must be a permutation")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self._adj == other._adj
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Graph":
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not (0 <= self.root < self.graph.n):
            raise OutOfRangeError(f"root {self.root} out of range")


# -- small builders ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OutOfRangeError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- graph6 (short form, n <= 62) -------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Parse a short-form graph6 string (n <= 62)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise MalformedGraph6Error("empty graph6 input")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise MalformedGraph6Error("byte out of graph6 range")
    n = data[0]
    if n == 63:
        raise MalformedGraph6Error("long-form graph6 (n > 62) not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise MalformedGraph6Error(
            f"expected {need} bit bytes for n={n}, got {len(data) - 1}")
    bits = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode as short-form graph6 (requires n <= 62)."""
    n = g.n
    if n > 62:
        raise MalformedGraph6Error("short-form graph6 handles n <= 62 only")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# -- classical constructions -------------------------------------------------

def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in itertools.combinations(range(g.n), 2)
                       if not g.has_edge(u, v)))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are re-indexed after g's."""
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Union plus every edge between the two parts."""
    edges = list(union(g, h).edges())
    edges.extend((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


PRODUCT_KINDS = ("cartesian", "tensor", "strong", "lexicographic")


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """One of the four standard products; vertex (u, v) has index u*|V(h)|+v."""
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}")
    m = h.n
    edges = []
    for (u, v), (u2, v2) in itertools.combinations(
            itertools.product(range(g.n), range(m)), 2):
        gu = g.has_edge(u, u2)
        hv = h.has_edge(v, v2)
        if kind == "cartesian":
            adj = (u == u2 and hv) or (v == v2 and gu)
        elif kind == "tensor":
            adj = gu and hv
        elif kind == "strong":
            adj = (u == u2 and hv) or (v == v2 and gu) or (gu and hv)
        else:  # lexicographic
            adj = gu or (u == u2 and hv)
        if adj:
            edges.append((u * m + v, u2 * m + v2))
    return Graph(g.n * m, edges)


def coalesce(s: RootedGraph, t: RootedGraph) -> Graph:
    """Identify s's root with t's root; s keeps its labels, t-rest appended.

    The merged vertex keeps s.root's index and inherits both neighborhoods.
    """
    sn = s.graph.n
    mapping = {}
    nxt = sn
    for w in range(t.graph.n):
        if w == t.root:
            mapping[w] = s.root
        else:
            mapping[w] = nxt
            nxt += 1
    edges = list(s.graph.edges())
    edges.extend((mapping[u], mapping[v]) for u, v in t.graph.edges())
    return Graph(sn + t.graph.n - 1, edges)


# The canonical pair of isomorphic 16-vertex rooted trees with different
# roots (McKay 1977) whose coalescences with any nontrivial graph share the
# generalized characteristic polynomial without being degree similar.

_TREE1_EDGES = [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (0, 6), (6, 7), (7, 8),
                (8, 9), (9, 10), (7, 11), (11, 12), (12, 13), (13, 14), (13, 15)]
_TREE2_EDGES = [(0, 1), (1, 2), (2, 3), (2, 4), (0, 5), (5, 6), (6, 7), (7, 8),
                (5, 9), (9, 10), (10, 11), (11, 12), (12, 13), (11, 14), (14, 15)]


def mckay_tree_1() -> RootedGraph:
    return RootedGraph(Graph(16, _TREE1_EDGES), 0)


def mckay_tree_2() -> RootedGraph:
    return RootedGraph(Graph(16, _TREE2_EDGES), 0)


# -- local switching ----------------------------------------------------------

@dataclass(frozen=True)
class SwitchingPartition:
    """Ordered cells C_1..C_k plus the rest set C; together a partition."""

    cells: tuple[tuple[int, ...], ...]
    rest: tuple[int, ...]

    def __init__(self, cells: Iterable[Iterable[int]], rest: Iterable[int] = ()):
        cell_t = tuple(tuple(sorted(c)) for c in cells)
        rest_t = tuple(sorted(rest))
        if any(not c for c in cell_t):
            raise ValueError("switching cells must be nonempty")
        seen: set[int] = set()
        for part in (*cell_t, rest_t):
            for v in part:
                if v in seen:
                    raise ValueError(f"vertex {v} appears twice in the partition")
                seen.add(v)
        object.__setattr__(self, "cells", cell_t)
        object.__setattr__(self, "rest", rest_t)

    def covers(self, n: int) -> bool:
        total = sum(len(c) for c in self.cells) + len(self.rest)
        if total != n:
            return False
        allv = set(self.rest)
        for c in self.cells:
            allv.update(c)
        return allv == set(range(n))

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells], "rest": list(self.rest)}

    @classmethod
    def from_json(cls, data: Mapping) -> "SwitchingPartition":
        return cls(data["cells"], data.get("rest", ()))


@dataclass(frozen=True)
class SwitchingReport:
    """Which switching conditions hold; violations name the failed condition."""

    switchable: bool
    degree_preserving: bool
    switch_violation: str | None = None
    degree_violation: str | None = None


def _check_partition(g: Graph, pi: SwitchingPartition) -> None:
    if not pi.covers(g.n):
        raise ValueError("partition does not cover the vertex set exactly")


def validate_switching(g: Graph, pi: SwitchingPartition) -> SwitchingReport:
    """Check the basic and the degree-preserving switching conditions.

    Basic conditions: (a) within each pair of cells the bipartite adjacency
    is equitable, (b) every rest vertex sees 0, half, or all of each cell.
    Degree-preserving conditions strengthen (b) to exactly half and add
    (c) every cell vertex sees exactly half of the rest set.
    """
    _check_partition(g, pi)
    sw_viol = None
    deg_viol = None
    cells = pi.cells
    rest = pi.rest
    for i, ci in enumerate(cells):
        for j, cj in enumerate(cells):
            counts = {len(g.neighbors(v) & frozenset(cj)) for v in ci}
            if len(counts) > 1:
                msg = (f"(a) vertices of cell {i} have differing neighbor "
                       f"counts {sorted(counts)} in cell {j}")
                sw_viol = sw_viol or msg
                deg_viol = deg_viol or msg
    for v in rest:
        for i, ci in enumerate(cells):
            cnt = len(g.neighbors(v) & frozenset(ci))
            if cnt != 0 and cnt != len(ci) and 2 * cnt != len(ci):
                sw_viol = sw_viol or (
                    f"(b) rest vertex {v} has {cnt} neighbors in cell {i} "
                    f"of size {len(ci)}")
            if 2 * cnt != len(ci):
                deg_viol = deg_viol or (
                    f"(b) rest vertex {v} has {cnt} != |C_{i + 1}|/2 neighbors "
                    f"in cell {i}")
    rest_set = frozenset(rest)
    for i, ci in enumerate(cells):
        for v in ci:
            cnt = len(g.neighbors(v) & rest_set)
            if 2 * cnt != len(rest):
                deg_viol = deg_viol or (
                    f"(c) cell vertex {v} has {cnt} != |C|/2 neighbors in the rest set")
                break
    return SwitchingReport(
        switchable=sw_viol is None,
        degree_preserving=sw_viol is None and deg_viol is None,
        switch_violation=sw_viol,
        degree_violation=deg_viol,
    )


def local_switch(g: Graph, pi: SwitchingPartition) -> Graph:
    """Complement each half-neighborhood of a rest vertex within its cell.

    Keeps the vertex labels of g; requires the basic switching conditions.
    """
    report = validate_switching(g, pi)
    if not report.switchable:
        raise NotSwitchableError(report.switch_violation)
    edge_set = {frozenset(e) for e in g.edges()}
    for v in pi.rest:
        for ci in pi.cells:
            cell = frozenset(ci)
            nbrs = g.neighbors(v) & cell
            if nbrs and 2 * len(nbrs) == len(cell):
                for w in nbrs:
                    edge_set.discard(frozenset((v, w)))
                for w in cell - nbrs:
                    edge_set.add(frozenset((v, w)))
    return Graph(g.n, (tuple(e) for e in edge_set))


# -- merging constructions ----------------------------------------------------

def _check_vertex_list(g: Graph, verts: Sequence[int], what: str) -> None:
    if len(set(verts)) != len(verts):
        raise BadVertexListError(f"duplicate vertices in {what}")
    for v in verts:
        if not (0 <= v < g.n):
            raise BadVertexListError(f"vertex {v} out of range in {what}")


def k_sum(x: Graph, x_verts: Sequence[int], y: Graph, y_verts: Sequence[int]) -> Graph:
    """Merge x_verts[i] with y_verts[i]; an edge present in both appears once.

    Output order: x's unmerged vertices, the merged vertices in list order,
    then y's unmerged vertices.
    """
    if len(x_verts) != len(y_verts):
        raise BadVertexListError("vertex lists must have equal length")
    _check_vertex_list(x, x_verts, "x_verts")
    _check_vertex_list(y, y_verts, "y_verts")
    k = len(x_verts)
    x_rest = [v for v in range(x.n) if v not in set(x_verts)]
    y_rest = [v for v in range(y.n) if v not in set(y_verts)]
    x_map = {v: i for i, v in enumerate(x_rest)}
    for i, v in enumerate(x_verts):
        x_map[v] = len(x_rest) + i
    y_map = {v: len(x_rest) + k + i for i, v in enumerate(y_rest)}
    for i, v in enumerate(y_verts):
        y_map[v] = len(x_rest) + i
    edges = [(x_map[u], x_map[v]) for u, v in x.edges()]
    edges.extend((y_map[u], y_map[v]) for u, v in y.edges())
    return Graph(x.n + y.n - k, edges)


def rooted_product(x: Graph, attach_verts: Sequence[int],
                   ys: Sequence[RootedGraph]) -> Graph:
    """Identify each ys[i]'s root with attach_verts[i]; no other interaction."""
    if len(attach_verts) != len(ys):
        raise BadVertexListError("need one attach vertex per rooted graph")
    _check_vertex_list(x, attach_verts, "attach_verts")
    edges = list(x.edges())
    nxt = x.n
    for anchor, rg in zip(attach_verts, ys):
        mapping = {}
        for w in range(rg.graph.n):
            if w == rg.root:
                mapping[w] = anchor
            else:
                mapping[w] = nxt
                nxt += 1
        edges.extend((mapping[u], mapping[v]) for u, v in rg.graph.edges())
    return Graph(nxt, edges)


def pendant_layout(g: Graph, per_degree: Mapping[int, int]) -> list[tuple[int, int, int]]:
    """Pendant ordering: (class degree, copy index, attached vertex) triples.

    Classes in ascending degree, copies within a class, class members in
    index order.  This is the block layout the pendant certificates assume.
    """
    classes = g.degree_classes()
    out = []
    for d in sorted(per_degree):
        if d not in classes:
            raise UnknownDegreeClassError(f"no vertex of degree {d}")
        for copy in range(per_degree[d]):
            for v in classes[d]:
                out.append((d, copy, v))
    return out


def attach_pendants(g: Graph, per_degree: Mapping[int, int]) -> Graph:
    """Attach per_degree[d] new degree-1 neighbors to every vertex of degree d.

    New vertices come first (see pendant_layout), originals last in order.
    """
    layout = pendant_layout(g, per_degree)
    p = len(layout)
    edges = [(u + p, v + p) for u, v in g.edges()]
    edges.extend((i, v + p) for i, (_, _, v) in enumerate(layout))
    return Graph(g.n + p, edges)


def add_join_vertices(g: Graph, degrees: Sequence[int]) -> Graph:
    """For each listed degree class V_i (size n_i), add an independent set of
    n_i new vertices each joined to all of V_i.

    New blocks come first, in the order the degrees are listed; originals
    keep their order after them.
    """
    if len(set(degrees)) != len(degrees):
        raise UnknownDegreeClassError("degree list must not repeat")
    classes = g.degree_classes()
    blocks = []
    for d in degrees:
        if d not in classes:
            raise UnknownDegreeClassError(f"no vertex of degree {d}")
        blocks.append(classes[d])
    p = sum(len(b) for b in blocks)
    edges = [(u + p, v + p) for u, v in g.edges()]
    base = 0
    for block in blocks:
        for i in range(len(block)):
            edges.extend((base + i, v + p) for v in block)
        base += len(block)
    return Graph(g.n + p, edges)


# -- deletion -----------------------------------------------------------------

def induced_subgraph(g: Graph, verts: Iterable[int]) -> Graph:
    """Induced subgraph; remaining vertices renumbered order-preservingly."""
    vs = sorted(set(verts))
    for v in vs:
        if not (0 <= v < g.n):
            raise OutOfRangeError(f"vertex {v} out of range")
    idx = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(idx[u], idx[v]) for u, v in g.edges() if u in keep and v in keep]
    return Graph(len(vs), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not (0 <= v < g.n):
        raise OutOfRangeError(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise OutOfRangeError(f"edge ({u},{v}) out of range")
    if not g.has_edge(u, v):
        raise NoSuchEdgeError(f"edge ({u},{v}) not present")
    drop = frozenset((u, v))
    return Graph(g.n, (e for e in g.edges() if frozenset(e) != drop))


# -- isomorphism --------------------------------------------------------------

def _refine_colors(g: Graph, h: Graph):
    """Joint iterated-degree refinement; returns (colors_g, colors_h) or None
    when the color histograms separate the graphs."""
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    ncolors = len(set(cg) | set(ch))
    while True:
        table: dict[tuple, int] = {}

        def recolor(graph, colors):
            out = []
            for v in range(graph.n):
                key = (colors[v], tuple(sorted(colors[u] for u in graph.neighbors(v))))
                out.append(table.setdefault(key, len(table)))
            return out

        ng = recolor(g, cg)
        nh = recolor(h, ch)
        if sorted(ng) != sorted(nh):
            return None
        new_count = len(set(ng) | set(nh))
        cg, ch = ng, nh
        if new_count == ncolors:
            return cg, ch
        ncolors = new_count


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return a vertex bijection perm with h = g relabeled by perm, or None.

    Color refinement narrows the candidates, then backtracking fills in the
    map most-constrained-vertex first.  Exact at the <= ~30 vertex scale this
    toolkit targets.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if g.degree_multiset() != h.degree_multiset():
        return None
    if g.n == 0:
        return []
    refined = _refine_colors(g, h)
    if refined is None:
        return None
    cg, ch = refined
    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(ch[v], []).append(v)
    # most constrained vertices first: smallest color class, then high degree
    order = sorted(range(g.n), key=lambda v: (len(by_color.get(cg[v], ())), -g.degree(v)))
    mapping: dict[int, int] = {}
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in by_color.get(cg[v], ()):
            if used[w]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, x) for u, x in mapping.items()):
                mapping[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    if not extend(0):
        return None
    return [mapping[v] for v in range(g.n)]


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism decision via refinement plus backtracking."""
    return find_isomorphism(g, h) is not None
