"""Randomized instance generators for the construction lemmas.

Every generator takes a ``random.Random`` and uses rejection sampling: build
a structured candidate, validate the exact hypotheses, retry on failure.
Seeding protocol: one ``random.Random(seed)`` drives a whole scenario, so a
fixed seed reproduces the full instance stream.

The canonical demo instance (a 4-cell, 2-rest switching graph) is also
frozen here for documentation and CLI defaults.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .certify import Certificate, certificate_for_switching
from .graphs import Graph, SwitchingPartition, validate_switching


def demo_switch_instance() -> tuple[Graph, SwitchingPartition]:
    """Six vertices: one empty cell {0,1,2,3}, rest {4,5} with an edge,
    4 ~ {0,1} and 5 ~ {2,3}.  Satisfies the degree-preserving conditions."""
    g = Graph(6, [(4, 5), (0, 4), (1, 4), (2, 5), (3, 5)])
    pi = SwitchingPartition(cells=[[0, 1, 2, 3]], rest=[4, 5])
    return g, pi


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5,
                           max_tries: int = 500) -> Graph:
    for _ in range(max_tries):
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g
    raise RuntimeError(f"no connected graph found for n={n}, p={p}")


def random_regular_graph(rng: random.Random, n: int, d: int,
                         max_tries: int = 2000) -> Graph:
    """Configuration model with rejection of loops and multi-edges."""
    if n * d % 2 or d >= n:
        raise ValueError("need n*d even and d < n")
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        seen: set[frozenset[int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or frozenset((u, v)) in seen:
                ok = False
                break
            seen.add(frozenset((u, v)))
        if ok:
            return Graph(n, (tuple(e) for e in seen))
    raise RuntimeError(f"no simple {d}-regular graph found for n={n}")


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform-ish random tree: attach each new vertex to a random earlier one."""
    return Graph(n, ((v, rng.randrange(v)) for v in range(1, n)))


def _biregular(rng: random.Random, rows: Sequence[int], cols: Sequence[int],
               row_deg: int) -> set[tuple[int, int]]:
    """Bipartite edges: every row vertex hits row_deg columns, columns evenly."""
    nr, nc = len(rows), len(cols)
    total = nr * row_deg
    col_deg, remainder = divmod(total, nc)
    if remainder:
        raise ValueError("degrees do not balance")
    for _ in range(50):
        stubs = [c for c in cols for _ in range(col_deg)]
        rng.shuffle(stubs)
        pairs: set[tuple[int, int]] = set()
        idx = 0
        ok = True
        for r in rows:
            for _ in range(row_deg):
                p = (r, stubs[idx])
                idx += 1
                if p in pairs:
                    ok = False
                    break
                pairs.add(p)
            if not ok:
                break
        if ok:
            return pairs
    offset = rng.randrange(nc)
    return {(r, cols[(i * row_deg + t + offset) % nc])
            for i, r in enumerate(rows) for t in range(row_deg)}


_CELL_STYLES = {
    2: ((), ((0, 1),)),
    4: ((), ((0, 1), (2, 3)), ((0, 1), (1, 2), (2, 3), (3, 0)),
        tuple((i, j) for i in range(4) for j in range(i + 1, 4))),
}


def _build_candidate(rng: random.Random, rest_style: str
                     ) -> tuple[Graph, SwitchingPartition]:
    k = rng.choice((1, 1, 1, 2))
    cell_sizes = [rng.choice((2, 4)) for _ in range(k)]
    c = 4 if rest_style == "tangled" else rng.choice((2, 4))
    cells = []
    start = 0
    for size in cell_sizes:
        cells.append(tuple(range(start, start + size)))
        start += size
    rest = tuple(range(start, start + c))
    n = start + c
    edges: set[tuple[int, int]] = set()
    for cell in cells:
        style = rng.choice(_CELL_STYLES[len(cell)])
        edges.update((cell[i], cell[j]) for i, j in style)
    for i in range(k):
        for j in range(i + 1, k):
            mode = rng.choice(("none", "none", "full", "half"))
            if mode == "full":
                edges.update((u, v) for u in cells[i] for v in cells[j])
            elif mode == "half":
                edges.update(_biregular(rng, cells[i], cells[j], len(cells[j]) // 2))
    for cell in cells:
        edges.update(_biregular(rng, cell, rest, c // 2))
    if rest_style == "star":
        edges.update((rest[0], w) for w in rest[1:])
    elif rest_style == "tangled":
        r0, r1, r2, r3 = rest
        edges.update(((r0, r1), (r0, r2), (r0, r3), (r1, r2)))
    else:
        for a in range(len(rest)):
            for b in range(a + 1, len(rest)):
                if rng.random() < 0.4:
                    edges.add((rest[a], rest[b]))
    return Graph(n, edges), SwitchingPartition(cells=cells, rest=rest)


def random_switch_instance(rng: random.Random, *, connected: bool = False,
                           rest_style: str = "random", min_unique: int = 0,
                           unique_adjacent: bool = False,
                           max_tries: int = 400
                           ) -> tuple[Graph, SwitchingPartition]:
    """A graph plus partition satisfying the degree-preserving conditions."""
    for _ in range(max_tries):
        g, pi = _build_candidate(rng, rest_style)
        if not validate_switching(g, pi).degree_preserving:
            continue
        if connected and not g.is_connected():
            continue
        if min_unique:
            uniq = _unique_degree_vertices(g)
            if len(uniq) < min_unique:
                continue
            if unique_adjacent and not _has_adjacent_pair(g, uniq):
                continue
        return g, pi
    raise RuntimeError("could not generate a switching instance")


def random_regular_switch_instance(rng: random.Random, max_tries: int = 400
                                   ) -> tuple[Graph, SwitchingPartition]:
    """A degree-preserving instance whose graph is regular (for joins).

    Degree balance: cell degree d11 + c/2 must equal c1/2 + r where r is the
    rest-internal degree; each parameter set below satisfies it by design.
    """
    combos = (
        (4, ((0, 1), (2, 3)), 2, ()),                          # 1+1 = 2+0
        (4, ((0, 1), (1, 2), (2, 3), (3, 0)), 2, ((0, 1),)),   # 2+1 = 2+1
        (2, ((0, 1),), 2, ((0, 1),)),                          # 1+1 = 1+1
        (4, (), 4, ()),                                        # 0+2 = 2+0
    )
    for _ in range(max_tries):
        c1, cell_edges, c, rest_edges = combos[rng.randrange(len(combos))]
        cell = tuple(range(c1))
        rest = tuple(range(c1, c1 + c))
        edges: set[tuple[int, int]] = set(cell_edges)
        edges.update((rest[a], rest[b]) for a, b in rest_edges)
        edges.update(_biregular(rng, cell, rest, c // 2))
        g = Graph(c1 + c, edges)
        pi = SwitchingPartition(cells=[cell], rest=rest)
        if not g.is_regular():
            continue
        if not validate_switching(g, pi).degree_preserving:
            continue
        if not g.is_connected():
            continue
        return g, pi
    raise RuntimeError("could not generate a regular switching instance")


def _unique_degree_vertices(g: Graph) -> list[int]:
    degs = g.degrees()
    return [v for v in range(g.n) if degs.count(degs[v]) == 1]


def _has_adjacent_pair(g: Graph, verts: Iterable[int]) -> bool:
    vs = list(verts)
    return any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def random_certified_pair(rng: random.Random, *, connected: bool = False,
                          regular: bool = False
                          ) -> tuple[Graph, Graph, Certificate]:
    """A degree-similar pair with its switching certificate."""
    if regular:
        g, pi = random_regular_switch_instance(rng)
    else:
        g, pi = random_switch_instance(rng, connected=connected)
    switched, cert = certificate_for_switching(g, pi)
    return g, switched, cert


def random_unique_degree_pair(rng: random.Random, k: int = 1,
                              max_tries: int = 400
                              ) -> tuple[Graph, Graph, Certificate, list[int], list[int]]:
    """A certified pair plus k designated unique-degree vertices.

    The designated vertices sit in the rest set, so switching fixes them and
    the same indices work on both sides; for k = 2 they are adjacent (the
    k-sum connectivity hypothesis).
    """
    if k not in (1, 2):
        raise ValueError("generator supports k in {1, 2}")
    style = "star" if k == 1 else "tangled"
    for _ in range(max_tries):
        g, pi = random_switch_instance(
            rng, connected=True, rest_style=style, min_unique=k,
            unique_adjacent=(k == 2))
        uniq = set(_unique_degree_vertices(g)) & set(pi.rest)
        if k == 1:
            if not uniq:
                continue
            chosen = [sorted(uniq)[0]]
        else:
            pairs = [(u, v) for u in sorted(uniq) for v in sorted(uniq)
                     if u < v and g.has_edge(u, v)]
            if not pairs:
                continue
            chosen = list(pairs[0])
        switched, cert = certificate_for_switching(g, pi)
        if any(switched.degree(v) != g.degree(v) for v in chosen):
            continue
        return g, switched, cert, chosen, chosen
    raise RuntimeError("could not generate a unique-degree pair")
