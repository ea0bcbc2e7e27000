"""Canonical labels for small graphs.

Colour refinement followed by an individualization search over the refined
partitions. Automorphisms found at equal leaves prune children lying in the
same orbit, which keeps highly symmetric graphs (empty, complete, bipartite)
cheap at the sizes used here.
"""

from __future__ import annotations

from .graph import Graph

DEFAULT_CAP = 16


class CapExceeded(ValueError):
    pass


def _refine(adj, cells):
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            splitter = set(cells[s])
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(len(adj[v] & splitter), []).append(v)
                if len(groups) > 1:
                    changed = True
                out.extend(groups[k] for k in sorted(groups))
            cells = out
            if changed:
                break
    return cells


def _certificate(adj, order):
    bits = 0
    n = len(order)
    for a in range(n):
        row = adj[order[a]]
        for b in range(a + 1, n):
            bits = (bits << 1) | (order[b] in row)
    return bits


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.first = None
        self.best = None
        self.gens: list[tuple[int, ...]] = []

    def leaf(self, order):
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = self.best = (cert, order)
            return
        for ref_cert, ref_order in (self.first, self.best):
            if cert == ref_cert:
                perm = [0] * len(order)
                for a, b in zip(ref_order, order):
                    perm[a] = b
                self.gens.append(tuple(perm))
                return
        if cert < self.best[0]:
            self.best = (cert, order)

    def orbit_roots(self, prefix):
        n = len(self.adj)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in prefix):
                for x in range(n):
                    rx, ry = find(x), find(g[x])
                    if rx != ry:
                        parent[rx] = ry
        return find

    def run(self, cells, prefix):
        cells = _refine(self.adj, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf(tuple(c[0] for c in cells))
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            find = self.orbit_roots(prefix)
            if any(find(v) == find(u) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            self.run(split, prefix + (v,))


def canonical_order(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Vertex order realising the canonical form of ``g``."""
    if len(g) > cap:
        raise CapExceeded(f"{len(g)} vertices exceeds canonicalization cap {cap}")
    if len(g) == 0:
        return ()
    s = _Search(g.adj)
    s.run([list(range(len(g)))], ())
    return s.best[1]


def canonical_label(g: Graph, cap: int = DEFAULT_CAP) -> str:
    """String equal for isomorphic graphs and different otherwise."""
    n = len(g)
    order = canonical_order(g, cap)
    bits = _certificate(g.adj, order) if n else 0
    width = max(1, (n * (n - 1) // 2 + 3) // 4)
    return f"{n}:{bits:0{width}x}"


def are_isomorphic(g1: Graph, g2: Graph, cap: int = DEFAULT_CAP) -> bool:
    return canonical_label(g1, cap) == canonical_label(g2, cap)
