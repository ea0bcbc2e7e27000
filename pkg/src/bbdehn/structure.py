"""Detectors for the graph structures the classification rules key on."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canonical import DEFAULT_CAP, canonical_label
from .disk import DiskCertificate, boundary_is_square, interior_dimension, recognize_disk
from .flag import build_flag_complex
from .graph import Graph, complement_components, induced_subgraph

DEFAULT_SUBDISK_CAP = 12


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class ConeSplit:
    """``graph`` is the join of ``apex`` with ``base`` (induced on the other vertices)."""

    graph: Graph
    apex: int
    base_vertices: tuple[int, ...]
    base: Graph

    def to_json(self) -> dict:
        return {
            "apex": self.graph.labels[self.apex],
            "base_vertices": [self.graph.labels[v] for v in self.base_vertices],
            "base_edges": self.base.edge_count,
        }


@dataclass(frozen=True)
class SuspensionCertificate:
    graph: Graph
    apexes: tuple[int, int]
    path: tuple[int, ...]

    @property
    def path_length(self) -> int:
        return len(self.path) - 1

    def to_json(self) -> dict:
        lab = self.graph.labels
        return {
            "apexes": [lab[v] for v in self.apexes],
            "path": [lab[v] for v in self.path],
            "path_length": self.path_length,
        }


@dataclass(frozen=True)
class Piece:
    kind: str  # "Triangle", "Fan" or "Wheel"
    size: int
    vertices: tuple[int, ...]
    triangles: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class FanWheelTree:
    graph: Graph
    nodes: tuple[Piece, ...]
    edges: tuple[tuple[int, int], ...]
    cut_edges: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        lab = self.graph.labels
        return {
            "nodes": [{"kind": p.kind, "size": p.size, "vertices": [lab[v] for v in p.vertices]}
                      for p in self.nodes],
            "edges": [list(e) for e in self.edges],
            "cut_edges": [[lab[u], lab[v]] for u, v in self.cut_edges],
        }


@dataclass(frozen=True)
class SubdiskWitness:
    graph: Graph
    vertex_set: tuple[int, ...]
    disk: DiskCertificate
    d: int

    def to_json(self) -> dict:
        return {
            "vertex_set": [self.graph.labels[v] for v in self.vertex_set],
            "d": self.d,
            "boundary_cycle": [self.disk.graph.labels[v] for v in self.disk.boundary_cycle],
        }


@dataclass(frozen=True)
class SubdiskSearch:
    """Outcome of a subdisk search. ``exhausted`` means the size cap cut the search short."""

    witness: SubdiskWitness | None
    exhausted: bool
    examined: int = field(default=0, compare=False)

    def __bool__(self):
        return self.witness is not None


def find_cone_vertex(g: Graph) -> ConeSplit | None:
    n = len(g)
    if n < 2:
        return None
    for v in range(n):
        if g.degree(v) == n - 1:
            rest = tuple(u for u in range(n) if u != v)
            return ConeSplit(g, v, rest, induced_subgraph(g, rest))
    return None


def join_factorization(g: Graph) -> list[list[int]]:
    """Finest join factors: the vertex sets of the complement's components."""
    return complement_components(g)


def _as_simple_path(g: Graph, vertices) -> tuple[int, ...] | None:
    """The induced subgraph on ``vertices`` as an ordered path, if it is one."""
    vs = sorted(vertices)
    if len(vs) < 2:
        return None
    vset = set(vs)
    deg = {v: len(g.adj[v] & vset) for v in vs}
    ends = [v for v in vs if deg[v] == 1]
    if len(ends) != 2 or any(deg[v] not in (1, 2) for v in vs):
        return None
    order = [ends[0]]
    prev = None
    while len(order) < len(vs):
        nxt = [w for w in g.adj[order[-1]] & vset if w != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return tuple(order) if order[-1] == ends[1] else None


def recognize_suspension_of_path(g: Graph) -> SuspensionCertificate | None:
    n = len(g)
    everyone = frozenset(range(n))
    for p, q in combinations(range(n), 2):
        if g.has_edge(p, q):
            continue
        rest = everyone - {p, q}
        if g.adj[p] != rest or g.adj[q] != rest:
            continue
        order = _as_simple_path(g, rest)
        if order is not None:
            return SuspensionCertificate(g, (p, q), order)
    return None


def fan_wheel_tree_decomposition(g: Graph, cert: DiskCertificate) -> FanWheelTree:
    """Cut along every non-boundary edge with both ends on the boundary."""
    if interior_dimension(cert) != 0:
        raise PreconditionViolated("fan/wheel decomposition needs interior dimension 0")
    c = cert.complex
    on_b = set(cert.boundary_cycle)
    bedges = cert.boundary_edges
    cut = tuple(e for e in c.edges if e not in bedges and e[0] in on_b and e[1] in on_b)
    cutset = set(cut)

    tris = c.triangles
    parent = list(range(len(tris)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_edge: dict[tuple[int, int], list[int]] = {}
    for k, (u, v, w) in enumerate(tris):
        for e in ((u, v), (u, w), (v, w)):
            by_edge.setdefault(e, []).append(k)
    for e, ks in by_edge.items():
        if e not in cutset and len(ks) == 2:
            a, b = find(ks[0]), find(ks[1])
            if a != b:
                parent[max(a, b)] = min(a, b)

    roots = sorted({find(k) for k in range(len(tris))})
    node_of = {r: i for i, r in enumerate(roots)}
    members: list[list[int]] = [[] for _ in roots]
    for k in range(len(tris)):
        members[node_of[find(k)]].append(k)
    nodes = tuple(_classify_piece(g, [tris[k] for k in ks]) for ks in members)
    tree_edges = tuple(sorted(tuple(sorted((node_of[find(by_edge[e][0])], node_of[find(by_edge[e][1])])))
                              for e in cut))
    return FanWheelTree(g, nodes, tree_edges, cut)


def _classify_piece(g: Graph, tris) -> Piece:
    verts = tuple(sorted({v for t in tris for v in t}))
    if len(tris) == 1:
        return Piece("Triangle", 3, verts, tuple(tris))
    vset = set(verts)
    for hub in verts:
        if all(hub in t for t in tris) and vset - {hub} <= g.adj[hub]:
            rim = vset - {hub}
            sub = induced_subgraph(g, rim)
            if all(sub.degree(i) == 2 for i in range(len(sub))) and sub.is_connected():
                return Piece("Wheel", len(verts), verts, tuple(tris))
            if _as_simple_path(g, rim) is not None:
                return Piece("Fan", len(verts), verts, tuple(tris))
    raise PreconditionViolated(f"piece on {g.label_set(verts)} is neither a fan nor a wheel")


def _square_suspension_scan(g: Graph, size_cap: int) -> SubdiskWitness | None:
    """Least 6-vertex induced suspension of a path of length 3."""
    if size_cap < 6:
        return None
    best = None
    n = len(g)
    for p, q in combinations(range(n), 2):
        if g.has_edge(p, q):
            continue
        common = sorted(g.adj[p] & g.adj[q])
        for quad in combinations(common, 4):
            if _as_simple_path(g, quad) is None:
                continue
            key = tuple(sorted((p, q) + quad))
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return _witness(g, best)


def _witness(g: Graph, vs) -> SubdiskWitness | None:
    sub = induced_subgraph(g, vs)
    found = recognize_disk(build_flag_complex(sub))
    if not found or not boundary_is_square(found):
        return None
    return SubdiskWitness(g, tuple(vs), found, interior_dimension(found))


def search_induced_square_subdisk(g: Graph, target_d: int, size_cap: int = DEFAULT_SUBDISK_CAP,
                                  canon_cap: int = DEFAULT_CAP) -> SubdiskSearch:
    """First induced subgraph (by size, then lexicographically) whose flag complex
    is a square-boundary disk of interior dimension ``target_d``."""
    if size_cap < 4:
        raise ValueError("size_cap must be at least 4")
    if target_d not in (0, 1, 2):
        raise ValueError("target_d must be 0, 1 or 2")
    n = len(g)
    exhausted = size_cap < n
    if target_d == 1:
        hit = _square_suspension_scan(g, size_cap)
        if hit is not None:
            return SubdiskSearch(hit, False, 1)

    adj = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    fc = build_flag_complex(g)
    k4_masks = [sum(1 << v for v in t) for t in fc.tetrahedra]
    tri_masks = [sum(1 << v for v in t) for t in fc.triangles]
    seen: dict[str, int | None] = {}
    examined = 0
    for size in range(4, min(size_cap, n) + 1):
        for vs in combinations(range(n), size):
            mask = sum(1 << v for v in vs)
            ecount = sum(bin(adj[v] & mask).count("1") for v in vs) // 2
            # square-boundary disk: chi = 1 and 3T = 4 + 2(E - 4) give E = 3V - 7
            if ecount != 3 * size - 7:
                continue
            if any(m & mask == m for m in k4_masks):
                continue
            if sum(1 for m in tri_masks if m & mask == m) != 2 * size - 6:
                continue
            if not _mask_connected(adj, mask, vs[0]):
                continue
            examined += 1
            sub = induced_subgraph(g, vs)
            key = canonical_label(sub, max(canon_cap, size))
            if key not in seen:
                found = recognize_disk(build_flag_complex(sub))
                seen[key] = interior_dimension(found) if found and boundary_is_square(found) else None
            if seen[key] == target_d:
                return SubdiskSearch(_witness(g, vs), False, examined)
    return SubdiskSearch(None, exhausted, examined)


def _mask_connected(adj, mask, start) -> bool:
    reach = 1 << start
    frontier = reach
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= mask & ~reach
        reach |= nxt
        frontier = nxt
    return reach == mask
