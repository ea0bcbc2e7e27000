"""Flag complexes up to dimension 3 and their first homology."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .snf import invariant_factors

HOMOLOGY_EDGE_CAP = 20_000


class HomologySizeError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Cliques of size 1..4 of ``graph``, as sorted index tuples in sorted order."""

    graph: Graph
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, int, int], ...]
    tetrahedra: tuple[tuple[int, int, int, int], ...]
    has_k5: bool

    @property
    def vertices(self) -> tuple[tuple[int], ...]:
        return tuple((i,) for i in range(len(self.graph)))

    @property
    def simplices(self):
        return (self.vertices, self.edges, self.triangles, self.tetrahedra)

    @property
    def f_vector(self) -> tuple[int, int, int, int]:
        return (len(self.graph), len(self.edges), len(self.triangles), len(self.tetrahedra))

    @property
    def dimension(self) -> int:
        for d in (3, 2, 1, 0):
            if self.f_vector[d]:
                return d
        return -1


@dataclass(frozen=True)
class HomologyGate:
    connected: bool
    components: int
    h1_rank: int
    h1_torsion: tuple[int, ...]

    @property
    def h1_trivial(self) -> bool:
        return self.h1_rank == 0 and not self.h1_torsion


def build_flag_complex(g: Graph) -> SimplicialComplex:
    adj = g.adj
    edges, tris, tets = [], [], []
    has_k5 = False
    for u in range(len(g)):
        up = sorted(w for w in adj[u] if w > u)
        for v in up:
            edges.append((u, v))
            common_uv = [w for w in up if w > v and w in adj[v]]
            for w in common_uv:
                tris.append((u, v, w))
                for x in common_uv:
                    if x > w and x in adj[w]:
                        tets.append((u, v, w, x))
                        if not has_k5:
                            has_k5 = bool(adj[u] & adj[v] & adj[w] & adj[x])
    return SimplicialComplex(g, tuple(edges), tuple(tris), tuple(tets), has_k5)


def contains_k4(g: Graph) -> bool:
    return build_flag_complex(g).f_vector[3] > 0


def euler_characteristic(c: SimplicialComplex) -> int:
    """V - E + T over the 2-skeleton."""
    v, e, t, _ = c.f_vector
    return v - e + t


def boundary_rows(c: SimplicialComplex, dim: int) -> list[dict[int, int]]:
    """Rows of the boundary map from ``dim``-simplices to ``dim-1``-faces.

    Row ``k`` is the boundary of the ``k``-th simplex in the sorted list, keyed
    by face position (the transpose of the usual matrix; ranks agree).
    """
    if dim == 1:
        return [{u: -1, v: 1} for u, v in c.edges]
    if dim == 2:
        pos = {e: k for k, e in enumerate(c.edges)}
        return [{pos[(v, w)]: 1, pos[(u, w)]: -1, pos[(u, v)]: 1} for u, v, w in c.triangles]
    raise ValueError("only dimensions 1 and 2 are supported")


def homology_gate(c: SimplicialComplex, edge_cap: int = HOMOLOGY_EDGE_CAP) -> HomologyGate:
    """Integral H1 of the 2-skeleton."""
    if len(c.edges) > edge_cap:
        raise HomologySizeError(f"{len(c.edges)} edges exceeds homology cap {edge_cap}")
    ncomp = len(c.graph.components())
    d1 = boundary_rows(c, 1)
    d2 = boundary_rows(c, 2)
    _check_chain_condition(d1, d2)
    rank1 = len(c.graph) - ncomp
    factors = invariant_factors(d2)
    h1_rank = len(c.edges) - rank1 - len(factors)
    return HomologyGate(
        connected=ncomp == 1,
        components=ncomp,
        h1_rank=h1_rank,
        h1_torsion=tuple(d for d in factors if d > 1),
    )


def _check_chain_condition(d1, d2):
    for row in d2:
        acc: dict[int, int] = {}
        for e, s in row.items():
            for v, t in d1[e].items():
                acc[v] = acc.get(v, 0) + s * t
        if any(acc.values()):
            raise AssertionError("boundary of boundary is nonzero")
