"""Recognition of flag complexes that are 2-dimensional triangulated disks."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from .flag import SimplicialComplex, euler_characteristic
from .graph import Graph, GraphError


class RejectReason(str, Enum):
    """Gate names, in the order they are evaluated."""

    HasK4 = "HasK4"
    NotPure2Dim = "NotPure2Dim"
    EdgeInThreeTriangles = "EdgeInThreeTriangles"
    BadVertexLink = "BadVertexLink"
    Disconnected = "Disconnected"
    NoBoundary = "NoBoundary"
    MultipleBoundaryCycles = "MultipleBoundaryCycles"
    WrongEuler = "WrongEuler"


@dataclass(frozen=True)
class DiskRejection:
    reason: RejectReason
    detail: str = ""

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {"accepted": False, "reason": self.reason.value, "detail": self.detail}


@dataclass(frozen=True)
class DiskCertificate:
    """A triangulated 2-disk with its boundary cycle and interior simplices.

    ``boundary_cycle`` starts at its least vertex and heads towards the smaller
    of that vertex's two boundary neighbours.
    """

    complex: SimplicialComplex
    boundary_cycle: tuple[int, ...]
    interior_vertices: frozenset[int]
    interior_edges: frozenset[tuple[int, int]]
    interior_triangles: frozenset[tuple[int, int, int]]

    @property
    def graph(self) -> Graph:
        return self.complex.graph

    @property
    def dim_I(self) -> int:
        return interior_dimension(self)

    @property
    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        b = self.boundary_cycle
        return frozenset(tuple(sorted((b[i], b[(i + 1) % len(b)]))) for i in range(len(b)))

    def to_json(self) -> dict:
        labels = self.graph.labels
        return {
            "accepted": True,
            "boundary_cycle": [labels[v] for v in self.boundary_cycle],
            "boundary_is_square": boundary_is_square(self),
            "interior_counts": {
                "vertices": len(self.interior_vertices),
                "edges": len(self.interior_edges),
                "triangles": len(self.interior_triangles),
            },
            "dim_I": self.dim_I,
        }


def vertex_link(c: SimplicialComplex, v: int) -> Graph:
    """Graph on the neighbours of ``v``; ``uw`` is an edge when ``uvw`` is a triangle."""
    g = c.graph
    if not 0 <= v < len(g):
        raise GraphError(f"unknown vertex index {v}")
    nbrs = sorted(g.adj[v])
    edges = [tuple(x for x in t if x != v) for t in c.triangles if v in t]
    return Graph.from_edges([g.labels[u] for u in nbrs],
                            [(nbrs.index(a), nbrs.index(b)) for a, b in edges])


def _link_kind(link: Graph) -> str | None:
    """'path', 'cycle' or None for anything else."""
    n = len(link)
    if n < 2 or not link.is_connected():
        return None
    degs = sorted(link.degree(i) for i in range(n))
    if all(d == 2 for d in degs) and n >= 3:
        return "cycle"
    if degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]):
        return "path"
    return None


def recognize_disk(c: SimplicialComplex) -> DiskCertificate | DiskRejection:
    """Certificate when ``c`` is a triangulated 2-disk, else the first failed gate."""
    g = c.graph
    if c.tetrahedra:
        return DiskRejection(RejectReason.HasK4, f"K4 on {g.label_set(c.tetrahedra[0])}")

    mult: dict[tuple[int, int], int] = defaultdict(int)
    in_triangle = set()
    for u, v, w in c.triangles:
        mult[(u, v)] += 1
        mult[(u, w)] += 1
        mult[(v, w)] += 1
        in_triangle.update((u, v, w))
    if not c.triangles:
        return DiskRejection(RejectReason.NotPure2Dim, "no triangles")
    for v in range(len(g)):
        if v not in in_triangle:
            return DiskRejection(RejectReason.NotPure2Dim, f"vertex {g.labels[v]} in no triangle")
    for e in c.edges:
        if mult[e] == 0:
            return DiskRejection(RejectReason.NotPure2Dim, f"edge {g.label_set(e)} in no triangle")
    for e in c.edges:
        if mult[e] > 2:
            return DiskRejection(RejectReason.EdgeInThreeTriangles,
                                 f"edge {g.label_set(e)} in {mult[e]} triangles")

    for v in range(len(g)):
        if _link_kind(vertex_link(c, v)) is None:
            return DiskRejection(RejectReason.BadVertexLink,
                                 f"link of {g.labels[v]} is not a path or cycle")

    comps = g.components()
    if len(comps) != 1:
        return DiskRejection(RejectReason.Disconnected, f"{len(comps)} components")

    bedges = [e for e in c.edges if mult[e] == 1]
    if not bedges:
        return DiskRejection(RejectReason.NoBoundary, "every edge lies in two triangles")
    cycles = _boundary_cycles(bedges)
    if cycles is None or len(cycles) != 1:
        n = "non-simple" if cycles is None else str(len(cycles))
        return DiskRejection(RejectReason.MultipleBoundaryCycles, f"{n} boundary cycles")

    chi = euler_characteristic(c)
    if chi != 1:
        return DiskRejection(RejectReason.WrongEuler, f"Euler characteristic {chi}")

    boundary = cycles[0]
    on_b = set(boundary)
    return DiskCertificate(
        complex=c,
        boundary_cycle=boundary,
        interior_vertices=frozenset(v for v in range(len(g)) if v not in on_b),
        interior_edges=frozenset(e for e in c.edges if not on_b.intersection(e)),
        interior_triangles=frozenset(t for t in c.triangles if not on_b.intersection(t)),
    )


def _boundary_cycles(bedges):
    nbrs: dict[int, list[int]] = defaultdict(list)
    for u, v in bedges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    if any(len(x) != 2 for x in nbrs.values()):
        return None
    seen = set()
    cycles = []
    for s in sorted(nbrs):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(nbrs[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return cycles


def interior_dimension(cert: DiskCertificate) -> int:
    if cert.interior_triangles:
        return 2
    if cert.interior_edges:
        return 1
    return 0


def boundary_is_square(cert: DiskCertificate) -> bool:
    return len(cert.boundary_cycle) == 4
