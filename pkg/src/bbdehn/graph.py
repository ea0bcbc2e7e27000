"""Finite simplicial graphs with named vertices.

Vertices are dense indices ``0..n-1`` in first-appearance order, each with a
whitespace-free label. Graph values are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for graph construction and parsing errors."""


class GraphFormatError(GraphError):
    """A graph file could not be parsed. ``line`` is 1-based (0 if unknown)."""

    kind = "MalformedLine"

    def __init__(self, message: str, line: int = 0):
        self.line = line
        prefix = f"line {line}: " if line else ""
        super().__init__(f"{prefix}{self.kind}: {message}")


class MalformedLine(GraphFormatError):
    kind = "MalformedLine"


class DuplicateEdge(GraphFormatError):
    kind = "DuplicateEdge"


class SelfLoop(GraphFormatError):
    kind = "SelfLoop"


class UnknownVertex(GraphFormatError):
    kind = "UnknownVertex"


class DuplicateVertex(GraphFormatError):
    kind = "DuplicateVertex"


def _check_label(label: str) -> None:
    if not label or any(ch.isspace() for ch in label):
        raise GraphError(f"invalid vertex label {label!r}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the neighbour set of vertex ``i``."""

    labels: tuple[str, ...]
    adj: tuple[frozenset[int], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adj):
            raise GraphError("labels and adjacency differ in length")
        index = {}
        for i, lab in enumerate(self.labels):
            _check_label(lab)
            if lab in index:
                raise GraphError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        n = len(self.labels)
        for i, nb in enumerate(self.adj):
            if i in nb:
                raise GraphError(f"self-loop at {self.labels[i]!r}")
            for j in nb:
                if not 0 <= j < n or i not in self.adj[j]:
                    raise GraphError("adjacency is not symmetric")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple]) -> "Graph":
        """Build from labels and edges given as label pairs or index pairs."""
        labels = tuple(labels)
        pos = {lab: i for i, lab in enumerate(labels)}
        nbrs = [set() for _ in labels]
        for u, v in edges:
            i = u if isinstance(u, int) else pos[u]
            j = v if isinstance(v, int) else pos[v]
            if i == j:
                raise GraphError(f"self-loop at {labels[i]!r}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(labels, tuple(frozenset(s) for s in nbrs))

    # basic queries

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(len(self.adj)) for j in sorted(self.adj[i]) if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def label_set(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(vertices)]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by least member."""
        seen = [False] * len(self)
        out = []
        for s in range(len(self)):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def complement(self) -> "Graph":
        n = len(self)
        everyone = frozenset(range(n))
        return Graph(self.labels, tuple(everyone - nb - {i} for i, nb in enumerate(self.adj)))

    def relabel(self, mapping) -> "Graph":
        """Rename vertices; ``mapping`` is a dict or callable on labels."""
        f = mapping.get if isinstance(mapping, dict) else mapping
        return Graph(tuple(f(lab) for lab in self.labels), self.adj)

    def permute(self, order: Sequence[int]) -> "Graph":
        """Reorder vertices: new vertex ``k`` is old vertex ``order[k]``."""
        where = {old: new for new, old in enumerate(order)}
        labels = tuple(self.labels[old] for old in order)
        adj = tuple(frozenset(where[w] for w in self.adj[old]) for old in order)
        return Graph(labels, adj)

    # serialization

    def render(self) -> str:
        """Edge-list text in strict mode (``v`` preamble present)."""
        lines = [f"v {lab}" for lab in self.labels]
        lines += [f"e {self.labels[i]} {self.labels[j]}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.labels),
            "edges": [[self.labels[i], self.labels[j]] for i, j in self.edges()],
        }

    def __repr__(self) -> str:
        return f"Graph({len(self)} vertices, {self.edge_count} edges)"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format (or its JSON form).

    Lines are ``# comment``, ``v <label>`` or ``e <label1> <label2>``. Without
    any ``v`` line, labels in ``e`` lines declare themselves; with one, every
    edge endpoint must be declared.
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    rows = []
    strict = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            strict = True
        elif not (parts[0] == "e" and len(parts) == 3):
            raise MalformedLine(f"cannot parse {line!r}", lineno)
        rows.append((lineno, parts))

    labels: list[str] = []
    pos: dict[str, int] = {}
    for lineno, parts in rows:
        if parts[0] == "v":
            if parts[1] in pos:
                raise DuplicateVertex(f"vertex {parts[1]!r} declared twice", lineno)
            pos[parts[1]] = len(labels)
            labels.append(parts[1])

    seen: set[frozenset] = set()
    edges = []
    for lineno, parts in rows:
        if parts[0] != "e":
            continue
        a, b = parts[1], parts[2]
        for lab in (a, b):
            if lab not in pos:
                if strict:
                    raise UnknownVertex(f"vertex {lab!r} not declared", lineno)
                pos[lab] = len(labels)
                labels.append(lab)
        if a == b:
            raise SelfLoop(f"edge {a} {b}", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"edge {a} {b} repeated", lineno)
        seen.add(key)
        edges.append((pos[a], pos[b]))
    return Graph.from_edges(labels, edges)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        vertices = [str(v) for v in data.get("vertices", [])]
        edges = [tuple(map(str, e)) for e in data.get("edges", [])]
    except (ValueError, AttributeError, TypeError) as exc:
        raise MalformedLine(f"bad JSON graph: {exc}") from None
    lines = [f"v {v}" for v in vertices]
    for e in edges:
        if len(e) != 2:
            raise MalformedLine(f"edge {list(e)} is not a pair")
        lines.append(f"e {e[0]} {e[1]}")
    if not vertices:
        # no declarations: endpoints auto-declare, as in the text form
        lines = [ln for ln in lines if ln.startswith("e ")]
    return parse_graph("\n".join(lines))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# constructors


def empty_graph(labels: Sequence[str] = ()) -> Graph:
    return Graph(tuple(labels), tuple(frozenset() for _ in labels))


def point(label: str = "h") -> Graph:
    return empty_graph([label])


def path(n: int, prefix: str = "v") -> Graph:
    """Path of length ``n``: ``n`` edges on ``n + 1`` vertices."""
    if n < 0:
        raise GraphError("path length must be non-negative")
    labels = [f"{prefix}{i}" for i in range(1, n + 2)]
    return Graph.from_edges(labels, [(i, i + 1) for i in range(n)])


def cycle(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise GraphError("a simplicial cycle needs at least 3 vertices")
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(labels, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(labels, combinations(range(n), 2))


def _fresh(label: str, taken: set[str]) -> str:
    if label not in taken:
        return label
    k = 2
    while f"{label}#{k}" in taken:
        k += 1
    return f"{label}#{k}"


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    taken = set(g1.labels)
    labels = list(g1.labels)
    for lab in g2.labels:
        lab = _fresh(lab, taken)
        taken.add(lab)
        labels.append(lab)
    off = len(g1)
    edges = g1.edges() + [(i + off, j + off) for i, j in g2.edges()]
    return Graph.from_edges(labels, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides.

    Colliding labels from ``g2`` get ``#2``, ``#3``, ... suffixes.
    """
    u = disjoint_union(g1, g2)
    off = len(g1)
    cross = [(i, off + j) for i in range(len(g1)) for j in range(len(g2))]
    return Graph.from_edges(u.labels, u.edges() + cross)


def suspension(g: Graph, apexes: tuple[str, str] = ("n", "s")) -> Graph:
    return join(empty_graph(apexes), g)


def fan(n: int) -> Graph:
    """Hub joined with a path on ``n`` vertices (so ``fan(2)`` is a triangle)."""
    if n < 1:
        raise GraphError("fan needs at least one rim vertex")
    return join(point("h"), path(n - 1))


def wheel(n: int) -> Graph:
    """Hub joined with the cycle on ``n`` vertices."""
    return join(point("h"), cycle(n))


def induced_subgraph(g: Graph, s: Iterable) -> Graph:
    """Subgraph on ``s`` (indices or labels), keeping the original vertex order."""
    idx = set()
    for v in s:
        if isinstance(v, int):
            if not 0 <= v < len(g):
                raise GraphError(f"unknown vertex index {v}")
            idx.add(v)
        else:
            idx.add(g.index(v))
    keep = sorted(idx)
    where = {old: new for new, old in enumerate(keep)}
    adj = tuple(frozenset(where[w] for w in g.adj[v] if w in where) for v in keep)
    return Graph(tuple(g.labels[v] for v in keep), adj)


def complement_components(g: Graph) -> list[list[int]]:
    """Components of the complement graph: each sorted, ordered by least member."""
    return g.complement().components()
