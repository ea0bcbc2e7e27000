"""Dicks-Leary presentations of Bestvina-Brady groups and their tree reductions.

A word is a tuple of ``(generator, exponent)`` letters with exponent ``+1`` or
``-1``. The edge generator ``e`` from ``u`` to ``v`` stands for ``u v^-1`` in
the ambient right-angled Artin group; edges are oriented from the lower to the
higher vertex index.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass

from .flag import build_flag_complex
from .graph import Graph
from .snf import invariant_factors

Letter = tuple[str, int]
Word = tuple[Letter, ...]


class DisconnectedComplex(ValueError):
    """The flag complex is disconnected, so the kernel is not finitely generated."""


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w) -> Word:
    out: list[Letter] = []
    for letter in w:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(w) -> Word:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def cyclic_key(w: Word) -> Word:
    """Least rotation of ``w`` or its inverse: equal keys mean the same relator."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    cands = []
    for x in (w, inverse(w)):
        cands.extend(x[i:] + x[:i] for i in range(len(x)))
    return min(cands)


def commutator(a: str, b: str) -> Word:
    return ((a, 1), (b, 1), (a, -1), (b, -1))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generator")
        for r in self.relators:
            if free_reduce(r) != tuple(r):
                raise ValueError("relators must be freely reduced")
            for g, e in r:
                if g not in gens or e not in (1, -1):
                    raise ValueError(f"bad letter {(g, e)!r}")

    def relator_multiset(self) -> Counter:
        return Counter(cyclic_key(r) for r in self.relators)


def edge_symbol(g: Graph, u: int, v: int) -> str:
    a, b = min(u, v), max(u, v)
    return f"{g.labels[a]}-{g.labels[b]}"


def _edge_word(g: Graph, u: int, v: int) -> Word:
    """The generator for the step ``u -> v`` (inverted against orientation)."""
    return ((edge_symbol(g, u, v), 1 if u < v else -1),)


def dicks_leary_presentation(g: Graph) -> Presentation:
    """One generator per edge; two relators per triangle u < v < w.

    The relators say e_uv e_vw = e_uw and e_vw e_uv = e_uw.
    """
    comps = g.components()
    if len(comps) != 1:
        raise DisconnectedComplex(
            f"flag complex has {len(comps)} components: "
            + "; ".join(",".join(g.label_set(c)) for c in comps))
    c = build_flag_complex(g)
    gens = tuple(edge_symbol(g, u, v) for u, v in c.edges)
    rels = []
    for u, v, w in c.triangles:
        euv, evw, euw = edge_symbol(g, u, v), edge_symbol(g, v, w), edge_symbol(g, u, w)
        rels.append(((euv, 1), (evw, 1), (euw, -1)))
        rels.append(((evw, 1), (euv, 1), (euw, -1)))
    return Presentation(gens, tuple(rels))


def bfs_tree(g: Graph, root: int = 0) -> list[tuple[int, int]]:
    """Breadth-first spanning tree, neighbours visited in index order."""
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if w not in seen:
                seen.add(w)
                tree.append((min(u, w), max(u, w)))
                queue.append(w)
    return sorted(tree)


def star_tree(g: Graph, apex: int) -> list[tuple[int, int]]:
    return sorted((min(apex, v), max(apex, v)) for v in g.adj[apex])


def spanning_tree_reduction(p: Presentation, g: Graph, tree=None) -> Presentation:
    """Eliminate every non-tree edge generator by its tree-path expression.

    ``tree`` defaults to :func:`bfs_tree` from vertex 0. The result presents
    the same group only when the flag complex is simply connected.
    """
    if tree is None:
        tree = bfs_tree(g)
    tree = sorted(tuple(sorted(e)) for e in tree)
    if len(tree) != len(g) - 1:
        raise ValueError("tree does not span the graph")

    # parent pointers from vertex 0 give the tree path between any two vertices
    tadj: dict[int, list[int]] = {v: [] for v in range(len(g))}
    for u, v in tree:
        tadj[u].append(v)
        tadj[v].append(u)
    parent = {0: None}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in sorted(tadj[u]):
            if w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    if len(parent) != len(g):
        raise ValueError("tree does not span the graph")

    def tree_path(u, v):
        left, right = [u], [v]
        while left[-1] != right[-1]:
            if depth[left[-1]] >= depth[right[-1]]:
                left.append(parent[left[-1]])
            else:
                right.append(parent[right[-1]])
        return left + right[-2::-1]

    symbols = {edge_symbol(g, u, v): (u, v) for u, v in g.edges()}
    rewrite: dict[str, Word] = {}
    for sym, (u, v) in symbols.items():
        walk = tree_path(u, v)
        rewrite[sym] = tuple(x for a, b in zip(walk, walk[1:]) for x in _edge_word(g, a, b))

    rels = []
    for r in p.relators:
        word = []
        for sym, e in r:
            piece = rewrite[sym]
            word.extend(piece if e == 1 else inverse(piece))
        red = cyclic_reduce(word)
        if red:
            rels.append(red)
    return Presentation(tuple(edge_symbol(g, u, v) for u, v in tree), tuple(rels))


def raag_presentation(g: Graph) -> Presentation:
    gens = g.labels
    return Presentation(gens, tuple(commutator(gens[u], gens[v]) for u, v in g.edges()))


def _is_commutator(w: Word):
    w = cyclic_reduce(w)
    if len(w) != 4:
        return None
    (a, x), (b, y), (c, z), (d, t) = w
    if a == c and b == d and a != b and x == -z and y == -t:
        return frozenset((a, b))
    return None


def cone_raag_check(split) -> bool:
    """Check mechanically that the kernel on a cone is the RAAG on its base.

    Reduce over the star at the apex, rename each spoke to its far endpoint and
    compare with the commutator relators of the base. Leftover relators must be
    consequences of those commutators: every pair of their letters commutes and
    each letter has exponent sum zero.
    """
    g, apex = split.graph, split.apex
    p = spanning_tree_reduction(dicks_leary_presentation(g), g, star_tree(g, apex))
    rename = {edge_symbol(g, apex, v): g.labels[v] for v in split.base_vertices}
    flip = {edge_symbol(g, apex, v): (1 if apex < v else -1) for v in split.base_vertices}
    mapped = [tuple((rename[s], e * flip[s]) for s, e in r) for r in p.relators]

    base_pairs = {frozenset((split.base.labels[u], split.base.labels[v])) for u, v in split.base.edges()}
    found = Counter()
    for r in mapped:
        pair = _is_commutator(r)
        if pair is not None:
            found[pair] += 1
            continue
        letters = sorted({s for s, _ in r})
        if any(frozenset((a, b)) not in base_pairs for i, a in enumerate(letters) for b in letters[i + 1:]):
            return False
        sums = Counter()
        for s, e in r:
            sums[s] += e
        if any(sums.values()):
            return False
    return set(found) == base_pairs and all(k == 1 for k in found.values())


def abelian_rank(p: Presentation) -> int:
    """Free rank of the abelianization."""
    col = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row: dict[int, int] = {}
        for g, e in r:
            row[col[g]] = row.get(col[g], 0) + e
        rows.append(row)
    return len(p.generators) - len(invariant_factors(rows))


def _fmt_word(w: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


def export(p: Presentation, fmt: str = "plain") -> str:
    if fmt == "plain":
        rels = ", ".join(_fmt_word(r) for r in p.relators)
        return f"< {', '.join(p.generators)} | {rels + ' ' if rels else ''}>"
    if fmt == "json":
        return json.dumps({
            "generators": list(p.generators),
            "relators": [[[g, e] for g, e in r] for r in p.relators],
        }, sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}")


def parse_presentation_json(text: str) -> Presentation:
    data = json.loads(text)
    return Presentation(tuple(data["generators"]),
                        tuple(tuple((g, int(e)) for g, e in r) for r in data["relators"]))
