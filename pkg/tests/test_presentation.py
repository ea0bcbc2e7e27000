from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix

from bbdehn.flag import build_flag_complex, homology_gate
from bbdehn.graph import Graph, complete, cycle, disjoint_union, fan, join, path, point, wheel
from bbdehn.presentation import (
    DisconnectedComplex,
    Presentation,
    abelian_rank,
    bfs_tree,
    commutator,
    cone_raag_check,
    cyclic_key,
    cyclic_reduce,
    dicks_leary_presentation,
    export,
    free_reduce,
    inverse,
    parse_presentation_json,
    raag_presentation,
    spanning_tree_reduction,
    star_tree,
)
from bbdehn.structure import find_cone_vertex

from conftest import corpus, small_graphs

letters = st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=10).map(tuple)


def connected_corpus():
    return {k: g for k, g in corpus().items() if g.is_connected()}


def abelian_rank_sympy(p):
    if not p.relators:
        return len(p.generators)
    col = {g: i for i, g in enumerate(p.generators)}
    m = [[0] * len(col) for _ in p.relators]
    for r, rel in enumerate(p.relators):
        for g, e in rel:
            m[r][col[g]] += e
    return len(col) - Matrix(m).rank()


@given(words)
def test_cyclic_key_invariance(w):
    key = cyclic_key(w)
    red = cyclic_reduce(w)
    if red:
        rot = red[3 % len(red):] + red[:3 % len(red)]
        assert cyclic_key(rot) == key
    assert cyclic_key(inverse(w)) == key
    assert free_reduce(w + inverse(w)) == ()


@pytest.mark.parametrize("name", sorted(connected_corpus()))
def test_dicks_leary_counts(name):
    g = corpus()[name]
    c = build_flag_complex(g)
    p = dicks_leary_presentation(g)
    assert len(p.generators) == len(c.edges)
    assert len(p.relators) == 2 * len(c.triangles)


@pytest.mark.parametrize("name", sorted(connected_corpus()))
def test_relators_die_in_the_raag(name):
    # e(u->v) = u v^-1: the first relator of each pair is freely trivial, the
    # second is trivial once the vertex generators commute
    g = corpus()[name]
    p = dicks_leary_presentation(g)
    lift = {}
    for u, v in g.edges():
        a, b = g.labels[u], g.labels[v]
        lift[f"{a}-{b}"] = ((a, 1), (b, -1))
    for k, r in enumerate(p.relators):
        word = [x for s, e in r for x in (lift[s] if e == 1 else inverse(lift[s]))]
        if k % 2 == 0:
            assert free_reduce(word) == ()
        sums = Counter()
        for s, e in word:
            sums[s] += e
        assert not any(sums.values())


def test_triangle_reduction():
    g = complete(3)
    p = dicks_leary_presentation(g)
    assert (len(p.generators), len(p.relators)) == (3, 2)
    q = spanning_tree_reduction(p, g)
    assert len(q.generators) == 2 and len(q.relators) == 1
    x, y = q.generators
    assert cyclic_key(q.relators[0]) == cyclic_key(commutator(x, y))


def test_square_disk0_star_tree_gives_square_raag(disk0):
    c = disk0.index("c")
    q = spanning_tree_reduction(dicks_leary_presentation(disk0), disk0, star_tree(disk0, c))
    assert len(q.generators) == 4
    assert all(len(cyclic_reduce(r)) == 4 for r in q.relators)
    assert cone_raag_check(find_cone_vertex(disk0))


def test_disconnected_rejected():
    with pytest.raises(DisconnectedComplex):
        dicks_leary_presentation(disjoint_union(path(1), path(1)))


def test_tree_must_span(disk0):
    with pytest.raises(ValueError):
        spanning_tree_reduction(dicks_leary_presentation(disk0), disk0, [(0, 1)])


CONES = [fan(n) for n in range(2, 10)] + [wheel(n) for n in range(3, 10)]


@pytest.mark.parametrize("g", CONES, ids=lambda g: f"{len(g)}v{g.edge_count}e")
def test_cone_raag_fans_wheels(g):
    split = find_cone_vertex(g)
    assert split is not None and cone_raag_check(split)


@given(small_graphs(max_n=9, min_n=1))
@settings(max_examples=60, deadline=None)
def test_cone_raag_random_bases(base):
    g = join(point("apex"), base)
    assert cone_raag_check(find_cone_vertex(g))


def test_cone_raag_check_rejects_wrong_split(disk0):
    split = find_cone_vertex(disk0)
    wrong = type(split)(split.graph, split.apex, split.base_vertices, cycle(4).relabel(
        dict(zip(cycle(4).labels, ["a", "e", "b", "d"]))))
    assert not cone_raag_check(wrong)


@pytest.mark.parametrize("name", sorted(connected_corpus()))
def test_abelian_rank_through_reduction(name):
    g = corpus()[name]
    p = dicks_leary_presentation(g)
    hom = homology_gate(build_flag_complex(g))
    rank = abelian_rank(p)
    assert rank == abelian_rank_sympy(p)
    assert rank == hom.h1_rank + len(g) - 1
    if hom.h1_trivial:
        assert rank == len(g) - 1
        for tree in (bfs_tree(g), bfs_tree(g, len(g) - 1)):
            q = spanning_tree_reduction(p, g, tree)
            assert abelian_rank(q) == len(g) - 1


@given(small_graphs(max_n=7, min_n=1))
@settings(max_examples=60, deadline=None)
def test_abelian_rank_identity_random(g):
    if not g.is_connected():
        return
    p = dicks_leary_presentation(g)
    h = homology_gate(build_flag_complex(g))
    assert abelian_rank(p) == h.h1_rank + len(g) - 1


def test_raag_presentation():
    p = raag_presentation(path(2))
    assert len(p.generators) == 3 and len(p.relators) == 2


def test_export_formats():
    p = spanning_tree_reduction(dicks_leary_presentation(complete(3)), complete(3))
    text = export(p, "plain")
    assert text.startswith("< v1-v2, v1-v3 | ") and text.endswith(" >")
    assert parse_presentation_json(export(p, "json")) == p
    assert export(Presentation(("a",), ()), "plain") == "< a | >"
    with pytest.raises(ValueError):
        export(p, "latex")


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("a",), ((("b", 1),),))
    with pytest.raises(ValueError):
        Presentation(("a",), ((("a", 1), ("a", -1)),))
