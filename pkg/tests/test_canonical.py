import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from bbdehn.canonical import CapExceeded, are_isomorphic, canonical_label, canonical_order
from bbdehn.graph import Graph, complete, empty_graph

from conftest import corpus, small_graphs
from oracles import isomorphic_brute, random_relabel


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges([str(i) for i in range(n)], [p for k, p in enumerate(pairs) if mask >> k & 1])


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_counts_isomorphism_classes(n, classes):
    # numbers of unlabelled graphs on n vertices
    assert len({canonical_label(g) for g in all_graphs(n)}) == classes


@given(small_graphs(max_n=6), small_graphs(max_n=6))
@settings(max_examples=150)
def test_agrees_with_permutation_search(g1, g2):
    assert are_isomorphic(g1, g2) == isomorphic_brute(g1, g2)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_relabel_invariance(name):
    g = corpus()[name]
    rng = random.Random(name)
    for _ in range(5):
        assert canonical_label(random_relabel(g, rng)) == canonical_label(g)


def test_order_is_a_permutation(disk2):
    assert sorted(canonical_order(disk2)) == list(range(len(disk2)))


def test_cap():
    with pytest.raises(CapExceeded):
        canonical_label(complete(5), cap=4)
    assert canonical_label(empty_graph([f"x{i}" for i in range(16)])).startswith("16:")
