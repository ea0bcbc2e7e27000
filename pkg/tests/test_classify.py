import json
import random

import pytest

from bbdehn.classify import HOMOLOGY_ONLY, RULES, DehnVerdict, Status, classify, explain
from bbdehn.graph import Graph, disjoint_union, path, point, suspension
from bbdehn.report import build_report

from conftest import corpus
from oracles import random_disk, random_relabel

EXPECTED = {
    "square_disk0": (Status.EXACT, 2), "square_disk1": (Status.EXACT, 3), "square_disk2": (Status.EXACT, 4),
    "K3": (Status.EXACT, 2), "K4": (Status.EXACT, 2), "K5": (Status.EXACT, 2),
    "C4": (Status.NOT_SC, None), "C5": (Status.NOT_SC, None),
    "P4": (Status.EXACT, 1), "star3": (Status.EXACT, 1), "octahedron": (Status.EXACT, 2),
    "K4-e": (Status.EXACT, 2),
    **{f"fan{n}": (Status.EXACT, 2) for n in range(2, 8)},
    **{f"wheel{n}": (Status.EXACT, 2) for n in range(4, 9)},
    "susp1": (Status.EXACT, 2), "susp2": (Status.EXACT, 2),
    **{f"susp{n}": (Status.EXACT, 3) for n in range(3, 7)},
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_verdicts(name):
    v = classify(corpus()[name])
    assert (v.status, v.exponent) == EXPECTED[name]


def test_square_disk0_rules_agree(disk0):
    v = classify(disk0)
    assert v.rules == ["cone", "triple-join", "disk-dim0"]
    assert set(v.rule_exponents.values()) == {2}


def test_double_bounds(double_k4):
    v = classify(double_k4, subdisk_cap=6)
    assert (v.status, v.lower, v.upper) == (Status.BOUNDS, 3, 4)
    assert HOMOLOGY_ONLY in v.assumptions
    assert v.rules == ["subdisk-retract", "quartic-upper"]


def test_nonsquare_disk_bounds():
    g = suspension(path(3))
    g = Graph.from_edges(g.labels + ("w",), g.edges() + [(g.index("n"), len(g)), (g.index("v1"), len(g))])
    v = classify(g)
    assert (v.status, v.lower, v.upper) == (Status.BOUNDS, 3, 4)
    assert v.rules == ["disk-z2", "subdisk-retract", "quartic-upper"]
    assert not v.assumptions


def test_gates():
    v = classify(disjoint_union(path(1), path(1)))
    assert v.status is Status.NOT_FG and v.rules == ["gate-connected"]
    assert classify(point()).key == (Status.EXACT, 1, None, None)


def test_verdict_invariants():
    with pytest.raises(ValueError):
        DehnVerdict(Status.EXACT, exponent=5)
    with pytest.raises(ValueError):
        DehnVerdict(Status.BOUNDS, lower=4, upper=3)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_explain_mentions_every_rule(name):
    v = classify(corpus()[name], subdisk_cap=6)
    text = explain(v)
    for r in v.rules:
        assert f"[{r}]" in text and RULES[r] in text


@pytest.mark.parametrize("seed", range(25))
def test_random_disks_classified(seed):
    rng = random.Random(seed)
    g = random_disk(rng, rng.randrange(1, 25))
    v = classify(g, subdisk_cap=8)
    assert v.status in (Status.EXACT, Status.BOUNDS)
    assert classify(random_relabel(g, rng), subdisk_cap=8).key == v.key


def test_report_deterministic(disk2):
    a = json.dumps(build_report(disk2, "x"), indent=2)
    b = json.dumps(build_report(disk2, "x"), indent=2)
    assert a == b
    r = json.loads(a)
    assert r["verdict"]["exponent"] == 4
    assert r["disk"]["dim_I"] == 2
    assert "timing" not in r
    assert "timing" in build_report(disk2, timing=True)
