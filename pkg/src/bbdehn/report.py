"""Deterministic JSON reports for one graph."""

from __future__ import annotations

import time

from .classify import classify
from .disk import DiskCertificate, interior_dimension, recognize_disk
from .flag import HomologySizeError, build_flag_complex, euler_characteristic, homology_gate
from .graph import Graph
from .structure import (
    DEFAULT_SUBDISK_CAP,
    fan_wheel_tree_decomposition,
    find_cone_vertex,
    join_factorization,
    recognize_suspension_of_path,
)

SCHEMA = "1"


def build_report(g: Graph, source: str | None = None, subdisk_cap: int = DEFAULT_SUBDISK_CAP,
                 timing: bool = False) -> dict:
    t0 = time.perf_counter()
    c = build_flag_complex(g)
    try:
        h = homology_gate(c)
        homology = {"connected": h.connected, "components": h.components,
                    "h1_rank": h.h1_rank, "h1_torsion": list(h.h1_torsion)}
    except HomologySizeError as exc:
        homology = {"error": str(exc)}
    disk = recognize_disk(c)

    cone = find_cone_vertex(g)
    susp = recognize_suspension_of_path(g)
    structure = {
        "cone": cone.to_json() if cone else None,
        "join_factors": [g.label_set(f) for f in join_factorization(g)],
        "suspension": susp.to_json() if susp else None,
        "fan_wheel_tree": None,
        "subdisk": None,
    }
    if isinstance(disk, DiskCertificate) and interior_dimension(disk) == 0:
        structure["fan_wheel_tree"] = fan_wheel_tree_decomposition(g, disk).to_json()

    verdict = classify(g, subdisk_cap=subdisk_cap)
    if "subdisk" in verdict.certificates:
        structure["subdisk"] = verdict.certificates["subdisk"].to_json()

    report = {
        "schema": SCHEMA,
        "input": {"source": source, "vertices": list(g.labels), "edge_count": g.edge_count},
        "flag_complex": {
            "f_vector": list(c.f_vector),
            "has_k5": c.has_k5,
            "euler_characteristic": euler_characteristic(c),
        },
        "homology": homology,
        "disk": disk.to_json(),
        "structure": structure,
        "verdict": verdict.to_json(),
    }
    if timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report
