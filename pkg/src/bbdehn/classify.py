"""Decide the Dehn function of the Bestvina-Brady group on a graph.

Rules run in a fixed order and the first applicable one sets the verdict.
The later, cheaper-to-state rules still run so the report can show every
certificate that applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .disk import DiskCertificate, boundary_is_square, interior_dimension, recognize_disk
from .flag import HomologyGate, HomologySizeError, build_flag_complex, homology_gate
from .graph import Graph
from .structure import (
    DEFAULT_SUBDISK_CAP,
    find_cone_vertex,
    fan_wheel_tree_decomposition,
    join_factorization,
    recognize_suspension_of_path,
    search_induced_square_subdisk,
)

HOMOLOGY_ONLY = "simple_connectivity_homology_only"

# rule id -> human description used by explain()
RULES = {
    "trivial-group": "at most one vertex: the kernel is trivial",
    "gate-connected": "flag complex disconnected: the kernel is not finitely generated",
    "gate-h1": "H1 of the flag complex is nonzero: no finite presentation from the flag complex",
    "cone": "cone graph: the kernel is the right-angled Artin group on the base",
    "free-group": "flag complex is a tree: the Dicks-Leary presentation has no relators",
    "triple-join": "join of at least three graphs (Carter-Forester): quadratic",
    "disk-dim0": "triangulated disk with interior dimension 0: tree of fans and wheels over Z, CAT(0)",
    "square-disk": "triangulated disk with square boundary: exponent is interior dimension + 2",
    "disk-z2": "triangulated disk: the kernel contains Z^2, so at least quadratic",
    "subdisk-retract": "induced square-boundary subdisk of interior dimension d retracts: at least n^(d+2)",
    "quartic-upper": "Dison: every Bestvina-Brady group is at most quartic",
}


class Status(str, Enum):
    EXACT = "exact"
    BOUNDS = "bounds"
    NOT_FG = "not_fg"
    NOT_SC = "not_sc"
    UNKNOWN = "unknown"


@dataclass
class DehnVerdict:
    status: Status
    exponent: int | None = None
    lower: int | None = None
    upper: int | None = None
    rules: list[str] = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    assumptions: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    rule_exponents: dict[str, int] = field(default_factory=dict)
    graph: Graph | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.status is Status.EXACT and not (self.exponent is not None and 1 <= self.exponent <= 4):
            raise ValueError("exact verdicts need an exponent in 1..4")
        if self.status is Status.BOUNDS and not (self.lower is not None and self.upper is not None
                                                 and self.lower <= self.upper):
            raise ValueError("bounds verdicts need lower <= upper")

    @property
    def key(self) -> tuple:
        return (self.status, self.exponent, self.lower, self.upper)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "exponent": self.exponent,
            "lower": self.lower,
            "upper": self.upper,
            "rules": list(self.rules),
            "assumptions": list(self.assumptions),
            "notes": list(self.notes),
            "certificates": {k: _cert_json(self.graph, k, v) for k, v in self.certificates.items()},
        }


def _cert_json(g, kind, value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, HomologyGate):
        return {"h1_rank": value.h1_rank, "h1_torsion": list(value.h1_torsion)}
    if kind in ("join_factors", "components"):
        return [g.label_set(part) for part in value]
    return value


def _subdisk_lower(g: Graph, cap: int, dims=(2, 1, 0)):
    """Best ``d + 2`` over square subdisks found, with the witness and search log."""
    log = []
    for d in dims:
        res = search_induced_square_subdisk(g, d, cap)
        log.append({"target_d": d, "found": res.witness is not None, "exhausted": res.exhausted})
        if res.witness is not None:
            return d + 2, res.witness, log
    return None, None, log


def classify(g: Graph, subdisk_cap: int = DEFAULT_SUBDISK_CAP) -> DehnVerdict:
    n = len(g)
    if n <= 1:
        return DehnVerdict(Status.EXACT, exponent=1, rules=["trivial-group"], graph=g,
                           certificates={"vertices": list(g.labels)},
                           notes=["trivial group; reported as linear"])

    comps = g.components()
    if len(comps) > 1:
        return DehnVerdict(Status.NOT_FG, rules=["gate-connected"], graph=g,
                           certificates={"components": comps})

    c = build_flag_complex(g)
    try:
        hom = homology_gate(c)
    except HomologySizeError as exc:
        return DehnVerdict(Status.UNKNOWN, graph=g, notes=[str(exc)])
    if not hom.h1_trivial:
        return DehnVerdict(Status.NOT_SC, rules=["gate-h1"], graph=g, certificates={"homology": hom})

    certs: dict = {"homology": hom}
    applicable: list[tuple[str, int]] = []

    cone = find_cone_vertex(g)
    if cone is not None:
        certs["cone"] = cone
        applicable.append(("cone", 2 if cone.base.edge_count else 1))
    if not c.triangles:
        applicable.append(("free-group", 1))

    factors = join_factorization(g)
    certs["join_factors"] = factors
    if len(factors) >= 3:
        applicable.append(("triple-join", 2))

    disk = recognize_disk(c)
    certs["disk"] = disk
    if disk:
        d = interior_dimension(disk)
        if d == 0:
            certs["fan_wheel_tree"] = fan_wheel_tree_decomposition(g, disk)
            applicable.append(("disk-dim0", 2))
        elif boundary_is_square(disk):
            if d == 1:
                certs["suspension"] = recognize_suspension_of_path(g)
            applicable.append(("square-disk", d + 2))

    rule_exponents = dict(applicable)
    rules = [r for r, _ in applicable]
    notes = []
    if applicable:
        rule, exp = applicable[0]
        if exp == 1:
            notes.append("free or cyclic kernel: hyperbolic, reported as linear")
        return DehnVerdict(Status.EXACT, exponent=exp, rules=rules, certificates=certs,
                           rule_exponents=rule_exponents, notes=notes, graph=g)

    if disk:
        # disk, interior dimension 1 or 2, boundary not a square
        lower, witness, log = _subdisk_lower(g, subdisk_cap, dims=(2, 1))
        certs["subdisk_search"] = {"cap": subdisk_cap, "log": log}
        rules = ["disk-z2"]
        if witness is not None and lower > 2:
            certs["subdisk"] = witness
            rules.append("subdisk-retract")
        else:
            lower = 2
        rules.append("quartic-upper")
        notes.append("boundary is not a square: only bounds are known")
        return DehnVerdict(Status.BOUNDS, lower=lower, upper=4, rules=rules, certificates=certs,
                           notes=notes, graph=g)

    lower, witness, log = _subdisk_lower(g, subdisk_cap)
    certs["subdisk_search"] = {"cap": subdisk_cap, "log": log}
    rules = []
    if witness is not None:
        certs["subdisk"] = witness
        rules.append("subdisk-retract")
    else:
        lower = 1
    rules.append("quartic-upper")
    return DehnVerdict(Status.BOUNDS, lower=lower, upper=4, rules=rules, certificates=certs,
                       assumptions=[HOMOLOGY_ONLY], graph=g)


def explain(v: DehnVerdict) -> str:
    g = v.graph
    lab = (lambda vs: ",".join(g.label_set(vs))) if g is not None else (lambda vs: ",".join(map(str, vs)))
    if v.status is Status.EXACT:
        head = f"Dehn function ~ n^{v.exponent}"
    elif v.status is Status.BOUNDS:
        head = f"n^{v.lower} <= Dehn function <= n^{v.upper}"
    elif v.status is Status.NOT_FG:
        head = "kernel is not finitely generated"
    elif v.status is Status.NOT_SC:
        head = "flag complex is not simply connected (H1 nonzero)"
    else:
        head = "unknown"
    lines = [head]
    for r in v.rules:
        lines.append(f"  [{r}] {RULES[r]}")
    certs = v.certificates
    if "components" in certs:
        lines.append("  components: " + " | ".join(lab(c) for c in certs["components"]))
    if "homology" in certs and v.status is Status.NOT_SC:
        h = certs["homology"]
        lines.append(f"  H1 rank {h.h1_rank}, torsion {list(h.h1_torsion)}")
    if "cone" in certs:
        cone = certs["cone"]
        lines.append(f"  cone apex {g.labels[cone.apex]} over {lab(cone.base_vertices)}")
    if "join_factors" in certs and len(certs["join_factors"]) >= 3:
        lines.append("  join factors: " + " * ".join("{" + lab(f) + "}" for f in certs["join_factors"]))
    disk = certs.get("disk")
    if isinstance(disk, DiskCertificate):
        shape = "square boundary" if boundary_is_square(disk) else f"boundary of length {len(disk.boundary_cycle)}"
        lines.append(f"  disk: {shape}, dim_I = {disk.dim_I}, boundary "
                     + "-".join(g.labels[x] for x in disk.boundary_cycle))
    elif disk is not None:
        lines.append(f"  not a disk: {disk.reason.value} ({disk.detail})")
    if certs.get("suspension") is not None:
        s = certs["suspension"]
        lines.append(f"  suspension of path length {s.path_length}, apexes {lab(s.apexes)}")
    if "fan_wheel_tree" in certs:
        t = certs["fan_wheel_tree"]
        kinds = ", ".join(f"{p.kind}({p.size})" for p in t.nodes)
        lines.append(f"  fan/wheel tree: {kinds}; {len(t.cut_edges)} cut edges")
    if "subdisk" in certs:
        w = certs["subdisk"]
        lines.append(f"  subdisk witness on {{{lab(w.vertex_set)}}} with interior dimension {w.d}")
    for a in v.assumptions:
        lines.append(f"  assumption: {a}")
    for note in v.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)
