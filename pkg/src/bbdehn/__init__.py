"""Dehn functions of Bestvina-Brady groups read off their defining graphs."""

from importlib import resources

from .classify import DehnVerdict, Status, classify, explain
from .disk import (
    DiskCertificate,
    DiskRejection,
    RejectReason,
    boundary_is_square,
    interior_dimension,
    recognize_disk,
    vertex_link,
)
from .flag import (
    HomologyGate,
    SimplicialComplex,
    build_flag_complex,
    contains_k4,
    euler_characteristic,
    homology_gate,
)
from .graph import (
    Graph,
    complement_components,
    complete,
    cycle,
    empty_graph,
    fan,
    induced_subgraph,
    join,
    parse_graph,
    path,
    point,
    read_graph,
    suspension,
    wheel,
)
from .canonical import canonical_label

__version__ = "0.1.0"


def example_graph(name: str) -> Graph:
    """One of the bundled graphs: square_disk0, square_disk1, square_disk2, double_k4."""
    text = resources.files(__package__).joinpath("data", f"{name}.graph").read_text(encoding="utf-8")
    return parse_graph(text)
