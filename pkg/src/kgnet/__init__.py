"""Networks as graph plus data: temporal quantities, RDF networks and
derived networks from knowledge graphs."""

from .derive import (
    SparseMatrix,
    eval_expression,
    matmul,
    relation_matrix,
    simplify_structure,
    transpose,
)
from .errors import KgnetError
from .keds import parse_keds
from .network import Network, NetworkCollection, from_collection, to_collection, two_mode_matrix
from .pajek import export_pajek, import_pajek
from .rdf import IRI, BlankNode, Literal, Triple, parse_triples
from .rdfnet import (
    RdfNetwork,
    build_rdf_network,
    project_to_network,
    recognize,
    replay,
)
from .semiring import BOOL, COUNT, REAL, Semiring, combine_parallel, combine_sequential
from .temporal import (
    TemporalQuantity,
    time_slice,
    tq_evaluate,
    tq_normalize,
    tq_product,
    tq_sum,
)

__all__ = [
    "BOOL", "COUNT", "REAL", "Semiring", "combine_parallel", "combine_sequential",
    "Network", "NetworkCollection", "from_collection", "to_collection", "two_mode_matrix",
    "TemporalQuantity", "time_slice", "tq_evaluate", "tq_normalize", "tq_product", "tq_sum",
    "IRI", "BlankNode", "Literal", "Triple", "parse_triples",
    "RdfNetwork", "build_rdf_network", "project_to_network", "recognize", "replay",
    "SparseMatrix", "eval_expression", "matmul", "relation_matrix", "simplify_structure",
    "transpose", "parse_keds", "export_pajek", "import_pajek", "KgnetError",
]

__version__ = "0.1.0"
