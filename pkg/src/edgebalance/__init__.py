"""Edge quasi-lambda-distance-balanced graphs: exact counts, classes, constructions."""

from .classify import (
    BalanceReport,
    classify,
    eqdb_lambda,
    format_ratio,
    is_edb,
    is_sedb,
    nedb_gamma,
    nqdb_params,
    nqedb_params,
    qdb_lambda,
    report_document,
    sqedb_lambda,
)
from .constructions import cartesian_product, lexicographic_product, square_replacement, subdivision
from .graph import (
    DistanceOracle,
    FamilySpec,
    Graph,
    all_pairs_distances,
    bipartition,
    build_graph,
    diameter,
    generate,
)
from .graphio import parse_graph, serialize_graph
from .metrics import (
    DistancePartition,
    EdgeBalance,
    VertexBalance,
    distance_partition,
    edge_balance,
    edge_szeged_index,
    edge_to_edge_distance,
    szeged_index,
    vertex_balance,
    vertex_to_edge_distance,
)

__version__ = "0.1.0"
