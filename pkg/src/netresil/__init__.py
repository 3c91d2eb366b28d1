"""netresil: resilience analysis of undirected networks.

Graph construction and layering, centrality and clustering indices,
discrete power-law degree fitting, seeded synthetic generators, and
parallel/sequential vertex-removal attack simulations.
"""

__version__ = "0.1.0"

from .attack import (
    AttackCurve,
    AttackStrategy,
    CurvePoint,
    attack_sweep,
    curve_csv,
    parallel_attack,
    sequential_attack,
)
from .generators import (
    config_powerlaw,
    dense_two_clan,
    draw_degree_sequence,
    erdos_renyi,
    preferential_attachment,
)
from .graph import (
    Graph,
    IngestionReport,
    ParseError,
    Role,
    aggregate_union,
    egonet,
    egonet_union,
    from_edge_list,
    load_graph,
    overlap_edges,
    read_edge_file,
    read_role_file,
    remove_nodes,
    write_edge_file,
    write_role_file,
)
from .metrics import (
    CcdfPoint,
    CentralityScores,
    DegreeClass,
    NetworkSummary,
    average_path_length,
    betweenness_centrality,
    classify_by_degree,
    closeness_centrality,
    clustering_by_degree,
    connected_component_count,
    degree_ccdf,
    degree_centrality,
    degree_rank,
    diameter,
    largest_component,
    local_clustering,
    summarize,
)
from .powerlaw import PowerLawFit, bootstrap_pvalue, fit_discrete_powerlaw, sample_powerlaw
from .seeds import derive_seed
