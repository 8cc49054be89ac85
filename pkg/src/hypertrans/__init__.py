"""Transmission of uniform unicyclic hypergraphs: computation, families and extremal checks."""

from .core import (
    DistanceMatrix,
    Hypergraph,
    StructureClass,
    all_pairs,
    average_distance,
    build,
    classify,
    components,
    degree,
    delete_edge,
    delete_vertex,
    distances_from,
    incident_edges,
    is_connected,
    sigma_between,
    sigma_subset,
    sigma_vertex,
    transmission,
)
from .enumeration import (
    are_isomorphic,
    canonical_form,
    canonical_key,
    enumerate_unicyclic,
    enumerate_unicyclic_bruteforce,
    random_unicyclic,
)
from .families import (
    FamilySpec,
    attach_pendant_path,
    cg_star,
    g_u,
    g_uv,
    graft_at_pendant_edge,
    hyperstar,
    lollipop_graph,
    loose_cycle,
    loose_path,
    tilde_c2,
    triangle_star_graph,
)

__version__ = "0.1.0"
