"""From finite groups to cubic graphs, cycle double covers, simplicial
surfaces and equilateral embeddings, with a checker for every step."""

from .autgrp import AutResult, Certificate, automorphism_group, certify_isomorphism
from .cdc import (CycleDoubleCover, cdc_from_colouring, family_cdc, is_invariant,
                  verify_cdc)
from .construct import (cayley_graph, frucht_graph, frucht_lift, gamma_cn, gamma_dn,
                        orbital_graph)
from .cubicgraph import (CubicGraph, EdgeColouring, contract_three_cycles, cycle_triplet,
                         find_tait_colouring, from_quadratic_form, structural_report)
from .embed import (FamilyParams, build_x_family, build_y_family, embedding_symmetries,
                    k5_obstruction, planar_family_layout, tutte_embedding, valid_twists,
                    verify_unit_edges)
from .errors import SymsurfError
from .permgroup import (PermGroup, Permutation, classify_group, cosets, enumerate_elements,
                        left_regular_representation, parse_cycles, print_cycles)
from .surface import (SimplicialSurface, VertexCounter, euler_characteristic, face_graph,
                      is_vertex_faithful, predicted_vertex_counter_frucht,
                      surface_automorphisms, surface_from_cdc, validate_surface,
                      vertex_counter, vertex_graph)

__version__ = "0.1.0"

__all__ = [
    "AutResult", "Certificate", "automorphism_group", "certify_isomorphism",
    "CycleDoubleCover", "cdc_from_colouring", "family_cdc", "is_invariant", "verify_cdc",
    "cayley_graph", "frucht_graph", "frucht_lift", "gamma_cn", "gamma_dn", "orbital_graph",
    "CubicGraph", "EdgeColouring", "contract_three_cycles", "cycle_triplet",
    "find_tait_colouring", "from_quadratic_form", "structural_report",
    "FamilyParams", "build_x_family", "build_y_family", "embedding_symmetries",
    "k5_obstruction", "planar_family_layout", "tutte_embedding", "valid_twists",
    "verify_unit_edges", "SymsurfError",
    "PermGroup", "Permutation", "classify_group", "cosets", "enumerate_elements",
    "left_regular_representation", "parse_cycles", "print_cycles",
    "SimplicialSurface", "VertexCounter", "euler_characteristic", "face_graph",
    "is_vertex_faithful", "predicted_vertex_counter_frucht", "surface_automorphisms",
    "surface_from_cdc", "validate_surface", "vertex_counter", "vertex_graph",
]
