"""Isomorph-free generation and application of local symmetry-preserving
operations on embedded graphs."""

from .maps import (PlaneGraph, build_from_rotations, canonical_code,
                   automorphism_orbits, read_planar_code, write_planar_code)
from .chambers import (ChamberSystem, apply_decoration,
                       barycentric_subdivision, connectivity_of_chamber_system,
                       extract_original)
from .decorations import (Decoration, connectivity_class, decoration_identity,
                          inflation_rate, mirror, read_deco, swap02,
                          type1_subgraph, validate, write_deco)
from .predecorations import (Predecoration, counters, rate_bounds,
                             validate_predecoration)
from .generate import GenerationTask, canonical_parent, generate
from .complete import complete
from .catalog import lookup, seed
from .oracle import bruteforce_decorations, cross_check
from .pipeline import run_pipeline

__all__ = [
    "PlaneGraph", "build_from_rotations", "canonical_code",
    "automorphism_orbits", "read_planar_code", "write_planar_code",
    "ChamberSystem", "apply_decoration", "barycentric_subdivision",
    "connectivity_of_chamber_system", "extract_original",
    "Decoration", "connectivity_class", "decoration_identity",
    "inflation_rate", "mirror", "read_deco", "swap02", "type1_subgraph",
    "validate", "write_deco",
    "Predecoration", "counters", "rate_bounds", "validate_predecoration",
    "GenerationTask", "canonical_parent", "generate", "complete",
    "lookup", "seed", "bruteforce_decorations", "cross_check",
    "run_pipeline",
]
