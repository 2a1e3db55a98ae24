"""Spherical nilpotent orbits in complex simple Lie algebras, in exact arithmetic."""

from .catalog import (
    SliceDescriptor,
    SphericalOrbitRecord,
    enumerate_spherical,
    jordan_type,
    lookup,
    minimal_orbit,
    slice_roots,
)
from .grading import (
    CharacteristicElement,
    GradedDecomposition,
    WeightedDiagram,
    characteristic_element,
    graded_decomposition,
    height,
    is_height_spherical,
    orbit_dimension,
    weighted_diagram_of,
)
from .levi import LeviDescriptor, cartan_type_of, classify_levi, subsystem_base, zero_subsystem
from .mfclass import ActionFamily, ModuleFingerprint, classify_action, module_fingerprint
from .report import AnalysisReport, analyze
from .rootsys import LieTypeSpec, Root, RootSystem, build_root_system, is_root, parse_root, root_in_simple_basis

__version__ = "0.1.0"

__all__ = [
    "ActionFamily",
    "AnalysisReport",
    "CharacteristicElement",
    "GradedDecomposition",
    "LeviDescriptor",
    "LieTypeSpec",
    "ModuleFingerprint",
    "Root",
    "RootSystem",
    "SliceDescriptor",
    "SphericalOrbitRecord",
    "WeightedDiagram",
    "analyze",
    "build_root_system",
    "cartan_type_of",
    "characteristic_element",
    "classify_action",
    "classify_levi",
    "enumerate_spherical",
    "graded_decomposition",
    "height",
    "is_height_spherical",
    "is_root",
    "jordan_type",
    "lookup",
    "minimal_orbit",
    "module_fingerprint",
    "orbit_dimension",
    "parse_root",
    "root_in_simple_basis",
    "slice_roots",
    "subsystem_base",
    "weighted_diagram_of",
    "zero_subsystem",
]
