"""Signed BW cubed complexes: the orbit-count test for alternating link
exteriors, the complexes C2/C3, and conversion to and from PD codes."""

from .complexes import QuotientComplex, boundary_complex, build_cubed_complex, build_squared_complex
from .diagram import (
    DiagramModel,
    PDCode,
    PDCodeError,
    checkerboard_coloring,
    component_count,
    extract_sbw,
    parse_pd,
    reconstruct_diagram,
    trace_faces,
)
from .homology import GroupPresentation, first_homology, fundamental_group_presentation
from .sbw import (
    CornerRef,
    CriterionReport,
    EdgeRef,
    InvalidSpecError,
    OrbitDecomposition,
    SbwSpec,
    canonical_form,
    criterion_check,
    format_spec,
    induced_edge_bijection,
    isomorphic,
    orbit_decomposition,
    parse_spec,
)
from .surface import SurfaceModel, build_surface

__version__ = "0.1.0"
