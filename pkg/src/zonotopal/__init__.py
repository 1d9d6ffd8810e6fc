"""Exact hierarchical zonotopal power ideals, their kernels and Hilbert series."""

from .activity import (
    basis_polys,
    enumerate_bases,
    external_activity,
    gamma_set,
    hrx_order,
    internal_activity,
    semi_internal_bases,
)
from .errors import KBelowMinusOne, KernelCapExceeded, MissingHyperplanes, ZonotopalError
from .graphs import GraphInput, chromatic_polynomial, flow_polynomial, graph_to_config
from .hilbert import (
    TuttePoly,
    cox_semiexternal_hilb,
    cox_semiinternal_hilb,
    dim_semi_external,
    hilb_activity,
    hilb_kernel,
    hilb_recursive,
    hilb_semi_internal,
    hilb_subset,
    noncontainment_matrix,
    tutte,
)
from .ideals import (
    external_decomposition,
    i_generators,
    ideal_component,
    iprime_generators,
    kernel,
    p_space,
    s_set,
    semi_internal_kernel_check,
    verify_exact_sequence,
    verify_main_theorem,
)
from .io import parse_matrix, parse_upperset
from .matroid import (
    UpperSet,
    VectorConfig,
    above,
    central,
    chi,
    closure,
    contract,
    defining_normal,
    delete,
    expand_multiplicity,
    flats,
    full_lattice,
    m_of,
    maximal_missing_flats,
    rank_of,
    upper_set,
)
from .poly import MPoly, GradedBasis, apply_diff, pairing, span_reduce
from .series import HilbSeries

__version__ = "0.1.0"

__all__ = [
    "above",
    "apply_diff",
    "basis_polys",
    "central",
    "chi",
    "chromatic_polynomial",
    "closure",
    "contract",
    "cox_semiexternal_hilb",
    "cox_semiinternal_hilb",
    "defining_normal",
    "delete",
    "dim_semi_external",
    "enumerate_bases",
    "expand_multiplicity",
    "external_activity",
    "external_decomposition",
    "flats",
    "flow_polynomial",
    "full_lattice",
    "gamma_set",
    "GradedBasis",
    "graph_to_config",
    "GraphInput",
    "hilb_activity",
    "hilb_kernel",
    "hilb_recursive",
    "hilb_semi_internal",
    "hilb_subset",
    "HilbSeries",
    "hrx_order",
    "i_generators",
    "ideal_component",
    "internal_activity",
    "iprime_generators",
    "KBelowMinusOne",
    "kernel",
    "KernelCapExceeded",
    "m_of",
    "maximal_missing_flats",
    "MissingHyperplanes",
    "MPoly",
    "noncontainment_matrix",
    "p_space",
    "pairing",
    "parse_matrix",
    "parse_upperset",
    "rank_of",
    "s_set",
    "semi_internal_bases",
    "semi_internal_kernel_check",
    "span_reduce",
    "tutte",
    "TuttePoly",
    "upper_set",
    "UpperSet",
    "VectorConfig",
    "verify_exact_sequence",
    "verify_main_theorem",
    "ZonotopalError",
]
