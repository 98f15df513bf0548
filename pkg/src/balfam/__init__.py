"""Balanced splittings of set families: exact finders, oracles and sweeps."""

from .balancer import (
    BalanceCertificate,
    build_T,
    extended_incidence,
    find_balanced_general,
    find_balanced_uniform,
    find_union_balanced,
    in_subspace_V,
    sign_split,
    verify_certificate,
)
from .family import (
    SetFamily,
    aggregate,
    format_family,
    gen_nonuniform_sharp,
    gen_uniform_sharp,
    is_sperner,
    is_uniform,
    parse_family,
)
from .linalg import RationalMatrix, kernel_dimension, kernel_vector, rank
from .oracle import OracleResult, brute_force_find, is_balanced
from .search import ScanKind, ScanReport, enumerate_antichains, scan_conjecture, scan_theorem

__version__ = "0.1.0"
