"""Quiver representations over F_p, vertex-split recollements and ICE-closed subcategories."""

from ._qrec import (
    BoundExceeded,
    ContractViolation,
    Error,
    HypothesisFailed,
    Inconclusive,
    ParseError,
    Quiver,
    Recollement,
    Rep,
    SplitContext,
    Subcat,
    Universe,
    UniverseIncomplete,
    all_indecomposables,
    decompose,
    direct_sum,
    enumerate_subcats,
    euler_pairing,
    ext_dim,
    ext_middle_terms,
    hom_dim,
    is_brick,
    is_isomorphic,
    load_quiver,
    load_split,
    run_cli,
)

__all__ = [name for name in dir() if not name.startswith("_")]
