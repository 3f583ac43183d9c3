"""Flag-transitive symmetric designs: permutation groups, finite geometry and design checks."""

from .actions import (
    BlockSystem,
    InducedAction,
    class_stabilizer,
    induced_action_on_classes,
    is_2_transitive,
    is_primitive,
    is_transitive,
    minimal_block_system,
    orbit,
    orbits,
)
from .catalog import CATALOG, CatalogEntry, match_catalog
from .checker import ClassificationReport, full_report
from .designfile import DesignFile, DesignFileError, parse_design, read_design, write_design
from .designs import (
    DesignError,
    IncidenceStructure,
    NotADesign,
    OverlapError,
    TraceError,
    check_overlap_index,
    induced_design,
    is_2design,
    is_flag_transitive,
    normal_orbit_trichotomy,
    overlap_number,
    trace_profile,
)
from .fields import FiniteField, field, prime_power
from .geometry import (
    affine_group,
    ag_lines_design,
    collinear_triples_design,
    noncollinear_triples_design,
    projective_group,
)
from .numtheory import (
    check_eq_rid,
    compute_rho,
    gaussian_binomial,
    lemma_div_solutions,
    pillai_solutions,
    primitive_part,
)
from .params import (
    hypothesis_gate,
    k0eq2_params,
    lemma_pp_ratio,
    type1_params,
    type2_params,
)
from .perm import (
    Permutation,
    PermutationGroup,
    compose,
    contains,
    group_order,
    perm_from_cycles,
    point_stabilizer,
)

__version__ = "0.1.0"
