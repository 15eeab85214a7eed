"""Logarithmic derivations and forms of central hyperplane arrangements.

Exact degree-by-degree computation of the modules D^p(A) and Omega^p(A), their
Hilbert series and Betti tables, freeness certificates, and the Chern-class
identities that tie them to the intersection lattice.
"""

from .arrangement import (
    Arrangement,
    ArrangementError,
    boolean,
    braid,
    characteristic_poly,
    edelman_reiner,
    essentialize,
    generic,
    intersection_lattice,
    localize,
    make_arrangement,
    nlf_demo,
    parse_family,
    poincare_poly,
)
from .chern import (
    ChernPoly,
    RInput,
    assemble_R,
    chern_from_betti,
    chern_split,
    chi_twist_poly_p3_rank3,
    dual_chern,
    hilbert_poly_from_series,
    limit_at_one,
    remark42_check,
    solomon_terao,
    top_chern_checks,
    verify_main_theorem,
)
from .errors import (
    CutoffTooSmall,
    GenericityViolated,
    HypothesisFailed,
    LimitDoesNotExist,
    ResolutionIncomplete,
)
from .linalg import EXACT, Field
from .logmodules import (
    DER,
    FORM,
    ModuleSelector,
    betti_probe,
    duality_check_free,
    freeness_test,
    graded_dim,
    hilbert_series,
    local_freeness_test,
    minimal_generators,
    wedge_compare,
)
from .resolutions import lebelt_check, lebelt_terms, ziegler_check, ziegler_matrix

__version__ = "0.1.0"
