"""Braid words, knot invariants of their closures, and hyperbolicity checks for twisted torus families."""

from .braid import (
    BraidWord,
    Permutation,
    closure_component_count,
    closure_is_knot,
    compose,
    format_braid,
    inverse,
    is_positive,
    parse_braid,
    permutation,
)
from .burau import alexander, torus_alexander
from .classifier import (
    Justification,
    Kind,
    Verdict,
    check_full_twist_criterion,
    check_theorem1,
    classify,
    classify_factored,
    classify_tlink,
    classify_twisted_torus,
    small_factor_pattern,
)
from .config import Caps, default_caps
from .errors import (
    BraidForgeError,
    InconsistentEvidenceError,
    InvalidSpecError,
    NotAKnotError,
    ParseError,
    ResourceCapExceeded,
    StepBudgetExceeded,
    StrandMismatchError,
)
from .families import (
    FactoredBraid,
    HalfTwistSpec,
    TLinkSpec,
    TorusBraidFactor,
    TwistedTorusSpec,
    expand,
    full_twist,
    half_twist_torus_construction,
    tlink_braid,
    torus_braid,
    twisted_torus_braid,
)
from .hecke import homfly
from .invariants import (
    BraidIndexBounds,
    bennequin_genus,
    braid_index_bounds,
    franks_williams_index,
    mfw_lower_bound,
    torus_knot_match,
)
from .laurent import LaurentPoly1, LaurentPoly2
from .markov import cycle_shift, destabilize, greedy_destabilize, stabilize
from .parsing import format_spec, parse_spec
from .report import full_report
from .skein import homfly_skein_oracle
from .wordproblem import braid_equal, equality_witness, handle_reduce, is_trivial
