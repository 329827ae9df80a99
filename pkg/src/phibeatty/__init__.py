"""Exact integer arithmetic for the golden-ratio Beatty sequence.

The package computes floor(phi * x) and its relatives without any floating
point, decides the induced order on fractional parts exactly, locates
fractional-part extrema over integer intervals through Fibonacci
decompositions, evaluates and decides a bounded formula language over the
structure, and ships audit suites that sweep every structural law at desk
scale.
"""

from .checker import (
    CheckReport,
    CheckSpec,
    check_all,
    check_basic_axioms,
    check_constrained_extrema,
    check_extrema,
    check_fib_lemmas,
    check_order_and_density,
)
from .errors import (
    BoxShapeError,
    DomainError,
    EnumerationBudgetError,
    FormulaSyntaxError,
    UnboundVariableError,
)
from .extrema import (
    BRUTE_WIDTH,
    ExtremumKind,
    ExtremumMethod,
    ExtremumResult,
    Interval,
    arg_max_frac,
    arg_min_frac,
    brute_arg_max_frac,
    brute_arg_min_frac,
    constrained_max,
    constrained_min,
    exists_in_box,
    extremum,
    fast_argmax_positive,
    fast_argmin_positive,
)
from .fib import (
    FibTable,
    f_add,
    f_add_paper_literal,
    fib,
    fibfloor,
    g_func,
    next_even_fib,
    next_odd_fib,
    zeckendorf,
)
from .formula import (
    ENUMERATION_BUDGET,
    decide,
    decide_box,
    evaluate,
    free_variables,
    parse,
    render,
)
from .kernel import (
    Ordering,
    Surd,
    beatty_f,
    f_inverse,
    fbar,
    fbar_inverse,
    frac_compare,
    isqrt,
    kronecker_witness,
    refine,
    star_less,
    surd_sign,
    surd_sign_pq,
)

__version__ = "0.1.0"
