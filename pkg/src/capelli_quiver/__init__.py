"""Exact computations with the invariant-operator algebra of a Capelli-type
representation and with the graded quiver windows that model its modules."""

from .algebra import (
    AlgebraError,
    AlgebraSpec,
    OperatorElement,
    ThetaPoly,
    b_polynomial,
    elements_equal,
    make_algebra,
    normalize_mul,
    skew_preset,
)
from .cayley import SparsePoly, apply_diff_op, cross_check_b, pfaffian, verify_cayley
from .dot import window_to_dot
from .linalg import RatMatrix, integer_eigensplit, inverse, is_nilpotent, rank_kernel
from .parser import ParseError, parse_expression
from .window import (
    GradedWindow,
    WindowError,
    apply_operator,
    canonical_degrees,
    change_basis,
    direct_sum,
    extend_window,
    iso_test_mod_c0,
    make_example,
    mod_c0_reduce,
    nonforced_edges,
    nonforced_roots,
    torsion_submodule,
    validate_window,
)
from .windowio import WindowFormatError, load_window, save_window

__version__ = "0.1.0"
