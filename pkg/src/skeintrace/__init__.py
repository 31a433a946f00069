"""Exact quantum traces of skeins on punctured surfaces, Chebyshev threading and Frobenius checks."""

from .cheb import (  # noqa: F401
    FIRST, SECOND, IntPolynomial, SignState, cheb_poly, quantum_binom, quantum_factorial, quantum_int,
)
from .errors import *  # noqa: F401,F403
from .jw import jw_biangle_trace, jw_expand, jw_triangle_trace  # noqa: F401
from .scalar import (  # noqa: F401
    GENERIC_CONTEXT, Scalar, ScalarContext, choose_modulus, root_context, specialize,
)
from .statesum import trace, trace_embedded, trace_simple  # noqa: F401
from .surface import Triangulation, build_curve, cable, fixture, load_surface, sigma_matrix  # noqa: F401
from .thread import (  # noqa: F401
    thread_jw, thread_S, thread_T_embedded, thread_T_root, threaded_trace,
    verify_frobenius, verify_identities,
)
from .torus import TorusContext, TorusElement, commutes, eval_poly_at, frobenius, weyl_product  # noqa: F401

__version__ = "0.1.0"
