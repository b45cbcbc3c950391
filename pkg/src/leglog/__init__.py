"""Exact closed forms for the derivatives of P_n(z) ln(z ± 1)."""

from .assoc import BracketSign, LogFreePart, Sign, WRep, canonical_total_num, neg_order_part, w_nm, w_nm_overflow
from .bromwich import BromwichRep, bromwich_r
from .exact import GammaResidueError, GammaTracked, factorial, harmonic, psi_int
from .logderiv import (
    DomainError,
    LogDerivExpr,
    Rep,
    SignChoice,
    degree_deriv_eval,
    eval_off_cut,
    eval_on_segment,
    log_deriv,
)
from .oracle import leibniz_log_deriv, numeric_oracle
from .polys import Poly, gegenbauer_half, legendre, legendre_deriv

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoised construction (factorials excepted)."""
    from . import assoc, bromwich, logderiv, polys

    for fn in (
        polys.legendre,
        polys.legendre_deriv,
        polys.gegenbauer_half,
        bromwich.bromwich_r,
        assoc.neg_order_part,
        assoc.neg_order_part_reflected,
        assoc.w_nm,
        assoc.w_nm_overflow,
        logderiv.log_deriv,
    ):
        fn.cache_clear()
