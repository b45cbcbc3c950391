"""Bromwich polynomials ``R_n``, the non-logarithmic part of the degree
derivative of ``P_nu`` at integer ``nu = n``.

Three closed forms are available; each is assembled with γ-tracked digamma
values and the γ part is required to vanish before it is dropped.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .exact import factorial, psi_int
from .polys import Poly, legendre

__all__ = ["BromwichRep", "bromwich_r", "half_shift_sum"]

HALF = Fraction(1, 2)


class BromwichRep(enum.Enum):
    SCHELKUNOFF_SUM = "schelkunoff"  # psi-weighted sum in powers of (z-1)/2
    PLUS_BASIS = "plus"  # psi differences in powers of (z+1)/2
    LEGENDRE_BASIS = "legendre"  # expansion over P_0..P_n


def half_shift_sum(coeffs, center: int) -> Poly:
    """Expand ``sum_k coeffs[k] * ((z - center)/2)**k`` in the monomial basis."""
    return Poly(coeffs).shift_eval(Fraction(-center, 2), HALF)


def _schelkunoff(n: int) -> Poly:
    terms = [
        psi_int(k + n + 1) * Fraction(factorial(k + n), factorial(k) ** 2 * factorial(n - k))
        for k in range(n + 1)
    ]
    return legendre(n) * (psi_int(n + 1) * -2) + half_shift_sum(terms, 1) * 2


def _plus_basis(n: int) -> Poly:
    terms = [
        (psi_int(k + n + 1) - psi_int(k + 1))
        * Fraction((-1) ** (k + n) * factorial(k + n), factorial(k) ** 2 * factorial(n - k))
        for k in range(n + 1)
    ]
    return half_shift_sum(terms, -1) * 2


def _legendre_basis(n: int) -> Poly:
    out = legendre(n) * ((psi_int(2 * n + 1) - psi_int(n + 1)) * 2)
    for k in range(n):
        c = Fraction(2 * (-1) ** (k + n) * (2 * k + 1), (n - k) * (k + n + 1))
        out = out + legendre(k) * c
    return out


_BUILDERS = {
    BromwichRep.SCHELKUNOFF_SUM: _schelkunoff,
    BromwichRep.PLUS_BASIS: _plus_basis,
    BromwichRep.LEGENDRE_BASIS: _legendre_basis,
}


@lru_cache(maxsize=None)
def bromwich_r(n: int, rep: BromwichRep = BromwichRep.SCHELKUNOFF_SUM) -> Poly:
    """Bromwich polynomial ``R_n(z)`` with plain rational coefficients.

    Raises
    ------
    GammaResidueError
        If the chosen closed form leaves a γ term behind.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _BUILDERS[BromwichRep(rep)](n).strip_gamma()
