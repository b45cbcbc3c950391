"""Ground truth that owes nothing to the closed forms.

``leibniz_log_deriv`` applies the product rule to ``P_n(z) ln(z ± 1)``
exactly. ``numeric_oracle`` differentiates the same function numerically:
central differences with Richardson extrapolation, with the function
itself evaluated by mpmath at elevated precision so that rounding in the
difference quotients stays far below the truncation error.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import mpmath

from .assoc import LogFreePart, Sign
from .exact import binomial, factorial
from .logderiv import DomainError, LogDerivExpr
from .polys import Poly, legendre_deriv

__all__ = ["leibniz_log_deriv", "numeric_oracle", "NumericOracleError"]


class NumericOracleError(ArithmeticError):
    pass


def leibniz_log_deriv(n: int, m: int, sign: Sign = Sign.PLUS) -> LogDerivExpr:
    """Exact ``d^m [P_n ln(z + s)]`` by the Leibniz rule.

    With ``d^j ln(z+s) = (-1)^(j-1) (j-1)! / (z+s)^j`` the non-log part is
    ``sum_{j=1..m} C(m,j) (-1)^(j-1) (j-1)! (z+s)^(m-j) d^(m-j)P_n`` over
    ``(z+s)^m``.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    sign = Sign(sign)
    base = Poly([Fraction(int(sign)), Fraction(1)])
    num = Poly()
    for j in range(1, m + 1):
        c = binomial(m, j) * (-1) ** (j - 1) * factorial(j - 1)
        num = num + (base ** (m - j) * legendre_deriv(n, m - j)).scale(Fraction(c))
    return LogDerivExpr(sign, n, m, legendre_deriv(n, m), LogFreePart.build(Poly(), sign, m, num))


def _stencil(f, z, m, h):
    # m-th central difference, error O(h^2) in even powers
    acc = 0
    for j in range(m + 1):
        acc += (-1) ** j * math.comb(m, j) * f(z + (mpmath.mpf(m) / 2 - j) * h)
    return acc / h**m


def numeric_oracle(
    n: int,
    m: int,
    sign: Sign,
    z,
    *,
    base_step: float = 1e-2,
    levels: int = 3,
    dps: int = 40,
) -> complex:
    """Numerical ``d^m [P_n(z) Log(z + s)]`` at an off-cut point.

    The base step is ``base_step * max(1, |z|)``; each of the ``levels``
    Richardson passes halves it and removes the next even power of ``h``.
    The point must be farther than ``10 h`` from the cut ``(-inf, 1]`` and
    from the pole ``z = -s``.
    """
    z = complex(z)
    s = int(Sign(sign))
    h = base_step * max(1.0, abs(z))
    reach = 10 * h
    dist_cut = abs(z.imag) if z.real <= 1 else abs(z - 1)
    if dist_cut <= reach or abs(z + s) <= reach:
        raise DomainError(f"z = {z} is within {reach:g} of the cut or pole")
    if h * 2.0**-levels == 0.0:
        raise NumericOracleError("step underflow")

    with mpmath.workdps(dps):
        zz = mpmath.mpc(z.real, z.imag)

        def f(w):
            return mpmath.legendre(n, w) * mpmath.log(w + s)

        table = [_stencil(f, zz, m, mpmath.mpf(h) / 2**i) for i in range(levels + 1)]
        for lvl in range(1, levels + 1):
            factor = mpmath.mpf(4) ** lvl
            table = [(factor * table[i + 1] - table[i]) / (factor - 1) for i in range(len(table) - 1)]
        out = complex(table[0])
    if not (cmath.isfinite(out)):
        raise NumericOracleError(f"non-finite derivative estimate {out} at z = {z}")
    return out
