"""Closed forms for ``d^m [P_n(z) ln(z ± 1)] / dz^m`` and their evaluation.

Every builder returns a :class:`LogDerivExpr`

    G(z) ln(z + s) + S(z) + T(z) / (z + s)^m,

with ``s = +1`` for ``ln(z+1)`` and ``s = -1`` for ``ln(z-1)``. The six
published forms are available as :class:`Rep` members ``R32`` .. ``R37``;
``ASSEMBLED`` combines the associated companion ``W_n^m`` with the Bromwich
polynomial directly (``ln(z+1)`` family only).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .assoc import (
    BracketSign,
    LogFreePart,
    Sign,
    WRep,
    canonical_total_num,
    neg_order_part,
    neg_order_part_reflected,
    w_nm,
    w_nm_overflow,
)
from .bromwich import BromwichRep, bromwich_r, half_shift_sum
from .exact import factorial, psi_int
from .polys import Poly, derivative_prefactor, gegenbauer_half, legendre, legendre_deriv

__all__ = [
    "SignChoice",
    "Rep",
    "CLOSED_FORM_REPS",
    "DomainError",
    "LogDerivExpr",
    "log_deriv",
    "default_rep",
    "eval_off_cut",
    "eval_boundary",
    "eval_on_segment",
    "degree_deriv_eval",
    "eval_parity_route",
]

SignChoice = Sign


class DomainError(ValueError):
    """Evaluation point outside the domain of the requested operation."""


class Rep(enum.Enum):
    R32 = "r32"
    R33 = "r33"
    R34 = "r34"
    R35 = "r35"
    R36 = "r36"
    R37 = "r37"
    ASSEMBLED = "assembled"


CLOSED_FORM_REPS = (Rep.R32, Rep.R33, Rep.R34, Rep.R35, Rep.R36)


@dataclass(frozen=True)
class LogDerivExpr:
    """``log_coeff(z) * ln(z + sign) + rest(z)``."""

    sign: Sign
    n: int
    m: int
    log_coeff: Poly
    rest: LogFreePart

    def canonical_num(self) -> Poly:
        return canonical_total_num(self.rest)

    def derivative(self) -> LogDerivExpr:
        """Symbolic d/dz; the result has pole order ``m + 1``."""
        log_term = LogFreePart.build(Poly(), self.sign, 1, self.log_coeff)
        rest = (self.rest.derivative() + log_term).raise_order(self.m + 1)
        return LogDerivExpr(self.sign, self.n, self.m + 1, self.log_coeff.derivative(), rest)

    @lru_cache(maxsize=None)
    def _float_parts(self):
        return (
            self.log_coeff.float_coeffs(),
            self.rest.poly.float_coeffs(),
            self.rest.pole_num.float_coeffs(),
        )

    def _eval(self, z: complex, log_value: complex) -> complex:
        g, p, q = self._float_parts()
        val = _horner(p, z)
        if self.rest.pole_order:
            val += _horner(q, z) / (z + int(self.sign)) ** self.rest.pole_order
        return val + _horner(g, z) * log_value

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "sign": self.sign.symbol,
            "log_coeff": _coeff_strings(self.log_coeff),
            "entire": _coeff_strings(self.rest.poly),
            "pole": {
                "center": -int(self.sign),
                "order": self.rest.pole_order,
                "num": _coeff_strings(self.rest.pole_num),
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> LogDerivExpr:
        sign = Sign.PLUS if d["sign"] == "+" else Sign.MINUS
        pole = d["pole"]
        if pole["center"] != -int(sign):
            raise ValueError("pole center inconsistent with sign")
        rest = LogFreePart.build(_parse_coeffs(d["entire"]), sign, pole["order"], _parse_coeffs(pole["num"]))
        return cls(sign, d["n"], d["m"], _parse_coeffs(d["log_coeff"]), rest)


def _coeff_strings(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def _parse_coeffs(items) -> Poly:
    return Poly(Fraction(x) for x in items)


def _horner(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def default_rep(n: int, m: int) -> Rep:
    return Rep.R37 if m > n else Rep.R32


# -- builders. Each returns (log coefficient, entire part, pole numerator)
# with γ-tracked coefficients; the pole sits at z = -s with order m.


def _a_coeff(k, n, m):
    return Fraction(factorial(k + n + m), factorial(k) * factorial(k + m) * factorial(n - m - k))


def _b_coeff(k, n, m):
    return Fraction(factorial(k + n), factorial(k) * factorial(k + m) * factorial(n - k))


def _gegenbauer_log_coeff(n, m):
    return gegenbauer_half(n - m, m).scale(derivative_prefactor(m))


def _sum_form(n, m, s, lead, entire_weight, pole_weight):
    g = _gegenbauer_log_coeff(n, m)
    entire = half_shift_sum(
        [entire_weight(k) * (s**k * _a_coeff(k, n, m)) for k in range(n - m + 1)], s
    ).scale(Fraction(-(s ** (n + m)), 2**m))
    pole = half_shift_sum(
        [pole_weight(k) * (s**k * _b_coeff(k, n, m)) for k in range(n + 1)], s
    ).scale(Fraction(s**n * factorial(n + m), factorial(n - m)))
    return g, g * lead + entire, pole


def _r32(n, m, s, bracket):
    return _sum_form(
        n, m, s,
        psi_int(n + 1) - psi_int(n - m + 1),
        lambda k: psi_int(k + n + m + 1),
        lambda k: psi_int(k + n + 1),
    )


def _r33(n, m, s, bracket):
    return _sum_form(
        n, m, s,
        -(psi_int(n + m + 1) - psi_int(n + 1) * 2 + psi_int(n - m + 1)),
        lambda k: psi_int(k + m + 1),
        lambda k: psi_int(k + m + 1),
    )


def _r34(n, m, s, bracket):
    return _sum_form(
        n, m, s,
        psi_int(n + m + 1) - psi_int(n - m + 1),
        lambda k: psi_int(k + n + m + 1) * 2 - psi_int(k + m + 1),
        lambda k: psi_int(k + n + 1) * 2 - psi_int(k + m + 1),
    )


def _r35(n, m, s, bracket):
    g = _gegenbauer_log_coeff(n, m)
    pole = half_shift_sum(
        [
            Fraction(s**k * factorial(k + n) * factorial(m - k - 1), factorial(k) * factorial(n - k))
            for k in range(m)
        ],
        -s,
    ).scale(-((-s) ** n) * (-1) ** m)
    entire = half_shift_sum(
        [
            (psi_int(k + m + 1) - psi_int(k + 1)) * ((-s) ** k * _a_coeff(k, n, m))
            for k in range(n - m + 1)
        ],
        -s,
    ).scale(Fraction((-s) ** (n + m), 2**m))
    return g, entire, pole


def _neg_order(k, m, s):
    return neg_order_part(k, m) if s == 1 else neg_order_part_reflected(k, m)


def _r36(n, m, s, bracket):
    g = _gegenbauer_log_coeff(n, m)
    entire = g * (psi_int(n + 1) - psi_int(n - m + 1))
    pole = Poly()
    ratio = Fraction(factorial(n + m), factorial(n - m))
    for k in range(m):
        c = ratio * Fraction((-s) ** n * (-1) ** k * (2 * k + 1), (n - k) * (k + n + 1))
        pole = pole + _neg_order(k, m, s).pole_num.scale(c)
    pref = derivative_prefactor(m)
    for k in range(n - m):
        c = Fraction(-((-s) ** (n + m + k)) * (2 * k + 2 * m + 1), (n - m - k) * (k + n + m + 1))
        r = Fraction(factorial(k) * factorial(n + m), factorial(k + 2 * m) * factorial(n - m))
        entire = entire + gegenbauer_half(k, m).scale(pref * c * (1 - int(bracket) * r))
    return g, entire, pole


def _r37(n, m, s, bracket):
    c = (-s) ** n * (-1) ** (m + 1) * factorial(n + m) * factorial(m - n - 1)
    return Poly(), Poly(), _neg_order(n, m, s).pole_num.scale(Fraction(c))


_BUILDERS = {
    Rep.R32: _r32,
    Rep.R33: _r33,
    Rep.R34: _r34,
    Rep.R35: _r35,
    Rep.R36: _r36,
    Rep.R37: _r37,
}


def _assembled(n, m, w_rep):
    if m > n:
        return Poly(), w_nm_overflow(n, m)
    w = w_nm(n, m, w_rep)
    return legendre_deriv(n, m), w.add_poly(-bromwich_r(n, BromwichRep.SCHELKUNOFF_SUM).derivative(m))


@lru_cache(maxsize=None)
def log_deriv(
    n: int,
    m: int,
    sign: Sign = Sign.PLUS,
    rep: Rep | None = None,
    *,
    bracket: BracketSign = BracketSign.PRINTED,
    w_rep: WRep = WRep.W25,
) -> LogDerivExpr:
    """Exact ``d^m [P_n(z) ln(z + sign)] / dz^m`` from the chosen closed form.

    Parameters
    ----------
    n, m : int
        Legendre degree and derivative order.
    sign : Sign
        ``PLUS`` for ``ln(z+1)``, ``MINUS`` for ``ln(z-1)``.
    rep : Rep, optional
        Closed form to build from. ``R32``..``R36`` need ``m <= n``, ``R37``
        needs ``m > n`` and ``ASSEMBLED`` needs ``sign = PLUS``. Defaults to
        ``R32`` or ``R37`` depending on ``m``.
    bracket : BracketSign
        Sign convention for the bracket in ``R36``.
    w_rep : WRep
        Companion form used by ``ASSEMBLED``.

    Raises
    ------
    ValueError
        On a representation/parameter mismatch.
    GammaResidueError
        If γ fails to cancel.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    sign = Sign(sign)
    rep = default_rep(n, m) if rep is None else Rep(rep)
    if rep is Rep.ASSEMBLED:
        if sign is not Sign.PLUS:
            raise ValueError("the assembled form is only built for ln(z+1)")
        g, rest = _assembled(n, m, WRep(w_rep))
        return LogDerivExpr(sign, n, m, g, rest.raise_order(m))
    if rep is Rep.R37 and m <= n:
        raise ValueError(f"r37 needs m > n, got n={n}, m={m}")
    if rep is not Rep.R37 and m > n:
        raise ValueError(f"{rep.value} needs m <= n, got n={n}, m={m}")
    g, entire, pole = _BUILDERS[rep](n, m, int(sign), BracketSign(bracket))
    rest = LogFreePart.build(entire, sign, m, pole).strip_gamma()
    return LogDerivExpr(sign, n, m, g.strip_gamma(), rest)


# -- evaluation


def _on_cut(z: complex) -> bool:
    return z.imag == 0 and z.real <= 1


def eval_off_cut(e: LogDerivExpr, z) -> complex:
    """Evaluate with the principal logarithm away from the cut ``(-inf, 1]``."""
    z = complex(z)
    if _on_cut(z):
        raise DomainError(f"z = {z} lies on the branch cut (-inf, 1]")
    s = int(e.sign)
    return e._eval(z, cmath.log(z + s))


def eval_boundary(e: LogDerivExpr, x: float, side: int) -> complex:
    """Boundary value at ``x + i0`` (``side=+1``) or ``x - i0`` (``side=-1``).

    The signed zero imaginary part selects the side of the cut for the
    logarithm, so ``ln(x - 1 ± i0) = ln(1 - x) ± i pi``.
    """
    if not -1 < x < 1:
        raise DomainError(f"segment point {x} outside (-1, 1)")
    im = math.copysign(0.0, side)
    z = complex(x, im)
    return e._eval(z, cmath.log(complex(x + int(e.sign), im)))


def eval_on_segment(n: int, m: int, sign: Sign, x: float, rep: Rep | None = None) -> float:
    """``d^m [P_n(x) ln(1 ± x)] / dx^m`` for real ``-1 < x < 1``.

    ``ln(1+x)`` for ``PLUS`` and ``ln(1-x)`` for ``MINUS``. In the latter
    case this is the mean of the two boundary values on the cut.
    """
    if not -1 < x < 1:
        raise DomainError(f"segment point {x} outside (-1, 1)")
    e = log_deriv(n, m, Sign(sign), rep)
    s = int(e.sign)
    g, p, q = e._float_parts()
    val = _horner(p, x).real
    if e.rest.pole_order:
        val += _horner(q, x).real / (x + s) ** e.rest.pole_order
    return val + _horner(g, x).real * math.log1p(s * x)


def _sqrt_z2m1(z: complex) -> complex:
    # (z^2-1)^(1/2) analytic off (-inf, 1]
    return cmath.sqrt(z - 1) * cmath.sqrt(z + 1)


def _check_degree_domain(z: complex):
    if z.imag == 0 and z.real < 1:
        raise DomainError(f"z = {z} lies on the branch cut")


def degree_deriv_eval(n: int, m: int, z) -> complex:
    """``dP_nu^m(z)/dnu`` at ``nu = n``.

    Uses ``P_n ln((z+1)/2) + R_n`` for ``m = 0`` and
    ``(z^2-1)^(m/2) [d^m P_n ln((z+1)/2) + W_n^m]`` otherwise.
    """
    z = complex(z)
    _check_degree_domain(z)
    lg = cmath.log((z + 1) / 2)
    if m == 0:
        if z.imag == 0:
            # exact on the real axis so that R_n(1) = 0 survives rounding
            x = Fraction(z.real)
            return float(legendre(n)(x)) * lg + float(bromwich_r(n)(x))
        return legendre(n)(z) * lg + bromwich_r(n)(z)
    if z == 1:
        return 0j
    w = w_nm(n, m) if m <= n else w_nm_overflow(n, m)
    inner = _poly_at(legendre_deriv(n, m), z) * lg + _poly_at(w.poly, z)
    inner += _poly_at(w.pole_num, z) / (z + 1) ** m
    return _sqrt_z2m1(z) ** m * inner


def _poly_at(p: Poly, z: complex) -> complex:
    return _horner(p.float_coeffs(), z)


def eval_parity_route(n: int, m: int, z) -> complex:
    """``d^m [P_n ln(z-1)]`` from the ``ln(z+1)`` companion evaluated at ``-z``.

    Numeric only: ``R_n^m(-z)`` is rebuilt with cut-plane half-powers, so
    ``z`` must be off the real axis.
    """
    z = complex(z)
    if z.imag == 0:
        raise DomainError("the reflection route needs Im z != 0")
    w = w_nm(n, m) if m <= n else w_nm_overflow(n, m)
    r_nm_reflected = _sqrt_z2m1(-z) ** m * (_poly_at(w.poly, -z) + _poly_at(w.pole_num, -z) / (1 - z) ** m)
    val = _poly_at(legendre_deriv(n, m), z) * cmath.log(z - 1)
    val += (-1) ** n * r_nm_reflected / _sqrt_z2m1(z) ** m
    val -= (-1) ** (n + m) * _poly_at(bromwich_r(n).derivative(m), -z)
    return val
