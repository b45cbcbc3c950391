"""Pole-normalised companions of the associated degree derivative.

The object built here is ``W_n^m(z) = (z^2-1)^(-m/2) R_n^m(z)``, where
``R_n^m`` is the non-logarithmic part of ``dP_nu^m/dnu`` at ``nu = n``.
Multiplying through by ``(z^2-1)^(-m/2)`` removes every half-integer power,
so ``W_n^m`` is a rational function with a single pole of order ``m`` at
``z = -1``. It is stored as a :class:`LogFreePart`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bromwich import half_shift_sum
from .exact import factorial, psi_int
from .polys import Poly, legendre_deriv

__all__ = [
    "Sign",
    "WRep",
    "BracketSign",
    "LogFreePart",
    "canonical_total_num",
    "neg_order_part",
    "neg_order_part_reflected",
    "w_nm",
    "w_nm_overflow",
]


class Sign(enum.IntEnum):
    """Which of ``ln(z+1)`` (``PLUS``) or ``ln(z-1)`` (``MINUS``) is meant.

    The pole of the associated rational part sits at ``z = -sign``.
    """

    PLUS = 1
    MINUS = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"


class WRep(enum.Enum):
    W25 = "w25"  # psi(k+n+m+1) weights in both (z-1)/2 sums
    W26 = "w26"  # 2psi(k+n+m+1)-psi(k+m+1) / psi(k+m+1) weights
    W27 = "w27"  # psi(k+m+1) / 2psi(k+n+1)-psi(k+m+1) weights
    W28 = "w28"  # (z+1)/2 basis, finite pole sum over k < m
    W29 = "w29"  # expansion over negative-order and associated functions


class BracketSign(enum.IntEnum):
    """Sign inside the ``[1 ± k!(n+m)!/((k+2m)!(n-m)!)]`` bracket.

    ``PRINTED`` is the sign as published for each formula that carries the
    bracket; ``FLIPPED`` negates it. The exact sweep decides which one holds.
    """

    PRINTED = 1
    FLIPPED = -1


def _pole_base(sign: int) -> Poly:
    return Poly([Fraction(int(sign)), Fraction(1)])


@dataclass(frozen=True)
class LogFreePart:
    """Rational function ``poly(z) + pole_num(z) / (z + sign)**pole_order``.

    Construct through :meth:`build`, which reduces ``pole_num`` modulo
    ``(z + sign)**pole_order``; the stored form is then canonical and plain
    equality of instances is equality of rational functions of the same
    pole order.
    """

    poly: Poly = field(default_factory=Poly)
    pole_sign: Sign = Sign.PLUS
    pole_order: int = 0
    pole_num: Poly = field(default_factory=Poly)

    @classmethod
    def build(cls, poly=None, sign=Sign.PLUS, order=0, num=None) -> LogFreePart:
        poly = poly if poly is not None else Poly()
        num = num if num is not None else Poly()
        if order < 0:
            raise ValueError("pole order must be nonnegative")
        if order == 0:
            return cls(poly + num, Sign(sign), 0, Poly())
        quot, rem = num.divmod_monic(_pole_base(sign) ** order)
        return cls(poly + quot, Sign(sign), order, rem)

    def raise_order(self, order: int) -> LogFreePart:
        """Same value written over ``(z + sign)**order``."""
        if order < self.pole_order:
            raise ValueError("cannot lower the pole order")
        if order == self.pole_order:
            return self
        num = self.pole_num * _pole_base(self.pole_sign) ** (order - self.pole_order)
        return LogFreePart(self.poly, self.pole_sign, order, num)

    def _aligned(self, other: LogFreePart):
        if self.pole_sign != other.pole_sign and self.pole_num and other.pole_num:
            raise ValueError("cannot combine parts with poles at different points")
        sign = self.pole_sign if self.pole_num or not other.pole_num else other.pole_sign
        a = LogFreePart(self.poly, sign, self.pole_order, self.pole_num)
        b = LogFreePart(other.poly, sign, other.pole_order, other.pole_num)
        order = max(a.pole_order, b.pole_order)
        return a.raise_order(order), b.raise_order(order)

    def __add__(self, other: LogFreePart) -> LogFreePart:
        a, b = self._aligned(other)
        return LogFreePart.build(a.poly + b.poly, a.pole_sign, a.pole_order, a.pole_num + b.pole_num)

    def __neg__(self) -> LogFreePart:
        return LogFreePart(-self.poly, self.pole_sign, self.pole_order, -self.pole_num)

    def __sub__(self, other: LogFreePart) -> LogFreePart:
        return self + (-other)

    def scale(self, c) -> LogFreePart:
        return LogFreePart(self.poly.scale(c), self.pole_sign, self.pole_order, self.pole_num.scale(c))

    def add_poly(self, p: Poly) -> LogFreePart:
        return LogFreePart(self.poly + p, self.pole_sign, self.pole_order, self.pole_num)

    def derivative(self) -> LogFreePart:
        """d/dz, returned over ``(z + sign)**(pole_order + 1)`` when a pole is present."""
        if self.pole_order == 0:
            return LogFreePart(self.poly.derivative(), self.pole_sign, 0, Poly())
        base = _pole_base(self.pole_sign)
        num = self.pole_num.derivative() * base - self.pole_num * self.pole_order
        return LogFreePart.build(self.poly.derivative(), self.pole_sign, self.pole_order + 1, num)

    def strip_gamma(self) -> LogFreePart:
        return LogFreePart(self.poly.strip_gamma(), self.pole_sign, self.pole_order, self.pole_num.strip_gamma())

    def gamma_is_zero(self) -> bool:
        return not self.poly.gamma_part() and not self.pole_num.gamma_part()

    def __call__(self, z):
        val = self.poly(z)
        if self.pole_order:
            val = val + self.pole_num(z) / (z + int(self.pole_sign)) ** self.pole_order
        return val


def canonical_total_num(p: LogFreePart) -> Poly:
    """``poly * (z + sign)**pole_order + pole_num``."""
    return p.poly * _pole_base(p.pole_sign) ** p.pole_order + p.pole_num


def _neg_order_numerator(n: int, m: int) -> Poly:
    terms = [
        Fraction(factorial(n + k), factorial(n - k) * factorial(k) * factorial(m + k))
        for k in range(n + 1)
    ]
    return half_shift_sum(terms, 1)


@lru_cache(maxsize=None)
def neg_order_part(n: int, m: int) -> LogFreePart:
    """``(z^2-1)^(-m/2) P_n^(-m)(z)`` as a pure pole part at ``z = -1``.

    ``P_n^(-m)`` is taken from its terminating hypergeometric series, which
    after the prefactor cancels reads
    ``(z+1)^(-m) sum_k (n+k)!/((n-k)! k! (m+k)!) ((z-1)/2)^k``.
    """
    if m < 1:
        raise ValueError("negative order requires m >= 1; use legendre(n) for m = 0")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return LogFreePart.build(Poly(), Sign.PLUS, m, _neg_order_numerator(n, m))


@lru_cache(maxsize=None)
def neg_order_part_reflected(n: int, m: int) -> LogFreePart:
    """``(z^2-1)^(-m/2) P_n^(-m)(-z)`` on the cut plane, a pole part at ``z = +1``.

    Both ``(z^2-1)^(-m/2)`` and ``P_n^(-m)(-z)`` pick up the phase
    ``exp(∓i pi m/2)`` per half-power from ``-z∓1 = exp(∓i pi)(z±1)``; the
    phases cancel, leaving ``(z-1)^(-m) N(-z)`` with ``N`` the numerator of
    :func:`neg_order_part`.
    """
    if m < 1:
        raise ValueError("negative order requires m >= 1")
    return LogFreePart.build(Poly(), Sign.MINUS, m, _neg_order_numerator(n, m).reflect())


# -- W_n^m builders, 0 <= m <= n. Each returns γ-tracked parts:
# (entire polynomial, numerator over (z+1)^m).


def _psi_sum_coeff(k, n, m):
    return Fraction(factorial(k + n + m), factorial(k) * factorial(k + m) * factorial(n - m - k))


def _pole_sum_coeff(k, n, m):
    return Fraction(factorial(k + n), factorial(k) * factorial(k + m) * factorial(n - k))


def _w_sumform(n, m, lead, entire_weight, pole_weight):
    dpn = legendre_deriv(n, m)
    entire = half_shift_sum(
        [entire_weight(k) * _psi_sum_coeff(k, n, m) for k in range(n - m + 1)], 1
    ).scale(Fraction(1, 2**m))
    pole = half_shift_sum(
        [pole_weight(k) * _pole_sum_coeff(k, n, m) for k in range(n + 1)], 1
    ).scale(Fraction(factorial(n + m), factorial(n - m)))
    return dpn * lead + entire, pole


def _w25(n, m, bracket):
    return _w_sumform(
        n, m,
        -(psi_int(n + 1) + psi_int(n - m + 1)),
        lambda k: psi_int(k + n + m + 1),
        lambda k: psi_int(k + n + 1),
    )


def _w26(n, m, bracket):
    return _w_sumform(
        n, m,
        -(psi_int(n + m + 1) + psi_int(n - m + 1)),
        lambda k: psi_int(k + n + m + 1) * 2 - psi_int(k + m + 1),
        lambda k: psi_int(k + m + 1),
    )


def _w27(n, m, bracket):
    return _w_sumform(
        n, m,
        psi_int(n + m + 1) - psi_int(n + 1) * 2 - psi_int(n - m + 1),
        lambda k: psi_int(k + m + 1),
        lambda k: psi_int(k + n + 1) * 2 - psi_int(k + m + 1),
    )


def _w28(n, m, bracket):
    sgn = (-1) ** (n + m)
    pole = half_shift_sum(
        [
            Fraction(factorial(k + n) * factorial(m - k - 1), factorial(k) * factorial(n - k))
            for k in range(m)
        ],
        -1,
    ).scale(-sgn)
    entire = half_shift_sum(
        [
            (psi_int(k + n + m + 1) * 2 - psi_int(k + m + 1) - psi_int(k + 1))
            * ((-1) ** k * _psi_sum_coeff(k, n, m))
            for k in range(n - m + 1)
        ],
        -1,
    ).scale(Fraction(sgn, 2**m))
    return entire, pole


def _w29(n, m, bracket):
    lead = psi_int(2 * n + 1) * 2 - psi_int(n + 1) - psi_int(n - m + 1)
    entire = legendre_deriv(n, m) * lead
    pole = Poly()
    ratio = Fraction(factorial(n + m), factorial(n - m))
    for k in range(m):
        c = ratio * Fraction((-1) ** (n + k) * (2 * k + 1), (n - k) * (k + n + 1))
        pole = pole + neg_order_part(k, m).pole_num.scale(c)
    for k in range(n - m):
        c = Fraction((-1) ** (n + m + k) * (2 * k + 2 * m + 1), (n - m - k) * (k + n + m + 1))
        r = Fraction(factorial(k) * factorial(n + m), factorial(k + 2 * m) * factorial(n - m))
        entire = entire + legendre_deriv(k + m, m).scale(c * (1 + int(bracket) * r))
    return entire, pole


_W_BUILDERS = {
    WRep.W25: _w25,
    WRep.W26: _w26,
    WRep.W27: _w27,
    WRep.W28: _w28,
    WRep.W29: _w29,
}


@lru_cache(maxsize=None)
def w_nm(n: int, m: int, rep: WRep = WRep.W25, bracket: BracketSign = BracketSign.PRINTED) -> LogFreePart:
    """``W_n^m = (z^2-1)^(-m/2) R_n^m`` for ``0 <= m <= n``.

    ``bracket`` only affects ``WRep.W29``.

    Raises
    ------
    ValueError
        If ``m > n`` (see :func:`w_nm_overflow`) or ``m < 0``.
    GammaResidueError
        If γ does not cancel.
    """
    if m < 0 or m > n:
        raise ValueError(f"w_nm needs 0 <= m <= n, got n={n}, m={m}")
    entire, pole = _W_BUILDERS[WRep(rep)](n, m, BracketSign(bracket))
    # γ cancels only in the reduced total, not in each piece separately
    return LogFreePart.build(entire, Sign.PLUS, m, pole).strip_gamma()


@lru_cache(maxsize=None)
def w_nm_overflow(n: int, m: int) -> LogFreePart:
    """``W_n^m`` for ``m > n``: a multiple of the negative-order function."""
    if m <= n:
        raise ValueError(f"w_nm_overflow needs m > n, got n={n}, m={m}")
    c = (-1) ** (n + m + 1) * factorial(n + m) * factorial(m - n - 1)
    return neg_order_part(n, m).scale(Fraction(c))
