"""Exact scalar arithmetic: factorials, harmonic numbers, digamma at integers.

Rationals are :class:`fractions.Fraction`. Digamma values at positive
integers are carried as :class:`GammaTracked` pairs ``rat + gamma_coeff * γ``
so that the Euler constant can be shown to cancel exactly instead of being
rounded away.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "GammaTracked",
    "GammaProductError",
    "GammaResidueError",
    "factorial",
    "binomial",
    "harmonic",
    "psi_int",
    "EULER_GAMMA",
]

EULER_GAMMA = 0.57721566490153286060651209008240243


class GammaProductError(ArithmeticError):
    """Two values both carrying a nonzero γ part were multiplied."""


class GammaResidueError(ArithmeticError):
    """A construction that must be γ-free kept a nonzero γ coefficient."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class GammaTracked:
    """Exact value ``rat + gamma_coeff * γ`` with γ Euler's constant.

    Arithmetic is linear in γ. Products of two values that both carry γ
    would need γ², which never occurs in the constructions here, so that
    raises :class:`GammaProductError`.
    """

    rat: Fraction = Fraction(0)
    gamma_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rat", _as_fraction(self.rat))
        object.__setattr__(self, "gamma_coeff", _as_fraction(self.gamma_coeff))

    @classmethod
    def lift(cls, x) -> GammaTracked:
        if isinstance(x, GammaTracked):
            return x
        return cls(_as_fraction(x), Fraction(0))

    def __add__(self, other):
        try:
            o = GammaTracked.lift(other)
        except TypeError:
            return NotImplemented
        return GammaTracked(self.rat + o.rat, self.gamma_coeff + o.gamma_coeff)

    __radd__ = __add__

    def __neg__(self):
        return GammaTracked(-self.rat, -self.gamma_coeff)

    def __sub__(self, other):
        try:
            o = GammaTracked.lift(other)
        except TypeError:
            return NotImplemented
        return GammaTracked(self.rat - o.rat, self.gamma_coeff - o.gamma_coeff)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GammaTracked):
            if self.gamma_coeff and other.gamma_coeff:
                raise GammaProductError("product of two γ-carrying values")
            return GammaTracked(
                self.rat * other.rat,
                self.rat * other.gamma_coeff + self.gamma_coeff * other.rat,
            )
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return GammaTracked(self.rat * c, self.gamma_coeff * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return GammaTracked(self.rat / c, self.gamma_coeff / c)

    def __bool__(self):
        return bool(self.rat) or bool(self.gamma_coeff)

    def __eq__(self, other):
        if isinstance(other, GammaTracked):
            return self.rat == other.rat and self.gamma_coeff == other.gamma_coeff
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.gamma_coeff == 0 and self.rat == c

    def __hash__(self):
        if self.gamma_coeff == 0:
            return hash(self.rat)
        return hash((self.rat, self.gamma_coeff))

    def __float__(self):
        return float(self.rat) + float(self.gamma_coeff) * EULER_GAMMA

    def __repr__(self):
        return f"GammaTracked({self.rat}, γ·{self.gamma_coeff})"

    def strip(self) -> Fraction:
        """Return the rational part, insisting the γ part is zero."""
        if self.gamma_coeff:
            raise GammaResidueError(f"nonzero γ coefficient {self.gamma_coeff}")
        return self.rat


# Factorials are memoised in one growing table; concurrent fills write
# identical entries, so the lock only guards list extension.
_FACT = [1]
_FACT_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """Return ``n!`` as an exact integer."""
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    if n < len(_FACT):
        return _FACT[n]
    with _FACT_LOCK:
        while len(_FACT) <= n:
            _FACT.append(_FACT[-1] * len(_FACT))
    return _FACT[n]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


_HARM = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """Harmonic number ``H_n``, with ``H_0 = 0``."""
    if n < 0:
        raise ValueError(f"harmonic number of negative index {n}")
    if n >= len(_HARM):
        with _FACT_LOCK:
            while len(_HARM) <= n:
                _HARM.append(_HARM[-1] + Fraction(1, len(_HARM)))
    return _HARM[n]


def psi_int(n: int) -> GammaTracked:
    """Digamma at a positive integer: ``psi(n) = -γ + H_{n-1}``."""
    if n <= 0:
        raise ValueError(f"digamma has a pole at nonpositive integer {n}")
    return GammaTracked(harmonic(n - 1), Fraction(-1))
