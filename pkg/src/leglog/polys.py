"""Dense univariate polynomials with exact coefficients.

Coefficients are stored lowest power first and may be ``Fraction`` or
:class:`~leglog.exact.GammaTracked`. Legendre and Gegenbauer polynomials are
built by their own three-term recurrences so that the derivative identity
linking them is a real check rather than a restatement.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import GammaTracked, factorial

__all__ = [
    "Poly",
    "legendre",
    "legendre_deriv",
    "gegenbauer_half",
    "derivative_prefactor",
]


def _trim(coeffs: Sequence) -> tuple:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """Polynomial in ``z``; ``coeffs[k]`` multiplies ``z**k``.

    Instances are immutable and kept canonical: no trailing zeros, and the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, a, s) -> Poly:
        """The polynomial ``a + s*z``."""
        return cls([a, s])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if not other:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            terms.append(str(c) if k == 0 else f"{c}*z" if k == 1 else f"{c}*z^{k}")
        return " + ".join(terms)

    # ring operations

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Poly:
        if not c:
            return Poly()
        return Poly([x * c for x in self.coeffs])

    def derivative(self, order: int = 1) -> Poly:
        """``order``-th derivative in ``z``."""
        coeffs = list(self.coeffs)
        for _ in range(order):
            if not coeffs:
                break
            coeffs = [k * coeffs[k] for k in range(1, len(coeffs))]
        return Poly(coeffs)

    def shift_eval(self, a, s) -> Poly:
        """Return ``q`` with ``q(z) = self(a + s*z)``."""
        lin = Poly.linear(a, s)
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def reflect(self) -> Poly:
        """Return ``p(-z)``."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def divmod_monic(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Long division by a monic polynomial."""
        d = divisor.coeffs
        if not d or d[-1] != 1:
            raise ValueError("divisor must be monic")
        dd = len(d) - 1
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            quot[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] = rem[i - dd + j] - c * d[j]
        return Poly(quot), Poly(rem[:dd])

    def __call__(self, x):
        """Horner evaluation; works for exact and floating ``x``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # γ bookkeeping

    def gamma_part(self) -> Poly:
        return Poly([c.gamma_coeff if isinstance(c, GammaTracked) else 0 for c in self.coeffs])

    def strip_gamma(self) -> Poly:
        """Drop γ-tracking, raising if any coefficient keeps a γ part."""
        return Poly([c.strip() if isinstance(c, GammaTracked) else c for c in self.coeffs])

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


@lru_cache(maxsize=None)
def legendre(n: int) -> Poly:
    """Legendre polynomial ``P_n`` from ``(k+1)P_{k+1} = (2k+1)zP_k - kP_{k-1}``."""
    if n < 0:
        raise ValueError("Legendre degree must be nonnegative")
    if n == 0:
        return Poly.const(Fraction(1))
    if n == 1:
        return Poly.monomial(1, Fraction(1))
    k = n - 1
    z = Poly.monomial(1, Fraction(1))
    return (z * legendre(k) * (2 * k + 1) - legendre(k - 1) * k).scale(Fraction(1, n))


@lru_cache(maxsize=None)
def legendre_deriv(n: int, m: int) -> Poly:
    """``d^m P_n / dz^m``; zero when ``m > n``."""
    if m < 0:
        raise ValueError("derivative order must be nonnegative")
    if m > n:
        return Poly()
    return legendre(n).derivative(m)


@lru_cache(maxsize=None)
def gegenbauer_half(k: int, m: int) -> Poly:
    """Gegenbauer polynomial ``C_k^{(alpha)}`` with ``alpha = m + 1/2``.

    Uses ``j C_j = 2(j+alpha-1) z C_{j-1} - (j+2alpha-2) C_{j-2}``.
    """
    if k < 0 or m < 0:
        raise ValueError("Gegenbauer indices must be nonnegative")
    alpha = Fraction(2 * m + 1, 2)
    prev, cur = Poly(), Poly.const(Fraction(1))
    z = Poly.monomial(1, Fraction(1))
    for j in range(1, k + 1):
        nxt = (z * cur * (2 * (j + alpha - 1)) - prev * (j + 2 * alpha - 2)).scale(Fraction(1, j))
        prev, cur = cur, nxt
    return cur


def derivative_prefactor(m: int) -> Fraction:
    """``(2m)! / (2^m m!)``, the scale between ``d^m P_n`` and ``C_{n-m}^{(m+1/2)}``."""
    return Fraction(factorial(2 * m), 2**m * factorial(m))
