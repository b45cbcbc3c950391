"""Double-precision evaluation of each closed form in its own basis.

The exact builders reduce every representation to the same canonical
rational function, which says nothing about how the published forms behave
in floating point. Here each form is evaluated the way it is written:
sums in powers of ``(z ∓ 1)/2``, Gegenbauer polynomials by recurrence,
digamma values as doubles. Exact integer coefficient ratios are rounded to
double once, when the evaluator is compiled.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Callable

from .assoc import Sign
from .exact import EULER_GAMMA, binomial, factorial, harmonic
from .logderiv import Rep, default_rep

__all__ = ["compile_float", "FLOAT_REPS"]

FLOAT_REPS = ("r32", "r33", "r34", "r35", "r36", "r37", "assembled", "leibniz")


def _psi(n: int) -> float:
    return float(harmonic(n - 1)) - EULER_GAMMA


def _gegenbauer(k: int, m: int, z: complex) -> complex:
    alpha = m + 0.5
    prev, cur = 0j, 1 + 0j
    for j in range(1, k + 1):
        prev, cur = cur, (2 * (j + alpha - 1) * z * cur - (j + 2 * alpha - 2) * prev) / j
    return cur


def _pref(m: int) -> float:
    return float(Fraction(factorial(2 * m), 2**m * factorial(m)))


def _dpn(n: int, m: int, z: complex) -> complex:
    if m > n:
        return 0j
    return _pref(m) * _gegenbauer(n - m, m, z)


def _series(coeffs, t: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _a(k, n, m):
    return Fraction(factorial(k + n + m), factorial(k) * factorial(k + m) * factorial(n - m - k))


def _b(k, n, m):
    return Fraction(factorial(k + n), factorial(k) * factorial(k + m) * factorial(n - k))


def _sum_form(n, m, s, lead, f, g):
    ent = [float(Fraction(-(s ** (n + m)) * s**k, 2**m) * _a(k, n, m)) * f(k) for k in range(n - m + 1)]
    ratio = Fraction(factorial(n + m), factorial(n - m))
    pol = [float(s ** (n + k) * ratio * _b(k, n, m)) * g(k) for k in range(n + 1)]

    def ev(z):
        t = (z - s) / 2
        return lead * _dpn(n, m, z) + _series(ent, t) + _series(pol, t) / (z + s) ** m

    return ev


def _neg_order_coeffs(k, m):
    return [float(Fraction(factorial(k + j), factorial(k - j) * factorial(j) * factorial(m + j))) for j in range(k + 1)]


def _neg_order(coeffs, m, s, z):
    # (z^2-1)^(-m/2) P_k^(-m)(s z) on the cut plane
    return _series(coeffs, (s * z - 1) / 2) / (z + s) ** m


def _compile_rest(n, m, s, rep):
    psi = _psi
    if rep == "r32":
        return _sum_form(n, m, s, psi(n + 1) - psi(n - m + 1),
                         lambda k: psi(k + n + m + 1), lambda k: psi(k + n + 1))
    if rep == "r33":
        return _sum_form(n, m, s, -(psi(n + m + 1) - 2 * psi(n + 1) + psi(n - m + 1)),
                         lambda k: psi(k + m + 1), lambda k: psi(k + m + 1))
    if rep == "r34":
        return _sum_form(n, m, s, psi(n + m + 1) - psi(n - m + 1),
                         lambda k: 2 * psi(k + n + m + 1) - psi(k + m + 1),
                         lambda k: 2 * psi(k + n + 1) - psi(k + m + 1))
    if rep == "r35":
        pol = [
            float(Fraction(-((-s) ** n) * (-1) ** m * s**k * factorial(k + n) * factorial(m - k - 1),
                           factorial(k) * factorial(n - k)))
            for k in range(m)
        ]
        ent = [
            float(Fraction((-s) ** (n + m + k), 2**m) * _a(k, n, m)) * (psi(k + m + 1) - psi(k + 1))
            for k in range(n - m + 1)
        ]

        def ev(z):
            u = (z + s) / 2
            return _series(pol, u) / (z + s) ** m + _series(ent, u)

        return ev
    if rep == "r36":
        lead = psi(n + 1) - psi(n - m + 1)
        ratio = Fraction(factorial(n + m), factorial(n - m))
        neg = [
            (float(ratio * Fraction((-s) ** n * (-1) ** k * (2 * k + 1), (n - k) * (k + n + 1))),
             _neg_order_coeffs(k, m))
            for k in range(m)
        ]
        pref = Fraction(factorial(2 * m), 2**m * factorial(m))
        geg = []
        for k in range(n - m):
            c = Fraction(-((-s) ** (n + m + k)) * (2 * k + 2 * m + 1), (n - m - k) * (k + n + m + 1))
            r = Fraction(factorial(k) * factorial(n + m), factorial(k + 2 * m) * factorial(n - m))
            geg.append(float(pref * c * (1 - r)))

        def ev(z):
            val = lead * _dpn(n, m, z)
            for c, coeffs in neg:
                val += c * _neg_order(coeffs, m, s, z)
            # Gegenbauer sum by forward recurrence, accumulated term by term
            alpha = m + 0.5
            prev, cur = 0j, 1 + 0j
            for k, c in enumerate(geg):
                if k:
                    prev, cur = cur, (2 * (k + alpha - 1) * z * cur - (k + 2 * alpha - 2) * prev) / k
                val += c * cur
            return val

        return ev
    if rep == "r37":
        c = float((-s) ** n * (-1) ** (m + 1) * factorial(n + m) * factorial(m - n - 1))
        coeffs = _neg_order_coeffs(n, m)
        return lambda z: c * _neg_order(coeffs, m, s, z)
    if rep == "assembled":
        if s != 1:
            raise ValueError("the assembled form is only built for ln(z+1)")
        if m > n:
            return _compile_rest(n, m, s, "r37")
        # companion W_n^m from the psi(k+n+m+1)-weighted form
        lead = -(psi(n + 1) + psi(n - m + 1))
        ent = [float(Fraction(1, 2**m) * _a(k, n, m)) * psi(k + n + m + 1) for k in range(n - m + 1)]
        ratio = Fraction(factorial(n + m), factorial(n - m))
        pol = [float(ratio * _b(k, n, m)) * psi(k + n + 1) for k in range(n + 1)]
        # d^m R_n from the Schelkunoff sum
        dr = [
            float(Fraction(2 * factorial(k + n) * factorial(k), factorial(k) ** 2 * factorial(n - k) * factorial(k - m) * 2**m))
            * psi(k + n + 1)
            for k in range(m, n + 1)
        ]

        def ev(z):
            t = (z - 1) / 2
            d = _dpn(n, m, z)
            w = lead * d + _series(ent, t) + _series(pol, t) / (z + 1) ** m
            dmr = -2 * psi(n + 1) * d + _series(dr, t)
            return w - dmr

        return ev
    if rep == "leibniz":
        terms = [(float(binomial(m, j) * (-1) ** (j - 1) * factorial(j - 1)), j) for j in range(1, m + 1)]
        return lambda z: sum(c * _dpn(n, m - j, z) / (z + s) ** j for c, j in terms)
    raise ValueError(f"unknown representation {rep!r}")


def compile_float(n: int, m: int, sign: Sign, rep: str | Rep | None = None) -> Callable[[complex], complex]:
    """Return ``z -> d^m [P_n(z) ln(z + s)]`` evaluated in double precision."""
    s = int(Sign(sign))
    if rep is None:
        rep = default_rep(n, m)
    rep = rep.value if isinstance(rep, Rep) else str(rep).lower()
    if rep in ("r32", "r33", "r34", "r35", "r36") and m > n:
        raise ValueError(f"{rep} needs m <= n")
    if rep == "r37" and m <= n:
        raise ValueError("r37 needs m > n")
    rest = _compile_rest(n, m, s, rep)

    def ev(z):
        z = complex(z)
        return _dpn(n, m, z) * cmath.log(z + s) + rest(z)

    return ev
