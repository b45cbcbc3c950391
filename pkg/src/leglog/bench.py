"""Floating-point accuracy and timing of each closed form on a grid of points.

The reference at each point is the exact rational value of the non-log part
and of the log coefficient, with the logarithm itself taken from mpmath at
high precision; everything is rounded once at the end.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .assoc import Sign
from .floateval import compile_float
from .oracle import leibniz_log_deriv

__all__ = ["BenchRow", "run_bench", "write_csv", "reps_for", "exact_reference", "COLUMNS"]

COLUMNS = ("rep", "n", "m", "sign", "z_re", "z_im", "relerr", "nanos")

_TIMING_REPEATS = 20


@dataclass(frozen=True)
class BenchRow:
    rep: str
    n: int
    m: int
    sign: str
    z_re: float
    z_im: float
    relerr: float
    nanos: int

    def as_tuple(self):
        return (self.rep, self.n, self.m, self.sign, repr(self.z_re), repr(self.z_im),
                f"{self.relerr:.3e}", self.nanos)


def reps_for(n: int, m: int) -> tuple[str, ...]:
    """Five published forms plus the Leibniz oracle, or ``r37`` when ``m > n``."""
    if m > n:
        return ("r37", "leibniz")
    return ("r32", "r33", "r34", "r35", "r36", "leibniz")


def _gauss_horner(coeffs, re: Fraction, im: Fraction):
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def _gauss_div(ar, ai, br, bi):
    d = br * br + bi * bi
    return (ar * br + ai * bi) / d, (ai * br - ar * bi) / d


def exact_reference(n: int, m: int, sign: Sign, z: complex, dps: int = 60) -> complex:
    """Value at the double ``z`` from exact rationals, rounded once."""
    sign = Sign(sign)
    e = leibniz_log_deriv(n, m, sign)
    s = int(sign)
    re, im = Fraction(z.real), Fraction(z.imag)
    gr, gi = _gauss_horner(e.log_coeff.coeffs, re, im)
    pr, pi_ = _gauss_horner(e.rest.poly.coeffs, re, im)
    if e.rest.pole_order:
        nr, ni = _gauss_horner(e.rest.pole_num.coeffs, re, im)
        br, bi = Fraction(1), Fraction(0)
        for _ in range(e.rest.pole_order):
            br, bi = br * (re + s) - bi * im, br * im + bi * (re + s)
        qr, qi = _gauss_div(nr, ni, br, bi)
        pr, pi_ = pr + qr, pi_ + qi
    with mpmath.workdps(dps):
        def mp(x: Fraction):
            return mpmath.mpf(x.numerator) / x.denominator

        lg = mpmath.log(mpmath.mpc(mp(re + s), mp(im)))
        val = mpmath.mpc(mp(gr), mp(gi)) * lg + mpmath.mpc(mp(pr), mp(pi_))
        return complex(val)


def _relerr(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def run_bench(
    ns: Sequence[int],
    zs: Sequence[complex],
    *,
    m_of_n=lambda n: n // 2,
    signs: Iterable[Sign] = (Sign.PLUS, Sign.MINUS),
    reps: Sequence[str] | None = None,
) -> list[BenchRow]:
    rows = []
    for sign in signs:
        sign = Sign(sign)
        for n in ns:
            m = m_of_n(n)
            rep_list = tuple(reps) if reps else reps_for(n, m)
            evaluators = [(rep, compile_float(n, m, sign, rep)) for rep in rep_list]
            for z in zs:
                z = complex(z)
                ref = exact_reference(n, m, sign, z)
                for rep, ev in evaluators:
                    val = ev(z)
                    t0 = time.perf_counter_ns()
                    for _ in range(_TIMING_REPEATS):
                        ev(z)
                    nanos = (time.perf_counter_ns() - t0) // _TIMING_REPEATS
                    rows.append(BenchRow(rep, n, m, sign.symbol, z.real, z.imag, _relerr(val, ref), nanos))
    return rows


def write_csv(rows: Iterable[BenchRow], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow(r.as_tuple())
