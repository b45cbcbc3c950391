from fractions import Fraction

import pytest

from leglog import bromwich
from leglog.bromwich import BromwichRep, bromwich_r
from leglog.exact import GammaResidueError, psi_int
from leglog.polys import Poly, legendre

REPS = list(BromwichRep)


@pytest.mark.parametrize("rep", REPS)
def test_small_degrees(rep):
    assert bromwich_r(0, rep) == Poly()
    assert bromwich_r(1, rep) == Poly([-1, 1])
    assert bromwich_r(2, rep) == Poly([Fraction(-1, 4), Fraction(-6, 4), Fraction(7, 4)])


def test_r1_by_hand():
    # 2[psi(3)-psi(2)] P_1 - 2 * (1/2) P_0
    by_hand = legendre(1) * ((psi_int(3) - psi_int(2)) * 2) - legendre(0)
    assert by_hand.strip_gamma() == bromwich_r(1)


@pytest.mark.parametrize("n", range(31))
def test_representations_agree(n):
    ref = bromwich_r(n, BromwichRep.SCHELKUNOFF_SUM)
    assert bromwich_r(n, BromwichRep.PLUS_BASIS) == ref
    assert bromwich_r(n, BromwichRep.LEGENDRE_BASIS) == ref
    assert ref(Fraction(1)) == 0
    if n:
        assert ref.degree == n


def test_gamma_part_vanishes_coefficientwise():
    for n in range(12):
        for rep in REPS:
            raw = bromwich._BUILDERS[rep](n)
            assert raw.gamma_part() == Poly()


def test_transcription_error_is_loud(monkeypatch):
    # dropping the leading psi term leaves a γ residue
    def broken(n):
        return bromwich._schelkunoff(n) + legendre(n) * (psi_int(n + 1) * 2)

    monkeypatch.setitem(bromwich._BUILDERS, BromwichRep.SCHELKUNOFF_SUM, broken)
    bromwich_r.cache_clear()
    try:
        with pytest.raises(GammaResidueError):
            bromwich_r(3, BromwichRep.SCHELKUNOFF_SUM)
    finally:
        bromwich_r.cache_clear()
