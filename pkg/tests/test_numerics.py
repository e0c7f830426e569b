import random
from fractions import Fraction

from divcalc import (DivisorClass, correction_constant, euler_char, h0_lower_bound,
                     make_del_pezzo_blowup, make_hirzebruch, make_projective_plane, make_shell)
from divcalc.numerics import (CLASS_TAG_RULE, EFFECTIVE_REPRESENTATION, RIEMANN_ROCH,
                              TRIVIAL, USER_SUPPLIED, count_effective_representations)
from divcalc.surface import NEG_INF, SurfaceInvariants

from corpus import catalog_surfaces, random_effective

F2 = make_hirzebruch(2)


def test_correction_constant_examples():
    p2 = make_projective_plane()
    c = correction_constant(p2.invariants)
    assert (c.value, c.case_used) == (0, "zero_case")
    gt = SurfaceInvariants(char_p=3, kodaira_dim=2, chi_O=1, q=0, volume=1)
    assert correction_constant(gt).value == Fraction(1, 4)
    assert correction_constant(gt, ceil=True).value == 1
    qe = SurfaceInvariants(char_p=2, kodaira_dim=1, chi_O=-1, q=0, quasi_elliptic=True)
    assert correction_constant(qe).value == 3


def test_correction_constant_monotone_in_volume():
    for p in (2, 3, 5):
        for chi in range(-2, 5):
            values = []
            for vol in range(1, 15):
                if vol < 2 * chi - 6:
                    continue
                inv = SurfaceInvariants(char_p=p, kodaira_dim=2, chi_O=chi, q=0, volume=vol)
                values.append(correction_constant(inv).value)
            assert values == sorted(values)


def test_euler_char_examples():
    assert euler_char(F2.divisor([0, 0]), F2) == 1
    assert euler_char(F2.divisor([1, 1]), F2) == 2
    p2 = make_projective_plane()
    assert euler_char(p2.divisor([1]), p2) == 3


def test_euler_char_serre_symmetry():
    rng = random.Random(0)
    for m in catalog_surfaces():
        for _ in range(10):
            d = DivisorClass(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(m.rank)))
            assert euler_char(d, m) == euler_char(m.canonical - d, m)


def test_h0_examples():
    b = h0_lower_bound(F2.divisor([1, 1]), F2)
    assert b.lower == 2 and b.method == RIEMANN_ROCH and b.h2_vanishing_certified
    p2 = make_projective_plane()
    b = h0_lower_bound(p2.divisor([0]), p2)
    assert b.lower == 1
    ab = make_shell("abelian", [[0, 1], [1, 0]], polarization=[1, 1])
    b = h0_lower_bound(DivisorClass((1, 1)), ab, allow_relative=True)
    assert b.lower == 1 and b.h2_vanishing_certified


def test_h0_other_routes():
    assert h0_lower_bound(F2.divisor([0, -1]), F2).method == TRIVIAL
    assert h0_lower_bound(F2.divisor([0, -1]), F2, supplied=4).method == USER_SUPPLIED
    dp = make_del_pezzo_blowup(3)
    b = h0_lower_bound(-dp.canonical, dp)
    assert b.lower == 7
    assert CLASS_TAG_RULE and EFFECTIVE_REPRESENTATION


def test_h0_bound_never_exceeds_representation_count_on_rational_surfaces():
    # on these surfaces q = 0 and distinct effective representations are
    # distinct divisors, so they give at least h0 - 1 ... only compare the
    # cases where a certified RR bound and a count coexist: RR <= count + dim
    rng = random.Random(12)
    for m in catalog_surfaces():
        for _ in range(5):
            d = random_effective(m, rng, top=2)
            b = h0_lower_bound(d, m)
            n = count_effective_representations(d, m)
            assert b.lower >= 1
            assert n is None or n >= 1
