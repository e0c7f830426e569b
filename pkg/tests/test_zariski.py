import random
from fractions import Fraction

import pytest

from divcalc import (Answer, DivisorClass, integral_zariski_decompose, is_Z_positive,
                     make_del_pezzo_blowup, make_hirzebruch, make_projective_plane, make_shell,
                     zariski_decompose)
from divcalc.numerics import count_effective_representations
from divcalc.zariski import (NotPseudoeffective, check_decomposition,
                             check_integral_decomposition)

from corpus import catalog_surfaces, random_effective, synthetic_three_curves

F2 = make_hirzebruch(2)


def test_zariski_examples():
    z = zariski_decompose(F2.divisor([1, 1]), F2)
    assert z.positive == DivisorClass((Fraction(1, 2), 1))
    assert z.support == (0,) and z.coeffs == (Fraction(1, 2),)
    z = zariski_decompose(F2.divisor([2, 1]), F2)
    assert z.coefficient(0) == Fraction(3, 2)
    nef = F2.divisor([1, 3])
    z = zariski_decompose(nef, F2)
    assert z.positive == nef and z.negative.is_zero
    check_decomposition(z, F2)


def test_zariski_rejects_non_pseudoeffective():
    with pytest.raises(NotPseudoeffective):
        zariski_decompose(F2.divisor([0, -1]), F2)


def test_integral_zariski_examples():
    iz = integral_zariski_decompose(F2.divisor([1, 1]), F2)
    assert iz.positive == F2.divisor([1, 1]) and iz.negative.is_zero
    iz = integral_zariski_decompose(F2.divisor([2, 1]), F2)
    assert iz.positive == F2.divisor([1, 1]) and iz.negative == F2.divisor([1, 0])
    check_integral_decomposition(iz, F2)
    d = F2.divisor([1, 4])
    assert integral_zariski_decompose(d, F2).positive == d


def test_integral_zariski_augmentation():
    m = synthetic_three_curves()
    d = m.divisor([6, 4, 2, -2])
    z = zariski_decompose(d, m)
    assert z.support == (0, 1, 2)
    assert z.coeffs == (Fraction(4, 5), Fraction(6, 5), Fraction(3))
    iz = integral_zariski_decompose(d, m)
    # roundup leaves N0 = C1 + 3 C2 and P0.C1 > 0, so C1 is added back
    assert iz.steps == (1,)
    assert iz.support == (2,) and iz.coeffs == (3,)
    check_integral_decomposition(iz, m)
    rng = random.Random(11)
    for _ in range(200):
        d = random_effective(m, rng, top=4)
        iz = integral_zariski_decompose(d, m)
        check_integral_decomposition(iz, m)
        for _ in range(5):
            assert integral_zariski_decompose(d, m, pick=rng.choice).positive == iz.positive


def test_z_positive_examples():
    v = is_Z_positive(F2.divisor([1, 1]), F2)
    assert v.holds
    v = is_Z_positive(F2.divisor([2, 1]), F2)
    assert v.fails
    support, coeffs = v.witness
    assert support == (0,) and tuple(coeffs) == (1,)
    p2 = make_projective_plane()
    assert is_Z_positive(p2.divisor([-5]), p2).holds
    ab = make_shell("abelian", [[0, 1], [1, 0]], polarization=[1, 1])
    assert is_Z_positive(DivisorClass((3, -7)), ab).value is Answer.TRUE


def test_positive_part_is_z_positive():
    rng = random.Random(6)
    for m in catalog_surfaces():
        for _ in range(6):
            pz = integral_zariski_decompose(random_effective(m, rng), m).positive
            for bound in (2, 5):
                assert is_Z_positive(pz, m, coeff_bound=bound).holds


def test_representation_counts_agree_for_positive_part():
    rng = random.Random(7)
    surfaces = [make_hirzebruch(n) for n in range(4)] + [make_del_pezzo_blowup(r) for r in range(1, 5)]
    compared = 0
    for m in surfaces:
        for _ in range(6):
            d = random_effective(m, rng, top=2)
            pz = integral_zariski_decompose(d, m).positive
            a = count_effective_representations(d, m)
            b = count_effective_representations(pz, m)
            if a is not None and b is not None:
                assert a == b
                compared += 1
    assert compared > 20
