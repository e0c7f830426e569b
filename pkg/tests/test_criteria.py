import random
from fractions import Fraction

import pytest

from divcalc import (CapExhausted, DivisorClass, HypothesisViolation, bogomolov_hypothesis,
                     make_del_pezzo_blowup, make_hirzebruch, make_projective_plane, make_ruled,
                     make_shell, ms_destabilizer_search, ms_multiple, reider_check,
                     weak_ms_exponent)
from divcalc.criteria import BASEPOINT_FREE, VERY_AMPLE, DestabilizerWitness
from divcalc.positivity import is_big

from corpus import catalog_surfaces, nef_big_corpus, random_effective

F2 = make_hirzebruch(2)
P2 = make_projective_plane()


def general_type_shell():
    # C_S = 1/4 (p = 3, Vol = 1, chi = 1); an ample class of square 1
    return make_shell("general_type", [[1, 0], [0, -1]], char_p=3, canonical=[1, 0],
                      polarization=[1, 0], chi_O=1, volume=1)


def test_bogomolov_examples():
    c = bogomolov_hypothesis(P2.divisor([3]), 2, P2)
    assert c.holds and c.margin == 1
    assert not bogomolov_hypothesis(P2.divisor([0]), 0, P2).holds
    gt = general_type_shell()
    c = bogomolov_hypothesis(DivisorClass((1, 0)), 0, gt)
    assert c.c_s == Fraction(1, 4) and not c.holds and c.margin == 0


def test_destabilizer_hypothesis():
    with pytest.raises(HypothesisViolation):
        ms_destabilizer_search(F2.divisor([2, 2]), F2)
    with pytest.raises(HypothesisViolation):
        ms_destabilizer_search(F2.divisor([1, 0]), F2)


def test_destabilizer_examples():
    rep = ms_destabilizer_search(F2.divisor([2, 3]), F2)
    if rep.witness is not None:
        rep.witness.verify(F2)
        assert rep.witness.coeffs != (1, 0)
    rep = ms_destabilizer_search(P2.divisor([2]), P2)
    assert rep.witness is None and rep.exhaustive_box and not rep.found


def test_witness_rejects_bad_data():
    d = F2.divisor([2, 3])
    b = F2.divisor([1, 0])
    with pytest.raises(ValueError):
        DestabilizerWitness(d, b, (1, 0), F2.pair(d - b, b), F2.square(d),
                            F2.square(d - b * 2), is_big(d - b * 2, F2))


def test_destabilizer_search_truncation_is_reported():
    dp = make_del_pezzo_blowup(4)
    d = -dp.canonical * 3
    rep = ms_destabilizer_search(d, dp, coeff_bound=6, max_nodes=50)
    assert not rep.exhaustive_box and "stopped" in rep.note


def test_reider_examples():
    for level in (BASEPOINT_FREE, VERY_AMPLE, "bpf", "very-ample"):
        rep = reider_check(P2.divisor([4]), P2, level)
        assert rep.hypothesis_ok and not rep.obstructed and rep.complete
    rep = reider_check(P2.divisor([3]), P2, VERY_AMPLE)
    assert rep.obstructed and rep.exceptional_case.b == P2.divisor([1])
    assert [(o.db, o.b_square) for o in rep.proof_chain] == [(3, 1)]
    rep = reider_check(P2.divisor([2]), P2, BASEPOINT_FREE)
    assert not rep.hypothesis_ok


def test_reider_rejects_non_nef():
    with pytest.raises(HypothesisViolation):
        reider_check(F2.divisor([1, 1]), F2)


def test_reider_rows_exclusive_and_correct():
    for m, d in nef_big_corpus(30, seed=21):
        for level in (BASEPOINT_FREE, VERY_AMPLE):
            rep = reider_check(d, m, level, coeff_bound=4)
            for o in rep.obstructions:
                assert (o.db, o.b_square) == (m.pair(d, o.b), m.square(o.b))
                assert o.case_label.startswith(f"DB={o.db}, B^2={o.b_square}")


def test_reider_finds_fibres_on_hirzebruch():
    # D = C0 + 3F on F_1: D^2 = 5, D.F = 1 and F^2 = 0, the basepoint-free row fires
    f1 = make_hirzebruch(1)
    rep = reider_check(f1.divisor([1, 3]), f1, BASEPOINT_FREE)
    assert rep.hypothesis_ok
    assert [(o.b, o.case_label) for o in rep.obstructions] == [(f1.divisor([0, 1]), "DB=1, B^2=0")]


def test_ms_multiple_examples():
    r = ms_multiple(F2.divisor([1, 1]), F2)
    assert r.m == 2 and r.positive == DivisorClass((Fraction(1, 2), 1))
    r = ms_multiple(F2.divisor([1, 3]), F2)
    assert r.m == 1
    r = ms_multiple(DivisorClass((1, 0)), general_type_shell())
    assert r.m == 2 and r.previous_fails == "(1P)^2 = 1 <= 1"


def test_ms_multiple_minimality():
    rng = random.Random(3)
    for m in catalog_surfaces():
        for _ in range(5):
            d = random_effective(m, rng)
            if not is_big(d, m).holds:
                continue
            r = ms_multiple(d, m)
            q = r.positive * r.m
            assert q.is_integral and m.square(q) > 4 * r.c_s
            if r.m > 1:
                prev = r.positive * (r.m - 1)
                assert not prev.is_integral or m.square(prev) <= 4 * r.c_s


def test_weak_exponent_examples():
    w = weak_ms_exponent(F2.divisor([2, 1]), F2)
    assert w.e == 0 and w.h1_nilpotent == 0
    ab = make_shell("abelian", [[0, 1], [1, 0]], polarization=[1, 1], h1_nilpotent=0)
    assert weak_ms_exponent(DivisorClass((1, 1)), ab).e == 0
    unknown = make_ruled(1, 1)
    with pytest.raises(HypothesisViolation):
        weak_ms_exponent(unknown.divisor([1, 3]), unknown)


def test_weak_exponent_cap():
    # elliptic ruled surface with h1_n = 1; D = C0 + F has chi(D) = 1, chi(2D) = 3
    m = make_ruled(1, 1, frobenius_split=False, h1_nilpotent=1)
    d = m.divisor([1, 1])
    with pytest.raises(CapExhausted) as info:
        weak_ms_exponent(d, m, e_cap=0)
    assert info.value.reason == "inequality_false" and len(info.value.chain) == 1
    w = weak_ms_exponent(d, m, e_cap=1)
    assert w.e == 1 and w.chain[-1].bound.lower == 3


def test_weak_exponent_monotone():
    for m in catalog_surfaces()[:6]:
        for d in [sum(m.generator_classes, DivisorClass.zero(m.rank))]:
            if not is_big(d, m).holds:
                continue
            w = weak_ms_exponent(d, m, e_cap=3)
            lowers = [s.bound.lower for s in w.chain]
            assert lowers == sorted(lowers)
