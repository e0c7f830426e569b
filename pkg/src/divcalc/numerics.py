"""The correction constant C_S, Riemann-Roch, and certified h^0 lower bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import DivisorClass
from .positivity import COMPLETE, Answer, is_big, is_nef, is_pseudoeffective
from .surface import SurfaceInvariants, SurfaceModel

GENERAL_TYPE_P_GT_2 = "general_type_p_gt_2"
GENERAL_TYPE_P_EQ_2 = "general_type_p_eq_2"
QUASI_ELLIPTIC_KAPPA1 = "quasi_elliptic_kappa1"
ZERO_CASE = "zero_case"


@dataclass(frozen=True)
class CorrectionConstant:
    value: Fraction
    case_used: str
    rounded: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("C_S is nonnegative")


def correction_constant(inv: SurfaceInvariants, ceil: bool = False) -> CorrectionConstant:
    """C_S as an exact rational; ``ceil=True`` rounds it up to an integer."""
    vol = Fraction(inv.volume)
    chi = inv.chi_O
    if inv.kodaira_dim == 2 and inv.char_p > 2:
        value, case = min(vol / 4, 2 + 5 * vol - chi), GENERAL_TYPE_P_GT_2
    elif inv.kodaira_dim == 2:
        value, case = min(max(vol, vol - 3 * chi + 2) / 4, 2 + 5 * vol - chi), GENERAL_TYPE_P_EQ_2
    elif inv.kodaira_dim == 1 and inv.quasi_elliptic and chi <= 0:
        value, case = Fraction(2 - chi), QUASI_ELLIPTIC_KAPPA1
    else:
        value, case = Fraction(0), ZERO_CASE
    if ceil:
        value = Fraction(math.ceil(value))
    return CorrectionConstant(Fraction(value), case, ceil)


def euler_char(d: DivisorClass, model: SurfaceModel) -> Fraction:
    """Riemann-Roch: chi(O_S) + (D^2 - D.K) / 2."""
    return model.invariants.chi_O + (model.square(d) - model.pair(d, model.canonical)) / 2


RIEMANN_ROCH = "riemann_roch_with_h2_vanishing"
CLASS_TAG_RULE = "class_tag_rule"
USER_SUPPLIED = "user_supplied"
EFFECTIVE_REPRESENTATION = "effective_representation"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class H0Bound:
    lower: int
    method: str
    h2_vanishing_certified: bool = False
    relative: bool = False
    note: str = ""

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError("h0 lower bound must be nonnegative")


def has_integral_effective_representation(d: DivisorClass, model: SurfaceModel) -> bool:
    """True when the cone-membership solution for ``d`` happens to be integral.

    A cheap sufficient test for ``d`` being an integral nonnegative
    combination of the effective generators.
    """
    if not d.is_integral:
        return False
    pe = is_pseudoeffective(d, model)
    if not pe.holds or pe.witness is None or not isinstance(pe.witness, list):
        return False
    return all(x.denominator == 1 for x in pe.witness)


def _h2_vanishing(d: DivisorClass, model: SurfaceModel) -> tuple[bool, bool, str]:
    """Is h^0(K - D) = 0 certified?  Returns (certified, relative, reason)."""
    k_minus_d = model.canonical - d
    pe = is_pseudoeffective(k_minus_d, model)
    if pe.fails:
        return True, pe.relative_to != COMPLETE, "K - D is not pseudoeffective"
    big = is_big(d - model.canonical, model)
    if big.holds:
        # K - D effective would make 0 = (K - D) + (D - K) big
        return True, big.relative_to != COMPLETE, "D - K is big"
    return False, False, "could not exclude sections of K - D"


def h0_lower_bound(d: DivisorClass, model: SurfaceModel, supplied: int | None = None,
                   allow_relative: bool = False) -> H0Bound:
    """Certified lower bound for h^0(O_S(D)) of an integral class.

    Routes, best bound wins: Riemann-Roch once h^2 = 0 is certified, the
    nef-and-big rule on weak del Pezzo surfaces, an explicit effective
    representation (h^0 >= 1), and a caller-supplied value.
    """
    candidates: list[H0Bound] = [H0Bound(0, TRIVIAL, note="no vanishing argument applied")]
    if supplied is not None:
        candidates.append(H0Bound(int(supplied), USER_SUPPLIED, note="supplied by caller"))
    if not d.is_integral:
        return max(candidates, key=lambda b: b.lower)
    if d.is_zero:
        candidates.append(H0Bound(1, CLASS_TAG_RULE, note="h0(O_S) = 1"))
    chi = euler_char(d, model)
    certified, relative, reason = _h2_vanishing(d, model)
    if certified and (allow_relative or not relative):
        candidates.append(H0Bound(max(0, math.ceil(chi)), RIEMANN_ROCH, True, relative,
                                  note=f"{reason}; chi = {chi}"))
    elif model.invariants.tag("weak_del_pezzo"):
        nef, big = is_nef(d, model), is_big(d, model)
        rel = nef.relative_to != COMPLETE or big.relative_to != COMPLETE
        if nef.holds and big.holds and (allow_relative or not rel):
            # D - K = D + (-K) is nef and big when D is
            candidates.append(H0Bound(max(0, math.ceil(chi)), CLASS_TAG_RULE, True, rel,
                                      note=f"weak del Pezzo, D nef and big; chi = {chi}"))
    if has_integral_effective_representation(d, model):
        candidates.append(H0Bound(1, EFFECTIVE_REPRESENTATION,
                                  note="integral combination of effective generators"))
    best = candidates[0]
    for c in candidates[1:]:
        if c.lower > best.lower:
            best = c
    return best


def count_effective_representations(d: DivisorClass, model: SurfaceModel,
                                    limit: int = 100_000) -> int | None:
    """Number of nonnegative integer vectors ``b`` with ``sum b_j g_j = d``.

    Needs a grading functional to make the count finite; returns ``None``
    without one or when ``limit`` search nodes are exceeded.
    """
    from .positivity import grading

    if not d.is_integral:
        return 0
    h = grading(model)
    if h is None:
        return None
    gens = model.generator_classes
    degs = [model.pair(h, g) for g in gens]
    target = d.coords
    budget = [limit]
    rank = model.rank

    def walk(j: int, rest: tuple, room: Fraction) -> int:
        budget[0] -= 1
        if budget[0] < 0:
            raise OverflowError
        if j == len(gens):
            return int(not any(rest))
        total = 0
        b = 0
        g = gens[j].coords
        cur = rest
        while room - b * degs[j] >= 0:
            total += walk(j + 1, cur, room - b * degs[j])
            b += 1
            cur = tuple(cur[i] - g[i] for i in range(rank))
        return total

    try:
        return walk(0, target, model.pair(h, d))
    except OverflowError:
        return None
