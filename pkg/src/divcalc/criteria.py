"""Executable numerical criteria: instability hypothesis, destabilizer search,
Reider-type obstructions, Miyaoka-Sakai multiples and weak exponents."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import DivisorClass, combine
from .numerics import H0Bound, correction_constant, h0_lower_bound, RIEMANN_ROCH
from .positivity import (COMPLETE, PositivityVerdict, grading, is_big, is_nef)
from .surface import SurfaceModel
from .zariski import integral_zariski_decompose, zariski_decompose


class CriterionError(ValueError):
    pass


class HypothesisViolation(CriterionError):
    pass


class CapExhausted(CriterionError):
    def __init__(self, message: str, reason: str, chain: list):
        super().__init__(message)
        self.reason = reason
        self.chain = chain


# -- instability hypothesis ----------------------------------------------------------


@dataclass(frozen=True)
class BogomolovCheck:
    holds: bool
    margin: Fraction
    discriminant: Fraction
    c_s: Fraction


def bogomolov_hypothesis(c1: DivisorClass, c2: int, model: SurfaceModel,
                         ceil: bool = False) -> BogomolovCheck:
    """Is ``c1^2 - 4 c2 > 4 C_S``?  ``margin`` is the left side minus the right."""
    cs = correction_constant(model.invariants, ceil).value
    disc = model.square(c1) - 4 * Fraction(c2)
    margin = disc - 4 * cs
    return BogomolovCheck(margin > 0, margin, disc, cs)


# -- destabilizer search ------------------------------------------------------------


@dataclass(frozen=True)
class DestabilizerWitness:
    divisor: DivisorClass
    b: DivisorClass
    coeffs: tuple[int, ...]
    d_minus_b_dot_b: Fraction
    d_square: Fraction
    d_minus_2b_square: Fraction
    bigness: PositivityVerdict

    def __post_init__(self):
        if self.b.is_zero:
            raise ValueError("destabilizer must be nonzero")
        if self.d_minus_b_dot_b > 0:
            raise ValueError("(D - B).B must be <= 0")
        if self.d_minus_2b_square < self.d_square:
            raise ValueError("(D - 2B)^2 must be >= D^2")
        if self.d_minus_2b_square != self.d_square - 4 * self.d_minus_b_dot_b:
            raise ValueError("(D - 2B)^2 = D^2 - 4 (D - B).B fails")
        if not self.bigness.holds:
            raise ValueError("D - 2B must be big")

    def verify(self, model: SurfaceModel) -> bool:
        """Recompute every condition from scratch."""
        d, b = self.divisor, self.b
        if combine(self.coeffs, model.generator_classes, model.rank) != b:
            return False
        dmb = model.pair(d - b, b)
        sq = model.square(d - b * 2)
        return (not b.is_zero and dmb <= 0 and sq >= model.square(d)
                and sq == model.square(d) - 4 * dmb and is_big(d - b * 2, model).holds)


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of a bounded search: a witness or none within the bound."""

    witness: DestabilizerWitness | None
    bound: int
    exhaustive_box: bool
    nodes: int
    note: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None


def _check_ms_hypothesis(d: DivisorClass, model: SurfaceModel) -> Fraction:
    cs = correction_constant(model.invariants).value
    big = is_big(d, model)
    if not big.holds:
        raise HypothesisViolation(f"D = {d} is not certified big ({big.value.value})")
    d2 = model.square(d)
    if d2 <= 4 * cs:
        raise HypothesisViolation(f"D^2 = {d2} is not > 4 C_S = {4 * cs}")
    return cs


def ms_destabilizer_search(d: DivisorClass, model: SurfaceModel, coeff_bound: int = 10,
                           max_nodes: int = 500_000) -> ObstructionReport:
    """First ``B = sum b_j g_j`` (lexicographic, ``0 <= b_j <= coeff_bound``)
    with ``(D - B).B <= 0``, ``D - 2B`` big and ``(D - 2B)^2 >= D^2``.

    On a polyhedral cone with a grading ``h`` any hit has ``h.B <= h.D / 2``
    (``D - 2B`` is pseudoeffective), which prunes the box without changing
    the first hit.
    """
    _check_ms_hypothesis(d, model)
    gens = model.generator_classes
    k = len(gens)
    h = grading(model) if model.effective_cone_polyhedral else None
    cap = model.pair(h, d) / 2 if h is not None else None
    degs = [model.pair(h, g) for g in gens] if h is not None else [Fraction(0)] * k
    d2 = model.square(d)
    nodes = 0
    truncated = False
    rank = model.rank

    def test(coeffs: tuple[int, ...]) -> DestabilizerWitness | None:
        b = combine(coeffs, gens, rank)
        dmb = model.pair(d - b, b)
        if dmb > 0:
            return None
        rest = d - b * 2
        sq = model.square(rest)
        if sq < d2:
            return None
        big = is_big(rest, model)
        if not big.holds:
            return None
        return DestabilizerWitness(d, b, coeffs, dmb, d2, sq, big)

    def walk(prefix: list[int], deg: Fraction):
        nonlocal nodes, truncated
        j = len(prefix)
        if j == k:
            if any(prefix):
                nodes += 1
                if nodes > max_nodes:
                    truncated = True
                    return None
                return test(tuple(prefix))
            return None
        for v in range(coeff_bound + 1):
            nd = deg + v * degs[j]
            if cap is not None and nd > cap:
                break
            hit = walk(prefix + [v], nd)
            if hit is not None or truncated:
                return hit
        return None

    witness = walk([], Fraction(0))
    note = "first hit in lexicographic order" if witness else "none within bound"
    if truncated:
        note = f"stopped after {max_nodes} candidates"
    return ObstructionReport(witness, coeff_bound, not truncated, nodes, note)


# -- Reider-type obstructions --------------------------------------------------------

BASEPOINT_FREE = "basepoint_free"
VERY_AMPLE = "very_ample"

_ROWS = {
    BASEPOINT_FREE: {(1, 0): "DB=1, B^2=0", (0, -1): "DB=0, B^2=-1"},
    VERY_AMPLE: {
        (0, -2): "DB=0, B^2=-2",
        (0, -1): "DB=0, B^2=-1",
        (1, -1): "DB=1, B^2=-1",
        (1, 0): "DB=1, B^2=0",
        (2, 0): "DB=2, B^2=0",
    },
}
_DEG_Z = {BASEPOINT_FREE: 1, VERY_AMPLE: 2}
_EXTRA = {BASEPOINT_FREE: 5, VERY_AMPLE: 9}


@dataclass(frozen=True)
class ReiderObstruction:
    b: DivisorClass
    coeffs: tuple[int, ...] | None
    db: Fraction
    b_square: Fraction
    case_label: str


@dataclass(frozen=True)
class ReiderReport:
    level: str
    hypothesis_ok: bool
    d_square: Fraction
    threshold: Fraction
    obstructions: tuple[ReiderObstruction, ...]
    proof_chain: tuple[ReiderObstruction, ...]
    exceptional_case: ReiderObstruction | None
    complete: bool
    bound_note: str

    @property
    def obstructed(self) -> bool:
        return bool(self.obstructions) or self.exceptional_case is not None


def _normalize_level(level: str) -> str:
    lv = level.replace("-", "_").lower()
    if lv in ("bpf", BASEPOINT_FREE):
        return BASEPOINT_FREE
    if lv == VERY_AMPLE:
        return VERY_AMPLE
    raise ValueError(f"unknown level {level!r}")


def reider_check(d: DivisorClass, model: SurfaceModel, level: str = BASEPOINT_FREE,
                 coeff_bound: int = 10, max_nodes: int = 200_000) -> ReiderReport:
    """Enumerate effective ``B`` matching the obstruction rows for ``K + D``.

    Candidates are nonzero combinations of effective generators with
    coefficients <= ``coeff_bound`` and ``D.B <= 3``. Theorem rows and the
    proof-level chain ``DB - deg Z <= B^2 < DB/2 < deg Z`` are reported
    separately.
    """
    level = _normalize_level(level)
    nef = is_nef(d, model)
    if nef.fails:
        raise HypothesisViolation(f"D = {d} is not nef")
    cs = correction_constant(model.invariants).value
    d2 = model.square(d)
    threshold = 4 * cs + _EXTRA[level]
    gens = model.generator_classes
    k = len(gens)
    dg = [model.pair(d, g) for g in gens]
    deg_z = _DEG_Z[level]
    rows = _ROWS[level]
    # D.B <= 3 covers every row and the collapsed DB = 3 case
    db_cap = 3
    caps = [min(coeff_bound, int(db_cap // x)) if x > 0 else coeff_bound for x in dg]
    seen: dict[tuple, tuple[int, ...]] = {}
    budget = [max_nodes]

    def walk(prefix: list[int], db: Fraction):
        budget[0] -= 1
        if budget[0] < 0:
            return
        j = len(prefix)
        if j == k:
            if any(prefix):
                b = combine(prefix, gens, model.rank)
                seen.setdefault(b.coords, tuple(prefix))
            return
        for v in range(caps[j] + 1):
            nd = db + v * dg[j]
            if nd > db_cap:
                break
            walk(prefix + [v], nd)

    walk([], Fraction(0))
    obstructions, chain = [], []
    for coords, coeffs in sorted(seen.items(), key=lambda kv: kv[1]):
        b = DivisorClass(coords)
        db, b2 = model.pair(d, b), model.square(b)
        label = rows.get((db, b2))
        if label is not None:
            obstructions.append(ReiderObstruction(b, coeffs, db, b2, label))
        if db - deg_z <= b2 < db / 2 < deg_z:
            tag = label or ("DB=3, B^2=1 (collapses into D = 3B)" if (db, b2) == (3, 1)
                            else f"DB={db}, B^2={b2}")
            chain.append(ReiderObstruction(b, coeffs, db, b2, tag))
    exceptional = None
    if level == VERY_AMPLE and cs == 0 and d2 == 9:
        b = d / 3
        if b.is_integral:
            exceptional = ReiderObstruction(b, seen.get(b.coords), model.pair(d, b),
                                            model.square(b), "C_S=0, D^2=9, D = 3B")
    positive_everywhere = all(x >= 1 for x in dg)
    complete = (model.effective_cone_polyhedral and positive_everywhere
                and coeff_bound >= db_cap and nef.relative_to == COMPLETE and budget[0] >= 0)
    note = f"coefficients <= {coeff_bound}, D.B <= {db_cap}; "
    if budget[0] < 0:
        note += f"stopped after {max_nodes} nodes"
    else:
        note += "exhaustive" if complete else "bounded: D vanishes on a generator or cone not polyhedral"
    return ReiderReport(level, d2 >= threshold, d2, threshold, tuple(obstructions), tuple(chain),
                        exceptional, complete, note)


# -- multiples and exponents --------------------------------------------------------


@dataclass(frozen=True)
class MSMultiple:
    m: int
    positive: DivisorClass
    denominator: int
    c_s: Fraction
    margin: Fraction
    previous_fails: str
    d_square_positive: bool


def ms_multiple(d: DivisorClass, model: SurfaceModel, ceil: bool = False) -> MSMultiple:
    """Smallest ``m`` with ``mP`` integral and ``(mP)^2 > 4 C_S``.

    Only ``P^2 > 0`` is needed for ``m`` to exist; whether ``D^2 > 0`` also
    holds (needed to call ``kmD`` a Miyaoka-Sakai divisor) is recorded.
    """
    if not is_big(d, model).holds:
        raise HypothesisViolation("D is not certified big")
    cs = correction_constant(model.invariants, ceil).value
    p = zariski_decompose(d, model).positive
    p2 = model.square(p)
    den = p.denominator
    k = 1
    while (den * k) ** 2 * p2 <= 4 * cs:
        k += 1
    m = den * k
    if m == 1:
        why = "m = 1 is the least positive integer"
    elif not (p * (m - 1)).is_integral:
        why = f"{m - 1}P is not integral"
    else:
        why = f"({m - 1}P)^2 = {(m - 1) ** 2 * p2} <= {4 * cs}"
    return MSMultiple(m, p, den, cs, m * m * p2 - 4 * cs, why, model.square(d) > 0)


@dataclass(frozen=True)
class ExponentStep:
    e: int
    multiple: DivisorClass
    positive_z: DivisorClass
    bound: H0Bound


@dataclass(frozen=True)
class WeakMSExponent:
    e: int
    h1_nilpotent: int
    chain: tuple[ExponentStep, ...] = field(default=())


def weak_ms_exponent(d: DivisorClass, model: SurfaceModel, e_cap: int = 6,
                     allow_relative: bool = False) -> WeakMSExponent:
    """First ``e <= e_cap`` with a certified ``h^0(P_Z(p^e D)) > h^1_n``."""
    h1n = model.invariants.h1_nilpotent
    if h1n is None:
        raise HypothesisViolation("h1_nilpotent is unknown")
    if not d.is_integral:
        raise HypothesisViolation("D must be integral")
    if not is_big(d, model).holds:
        raise HypothesisViolation("D is not certified big")
    p = model.invariants.char_p
    chain = []
    for e in range(e_cap + 1):
        mult = d * p ** e
        iz = integral_zariski_decompose(mult, model)
        bound = h0_lower_bound(iz.positive, model, allow_relative=allow_relative)
        chain.append(ExponentStep(e, mult, iz.positive, bound))
        if bound.lower > h1n:
            return WeakMSExponent(e, h1n, tuple(chain))
    certified = any(s.bound.method == RIEMANN_ROCH or s.bound.h2_vanishing_certified
                    for s in chain)
    reason = "inequality_false" if certified else "bound_method_failed"
    raise CapExhausted(f"no exponent up to {e_cap} ({reason})", reason, chain)
