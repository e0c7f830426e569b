"""Cone predicates relative to a model's curve catalog.

Every predicate returns a :class:`PositivityVerdict`. ``relative_to`` says
whether the answer is unconditional (``complete``) or only valid if the
supplied generators/curves really are all of them. Negative answers backed
by an explicit witness (an effective class pairing negatively, a separating
nef functional, a disconnecting decomposition) are unconditional.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .lattice import DivisorClass, combine
from .lp import dual_cone_rays, nonnegative_combination, separating_functional, strictly_positive_functional
from .surface import SurfaceModel

COMPLETE = "complete"
RELATIVE = "supplied_generators_only"


class Answer(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown_within_bound"


@dataclass(frozen=True)
class PositivityVerdict:
    value: Answer
    relative_to: str = COMPLETE
    witness: Any = None
    bound_limited: bool = False
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.value is Answer.TRUE

    @property
    def fails(self) -> bool:
        return self.value is Answer.FALSE

    @property
    def definitive(self) -> bool:
        """Decided, and independent of catalog completeness and search bounds."""
        return (self.value is not Answer.UNKNOWN and self.relative_to == COMPLETE
                and not self.bound_limited)


def _verdict(value: bool, relative: bool = False, **kw) -> PositivityVerdict:
    return PositivityVerdict(Answer.TRUE if value else Answer.FALSE,
                             RELATIVE if relative else COMPLETE, **kw)


def _unknown(note: str, relative: bool = True, bound_limited: bool = False) -> PositivityVerdict:
    return PositivityVerdict(Answer.UNKNOWN, RELATIVE if relative else COMPLETE,
                             None, bound_limited, note)


# -- tag shortcuts -----------------------------------------------------------


def reference_class(model: SurfaceModel) -> DivisorClass | None:
    """First catalog curve of positive square, used to orient the positive cone."""
    for c in model.curves:
        if c.irreducible and c.self_int > 0:
            return c.cls
    return None


def _positive_cone_surface(model: SurfaceModel) -> bool:
    # abelian and hyperelliptic surfaces carry no negative curves, so the
    # effective and nef cones are both the closed positive cone
    inv = model.invariants
    return ((inv.tag("abelian") or inv.tag("hyperelliptic")) and model.canonical.is_zero
            and reference_class(model) is not None)


def _k_trivial_with_minus_two(model: SurfaceModel) -> str | None:
    inv = model.invariants
    if not model.canonical.is_zero or reference_class(model) is None:
        return None
    if inv.tag("k3"):
        return "k3"
    if inv.tag("enriques"):
        return "enriques"
    return None


# -- predicates ------------------------------------------------------------------


def is_pseudoeffective(d: DivisorClass, model: SurfaceModel) -> PositivityVerdict:
    """Membership of ``d`` in the cone spanned by the effective generators.

    The witness of a positive answer is the nonnegative coefficient list; of
    a negative answer, a class pairing nonnegatively with every generator and
    negatively with ``d``.
    """
    if d.is_zero:
        return _verdict(True, witness=[Fraction(0)] * len(model.effective_generators))
    if _positive_cone_surface(model):
        h = reference_class(model)
        inside = model.square(d) >= 0 and model.pair(d, h) >= 0
        return _verdict(inside, note="closed positive cone (no negative curves)")
    special = _k_trivial_with_minus_two(model)
    if special and d.is_integral:
        h = reference_class(model)
        lower = -2 if special == "k3" else 0
        if model.square(d) >= lower and model.pair(d, h) > 0:
            return _verdict(True, note=f"Riemann-Roch on a {special} surface: D is effective")
    gens = model.generator_classes
    lam = nonnegative_combination([g.coords for g in gens], d.coords)
    if lam is not None:
        return _verdict(True, witness=lam)
    if not model.effective_cone_polyhedral:
        return _unknown("effective cone not known to be polyhedral; no combination found")
    sep = separating_functional([[model.pair(DivisorClass.basis(model.rank, i), g)
                                  for i in range(model.rank)] for g in gens],
                                [model.pair(DivisorClass.basis(model.rank, i), d)
                                 for i in range(model.rank)])
    witness = DivisorClass(tuple(sep)) if sep is not None else None
    if witness is not None:
        assert all(model.pair(witness, g) >= 0 for g in gens) and model.pair(witness, d) < 0
    return _verdict(False, witness=witness, note="outside the effective cone")


def is_nef(d: DivisorClass, model: SurfaceModel) -> PositivityVerdict:
    if _positive_cone_surface(model):
        h = reference_class(model)
        return _verdict(model.square(d) >= 0 and model.pair(d, h) >= 0,
                        note="closed positive cone (no negative curves)")
    gens = model.effective_generators
    for i in gens:
        value = model.pair(d, model.curves[i].cls)
        if value < 0:
            return _verdict(False, witness=(i, value),
                            note=f"negative on {model.curve_label(i)}")
    if not gens and not model.effective_cone_polyhedral:
        return _unknown("no effective generators supplied")
    return _verdict(True, relative=not model.effective_cone_polyhedral)


def is_big(d: DivisorClass, model: SurfaceModel) -> PositivityVerdict:
    """Big iff pseudoeffective with Zariski positive part of positive square."""
    if _positive_cone_surface(model):
        h = reference_class(model)
        return _verdict(model.square(d) > 0 and model.pair(d, h) > 0,
                        note="interior of the positive cone")
    if _k_trivial_with_minus_two(model):
        h = reference_class(model)
        if model.square(d) > 0 and model.pair(d, h) > 0:
            return _verdict(True, note="positive square and positive degree")
    pe = is_pseudoeffective(d, model)
    if pe.value is Answer.FALSE:
        return PositivityVerdict(Answer.FALSE, pe.relative_to, pe.witness, note="not pseudoeffective")
    from .zariski import zariski_decompose

    z = zariski_decompose(d, model)
    relative = z.relative or pe.relative_to != COMPLETE
    if pe.value is Answer.UNKNOWN:
        # P^2 > 0 still decides bigness if d turns out pseudoeffective
        return PositivityVerdict(Answer.UNKNOWN, RELATIVE, z,
                                 note="pseudoeffectivity undecided")
    p2 = model.square(z.positive)
    return _verdict(p2 > 0, relative=relative, witness=z, note=f"P^2 = {p2}")


def grading(model: SurfaceModel) -> DivisorClass | None:
    """A class ``h`` with ``h . g >= 1`` for every effective generator."""
    rows = [[model.pair(DivisorClass.basis(model.rank, i), g) for i in range(model.rank)]
            for g in model.generator_classes]
    y = strictly_positive_functional(rows)
    return DivisorClass(tuple(y)) if y is not None else None


@functools.lru_cache(maxsize=64)
def generator_dual_rays(model: SurfaceModel) -> tuple[DivisorClass, ...] | None:
    """Extreme rays of the classes pairing nonnegatively with every generator."""
    rows = [[model.pair(DivisorClass.basis(model.rank, i), g) for i in range(model.rank)]
            for g in model.generator_classes]
    rays = dual_cone_rays(rows)
    return None if rays is None else tuple(DivisorClass(r) for r in rays)


class SearchLimit(RuntimeError):
    pass


def _int_walls(model: SurfaceModel, rays) -> list[tuple[int, ...]]:
    """Rows ``x -> ray . x`` as integer vectors."""
    return [tuple(int(model.pair(r, DivisorClass.basis(model.rank, i))) for i in range(model.rank))
            for r in rays]


def effective_classes_up_to(model: SurfaceModel, h: DivisorClass, max_degree: Fraction,
                            coeff_bound: int, max_states: int = 200_000,
                            below: DivisorClass | None = None) -> dict[tuple, tuple[int, ...]]:
    """Classes ``sum b_j g_j`` with ``h``-degree <= ``max_degree``.

    Maps class coordinates to the representation found first, searching by
    increasing total coefficient and lexicographically within a level; each
    stored representation has coefficients <= ``coeff_bound``. With
    ``below``, classes ``A`` for which ``below - A`` leaves the generator cone
    are dropped (checked on the dual rays when those are affordable). Every
    prefix of a kept representation is kept too, so the pruning never
    changes the stored representations.
    """
    gens = [tuple(int(x) for x in g.coords) for g in model.generator_classes]
    # integer degrees: scale h by the common denominator
    raw = [model.pair(h, g) for g in model.generator_classes]
    scale = math.lcm(*(x.denominator for x in raw), Fraction(max_degree).denominator)
    degs = [int(x * scale) for x in raw]
    top = math.floor(max_degree * scale)
    rays = generator_dual_rays(model) if below is not None else None
    rows = _int_walls(model, rays) if rays else []
    caps = [sum(a * int(b) for a, b in zip(r, below.coords)) for r in rows]
    steps = [tuple(sum(a * b for a, b in zip(r, g)) for r in rows) for g in gens]
    zero = tuple([0] * model.rank)
    found: dict[tuple, tuple[int, ...]] = {zero: tuple([0] * len(gens))}
    degree = {zero: 0}
    level = {zero: tuple([0] * len(rows))}
    rejected: set[tuple] = set()
    frontier = [zero]
    while frontier:
        nxt = []
        for cls in frontier:
            rep = found[cls]
            deg = degree[cls]
            for j, g in enumerate(gens):
                if rep[j] >= coeff_bound or deg + degs[j] > top:
                    continue
                new = tuple(a + b for a, b in zip(cls, g))
                if new in found or new in rejected:
                    continue
                vals = tuple(a + b for a, b in zip(level[cls], steps[j]))
                if any(v > c for v, c in zip(vals, caps)):
                    rejected.add(new)
                    continue
                found[new] = rep[:j] + (rep[j] + 1,) + rep[j + 1:]
                degree[new] = deg + degs[j]
                level[new] = vals
                nxt.append(new)
                if len(found) > max_states:
                    raise SearchLimit(f"more than {max_states} effective classes")
        nxt.sort(key=found.__getitem__)
        frontier = nxt
    return found


def _represent(target: tuple[int, ...], gens: list[tuple[int, ...]], bound: int,
               rows: list[tuple[int, ...]], max_states: int) -> tuple[int, ...] | None:
    """Lexicographically smallest ``b`` in ``[0, bound]^k`` with ``sum b_j g_j = target``.

    Depth-first over generators; a partial remainder must stay in the
    generator cone (every dual row nonnegative) or the branch is cut.
    """
    k = len(gens)
    dead: set[tuple] = set()
    zero = tuple([0] * len(target))

    def inside(x):
        return all(sum(a * b for a, b in zip(r, x)) >= 0 for r in rows)

    def go(j, rest):
        if rest == zero:
            return (0,) * (k - j)
        if j == k or (j, rest) in dead:
            return None
        for v in range(bound + 1):
            cur = tuple(x - v * y for x, y in zip(rest, gens[j]))
            if not inside(cur):
                if v > 0:
                    break
                continue
            tail = go(j + 1, cur)
            if tail is not None:
                return (v,) + tail
        dead.add((j, rest))
        if len(dead) > max_states:
            raise SearchLimit(f"more than {max_states} partial representations")
        return None

    return go(0, target)


def find_disconnecting_decomposition(d: DivisorClass, model: SurfaceModel, bound: int,
                                     max_states: int = 200_000):
    """Integral effective ``d = A + B`` with ``A, B != 0`` and ``A . B <= 0``.

    Returns ``(a_coeffs, b_coeffs)`` over the effective generators, or
    ``None``. When the dual rays of the generator cone are available only
    the part of smaller grading degree is tabulated (the roles of ``A`` and
    ``B`` are symmetric) and the other part is represented on demand;
    ``a_coeffs`` is then the smallest hit among the lighter parts.
    Raises :class:`SearchLimit` past ``max_states``.
    """
    if not d.is_integral:
        return None
    gens = model.generator_classes
    h = grading(model)
    if h is not None:
        top = model.pair(h, d)
        target = tuple(int(x) for x in d.coords)
        zero = tuple([0] * model.rank)
        q = [[int(x) for x in row] for row in model.form.matrix]

        def dot(a, b):
            return sum(a[i] * q[i][j] * b[j] for i in range(len(a)) for j in range(len(b)) if a[i] and b[j])

        rays = generator_dual_rays(model)
        if rays is not None:
            rows = _int_walls(model, rays)
            int_gens = [tuple(int(x) for x in g.coords) for g in gens]
            table = effective_classes_up_to(model, h, top / 2, bound, max_states, below=d)
            for cls, rep in sorted(table.items(), key=lambda kv: kv[1]):
                rest = tuple(x - y for x, y in zip(target, cls))
                if cls == zero or rest == zero or dot(cls, rest) > 0:
                    continue
                other = _represent(rest, int_gens, bound, rows, max_states)
                if other is not None:
                    return (rep, other)
            return None
        table = effective_classes_up_to(model, h, top, bound, max_states, below=d)
        hits = []
        for cls, rep in table.items():
            if cls == zero:
                continue
            rest = tuple(x - y for x, y in zip(target, cls))
            if rest == zero or rest not in table:
                continue
            if dot(cls, rest) <= 0:
                hits.append((rep, table[rest]))
        return min(hits) if hits else None
    # no grading: plain box
    k = len(gens)
    for a_vec in itertools.product(range(bound + 1), repeat=k):
        if not any(a_vec):
            continue
        a = combine(a_vec, gens, model.rank)
        rest = d - a
        if rest.is_zero:
            continue
        for b_vec in itertools.product(range(bound + 1), repeat=k):
            if any(b_vec) and combine(b_vec, gens, model.rank) == rest:
                if model.pair(a, rest) <= 0:
                    return (a_vec, b_vec)
                break
    return None


def is_numerically_connected(d: DivisorClass, model: SurfaceModel,
                             search_bound: int = 10) -> PositivityVerdict:
    """Three tiers: nef and big (Ramanujam's lemma), integral falsifier, unknown."""
    pe = is_pseudoeffective(d, model)
    if pe.value is Answer.FALSE:
        return PositivityVerdict(Answer.FALSE, pe.relative_to, None, note="not pseudoeffective")
    nef = is_nef(d, model)
    if nef.holds:
        big = is_big(d, model)
        if big.holds:
            relative = nef.relative_to != COMPLETE or big.relative_to != COMPLETE
            return _verdict(True, relative=relative, note="nef and big (Ramanujam connectedness)")
    try:
        hit = find_disconnecting_decomposition(d, model, search_bound)
    except SearchLimit as exc:
        return _unknown(f"search stopped: {exc}", relative=not model.effective_cone_polyhedral,
                        bound_limited=True)
    if hit is not None:
        gens = model.generator_classes
        a = combine(hit[0], gens, model.rank)
        b = combine(hit[1], gens, model.rank)
        ab = model.pair(a, b)
        assert a + b == d and not a.is_zero and not b.is_zero and ab <= 0
        return _verdict(False, witness={"A": a, "B": b, "A_coeffs": hit[0],
                                        "B_coeffs": hit[1], "AB": ab},
                        note="disconnecting decomposition")
    return _unknown(f"no integral decomposition with A.B <= 0 within bound {search_bound}",
                    relative=not model.effective_cone_polyhedral, bound_limited=True)


def verify_witness(predicate: str, verdict: PositivityVerdict, d: DivisorClass,
                   model: SurfaceModel) -> bool:
    """Re-check a verdict's witness against its defining inequality."""
    w = verdict.witness
    if w is None:
        return True
    gens = model.generator_classes
    if predicate == "pseudoeffective":
        if verdict.holds:
            return all(x >= 0 for x in w) and combine(w, gens, model.rank) == d
        return all(model.pair(w, g) >= 0 for g in gens) and model.pair(w, d) < 0
    if predicate == "nef":
        i, value = w
        return not verdict.holds and model.pair(d, model.curves[i].cls) == value < 0
    if predicate == "numerically_connected":
        return (w["A"] + w["B"] == d and model.pair(w["A"], w["B"]) <= 0
                and combine(w["A_coeffs"], gens, model.rank) == w["A"]
                and combine(w["B_coeffs"], gens, model.rank) == w["B"])
    if predicate == "big":
        from .zariski import check_decomposition

        check_decomposition(w, model)
        return (model.square(w.positive) > 0) == verdict.holds
    if predicate == "z_positive":
        support, coeffs = w
        b = combine(coeffs, [model.curves[i].cls for i in support], model.rank)
        return all(model.pair(b, model.curves[i].cls) >= model.pair(d, model.curves[i].cls)
                   for i in support)
    raise ValueError(f"unknown predicate {predicate!r}")
