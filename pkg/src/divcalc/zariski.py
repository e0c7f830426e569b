"""Rational and integral Zariski decompositions, and Z-positivity.

The rational decomposition grows the negative support until the positive
part is nef on every catalog curve. The integral one starts from the
roundup of the positive part, taken on the prime decomposition
``P = D - sum a_i C_i``, and pushes back components of the integral
negative part on which the current positive part is strictly positive.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .lattice import DivisorClass, combine, is_negative_definite, solve_gram, solve_linear
from .positivity import Answer, PositivityVerdict, is_pseudoeffective, COMPLETE, RELATIVE
from .surface import SurfaceModel


class ZariskiError(ValueError):
    pass


class NotPseudoeffective(ZariskiError):
    pass


@dataclass(frozen=True)
class ZariskiDecomposition:
    divisor: DivisorClass
    positive: DivisorClass
    negative: DivisorClass
    support: tuple[int, ...]
    coeffs: tuple[Fraction, ...]
    relative: bool = False

    def coefficient(self, i: int) -> Fraction:
        return dict(zip(self.support, self.coeffs)).get(i, Fraction(0))


@dataclass(frozen=True)
class IntegralZariskiDecomposition:
    divisor: DivisorClass
    positive: DivisorClass
    negative: DivisorClass
    support: tuple[int, ...]
    coeffs: tuple[int, ...]
    rational: ZariskiDecomposition
    steps: tuple[int, ...] = ()

    @property
    def relative(self) -> bool:
        return self.rational.relative

    def coefficient(self, i: int) -> int:
        return dict(zip(self.support, self.coeffs)).get(i, 0)


def _negative_part(model: SurfaceModel, support, coeffs) -> DivisorClass:
    return combine(coeffs, [model.curves[i].cls for i in support], model.rank)


def zariski_decompose(d: DivisorClass, model: SurfaceModel) -> ZariskiDecomposition:
    """Zariski decomposition ``d = P + N`` relative to the catalog curves."""
    pe = is_pseudoeffective(d, model)
    if pe.value is Answer.FALSE:
        raise NotPseudoeffective(f"{d} is not pseudoeffective")
    relative = pe.relative_to != COMPLETE or pe.value is Answer.UNKNOWN \
        or not model.negative_curves_complete
    candidates = model.negative_curve_indices
    curves = model.curves
    support = [i for i in candidates if model.pair(d, curves[i].cls) < 0]
    while True:
        coeffs = solve_gram([curves[i].cls for i in support],
                            [model.pair(d, curves[i].cls) for i in support], model.form)
        positive = d - _negative_part(model, support, coeffs)
        grow = [i for i in candidates if i not in support and model.pair(positive, curves[i].cls) < 0]
        if not grow:
            break
        support = sorted(support + grow)
    if any(a < 0 for a in coeffs):
        raise ZariskiError("negative Zariski coefficient: curve catalog is inconsistent")
    kept = [(i, a) for i, a in zip(support, coeffs) if a > 0]
    support = tuple(i for i, _ in kept)
    coeffs = tuple(a for _, a in kept)
    for i, c in enumerate(curves):
        if c.irreducible and model.pair(positive, c.cls) < 0:
            raise NotPseudoeffective(f"positive part is negative on {model.curve_label(i)}")
    return ZariskiDecomposition(d, positive, _negative_part(model, support, coeffs),
                                support, coeffs, relative)


def check_decomposition(z: ZariskiDecomposition, model: SurfaceModel) -> None:
    """Assert every defining property of a rational Zariski decomposition."""
    curves = model.curves
    assert z.positive + z.negative == z.divisor
    assert _negative_part(model, z.support, z.coeffs) == z.negative
    assert all(a > 0 for a in z.coeffs)
    assert all(model.pair(z.positive, curves[i].cls) == 0 for i in z.support)
    assert is_negative_definite([curves[i].cls for i in z.support], model.form)
    assert all(model.pair(z.positive, c.cls) >= 0 for c in curves if c.irreducible)


def integral_zariski_decompose(
    d: DivisorClass,
    model: SurfaceModel,
    pick: Callable[[list[int]], int] | None = None,
    rational: ZariskiDecomposition | None = None,
) -> IntegralZariskiDecomposition:
    """Integral Zariski decomposition ``d = P_Z + N_Z`` of an integral class.

    ``pick`` chooses which eligible component to move back at each step;
    the default is the lowest catalog index. The result does not depend on
    it. A precomputed rational decomposition of ``d`` may be passed in.
    """
    if not d.is_integral:
        raise ValueError("integral Zariski decomposition needs an integral class")
    z = rational if rational is not None else zariski_decompose(d, model)
    if z.divisor != d:
        raise ValueError("rational decomposition belongs to a different class")
    counts = {i: math.floor(a) for i, a in zip(z.support, z.coeffs)}
    curves = model.curves
    positive = d - _negative_part(model, list(counts), list(counts.values()))
    steps = []
    while True:
        eligible = [i for i in z.support
                    if counts[i] > 0 and model.pair(positive, curves[i].cls) > 0]
        if not eligible:
            break
        i = pick(eligible) if pick else eligible[0]
        positive = positive + curves[i].cls
        counts[i] -= 1
        steps.append(i)
    support = tuple(i for i in z.support if counts[i] > 0)
    coeffs = tuple(counts[i] for i in support)
    return IntegralZariskiDecomposition(
        d, positive, _negative_part(model, support, coeffs), support, coeffs, z, tuple(steps)
    )


def check_integral_decomposition(iz: IntegralZariskiDecomposition, model: SurfaceModel) -> None:
    curves = model.curves
    z = iz.rational
    assert iz.positive + iz.negative == iz.divisor
    assert iz.positive.is_integral and iz.negative.is_integral
    assert all(c > 0 for c in iz.coeffs)
    assert all(model.pair(iz.positive, curves[i].cls) <= 0 for i in iz.support)
    assert is_negative_definite([curves[i].cls for i in iz.support], model.form)
    # P <= P_Z <= D measured on the prime decomposition of N
    for i, a in zip(z.support, z.coeffs):
        assert 0 <= iz.coefficient(i) <= math.floor(a)
    assert set(iz.support) <= set(z.support)


# -- Z-positivity --------------------------------------------------------------


def _connected_definite_supports(model: SurfaceModel, seeds: Sequence[int], pool: Sequence[int],
                                 limit: int = 20_000) -> tuple[list[tuple[int, ...]], bool]:
    """Connected negative definite subsets of ``pool`` meeting ``seeds``.

    The flag is true when more than ``limit`` subsets were visited.
    """
    curves = model.curves
    pool = list(pool)
    adj = {i: [j for j in pool if j != i and model.pair(curves[i].cls, curves[j].cls) != 0]
           for i in pool}
    seen: set[frozenset] = set()
    stack = [frozenset([s]) for s in seeds]
    out = []
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        if len(seen) > limit:
            return sorted(out, key=lambda t: (len(t), t)), True
        if not is_negative_definite([curves[i].cls for i in sorted(s)], model.form):
            continue
        out.append(tuple(sorted(s)))
        if len(s) >= model.rank - 1:
            continue
        for i in s:
            for j in adj[i]:
                if j not in s:
                    stack.append(s | {j})
    out.sort(key=lambda t: (len(t), t))
    return out, False


def is_Z_positive(d: DivisorClass, model: SurfaceModel, coeff_bound: int = 10,
                  support_limit: int = 20_000) -> PositivityVerdict:
    """Bounded test of Z-positivity.

    ``d`` fails exactly when some effective ``B > 0`` with negative definite
    support satisfies ``B . C >= d . C`` on every component ``C``. Such a
    ``B`` may be taken connected and must contain a curve with ``d . C < 0``
    (sum the inequalities against ``B`` and use ``B^2 < 0``). On a support
    with Gram matrix ``G`` the inverse of the M-matrix ``-G`` is entrywise
    nonnegative, which caps every coefficient by ``G^{-1} (d . C)``; when
    those caps fit under ``coeff_bound`` the search is exhaustive.
    """
    curves = model.curves
    negatives = model.negative_curve_indices
    seeds = [i for i in negatives if model.pair(d, curves[i].cls) < 0]
    supports, truncated = _connected_definite_supports(model, seeds, negatives, support_limit)
    for s in supports:
        classes = [curves[i].cls for i in s]
        gram = model.form.gram(classes)
        targets = [model.pair(d, c) for c in classes]
        m_matrix = all(gram[a][b] >= 0 for a in range(len(s)) for b in range(len(s)) if a != b)
        if m_matrix:
            caps_exact = solve_linear(gram, targets)
            if any(c < 1 for c in caps_exact):
                continue
            caps = [math.floor(c) for c in caps_exact]
        else:
            caps = [coeff_bound] * len(s)
            truncated = True
        if any(c > coeff_bound for c in caps):
            truncated = True
            caps = [min(c, coeff_bound) for c in caps]
        for b in itertools.product(*(range(1, c + 1) for c in caps)):
            violated = True
            for row, t in zip(gram, targets):
                if sum(x * y for x, y in zip(row, b)) < t:
                    violated = False
                    break
            if violated:
                return PositivityVerdict(
                    Answer.FALSE, COMPLETE, (s, b),
                    note=f"B = {combine(b, classes, model.rank)} is nef over itself relative to D",
                )
    relative = not model.negative_curves_complete
    return PositivityVerdict(
        Answer.TRUE, RELATIVE if relative else COMPLETE, None, truncated,
        note=("search truncated by the coefficient or support limit" if truncated
              else "exhaustive over catalog"),
    )
