"""Exact LP feasibility by phase-one simplex over the rationals.

Only feasibility is ever needed (cone membership, separating functionals,
gradings), so the solver minimises the sum of artificial variables and reads
a feasible point off the final basis. Bland's rule keeps it cycle-free.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence



def solve_nonnegative(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return ``x >= 0`` with ``a x = b``, or ``None`` when infeasible."""
    m = len(a)
    n = len(a[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    if m == 0:
        return [Fraction(0)] * n
    width = n + m
    basis = [n + i for i in range(m)]
    # reduced costs of min sum(artificials)
    cost = [-sum((rows[i][j] for i in range(m)), Fraction(0)) if j < n else Fraction(0)
            for j in range(width)]
    value = -sum((r[-1] for r in rows), Fraction(0))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: phase one is bounded below by 0
            raise ArithmeticError("phase-one objective unbounded")
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        f = cost[enter]
        cost = [c - f * y for c, y in zip(cost, rows[r][:width])]
        value -= f * rows[r][-1]
        basis[r] = enter

    if value != 0:
        return None
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    if any(x[n:]):
        return None
    return x[:n]


def nonnegative_combination(
    generators: Sequence[Sequence], target: Sequence
) -> list[Fraction] | None:
    """Coefficients ``lam >= 0`` with ``sum(lam_j * generators[j]) == target``."""
    dim = len(target)
    if not generators:
        return [] if not any(Fraction(t) for t in target) else None
    a = [[Fraction(g[i]) for g in generators] for i in range(dim)]
    return solve_nonnegative(a, target)


def strictly_positive_functional(
    rows: Sequence[Sequence], margin=1
) -> list[Fraction] | None:
    """Find a free vector ``y`` with ``r . y >= margin`` for every row ``r``."""
    if not rows:
        return None
    dim = len(rows[0])
    k = len(rows)
    # y = u - v with u, v >= 0 and a slack s_j >= 0 per row
    a = []
    for j, r in enumerate(rows):
        a.append([Fraction(x) for x in r] + [-Fraction(x) for x in r]
                 + [Fraction(-int(t == j)) for t in range(k)])
    sol = solve_nonnegative(a, [Fraction(margin)] * k)
    if sol is None:
        return None
    return [sol[i] - sol[dim + i] for i in range(dim)]


def separating_functional(
    rows: Sequence[Sequence], target: Sequence
) -> list[Fraction] | None:
    """Find ``y`` with ``r . y >= 0`` for all rows and ``target . y <= -1``.

    This is the Farkas certificate that ``target`` is outside the cone
    spanned by the rows.
    """
    dim = len(target)
    k = len(rows)
    a = []
    for j, r in enumerate(rows):
        a.append([Fraction(x) for x in r] + [-Fraction(x) for x in r]
                 + [Fraction(-int(t == j)) for t in range(k + 1)])
    a.append([-Fraction(x) for x in target] + [Fraction(x) for x in target]
             + [Fraction(-int(t == k)) for t in range(k + 1)])
    sol = solve_nonnegative(a, [Fraction(0)] * k + [Fraction(1)])
    if sol is None:
        return None
    return [sol[i] - sol[dim + i] for i in range(dim)]


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def dual_cone_rays(rows: Sequence[Sequence[int]], max_subsets: int = 20_000) -> list[tuple[int, ...]] | None:
    """Extreme rays of ``{y : r . y >= 0 for every row}`` for integer rows.

    Each ray is cut out by ``dim - 1`` independent rows; its direction is the
    vector of signed maximal minors. Returns primitive integer rays, or
    ``None`` when there are more than ``max_subsets`` row subsets to try or
    the rows do not span.
    """
    if not rows:
        return None
    rows = [tuple(int(x) for x in r) for r in rows]
    dim = len(rows[0])
    if dim == 1:
        signs = {(r[0] > 0) - (r[0] < 0) for r in rows if r[0]}
        return [(s,) for s in (1, -1) if -s not in signs]
    if math.comb(len(rows), dim - 1) > max_subsets:
        return None
    rays: set[tuple[int, ...]] = set()
    for sub in itertools.combinations(rows, dim - 1):
        v = [(-1) ** j * _int_det([list(r[:j] + r[j + 1:]) for r in sub]) for j in range(dim)]
        if not any(v):
            continue
        for sign in (1, -1):
            w = [sign * int(x) for x in v]
            if all(sum(a * b for a, b in zip(r, w)) >= 0 for r in rows):
                g = math.gcd(*w)
                rays.add(tuple(x // g for x in w))
    return sorted(rays)
