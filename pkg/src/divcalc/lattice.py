"""Exact intersection theory on a Neron-Severi lattice.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere in the package. An :class:`IntersectionForm` is validated at
construction to be symmetric, nondegenerate and of hyperbolic signature
``(1, rank - 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence


class LatticeError(ValueError):
    """Base class for lattice-level input errors."""


class DimensionMismatch(LatticeError):
    pass


class AsymmetricFormError(LatticeError):
    pass


class DegenerateFormError(LatticeError):
    pass


class SignatureError(LatticeError):
    pass


class GramError(LatticeError):
    """Raised when a Gram matrix that must be negative definite is not.

    ``minor_index`` is the size ``k`` of the first leading principal minor
    with the wrong sign and ``minor_value`` its determinant.
    """

    def __init__(self, message: str, minor_index: int, minor_value: Fraction):
        super().__init__(message)
        self.minor_index = minor_index
        self.minor_value = minor_value


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int, Fraction or 'p/q' string")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


@dataclass(frozen=True)
class DivisorClass:
    """A rational class written in the fixed lattice basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> DivisorClass:
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, index: int) -> DivisorClass:
        return cls(tuple(int(i == index) for i in range(rank)))

    @classmethod
    def parse(cls, text: str) -> DivisorClass:
        """Parse ``"2,1/2,-1"`` into a class."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if not parts:
            raise ValueError("empty divisor")
        return cls(tuple(Fraction(p) for p in parts))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: DivisorClass) -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(
                f"classes of length {len(self.coords)} and {len(other.coords)}"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> DivisorClass:
        s = as_fraction(scalar)
        return DivisorClass(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> DivisorClass:
        s = as_fraction(scalar)
        return DivisorClass(tuple(a / s for a in self.coords))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def denominator(self) -> int:
        """Least common multiple of the coordinate denominators."""
        return math.lcm(*(c.denominator for c in self.coords)) if self.coords else 1

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def combine(coeffs: Sequence, classes: Sequence[DivisorClass], rank: int) -> DivisorClass:
    """Return ``sum(c_i * classes[i])``."""
    total = [Fraction(0)] * rank
    for c, cls in zip(coeffs, classes):
        c = as_fraction(c)
        if c:
            for k, x in enumerate(cls.coords):
                total[k] += c * x
    return DivisorClass(tuple(total))


# -- exact linear algebra ----------------------------------------------------


def congruence_diagonal(matrix: Sequence[Sequence]) -> list[Fraction]:
    """Diagonal of a rational symmetric matrix after congruence reduction.

    Sylvester's law of inertia makes the sign pattern of the result the
    signature of the form.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    diag: list[Fraction] = []
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if hit is None:
                diag.extend([Fraction(0)] * n)
                break
            i, j = hit
            # e_i -> e_i + e_j makes the (i, i) entry 2 a_ij != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        diag.append(p)
        rest = [k for k in range(n) if k != piv]
        a = [[a[r][c] - a[r][piv] * a[piv][c] / p for c in rest] for r in rest]
    return diag


def signature(matrix: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of the form's inertia."""
    d = congruence_diagonal(matrix)
    return (sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d))


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a nonsingular square system exactly."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise LatticeError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _leading_minors(matrix: Sequence[Sequence]) -> Iterator[tuple[int, Fraction]]:
    for k in range(1, len(matrix) + 1):
        yield k, determinant([row[:k] for row in matrix[:k]])


def _check_matrix(matrix: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(row) for row in matrix)
    n = len(rows)
    if n == 0:
        raise LatticeError("intersection matrix is empty")
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("intersection matrix is not square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise LatticeError(f"intersection numbers must be integers, got {x!r}")
    if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
        raise AsymmetricFormError("intersection matrix is not symmetric")
    pos, neg, zero = signature(rows)
    if zero:
        raise DegenerateFormError(f"intersection form is degenerate (nullity {zero})")
    if pos != 1:
        raise SignatureError(f"signature ({pos},{neg}); expected (1,{n - 1})")
    return rows


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric integral bilinear form of signature ``(1, rank - 1)``."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", _check_matrix(self.matrix))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def pair(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        if len(a) != self.rank or len(b) != self.rank:
            raise DimensionMismatch(
                f"classes of length {len(a)}, {len(b)} against a rank {self.rank} form"
            )
        q = self.matrix
        total = Fraction(0)
        for i, x in enumerate(a.coords):
            if x:
                row = q[i]
                total += x * sum((row[j] * y for j, y in enumerate(b.coords) if y), Fraction(0))
        return total

    def square(self, a: DivisorClass) -> Fraction:
        return self.pair(a, a)

    def gram(self, classes: Sequence[DivisorClass]) -> list[list[Fraction]]:
        return [[self.pair(a, b) for b in classes] for a in classes]


def pair(a: DivisorClass, b: DivisorClass, form: IntersectionForm) -> Fraction:
    """Intersection number ``a . b``."""
    return form.pair(a, b)


def validate_signature(form) -> str | None:
    """Return ``None`` if the matrix is a valid hyperbolic form, else why not.

    Accepts an :class:`IntersectionForm` (always valid) or a raw matrix.
    """
    if isinstance(form, IntersectionForm):
        return None
    try:
        _check_matrix(form)
    except LatticeError as exc:
        return str(exc)
    return None


def is_negative_definite(support: Iterable[DivisorClass], form: IntersectionForm) -> bool:
    g = form.gram(list(support))
    return all((-1) ** k * d > 0 for k, d in _leading_minors(g))


def solve_gram(
    support: Sequence[DivisorClass], targets: Sequence, form: IntersectionForm
) -> list[Fraction]:
    """Coefficients ``a`` with ``sum_j a_j (C_j . C_i) = targets[i]``.

    The Gram matrix of ``support`` must be negative definite.
    """
    support = list(support)
    if len(targets) != len(support):
        raise DimensionMismatch("one target per support class is required")
    if not support:
        return []
    g = form.gram(support)
    for k, d in _leading_minors(g):
        if (-1) ** k * d <= 0:
            raise GramError(
                f"Gram matrix is not negative definite: leading minor of size {k} is {d}",
                k,
                d,
            )
    return solve_linear(g, [as_fraction(t) for t in targets])
