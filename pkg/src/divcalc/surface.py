"""Surface presentations: lattice, canonical class, curve catalog, invariants.

A :class:`SurfaceModel` is only the lattice shadow of a surface. The curve
catalog and the effective generators are data supplied by the constructor
(or by a JSON document), and the two completeness flags record how far
downstream answers may trust them.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

import jsonschema

from .lattice import DivisorClass, IntersectionForm, LatticeError

NEG_INF = -math.inf
KAPPA_JSON_NEG_INF = -10

_PLAIN_TAGS = {
    "projective_plane",
    "del_pezzo",
    "weak_del_pezzo",
    "abelian",
    "hyperelliptic",
    "k3",
    "enriques",
    "elliptic_fibration",
    "quasi_elliptic",
    "general_type",
    "other",
}
_PARAM_TAG = re.compile(r"^(hirzebruch|ruled_over_genus)\((\d+)\)$")


class SurfaceError(ValueError):
    """Base class for surface input errors; ``path`` locates the field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class SurfaceParseError(SurfaceError):
    pass


class SchemaViolation(SurfaceError):
    pass


class SignatureViolation(SurfaceError):
    pass


class InvariantViolation(SurfaceError):
    pass


class UnsupportedModel(SurfaceError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def tag_parameter(tags: Iterable[str], name: str) -> int | None:
    """Parameter of a tag such as ``hirzebruch(2)``, or ``None`` if absent."""
    for t in tags:
        m = _PARAM_TAG.match(t)
        if m and m.group(1) == name:
            return int(m.group(2))
    return None


@dataclass(frozen=True)
class SurfaceInvariants:
    char_p: int
    kodaira_dim: float
    chi_O: int
    q: int
    volume: int = 0
    quasi_elliptic: bool = False
    h1_nilpotent: int | None = None
    frobenius_split: bool | None = None
    class_tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "class_tags", frozenset(self.class_tags))
        if self.kodaira_dim == KAPPA_JSON_NEG_INF:
            object.__setattr__(self, "kodaira_dim", NEG_INF)
        if not _is_prime(self.char_p):
            raise InvariantViolation(f"char_p must be a prime, got {self.char_p}", "invariants.char_p")
        if self.kodaira_dim not in (NEG_INF, 0, 1, 2):
            raise InvariantViolation(
                f"kodaira_dim must be -inf, 0, 1 or 2, got {self.kodaira_dim}",
                "invariants.kodaira_dim",
            )
        if self.q < 0:
            raise InvariantViolation("irregularity must be nonnegative", "invariants.q")
        if self.kodaira_dim == 2 and self.volume < 1:
            raise InvariantViolation(
                "a surface of general type has volume >= 1", "invariants.volume"
            )
        if self.kodaira_dim != 2 and self.volume != 0:
            raise InvariantViolation(
                "volume is 0 unless the surface is of general type", "invariants.volume"
            )
        if self.quasi_elliptic:
            # classification fact, not restated where C_S is defined
            if self.char_p not in (2, 3):
                raise InvariantViolation(
                    f"quasi-elliptic fibrations exist only in characteristic 2 or 3, "
                    f"got char_p = {self.char_p} (classification of surfaces)",
                    "invariants.quasi_elliptic",
                )
            if self.kodaira_dim == 2:
                raise InvariantViolation(
                    "a quasi-elliptic surface has kodaira_dim <= 1",
                    "invariants.quasi_elliptic",
                )
        for t in self.class_tags:
            if t not in _PLAIN_TAGS and not _PARAM_TAG.match(t):
                raise InvariantViolation(f"unknown class tag {t!r}", "invariants.class_tags")
        if self.frobenius_split and self.kodaira_dim in (1, 2):
            raise InvariantViolation(
                "a Frobenius split surface has kodaira_dim <= 0",
                "invariants.frobenius_split",
            )
        h1n = self.h1_nilpotent
        forced_zero = self.q == 0 or self.frobenius_split is True
        if h1n is None and forced_zero:
            object.__setattr__(self, "h1_nilpotent", 0)
        elif h1n is not None:
            if h1n < 0:
                raise InvariantViolation("h1_nilpotent must be nonnegative", "invariants.h1_nilpotent")
            if h1n > self.q:
                raise InvariantViolation(
                    f"h1_nilpotent = {h1n} exceeds q = {self.q}", "invariants.h1_nilpotent"
                )
            if forced_zero and h1n != 0:
                raise InvariantViolation(
                    "a Frobenius split surface has no Frobenius-nilpotent H^1(O_S)",
                    "invariants.h1_nilpotent",
                )

    def tag(self, name: str) -> bool:
        return name in self.class_tags

    def tag_parameter(self, name: str) -> int | None:
        return tag_parameter(self.class_tags, name)


@dataclass(frozen=True)
class Curve:
    cls: DivisorClass
    irreducible: bool = True
    self_int: Fraction | None = None
    name: str | None = None


@dataclass(frozen=True)
class SurfaceModel:
    form: IntersectionForm
    canonical: DivisorClass
    curves: tuple[Curve, ...]
    effective_generators: tuple[int, ...]
    invariants: SurfaceInvariants
    negative_curves_complete: bool = False
    effective_cone_polyhedral: bool = False
    basis_names: tuple[str, ...] | None = None
    name: str = "surface"

    def __post_init__(self):
        rank = self.form.rank
        object.__setattr__(self, "canonical", DivisorClass(self.canonical))
        if len(self.canonical) != rank or not self.canonical.is_integral:
            raise InvariantViolation("canonical class must be an integral class of full rank", "canonical")
        curves = []
        for i, c in enumerate(self.curves):
            if len(c.cls) != rank:
                raise InvariantViolation(f"curve has {len(c.cls)} coordinates, rank is {rank}", f"curves[{i}]")
            if not c.cls.is_integral:
                raise InvariantViolation("curve classes must be integral", f"curves[{i}]")
            sq = self.form.square(c.cls)
            if c.self_int is not None and Fraction(c.self_int) != sq:
                raise InvariantViolation(
                    f"cached self-intersection {c.self_int} differs from {sq}", f"curves[{i}]"
                )
            curves.append(Curve(c.cls, c.irreducible, sq, c.name))
        object.__setattr__(self, "curves", tuple(curves))
        gens = tuple(self.effective_generators)
        for g in gens:
            if not 0 <= g < len(curves):
                raise InvariantViolation(f"generator index {g} out of range", "effective_generators")
        object.__setattr__(self, "effective_generators", gens)
        if self.basis_names is not None:
            object.__setattr__(self, "basis_names", tuple(self.basis_names))
            if len(self.basis_names) != rank:
                raise InvariantViolation("one basis name per coordinate", "basis_names")
        if self.invariants.tag("del_pezzo"):
            for i, c in enumerate(curves):
                if c.irreducible and c.self_int < 0 and c.self_int != -1:
                    raise InvariantViolation(
                        "on a del Pezzo surface every irreducible negative curve is a (-1)-curve",
                        f"curves[{i}]",
                    )

    @property
    def rank(self) -> int:
        return self.form.rank

    def pair(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        return self.form.pair(a, b)

    def square(self, a: DivisorClass) -> Fraction:
        return self.form.square(a)

    @property
    def generator_classes(self) -> list[DivisorClass]:
        return [self.curves[i].cls for i in self.effective_generators]

    @property
    def negative_curve_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.curves) if c.irreducible and c.self_int < 0]

    def divisor(self, coords: Sequence) -> DivisorClass:
        d = DivisorClass(tuple(coords))
        if len(d) != self.rank:
            raise LatticeError(f"divisor has {len(d)} coordinates, surface rank is {self.rank}")
        return d

    def curve_label(self, i: int) -> str:
        c = self.curves[i]
        return c.name if c.name else f"curve[{i}]"

    def describe(self, d: DivisorClass) -> str:
        """Human-readable ``a*C0 + b*F`` rendering in the basis names."""
        names = self.basis_names or tuple(f"e{i}" for i in range(self.rank))
        terms = []
        for c, n in zip(d.coords, names):
            if c == 0:
                continue
            if c == 1:
                terms.append(n)
            elif c == -1:
                terms.append(f"-{n}")
            else:
                terms.append(f"{c}*{n}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# -- tags derived from the anticanonical class --------------------------------


def _anticanonical_tags(form: IntersectionForm, canonical: DivisorClass, gens: list[DivisorClass]) -> set[str]:
    """Nakai-style tests valid when ``gens`` span the closed cone of curves."""
    anti = -canonical
    k2 = form.square(canonical)
    degrees = [form.pair(anti, g) for g in gens]
    tags = set()
    if k2 > 0 and all(d >= 0 for d in degrees):
        tags.add("weak_del_pezzo")
        if all(d > 0 for d in degrees):
            tags.add("del_pezzo")
    return tags


# -- built-in constructors ---------------------------------------------------


def make_projective_plane(char_p: int = 2) -> SurfaceModel:
    form = IntersectionForm(((1,),))
    h = DivisorClass((1,))
    inv = SurfaceInvariants(
        char_p=char_p, kodaira_dim=NEG_INF, chi_O=1, q=0,
        frobenius_split=True,
        class_tags=frozenset({"projective_plane", "del_pezzo", "weak_del_pezzo"}),
    )
    return SurfaceModel(
        form, DivisorClass((-3,)), (Curve(h, True, name="H"),), (0,), inv,
        negative_curves_complete=True, effective_cone_polyhedral=True,
        basis_names=("H",), name="p2",
    )


def make_hirzebruch(n: int, char_p: int = 2) -> SurfaceModel:
    """The Hirzebruch surface F_n in the basis (C0, F), C0^2 = -n."""
    if n < 0:
        raise ValueError("Hirzebruch index must be nonnegative")
    return _ruled(n, 0, char_p, True, None)


def make_ruled(n: int, genus: int, char_p: int = 2, frobenius_split: bool | None = None,
               h1_nilpotent: int | None = None) -> SurfaceModel:
    """Decomposable ruled surface P(O + L) over a genus-g curve, deg L = n.

    Over P^1 this is F_n. Over a curve of genus >= 2 the surface is never
    Frobenius split; over an elliptic curve that depends on ordinarity and is
    left to the caller.
    """
    if n < 0 or genus < 0:
        raise ValueError("n and genus must be nonnegative")
    if genus == 0:
        return make_hirzebruch(n, char_p)
    if genus >= 2:
        if frobenius_split:
            raise InvariantViolation("a ruled surface over a curve of genus >= 2 is not Frobenius split")
        frobenius_split = False
    return _ruled(n, genus, char_p, frobenius_split, h1_nilpotent)


def _ruled(n, genus, char_p, frobenius_split, h1_nilpotent) -> SurfaceModel:
    form = IntersectionForm(((-n, 1), (1, 0)))
    c0 = DivisorClass((1, 0))
    f = DivisorClass((0, 1))
    canonical = DivisorClass((-2, 2 * genus - 2 - n))
    tags = {f"ruled_over_genus({genus})"}
    if genus == 0:
        tags.add(f"hirzebruch({n})")
    tags |= _anticanonical_tags(form, canonical, [c0, f])
    inv = SurfaceInvariants(
        char_p=char_p, kodaira_dim=NEG_INF, chi_O=1 - genus, q=genus,
        h1_nilpotent=h1_nilpotent, frobenius_split=frobenius_split,
        class_tags=frozenset(tags),
    )
    name = f"hirzebruch({n})" if genus == 0 else f"ruled({n},{genus})"
    return SurfaceModel(
        form, canonical, (Curve(c0, True, name="C0"), Curve(f, True, name="F")), (0, 1), inv,
        negative_curves_complete=True, effective_cone_polyhedral=True,
        basis_names=("C0", "F"), name=name,
    )


def _blowup_form(r: int) -> IntersectionForm:
    return IntersectionForm(tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(r + 1)) for i in range(r + 1)
    ))


def _minus_one_vectors(r: int) -> list[tuple[int, ...]]:
    """Coordinates (a, c_1..c_r) with a^2 - sum c^2 = -1 and sum c = 1 - 3a.

    Cauchy-Schwarz, (3a - 1)^2 <= r (a^2 + 1), bounds a; inside each a the
    coordinates are chosen recursively against the remaining square budget.
    """
    out: list[tuple[int, ...]] = []
    a = 0
    while (3 * a - 1) ** 2 <= r * (a * a + 1) or a == 0:
        budget = a * a + 1
        target = 1 - 3 * a

        def rec(k: int, remaining_sq: int, remaining_sum: int, acc: list[int]):
            if k == 0:
                if remaining_sq == 0 and remaining_sum == 0:
                    out.append((a, *acc))
                return
            if remaining_sum * remaining_sum > k * remaining_sq:
                return
            lim = math.isqrt(remaining_sq)
            for c in range(lim, -lim - 1, -1):
                acc.append(c)
                rec(k - 1, remaining_sq - c * c, remaining_sum - c, acc)
                acc.pop()

        if r > 0:
            rec(r, budget, target, [])
        a += 1
        if r == 0:
            break
    return out


def _label_blowup(v: Sequence[int]) -> str:
    a, cs = v[0], v[1:]
    parts = []
    if a:
        parts.append("H" if a == 1 else f"{a}H")
    for i, c in enumerate(cs, start=1):
        if c == 1:
            parts.append(f"E{i}")
        elif c == -1:
            parts.append(f"-E{i}")
        elif c:
            parts.append(f"{c}E{i}")
    return "+".join(parts).replace("+-", "-") or "0"


def _require_blowup_lattice(model: SurfaceModel) -> int:
    r = model.rank - 1
    if model.form != _blowup_form(r) or model.canonical != DivisorClass((-3,) + (1,) * r):
        raise UnsupportedModel("expected the lattice of P^2 blown up in r points (basis H, E1..Er)")
    return r


def enumerate_minus_one_classes(model: SurfaceModel) -> list[DivisorClass]:
    """All integral E with E^2 = -1 and E.K = -1 on a blowup of P^2."""
    r = _require_blowup_lattice(model)
    if r > 8:
        raise UnsupportedModel("only r <= 8 points give a del Pezzo lattice")
    return [DivisorClass(v) for v in _minus_one_vectors(r)]


def make_del_pezzo_blowup(r: int, char_p: int = 2) -> SurfaceModel:
    """P^2 blown up in r <= 8 general points, basis (H, E1, ..., Er)."""
    if not 0 <= r <= 8:
        raise ValueError(f"del Pezzo blowups need 0 <= r <= 8, got {r}")
    if r == 0:
        return make_projective_plane(char_p)
    form = _blowup_form(r)
    canonical = DivisorClass((-3,) + (1,) * r)
    curves = [Curve(DivisorClass(v), True, name=_label_blowup(v)) for v in _minus_one_vectors(r)]
    if r == 1:
        curves.append(Curve(DivisorClass((1, -1)), True, name="H-E1"))
    if r == 8:
        # -K is not a sum of (-1)-curves; the effective monoid needs it
        curves.append(Curve(-canonical, True, name="-K"))
    tags = {"del_pezzo", "weak_del_pezzo"}
    if r == 1:
        tags.add("hirzebruch(1)")
        tags.add("ruled_over_genus(0)")
    inv = SurfaceInvariants(
        char_p=char_p, kodaira_dim=NEG_INF, chi_O=1, q=0,
        frobenius_split=True if r <= 3 else None,
        class_tags=frozenset(tags),
    )
    return SurfaceModel(
        form, canonical, tuple(curves), tuple(range(len(curves))), inv,
        negative_curves_complete=True, effective_cone_polyhedral=True,
        basis_names=("H",) + tuple(f"E{i}" for i in range(1, r + 1)),
        name=f"delpezzo({r})",
    )


_SHELLS = {
    # kind: (kodaira_dim, chi_O, q, tags, K numerically trivial, no negative curves)
    "abelian": (0, 0, 2, {"abelian"}, True, True),
    "hyperelliptic": (0, 0, 1, {"hyperelliptic"}, True, True),
    "k3": (0, 2, 0, {"k3"}, True, False),
    "enriques": (0, 1, 0, {"enriques"}, True, False),
    "general_type": (2, None, 0, {"general_type"}, False, False),
    "quasi_elliptic": (1, None, 0, {"quasi_elliptic", "elliptic_fibration"}, False, False),
    "elliptic": (1, None, 0, {"elliptic_fibration"}, False, False),
}


def make_shell(
    kind: str,
    matrix: Sequence[Sequence[int]],
    *,
    char_p: int = 2,
    canonical: Sequence[int] | None = None,
    polarization: Sequence[int] | None = None,
    curves: Sequence[Curve] = (),
    chi_O: int | None = None,
    q: int | None = None,
    volume: int | None = None,
    h1_nilpotent: int | None = None,
    frobenius_split: bool | None = None,
    negative_curves_complete: bool | None = None,
) -> SurfaceModel:
    """A numeric shell: user lattice plus the invariants fixed by ``kind``.

    ``polarization`` adds an irreducible curve class of positive square; the
    positive-cone shortcuts in :mod:`divcalc.positivity` orient themselves by
    it. Shells never claim a polyhedral effective cone.
    """
    if kind not in _SHELLS:
        raise ValueError(f"unknown shell kind {kind!r}; choose from {sorted(_SHELLS)}")
    kappa, chi0, q0, tags, k_trivial, no_negative = _SHELLS[kind]
    form = IntersectionForm(matrix)
    if k_trivial:
        if canonical is not None and any(canonical):
            raise InvariantViolation(f"{kind} surfaces have numerically trivial canonical class", "canonical")
        k = DivisorClass.zero(form.rank)
    else:
        if canonical is None:
            raise ValueError(f"a {kind} shell needs an explicit canonical class")
        k = DivisorClass(tuple(canonical))
    all_curves = list(curves)
    if polarization is not None:
        all_curves.append(Curve(DivisorClass(tuple(polarization)), True, name="H"))
    if chi_O is None and chi0 is None:
        raise ValueError(f"a {kind} shell needs chi_O")
    inv = SurfaceInvariants(
        char_p=char_p,
        kodaira_dim=kappa,
        chi_O=chi0 if chi_O is None else chi_O,
        q=q0 if q is None else q,
        volume=(volume if volume is not None else (1 if kappa == 2 else 0)),
        quasi_elliptic=(kind == "quasi_elliptic"),
        h1_nilpotent=h1_nilpotent,
        frobenius_split=frobenius_split,
        class_tags=frozenset(tags),
    )
    if negative_curves_complete is None:
        negative_curves_complete = no_negative
    return SurfaceModel(
        form, k, tuple(all_curves), tuple(range(len(all_curves))), inv,
        negative_curves_complete=negative_curves_complete,
        effective_cone_polyhedral=False,
        name=kind,
    )


# -- JSON ingestion ------------------------------------------------------------

SURFACE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "rank", "intersection_matrix", "canonical", "curves",
        "effective_generators", "invariants", "completeness",
    ],
    "properties": {
        "name": {"type": "string"},
        "basis_names": {"type": "array", "items": {"type": "string"}},
        "rank": {"type": "integer", "minimum": 1},
        "intersection_matrix": {
            "type": "array", "items": {"type": "array", "items": {"type": "integer"}},
        },
        "canonical": {"type": "array", "items": {"type": "integer"}},
        "curves": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coords", "irreducible"],
                "properties": {
                    "coords": {"type": "array", "items": {"type": "integer"}},
                    "irreducible": {"type": "boolean"},
                    "name": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "effective_generators": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "invariants": {
            "type": "object",
            "required": ["char_p", "kodaira_dim", "quasi_elliptic", "chi_O", "q", "volume",
                         "h1_nilpotent", "frobenius_split", "class_tags"],
            "properties": {
                "char_p": {"type": "integer"},
                "kodaira_dim": {"enum": [KAPPA_JSON_NEG_INF, 0, 1, 2]},
                "quasi_elliptic": {"type": "boolean"},
                "chi_O": {"type": "integer"},
                "q": {"type": "integer", "minimum": 0},
                "volume": {"type": "integer", "minimum": 0},
                "h1_nilpotent": {"type": ["integer", "null"]},
                "frobenius_split": {"type": ["boolean", "null"]},
                "class_tags": {"type": "array", "items": {"type": "string"}},
            },
            "additionalProperties": False,
        },
        "completeness": {
            "type": "object",
            "required": ["negative_curves_complete", "effective_cone_polyhedral"],
            "properties": {
                "negative_curves_complete": {"type": "boolean"},
                "effective_cone_polyhedral": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


def _json_path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out


def load_surface(document: str) -> SurfaceModel:
    """Parse and validate a surface document (see ``SURFACE_SCHEMA``)."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SurfaceParseError(f"invalid JSON: {exc}") from exc
    validator = jsonschema.Draft202012Validator(SURFACE_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise SchemaViolation(e.message, _json_path(e.absolute_path))
    rank = data["rank"]
    matrix = data["intersection_matrix"]
    if len(matrix) != rank or any(len(row) != rank for row in matrix):
        raise SchemaViolation(f"expected a {rank}x{rank} matrix", "intersection_matrix")
    try:
        form = IntersectionForm(matrix)
    except LatticeError as exc:
        raise SignatureViolation(str(exc), "intersection_matrix") from exc
    if len(data["canonical"]) != rank:
        raise SchemaViolation(f"expected {rank} coordinates", "canonical")
    curves = []
    for i, c in enumerate(data["curves"]):
        if len(c["coords"]) != rank:
            raise SchemaViolation(f"expected {rank} coordinates", f"curves[{i}].coords")
        curves.append(Curve(DivisorClass(tuple(c["coords"])), c["irreducible"], name=c.get("name")))
    inv = data["invariants"]
    comp = data["completeness"]
    invariants = SurfaceInvariants(
        char_p=inv["char_p"],
        kodaira_dim=inv["kodaira_dim"],
        chi_O=inv["chi_O"],
        q=inv["q"],
        volume=inv["volume"],
        quasi_elliptic=inv["quasi_elliptic"],
        h1_nilpotent=inv["h1_nilpotent"],
        frobenius_split=inv["frobenius_split"],
        class_tags=frozenset(inv["class_tags"]),
    )
    return SurfaceModel(
        form,
        DivisorClass(tuple(data["canonical"])),
        tuple(curves),
        tuple(data["effective_generators"]),
        invariants,
        negative_curves_complete=comp["negative_curves_complete"],
        effective_cone_polyhedral=comp["effective_cone_polyhedral"],
        basis_names=tuple(data["basis_names"]) if "basis_names" in data else None,
        name=data.get("name", "surface"),
    )


def surface_to_json(model: SurfaceModel) -> dict:
    inv = model.invariants
    doc = {
        "name": model.name,
        "rank": model.rank,
        "intersection_matrix": [list(r) for r in model.form.matrix],
        "canonical": [int(c) for c in model.canonical],
        "curves": [
            {"coords": [int(x) for x in c.cls], "irreducible": c.irreducible,
             **({"name": c.name} if c.name else {})}
            for c in model.curves
        ],
        "effective_generators": list(model.effective_generators),
        "invariants": {
            "char_p": inv.char_p,
            "kodaira_dim": KAPPA_JSON_NEG_INF if inv.kodaira_dim == NEG_INF else int(inv.kodaira_dim),
            "quasi_elliptic": inv.quasi_elliptic,
            "chi_O": inv.chi_O,
            "q": inv.q,
            "volume": inv.volume,
            "h1_nilpotent": inv.h1_nilpotent,
            "frobenius_split": inv.frobenius_split,
            "class_tags": sorted(inv.class_tags),
        },
        "completeness": {
            "negative_curves_complete": model.negative_curves_complete,
            "effective_cone_polyhedral": model.effective_cone_polyhedral,
        },
    }
    if model.basis_names is not None:
        doc["basis_names"] = list(model.basis_names)
    return doc


def dump_surface(model: SurfaceModel) -> str:
    return json.dumps(surface_to_json(model), indent=2)


def fixture_text(name: str) -> str:
    """Text of a JSON fixture shipped with the package, e.g. ``"f2.json"``."""
    return resources.files("divcalc").joinpath("fixtures").joinpath(name).read_text(encoding="utf-8")


def builtin_surface(text: str, char_p: int = 2) -> SurfaceModel:
    """Resolve ``name[:param[:param]]``: p2, hirzebruch:n, delpezzo:r, ruled:n:g."""
    name, _, rest = text.partition(":")
    params = [int(x) for x in rest.split(":")] if rest else []
    name = name.lower()
    if name in ("p2", "projective_plane"):
        return make_projective_plane(char_p)
    if name in ("hirzebruch", "f"):
        return make_hirzebruch(params[0] if params else 0, char_p)
    if name in ("delpezzo", "dp"):
        return make_del_pezzo_blowup(params[0] if params else 0, char_p)
    if name == "ruled":
        if len(params) != 2:
            raise ValueError("ruled needs ruled:n:genus")
        return make_ruled(params[0], params[1], char_p)
    raise ValueError(f"unknown builtin surface {text!r}")
