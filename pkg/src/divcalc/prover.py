"""Certificate-producing prover for H^1(S, O_S(-D)) = 0 and Miyaoka-Sakai divisors.

A certificate is data: every hypothesis check records its name, exact
inputs and outcome, and :func:`replay` re-runs each check from those inputs
alone through the same registry. Rule ids:

    R1  effective Mumford-Ramanujam   D nef, D^2 > 4 C_S
    R2  effective Ramanujam           D numerically connected, D^2 > 4 C_S
    R3  del Pezzo                     D nef and big, conclusion for the roundup
    R4  Hirzebruch                    D nef and big, conclusion for the roundup
    R5  Frobenius split               D nef and big, roundup linearly effective
    R6  Enokizono                     D big, Z-positive, h^0(D) > h^1(O_S)_n
    R7  generalized Mumford-Ramanujam kappa <= 1 (not quasi-elliptic), D big, seed
    R8  abelian / hyperelliptic       D big with D^2 > 0
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .criteria import HypothesisViolation, ms_multiple
from .lattice import DivisorClass
from .numerics import correction_constant, h0_lower_bound
from .positivity import (COMPLETE, Answer, PositivityVerdict, is_big, is_nef,
                         is_numerically_connected, is_pseudoeffective)
from .serialize import class_from_json, rational
from .surface import SurfaceModel
from .zariski import NotPseudoeffective, integral_zariski_decompose, is_Z_positive

H1_VANISHES = "h1_vanishes"
MIYAOKA_SAKAI = "miyaoka_sakai_divisor"
UNKNOWN = "unknown"

DEFAULT_ORDER = ("R1", "R3", "R4", "R8", "R5", "R6", "R2", "R7")

REFERENCES = {
    "R1": "effective Mumford-Ramanujam vanishing: nef D with D^2 > 4C_S",
    "R2": "effective Ramanujam vanishing: numerically connected D with D^2 > 4C_S",
    "R3": "Kawamata-Viehweg vanishing on del Pezzo surfaces (nef and big, roundup)",
    "R4": "Kawamata-Viehweg vanishing on Hirzebruch surfaces (nef and big, roundup)",
    "R5": "Kawamata-Viehweg vanishing on Frobenius split surfaces (roundup linearly effective)",
    "R6": "Enokizono vanishing: big Z-positive D with h0(D) > dim H1(O_S)_n",
    "R7": "generalized Mumford-Ramanujam vanishing from H1(-p^e D) = 0, kappa <= 1",
    "R8": "Kawamata-Viehweg vanishing on abelian and hyperelliptic surfaces",
    "MS": "Miyaoka-Sakai divisor via Q = P_Z, the integral Zariski positive part",
    "MSk": "kmD is a Miyaoka-Sakai divisor for the least m with mP integral, (mP)^2 > 4C_S",
    "pre": "precondition: D pseudoeffective",
}


@dataclass(frozen=True)
class ProverConfig:
    order: tuple[str, ...] = DEFAULT_ORDER
    allow_relative: bool = False
    z_bound: int = 10
    connect_bound: int = 8
    assume_seed: bool = False
    ceil_cs: bool = False
    check_z_positive: bool = False

    def __post_init__(self):
        unknown = set(self.order) - set(DEFAULT_ORDER)
        if unknown:
            raise ValueError(f"unknown rule ids {sorted(unknown)}")


# -- checks ------------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    name: str
    verdict: str
    inputs: dict
    relative: bool = False
    bound_limited: bool = False
    detail: str = ""
    assumption: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == Answer.TRUE.value

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "inputs": self.inputs,
                "relative": self.relative, "bound_limited": self.bound_limited,
                "detail": self.detail, "assumption": self.assumption}


def _coords(d: DivisorClass) -> list[str]:
    return [rational(c) for c in d.coords]


def _bool(v: bool) -> str:
    return Answer.TRUE.value if v else Answer.FALSE.value


def _from_verdict(v: PositivityVerdict) -> dict:
    return {"verdict": v.value.value, "relative": v.relative_to != COMPLETE,
            "bound_limited": v.bound_limited, "detail": v.note}


def roundup(d: DivisorClass, model: SurfaceModel) -> tuple[DivisorClass, list[Fraction]] | None:
    """Roundup of a representative ``sum lam_j G_j`` of ``d`` on the generator curves.

    Integral classes round to themselves. The representative is the cone
    membership solution, so the result is deterministic.
    """
    if d.is_integral:
        return d, []
    pe = is_pseudoeffective(d, model)
    if not pe.holds or not isinstance(pe.witness, list):
        return None
    lam = pe.witness
    total = DivisorClass.zero(model.rank)
    for x, g in zip(lam, model.generator_classes):
        total = total + g * math.ceil(x)
    return total, lam


def _c_integral(model, inp):
    d = class_from_json(inp["D"])
    return {"verdict": _bool(d.is_integral)}


def _c_pseudoeffective(model, inp):
    return _from_verdict(is_pseudoeffective(class_from_json(inp["D"]), model))


def _c_nef(model, inp):
    return _from_verdict(is_nef(class_from_json(inp["D"]), model))


def _c_big(model, inp):
    return _from_verdict(is_big(class_from_json(inp["D"]), model))


def _c_square_gt_4cs(model, inp):
    d = class_from_json(inp["D"])
    cs = correction_constant(model.invariants, inp["ceil_cs"]).value
    d2 = model.square(d)
    return {"verdict": _bool(d2 > 4 * cs), "detail": f"D^2 = {d2}, 4C_S = {4 * cs}"}


def _c_square_positive(model, inp):
    d2 = model.square(class_from_json(inp["D"]))
    return {"verdict": _bool(d2 > 0), "detail": f"D^2 = {d2}"}


def _c_connected(model, inp):
    return _from_verdict(is_numerically_connected(class_from_json(inp["D"]), model, inp["bound"]))


def _c_z_positive(model, inp):
    return _from_verdict(is_Z_positive(class_from_json(inp["D"]), model, inp["bound"]))


def _c_h0(model, inp):
    h1n = model.invariants.h1_nilpotent
    if h1n is None:
        return {"verdict": Answer.UNKNOWN.value, "detail": "h1_nilpotent unknown"}
    b = h0_lower_bound(class_from_json(inp["D"]), model, allow_relative=inp["allow_relative"])
    return {"verdict": _bool(b.lower > h1n), "relative": b.relative,
            "detail": f"h0 >= {b.lower} ({b.method}), h1_nilpotent = {h1n}"}


def _c_linearly_effective(model, inp):
    b = h0_lower_bound(class_from_json(inp["D"]), model, allow_relative=inp["allow_relative"])
    return {"verdict": _bool(b.lower >= 1), "relative": b.relative,
            "detail": f"h0 >= {b.lower} ({b.method})"}


def _c_tag(model, inp):
    inv = model.invariants
    names = inp["tags"]
    hit = [t for t in names if inv.tag(t) or inv.tag_parameter(t) is not None]
    return {"verdict": _bool(bool(hit)), "detail": ", ".join(hit) or "no matching tag"}


def _c_frobenius_split(model, inp):
    fs = model.invariants.frobenius_split
    verdict = Answer.UNKNOWN.value if fs is None else _bool(fs)
    return {"verdict": verdict, "detail": f"frobenius_split = {fs}"}


def _c_kodaira_route(model, inp):
    inv = model.invariants
    ok = inv.kodaira_dim <= 1 and not (inv.kodaira_dim == 1 and inv.quasi_elliptic)
    return {"verdict": _bool(ok), "detail": f"kappa = {inv.kodaira_dim}, quasi_elliptic = {inv.quasi_elliptic}"}


def _c_roundup(model, inp):
    r = roundup(class_from_json(inp["D"]), model)
    if r is None:
        return {"verdict": Answer.FALSE.value, "detail": "no representative on generators"}
    return {"verdict": _bool(_coords(r[0]) == inp["roundup"]),
            "detail": "representative coefficients " + ", ".join(rational(x) for x in r[1])}


def _c_assumed_seed(model, inp):
    return {"verdict": Answer.TRUE.value, "assumption": True,
            "detail": f"asserted by the caller: H1(S, O_S(-k D)) = 0 for k >> 0"}


def _c_izd_big(model, inp):
    d = class_from_json(inp["D"])
    iz = integral_zariski_decompose(d, model)
    v = is_big(iz.positive, model)
    out = _from_verdict(v)
    out["detail"] = f"P_Z = {iz.positive}; " + v.note
    out["relative"] = out["relative"] or iz.relative
    return out


def _c_nz_under_n(model, inp):
    d = class_from_json(inp["D"])
    iz = integral_zariski_decompose(d, model)
    z = iz.rational
    ok = all(0 <= iz.coefficient(i) <= z.coefficient(i) for i in range(len(model.curves)))
    ok = ok and set(iz.support) <= set(z.support)
    return {"verdict": _bool(ok), "relative": iz.relative,
            "detail": f"N_Z = {iz.negative}, N = {z.negative}"}


def _c_ms_multiple(model, inp):
    d = class_from_json(inp["D"])
    try:
        res = ms_multiple(d, model, inp["ceil_cs"])
    except HypothesisViolation as exc:
        return {"verdict": Answer.FALSE.value, "detail": str(exc)}
    q = res.positive * res.m
    return {"verdict": _bool(res.m == inp["m"] and _coords(q) == inp["Q"]),
            "detail": f"m = {res.m}; {res.previous_fails}; margin {res.margin}"}


CHECKS: dict[str, Callable[[SurfaceModel, dict], dict]] = {
    "integral": _c_integral,
    "pseudoeffective": _c_pseudoeffective,
    "nef": _c_nef,
    "big": _c_big,
    "square_exceeds_4cs": _c_square_gt_4cs,
    "square_positive": _c_square_positive,
    "numerically_connected": _c_connected,
    "z_positive": _c_z_positive,
    "h0_exceeds_h1_nilpotent": _c_h0,
    "linearly_effective": _c_linearly_effective,
    "class_tag": _c_tag,
    "frobenius_split": _c_frobenius_split,
    "kodaira_route": _c_kodaira_route,
    "roundup": _c_roundup,
    "assumed_seed": _c_assumed_seed,
    "p_z_big": _c_izd_big,
    "n_z_under_n": _c_nz_under_n,
    "ms_multiple": _c_ms_multiple,
}


def run_check(name: str, model: SurfaceModel, inputs: dict) -> CheckRecord:
    try:
        out = CHECKS[name](model, inputs)
    except NotPseudoeffective as exc:
        out = {"verdict": Answer.FALSE.value, "detail": str(exc)}
    return CheckRecord(name, out["verdict"], inputs, out.get("relative", False),
                       out.get("bound_limited", False), out.get("detail", ""),
                       out.get("assumption", False))


# -- certificates ------------------------------------------------------------------------


@dataclass(frozen=True)
class RuleNode:
    id: str
    checks: tuple[CheckRecord, ...]
    subject: DivisorClass | None = None

    @property
    def reference(self) -> str:
        return REFERENCES[self.id]

    def all_true(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def weak_checks(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.relative or c.bound_limited]

    def to_json(self) -> dict:
        return {"id": self.id, "paper_ref": self.reference,
                "checks": [c.to_json() for c in self.checks],
                "subject": _coords(self.subject) if self.subject is not None else None}


@dataclass(frozen=True)
class Certificate:
    question: str
    divisor: DivisorClass
    conclusion: str
    subject: DivisorClass | None
    rules: tuple[RuleNode, ...]
    caveats: tuple[str, ...]
    alternates: tuple[str, ...] = ()
    attempts: tuple[RuleNode, ...] = ()
    allow_relative: bool = False

    def __post_init__(self):
        if self.conclusion != UNKNOWN:
            if not self.rules or not all(n.all_true() for n in self.rules):
                raise ValueError("a positive conclusion needs every check true")
            weak = [c for n in self.rules for c in n.weak_checks()]
            if weak and not self.allow_relative:
                raise ValueError("relative or bound-limited check without allow_relative")
            if weak and not self.caveats:
                raise ValueError("relative checks require caveats")

    def to_json(self) -> dict:
        return {
            "question": self.question,
            "divisor": _coords(self.divisor),
            "conclusion": self.conclusion,
            "subject": _coords(self.subject) if self.subject is not None else None,
            "rules": [n.to_json() for n in self.rules],
            "caveats": list(self.caveats),
            "alternates": list(self.alternates),
            "attempts": [n.to_json() for n in self.attempts],
            "allow_relative": self.allow_relative,
        }


class _Node:
    """Collects checks for one rule, stopping at the first failure."""

    def __init__(self, rule_id: str, model: SurfaceModel):
        self.id = rule_id
        self.model = model
        self.checks: list[CheckRecord] = []
        self.ok = True

    def check(self, name: str, **inputs) -> bool:
        if not self.ok:
            return False
        rec = run_check(name, self.model, inputs)
        self.checks.append(rec)
        self.ok = rec.passed
        return self.ok

    def node(self, subject) -> RuleNode:
        return RuleNode(self.id, tuple(self.checks), subject)


def _usable(node: RuleNode, allow_relative: bool) -> bool:
    return node.all_true() and (allow_relative or not node.weak_checks())


def _caveats(node: RuleNode) -> list[str]:
    out = []
    for c in node.checks:
        if c.relative:
            out.append(f"{c.name}: relative to the supplied curves and generators")
        if c.bound_limited:
            out.append(f"{c.name}: search was bound-limited ({c.detail})")
        if c.assumption:
            out.append(f"{c.name}: assumption, {c.detail}")
    return out


def _rule(rule_id: str, d: DivisorClass, model: SurfaceModel, cfg: ProverConfig) -> RuleNode:
    n = _Node(rule_id, model)
    dj = _coords(d)
    cs = dict(ceil_cs=cfg.ceil_cs)
    subject = d

    def rounded_subject() -> DivisorClass | None:
        r = roundup(d, model)
        if r is None:
            n.check("roundup", D=dj, roundup=None)
            return None
        if not d.is_integral:
            n.check("roundup", D=dj, roundup=_coords(r[0]))
        return r[0]

    if rule_id == "R1":
        n.check("integral", D=dj) and n.check("nef", D=dj) and n.check("square_exceeds_4cs", D=dj, **cs)
    elif rule_id == "R2":
        (n.check("integral", D=dj) and n.check("pseudoeffective", D=dj)
         and n.check("square_exceeds_4cs", D=dj, **cs)
         and n.check("numerically_connected", D=dj, bound=cfg.connect_bound))
    elif rule_id in ("R3", "R4"):
        tag = "del_pezzo" if rule_id == "R3" else "hirzebruch"
        if n.check("class_tag", tags=[tag]) and n.check("nef", D=dj) and n.check("big", D=dj):
            subject = rounded_subject()
    elif rule_id == "R5":
        if n.check("frobenius_split") and n.check("nef", D=dj) and n.check("big", D=dj):
            subject = rounded_subject()
            if subject is not None:
                n.check("linearly_effective", D=_coords(subject), allow_relative=cfg.allow_relative)
    elif rule_id == "R6":
        (n.check("integral", D=dj) and n.check("big", D=dj)
         and n.check("z_positive", D=dj, bound=cfg.z_bound)
         and n.check("h0_exceeds_h1_nilpotent", D=dj, allow_relative=cfg.allow_relative))
    elif rule_id == "R7":
        if (n.check("integral", D=dj) and n.check("kodaira_route") and n.check("big", D=dj)
                and n.check("square_positive", D=dj)):
            if cfg.assume_seed:
                n.check("assumed_seed", D=dj)
            else:
                n.check("nef", D=dj)
    elif rule_id == "R8":
        if n.check("class_tag", tags=["abelian", "hyperelliptic"]):
            if d.is_integral:
                n.check("big", D=dj) and n.check("square_positive", D=dj)
            elif n.check("nef", D=dj) and n.check("big", D=dj):
                subject = rounded_subject()
    else:
        raise ValueError(rule_id)
    return n.node(subject if n.ok else None)


def _assemble(question: str, d: DivisorClass, nodes: list[RuleNode], positive: str,
              cfg: ProverConfig, pre: list[RuleNode] = ()) -> Certificate:
    good = [x for x in nodes if _usable(x, cfg.allow_relative)]
    if not good:
        reasons = []
        for x in list(pre) + nodes:
            failing = next((c for c in x.checks if not c.passed), None)
            if failing is not None:
                reasons.append(f"{x.id}: {failing.name} is {failing.verdict}"
                               + (f" ({failing.detail})" if failing.detail else ""))
            elif x.weak_checks():
                reasons.append(f"{x.id}: relies on relative or bound-limited checks")
        return Certificate(question, d, UNKNOWN, None, (), tuple(reasons), (),
                           tuple(list(pre) + nodes), cfg.allow_relative)
    win = good[0]
    others = [x for x in nodes if x is not win]
    return Certificate(question, d, positive, win.subject, (win,), tuple(_caveats(win)),
                       tuple(x.id for x in good[1:]), tuple(others), cfg.allow_relative)


def prove_h1_vanishing(d: DivisorClass, model: SurfaceModel,
                       config: ProverConfig | None = None) -> Certificate:
    """Try each rule in ``config.order``; cite the first that fully succeeds."""
    cfg = config or ProverConfig()
    pre = _Node("pre", model)
    pre.check("pseudoeffective", D=_coords(d))
    pre_node = pre.node(None)
    if pre.checks[0].verdict == Answer.FALSE.value:
        return _assemble("h1_vanishing", d, [], H1_VANISHES, cfg, [pre_node])
    nodes = [_rule(r, d, model, cfg) for r in cfg.order]
    return _assemble("h1_vanishing", d, nodes, H1_VANISHES, cfg)


def certify_miyaoka_sakai(d: DivisorClass, model: SurfaceModel,
                          config: ProverConfig | None = None,
                          multiples: bool = False) -> Certificate:
    """Certify ``D`` (or, with ``multiples``, ``mD``) as a Miyaoka-Sakai divisor.

    Direct route: ``Q = P_Z`` is big, ``D - Q = N_Z`` sits under the
    Zariski negative part, and a certified ``h^0(P_Z)`` exceeds the
    Frobenius-nilpotent part of ``H^1(O_S)``. Multiples route: ``Q = mP``
    with ``m`` from :func:`ms_multiple`, vanishing from R1.
    """
    cfg = config or ProverConfig()
    dj = _coords(d)
    n = _Node("MSk" if multiples else "MS", model)
    subject = d
    if n.check("big", D=dj) and n.check("square_positive", D=dj):
        if not multiples:
            if n.check("integral", D=dj) and n.check("p_z_big", D=dj) and n.check("n_z_under_n", D=dj):
                pz = integral_zariski_decompose(d, model).positive
                ok = n.check("h0_exceeds_h1_nilpotent", D=_coords(pz), allow_relative=cfg.allow_relative)
                if ok and cfg.check_z_positive:
                    n.check("z_positive", D=_coords(pz), bound=cfg.z_bound)
        else:
            res = ms_multiple(d, model, cfg.ceil_cs)
            q = res.positive * res.m
            subject = d * res.m
            (n.check("ms_multiple", D=dj, ceil_cs=cfg.ceil_cs, m=res.m, Q=_coords(q))
             and n.check("integral", D=_coords(subject))
             and n.check("nef", D=_coords(q))
             and n.check("square_exceeds_4cs", D=_coords(q), ceil_cs=cfg.ceil_cs))
    node = n.node(subject if n.ok else None)
    return _assemble("miyaoka_sakai", d, [node], MIYAOKA_SAKAI, cfg)


# -- replay ----------------------------------------------------------------------------


def replay_mismatches(certificate: dict, model: SurfaceModel) -> list[str]:
    """Re-run every recorded check from its inputs; list disagreements."""
    problems = []
    for section in ("rules", "attempts"):
        for node in certificate.get(section, []):
            for rec in node["checks"]:
                again = run_check(rec["name"], model, rec["inputs"]).to_json()
                if again != rec:
                    problems.append(f"{node['id']}/{rec['name']}: recorded {rec} replayed {again}")
    if certificate["conclusion"] != UNKNOWN:
        allow = certificate.get("allow_relative", False)
        for node in certificate["rules"]:
            for rec in node["checks"]:
                if rec["verdict"] != Answer.TRUE.value:
                    problems.append(f"{node['id']}/{rec['name']}: not true in a positive certificate")
                if (rec["relative"] or rec["bound_limited"]) and not allow:
                    problems.append(f"{node['id']}/{rec['name']}: relative without allow_relative")
        if not certificate["rules"]:
            problems.append("positive conclusion without a rule")
    return problems


def replay(certificate: dict, model: SurfaceModel) -> bool:
    return not replay_mismatches(certificate, model)
