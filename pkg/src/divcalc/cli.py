"""``divisor-calc`` command line driver.

Exit status: 0 for a definitive answer, 2 when the answer is unknown,
bound-limited or relative to the supplied curve catalog, 1 for input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .criteria import (CapExhausted, HypothesisViolation, ms_destabilizer_search, reider_check,
                       weak_ms_exponent)
from .lattice import DivisorClass, LatticeError
from .numerics import correction_constant, euler_char, h0_lower_bound
from .positivity import (COMPLETE, is_big, is_nef, is_numerically_connected,
                         is_pseudoeffective)
from .prover import (DEFAULT_ORDER, UNKNOWN, ProverConfig, certify_miyaoka_sakai,
                     prove_h1_vanishing)
from .serialize import dumps, to_jsonable
from .surface import SurfaceError, builtin_surface, load_surface, surface_to_json
from .zariski import ZariskiError, integral_zariski_decompose, is_Z_positive, zariski_decompose

DEFINITIVE, INPUT_ERROR, UNDECIDED = 0, 1, 2
SUBCOMMANDS = ("surface-show", "zariski", "izd", "positivity", "reider", "ms-search",
               "ms-certify", "vanishing", "cs")


class UsageError(ValueError):
    pass


def default_bound() -> int:
    raw = os.environ.get("DIVCALC_DEFAULT_BOUND")
    if raw is None:
        return 10
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DIVCALC_DEFAULT_BOUND must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("DIVCALC_DEFAULT_BOUND must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divisor-calc",
                                     description="Exact divisor positivity on surfaces.")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", help="p2, hirzebruch:n, delpezzo:r or ruled:n:g")
    src.add_argument("--surface", type=Path, help="surface JSON document")
    parser.add_argument("--char-p", type=int, default=2, help="characteristic for builtins")
    parser.add_argument("--divisor", help="comma separated rational coordinates, e.g. 2,1/2")
    parser.add_argument("--bound", type=int, default=None, help="enumeration bound")
    parser.add_argument("--level", default="bpf", choices=("bpf", "very-ample"))
    parser.add_argument("--rules", help="rule order, e.g. R1,R3,R6")
    parser.add_argument("--allow-relative", action="store_true")
    parser.add_argument("--assume-seed", action="store_true",
                        help="accept H1(-kD) = 0 for k >> 0 as an assumption (rule R7)")
    parser.add_argument("--multiples", action="store_true", help="ms-certify: certify mD")
    parser.add_argument("--ceil-cs", action="store_true", help="round C_S up to an integer")
    parser.add_argument("--e-cap", type=int, default=6, help="ms-certify: weak exponent cap")
    parser.add_argument("--format", default="text", choices=("text", "json"))
    return parser


def _load(args):
    if args.surface is not None:
        try:
            text = args.surface.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.surface}: {exc}") from exc
        return load_surface(text)
    return builtin_surface(args.builtin, args.char_p)


def _divisor(args, model) -> DivisorClass:
    if args.divisor is None:
        raise UsageError(f"{args.subcommand} needs --divisor")
    try:
        d = DivisorClass.parse(args.divisor)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse divisor {args.divisor!r}: {exc}") from exc
    if len(d) != model.rank:
        raise UsageError(f"divisor has {len(d)} coordinates; the surface has rank {model.rank}")
    return d


def _verdict_json(v) -> dict:
    return {"value": v.value.value, "relative_to": v.relative_to,
            "bound_limited": v.bound_limited, "note": v.note}


def _decided(v) -> bool:
    return v.definitive


def _cmd_surface_show(args, model):
    inv = model.invariants
    report = surface_to_json(model)
    report["correction_constant"] = correction_constant(inv, args.ceil_cs).value
    report["negative_curves"] = [model.curve_label(i) for i in model.negative_curve_indices]
    text = [f"surface {model.name}: rank {model.rank}",
            f"K = {model.describe(model.canonical)}, K^2 = {model.square(model.canonical)}",
            f"kappa = {inv.kodaira_dim}, chi = {inv.chi_O}, q = {inv.q}, p = {inv.char_p}",
            f"tags: {', '.join(sorted(inv.class_tags)) or '-'}",
            f"curves: {len(model.curves)}, generators: {len(model.effective_generators)}",
            f"negative curves: {len(model.negative_curve_indices)}",
            f"C_S = {report['correction_constant']}"]
    return report, text, DEFINITIVE


def _cmd_zariski(args, model):
    d = _divisor(args, model)
    z = zariski_decompose(d, model)
    report = {"D": d, "P": z.positive,
              "N": {model.curve_label(i): a for i, a in zip(z.support, z.coeffs)},
              "P_square": model.square(z.positive), "relative": z.relative}
    text = [f"D = {model.describe(d)}", f"P = {model.describe(z.positive)}",
            f"N = {model.describe(z.negative) if z.support else '0'}",
            f"P^2 = {report['P_square']}"]
    if z.relative:
        text.append("relative to the supplied negative curves")
    return report, text, UNDECIDED if z.relative else DEFINITIVE


def _cmd_izd(args, model):
    d = _divisor(args, model)
    iz = integral_zariski_decompose(d, model)
    report = {"D": d, "P_Z": iz.positive,
              "N_Z": {model.curve_label(i): c for i, c in zip(iz.support, iz.coeffs)},
              "P": iz.rational.positive,
              "N": {model.curve_label(i): a for i, a in zip(iz.rational.support, iz.rational.coeffs)},
              "augmentation_steps": [model.curve_label(i) for i in iz.steps],
              "relative": iz.relative}
    text = [f"D = {model.describe(d)}", f"P_Z = {model.describe(iz.positive)}",
            f"N_Z = {model.describe(iz.negative) if iz.support else '0'}",
            f"P = {model.describe(iz.rational.positive)}"]
    return report, text, UNDECIDED if iz.relative else DEFINITIVE


def _cmd_positivity(args, model):
    d = _divisor(args, model)
    bound = args.bound or default_bound()
    verdicts = {
        "pseudoeffective": is_pseudoeffective(d, model),
        "nef": is_nef(d, model),
        "big": is_big(d, model),
        "numerically_connected": is_numerically_connected(d, model, bound),
        "z_positive": is_Z_positive(d, model, bound),
    }
    report = {"D": d, "bound": bound, **{k: _verdict_json(v) for k, v in verdicts.items()}}
    report["euler_characteristic"] = euler_char(d, model)
    if d.is_integral:
        h0 = h0_lower_bound(d, model)
        report["h0_lower_bound"] = {"lower": h0.lower, "method": h0.method}
    text = [f"D = {model.describe(d)}, D^2 = {model.square(d)}"]
    for k, v in verdicts.items():
        extra = "" if v.relative_to == COMPLETE else " (relative to catalog)"
        text.append(f"{k}: {v.value.value}{extra}")
    code = DEFINITIVE if all(_decided(v) for v in verdicts.values()) else UNDECIDED
    return report, text, code


def _cmd_reider(args, model):
    d = _divisor(args, model)
    bound = args.bound or default_bound()
    r = reider_check(d, model, args.level, bound)
    report = to_jsonable(r)
    text = [f"level {r.level}: D^2 = {r.d_square}, needs >= {r.threshold}: "
            + ("ok" if r.hypothesis_ok else "hypothesis fails")]
    for o in r.obstructions:
        text.append(f"obstruction B = {model.describe(o.b)}: {o.case_label}")
    if r.exceptional_case is not None:
        text.append(f"exceptional case B = {model.describe(r.exceptional_case.b)}: "
                    f"{r.exceptional_case.case_label}")
    for o in r.proof_chain:
        text.append(f"proof-level chain B = {model.describe(o.b)}: {o.case_label}")
    if not r.obstructed:
        text.append("no obstructions")
    text.append(r.bound_note)
    code = DEFINITIVE if (r.hypothesis_ok and r.complete) else UNDECIDED
    return report, text, code


def _cmd_ms_search(args, model):
    d = _divisor(args, model)
    bound = args.bound or default_bound()
    out = ms_destabilizer_search(d, model, bound)
    report = {"D": d, "bound": bound, "found": out.found, "note": out.note,
              "exhaustive_box": out.exhaustive_box}
    if out.witness is not None:
        w = out.witness
        report["witness"] = {"B": w.b, "coeffs": list(w.coeffs), "(D-B).B": w.d_minus_b_dot_b,
                             "D^2": w.d_square, "(D-2B)^2": w.d_minus_2b_square}
        text = [f"B = {model.describe(w.b)}", f"(D-B).B = {w.d_minus_b_dot_b}",
                f"(D-2B)^2 = {w.d_minus_2b_square} >= D^2 = {w.d_square}", "D - 2B is big"]
        return report, text, DEFINITIVE
    return report, [f"no destabilizer with coefficients <= {bound}"], UNDECIDED


def _config(args) -> ProverConfig:
    order = DEFAULT_ORDER
    if args.rules:
        order = tuple(r.strip().upper() for r in args.rules.split(",") if r.strip())
    bound = args.bound or default_bound()
    try:
        return ProverConfig(order=order, allow_relative=args.allow_relative, z_bound=bound,
                            connect_bound=min(bound, 8), assume_seed=args.assume_seed,
                            ceil_cs=args.ceil_cs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _certificate_text(model, cert) -> list[str]:
    text = [f"conclusion: {cert.conclusion}"]
    if cert.subject is not None:
        text.append(f"subject: {model.describe(cert.subject)}")
    for node in cert.rules:
        text.append(f"rule {node.id}: {node.reference}")
        for c in node.checks:
            text.append(f"  {c.name}: {c.verdict}" + (f" ({c.detail})" if c.detail else ""))
    if cert.alternates:
        text.append("alternates: " + ", ".join(cert.alternates))
    text.extend(f"caveat: {c}" for c in cert.caveats)
    return text


def _cmd_ms_certify(args, model):
    d = _divisor(args, model)
    cert = certify_miyaoka_sakai(d, model, _config(args), multiples=args.multiples)
    report = cert.to_json()
    text = _certificate_text(model, cert)
    if cert.conclusion != UNKNOWN and not args.multiples and d.is_integral:
        try:
            w = weak_ms_exponent(d, model, args.e_cap, args.allow_relative)
            report["weak_exponent"] = w.e
            text.append(f"weak exponent e = {w.e}")
        except (HypothesisViolation, CapExhausted) as exc:
            report["weak_exponent"] = None
            text.append(f"weak exponent: {exc}")
    return report, text, UNDECIDED if cert.conclusion == UNKNOWN else DEFINITIVE


def _cmd_vanishing(args, model):
    d = _divisor(args, model)
    cert = prove_h1_vanishing(d, model, _config(args))
    return cert.to_json(), _certificate_text(model, cert), (
        UNDECIDED if cert.conclusion == UNKNOWN else DEFINITIVE)


def _cmd_cs(args, model):
    c = correction_constant(model.invariants, args.ceil_cs)
    report = {"value": c.value, "case_used": c.case_used, "rounded": c.rounded}
    return report, [f"C_S = {c.value} ({c.case_used})"], DEFINITIVE


COMMANDS = {
    "surface-show": _cmd_surface_show, "zariski": _cmd_zariski, "izd": _cmd_izd,
    "positivity": _cmd_positivity, "reider": _cmd_reider, "ms-search": _cmd_ms_search,
    "ms-certify": _cmd_ms_certify, "vanishing": _cmd_vanishing, "cs": _cmd_cs,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else DEFINITIVE
    try:
        model = _load(args)
        report, text, code = COMMANDS[args.subcommand](args, model)
    except (UsageError, SurfaceError, LatticeError, ZariskiError, HypothesisViolation,
            ValueError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        path = getattr(exc, "path", "")
        if path:
            payload["path"] = path
        print(json.dumps(payload), file=stderr)
        return INPUT_ERROR
    if args.format == "json":
        print(dumps(report), file=stdout)
    else:
        print("\n".join(text), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
