"""Command-line front end.

Exit codes: 0 when a verdict was produced (refutations and bounded failures
included), 1 for usage or parse errors, 2 when the enumeration cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .bipoly import (
    XY,
    ZW,
    BiPoly,
    NotRealError,
    classify_conic,
    gcd,
    hermitian_reflect,
    zw_to_xy,
)
from .fischer import (
    BoundedFailure,
    dirichlet_ellipse,
    fischer_solve,
    format_in_r,
    harmonic_multiple_search,
    quartic_expand,
)
from .galois_lab import DEFAULT_SEED, BudgetExceeded, ks_refute_by_zeros, proposition_key_experiment
from .ks_lab import TransferRejected, ks_scan, modp_transfer
from .parser import ParseError, parse_poly
from .scalar import QQ, Field, FieldMismatchError, parse_field, prime_field

SCHEMA = "kslab/1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _field(args, default: str = "q") -> Field:
    try:
        return parse_field(args.field or default)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poly(text: str, field: Field, vars=ZW) -> BiPoly:
    return parse_poly(text, field, vars)


# -- subcommands ----------------------------------------------------------------
# each returns (human text, json payload)


def cmd_fischer_solve(args):
    F = _field(args)
    f, phi = _poly(args.f, F), _poly(args.phi, F)
    res = fischer_solve(f, phi, args.max_cofactor_deg)
    K = res.K if isinstance(res, BoundedFailure) else args.max_cofactor_deg
    payload = {"field": F.name, "f": str(f), "phi": str(phi), "K": K, **res.to_json()}
    if isinstance(res, BoundedFailure):
        text = f"bounded-failure\n{res.identity()}\nunsatisfied monomials: {list(res.unsatisfied)}"
    else:
        text = f"g = {res.g}\nh1 = {res.h1}\nh2 = {res.h2}\n{res.identity()}"
    return text, payload


def cmd_harmonic_divisor(args):
    F = _field(args)
    f = _poly(args.f, F)
    wit = harmonic_multiple_search(f, args.max_deg)
    if wit is None:
        text = f"none: {f} divides no nonzero harmonic polynomial g*f with deg(g) <= {args.max_deg}"
        return text, {"field": F.name, "f": str(f), "max_deg": args.max_deg, "witness": None}
    text = f"witness: ({f})*({wit.g}) = {wit.product}"
    return text, {"field": F.name, "f": str(f), "max_deg": args.max_deg, "witness": wit.to_json()}


def cmd_ks_scan(args):
    F = _field(args)
    f = _poly(args.f, F)
    rep = ks_scan(f, args.max_monomial, args.max_cofactor)
    lines = [f"f = {f} over {F.name}, N = {rep.N}, K = {rep.K}"]
    for (n, m), o in rep.outcomes.items():
        if isinstance(o, BoundedFailure):
            lines.append(f"  z^{n}w^{m}: bounded-failure (rank {o.rank} < {o.augmented_rank})")
        else:
            lines.append(f"  z^{n}w^{m}: {o.identity()}")
    for v in rep.structural:
        lines.append(f"structural [{v.criterion}]: {v.conclusion} ({v.note})")
    ok = len(rep.outcomes) - len(rep.failures)
    lines.append(f"{ok}/{len(rep.outcomes)} reductions succeeded")
    lines.append(f"verdict: {rep.verdict}")
    return "\n".join(lines), rep.to_json()


def cmd_ks_refute_zeros(args):
    F = _prime_field(args.p)
    f = _poly(args.f, F)
    v = ks_refute_by_zeros(f, args.max_ext)
    payload = {"field": F.name, "f": str(f), "max_ext": args.max_ext}
    if v is None:
        payload["verdict"] = None
        return f"none: no zero of {f} with incomparable subfields up to degree {args.max_ext}", payload
    wit = v.witness["zero_pair"]
    payload["verdict"] = v.to_json()
    text = (
        f"not-KS: f({wit.a}, {wit.b}) = 0 in F_{wit.p}^{wit.k} (modulus {_modulus_text(wit.a.field.modulus)})\n"
        f"deg a = {wit.deg_a}, deg b = {wit.deg_b}, containment: {wit.containment}\n"
        f"{v.note}"
    )
    return text, payload


def _modulus_text(coeffs) -> str:
    parts = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


def _prime_field(p: int):
    try:
        return prime_field(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gcd(args):
    F = _field(args)
    a, b = _poly(args.a, F), _poly(args.b, F)
    g = gcd(a, b)
    ca = a.exact_divide(g) if a else a
    cb = b.exact_divide(g) if b else b
    text = f"gcd = {g}\n{a} = ({g})*({ca})\n{b} = ({g})*({cb})"
    return text, {"field": F.name, "a": str(a), "b": str(b), "gcd": str(g), "cofactor_a": str(ca), "cofactor_b": str(cb)}


def cmd_reflect(args):
    F = _field(args, "qi")
    p = _poly(args.p, F)
    r = hermitian_reflect(p)
    text = f"{r}\nself-reflective: {'yes' if r == p else 'no'}"
    return text, {"field": F.name, "p": str(p), "reflected": str(r), "self_reflective": r == p}


def cmd_dirichlet(args):
    boundary, data = _poly(args.boundary, QQ, XY), _poly(args.data, QQ, XY)
    sol = dirichlet_ellipse(boundary, data)
    if not sol.verify():
        raise AssertionError("Dirichlet solution failed its own check")
    text = (
        f"{sol.u}\n"
        f"identity: {data} - ({sol.u}) = ({boundary})*({sol.multiplier})\n"
        f"laplacian(u) = 0"
    )
    payload = {
        "boundary": str(boundary),
        "data": str(data),
        "u": str(sol.u),
        "multiplier": str(sol.multiplier),
        "zw_form": {"f": str(sol.decomposition.f), "g": str(sol.decomposition.g), "h1": str(sol.decomposition.h1), "h2": str(sol.decomposition.h2)},
    }
    return text, payload


def cmd_classify_conic(args):
    F = _field(args)
    text_in = args.p
    try:
        p = _poly(text_in, F, XY)
    except ParseError:
        p = zw_to_xy(_poly(text_in, F, ZW))
    kind = classify_conic(p)
    return f"{p}: {kind}", {"p": str(p), "class": kind.value}


def cmd_quartic_check(args):
    F = _field(args)
    Fp, Gp = _poly(args.F, F), _poly(args.G, F)
    q = quartic_expand(Fp, Gp)
    derived, printed = format_in_r(q.derived), format_in_r(q.printed)
    diff = format_in_r(q.difference)
    lines = [
        "expansion of (r+s+t)(r+s-t)(r-s+t)(r-s-t) with s^2 = F, t^2 = G:",
        "  symbolic: r^4 - 2*(F + G)*r^2 + (F - G)^2",
        f"  derived:  {derived}",
        "comparison form r^4 - 4*(F + G)*r^2 + (F - G)^2:",
        f"  printed:  {printed}",
        f"difference (derived - printed): {diff}",
        f"agree: {'yes' if q.agrees else 'no'}",
    ]
    payload = {
        "F": str(Fp),
        "G": str(Gp),
        "symbolic": "r^4 - 2*(F + G)*r^2 + (F - G)^2",
        "derived": derived,
        "printed_form": "r^4 - 4*(F + G)*r^2 + (F - G)^2",
        "printed": printed,
        "difference": diff,
        "agree": q.agrees,
        "even_in_r": q.is_even(),
    }
    return "\n".join(lines), payload


def cmd_modp_transfer(args):
    F = _field(args)
    f = _poly(args.f, F)
    try:
        img = modp_transfer(f, args.p)
    except TransferRejected as exc:
        payload = {"field": F.name, "f": str(f), "p": args.p, "status": "rejected", "reason": str(exc), "dying": [list(e) for e in exc.dying]}
        return f"rejected: {exc}", payload
    same = img.support == f.support
    text = f"{img} over F_{args.p}\nsupport preserved: {'yes' if same else 'no'}"
    return text, {"field": F.name, "f": str(f), "p": args.p, "status": "ok", "image": str(img), "support_preserved": same}


def cmd_propkey_sample(args):
    _prime_field(args.p)
    rep = proposition_key_experiment(args.p, args.k, args.trials, args.seed)
    lines = [
        f"F_{args.p}^{args.k}, {args.trials} trials, seed {args.seed}",
        f"dim(F[a] + F[b]) = dim F[a,b] in {rep.hypothesis_met} trials",
        f"violations (neither subfield contains the other): {rep.violations}",
    ]
    for row in rep.to_json()["profiles"]:
        lines.append(f"  degrees ({row['deg_a']}, {row['deg_b']}): {row['samples']} samples, {row['hypothesis_met']} with equal dimensions")
    return "\n".join(lines), rep.to_json()


COMMANDS: dict[str, Callable] = {
    "fischer-solve": cmd_fischer_solve,
    "harmonic-divisor": cmd_harmonic_divisor,
    "ks-scan": cmd_ks_scan,
    "ks-refute-zeros": cmd_ks_refute_zeros,
    "gcd": cmd_gcd,
    "reflect": cmd_reflect,
    "dirichlet": cmd_dirichlet,
    "classify-conic": cmd_classify_conic,
    "quartic-check": cmd_quartic_check,
    "modp-transfer": cmd_modp_transfer,
    "propkey-sample": cmd_propkey_sample,
}


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="kslab", description="Exact Fischer decompositions and KS-polynomial verdicts.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, *, field=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit the JSON report")
        if field:
            sp.add_argument("--field", default=None, help="q | qi | fp:<p> | fq:<p>^<k>")
        return sp

    sp = add("fischer-solve", "decompose phi = f*g + h1(z) + h2(w)")
    sp.add_argument("--f", required=True)
    sp.add_argument("--phi", required=True)
    sp.add_argument("--max-cofactor-deg", type=int, default=None)

    sp = add("harmonic-divisor", "search for a harmonic multiple of f")
    sp.add_argument("--f", required=True)
    sp.add_argument("--max-deg", type=int, required=True)

    sp = add("ks-scan", "reduce all mixed monomials up to a degree")
    sp.add_argument("--f", required=True)
    sp.add_argument("--max-monomial", type=int, required=True)
    sp.add_argument("--max-cofactor", type=int, required=True)

    sp = add("ks-refute-zeros", "zero-pair refutation over F_p", field=False)
    sp.add_argument("--f", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-ext", type=int, required=True)

    sp = add("gcd", "bivariate gcd")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    sp = add("reflect", "swap z, w and conjugate coefficients (default field qi)")
    sp.add_argument("--p", required=True)

    sp = add("dirichlet", "harmonic polynomial matching data on an ellipse", field=False)
    sp.add_argument("--boundary", required=True)
    sp.add_argument("--data", required=True)

    sp = add("classify-conic", "real conic type of a polynomial of degree <= 2")
    sp.add_argument("--p", required=True)

    sp = add("quartic-check", "expand the four-factor product in r")
    sp.add_argument("--F", required=True)
    sp.add_argument("--G", required=True)

    sp = add("modp-transfer", "support-preserving reduction mod p")
    sp.add_argument("--f", required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("propkey-sample", "random two-subfield dimension counts", field=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        text, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"kslab: error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"kslab: parse error: {exc.pretty()}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"kslab: {exc}", file=sys.stderr)
        return 2
    except (ValueError, FieldMismatchError, NotRealError, ZeroDivisionError) as exc:
        print(f"kslab: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
