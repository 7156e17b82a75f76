"""Command-line front end: ``toralorders {hj,cover,symbol,order,classify}``.

Input is JSON from ``-i`` (a path or inline JSON) or stdin.  Exit codes:
0 success, 1 negative verdict or failed check, 2 malformed input,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any

from . import __version__
from .algebra import (
    AlgebraError,
    TruncatedLocalRing,
    cycle_type,
    from_json as algebra_from_json,
    is_normal_with_uniformiser,
    left_span,
    quotient,
    radical,
    simples_with_action,
    verify_associativity,
)
from .classifier import ConstructionError, LocalisedBrauerClass, MalformedInput, certificate_text, report_json
from .fields import FieldError, field
from .hj import (
    IntersectionData,
    InvariantError,
    continued_fraction,
    cover_generators,
    determinant_of_R,
    f1_power_check,
    nu_sequence,
    pullback_divisor,
    singularity_type,
    toral_generators,
)
from .orders import (
    BudgetExceeded,
    OrderError,
    build_delta_d,
    flags_and_projectives,
    hom_closed_form,
    hom_table,
    no_secondary_setup,
    uniformiser_and_checks,
    verify_assumption,
    with_secondary_setup,
    hj_setup,
)
from .symbols import (
    CyclicExtension,
    SymbolPresentation,
    build_cover,
    build_hj_symbol,
    build_symbol,
    format_element,
    parse_element,
    split_witness,
    tame_ramification,
)

SCHEMAS: dict[str, Any] = {
    "hj": {"m_list": "[int >= 2, ...]"},
    "cover": {"m_list": "[int >= 2, ...]", "q": "prime power (default 7)"},
    "symbol": {"q": "prime power", "n": "int", "zeta_exp": "int coprime to n (default 1)",
               "a": "monomial expression in u, v", "b": "monomial expression in u, v"},
    "order": {"base": {"kind": "dvr | symbol | hj | table",
                       "dvr": {"q": "prime power"},
                       "symbol": "symbol schema",
                       "hj": {"q": "prime power", "m_list": "[int]", "alpha": "unit (optional)"},
                       "table": "algebra JSON {dim, ring:{q}, table, one}"},
              "d": "int >= 1", "z": "element expression, or coordinate list for kind=table",
              "t": "companion"},
    "classify": {"variant": "regular_no_secondary | regular_with_secondary | singular_hj",
                 "q": "int", "n": "int", "a": "unit", "b": "unit", "zeta_exp": "int",
                 "m_list": "[int]", "alpha": "unit",
                 "g": {"prime": "v | end_left | end_right | E_i", "value": "int >= 1"},
                 "n_lambda": "int >= 1"},
    "expressions": "products of factors joined by '*': an integer (field element code, '-k' is "
                   "minus k) or a variable with optional '^e'; sums with '+' where elements are expected",
}


class CLIError(ValueError):
    pass


def _load(arg: str | None) -> Any:
    if arg is None or arg == "-":
        text = sys.stdin.read()
    else:
        p = Path(arg)
        text = p.read_text() if not arg.lstrip().startswith(("{", "[")) and p.exists() else arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"invalid JSON input: {exc}") from None


def _data(obj) -> IntersectionData:
    if "m_list" not in obj:
        raise CLIError("missing field 'm_list'")
    return IntersectionData(obj["m_list"])


def _frac(x) -> str:
    return str(x)


def run_hj(obj, N, seed):
    data = _data(obj)
    t = singularity_type(data)
    gens = cover_generators(data)
    D = pullback_divisor(data)
    return {
        "m_list": list(data.m_list),
        "nu": [list(v) for v in nu_sequence(data)],
        "type": {"m": t.m, "k": t.k},
        "det": determinant_of_R(data),
        "continued_fraction": _frac(continued_fraction(data)),
        "f1": {"point": [_frac(gens.f1.i), gens.f1.j], "grade": gens.f1_grade},
        "f2": {"point": [_frac(gens.f2.i), gens.f2.j], "grade": gens.l},
        "f1_power_divisor": list(f1_power_check(data).coeffs),
        "pullback_divisor": list(D.coeffs),
        "generators": [[_frac(p.i), p.j] for p in toral_generators(D, data)],
    }, 0


def run_cover(obj, N, seed):
    data = _data(obj)
    F = field(int(obj.get("q", 7)))
    S = build_cover(data, F, N)

    def mono(e):
        a, b = e
        s = "*".join(p for p in (f"f1^{a}" if a > 1 else "f1" if a else "", f"f2^{b}" if b > 1 else "f2" if b else "") if p)
        return s or "1"

    inv = S.invariant_basis()
    return {
        "type": {"m": S.m, "k": S.k}, "l": S.l, "q": F.q,
        "grading": {"f1": S.f1_grade, "f2": S.l % S.m if S.m else 0},
        "dim": S.ring.dim,
        "invariant_basis": [mono(e) for e in inv],
        "invariant_dim": len(inv),
        "matches_r_cone": inv == S.r_cone_basis(),
        "f1_power_point": [_frac(S.lattice_point((S.m, 0)).i), S.m],
    }, 0


def run_symbol(obj, N, seed):
    F = field(int(obj["q"]))
    pres = SymbolPresentation.from_json(F, obj, N)
    A = build_symbol(pres)
    out: dict[str, Any] = {"symbol": pres.label(), "q": F.q, "dim": A.dim,
                           "ring_dim": A.ring.dim, "associative": verify_associativity(A)}
    if pres.ring_vars:
        out["ramification"] = {p: asdict(tame_ramification(pres, p)) for p in ("u", "v")}
    else:
        res = split_witness(A, seed)
        out["split_witness"] = None if res.witness is None else format_element(A, res.witness)
        out["search"] = {"tried": res.tried, "budget": res.budget}
    ok = out["associative"] and out.get("split_witness", "") is not None
    return out, 0 if ok else 1


def _order_base(spec: dict, N: int):
    kind = spec.get("kind", "table" if "table" in spec else None)
    if kind == "dvr":
        F = field(int(spec["q"]))
        A = TruncatedLocalRing(F, ("s",), N).algebra()
        return A, (lambda text: _ring_element(A, text)), None
    if kind == "symbol":
        F = field(int(spec["q"]))
        A = build_symbol(SymbolPresentation.from_json(F, spec, N))
        setup = None
        for make in (no_secondary_setup, with_secondary_setup):
            try:
                setup = make(A)
                break
            except OrderError:
                continue
        return A, A.element, setup
    if kind == "hj":
        F = field(int(spec["q"]))
        S = build_cover(_data(spec), F, N)
        E = CyclicExtension(F, S.m, int(spec["alpha"])) if "alpha" in spec else CyclicExtension.default(F, S.m)
        A = build_hj_symbol(S, E)
        return A, A.element, hj_setup(A)
    if kind == "table":
        A = algebra_from_json(spec)
        return A, (lambda z: {k: A.F.element(int(c)) for k, c in enumerate(z) if A.F.element(int(c))}), None
    raise CLIError(f"unknown base kind {kind!r}")


def _ring_element(A, text: str):
    out = {}
    for mon in parse_element(A.F, text, ("s",)):
        e = (mon.exponent("s"),)
        if sum(e) < len(A.labels):
            out[A.labels.index(e)] = A.F.add[out.get(A.labels.index(e), 0)][mon.scalar]
    return {k: c for k, c in out.items() if c}


def run_order(obj, N, seed):
    if obj.get("t", "companion") != "companion":
        raise CLIError("only the companion uniformiser is supported")
    base_spec = obj.get("base", obj)
    A, parse, setup = _order_base(base_spec, N)
    d = int(obj.get("d", 1))
    z = parse(obj["z"]) if "z" in obj else (setup.z if setup else None)
    if z is None:
        raise CLIError("missing field 'z'")
    T = build_delta_d(A, z, d)
    rep = uniformiser_and_checks(T, seed)
    out: dict[str, Any] = {
        "base": A.name, "base_dim": A.dim, "d": d, "dim": T.dim,
        "uniformiser": {"t_power_is_z": rep.t_power_is_z, "normal": rep.normal,
                        "quotient_dim": rep.quotient_dim, "expected_quotient_dim": rep.expected_quotient_dim,
                        "block_product": rep.kernel_matches and rep.diagonal_multiplicative},
    }
    ok = rep.passed
    try:
        simples, perm = simples_with_action(T, rep.t, seed)
        out["simples"] = {"count": len(simples), "cycle_type": cycle_type(perm)}
        out["normal_with_uniformiser"] = is_normal_with_uniformiser(T, rep.t)
    except AlgebraError as exc:
        out["simples"] = {"error": str(exc)}
        ok = False
    table = [[hom_table(d, i, j)[1] for j in range(2 * d)] for i in range(2 * d)]
    out["hom_table"] = table
    out["hom_closed_form_agrees"] = all(
        hom_closed_form(d, i, j) in (None, table[i][j]) for i in range(2 * d) for j in range(2 * d)
    )
    zA = left_span(A, [z])
    Dbar = quotient(A, zA).algebra
    if Dbar.dim <= 64 and radical(Dbar).dim == 0:
        try:
            fr = flags_and_projectives(Dbar, d, seed)
            out["flags"] = {"count": len(fr.flags), "classes": fr.classes, "r": fr.r,
                            "all_local": fr.all_local, "tops_have_r_simples": fr.tops_have_r_simples,
                            "note": fr.note}
        except BudgetExceeded as exc:
            out["flags"] = {"skipped": str(exc)}
    else:
        out["flags"] = {"skipped": "Δ/zΔ is not a small semisimple algebra"}
    if setup is not None and setup.z == z:
        ar = verify_assumption(setup, seed)
        out["assumption"] = {k: asdict(getattr(ar, k)) for k in ("support", "radical", "hereditary")}
        ok = ok and ar.passed
    return out, 0 if ok else 1


def run_classify(obj, N, seed):
    c = LocalisedBrauerClass.from_json(obj)
    return report_json(c, N, seed)


COMMANDS = {"hj": run_hj, "cover": run_cover, "symbol": run_symbol, "order": run_order, "classify": run_classify}


def _scalar(v: Any) -> bool:
    return not isinstance(v, (dict, list))


def _text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    items = obj.items() if isinstance(obj, dict) else ((None, v) for v in obj)
    for k, v in items:
        head = f"{pad}{k}:" if k is not None else f"{pad}-"
        if _scalar(v) or (isinstance(v, list) and all(map(_scalar, v))):
            lines.append(f"{head} {json.dumps(v, ensure_ascii=False) if isinstance(v, list) else v}")
        else:
            lines.append(head)
            lines.extend(_text(v, indent + 1))
    return lines


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toralorders", description="Toral terminal orders at desk scale.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--schema", action="store_true", help="print the input schemas and exit")
    sub = p.add_subparsers(dest="command")
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("-i", "--input", help="path to a JSON file, inline JSON, or - for stdin (default: stdin)")
        sp.add_argument("-N", "--truncation", type=int, default=6)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--schema", action="store_true", help="print this command's input schema")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema and args.command is None:
        print(json.dumps(SCHEMAS, indent=2, ensure_ascii=False))
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    if args.schema:
        print(json.dumps({args.command: SCHEMAS[args.command], "expressions": SCHEMAS["expressions"]},
                         indent=2, ensure_ascii=False))
        return 0
    if args.truncation < 2:
        print("error: truncation N must be at least 2", file=sys.stderr)
        return 2
    try:
        obj = _load(args.input)
        if not isinstance(obj, dict):
            raise CLIError("input must be a JSON object")
        out, code = COMMANDS[args.command](obj, args.truncation, args.seed)
    except (InvariantError, ConstructionError, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 3
    except (CLIError, MalformedInput, FieldError, AlgebraError, OrderError, KeyError, TypeError, ValueError) as exc:
        msg = f"missing field {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2
    out = {"command": args.command, "truncation": args.truncation, "seed": args.seed, **out}
    if args.format == "json":
        print(json.dumps(out, indent=2, ensure_ascii=False))
    elif args.command == "classify":
        print(certificate_text(out))
    else:
        print("\n".join(_text(out)))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())


def main_entry() -> None:
    sys.exit(main())
