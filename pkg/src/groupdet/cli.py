"""Command-line interface: inspect groups, print tables, compute determinants, run checks."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .detlab import (
    SYMBOLIC_LIMIT,
    SingularElementError,
    SymbolicLimitError,
    circulant_theta,
    frobenius_theta,
    group_matrix,
    inverse_element,
    numeric_det_at,
    symbolic_det,
)
from .groups import FiniteGroup, GroupKind, GroupSpecError, make_group
from .polyring import poly_ring
from .reps import irreducible_set, table_rows
from .verify import (
    CHECKS,
    InapplicableCheckError,
    UnknownCheckError,
    list_checks,
    random_assignment,
    run_all,
    run_check,
)
from .verify.checks import default_bound, resolve_mode

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _timestamp() -> str | None:
    # reports must be byte-identical across runs, so only a pinned epoch is recorded
    return os.environ.get("SOURCE_DATE_EPOCH")


def _envelope(G: FiniteGroup, command: str, seed: int | None, results=None, payload=None) -> dict:
    return {
        "version": __version__,
        "group": str(G.spec),
        "command": command,
        "seed": seed,
        "timestamp": _timestamp(),
        "results": [r.to_json() for r in results or []],
        "payload": payload,
    }


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _emit_json(doc: dict, target: str | None, out) -> None:
    text = _dump(doc)
    if target is None or target == "-":
        out.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def _assignment_payload(G: FiniteGroup, assign) -> dict[str, str]:
    return {G.name(G.element(i)): str(assign[i]) for i in range(G.order)}


def _read_coeffs(G: FiniteGroup, source: str) -> dict[int, Fraction]:
    text = source
    if not source.lstrip().startswith("{"):
        path = Path(source)
        if not path.is_file():
            raise UsageError(f"--coeffs is neither a JSON object nor a readable file: {source!r}")
        text = path.read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad coefficient JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise UsageError("coefficients must be a JSON object mapping element name to rational string")
    out = {}
    for name, value in raw.items():
        try:
            i = G.index(G.parse_element(name))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not isinstance(value, (str, int)) or isinstance(value, bool):
            raise UsageError(f"coefficient of {name} must be a rational string such as '2/3'")
        try:
            out[i] = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"coefficient of {name} is not a rational number: {value!r}") from None
    # unspecified elements get coefficient 0
    return {i: out.get(i, Fraction(0)) for i in range(G.order)}


# -- commands ---------------------------------------------------------------------------


def cmd_info(args, out) -> int:
    G = make_group(args.group)
    reps = irreducible_set(G)
    info = {
        "family": G.kind.value,
        "order": G.order,
        "elements": G.names(),
        "exponent": G.exponent,
        "coefficient_field": f"Q(zeta_{G.conductor})",
        "irreducible_degrees": reps.degrees(),
    }
    if G.kind is not GroupKind.ABELIAN:
        info["rotation_subgroup"] = [G.name(g) for g in G.rotation_subgroup()]
        info["degree_one_count"] = len(reps.degree_one)
    if args.json is not None:
        _emit_json(_envelope(G, "info", None, payload=info), args.json, out)
        return EXIT_OK
    out.write(f"group: {G.spec}\n")
    for key, value in info.items():
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value)
        out.write(f"{key}: {value}\n")
    checks = list_checks(G)
    out.write("checks: " + ", ".join(f"{cid}" + ("" if st == "applicable" else " (skip)")
                                     for cid, st, _ in checks if st != "inapplicable") + "\n")
    return EXIT_OK


def cmd_reps(args, out) -> int:
    G = make_group(args.group)
    rows = table_rows(G)
    if args.json is not None:
        payload = {"elements": G.names(), "representations": [{"name": n, "values": cells} for n, cells in rows]}
        _emit_json(_envelope(G, "reps", None, payload=payload), args.json, out)
        return EXIT_OK
    out.write(f"representations of {G.spec} over Q(zeta_{G.conductor}), z = zeta_{G.conductor}\n")
    for name, cells in rows:
        out.write(f"{name}:\n")
        for el, cell in zip(G.names(), cells):
            out.write(f"  {el}: {cell}\n")
    return EXIT_OK


_FORMS = {
    "matrix": None,
    "frobenius": frobenius_theta,
    "circulant": circulant_theta,
}


def cmd_det(args, out) -> int:
    G = make_group(args.group)
    if args.form == "circulant" and G.kind is GroupKind.ABELIAN:
        raise UsageError("the circulant form needs a dihedral or quaternion group")
    if args.mode == "symbolic":
        if args.form == "matrix":
            theta = symbolic_det(group_matrix(G), limit=args.limit)
        else:
            theta = _FORMS[args.form](G, limit=args.limit)
        if args.json is not None:
            payload = {"form": args.form, "mode": "symbolic", "theta": str(theta), "terms": theta.to_json()}
            _emit_json(_envelope(G, "det", None, payload=payload), args.json, out)
        else:
            out.write(f"{theta}\n")
        return EXIT_OK
    bound = args.bound or default_bound(G)
    points = []
    for t in range(args.trials):
        assign = random_assignment(G, args.seed + t, bound)
        if args.form == "matrix":
            value = numeric_det_at(group_matrix(G), assign)
        else:
            value = _FORMS[args.form](G, assign)
        points.append({"assignment": _assignment_payload(G, assign), "theta": str(value)})
    if args.json is not None:
        payload = {"form": args.form, "mode": "numeric", "bound": bound, "points": points}
        _emit_json(_envelope(G, "det", args.seed, payload=payload), args.json, out)
        return EXIT_OK
    for p in points:
        assignment = ", ".join(f"{k}={v}" for k, v in p["assignment"].items())
        out.write(f"Theta({G.spec}) at {{{assignment}}} = {p['theta']}\n")
    return EXIT_OK


def _print_result(r, out) -> None:
    line = f"{r.check_id:<14} {r.status:<8} {r.mode}"
    if r.trials is not None:
        line += f" trials={r.trials} seed={r.seed}"
    if r.reason:
        line += f"  ({r.reason})"
    out.write(line + "\n")
    if r.status == "fail" and r.witness:
        out.write("    witness: " + json.dumps(r.witness, ensure_ascii=False) + "\n")


def _run_requested(G: FiniteGroup, check_id: str, args) -> list:
    kwargs = dict(mode=args.mode, trials=args.trials, seed=args.seed, bound=args.bound, limit=args.limit)
    if check_id == "all":
        return run_all(G, **kwargs)
    return [run_check(check_id, G, **kwargs)]


def cmd_verify(args, out) -> int:
    G = make_group(args.group)
    results = _run_requested(G, args.check, args)
    for r in results:
        _print_result(r, out)
    failed = sum(r.status == "fail" for r in results)
    passed = sum(r.status == "pass" for r in results)
    skipped = sum(r.status == "skipped" for r in results)
    out.write(f"{passed} passed, {failed} failed, {skipped} skipped\n")
    if args.json is not None:
        doc = _envelope(G, f"verify {args.check}", args.seed, results=results,
                        payload={"mode": resolve_mode(G, args.mode, args.limit), "trials": args.trials})
        Path(args.json).write_text(_dump(doc), encoding="utf-8")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_inverse(args, out) -> int:
    G = make_group(args.group)
    if args.coeffs is None:
        assign = random_assignment(G, args.seed, args.bound or default_bound(G))
    else:
        assign = _read_coeffs(G, args.coeffs)
    F = poly_ring(G).field
    assign = {i: F.scalar(v) if isinstance(v, Fraction) else v for i, v in assign.items()}
    try:
        inv = inverse_element(G, assign)
    except SingularElementError as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE
    coeffs = {G.name(G.element(i)): str(c.constant_value()) for i, c in enumerate(inv.coeffs)}
    if args.json is not None:
        payload = {"element": _assignment_payload(G, assign), "inverse": coeffs}
        _emit_json(_envelope(G, "inverse", args.seed if args.coeffs is None else None, payload=payload),
                   args.json, out)
        return EXIT_OK
    for name, value in coeffs.items():
        out.write(f"{name}: {value}\n")
    return EXIT_OK


def cmd_report(args, out) -> int:
    G = make_group(args.group)
    results = run_all(G, mode=args.mode, trials=args.trials, seed=args.seed, bound=args.bound, limit=args.limit)
    mode = resolve_mode(G, args.mode, args.limit)
    bound = args.bound or default_bound(G)
    payload: dict = {"mode": mode, "trials": args.trials, "bound": bound, "determinants": {}}
    dets = payload["determinants"]
    if G.order <= args.limit:
        theta = symbolic_det(group_matrix(G), limit=args.limit)
        dets["symbolic"] = str(theta)
    assign = random_assignment(G, args.seed, bound)
    dets["numeric"] = {
        "assignment": _assignment_payload(G, assign),
        "theta": str(numeric_det_at(group_matrix(G), assign)),
    }
    payload["summary"] = {
        s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")
    }
    doc = _envelope(G, "report", args.seed, results=results, payload=payload)
    _emit_json(doc, args.json, out)
    return EXIT_FAIL if payload["summary"]["fail"] else EXIT_OK


# -- parser ---------------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groupdet", description="Group determinants of abelian, dihedral and quaternion groups.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def group_arg(sp):
        sp.add_argument("group", help="C6, C2xC4, D5 or Q3 (case-insensitive)")

    def check_flags(sp, default_mode="auto"):
        sp.add_argument("--mode", choices=["auto", "symbolic", "randomized"], default=default_mode)
        sp.add_argument("--trials", type=_positive, default=20)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--bound", type=_positive, default=None, help="sample range [-B, B]; default 10*|G|")
        sp.add_argument("--limit", type=_positive, default=SYMBOLIC_LIMIT, help="largest order handled symbolically")

    sp = sub.add_parser("info", help="group order, elements and applicable checks")
    group_arg(sp)
    sp.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("reps", help="table of irreducible representations")
    group_arg(sp)
    sp.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT")
    sp.set_defaults(func=cmd_reps)

    sp = sub.add_parser("det", help="group determinant, symbolic or at random points")
    group_arg(sp)
    sp.add_argument("--mode", choices=["symbolic", "numeric"], default="symbolic")
    sp.add_argument("--form", choices=sorted(_FORMS), default="matrix")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=_positive, default=1)
    sp.add_argument("--bound", type=_positive, default=None)
    sp.add_argument("--limit", type=_positive, default=SYMBOLIC_LIMIT)
    sp.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT")
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("verify", help="run one checker or all of them")
    sp.add_argument("check", help="check id (see `info`) or 'all'")
    group_arg(sp)
    check_flags(sp)
    sp.add_argument("--json", default=None, metavar="OUT", help="write the JSON report to OUT")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("inverse", help="inverse of sum_g c_g g from the factorization formulas")
    group_arg(sp)
    sp.add_argument("--coeffs", default=None, help="JSON object or file: element name -> rational string")
    sp.add_argument("--seed", type=int, default=0, help="draw coefficients from this seed when --coeffs is absent")
    sp.add_argument("--bound", type=_positive, default=None)
    sp.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT")
    sp.set_defaults(func=cmd_inverse)

    sp = sub.add_parser("report", help="JSON report: every checker plus determinant payloads")
    group_arg(sp)
    check_flags(sp)
    sp.add_argument("--json", default=None, metavar="OUT", help="write to OUT instead of stdout")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "check", None) not in (None, "all") and args.check not in CHECKS:
        sys.stderr.write(f"error: unknown check id {args.check!r}\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (GroupSpecError, UsageError, UnknownCheckError, InapplicableCheckError, SymbolicLimitError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
