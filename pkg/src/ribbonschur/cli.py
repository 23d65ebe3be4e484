"""Command-line front end.

Exit status: 0 success, 1 failed verification, 2 usage or input error,
3 resource bound exceeded.  With ``--json`` every payload is a JSON document;
errors are reported on stderr as ``{"error": code, "message": text}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import compops, cone, perms, qsym, sym, verify
from .compositions import Composition, Partition
from .errors import NotSymmetricError, ResourceLimitError

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SCHEMAS = {
    "factor": "factor.json",
    "class": "factor.json",
    "equiv": "factor.json",
    "ribbon": "expansion.json",
    "skew": "expansion.json",
    "lr": "lr.json",
    "qsym": "qsym.json",
    "descents-matrix": "descents_matrix.json",
    "cone rays": "rays.json",
    "cone facets": "facets.json",
    "cone balanced": "balanced.json",
    "verify": "verify.json",
    "error": "error.json",
    "multicollection": "multicollection.json",
    "qsym_expr": "qsym_expr.json",
}


def load_schema(name: str) -> dict:
    """The JSON schema for a command's payload (or for an input format)."""
    text = resources.files(__package__).joinpath("schemas", SCHEMAS[name]).read_text()
    return json.loads(text)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _comp(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    return json.loads(Path(path).read_text())


# ---------------------------------------------------------------- payloads

def factor_payload(beta: Composition) -> dict:
    fac = compops.irreducible_factorization(beta)
    cls = compops.equivalence_class(beta)
    return {
        "input": beta.to_text(),
        "factors": [f.to_text() for f in fac.factors],
        "symmetric_flags": list(fac.symmetric_flags),
        "class": [c.to_text() for c in cls],
        "class_size": len(cls),
    }


def equiv_payload(beta: Composition, gamma: Composition) -> dict:
    out = factor_payload(beta)
    out["other"] = gamma.to_text()
    out["equivalent"] = compops.equivalent(beta, gamma)
    return out


def ribbon_payload(beta: Composition, basis: str, max_cells: int) -> dict:
    shape = sym.ribbon_shape(beta)
    out = {"input": beta.to_text(), "shape": {"outer": shape.outer.to_text(), "inner": shape.inner.to_text()},
           "basis": basis}
    if basis == "h":
        out["expansion"] = sym.ribbon_in_h(beta).to_json()
    elif basis == "F":
        out["expansion"] = sym.skew_schur_in_F(shape, max_cells).to_json()
    else:
        out["expansion"] = {"basis": "s", "n": beta.size,
                            "terms": sym.schur_coeffs_to_json(
                                sym.schur_extract(sym.skew_schur_in_F(shape, max_cells)))}
    return out


def skew_payload(shape: sym.SkewShape, basis: str, max_cells: int) -> dict:
    f = sym.skew_schur_in_F(shape, max_cells)
    out = {"shape": {"outer": shape.outer.to_text(), "inner": shape.inner.to_text()}, "basis": basis}
    if basis == "F":
        out["expansion"] = f.to_json()
    else:
        out["expansion"] = {"basis": "s", "n": shape.size, "terms": sym.schur_coeffs_to_json(sym.schur_extract(f))}
    return out


def lr_payload(beta: Composition, max_cells: int) -> dict:
    shape = sym.ribbon_shape(beta)
    coeffs = sym.schur_extract(sym.skew_schur_in_F(shape, max_cells))
    return {
        "input": beta.to_text(),
        "shape": {"outer": shape.outer.to_text(), "inner": shape.inner.to_text()},
        "coefficients": {lam.to_text(): int(c) for lam, c in coeffs.items()},
        "class": [c.to_text() for c in compops.equivalence_class(beta)],
    }


def qsym_payload(expr: qsym.QsymExpr, to: str | None) -> dict:
    out = {"input": expr.to_json()}
    if to:
        out["output"] = (qsym.to_m(expr) if to == "M" else qsym.to_f(expr)).to_json()
    symmetric = qsym.is_symmetric(expr)
    out["symmetric"] = symmetric
    if symmetric and expr.n >= 1:
        out["schur"] = sym.schur_coeffs_to_json(sym.schur_extract(expr))
        out["spread"] = [c.to_text() for c in sym.spread(expr)] if expr.terms else None
    return out


def rays_payload(n: int, max_n: int) -> dict:
    rays = cone.extreme_rays(n, max_n=max_n)
    return {
        "n": n,
        "count": len(rays),
        "non_schur_count": sum(not r.is_schur for r in rays),
        "rays": [r.to_json() for r in rays],
    }


def balanced_payload(mc: cone.Multicollection) -> dict:
    kappas = cone.kappa_values(mc)
    return {
        "n": mc.n,
        "kappa": {lam.to_text(): (None if k is None else qsym.format_rational(k)) for lam, k in kappas.items()},
        "fully_balanced": all(k is not None for k in kappas.values()),
        "symmetric": qsym.is_symmetric(mc.to_qsym()),
        "nonnegative": all(k >= 0 for _, k in mc.weights),
    }


# ---------------------------------------------------------------- text rendering

def _text(payload: dict, command: str) -> str:
    if command in ("factor", "class", "equiv"):
        lines = [f"{payload['input']} = " + " o ".join(payload["factors"]),
                 f"class ({payload['class_size']}): " + " ".join(payload["class"])]
        if command == "equiv":
            lines.append(f"{payload['input']} ~ {payload['other']}: {str(payload['equivalent']).lower()}")
        return "\n".join(lines)
    if command == "verify":
        lines = [f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}" for c in payload["checks"]]
        lines.append(f"{payload['passed']}/{payload['total']} checks passed")
        return "\n".join(lines)
    if command == "cone rays":
        lines = [f"{payload['count']} extreme rays ({payload['non_schur_count']} not Schur)"]
        for r in payload["rays"]:
            lines.append("  " + _combination(r["schur"]))
        return "\n".join(lines)
    return json.dumps(payload, indent=2)


def _combination(terms: dict) -> str:
    out = ""
    for key, c in terms.items():
        c = str(c)
        sign = "-" if c.startswith("-") else "+"
        c = c.lstrip("-")
        mono = "s_" + str(Partition.parse(key))
        term = mono if c == "1" else f"{c}*{mono}"
        out += (f" {sign} " if out else ("-" if sign == "-" else "")) + term
    return out


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ribbonschur", description="Ribbon Schur functions, compositions and the F-positive cone.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("factor", "class"):
        s = sub.add_parser(name, help="irreducible factorization and equivalence class")
        s.add_argument("composition", type=_comp)
    s = sub.add_parser("equiv", help="decide whether two ribbon Schur functions coincide")
    s.add_argument("beta", type=_comp)
    s.add_argument("gamma", type=_comp)

    s = sub.add_parser("ribbon", help="expand a ribbon Schur function")
    s.add_argument("composition", type=_comp)
    s.add_argument("--basis", choices=("h", "F", "s"), default="h")
    s.add_argument("--max-cells", type=_positive, default=sym.MAX_TABLEAU_CELLS,
                   help="tableau enumeration bound (default %(default)s)")

    s = sub.add_parser("skew", help="expand a skew Schur function, e.g. 4332/221")
    s.add_argument("shape")
    s.add_argument("--basis", choices=("F", "s"), default="F")
    s.add_argument("--max-cells", type=_positive, default=sym.MAX_TABLEAU_CELLS,
                   help="tableau enumeration bound (default %(default)s)")

    s = sub.add_parser("lr", help="Littlewood-Richardson coefficients of a ribbon")
    s.add_argument("composition", type=_comp)
    s.add_argument("--max-cells", type=_positive, default=sym.MAX_TABLEAU_CELLS,
                   help="tableau enumeration bound (default %(default)s)")

    s = sub.add_parser("qsym", help="convert a quasisymmetric expression (JSON file or -)")
    s.add_argument("file", nargs="?")
    s.add_argument("--to", choices=("M", "F"))
    s.add_argument("--monomial", type=_partition, help="use m_lambda instead of a file")

    s = sub.add_parser("descents-matrix", help="counts of permutations by descent set and inverse descent set")
    s.add_argument("n", type=_positive)
    s.add_argument("--max-n", type=_positive, default=perms.MAX_MATRIX_N,
                   help="enumeration bound (default %(default)s)")
    s.add_argument("--workers", type=_positive, default=None,
                   help="worker processes (default: $RIBBONSCHUR_WORKERS or 1)")

    s = sub.add_parser("cone", help="the cone of F-positive symmetric functions")
    csub = s.add_subparsers(dest="cone_command", required=True)
    c = csub.add_parser("rays", help="extreme rays")
    c.add_argument("n", type=_positive)
    c.add_argument("--max-n", type=_positive, default=7, help="bound on n (default %(default)s)")
    c = csub.add_parser("facets", help="irredundancy of each inequality class")
    c.add_argument("n", type=_positive)
    c.add_argument("--max-n", type=_positive, default=8, help="bound on n (default %(default)s)")
    c = csub.add_parser("balanced", help="kappa values of a multicollection (JSON file or -)")
    c.add_argument("file")

    s = sub.add_parser("verify", help="run exhaustive identity checks")
    s.add_argument("suite", choices=verify.SUITES + ("all",))
    s.add_argument("--n", dest="n_max", type=_positive, default=6, help="largest size checked (default %(default)s)")
    s.add_argument("--max-n", type=_positive, default=9, help="bound on --n (default %(default)s)")
    return p


def run(argv=None) -> tuple[str, dict, int]:
    """Execute a command; returns (command name, payload, exit status).

    ``--json`` may appear anywhere on the command line.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args([a for a in argv if a != "--json"])
    cmd = args.command
    if cmd in ("factor", "class"):
        return cmd, factor_payload(args.composition), EXIT_OK
    if cmd == "equiv":
        return cmd, equiv_payload(args.beta, args.gamma), EXIT_OK
    if cmd == "ribbon":
        return cmd, ribbon_payload(args.composition, args.basis, args.max_cells), EXIT_OK
    if cmd == "skew":
        try:
            shape = sym.SkewShape.parse(args.shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return cmd, skew_payload(shape, args.basis, args.max_cells), EXIT_OK
    if cmd == "lr":
        return cmd, lr_payload(args.composition, args.max_cells), EXIT_OK
    if cmd == "qsym":
        if args.monomial is not None:
            expr = qsym.monomial_sym(args.monomial)
        elif args.file:
            expr = qsym.QsymExpr.from_json(_load_json(args.file))
        else:
            raise UsageError("qsym needs a file or --monomial")
        return cmd, qsym_payload(expr, args.to), EXIT_OK
    if cmd == "descents-matrix":
        N = perms.descent_pair_matrix(args.n, max_n=args.max_n, workers=args.workers)
        return cmd, perms.matrix_to_json(N, args.n), EXIT_OK
    if cmd == "cone":
        sub = args.cone_command
        if sub == "rays":
            return "cone rays", rays_payload(args.n, args.max_n), EXIT_OK
        if sub == "facets":
            if args.n > args.max_n:
                raise ResourceLimitError(f"n = {args.n} exceeds the limit {args.max_n}")
            return "cone facets", cone.facet_report(args.n), EXIT_OK
        mc = cone.Multicollection.from_json(_load_json(args.file))
        return "cone balanced", balanced_payload(mc), EXIT_OK
    if cmd == "verify":
        if args.n_max > args.max_n:
            raise ResourceLimitError(f"--n {args.n_max} exceeds the limit {args.max_n}")
        checks = [c.to_json() for c in verify.run_suite(args.suite, args.n_max)]
        passed = sum(c["passed"] for c in checks)
        payload = {"suite": args.suite, "n_max": args.n_max, "checks": checks,
                   "passed": passed, "total": len(checks)}
        return cmd, payload, EXIT_OK if passed == len(checks) else EXIT_FAILED
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv=None) -> int:
    as_json = "--json" in (sys.argv[1:] if argv is None else argv)
    try:
        command, payload, status = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ResourceLimitError as exc:
        return _error("resource_limit", str(exc), EXIT_RESOURCE, as_json)
    except NotSymmetricError as exc:
        return _error("not_symmetric", str(exc), EXIT_USAGE, as_json)
    except (UsageError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        return _error("invalid_input", str(exc), EXIT_USAGE, as_json)
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(_text(payload, command))
    return status


def _error(code: str, message: str, status: int, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"error": code, "message": message}), file=sys.stderr)
    else:
        print(f"error [{code}]: {message}", file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
