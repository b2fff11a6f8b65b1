"""Command-line front end.

Exit codes: 0 success, 1 a verify suite failed, 2 precondition failure,
3 numerical failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .builders import fixture
from .checks import relation_set_checks
from .config import DEFAULT, Tolerances, rng_for
from .critical import classify_critical, hn_type_algebraic
from .deformation import deformation_complex
from .errors import NumericalFailure, PreconditionFailed
from .flow import CONVERGED, integrate_flow
from .jsonio import (dims_from_any, dump_json, load_json, map_from_dict, quiver_from_dict,
                     rep_from_dict)
from .ledger import build_ledger
from .quiver import dims_and_forms
from .rep import GradedLinearMap, Representation
from .slice_hecke import AdjacentPair, hecke_tangent_report
from .stability import CentralElement, canonical_central
from .suites import SUITES, run_all, run_suite

EXIT_OK, EXIT_FAILED, EXIT_PRECONDITION, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_quiver(spec: str):
    if Path(spec).is_file():
        return quiver_from_dict(load_json(spec))
    try:
        return fixture(spec)
    except (KeyError, ValueError) as exc:
        raise PreconditionFailed(f"no quiver file or fixture named {spec!r}") from exc


def _alpha(Q, spec: str, v) -> CentralElement:
    if spec == "canonical":
        return canonical_central(Q, v)
    return CentralElement.of(Q, load_json(spec))


def _rep(Q, args, v=None, seed_key="rep") -> Representation:
    if args.rep:
        x = rep_from_dict(Q, load_json(args.rep))
        if v is not None and x.dims != v:
            raise PreconditionFailed(f"representation has dims {x.dims}, expected {v}")
        return x
    if v is None:
        raise PreconditionFailed("pass --rep or --v")
    return Representation.random(Q, v, rng_for(args.seed, seed_key))


def _split_tol(argv: list[str]) -> tuple[list[str], dict]:
    rest, over = [], {}
    for a in argv:
        if a.startswith("--tol."):
            key, sep, val = a[len("--tol."):].partition("=")
            if not sep:
                raise UsageError(f"expected --tol.key=value, got {a}")
            over[key] = val
        else:
            rest.append(a)
    return rest, over


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quiverflow", description="quiver representation and flow toolkit")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    def common(sp, rep=True):
        sp.add_argument("--quiver", required=True, help="quiver JSON file or fixture name")
        if rep:
            sp.add_argument("--rep", help="representation JSON file")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json-out")
        return sp

    common(sub.add_parser("check", help="structural checks of the relation set"), rep=False)
    sp = common(sub.add_parser("dims", help="Hom and Rel dimensions and Ringel forms"), rep=False)
    sp.add_argument("--v", required=True)
    sp.add_argument("--v2")

    sp = common(sub.add_parser("flow", help="integrate the downward flow and classify"))
    sp.add_argument("--v")
    sp.add_argument("--alpha", default="canonical")
    sp.add_argument("--csv-out")

    sp = common(sub.add_parser("hn", help="algebraic HN type"))
    sp.add_argument("--v")
    sp.add_argument("--alpha", default="canonical")

    sp = common(sub.add_parser("slice", help="deformation complex and negative slice"))
    sp.add_argument("--v", help="dims of the first block when --rep is absent")
    sp.add_argument("--v2", required=True)
    sp.add_argument("--rep2")

    for name, helptext in (("hecke", "tangent ranks on the Hecke correspondence"),
                           ("ledger", "degree and rank ledger for an adjacent pair")):
        sp = common(sub.add_parser(name, help=helptext))
        sp.add_argument("--v", help="total dimension vector")
        sp.add_argument("--v-u", dest="v_u", required=True)
        sp.add_argument("--k", required=True)
        sp.add_argument("--alpha", default="canonical")
        if name == "hecke":
            sp.add_argument("--y", help="JSON blocks of y in Hom^1(e_k, v_u)")
        else:
            sp.add_argument("--samples", type=int, default=5)
            sp.add_argument("--eta-degree", type=int, default=0)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--json-out")
    return p


def _pair(args, Q, tol: Tolerances) -> AdjacentPair:
    v_u = dims_from_any(Q, args.v_u)
    x_u = _rep(Q, args, v_u, "x_u") if args.rep else Representation.zero(Q, v_u)
    v = dims_from_any(Q, args.v) if args.v else v_u + Q.basis_vector(args.k)
    alpha = _alpha(Q, args.alpha, v)
    return AdjacentPair(Q, v, v_u, args.k, x_u, alpha)


def _run(args, tol: Tolerances) -> tuple[dict, int]:
    if args.cmd == "verify":
        if args.suite == "all":
            rep = run_all(args.seed, args.trials, tol)
            return rep, EXIT_OK if rep["passed"] else EXIT_FAILED
        if args.suite not in SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
        r = run_suite(args.suite, args.seed, args.trials, tol)
        return r.as_dict(), EXIT_OK if r.passed else EXIT_FAILED

    Q, R = _load_quiver(args.quiver)
    if args.cmd == "check":
        return relation_set_checks(Q, R).as_dict(), EXIT_OK
    if args.cmd == "dims":
        v1 = dims_from_any(Q, args.v)
        v2 = dims_from_any(Q, args.v2) if args.v2 else v1
        return dims_and_forms(Q, R, v1, v2).as_dict(), EXIT_OK
    if args.cmd in ("flow", "hn"):
        v = dims_from_any(Q, args.v) if args.v else None
        x = _rep(Q, args, v)
        alpha = _alpha(Q, args.alpha, x.dims)
        if args.cmd == "hn":
            return {"hn": hn_type_algebraic(x, alpha, tol.rank_rtol).as_dict()}, EXIT_OK
        res = integrate_flow(x, alpha, tol)
        if args.csv_out:
            Path(args.csv_out).write_text(res.csv())
        out = {"flow": res.summary(), "start_hn": hn_type_algebraic(x, alpha).as_dict()}
        if res.status != CONVERGED:
            # the limit is not critical, so there is nothing to classify
            sys.stderr.write(f"quiverflow: flow stopped with status {res.status}\n")
            out["classification"] = None
            return out, EXIT_NUMERICAL
        out["classification"] = classify_critical(res.limit, alpha, tol).as_dict()
        return out, EXIT_OK
    if args.cmd == "slice":
        v = dims_from_any(Q, args.v) if args.v else None
        x1 = _rep(Q, args, v)
        v2 = dims_from_any(Q, args.v2)
        x2 = rep_from_dict(Q, load_json(args.rep2)) if args.rep2 else Representation.zero(Q, v2)
        d = deformation_complex(Q, R, x1, x2, tol)
        return {**d.as_dict(), "euler_char": d.euler_char, "slice_dim": len(d.slice_basis)}, EXIT_OK
    if args.cmd == "hecke":
        pair = _pair(args, Q, tol)
        if args.y:
            y = map_from_dict(Q, load_json(args.y), pair.e_k, pair.v_u)
        else:
            y = GradedLinearMap.random(Q, pair.e_k, pair.v_u, rng_for(args.seed, "hecke-y"))
        return hecke_tangent_report(pair, R, y, tol).as_dict(), EXIT_OK
    if args.cmd == "ledger":
        pair = _pair(args, Q, tol)
        L = build_ledger(pair, R, args.samples, args.seed, args.eta_degree, tol)
        return L.as_dict(), EXIT_OK
    raise UsageError("missing subcommand")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv, over = _split_tol(argv)
        args = parser.parse_args(argv)
        if args.cmd is None:
            raise UsageError("missing subcommand")
        tol = DEFAULT.with_overrides(over) if over else DEFAULT
    except (UsageError, KeyError, ValueError) as exc:
        sys.stderr.write(f"quiverflow: {exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    try:
        out, code = _run(args, tol)
    except UsageError as exc:
        sys.stderr.write(f"quiverflow: {exc}\n")
        return EXIT_USAGE
    except PreconditionFailed as exc:
        sys.stderr.write(f"quiverflow: precondition failed: {exc}\n")
        return EXIT_PRECONDITION
    except NumericalFailure as exc:
        sys.stderr.write(f"quiverflow: numerical failure: {exc}\n")
        return EXIT_NUMERICAL
    text = dump_json(out)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(text + "\n")
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
