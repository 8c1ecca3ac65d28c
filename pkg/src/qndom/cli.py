"""Command line front end.

Exit codes: 0 success / no violations, 1 domain failure (set does not
dominate, a check found a violation), 2 usage or file-format error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bnd
from .congruence import NotApplicableError, check_congruences
from .constructions import double, greedy_dominating_set, hamming_perfect_code
from .cube import VertexSet
from .domination import DominatingSet, excess_identity, excess_profile, is_dominating
from .solver import SearchConfig, solve_min_dominating
from .surfeit import LemmaResult, SurfeitAnalysis, LEMMA_CHECKERS, surfeit_report
from .witness import WitnessFormatError, format_witness, read_witness, vertex_to_bits

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_DIM = 24


class UsageError(Exception):
    pass


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str, max_dim: int) -> tuple[int, VertexSet]:
    n, masks = read_witness(sys.stdin if path == "-" else path)
    if n > max_dim:
        raise UsageError(f"n={n} exceeds --max-dim {max_dim} (dense arrays need 2^n entries)")
    return n, VertexSet.from_masks(n, masks)


def _hist(h) -> dict[str, int]:
    items = enumerate(h) if not isinstance(h, dict) else sorted(h.items())
    return {str(k): int(v) for k, v in items if v}


def _lemma_doc(res: LemmaResult, n: int) -> dict:
    viol = []
    for v in res.violations:
        v = dict(v)
        for key in ("vertex", "center"):
            if key in v:
                v[key] = vertex_to_bits(v[key], n)
        viol.append(v)
    doc = {"violations": viol, "vacuity": res.vacuity}
    if res.slack_x2 is not None:
        doc["slack_x2"] = res.slack_x2
    if res.details:
        doc["details"] = res.details
    return doc


def build_verify(n: int, S: VertexSet) -> tuple[dict, int]:
    doc = {"command": "verify", "dim": n, "set_size": len(S)}
    if not is_dominating(S):
        doc["dominating"] = False
        return doc, EXIT_FAIL
    prof = excess_profile(DominatingSet(S))
    doc["dominating"] = True
    doc["excess"] = {
        "histogram": _hist(prof.histogram),
        "total": prof.total,
        "identity_value": excess_identity(n, len(S)),
        "identity_holds": prof.total == excess_identity(n, len(S)),
    }
    return doc, EXIT_OK


def build_analyze(n: int, S: VertexSet, checks: set[str], lemmas=(1, 2, 3, 4, 5)) -> tuple[dict, int]:
    doc, code = build_verify(n, S)
    doc["command"] = "analyze"
    if code != EXIT_OK:
        return doc, code
    D = DominatingSet(S)
    an = SurfeitAnalysis(D)
    failed = False
    if "surfeit" in checks:
        rep = surfeit_report(D, an.profile)
        doc["surfeit"] = {"histogram": _hist(an.sprofile.histogram)}
        doc["zeta"] = {
            "total": rep.zeta_total,
            "m1": rep.zeta_m1,
            "m2": rep.zeta_m2,
            "max": rep.zeta_max,
        }
        failed |= not (rep.zeta_m1 == rep.zeta_m2 == rep.zeta_total)
    if "congruence" in checks:
        try:
            cr = check_congruences(D, an.profile)
        except NotApplicableError as exc:
            doc["congruence"] = {"status": f"skipped: precondition ({exc})"}
        else:
            doc["congruence"] = {
                "vertices_checked": cr.vertices_checked,
                "parity_violations": [[vertex_to_bits(v, n), x] for v, x in cr.parity_violations],
                "mod3_violations": [[vertex_to_bits(v, n), x] for v, x in cr.mod3_violations],
            }
            failed |= not cr.ok
    if "lemmas" in checks:
        section = {}
        for k in sorted(lemmas):
            try:
                res = LEMMA_CHECKERS[k](D, an)
            except NotApplicableError as exc:
                section[f"lemma{k}"] = {"status": f"skipped: precondition ({exc})"}
                continue
            section[f"lemma{k}"] = _lemma_doc(res, n)
            failed |= not res.ok
        doc["lemmas"] = section
    return doc, EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    n, S = _load(args.file, args.max_dim)
    doc, code = build_verify(n, S)
    _emit(doc, args.out)
    return code


def cmd_analyze(args) -> int:
    n, S = _load(args.file, args.max_dim)
    checks = set(args.checks.split(","))
    unknown = checks - {"congruence", "lemmas", "surfeit"}
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    doc, code = build_analyze(n, S, checks, _parse_lemmas(args.lemmas))
    _emit(doc, args.out)
    return code


def cmd_congruence(args) -> int:
    n, S = _load(args.file, args.max_dim)
    doc, code = build_analyze(n, S, {"congruence"})
    doc["command"] = "congruence"
    _emit(doc, args.out)
    return code


def cmd_lemmas(args) -> int:
    n, S = _load(args.file, args.max_dim)
    doc, code = build_analyze(n, S, {"lemmas"}, _parse_lemmas(args.only))
    doc["command"] = "lemmas"
    _emit(doc, args.out)
    return code


def _parse_lemmas(spec: str) -> tuple[int, ...]:
    try:
        ks = tuple(sorted({int(k) for k in spec.split(",")}))
    except ValueError:
        raise UsageError(f"bad lemma list {spec!r}") from None
    if any(k not in LEMMA_CHECKERS for k in ks):
        raise UsageError("lemmas are numbered 1..5")
    return ks


def cmd_bounds(args) -> int:
    try:
        rows = bnd.bound_table(args.n_from, args.n_to)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit({"command": "bounds", "bounds": [r.as_dict() for r in rows]}, args.out)
    else:
        text = bnd.format_table(rows) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        if args.kind == "hamming":
            D = hamming_perfect_code(args.r)
            note = f"Hamming code r={args.r}"
        elif args.kind == "greedy":
            D = greedy_dominating_set(args.n)
            note = f"greedy n={args.n}"
        else:
            n, S = _load(args.input, 29)
            D = DominatingSet(S)
            for _ in range(args.times):
                D = double(D)
            note = f"doubled {args.times}x from n={n}"
    except ValueError as exc:
        if isinstance(exc, WitnessFormatError):
            raise
        raise UsageError(str(exc)) from None
    text = format_witness(D.n, D.members.masks(), [note, f"size={len(D)}"])
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        config = SearchConfig(
            upper_bound_seed=args.ub,
            node_limit=args.node_limit,
            time_limit=args.time_limit,
            symmetry=not args.no_symmetry,
            threads=args.threads,
        )
        res = solve_min_dominating(args.n, config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.witness:
        Path(args.witness).write_text(
            format_witness(args.n, res.witness.members.masks(),
                           [f"solver optimum={res.optimum} proven={res.proven_optimal}"])
        )
    doc = {
        "command": "solve",
        "dim": args.n,
        "set_size": len(res.witness),
        "solver": {
            "optimum": res.optimum,
            "proven_optimal": res.proven_optimal,
            "nodes_explored": res.nodes_explored,
            "witness": [vertex_to_bits(int(m), args.n) for m in res.witness.members.masks()],
        },
    }
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qndom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def witness_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="witness file ('-' for stdin)")
        sp.add_argument("--out", help="write the JSON report here instead of stdout")
        sp.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                        help="refuse dense computations above this n (memory ~ 2^n)")
        return sp

    sp = witness_cmd("verify", "check domination and the excess identity")
    sp.set_defaults(func=cmd_verify)

    sp = witness_cmd("analyze", "excess, surfeit, congruence and lemma checks")
    sp.add_argument("--checks", default="surfeit,congruence,lemmas",
                    help="comma-separated subset of surfeit,congruence,lemmas")
    sp.add_argument("--lemmas", default="1,2,3,4,5", help="which lemma checkers to run")
    sp.set_defaults(func=cmd_analyze)

    sp = witness_cmd("congruence", "parity and mod-3 congruence checks (6 | n)")
    sp.set_defaults(func=cmd_congruence)

    sp = witness_cmd("lemmas", "run the lemma checkers")
    sp.add_argument("--only", default="1,2,3,4,5", help="comma-separated lemma numbers")
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("bounds", help="tabulate lower bounds")
    sp.add_argument("--from", dest="n_from", type=int, required=True)
    sp.add_argument("--to", dest="n_to", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("construct", help="write a witness file")
    csub = sp.add_subparsers(dest="kind", required=True)
    h = csub.add_parser("hamming", help="Hamming code of length 2^r - 1")
    h.add_argument("--r", type=int, required=True)
    g = csub.add_parser("greedy", help="greedy dominating set")
    g.add_argument("--n", type=int, required=True)
    d = csub.add_parser("double", help="double a witness into dimension n+1")
    d.add_argument("--in", dest="input", required=True, help="input witness file")
    d.add_argument("--times", type=int, default=1)
    for c in (h, g, d):
        c.add_argument("--out", help="witness output path (default stdout)")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("solve", help="exact minimum dominating set for small n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ub", type=int, help="upper bound seed")
    sp.add_argument("--time-limit", type=float)
    sp.add_argument("--node-limit", type=int)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--no-symmetry", action="store_true")
    sp.add_argument("--witness", help="write the witness file here")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_solve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WitnessFormatError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
