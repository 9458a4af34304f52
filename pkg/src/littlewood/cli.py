"""Command-line interface.

Subcommands mirror the library: `modrule` runs the rules on one label,
`terms` lists complex terms, `qset` lists a difference-one family, `betti`
emits resolution tables, `verify` streams check reports as JSON lines.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure or
disagreement between the two rule formulations.
"""

from __future__ import annotations

import argparse
import sys

from .complexes import complex_terms, enumerate_q
from .modrules import RuleDisagreement, modrule
from .partitions import (
    all_partitions_up_to,
    format_pair,
    format_partition,
    parse_partition,
    partitions_of,
)
from .verify import (
    betti_table,
    canonical_json,
    verify_bijection,
    verify_euler,
    verify_littlewood_identity,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # convert argparse's sys.exit(2) into exit code 1 via main()
    def error(self, message):
        raise _UsageError(message)


def _add_common(sub, lambda2: bool = True) -> None:
    sub.add_argument("--group", choices=["sp", "o", "gl"])
    sub.add_argument("--dim", type=int)
    sub.add_argument("--lambda", dest="lam", metavar="PARTS")
    if lambda2:
        sub.add_argument("--lambda2", dest="lam2", metavar="PARTS")


def _require(args, *names) -> None:
    flags = {"lam": "--lambda", "lam2": "--lambda2"}
    for name in names:
        if getattr(args, name, None) is None:
            raise _UsageError(f"{flags.get(name, '--' + name)} is required")


def _parse_pair(args):
    lam = parse_partition(args.lam)
    lam2 = None
    if getattr(args, "lam2", None) is not None:
        if args.group != "gl":
            raise _UsageError("--lambda2 only applies to --group gl")
        lam2 = parse_partition(args.lam2)
    if args.group == "gl" and lam2 is None:
        raise _UsageError("--group gl needs --lambda2")
    return lam, lam2


def _build_parser() -> _Parser:
    parser = _Parser(prog="littlewood")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("modrule", help="run the modification rules")
    _add_common(p)
    p.add_argument("--rule", choices=["strip", "weyl", "both"], default="both")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_modrule)

    p = subs.add_parser("terms", help="list complex terms by degree")
    _add_common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_terms)

    p = subs.add_parser("qset", help="list a difference-one family")
    p.add_argument("--epsilon", type=int, choices=[-1, 0, 1], required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qset)

    p = subs.add_parser("betti", help="resolution table for a fixed target")
    _add_common(p)
    p.add_argument("--max-size", type=int)
    p.add_argument("--tau", metavar="PARTS")
    p.add_argument("--tau2", metavar="PARTS")
    p.add_argument("--output", choices=["csv", "json", "text"], default="csv")
    p.set_defaults(func=cmd_betti)

    p = subs.add_parser("verify", help="run a check suite, one JSON line each")
    p.add_argument("check", choices=["euler", "bijection", "littlewood"])
    _add_common(p)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    return parser


def cmd_modrule(args) -> int:
    _require(args, "group", "dim", "lam")
    lam, lam2 = _parse_pair(args)
    out = modrule(args.group, args.dim, lam, lam2, rule=args.rule)
    if args.output == "json":
        doc = {"group": args.group, "dim": args.dim, "lambda": list(lam)}
        if lam2 is not None:
            doc["lambda2"] = list(lam2)
        doc["vanishes"] = out.vanishes
        if out.vanishes:
            doc["degree"] = None
            doc["tau"] = None
        else:
            doc["degree"] = out.degree
            if args.group == "gl":
                doc["tau"] = [list(out.tau[0]), list(out.tau[1])]
            else:
                doc["tau"] = list(out.tau)
        doc["rule"] = args.rule
        print(canonical_json(doc))
    else:
        if out.vanishes:
            print("vanishes")
        elif args.group == "gl":
            print(f"degree {out.degree}, tau {format_pair(out.tau)}")
        else:
            print(f"degree {out.degree}, tau {format_partition(out.tau)}")
    return 0


def cmd_terms(args) -> int:
    _require(args, "group", "dim", "lam")
    lam, lam2 = _parse_pair(args)
    ct = complex_terms(args.group, lam, lam2, max_degree=args.max_degree)
    if args.output == "json":
        terms = []
        for i in sorted(ct.terms):
            if args.group == "gl":
                shapes = [
                    {
                        "outer": list(s1.outer),
                        "inner": list(s1.inner),
                        "outer2": list(s2.outer),
                        "inner2": list(s2.inner),
                    }
                    for s1, s2 in ct.terms[i]
                ]
            else:
                shapes = [
                    {"outer": list(s.outer), "inner": list(s.inner)}
                    for s in ct.terms[i]
                ]
            terms.append({"degree": i, "shapes": shapes})
        doc = {"group": args.group, "dim": args.dim, "lambda": list(lam)}
        if lam2 is not None:
            doc["lambda2"] = list(lam2)
        doc["terms"] = terms
        print(canonical_json(doc))
    else:
        for i in sorted(ct.terms):
            if args.group == "gl":
                body = "; ".join(
                    f"{s1}|{s2}" for s1, s2 in ct.terms[i]
                )
            else:
                body = "; ".join(str(s) for s in ct.terms[i])
            print(f"degree {i}: {body}")
    return 0


def cmd_qset(args) -> int:
    family = enumerate_q(args.epsilon, args.max)
    if args.output == "json":
        doc = {
            "epsilon": args.epsilon,
            "max": args.max,
            "partitions": [list(mu) for mu in family],
        }
        print(canonical_json(doc))
    else:
        print("; ".join(format_partition(mu) for mu in family))
    return 0


def cmd_betti(args) -> int:
    _require(args, "group", "dim", "max_size")
    tau = parse_partition(args.tau) if args.tau is not None else None
    tau2 = parse_partition(args.tau2) if args.tau2 is not None else None
    if tau2 is not None and args.group != "gl":
        raise _UsageError("--tau2 only applies to --group gl")
    table = betti_table(args.group, args.dim, args.max_size, tau, tau2)
    if args.output == "json":
        print(table.to_json())
    elif args.output == "csv":
        sys.stdout.write(table.to_csv())
    else:
        for i, d, label in table.rows():
            text = (
                format_pair(label)
                if args.group == "gl"
                else format_partition(label)
            )
            print(f"hom {i}, internal {d}: {text}")
    return 0


def _euler_cases(args):
    if args.group == "gl":
        for total in range(args.max_size + 1):
            for s1 in range(total + 1):
                for a1 in partitions_of(s1):
                    for a2 in partitions_of(total - s1):
                        yield a1, a2
    else:
        for lam in all_partitions_up_to(args.max_size):
            yield lam, None


def cmd_verify(args) -> int:
    check = args.check
    reports = []
    if check == "littlewood":
        if args.group not in (None, "sp"):
            raise _UsageError("littlewood check is specific to --group sp")
        _require(args, "dim")
        n = args.dim
        if args.lam is not None:
            cases = [parse_partition(args.lam)]
        else:
            cases = [
                lam
                for lam in all_partitions_up_to(args.max_size)
                if len(lam) <= n
            ]
        for lam in cases:
            reports.append(
                verify_littlewood_identity(lam, n, args.seed, args.points)
            )
    elif check == "euler":
        _require(args, "group", "dim")
        if args.lam is not None:
            lam, lam2 = _parse_pair(args)
            cases = [(lam, lam2)]
        else:
            cases = list(_euler_cases(args))
        for lam, lam2 in cases:
            reports.append(
                verify_euler(
                    args.group, args.dim, lam, lam2, args.seed, args.points
                )
            )
    else:
        _require(args, "group", "dim")
        if args.lam is not None:
            lam, lam2 = _parse_pair(args)
            cases = [(lam, lam2)]
        else:
            half = args.dim // 2 if args.group == "o" else args.dim
            cases = []
            for lam, lam2 in _euler_cases(args):
                if args.group == "gl":
                    if len(lam) + len(lam2) <= args.dim:
                        cases.append((lam, lam2))
                elif len(lam) <= half:
                    cases.append((lam, lam2))
        for lam, lam2 in cases:
            reports.append(
                verify_bijection(args.group, args.dim, lam, lam2, args.bound)
            )
    reports.sort(key=lambda r: (r.test_id, canonical_json(r.params)))
    for report in reports:
        print(report.to_json())
    return 0 if all(r.passed for r in reports) else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (_UsageError, ValueError) as exc:
        # InadmissibleInput and partition parse errors are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuleDisagreement as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
