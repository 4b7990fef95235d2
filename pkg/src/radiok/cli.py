"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure,
3 uncovered case, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from .constructions import ConstructionError, build
from .cyclic import InstanceError, check_instance, lb, parity_class, phi
from .dispatch import Kind, RnStatus, consistency_audit, resolve
from .jumps import dump_schedule
from .oracle import DEFAULT_NODES, DEFAULT_SECONDS, BudgetExceeded, exact_rn, rows_to_csv, scan_conjecture
from .verify import Labeling, MalformedLabeling, from_map, verify_full

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_UNCOVERED, EXIT_BUDGET = 0, 1, 2, 3, 4

TABLE_FIELDS = [
    "n", "k", "parity_case", "phi", "lb", "lower", "upper", "exact", "provenance", "construction_span",
]


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected a..b or a single integer") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def k_values(n: int, spec: str) -> list[int]:
    d = n // 2
    if spec == "diam":
        return [d]
    if spec == "diam+1":
        return [d + 1]
    if spec == "all":
        return list(range(d, n + 3))
    lo, hi = parse_range(spec)
    return [k for k in range(max(lo, d), hi + 1)]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def status_dict(st: RnStatus) -> dict:
    return {
        "n": st.n,
        "k": st.k,
        "kind": st.kind.value,
        "value": st.value,
        "lower": st.lower,
        "upper": st.upper,
        "provenance": st.provenance,
        "construction_available": st.construction_available,
    }


def status_text(st: RnStatus) -> str:
    if st.kind is Kind.EXACT:
        return f"exact {st.lower} ({st.provenance})\n"
    upper = "inf)" if st.upper is None else f"{st.upper}]"
    return f"bounds [{st.lower}, {upper} ({st.provenance})\n"


# labeling files ------------------------------------------------------------

def labeling_json(lab: Labeling) -> str:
    doc = {
        "n": lab.n,
        "k": lab.k,
        "order": list(lab.order),
        "labels": list(lab.labels),
        "span": lab.span,
        "provenance": lab.provenance,
        "valid": True,
    }
    return json.dumps(doc, indent=2) + "\n"


def labeling_csv(lab: Labeling) -> str:
    buf = io.StringIO()
    buf.write(f"# n={lab.n}, k={lab.k}, span={lab.span}, provenance={lab.provenance}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "vertex", "label"])
    for i, (x, f) in enumerate(zip(lab.order, lab.labels)):
        w.writerow([i, x, f])
    return buf.getvalue()


def read_labeling(text: str, n: int | None, k: int | None) -> Labeling:
    """Parse a JSON or CSV labeling file; --n/--k fill in or must agree."""
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            doc = json.loads(text)
            fn, fk = doc.get("n"), doc.get("k")
            labels = doc["labels"]
            n_, k_ = _merge(fn, n, "n"), _merge(fk, k, "k")
            if isinstance(labels, dict):
                mapping = {int(v): int(f) for v, f in labels.items()}
                if len(mapping) != len(labels):
                    raise MalformedLabeling("duplicate vertex in label map")
                return from_map(n_, k_, mapping)
            return Labeling(n_, k_, doc["order"], labels)
        meta = {}
        rows = []
        for line in text.splitlines():
            if line.startswith("#"):
                for part in line[1:].split(","):
                    if "=" in part:
                        key, val = part.split("=", 1)
                        meta[key.strip()] = val.strip()
            elif line.strip():
                rows.append(line)
        recs = list(csv.DictReader(rows))
        fn = int(meta["n"]) if "n" in meta else None
        fk = int(meta["k"]) if "k" in meta else None
        recs.sort(key=lambda r: int(r["index"]))
        return Labeling(
            _merge(fn, n, "n"), _merge(fk, k, "k"),
            [int(r["vertex"]) for r in recs], [int(r["label"]) for r in recs],
        )
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, MalformedLabeling):
            raise
        raise MalformedLabeling(f"cannot parse labeling: {exc}") from exc


def _merge(from_file, from_flag, name):
    if from_file is None and from_flag is None:
        raise MalformedLabeling(f"{name} missing from file and flags")
    if from_file is not None and from_flag is not None and int(from_file) != from_flag:
        raise MalformedLabeling(f"{name}={from_file} in file but --{name} {from_flag}")
    return int(from_flag if from_flag is not None else from_file)


# subcommands ---------------------------------------------------------------

def cmd_phi(args) -> int:
    check_instance(args.n, args.k)
    print(f"phi={phi(args.n, args.k)} lb={lb(args.n, args.k)}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    st = resolve(args.n, args.k)
    upper = "" if st.upper is None else st.upper
    print(f"lower={st.lower} upper={upper} provenance={st.provenance}")
    return EXIT_OK


def _oracle(args, n, k):
    return exact_rn(n, k, max_nodes=args.budget_nodes, max_seconds=args.budget_secs)


def cmd_rn(args) -> int:
    st = resolve(args.n, args.k)
    if st.kind is Kind.BOUNDS and args.oracle:
        try:
            value, _ = _oracle(args, args.n, args.k)
        except BudgetExceeded as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_BUDGET
        st = RnStatus(args.n, args.k, Kind.EXACT, value, value, "oracle", st.construction_available)
    if st.kind is Kind.BOUNDS and args.require_exact:
        print(f"no exact value known for n={args.n}, k={args.k}", file=sys.stderr)
        return EXIT_UNCOVERED
    if args.format == "json":
        print(json.dumps(status_dict(st)))
    else:
        sys.stdout.write(status_text(st))
    return EXIT_OK


def cmd_label(args) -> int:
    try:
        lab = build(args.n, args.k)
    except ConstructionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    if lab is None:
        if not args.oracle:
            print(f"no construction covers n={args.n}, k={args.k}; try --oracle", file=sys.stderr)
            return EXIT_UNCOVERED
        try:
            _, lab = _oracle(args, args.n, args.k)
        except BudgetExceeded as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_BUDGET
    if args.trace:
        jumps = [(b - a) % lab.n for a, b in zip(lab.order, lab.order[1:])]
        print(f"jumps: {dump_schedule(jumps)}", file=sys.stderr)
    verdict = verify_full(lab)
    if not verdict.valid:
        print(f"refusing to write invalid labeling: {verdict.witness}", file=sys.stderr)
        return EXIT_INVALID
    _emit(labeling_csv(lab) if args.format == "csv" else labeling_json(lab), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lab = read_labeling(fh.read(), args.n, args.k)
        verdict = verify_full(lab)
    except (OSError, MalformedLabeling, InstanceError) as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if verdict.valid:
        print(f"valid n={lab.n} k={lab.k} span={lab.span}")
        return EXIT_OK
    w = verdict.witness
    print(f"invalid: vertices {w.u} and {w.v} need gap >= {w.required}, have {w.actual}")
    return EXIT_INVALID


def table_rows(n_range: tuple[int, int], k_spec: str) -> list[dict]:
    rows = []
    for n in range(max(3, n_range[0]), n_range[1] + 1):
        for k in k_values(n, k_spec):
            st = resolve(n, k)
            lab = build(n, k)
            rows.append({
                "n": n,
                "k": k,
                "parity_case": parity_class(n, k).value,
                "phi": phi(n, k),
                "lb": lb(n, k),
                "lower": st.lower,
                "upper": st.upper,
                "exact": st.value,
                "provenance": st.provenance,
                "construction_span": None if lab is None else lab.span,
            })
    return rows


def cmd_table(args) -> int:
    rows = table_rows(parse_range(args.n), args.k)
    if args.format == "json":
        text = json.dumps(rows, indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({key: "" if v is None else v for key, v in r.items()})
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    lo, hi = parse_range(args.n)
    rows = scan_conjecture(lo, hi, max_nodes=args.budget_nodes, max_seconds=args.budget_secs)
    if args.format == "json":
        text = json.dumps([asdict(r) for r in rows], indent=1) + "\n"
    else:
        text = rows_to_csv(rows)
    _emit(text, args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    report = consistency_audit(
        args.n_max, oracle_n_max=args.oracle_n_max,
        max_nodes=args.budget_nodes, max_seconds=args.budget_secs,
    )
    _emit(json.dumps(report.as_dict(), indent=1) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radiok", description="Radio-k-numbers of cycles C_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--k", type=int, required=required)

    def budget(p):
        p.add_argument("--budget-nodes", type=int, default=DEFAULT_NODES)
        p.add_argument("--budget-secs", type=float, default=DEFAULT_SECONDS)

    p = sub.add_parser("phi", help="print Phi(n,k) and LB(n,k)")
    instance(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("bounds", help="print proven lower/upper bounds")
    instance(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("rn", help="best known rn_k(C_n)")
    instance(p)
    p.add_argument("--oracle", action="store_true", help="tighten bounds by exact search")
    p.add_argument("--require-exact", action="store_true", help="exit 3 unless an exact value is known")
    p.add_argument("--format", choices=["text", "json"], default="text")
    budget(p)
    p.set_defaults(func=cmd_rn)

    p = sub.add_parser("label", help="write a verified labeling")
    instance(p)
    p.add_argument("--oracle", action="store_true", help="fall back to exact search if uncovered")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--trace", action="store_true", help="dump the jump schedule to stderr")
    budget(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling file")
    instance(p, required=False)
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate values over ranges of n and k")
    p.add_argument("--n", required=True, help="a..b")
    p.add_argument("--k", default="all", help="diam, diam+1, all, or a..b")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="oracle scan of the n even, k odd, n/2 in <h> cases")
    p.add_argument("--n", required=True, help="a..b")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    budget(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("audit", help="cross-check all rules, constructions and the oracle")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--oracle-n-max", type=int, default=0)
    p.add_argument("--out")
    budget(p)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InstanceError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
