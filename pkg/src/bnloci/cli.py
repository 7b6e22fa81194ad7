"""Command-line frontend.

Exit codes: 0 success / verified, 1 counterexample found, 2 invalid input.
Data goes to stdout, progress and diagnostics to stderr.  Point queries are
pure functions of their flags; only verify reports carry timing, and only
under the meta key (JSON) or in the human summary.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .classify import (
    STRIP_CSV_HEADER,
    classify_semistable,
    classify_stable,
    scan_strip,
    strip_row_csv,
    strip_row_jsonl,
)
from .core import BNPoint, brill_noether_number, rho_tilde, slope_coords
from .extensions import (
    ExtensionTuple,
    admissible_tuples,
    nonemptiness_criterion,
    tuple_jsonl,
    tuple_record,
)
from .geography import Parallelogram, render_map
from .verify import CAMPAIGNS, SweepBounds


def _add_point_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", type=int, required=True, help="genus (≥ 2)")
    p.add_argument("--n", type=int, required=True, help="rank")
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--k", type=int, required=True, help="required sections")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnloci",
        description="Exact classification, verification sweeps and geography "
        "maps for Brill-Noether loci of slope 0 ≤ d/n ≤ 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one locus")
    _add_point_flags(p)
    p.add_argument("--semistable", action="store_true", help="classify the semistable locus")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rho", help="expected dimension of one locus")
    _add_point_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="tabulate the whole strip for (g, n)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    p = sub.add_parser("extensions", help="admissible destabilization data")
    _add_point_flags(p)
    p.add_argument("--list", action="store_true", help="emit admissible tuples as JSON lines")
    p.add_argument("--json", action="store_true")
    p.add_argument("--s", type=int, help="evaluate a single tuple: quotient rank")
    p.add_argument("--d-prime", type=int, help="single tuple: quotient degree")
    p.add_argument("--m", type=int, help="single tuple: rank of the F-quotient")
    p.add_argument("--l", type=int, help="single tuple: rank of the G-quotient")

    p = sub.add_parser("verify", help="run an exhaustive verification campaign")
    p.add_argument("campaign", choices=sorted(CAMPAIGNS))
    p.add_argument("--g-min", type=int, default=2)
    p.add_argument("--g-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--denominator", type=int, default=1, help="rational grid denominator for (m, d')")
    p.add_argument("--m-cap-factor", type=int, default=4, help="cap m at factor·n")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: BNG_JOBS or all cores)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("map", help="render the geography map as SVG")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--strip", action="store_true", help="restrict to the strip 0 ≤ μ ≤ 1")
    p.add_argument("--overlay-n", type=int, default=None, help="overlay the classified strip for this rank")
    p.add_argument("--teixidor", default=None, help="JSON file of parallelograms to draw")

    return parser


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _classification_payload(cls, rho: int) -> dict:
    payload: dict = {"status": cls.status.value}
    if cls.dimension is not None:
        payload["dim"] = cls.dimension
    if cls.irreducible is not None:
        payload["irreducible"] = cls.irreducible
    if cls.singular_locus is not None:
        payload["sing"] = cls.singular_locus.label()
    if cls.model.value != "None":
        payload["model"] = cls.model.value
    payload["rho"] = rho
    return payload


def _cmd_classify(args) -> int:
    p = BNPoint(args.g, args.n, args.d, args.k)
    cls = classify_semistable(p) if args.semistable else classify_stable(p)
    rho = brill_noether_number(p)
    if args.json:
        print(_dumps(_classification_payload(cls, rho)))
        return 0
    kind = "semistable" if args.semistable else "stable"
    bits = [f"{p.label()} [{kind}, g={p.g}]: {cls.status.value}"]
    if cls.dimension is not None:
        bits.append(f"dim = {cls.dimension}")
    if cls.irreducible:
        bits.append("irreducible")
    if cls.singular_locus is not None:
        bits.append(f"Sing = {cls.singular_locus.label()}")
    if cls.model.value != "None":
        bits.append(f"model = {cls.model.value}")
    bits.append(f"rho = {rho}")
    bits.append(f"({cls.governing.value})")
    print("; ".join(bits))
    return 0


def _cmd_rho(args) -> int:
    p = BNPoint(args.g, args.n, args.d, args.k)
    rho = brill_noether_number(p)
    rt = rho_tilde(p.g, slope_coords(p))
    if args.json:
        print(_dumps({"rho": rho, "rho_tilde": str(rt)}))
    else:
        print(f"{p.label()} (g={p.g}): rho = {rho}, rho_tilde = {rt}")
    return 0


def _cmd_scan(args) -> int:
    rows = scan_strip(args.g, args.n)
    if args.format == "csv":
        print(STRIP_CSV_HEADER)
        for row in rows:
            print(strip_row_csv(row))
    else:
        for row in rows:
            print(strip_row_jsonl(row))
    return 0


def _cmd_extensions(args) -> int:
    single = [args.s, args.d_prime, args.m, args.l]
    if any(v is not None for v in single):
        if any(v is None for v in single):
            print("--s, --d-prime, --m, --l must be given together", file=sys.stderr)
            return 2
        p = BNPoint(args.g, args.n, args.d, args.k)
        t = ExtensionTuple(base=p, s=args.s, d_prime=args.d_prime, m=args.m, l=args.l)
        print(tuple_jsonl(t))
        return 0
    p = BNPoint(args.g, args.n, args.d, args.k)
    tuples = admissible_tuples(p)
    if args.list:
        for t in tuples:
            print(tuple_jsonl(t))
        return 0
    holds, witness = nonemptiness_criterion(p)
    if args.json:
        payload = {
            "holds": holds,
            "admissible": len(tuples),
            "witness": None if witness is None else tuple_record(witness),
        }
        print(_dumps(payload))
    else:
        verdict = "holds" if holds else "fails"
        print(f"criterion {verdict} over {len(tuples)} admissible tuple(s)")
        if witness is not None:
            print(f"witness: {tuple_jsonl(witness)}")
    return 0


def _default_jobs() -> int:
    env = os.environ.get("BNG_JOBS")
    if env is not None:
        jobs = int(env)
        if jobs < 1:
            raise ValueError("BNG_JOBS must be ≥ 1")
        return jobs
    return os.cpu_count() or 1


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    bounds = SweepBounds(
        g_min=args.g_min,
        g_max=args.g_max,
        n_max=args.n_max,
        rational_denominator=args.denominator,
        m_cap_factor=args.m_cap_factor,
        jobs=jobs,
    )
    report = CAMPAIGNS[args.campaign](bounds)
    if args.json:
        print(report.to_json())
    else:
        grid = report.bounds.grid_dict()
        print(
            f"campaign {report.campaign}: g in [{grid['g_min']}, {grid['g_max']}], "
            f"n ≤ {grid['n_max']}, denominator {grid['denominator']}"
        )
        verdict = "VERIFIED" if report.verified else "COUNTEREXAMPLES FOUND"
        print(
            f"checked {report.tuples_checked} tuples in {report.elapsed_ms} ms "
            f"({bounds.jobs} job(s)): {verdict} "
            f"({len(report.counterexamples)} counterexamples)"
        )
        for rec in report.counterexamples[:10]:
            print(_dumps(rec))
    return 0 if report.verified else 1


def _load_parallelograms(path: str) -> list[Parallelogram]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("--teixidor file must hold a JSON array")
    out = []
    for entry in data:
        out.append(
            Parallelogram(
                base=(int(entry["base"][0]), int(entry["base"][1])),
                vertical=int(entry["vertical"]),
                diagonal=int(entry["diagonal"]),
            )
        )
    return out


def _cmd_map(args) -> int:
    parallelograms = _load_parallelograms(args.teixidor) if args.teixidor else []
    doc = render_map(
        args.g,
        strip_only=args.strip,
        parallelograms=parallelograms,
        overlay_n=args.overlay_n,
    )
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc.to_svg())
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "rho": _cmd_rho,
    "scan": _cmd_scan,
    "extensions": _cmd_extensions,
    "verify": _cmd_verify,
    "map": _cmd_map,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own diagnostic
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
