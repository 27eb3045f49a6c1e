"""Command line interface.

Commands:

- ``zamen group info GROUP``: order, classes, center, abelianness.
- ``zamen group chartable GROUP``: compute (or load from cache) and print
  the character table document.
- ``zamen group amconst GROUP [GROUP ...] | --zoo``: amenability constants
  with rational snaps, lower bounds, and the gap check.
- ``zamen hypergroup run SPEC.json``: run a quadrature experiment and emit
  CSV rows (or JSON with --json).
- ``zamen verify tz2``: exact identity-measure verification on the
  infinite group T semidirect Z2.

GROUP arguments are either names from the built-in zoo (``zamen group
amconst --zoo`` lists results for all of them) or paths to group spec JSON
files.  Exit codes: 0 on success, 1 when a verification or check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__
from .amenability import (
    amenability_constant,
    hilbert_schmidt_lower_bound,
    nonabelian_gap_check,
)
from .cache import cached_character_table, resolve_cache_dir
from .groups import FiniteGroup, SizeLimitError, ValidationError, center, conjugacy_structure
from .hypergroups import run_experiment
from .specio import (
    SpecError,
    character_table_payload,
    group_from_json,
    load_experiment_spec,
    sha256_hex,
    stable_json,
)
from .tz2 import verify_identity_measure
from .zoo import build as zoo_build
from .zoo import zoo_names

CSV_COLUMNS = (
    "model",
    "scheme",
    "n",
    "diagonal_norm",
    "diagonal_error_estimate",
    "diagonal_converged",
    "bai_norm",
    "bai_error_estimate",
    "lower_bound",
    "config_hash",
)


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record attached to every machine-readable output."""

    command: str
    input_hash: str
    config: dict
    tool_version: str
    timestamp: str
    result_summary: dict


def _manifest(command: str, input_hash: str, config: dict, summary: dict) -> dict:
    return asdict(
        RunManifest(
            command=command,
            input_hash=input_hash,
            config=config,
            tool_version=__version__,
            timestamp=datetime.now(timezone.utc).isoformat(),
            result_summary=summary,
        )
    )


def _resolve_group(token: str) -> FiniteGroup:
    path = Path(token)
    if path.suffix == ".json" or path.exists():
        try:
            text = path.read_text()
        except OSError as exc:
            raise SpecError(f"cannot read group spec {token!r}: {exc}") from exc
        return group_from_json(text)
    try:
        return zoo_build(token)
    except KeyError:
        raise SpecError(
            f"{token!r} is neither a readable JSON file nor a known group name"
        ) from None


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _write_manifest_sidecar(out: str | None, manifest: dict) -> None:
    if out:
        Path(f"{out}.manifest.json").write_text(stable_json(manifest))


def _fmt_rational(value: float, rational: Fraction | None) -> str:
    if rational is not None:
        return f"{value:.10f} (= {rational})"
    return f"{value:.10f}"


def _cmd_group_info(args: argparse.Namespace) -> int:
    group = _resolve_group(args.group)
    cs = conjugacy_structure(group)
    central = center(group)
    record = {
        "label": group.label,
        "order": group.order,
        "num_classes": cs.num_classes,
        "center_size": int(len(central)),
        "abelian": bool(group.is_abelian),
        "class_sizes": [int(s) for s in cs.sizes],
        "class_reps": [int(r) for r in cs.reps],
        "content_hash": group.content_hash,
    }
    if args.json:
        record["manifest"] = _manifest(
            "group info", sha256_hex(group.content_hash), {}, {"order": group.order}
        )
        _write_output(json.dumps(record, indent=2), args.out)
        return 0
    lines = [
        f"{group.label}: order {group.order}, {cs.num_classes} classes, "
        f"center size {len(central)}",
        f"abelian: {'true' if group.is_abelian else 'false'}",
        "class sizes: " + " ".join(str(int(s)) for s in cs.sizes),
        f"content hash: {group.content_hash}",
    ]
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_group_chartable(args: argparse.Namespace) -> int:
    group = _resolve_group(args.group)
    cs = conjugacy_structure(group)
    kwargs = {}
    if args.tol is not None:
        kwargs["certification_tol"] = args.tol
    table, from_cache = cached_character_table(group, cs, cache_dir=args.cache_dir, **kwargs)
    payload = character_table_payload(table)
    if args.json:
        payload["manifest"] = _manifest(
            "group chartable",
            sha256_hex(group.content_hash),
            {"cache_dir": str(resolve_cache_dir(args.cache_dir)), "tol": args.tol},
            {"from_cache": from_cache, "residual": table.residual},
        )
        _write_output(json.dumps(payload, indent=2, sort_keys=True), args.out)
        return 0
    lines = [
        f"{group.label}: {table.num_classes} irreducible characters"
        + (" (cached)" if from_cache else ""),
        "degrees: " + " ".join(str(int(d)) for d in table.degrees),
        "class sizes: " + " ".join(str(int(s)) for s in table.class_sizes),
        f"orthogonality residual: {table.residual:.3e}",
    ]
    for d, row in zip(table.degrees, table.values):
        cells = []
        for v in row:
            if abs(v.imag) < 5e-13:
                cells.append(f"{v.real:8.4f}")
            else:
                cells.append(f"{v.real:.3f}{v.imag:+.3f}i")
        lines.append(f"  chi[d={int(d)}]  " + " ".join(cells))
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _amconst_record(name: str, group: FiniteGroup, cache_dir: str | None, tol: float | None):
    kwargs = {}
    if tol is not None:
        kwargs["certification_tol"] = tol
    table, _ = cached_character_table(group, cache_dir=cache_dir, **kwargs)
    am = amenability_constant(table)
    gap = nonabelian_gap_check(table)
    return {
        "group": name,
        "order": group.order,
        "abelian": gap.is_abelian,
        "am": am.value,
        "am_rational": str(am.rational) if am.rational is not None else None,
        "hs_lower_bound": hilbert_schmidt_lower_bound(table),
        "gap_ok": gap.passed,
    }


def _cmd_group_amconst(args: argparse.Namespace) -> int:
    if args.zoo:
        names = list(zoo_names())
        groups = [zoo_build(n) for n in names]
    else:
        if not args.groups:
            raise SpecError("give at least one group, or use --zoo")
        names = list(args.groups)
        groups = [_resolve_group(token) for token in names]

    def one(pair):
        name, group = pair
        return _amconst_record(name, group, args.cache_dir, args.tol)

    if args.jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(one, zip(names, groups)))
    else:
        records = [one(pair) for pair in zip(names, groups)]

    all_ok = all(r["gap_ok"] for r in records)
    if args.json:
        doc = {
            "results": records,
            "manifest": _manifest(
                "group amconst",
                sha256_hex(stable_json([g.content_hash for g in groups])),
                {"jobs": args.jobs, "zoo": args.zoo, "tol": args.tol},
                {"groups": len(records), "all_gap_ok": all_ok},
            ),
        }
        _write_output(json.dumps(doc, indent=2), args.out)
        return 0 if all_ok else 1
    lines = []
    for r in records:
        rational = f" (= {r['am_rational']})" if r["am_rational"] else ""
        lines.append(
            f"{r['group']}: am = {r['am']:.10f}{rational}, "
            f"hs >= {r['hs_lower_bound']:.10f}, "
            f"{'abelian' if r['abelian'] else 'nonabelian'}, "
            f"gap {'ok' if r['gap_ok'] else 'VIOLATED'}"
        )
    _write_output("\n".join(lines) + "\n", args.out)
    return 0 if all_ok else 1


def _cmd_hypergroup_run(args: argparse.Namespace) -> int:
    try:
        payload = json.loads(Path(args.spec).read_text())
    except OSError as exc:
        raise SpecError(f"cannot read experiment spec: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in experiment spec: {exc}") from exc
    spec = load_experiment_spec(payload)
    rows = run_experiment(spec, jobs=args.jobs)
    manifest = _manifest(
        "hypergroup run",
        sha256_hex(stable_json(spec)),
        {"jobs": args.jobs, "spec": spec},
        {
            "rows": len(rows),
            "all_converged": all(r["diagonal_converged"] for r in rows),
        },
    )
    if args.json:
        _write_output(json.dumps({"rows": rows, "manifest": manifest}, indent=2), args.out)
        return 0
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    _write_output(buffer.getvalue(), args.out)
    _write_manifest_sidecar(args.out, manifest)
    return 0


def _cmd_verify_tz2(args: argparse.Namespace) -> int:
    try:
        cross = Fraction(args.cross_weight)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"invalid cross weight {args.cross_weight!r}: {exc}") from exc
    report = verify_identity_measure(max_mode=args.max_mode, cross_weight=cross)
    if args.json:
        doc = {
            "max_mode": report.max_mode,
            "pairs_checked": report.pairs_checked,
            "failures": [
                {"left": left, "right": right, "got": str(got), "expected": str(want)}
                for left, right, got, want in report.failures
            ],
            "passed": report.passed,
            "manifest": _manifest(
                "verify tz2",
                sha256_hex(stable_json({"max_mode": args.max_mode, "cross": str(cross)})),
                {"max_mode": args.max_mode, "cross_weight": str(cross)},
                {"passed": report.passed, "pairs_checked": report.pairs_checked},
            ),
        }
        _write_output(json.dumps(doc, indent=2), args.out)
        return 0 if report.passed else 1
    lines = [
        "T x| Z2 identity measure: "
        f"{report.pairs_checked} pairs checked, {len(report.failures)} failures"
    ]
    for left, right, got, want in report.failures:
        lines.append(f"  ({left}, {right}): got {got}, expected {want}")
    lines.append("PASS" if report.passed else "FAIL")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def _add_common_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zamen",
        description="Amenability constants of centres of finite group algebras.",
    )
    parser.add_argument("--version", action="version", version=f"zamen {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    group = subparsers.add_parser("group", help="finite group computations")
    group_sub = group.add_subparsers(dest="subcommand", required=True)

    info = group_sub.add_parser("info", help="order, classes, center")
    info.add_argument("group", help="zoo name or group spec JSON path")
    _add_common_output_flags(info)
    info.set_defaults(handler=_cmd_group_info)

    chartable = group_sub.add_parser("chartable", help="character table")
    chartable.add_argument("group", help="zoo name or group spec JSON path")
    chartable.add_argument("--cache-dir", help="character table cache directory")
    chartable.add_argument("--tol", type=float, help="certification tolerance")
    _add_common_output_flags(chartable)
    chartable.set_defaults(handler=_cmd_group_chartable)

    amconst = group_sub.add_parser("amconst", help="amenability constants")
    amconst.add_argument("groups", nargs="*", help="zoo names or group spec JSON paths")
    amconst.add_argument("--zoo", action="store_true", help="run the whole built-in zoo")
    amconst.add_argument("--jobs", type=int, default=1, help="worker threads")
    amconst.add_argument("--cache-dir", help="character table cache directory")
    amconst.add_argument("--tol", type=float, help="certification tolerance")
    _add_common_output_flags(amconst)
    amconst.set_defaults(handler=_cmd_group_amconst)

    hypergroup = subparsers.add_parser("hypergroup", help="compact hypergroup experiments")
    hyper_sub = hypergroup.add_subparsers(dest="subcommand", required=True)
    run = hyper_sub.add_parser("run", help="run an experiment spec")
    run.add_argument("spec", help="experiment spec JSON path")
    run.add_argument("--jobs", type=int, default=1, help="worker threads")
    _add_common_output_flags(run)
    run.set_defaults(handler=_cmd_hypergroup_run)

    verify = subparsers.add_parser("verify", help="exact verifications")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)
    tz2 = verify_sub.add_parser("tz2", help="identity measure on T semidirect Z2")
    tz2.add_argument("--max-mode", type=int, default=20, help="highest induced mode")
    tz2.add_argument(
        "--cross-weight",
        default="-2",
        help="weight of the mixed atom block (a fraction such as -2 or -3/2)",
    )
    _add_common_output_flags(tz2)
    tz2.set_defaults(handler=_cmd_verify_tz2)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (SpecError, ValidationError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
