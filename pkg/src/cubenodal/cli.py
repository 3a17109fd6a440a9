"""Command-line reports: eigenvalue table, screening, sweep, nodal probe, verdict.

Exit codes: 0 clean, 1 usage or input error, 2 completed with warnings
(non-converged nodal counts).  Reports go to stdout unless --out is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__
from .bounds import (
    FABER_KRAHN_RATIO,
    pleijel_cutoff,
    screen_candidates,
)
from .nodal import (
    RESOLUTION_CAP,
    EigenCombo,
    NodalCount,
    count_nodal_domains,
    sweep_eigenspace,
)
from .spectrum import CUBE, BoxSpec, ModeTriple, enumerate_groups
from .symmetry import group_parity, symmetric_index, symmetry_excludes

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_WARNINGS = 2

FORMATS = ("md", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class ReportConfig:
    lambda_max: float = 48.0
    fmt: str = "md"
    resolution: int = 128
    sweep_samples: int = 500
    seed: int = 0
    box: BoxSpec = CUBE
    cap: int = RESOLUTION_CAP
    out: str | None = None

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.lambda_max < 3:
            raise UsageError("lambda-max must be at least 3")


def _parse_box(text: str) -> BoxSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("box must be three comma-separated weights")
    try:
        return BoxSpec(*(float(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_mode(text: str) -> ModeTriple:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("mode must be l,m,n")
    try:
        return ModeTriple(*(int(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_coeffs(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("coefficients must be comma-separated reals")


def _format_value(value) -> str:
    if float(value).is_integer():
        return str(int(value))
    return f"{value:.6f}"


def _format_k_range(k_min: int, k_max: int) -> str:
    return str(k_min) if k_min == k_max else f"{k_min}-{k_max}"


def _format_reps(reps) -> str:
    return " & ".join("(%d,%d,%d)" % rep for rep in reps)


# ---------------------------------------------------------------------------
# table

def build_table(box: BoxSpec, lambda_max: float) -> list[dict]:
    rows = []
    for group in enumerate_groups(box, lambda_max):
        rows.append(
            {
                "value": group.value,
                "k_min": group.k_min,
                "k_max": group.k_max,
                "multiplicity": group.multiplicity,
                "representatives": [list(r) for r in group.representatives()],
                "modes": [list(m.as_tuple()) for m in group.modes],
            }
        )
    return rows


def render_table(rows: list[dict], box: BoxSpec, lambda_max: float, fmt: str) -> str:
    if fmt == "json":
        return _json_text(
            {
                "schema": 1,
                "command": "table",
                "box": [box.alpha, box.beta, box.gamma],
                "lambda_max": lambda_max,
                "groups": rows,
            }
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k_min", "k_max", "eigenvalue", "multiplicity", "modes"])
        for row in rows:
            writer.writerow(
                [
                    row["k_min"],
                    row["k_max"],
                    _format_value(row["value"]),
                    row["multiplicity"],
                    _format_reps(tuple(tuple(r) for r in row["representatives"])),
                ]
            )
        return buf.getvalue()
    lines = ["| k | (l,m,n) | eigenvalue |", "|---|---------|------------|"]
    for row in rows:
        lines.append(
            "| %s | %s | %s |"
            % (
                _format_k_range(row["k_min"], row["k_max"]),
                _format_reps(tuple(tuple(r) for r in row["representatives"])),
                _format_value(row["value"]),
            )
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# screen

def build_screen(box: BoxSpec, lambda_max: float) -> dict:
    mu_root, lambda_cutoff = pleijel_cutoff()
    records = []
    candidates = []
    survivors = []
    for rec in screen_candidates(box, lambda_max):
        group = rec.group
        parity = group_parity(group)
        si = symmetric_index(box, group.value, parity)
        excluded = symmetry_excludes(box, group)
        if rec.candidate:
            candidates.append(group.k_min)
            if not excluded:
                survivors.append(group.k_min)
        records.append(
            {
                "value": group.value,
                "k_min": group.k_min,
                "k_max": group.k_max,
                "ratio": rec.ratio,
                "candidate": rec.candidate,
                "parity": parity.value,
                "j": si.j,
                "bound": si.bound,
                "symmetry_excluded": excluded,
                "survives": rec.candidate and not excluded,
            }
        )
    return {
        "schema": 1,
        "command": "screen",
        "box": [box.alpha, box.beta, box.gamma],
        "lambda_max": lambda_max,
        "mu_root": mu_root,
        "lambda_cutoff": lambda_cutoff,
        "fk_ratio": FABER_KRAHN_RATIO,
        "records": records,
        "candidates": candidates,
        "survivors": survivors,
    }


def render_screen(data: dict, fmt: str) -> str:
    if fmt == "json":
        return _json_text(data)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "eigenvalue",
                "k_min",
                "ratio",
                "candidate",
                "parity",
                "j",
                "bound",
                "symmetry_excluded",
                "survives",
            ]
        )
        for r in data["records"]:
            writer.writerow(
                [
                    _format_value(r["value"]),
                    r["k_min"],
                    f"{r['ratio']:.4f}",
                    r["candidate"],
                    r["parity"],
                    r["j"],
                    r["bound"],
                    r["symmetry_excluded"],
                    r["survives"],
                ]
            )
        return buf.getvalue()
    lines = [
        f"Cutoff: mu root = {data['mu_root']:.5f}, Courant-sharp eigenvalues need "
        f"lambda < {data['lambda_cutoff']:.1f}",
        f"Faber-Krahn survival: lambda^(3/2) / k_min >= {data['fk_ratio']:.4f}",
        "",
        "| eigenvalue | k | ratio | candidate | parity | j | 2j | excluded by symmetry |",
        "|------------|---|-------|-----------|--------|---|----|----------------------|",
    ]
    for r in data["records"]:
        lines.append(
            "| %s | %s | %.4f | %s | %s | %d | %d | %s |"
            % (
                _format_value(r["value"]),
                _format_k_range(r["k_min"], r["k_max"]),
                r["ratio"],
                "yes" if r["candidate"] else "no",
                r["parity"],
                r["j"],
                r["bound"],
                "yes" if r["symmetry_excluded"] else "no",
            )
        )
    lines.append("")
    lines.append(
        "Candidates (Faber-Krahn at k_min): k = "
        + ", ".join(str(k) for k in data["candidates"])
    )
    lines.append(
        "Surviving after symmetry: k = " + ", ".join(str(k) for k in data["survivors"])
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verdict

def _count_to_dict(count: NodalCount) -> dict:
    return {
        "positive_components": count.positive_components,
        "negative_components": count.negative_components,
        "total": count.total,
        "zero_samples": count.zero_samples,
        "resolution_used": count.resolution_used,
        "converged": count.converged,
    }


def build_verdict(config: ReportConfig) -> tuple[dict, list[str]]:
    box = CUBE
    screen = build_screen(box, config.lambda_max)
    groups = {g.k_min: g for g in enumerate_groups(box, config.lambda_max)}
    warnings: list[str] = []
    sharp: list[dict] = []
    unresolved: list[int] = []
    sweep_report = None

    for k in screen["survivors"]:
        group = groups[k]
        if group.k_min == 1:
            count = count_nodal_domains(EigenCombo(group, (1.0,)), 16, config.cap)
            entry = {"k": 1, "value": group.value, "nodal_domains": count.total}
            if count.total == 1:
                sharp.append(entry)
            else:
                unresolved.append(k)
            continue
        if group.multiplicity >= 1 and group.k_min == 2:
            # The first excited eigenvalue: one product mode already attains
            # k_min nodal domains.
            coeffs = tuple(
                1.0 if i == 0 else 0.0 for i in range(group.multiplicity)
            )
            count = count_nodal_domains(EigenCombo(group, coeffs), 16, config.cap)
            entry = {"k": 2, "value": group.value, "nodal_domains": count.total}
            if count.total == group.k_min:
                sharp.append(entry)
            else:
                unresolved.append(k)
            continue
        # Remaining survivor: sweep its eigenspace and compare with the
        # quadric predictor.
        result = sweep_eigenspace(
            group,
            config.sweep_samples,
            config.resolution,
            seed=config.seed,
            cap=config.cap,
        )
        histogram = result.histogram
        max_total = max(histogram)
        checked = mismatches = skipped = 0
        for s in result.samples:
            if s.predicted is None:
                continue
            if s.boundary_distance is not None and s.boundary_distance <= 1e-2:
                skipped += 1
                continue
            checked += 1
            if s.predicted.count != s.count.total:
                mismatches += 1
        for idx in result.non_converged:
            warnings.append(
                f"sweep sample {idx} of eigenvalue {_format_value(group.value)} "
                f"did not converge by resolution {config.cap}"
            )
        predictor_ok = mismatches == 0
        excluded = max_total < group.k_min and predictor_ok
        sweep_report = {
            "value": group.value,
            "k_min": group.k_min,
            "samples": result.n_samples,
            "resolution": result.n0,
            "seed": result.seed,
            "histogram": {str(k_): v for k_, v in histogram.items()},
            "max_total": max_total,
            "predictor_checked": checked,
            "predictor_mismatches": mismatches,
            "boundary_skipped": skipped,
            "non_converged": list(result.non_converged),
            "courant_sharp": not excluded,
        }
        if not excluded:
            unresolved.append(k)

    report = {
        "schema": 1,
        "command": "verdict",
        "lambda_max": config.lambda_max,
        "screen": screen,
        "sharp": sharp,
        "eigenspace_sweep": sweep_report,
        "unresolved": unresolved,
        "courant_sharp": [e["k"] for e in sharp],
        "warnings": warnings,
    }
    return report, warnings


def render_verdict(data: dict, fmt: str) -> str:
    if fmt == "json":
        return _json_text(data)
    lines = []
    screen = data["screen"]
    lines.append(
        "Candidates (Faber-Krahn at k_min): k = "
        + ", ".join(str(k) for k in screen["candidates"])
    )
    lines.append(
        "Surviving after symmetry: k = " + ", ".join(str(k) for k in screen["survivors"])
    )
    for entry in data["sharp"]:
        lines.append(
            f"k={entry['k']} (lambda={_format_value(entry['value'])}): "
            f"{entry['nodal_domains']} nodal domain(s), Courant sharp"
        )
    sweep = data["eigenspace_sweep"]
    if sweep is not None:
        hist = ", ".join(f"{k}: {v}" for k, v in sweep["histogram"].items())
        lines.append(
            f"Eigenspace sweep at lambda={_format_value(sweep['value'])} "
            f"(k_min={sweep['k_min']}, {sweep['samples']} samples, "
            f"resolution {sweep['resolution']}, seed {sweep['seed']}):"
        )
        lines.append(f"  nodal-domain histogram: {{{hist}}}")
        lines.append(
            f"  predictor agreement: {sweep['predictor_checked'] - sweep['predictor_mismatches']}"
            f"/{sweep['predictor_checked']} checked "
            f"({sweep['boundary_skipped']} near-boundary samples skipped)"
        )
        verdict = (
            "not Courant sharp"
            if not sweep["courant_sharp"]
            else "NOT excluded (unexpected)"
        )
        lines.append(
            f"  max count {sweep['max_total']} < k_min {sweep['k_min']}: "
            f"lambda={_format_value(sweep['value'])} is {verdict}"
        )
    if data["unresolved"]:
        lines.append(
            "Unresolved candidates: k = "
            + ", ".join(str(k) for k in data["unresolved"])
        )
    lines.append(
        "Courant sharp: "
        + ", ".join(
            f"k={e['k']} (lambda={_format_value(e['value'])})" for e in data["sharp"]
        )
    )
    if data["warnings"]:
        lines.append("")
        lines.append("Warnings:")
        for w in data["warnings"]:
            lines.append(f"  - {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# nodal + sweep

def build_nodal(
    modes: list[ModeTriple], coeffs: tuple[float, ...], resolution: int, cap: int
) -> dict:
    if not modes:
        raise UsageError("at least one --mode is required")
    if len(coeffs) != len(modes):
        raise UsageError(
            f"{len(modes)} modes but {len(coeffs)} coefficients were given"
        )
    if len({m.as_tuple() for m in modes}) != len(modes):
        raise UsageError("duplicate modes")
    values = {CUBE.eigenvalue(m) for m in modes}
    if len(values) != 1:
        raise UsageError(f"modes mix distinct eigenvalues {sorted(values)}")
    if all(c == 0.0 for c in coeffs):
        raise UsageError("coefficients must not all vanish")
    value = values.pop()
    group = next(g for g in enumerate_groups(CUBE, value) if g.value == value)
    by_mode = {m.as_tuple(): c for m, c in zip(modes, coeffs)}
    full = tuple(by_mode.get(m.as_tuple(), 0.0) for m in group.modes)
    count = count_nodal_domains(EigenCombo(group, full), resolution, cap)
    return {
        "schema": 1,
        "command": "nodal",
        "eigenvalue": value,
        "modes": [list(m.as_tuple()) for m in modes],
        "coeffs": list(coeffs),
        "count": _count_to_dict(count),
    }


def build_sweep(config: ReportConfig, value: float) -> dict:
    groups = enumerate_groups(CUBE, value)
    group = next((g for g in groups if g.value == value), None)
    if group is None:
        raise UsageError(f"{value} is not a cube eigenvalue")
    result = sweep_eigenspace(
        group,
        config.sweep_samples,
        config.resolution,
        seed=config.seed,
        cap=config.cap,
    )
    records = []
    for s in result.samples:
        records.append(
            {
                "index": s.index,
                "coeffs": list(s.coeffs),
                "total": s.count.total,
                "converged": s.count.converged,
                "resolution_used": s.count.resolution_used,
                "predicted": None if s.predicted is None else s.predicted.count,
                "boundary_distance": s.boundary_distance,
            }
        )
    return {
        "schema": 1,
        "command": "sweep",
        "eigenvalue": group.value,
        "k_min": group.k_min,
        "samples": result.n_samples,
        "resolution": result.n0,
        "seed": result.seed,
        "histogram": {str(k): v for k, v in result.histogram.items()},
        "non_converged": list(result.non_converged),
        "records": records,
    }


def render_sweep(data: dict, fmt: str) -> str:
    if fmt == "json":
        return _json_text(data)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["index", "total", "converged", "resolution_used", "predicted", "boundary_distance", "coeffs"]
        )
        for r in data["records"]:
            writer.writerow(
                [
                    r["index"],
                    r["total"],
                    r["converged"],
                    r["resolution_used"],
                    "" if r["predicted"] is None else r["predicted"],
                    "" if r["boundary_distance"] is None else f"{r['boundary_distance']:.6f}",
                    " ".join(f"{c!r}" for c in r["coeffs"]),
                ]
            )
        return buf.getvalue()
    hist = ", ".join(f"{k}: {v}" for k, v in data["histogram"].items())
    lines = [
        f"Eigenspace sweep at lambda={_format_value(data['eigenvalue'])} "
        f"(k_min={data['k_min']}): {data['samples']} samples, "
        f"resolution {data['resolution']}, seed {data['seed']}",
        f"histogram: {{{hist}}}",
        f"non-converged samples: {len(data['non_converged'])}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# plumbing

def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_common(parser: argparse.ArgumentParser, *, box: bool) -> None:
    parser.add_argument("--lambda-max", type=float, default=48.0)
    parser.add_argument("--format", choices=FORMATS, default="md")
    parser.add_argument("--out", default=None)
    if box:
        parser.add_argument(
            "--box",
            type=_parse_box,
            default=CUBE,
            help="box weights a,b,c (eigenvalue = a*l^2 + b*m^2 + c*n^2)",
        )


def _build_parser() -> _Parser:
    parser = _Parser(prog="cubenodal", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="eigenvalue table with Courant index ranges")
    _add_common(p_table, box=True)

    p_screen = sub.add_parser("screen", help="Faber-Krahn screening + symmetry bounds")
    _add_common(p_screen, box=True)

    p_verdict = sub.add_parser("verdict", help="end-to-end Courant-sharp verdict")
    _add_common(p_verdict, box=False)
    p_verdict.add_argument("--resolution", type=int, default=128)
    p_verdict.add_argument("--samples", type=int, default=500)
    p_verdict.add_argument("--seed", type=int, default=0)
    p_verdict.add_argument("--cap", type=int, default=RESOLUTION_CAP)

    p_nodal = sub.add_parser("nodal", help="count nodal domains of one combination")
    p_nodal.add_argument("--mode", type=_parse_mode, action="append", default=[])
    p_nodal.add_argument("--coeffs", type=_parse_coeffs, default=())
    p_nodal.add_argument("--resolution", type=int, default=128)
    p_nodal.add_argument("--cap", type=int, default=RESOLUTION_CAP)
    p_nodal.add_argument("--out", default=None)

    p_sweep = sub.add_parser("sweep", help="low-discrepancy sweep of one eigenspace")
    p_sweep.add_argument("--value", type=float, default=11.0)
    p_sweep.add_argument("--format", choices=FORMATS, default="md")
    p_sweep.add_argument("--resolution", type=int, default=128)
    p_sweep.add_argument("--samples", type=int, default=500)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--cap", type=int, default=RESOLUTION_CAP)
    p_sweep.add_argument("--out", default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            config = ReportConfig(lambda_max=args.lambda_max, fmt=args.format, box=args.box, out=args.out)
            rows = build_table(config.box, config.lambda_max)
            _emit(render_table(rows, config.box, config.lambda_max, config.fmt), config.out)
            return EXIT_OK
        if args.command == "screen":
            config = ReportConfig(lambda_max=args.lambda_max, fmt=args.format, box=args.box, out=args.out)
            data = build_screen(config.box, config.lambda_max)
            _emit(render_screen(data, config.fmt), config.out)
            return EXIT_OK
        if args.command == "verdict":
            config = ReportConfig(
                lambda_max=args.lambda_max,
                fmt=args.format,
                resolution=args.resolution,
                sweep_samples=args.samples,
                seed=args.seed,
                cap=args.cap,
                out=args.out,
            )
            data, warnings = build_verdict(config)
            _emit(render_verdict(data, config.fmt), config.out)
            return EXIT_WARNINGS if warnings else EXIT_OK
        if args.command == "nodal":
            data = build_nodal(args.mode, args.coeffs, args.resolution, args.cap)
            _emit(_json_text(data), args.out)
            return EXIT_OK if data["count"]["converged"] else EXIT_WARNINGS
        if args.command == "sweep":
            config = ReportConfig(
                fmt=args.format,
                resolution=args.resolution,
                sweep_samples=args.samples,
                seed=args.seed,
                cap=args.cap,
                out=args.out,
            )
            data = build_sweep(config, args.value)
            _emit(render_sweep(data, config.fmt), config.out)
            return EXIT_WARNINGS if data["non_converged"] else EXIT_OK
    except UsageError as exc:
        print(f"cubenodal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"cubenodal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
