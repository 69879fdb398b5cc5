"""Command-line surface: orbits, condition checks, censuses, verifiers, sweeps.

Every invocation emits one output document on stdout (or to --out for
sweeps): a JSON envelope, a CSV flattening, or a human-readable text
rendering.  Output bytes are deterministic for identical arguments; the
optional --timestamps flag adds a wall clock outside the payload.

Exit codes: 0 pass, 1 verification failure, 2 usage/IO error,
3 precondition (hypothesis condition) failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone

from .dynamics import (
    CycleCensus,
    SweepRow,
    THEOREM1_PASS,
    classify_cycle,
    cycle_census,
    sweep,
    verify_theorem1,
    verify_theorem2,
)
from .errors import (
    BudgetExceededError,
    ParameterDomainError,
    PreconditionError,
    ZorbitError,
)
from .hypothesis import HypothesisReport, check_all
from .kadic import to_digits
from .transform import DEFAULT_MAX_STEPS, Params, digit_step, orbit

SCHEMA_VERSION = "1"
ENV_MAX_STEPS = "ZORBIT_MAX_STEPS"
DEFAULT_N_MAX = 10_000
DEFAULT_FORMAT = "json"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

STATUS_OK = "ok"
STATUS_VERIFICATION_FAILED = "verification_failed"
STATUS_PRECONDITION_FAILED = "precondition_failed"

CONFIG_KEYS = ("k", "p", "n_max", "format")


class UsageError(Exception):
    """Bad arguments, bad config, or an unwritable output destination."""


# ---------------------------------------------------------------------------
# argument plumbing


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _int_range(text: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI integers, got {text!r}") from exc
    if lo > hi:
        raise argparse.ArgumentTypeError(f"range must satisfy LO <= HI, got {text!r}")
    return lo, hi


def _load_config(path: str) -> dict[str, str]:
    """Parse a flat key = value file (# comments, optional quotes)."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key = key.strip().lower().replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        values[key] = value.strip().strip("\"'")
    return values


def _config_for(args: argparse.Namespace) -> dict[str, str]:
    return _load_config(args.config) if args.config else {}


def _config_int(config: dict[str, str], key: str) -> int | None:
    if key not in config:
        return None
    try:
        return int(config[key])
    except ValueError as exc:
        raise UsageError(f"config key {key} must be an integer, got {config[key]!r}") from exc


def _params_from(args: argparse.Namespace, config: dict[str, str]) -> Params:
    k = args.k if args.k is not None else _config_int(config, "k")
    p = args.p if args.p is not None else _config_int(config, "p")
    if k is None or p is None:
        raise UsageError("--k and --p are required (directly or via --config)")
    return Params(k, p)


def _format_from(args: argparse.Namespace, config: dict[str, str]) -> str:
    fmt = args.format if args.format is not None else config.get("format")
    if fmt is None:
        return DEFAULT_FORMAT
    if fmt not in ("json", "csv", "text"):
        raise UsageError(f"unknown format {fmt!r} (expected json, csv, or text)")
    return fmt


def _n_max_from(args: argparse.Namespace, config: dict[str, str], default: int | None) -> int | None:
    n_max = args.n_max if args.n_max is not None else _config_int(config, "n_max")
    if n_max is None:
        return default
    if n_max < 1:
        raise UsageError(f"--n-max must be >= 1, got {n_max}")
    return n_max


def _max_steps_from(args: argparse.Namespace) -> int:
    if args.max_steps is not None:
        value = args.max_steps
    elif ENV_MAX_STEPS in os.environ:
        raw = os.environ[ENV_MAX_STEPS]
        try:
            value = int(raw)
        except ValueError as exc:
            raise UsageError(f"{ENV_MAX_STEPS} must be an integer, got {raw!r}") from exc
    else:
        value = DEFAULT_MAX_STEPS
    if value < 1:
        raise UsageError(f"orbit step budget must be >= 1, got {value}")
    return value


# ---------------------------------------------------------------------------
# rendering


def _envelope(command: str, params_echo: dict, status: str, payload, args) -> dict:
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params_echo,
        "status": status,
        "payload": payload,
    }
    if getattr(args, "timestamps", False):
        envelope["timestamp"] = datetime.now(timezone.utc).isoformat()
    return envelope


def _json_doc(envelope: dict) -> str:
    return json.dumps(envelope, indent=2) + "\n"


def _csv_doc(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _bool_cell(flag: bool | None) -> str:
    if flag is None:
        return ""
    return "true" if flag else "false"


def _write_output(doc: str, out_path: str | None) -> None:
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8", newline="") as handle:
                handle.write(doc)
        except OSError as exc:
            raise UsageError(f"cannot write {out_path}: {exc}") from exc
    else:
        sys.stdout.write(doc)


def _emit(args, fmt: str, envelope: dict, csv_doc: str, text_doc: str) -> None:
    if fmt == "json":
        doc = _json_doc(envelope)
    elif fmt == "csv":
        doc = csv_doc
    else:
        doc = text_doc
    _write_output(doc, getattr(args, "out", None))


def _hypothesis_payload(report: HypothesisReport) -> dict:
    return {
        "a_holds": report.a_holds,
        "b_holds": report.b_holds,
        "b_violations": list(report.b_violations),
        "c_holds": report.c_holds,
        "c_violations": [{"q": q, "clause": clause} for q, clause in report.c_violations],
        "satisfied": report.satisfied,
    }


def _trace_steps(values, params: Params) -> list[dict]:
    steps = []
    for index, value in enumerate(values):
        digits = list(to_digits(value, params.k))
        steps.append(
            {
                "step": index,
                "value": str(value),
                "digits": digits,
                "f_values": [digit_step(d, params.p) for d in digits],
            }
        )
    return steps


def _census_payload(census: CycleCensus) -> dict:
    return {
        "absorbing_bound": str(census.absorbing_bound),
        "scanned_range": [str(census.scanned_range[0]), str(census.scanned_range[1])],
        "cycles": [
            {
                "values": [str(v) for v in cycle.values],
                "length": cycle.length,
                "basin_size": cycle.basin_size,
                "degenerate": cycle.degenerate,
            }
            for cycle in census.cycles
        ],
    }


def _params_echo(params: Params) -> dict:
    return {"k": params.k, "p": params.p, "t": params.t, "s": params.s}


# ---------------------------------------------------------------------------
# orbit


def _orbit_csv(status: str, steps: list[dict], preperiod, cycle_length) -> str:
    header = [
        "schema_version",
        "command",
        "status",
        "step",
        "value",
        "digits",
        "f_values",
        "preperiod_length",
        "cycle_length",
    ]
    rows = []
    pre = "" if preperiod is None else str(preperiod)
    cyc = "" if cycle_length is None else str(cycle_length)
    for step in steps:
        rows.append(
            [
                SCHEMA_VERSION,
                "orbit",
                status,
                step["step"],
                step["value"],
                ",".join(str(d) for d in step["digits"]),
                ",".join(str(f) for f in step["f_values"]),
                pre,
                cyc,
            ]
        )
    return _csv_doc(header, rows)


def _orbit_text(params: Params, steps: list[dict], preperiod, cycle_length, cycle, status: str) -> str:
    lines = [f"orbit n={steps[0]['value']} (k={params.k}, p={params.p})"]
    for step in steps:
        digits = "[" + ", ".join(str(d) for d in step["digits"]) + "]"
        f_values = "[" + ", ".join(str(f) for f in step["f_values"]) + "]"
        lines.append(f"  step {step['step']}: {step['value']}  digits={digits}  f={f_values}")
    if preperiod is None:
        lines.append(f"status: {status} (no repeat within budget)")
    else:
        lines.append(f"preperiod length: {preperiod}")
        lines.append(f"cycle length: {cycle_length}")
        lines.append("cycle: " + " -> ".join(cycle))
        lines.append(f"status: {status}")
    return "\n".join(lines) + "\n"


def _cmd_orbit(args: argparse.Namespace) -> int:
    config = _config_for(args)
    fmt = _format_from(args, config)
    params = _params_from(args, config)
    max_steps = _max_steps_from(args)
    echo = _params_echo(params)
    echo.update({"n": str(args.n), "max_steps": max_steps})
    try:
        trace = orbit(args.n, params, max_steps=max_steps)
    except BudgetExceededError as exc:
        steps = _trace_steps(exc.partial, params)
        payload = {
            "trace": steps,
            "preperiod_length": None,
            "cycle_length": None,
            "cycle": None,
            "error": "budget_exceeded",
        }
        envelope = _envelope("orbit", echo, STATUS_VERIFICATION_FAILED, payload, args)
        _emit(
            args,
            fmt,
            envelope,
            _orbit_csv(STATUS_VERIFICATION_FAILED, steps, None, None),
            _orbit_text(params, steps, None, None, None, STATUS_VERIFICATION_FAILED),
        )
        return EXIT_VERIFICATION_FAILED
    steps = _trace_steps(trace.values, params)
    cycle = [str(v) for v in trace.cycle]
    payload = {
        "trace": steps,
        "preperiod_length": trace.preperiod_length,
        "cycle_length": trace.cycle_length,
        "cycle": cycle,
    }
    envelope = _envelope("orbit", echo, STATUS_OK, payload, args)
    _emit(
        args,
        fmt,
        envelope,
        _orbit_csv(STATUS_OK, steps, trace.preperiod_length, trace.cycle_length),
        _orbit_text(params, steps, trace.preperiod_length, trace.cycle_length, cycle, STATUS_OK),
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def _check_csv(status: str, params: Params, report: HypothesisReport) -> str:
    header = [
        "schema_version",
        "command",
        "status",
        "k",
        "p",
        "a_holds",
        "b_holds",
        "b_violations",
        "c_holds",
        "c_violations",
        "satisfied",
    ]
    row = [
        SCHEMA_VERSION,
        "check",
        status,
        params.k,
        params.p,
        _bool_cell(report.a_holds),
        _bool_cell(report.b_holds),
        ",".join(str(q) for q in report.b_violations),
        _bool_cell(report.c_holds),
        ";".join(f"{q},{clause}" for q, clause in report.c_violations),
        _bool_cell(report.satisfied),
    ]
    return _csv_doc(header, [row])


def _check_text(params: Params, report: HypothesisReport) -> str:
    verdict = "satisfied" if report.satisfied else "not satisfied"
    b_wit = ", ".join(str(q) for q in report.b_violations) or "-"
    c_wit = "; ".join(f"q={q} ({clause})" for q, clause in report.c_violations) or "-"
    lines = [
        f"check k={params.k} p={params.p}: {verdict}",
        f"  (a) holds: {_bool_cell(report.a_holds)}",
        f"  (b) holds: {_bool_cell(report.b_holds)}  violations: {b_wit}",
        f"  (c) holds: {_bool_cell(report.c_holds)}  violations: {c_wit}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_check(args: argparse.Namespace) -> int:
    config = _config_for(args)
    fmt = _format_from(args, config)
    params = _params_from(args, config)
    report = check_all(params)
    status = STATUS_OK if report.satisfied else STATUS_VERIFICATION_FAILED
    envelope = _envelope("check", _params_echo(params), status, _hypothesis_payload(report), args)
    _emit(args, fmt, envelope, _check_csv(status, params, report), _check_text(params, report))
    return EXIT_OK if report.satisfied else EXIT_VERIFICATION_FAILED


# ---------------------------------------------------------------------------
# census


def _census_csv(status: str, census: CycleCensus) -> str:
    header = [
        "schema_version",
        "command",
        "status",
        "k",
        "p",
        "absorbing_bound",
        "scanned_lo",
        "scanned_hi",
        "cycle",
        "length",
        "basin_size",
        "degenerate",
    ]
    rows = []
    for cycle in census.cycles:
        rows.append(
            [
                SCHEMA_VERSION,
                "census",
                status,
                census.params.k,
                census.params.p,
                census.absorbing_bound,
                census.scanned_range[0],
                census.scanned_range[1],
                ",".join(str(v) for v in cycle.values),
                cycle.length,
                cycle.basin_size,
                _bool_cell(cycle.degenerate),
            ]
        )
    return _csv_doc(header, rows)


def _census_text(census: CycleCensus) -> str:
    lines = [
        f"census k={census.params.k} p={census.params.p}",
        f"  absorbing bound: {census.absorbing_bound}",
        f"  scanned range: [{census.scanned_range[0]}, {census.scanned_range[1]}]",
    ]
    for cycle in census.cycles:
        values = " -> ".join(str(v) for v in cycle.values)
        tag = "  (degenerate zero)" if cycle.degenerate else ""
        lines.append(
            f"  cycle length={cycle.length} basin={cycle.basin_size}: {values}{tag}"
        )
    return "\n".join(lines) + "\n"


def _cmd_census(args: argparse.Namespace) -> int:
    config = _config_for(args)
    fmt = _format_from(args, config)
    params = _params_from(args, config)
    n_max = _n_max_from(args, config, default=None)
    census = cycle_census(params, extra_range=n_max)
    echo = _params_echo(params)
    echo["n_max"] = None if n_max is None else str(n_max)
    envelope = _envelope("census", echo, STATUS_OK, _census_payload(census), args)
    _emit(args, fmt, envelope, _census_csv(STATUS_OK, census), _census_text(census))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _verify_precondition_doc(args, fmt: str, theorem: int, params: Params, exc: PreconditionError) -> None:
    payload = {"failed_conditions": list(exc.failed), "detail": str(exc)}
    echo = _params_echo(params)
    echo["theorem"] = theorem
    envelope = _envelope("verify", echo, STATUS_PRECONDITION_FAILED, payload, args)
    header = [
        "schema_version",
        "command",
        "status",
        "theorem",
        "k",
        "p",
        "failed_conditions",
    ]
    row = [
        SCHEMA_VERSION,
        "verify",
        STATUS_PRECONDITION_FAILED,
        theorem,
        params.k,
        params.p,
        ",".join(exc.failed),
    ]
    text = (
        f"verify theorem {theorem} k={params.k} p={params.p}: precondition failed\n"
        f"  failed conditions: {', '.join(f'({c})' for c in exc.failed)}\n"
    )
    _emit(args, fmt, envelope, _csv_doc(header, [row]), text)


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _config_for(args)
    fmt = _format_from(args, config)
    params = _params_from(args, config)
    n_max = _n_max_from(args, config, default=DEFAULT_N_MAX)
    theorem = args.theorem
    echo = _params_echo(params)
    echo.update({"theorem": theorem, "n_max": str(n_max)})
    try:
        if theorem == 1:
            report = verify_theorem1(params, n_max)
        else:
            report = verify_theorem2(params, n_max)
    except PreconditionError as exc:
        _verify_precondition_doc(args, fmt, theorem, params, exc)
        return EXIT_PRECONDITION

    if theorem == 1:
        passed = report.passed
        counter = None
        if report.counterexample is not None:
            trace = report.counterexample
            counter = {
                "start": str(trace.values[0]),
                "trace": _trace_steps(trace.values, params),
                "preperiod_length": trace.preperiod_length,
                "cycle_length": trace.cycle_length,
                "cycle": [str(v) for v in trace.cycle],
            }
        payload = {
            "theorem": 1,
            "n_max": str(n_max),
            "passed": passed,
            "census": _census_payload(report.census),
            "counterexample": counter,
        }
        status = STATUS_OK if passed else STATUS_VERIFICATION_FAILED
        header = [
            "schema_version",
            "command",
            "status",
            "theorem",
            "k",
            "p",
            "n_max",
            "passed",
            "counterexample_start",
        ]
        row = [
            SCHEMA_VERSION,
            "verify",
            status,
            1,
            params.k,
            params.p,
            n_max,
            _bool_cell(passed),
            "" if counter is None else counter["start"],
        ]
        text_lines = [
            f"verify theorem 1 k={params.k} p={params.p} n_max={n_max}: "
            + ("pass" if passed else "FAIL"),
            f"  positive cycles found: "
            + "; ".join(
                "{" + ", ".join(str(v) for v in c.values) + "}"
                for c in report.census.cycles
                if not c.degenerate
            ),
        ]
        if counter is not None:
            text_lines.append(f"  counterexample start: {counter['start']}")
        envelope = _envelope("verify", echo, status, payload, args)
        _emit(args, fmt, envelope, _csv_doc(header, [row]), "\n".join(text_lines) + "\n")
        return EXIT_OK if passed else EXIT_VERIFICATION_FAILED

    passed = report.passed
    status = STATUS_OK if passed else STATUS_VERIFICATION_FAILED
    payload = {
        "theorem": 2,
        "n_max": str(n_max),
        "all_orbits_terminated": report.all_orbits_terminated,
        "census": _census_payload(report.census),
        "classification": [
            {
                "cycle": [str(v) for v in entry.cycle.values],
                "label": entry.label,
                "basin_size": entry.cycle.basin_size,
            }
            for entry in report.classification
        ],
    }
    header = [
        "schema_version",
        "command",
        "status",
        "theorem",
        "k",
        "p",
        "n_max",
        "cycle",
        "label",
        "basin_size",
    ]
    rows = [
        [
            SCHEMA_VERSION,
            "verify",
            status,
            2,
            params.k,
            params.p,
            n_max,
            ",".join(str(v) for v in entry.cycle.values),
            entry.label,
            entry.cycle.basin_size,
        ]
        for entry in report.classification
    ]
    text_lines = [
        f"verify theorem 2 k={params.k} p={params.p} n_max={n_max}: "
        + ("pass" if passed else "FAIL"),
        f"  all orbits terminated in a census cycle: {_bool_cell(report.all_orbits_terminated)}",
    ]
    for entry in report.classification:
        values = " -> ".join(str(v) for v in entry.cycle.values)
        text_lines.append(f"  {entry.label}: {values} (basin {entry.cycle.basin_size})")
    envelope = _envelope("verify", echo, status, payload, args)
    _emit(args, fmt, envelope, _csv_doc(header, rows), "\n".join(text_lines) + "\n")
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


# ---------------------------------------------------------------------------
# sweep

SWEEP_CSV_COLUMNS = [
    "k",
    "p",
    "hyp_a",
    "hyp_b",
    "hyp_c",
    "absorbing_bound",
    "num_cycles",
    "cycles",
    "theorem1_status",
    "max_transient",
]


def _sweep_row_payload(row: SweepRow) -> dict:
    return {
        "k": row.k,
        "p": row.p,
        "skip_reason": row.skip_reason,
        "hypothesis": None if row.hypothesis is None else _hypothesis_payload(row.hypothesis),
        "absorbing_bound": None if row.absorbing_bound is None else str(row.absorbing_bound),
        "num_cycles": None if row.skip_reason or row.error else row.num_cycles,
        "cycles": None
        if row.skip_reason or row.error
        else [
            {
                "values": [str(v) for v in cycle.values],
                "length": cycle.length,
                "basin_size": cycle.basin_size,
                "degenerate": cycle.degenerate,
            }
            for cycle in row.cycles
        ],
        "theorem1_status": row.theorem1_status,
        "max_transient": row.max_transient,
        "error": row.error,
    }


def _sweep_csv(rows: tuple[SweepRow, ...]) -> str:
    out = []
    for row in rows:
        if row.skip_reason or row.error:
            out.append(
                [row.k, row.p, "", "", "", "", "", "", row.theorem1_status, ""]
            )
            continue
        hyp = row.hypothesis
        out.append(
            [
                row.k,
                row.p,
                _bool_cell(hyp.a_holds),
                _bool_cell(hyp.b_holds),
                _bool_cell(hyp.c_holds),
                row.absorbing_bound,
                row.num_cycles,
                ";".join(",".join(str(v) for v in c.values) for c in row.cycles),
                row.theorem1_status,
                row.max_transient,
            ]
        )
    return _csv_doc(SWEEP_CSV_COLUMNS, out)


def _sweep_text(rows: tuple[SweepRow, ...]) -> str:
    lines = []
    for row in rows:
        if row.skip_reason:
            lines.append(f"k={row.k} p={row.p}: skipped ({row.skip_reason})")
            continue
        if row.error:
            lines.append(f"k={row.k} p={row.p}: error ({row.error})")
            continue
        hyp = row.hypothesis
        cycles = "; ".join(
            "{" + ", ".join(str(v) for v in c.values) + "}" for c in row.cycles
        )
        lines.append(
            f"k={row.k} p={row.p}: hyp(a={_bool_cell(hyp.a_holds)} "
            f"b={_bool_cell(hyp.b_holds)} c={_bool_cell(hyp.c_holds)}) "
            f"bound={row.absorbing_bound} cycles=[{cycles}] "
            f"theorem1={row.theorem1_status} max_transient={row.max_transient}"
        )
    return "\n".join(lines) + "\n"


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _config_for(args)
    fmt = _format_from(args, config)
    n_max = _n_max_from(args, config, default=DEFAULT_N_MAX)
    rows = sweep(args.k_range, args.p_range, n_max, jobs=args.jobs)
    all_pass = all(
        row.theorem1_status == THEOREM1_PASS
        for row in rows
        if row.hypothesis is not None and row.hypothesis.satisfied
    )
    status = STATUS_OK if all_pass else STATUS_VERIFICATION_FAILED
    echo = {
        "k_range": f"{args.k_range[0]}:{args.k_range[1]}",
        "p_range": f"{args.p_range[0]}:{args.p_range[1]}",
        "n_max": str(n_max),
        "jobs": args.jobs,
    }
    payload = {"rows": [_sweep_row_payload(row) for row in rows]}
    envelope = _envelope("sweep", echo, status, payload, args)
    _emit(args, fmt, envelope, _sweep_csv(rows), _sweep_text(rows))
    return EXIT_OK if all_pass else EXIT_VERIFICATION_FAILED


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zorbit",
        description="Base-k digit-sum dynamics: orbits, cycle censuses, "
        "parameter condition checks, and exhaustive verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", metavar="FILE", help="key = value defaults for k, p, n-max, format"
    )
    common.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        help=f"output format (default {DEFAULT_FORMAT})",
    )
    common.add_argument(
        "--timestamps",
        action="store_true",
        help="add a wall-clock timestamp outside the payload",
    )
    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--k", type=int, help="digit base (k >= 3)")
    pair.add_argument("--p", type=int, help="digit modulus (p >= 2)")

    sub = parser.add_subparsers(metavar="COMMAND")

    p_orbit = sub.add_parser(
        "orbit",
        parents=[common, pair],
        help="trace the orbit of one value to its first repeat",
    )
    p_orbit.add_argument(
        "n", type=_nonneg_int, help="starting value (nonnegative decimal, any size)"
    )
    p_orbit.add_argument(
        "--max-steps",
        dest="max_steps",
        type=int,
        help=f"iteration budget (default {DEFAULT_MAX_STEPS}; env {ENV_MAX_STEPS})",
    )
    p_orbit.set_defaults(handler=_cmd_orbit)

    p_check = sub.add_parser(
        "check",
        parents=[common, pair],
        help="evaluate parameter conditions (a), (b), (c)",
    )
    p_check.set_defaults(handler=_cmd_check)

    p_census = sub.add_parser(
        "census",
        parents=[common, pair],
        help="enumerate all cycles with basin sizes",
    )
    p_census.add_argument(
        "--n-max",
        dest="n_max",
        type=_positive_int,
        help="widen basin attribution to [0, n-max]",
    )
    p_census.set_defaults(handler=_cmd_census)

    p_verify = sub.add_parser(
        "verify",
        parents=[common, pair],
        help="run an exhaustive desk-scale verifier",
    )
    p_verify.add_argument(
        "--theorem", type=int, choices=(1, 2), required=True, help="which verifier to run"
    )
    p_verify.add_argument(
        "--n-max",
        dest="n_max",
        type=_positive_int,
        help=f"range of starting values to cover (default {DEFAULT_N_MAX})",
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="evaluate a grid of (k, p) cells",
    )
    p_sweep.add_argument("--k-range", dest="k_range", type=_int_range, required=True, metavar="LO:HI")
    p_sweep.add_argument("--p-range", dest="p_range", type=_int_range, required=True, metavar="LO:HI")
    p_sweep.add_argument(
        "--n-max",
        dest="n_max",
        type=_positive_int,
        help=f"starting range per cell (default {DEFAULT_N_MAX})",
    )
    p_sweep.add_argument("--out", metavar="FILE", help="write the output document to FILE")
    p_sweep.add_argument(
        "--jobs",
        type=_positive_int,
        default=1,
        help="parallel worker count (output bytes do not depend on it)",
    )
    p_sweep.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except PreconditionError as exc:  # safety net; verify renders its own
        print(f"zorbit: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, ParameterDomainError) as exc:
        print(f"zorbit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZorbitError as exc:
        print(f"zorbit: error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
