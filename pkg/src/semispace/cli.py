"""Command line: ``semispace <command> --atoms N --actual STATE``.

Exit status is 0 on success, 1 when ``verify`` finds results other than
the expected ones and 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import mtsi, report, tssi, twsi
from .formula import Atom, FormulaSyntaxError, conjuncts, is_literal, parse
from .worlds import (
    ENUMERATION_CAP,
    Universe,
    UniverseTooLargeError,
    UnknownAtomError,
    World,
    build_universe,
    default_atom_names,
    state_formula,
    world_of_state,
)

COMMANDS = ("table", "assess", "space", "verify", "bcp-demo", "guards-demo")
DEFAULT_FORMAT = {"table": "csv", "space": "csv", "assess": "json", "verify": "text", "bcp-demo": "text"}


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    universe: Universe
    actual: World
    actual_formula: object
    output_format: str
    ray_scheme: str


def _build_config(args) -> RunConfig:
    n = args.atoms
    if n < 1:
        raise ConfigError("--atoms must be at least 1")
    if args.actual is None:
        U = build_universe(default_atom_names(n))
        world = U.world(U.m - 1)
        actual = state_formula(U, world)
    else:
        actual = parse(args.actual)
        parts = conjuncts(actual)
        if not all(is_literal(p) for p in parts):
            raise ConfigError(f"--actual {args.actual!r} is not a conjunction of literals")
        names = [p.name if isinstance(p, Atom) else p.operand.name for p in parts]
        if len(set(names)) != len(names) or len(names) != n:
            raise ConfigError(f"--actual must name each of the {n} atoms exactly once")
        U = build_universe(names)
        world = world_of_state(actual, U)
    fmt = args.format or DEFAULT_FORMAT.get(args.command, "text")
    return RunConfig(U, world, actual, fmt, args.ray_scheme)


def _check_format(cfg: RunConfig, allowed):
    if cfg.output_format not in allowed:
        raise ConfigError(f"format {cfg.output_format!r} not available here; use one of {', '.join(allowed)}")


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    _check_format(cfg, ("csv", "json"))
    if cfg.output_format == "json":
        return report.table_json(cfg.universe, cfg.actual, cfg.actual_formula), 0
    return report.table_csv(cfg.universe, cfg.actual, cfg.actual_formula), 0


def cmd_assess(cfg: RunConfig, text: str) -> tuple[str, int]:
    _check_format(cfg, ("json",))
    record = report.assess_record(cfg.universe, cfg.actual, parse(text), cfg.ray_scheme)
    return json.dumps(record, indent=2) + "\n", 0


def cmd_space(cfg: RunConfig) -> tuple[str, int]:
    _check_format(cfg, ("csv", "json", "svg"))
    records = report.space_records(cfg.universe, cfg.actual, cfg.ray_scheme)
    if cfg.output_format == "json":
        return report.space_json(records), 0
    if cfg.output_format == "svg":
        return report.space_svg(cfg.universe, cfg.actual, records), 0
    return report.space_csv(records), 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    _check_format(cfg, ("text", "json"))
    U, w = cfg.universe, cfg.actual
    if U.n > tssi.CRITERIA_CAP:
        raise UniverseTooLargeError(U.n, tssi.CRITERIA_CAP)
    ok = True
    lines = []
    payload = {}
    if U.n >= 2:
        reports = tssi.check_criteria(U, w)
        violated = frozenset(r.criterion for r in reports if r.status == "violated")
        matched = violated == tssi.EXPECTED_VIOLATIONS
        ok &= matched
        lines += report.criteria_lines("tssi", reports, tssi.EXPECTED_VIOLATIONS)
        lines += report.discontinuity_lines(tssi.discontinuity_demo(U, w))
        lines.append(f"tssi violations {'match' if matched else 'DO NOT match'} the expected set {{M3, M4}}")
        payload["tssi"] = {"matched": matched, "criteria": [r.to_dict() for r in reports]}
    if U.n <= ENUMERATION_CAP:
        reports = mtsi.verify_mtsi(U, w, ray_scheme=cfg.ray_scheme)
        passed = all(r.status == "satisfied" for r in reports)
        ok &= passed
        lines += report.criteria_lines("mtsi", reports)
        lines.append(f"mtsi checks {'all satisfied' if passed else 'FAILED'}")
        payload["mtsi"] = {"passed": passed, "criteria": [r.to_dict() for r in reports]}
    payload["ok"] = ok
    code = 0 if ok else 1
    if cfg.output_format == "json":
        return json.dumps(payload, indent=2) + "\n", code
    return "\n".join(lines) + "\n", code


def cmd_bcp_demo(cfg: RunConfig) -> tuple[str, int]:
    _check_format(cfg, ("text", "json"))
    rep = twsi.bcp_witness(cfg.universe)
    if cfg.output_format == "json":
        rows = [
            {"messageId": i, "message": t, "bitmask": b, "prior": report.fmt_rational(p), "cont": report.fmt_rational(c)}
            for i, t, b, p, c in rep.rows
        ]
        return json.dumps({"rows": rows, "maximal": rep.maximal, "contradictionTops": rep.holds}, indent=2) + "\n", 0
    return "\n".join(report.bcp_lines(rep)) + "\n", 0


def cmd_guards_demo() -> tuple[str, int]:
    transcript = mtsi.guards_demo()
    lines = list(transcript.lines)
    lines.append(
        f"asked what the other guard would say, a guard answers Door {transcript.example_answer}; "
        f"choose Door {transcript.example_choice}"
    )
    return "\n".join(lines) + "\n", 0 if transcript.success else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semispace", description="Compare measures of semantic information.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("formula", nargs="?", help="infon to assess (assess only)")
    parser.add_argument("--atoms", type=int, default=2, help="number of atoms (default 2)")
    parser.add_argument("--actual", help="actual state as a conjunction of literals, e.g. xy'")
    parser.add_argument("--format", choices=("csv", "json", "svg", "text"))
    parser.add_argument("--ray-scheme", choices=mtsi.RAY_SCHEMES, default="ratio")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "assess" and args.formula is None:
        parser.error("assess needs a formula")
    if args.command != "assess" and args.formula is not None:
        parser.error(f"{args.command} takes no positional formula")
    try:
        if args.command == "guards-demo":
            text, code = cmd_guards_demo()
        else:
            cfg = _build_config(args)
            if args.command == "table":
                text, code = cmd_table(cfg)
            elif args.command == "assess":
                text, code = cmd_assess(cfg, args.formula)
            elif args.command == "space":
                text, code = cmd_space(cfg)
            elif args.command == "verify":
                text, code = cmd_verify(cfg)
            else:
                text, code = cmd_bcp_demo(cfg)
    except (ConfigError, FormulaSyntaxError, UniverseTooLargeError, UnknownAtomError, ValueError) as exc:
        print(f"semispace: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == 1:
        print("semispace: checks did not match the expected outcome", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
