"""Command-line surface: file-driven checks, linearization, and certificates.

Exit code contract: 0 means success (the checked property holds), 1 means a
semantic failure (axiom violations found, intersection mismatch, or an
operation precondition that does not hold), 2 means a usage or input error
(unknown command, missing file, malformed document, bad flag values).

In human mode, matrix documents go to stdout and summary lines to stderr so
output can be piped; ``--json`` switches to a single machine-readable report
on stdout with the stable keys {command, verdicts, witnesses, trace, family,
timing}.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .extension import linearize, pivot_extend
from .matrixio import ParseError, emit_matrix, format_for_path, load_matrix, save_matrix
from .oracle import GeneratorSpec, random_zadeh_order
from .preserving import certifying_family, clamp_extend, verify_intersection
from .relation import (
    CarrierMismatchError,
    EmptyFamilyError,
    PreconditionError,
    check_order,
    incomparable_pairs,
    is_linear,
)

__all__ = ["RunReport", "build_parser", "main", "run_command"]


@dataclass
class RunReport:
    """Everything one command run produced, in machine-readable form."""

    command: list[str]
    verdicts: dict = field(default_factory=dict)
    witnesses: object = None
    trace: dict | None = None
    family: dict | None = None
    timing: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "trace": self.trace,
            "family": self.family,
            "timing": self.timing,
        }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzorder",
        description="Check, linearize, and certify fuzzy orders stored as matrix files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, output=True):
        p.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
        if output:
            p.add_argument("-o", "--output", help="write the resulting matrix here")
            p.add_argument(
                "--format", choices=("csv", "json"), help="output format (default: input format)"
            )

    p = sub.add_parser("check", help="validate the order axioms and linearity")
    p.add_argument("file")
    add_common(p, output=False)

    p = sub.add_parser("linearize", help="extend an order to a linear one")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true", help="list every pivot and raised entry")
    p.add_argument("--policy", choices=("low", "high"), default="low",
                   help="pivot orientation (default: low index on top)")
    add_common(p)

    p = sub.add_parser("pivot", help="apply one pivot extension")
    p.add_argument("file")
    p.add_argument("--a", required=True, help="label of the element to put on top")
    p.add_argument("--b", required=True, help="label of the element placed below")
    add_common(p)

    p = sub.add_parser("clamp", help="linear extension preserving the grade at (a, b)")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add_common(p)

    p = sub.add_parser("family", help="build the certifying family of linear extensions")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="directory to write the members into")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check that a family's infimum rebuilds the order")
    p.add_argument("file")
    p.add_argument("--family", required=True, dest="family_dir",
                   help="directory of member matrices (as written by `family -o`)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="generate a reproducible random order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    add_common(p)

    return parser


def _fmt_value(v: float) -> str:
    return repr(int(v)) if float(v).is_integer() else repr(v)


def _emit_result(args, relation, fmt, info, report):
    out_fmt = getattr(args, "format", None) or fmt
    document = emit_matrix(relation, out_fmt)
    if getattr(args, "output", None):
        Path(args.output).write_text(document, encoding="utf-8")
        info.append(f"wrote {args.output}")
    else:
        report.setdefault("output", document)
    return document


def _cmd_check(args, report):
    relation, _ = load_matrix(args.file)
    axioms = check_order(relation)
    linear = is_linear(relation)
    pairs = incomparable_pairs(relation)
    report["verdicts"] = {
        "zadeh_order": axioms.is_order,
        "reflexive": axioms.reflexive,
        "antisymmetric": axioms.antisymmetric,
        "transitive": axioms.transitive,
        "linear": linear.passed,
    }
    report["witnesses"] = {
        "reflexivity": [[x, v] for x, v in axioms.reflexivity_witnesses],
        "antisymmetry": [[list(p), f, b] for p, f, b in axioms.antisymmetry_witnesses],
        "transitivity": [[list(t), v, bound] for t, v, bound in axioms.transitivity_witnesses],
        "incomparable_pairs": [[p.first.label, p.second.label] for p in pairs],
    }
    yn = lambda flag: "yes" if flag else "no"
    info = [
        f"Zadeh fuzzy order: {yn(axioms.is_order)}; "
        f"linear: {yn(linear.passed)}; incomparable pairs: {len(pairs)}"
    ]
    for x, v in axioms.reflexivity_witnesses:
        info.append(f"reflexivity violated at ({x},{x}): {_fmt_value(v)} != 1")
    for (x, y), fwd, back in axioms.antisymmetry_witnesses:
        info.append(
            f"antisymmetry violated at {{{x},{y}}}: "
            f"r({x},{y})={_fmt_value(fwd)} and r({y},{x})={_fmt_value(back)}"
        )
    for (x, y, z), v, bound in axioms.transitivity_witnesses:
        info.append(
            f"transitivity violated at ({x},{y},{z}): "
            f"r({x},{z})={_fmt_value(v)} < {_fmt_value(bound)}"
        )
    return (0 if axioms.is_order else 1), info, None


def _cmd_linearize(args, report):
    relation, fmt = load_matrix(args.file)
    result = linearize(relation, policy=args.policy)
    report["verdicts"] = {"zadeh_order": True, "linear": True}
    report["trace"] = {
        "k": result.k,
        "m": result.m,
        "pivots": [[step.a.label, step.b.label] for step in result.trace],
    }
    info = [f"linear extension found: k={result.k} pivots, m={result.m} incomparable entries"]
    if args.trace:
        report["trace"]["steps"] = [
            {
                "a": step.a.label,
                "b": step.b.label,
                "entries_raised": [[list(xy), old, new] for xy, old, new in step.entries_raised],
            }
            for step in result.trace
        ]
        for step in result.trace:
            info.append(f"pivot {step.step_index}: {step.a.label} above {step.b.label}")
            for (x, y), old, new in step.entries_raised:
                info.append(f"  ({x},{y}): {_fmt_value(old)} -> {_fmt_value(new)}")
    _emit_result(args, result.relation, fmt, info, report)
    return 0, info, result.relation


def _cmd_pivot(args, report):
    relation, fmt = load_matrix(args.file)
    extended = pivot_extend(relation, args.a, args.b)
    changed = int((extended.grid != relation.grid).sum())
    report["verdicts"] = {"zadeh_order": True}
    report["trace"] = {"k": 1, "m": None, "pivots": [[args.a, args.b]]}
    info = [f"pivot applied: {args.a} above {args.b} ({changed} entries raised)"]
    _emit_result(args, extended, fmt, info, report)
    return 0, info, extended


def _cmd_clamp(args, report):
    relation, fmt = load_matrix(args.file)
    result = clamp_extend(relation, args.a, args.b)
    report["verdicts"] = {"zadeh_order": True, "linear": True}
    report["trace"] = {
        "beta": result.beta,
        "preserved_pair": [args.a, args.b],
    }
    info = [f"linear extension preserving ({args.a},{args.b}) = {_fmt_value(result.beta)}"]
    _emit_result(args, result.relation, fmt, info, report)
    return 0, info, result.relation


def _cmd_family(args, report):
    relation, fmt = load_matrix(args.file)
    family = certifying_family(relation)
    report["verdicts"] = {"zadeh_order": True}
    report["family"] = {
        "members": len(family),
        "certificates": family.certificate_count,
        "tags": [list(member.tags) for member in family.members],
    }
    info = [
        f"certifying family: {len(family)} members carrying "
        f"{family.certificate_count} certificates"
    ]
    if args.output:
        out_fmt = args.format or fmt
        directory = Path(args.output)
        directory.mkdir(parents=True, exist_ok=True)
        manifest = []
        for idx, member in enumerate(family.members):
            name = f"member_{idx:03d}.{out_fmt}"
            save_matrix(member.relation, directory / name, out_fmt)
            manifest.append({"file": name, "tags": list(member.tags)})
        (directory / "family.json").write_text(
            json.dumps({"source": args.file, "members": manifest}, indent=2) + "\n",
            encoding="utf-8",
        )
        info.append(f"wrote {len(family)} members to {directory}")
    else:
        for member in family.members:
            info.append("member tags: " + ", ".join(member.tags))
    return 0, info, None


def _read_family_dir(directory: Path):
    manifest = directory / "family.json"
    if manifest.exists():
        listed = json.loads(manifest.read_text(encoding="utf-8"))["members"]
        paths = [directory / entry["file"] for entry in listed]
    else:
        paths = sorted(
            p for p in directory.iterdir()
            if p.suffix in (".csv", ".json") and p.name != "family.json"
        )
    if not paths:
        raise EmptyFamilyError(f"no family members found in {directory}")
    return [load_matrix(p)[0] for p in paths]


def _cmd_verify(args, report):
    relation, _ = load_matrix(args.file)
    members = _read_family_dir(Path(args.family_dir))
    verdict = verify_intersection(relation, members)
    report["verdicts"] = {"intersection_matches": verdict.passed}
    report["witnesses"] = [[list(xy), inf, expected] for xy, inf, expected in verdict.witnesses]
    report["family"] = {"members": len(members)}
    info = [f"intersection matches: {'yes' if verdict.passed else 'no'}"]
    for (x, y), inf, expected in verdict.witnesses:
        info.append(
            f"mismatch at ({x},{y}): inf={_fmt_value(inf)}, expected {_fmt_value(expected)}"
        )
    return (0 if verdict.passed else 1), info, None


def _cmd_gen(args, report):
    spec = GeneratorSpec(n=args.n, density=args.density, seed=args.seed)
    relation = random_zadeh_order(spec)
    report["verdicts"] = {"zadeh_order": True}
    info = [f"generated order on {spec.n} elements (density {spec.density}, seed {spec.seed})"]
    default_fmt = format_for_path(args.output) if args.output else "csv"
    _emit_result(args, relation, default_fmt, info, report)
    return 0, info, relation


_HANDLERS = {
    "check": _cmd_check,
    "linearize": _cmd_linearize,
    "pivot": _cmd_pivot,
    "clamp": _cmd_clamp,
    "family": _cmd_family,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
}


def run_command(argv: list[str]) -> int:
    """Dispatch one command line; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    fields: dict = {"verdicts": {}, "witnesses": None, "trace": None, "family": None}
    started = time.perf_counter()
    try:
        code, info, _ = _HANDLERS[args.command](args, fields)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, CarrierMismatchError, EmptyFamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, KeyError, ValueError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - started

    report = RunReport(
        command=list(argv),
        verdicts=fields.get("verdicts", {}),
        witnesses=fields.get("witnesses"),
        trace=fields.get("trace"),
        family=fields.get("family"),
        timing=elapsed,
    )
    if args.json:
        payload = report.to_dict()
        if "output" in fields:
            payload["output"] = fields["output"]
        print(json.dumps(payload))
    else:
        document = fields.get("output")
        if document is not None:
            sys.stdout.write(document)
        stream = sys.stderr if document is not None else sys.stdout
        for line in info:
            print(line, file=stream)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
