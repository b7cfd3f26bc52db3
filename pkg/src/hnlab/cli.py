"""Command-line front end.

Every invocation emits exactly one report, as stable text (default) or as a
single JSON object with schema version "v1"; both carry identical numbers.
Lists are sorted and nothing time-dependent enters the payload (elapsed
time goes to stderr).  Exit codes: 0 ok, 1 usage or parse failure, 2 domain
precondition violated, 3 verification mismatch.

The environment variable HNLAB_MAX_FROBENIUS (default 1000000) caps both
the size of accepted generators and the Frobenius number of any semigroup
the run is allowed to enumerate.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import catalogue as cat
from . import hn
from .errors import DomainError, InvalidGenerator, InvariantViolation
from .oversemigroups import (
    CoverQuery,
    candidate_triples,
    symmetric_cover,
    verify_delta,
)
from .semigroup import NumericalSemigroup, from_generators, profile, traits

_DEFAULT_CAP = 1_000_000
_SCHEMA = "v1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_MISMATCH = 3


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any] | None = None
    status: str = "ok"
    error: dict[str, str] | None = None
    text_lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def fail(self, code: str, message: str, exit_code: int) -> "Report":
        self.status = "error"
        self.error = {"code": code, "message": message}
        self.exit_code = exit_code
        return self


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; the contract wants 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _fmt_ints(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def _fmt_components(components: Sequence[Sequence[int]]) -> str:
    return "+".join(f"{s}x{l}" for s, l in components)


def _frobenius_cap() -> int:
    raw = os.environ.get("HNLAB_MAX_FROBENIUS")
    if raw is None:
        return _DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"HNLAB_MAX_FROBENIUS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError(f"HNLAB_MAX_FROBENIUS must be positive, got {cap}")
    return cap


def _semigroup_from_cli(gens: Sequence[int]) -> NumericalSemigroup:
    cap = _frobenius_cap()
    for g in gens:
        if g > cap:
            raise InvalidGenerator(f"generator {g} exceeds the cap of {cap}")
    return from_generators(gens, max_frobenius=cap)


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer entry in {text!r}") from None


def _semigroup_payload(s: NumericalSemigroup) -> dict[str, Any]:
    prof = profile(s)
    tr = traits(s)
    return {
        "minimal_gens": list(s.minimal_gens),
        "apery": list(s.apery),
        "multiplicity": tr.multiplicity,
        "embedding_dimension": tr.embedding_dimension,
        "frobenius": prof.frobenius,
        "gaps": list(prof.gaps),
        "genus": prof.genus,
        "n_below": prof.n_below,
        "symmetric": tr.symmetric,
        "irreducible": tr.irreducible,
        "pseudo_frobenius": list(tr.pseudo_frobenius),
        "type": tr.type,
        "almost_symmetric": tr.almost_symmetric,
    }


def _semigroup_lines(payload: dict[str, Any]) -> list[str]:
    return [
        f"minimal_gens: {_fmt_ints(payload['minimal_gens'])}",
        f"apery: {_fmt_ints(payload['apery'])}",
        f"multiplicity: {payload['multiplicity']}",
        f"embedding_dimension: {payload['embedding_dimension']}",
        f"frobenius: {payload['frobenius']}",
        f"gaps: {_fmt_ints(payload['gaps'])}",
        f"genus: {payload['genus']}",
        f"n_below: {payload['n_below']}",
        f"symmetric: {_fmt_bool(payload['symmetric'])}",
        f"irreducible: {_fmt_bool(payload['irreducible'])}",
        f"pseudo_frobenius: {_fmt_ints(payload['pseudo_frobenius'])}",
        f"type: {payload['type']}",
        f"almost_symmetric: {_fmt_bool(payload['almost_symmetric'])}",
    ]


# ── command handlers ───────────────────────────────────────────────────────


def _cmd_sgp_analyze(args: argparse.Namespace) -> Report:
    report = Report("sgp analyze", {"gens": list(args.gens)})
    s = _semigroup_from_cli(args.gens)
    payload = _semigroup_payload(s)
    report.result = payload
    report.text_lines = _semigroup_lines(payload)
    return report


def _cmd_sgp_sym_cover(args: argparse.Namespace) -> Report:
    report = Report("sgp sym-cover", {"gens": list(args.gens), "mult": args.mult})
    s = _semigroup_from_cli(args.gens)
    verdict = symmetric_cover(CoverQuery(s, args.mult))
    witness = list(verdict.witness.minimal_gens) if verdict.witness else None
    report.result = {
        "covered": verdict.covered,
        "witness": witness,
        "search_count": verdict.search_count,
    }
    report.text_lines = [
        f"covered: {_fmt_bool(verdict.covered)}",
        f"witness: {_fmt_ints(witness) if witness else '-'}",
        f"search_count: {verdict.search_count}",
    ]
    return report


def _cmd_delta_verify(args: argparse.Namespace) -> Report:
    report = Report("delta verify", {"bound": args.bound, "jobs": args.jobs})
    delta = verify_delta(args.bound, jobs=args.jobs)
    report.result = {
        "flagged": [list(t) for t in delta.flagged],
        "expected": [list(t) for t in delta.expected],
        "match": delta.matches,
        "triples_examined": len(candidate_triples(args.bound)),
    }
    report.text_lines = [
        f"triples_examined: {report.result['triples_examined']}",
        f"flagged: {'; '.join(','.join(map(str, t)) for t in delta.flagged) or '-'}",
        f"expected: {'; '.join(','.join(map(str, t)) for t in delta.expected) or '-'}",
        f"match: {_fmt_bool(delta.matches)}",
    ]
    if not delta.matches:
        report.fail("VerificationMismatch", "flagged triples differ from the known four", EXIT_MISMATCH)
    return report


def _cmd_hn_build(args: argparse.Namespace) -> Report:
    inputs: dict[str, Any] = {"a": list(args.a), "b": list(args.b)}
    if args.e is not None:
        inputs["e"] = args.e
    report = Report("hn build", inputs)
    cap = _frobenius_cap()
    ideal = hn.build(hn.ExponentPair(args.a, args.b), max_frobenius=cap)
    pair = ideal.exponents
    result: dict[str, Any] = {
        "a": list(pair.a),
        "b": list(pair.b),
        "c": list(pair.c),
        "m": list(ideal.m),
        "coprime": ideal.coprime,
        "generators": [
            {"plus": list(g.plus), "minus": list(g.minus), "text": g.render(("x", "y", "z"))}
            for g in ideal.generators
        ],
        "value_semigroup": _semigroup_payload(ideal.value_semigroup) if ideal.coprime else None,
    }
    lines = [
        f"a: {_fmt_ints(pair.a)}",
        f"b: {_fmt_ints(pair.b)}",
        f"c: {_fmt_ints(pair.c)}",
        f"m: {_fmt_ints(ideal.m)}",
        f"coprime: {_fmt_bool(ideal.coprime)}",
    ]
    lines.extend(f"generator {name}: {g.render(('x', 'y', 'z'))}"
                 for name, g in zip(("v1", "v2", "D"), ideal.generators))
    if ideal.coprime:
        sg = result["value_semigroup"]
        lines.append(f"value_semigroup: {_fmt_ints(sg['minimal_gens'])}")
        lines.append(f"value_semigroup frobenius: {sg['frobenius']}")
        lines.append(f"value_semigroup symmetric: {_fmt_bool(sg['symmetric'])}")
        lines.append(f"value_semigroup embedding_dimension: {sg['embedding_dimension']}")
    else:
        lines.append("value_semigroup: - (gcd of m is not 1)")
    if args.e is not None:
        verdict = hn.theorem_verdict(ideal, args.e)
        result["verdict"] = {
            "hypothesis_ok": verdict.hypothesis_ok,
            "multiplicity_e": verdict.multiplicity_e,
            "outcome": verdict.outcome.value,
            "possible_cases": list(verdict.possible_cases),
        }
        lines.append(f"hypothesis_ok: {_fmt_bool(verdict.hypothesis_ok)}")
        lines.append(f"outcome: {verdict.outcome.value}")
        lines.append(f"possible_cases: {' '.join(verdict.possible_cases)}")
    else:
        result["verdict"] = None
    report.result = result
    report.text_lines = lines
    return report


def _cmd_hn_solve(args: argparse.Namespace) -> Report:
    report = Report("hn solve", {"m": list(args.m)})
    solutions = hn.solve_exponents(args.m)
    report.result = {
        "m": list(args.m),
        "solutions": [{"a": list(p.a), "b": list(p.b)} for p in solutions],
    }
    if solutions:
        report.text_lines = [
            f"solution {i}: a={_fmt_ints(p.a)} b={_fmt_ints(p.b)}"
            for i, p in enumerate(solutions, 1)
        ]
    else:
        report.text_lines = ["solutions: none"]
    return report


def _cmd_catalogue_check(args: argparse.Namespace) -> Report:
    report = Report(
        "catalogue check", {"id": args.id, "n": args.n, "m": list(args.m)}
    )
    spec = cat.example_spec(args.id, args.n, args.m)
    example = cat.verify_example(spec)
    report.result = {
        "id": spec.id,
        "n": spec.n,
        "m": list(spec.m),
        "factors": [
            {
                "monomials": [list(mono) for mono in f.monomials],
                "weights": list(f.weights.weights) if f.weights else None,
                "note": f.note,
            }
            for f in spec.factors
        ],
        "weight_checks": [
            {
                "subject": c.subject,
                "weights": list(c.weights) if c.weights else None,
                "passed": c.passed,
                "detail": c.detail,
            }
            for c in example.weight_checks
        ],
        "gcd_tuple": list(spec.gcd_tuple),
        "gcd_ok": example.gcd_ok,
        "predicted": {
            "label": spec.predicted.label,
            "e": spec.predicted.e,
            "components": [list(comp) for comp in spec.predicted.components],
        },
        "caveat": spec.caveat,
        "verdict": example.verdict,
    }
    lines = []
    for c in example.weight_checks:
        state = "skipped" if c.passed is None else ("pass" if c.passed else "FAIL")
        lines.append(f"check {c.subject}: {state}")
    lines.append(
        f"gcd tuple: {_fmt_ints(spec.gcd_tuple)} -> {'pass' if example.gcd_ok else 'FAIL'}"
    )
    lines.append(
        f"predicted: {spec.predicted.label} components {_fmt_components(spec.predicted.components)}"
    )
    lines.append(f"caveat: {spec.caveat or '-'}")
    lines.append(f"verdict: {'pass' if example.verdict else 'FAIL'}")
    report.text_lines = lines
    if not example.verdict:
        report.fail("VerificationMismatch", "catalogued example failed its checks", EXIT_MISMATCH)
    return report


def _cmd_cases(args: argparse.Namespace) -> Report:
    report = Report("cases", {"e": args.e})
    records = cat.enumerate_cases(args.e)
    report.result = {
        "e": args.e,
        "cases": [
            {
                "label": r.label,
                "components": [list(comp) for comp in r.components],
                "n_components": r.n_components,
            }
            for r in records
        ],
    }
    report.text_lines = [
        f"case {r.label}: components {_fmt_components(r.components)}" for r in records
    ] + [f"count: {len(records)}"]
    return report


# ── parser wiring and entry point ──────────────────────────────────────────


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="report format (default: text)",
    )
    parser = _Parser(prog="hnlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    sgp = sub.add_parser("sgp", help="numerical semigroup invariants")
    sgp_sub = sgp.add_subparsers(dest="subcommand", required=True)
    p = sgp_sub.add_parser("analyze", parents=[common], help="full invariant report")
    p.add_argument("gens", nargs="+", type=_positive_int, metavar="GEN")
    p.set_defaults(handler=_cmd_sgp_analyze)
    p = sgp_sub.add_parser("sym-cover", parents=[common], help="symmetric cover search")
    p.add_argument("gens", nargs="+", type=_positive_int, metavar="GEN")
    p.add_argument("--mult", type=_positive_int, required=True,
                   help="required multiplicity of the cover (must equal the base's)")
    p.set_defaults(handler=_cmd_sgp_sym_cover)

    delta = sub.add_parser("delta", help="uncovered-triple census")
    delta_sub = delta.add_subparsers(dest="subcommand", required=True)
    p = delta_sub.add_parser("verify", parents=[common], help="flag uncovered triples up to a bound")
    p.add_argument("--bound", type=_positive_int, required=True)
    p.add_argument("--jobs", type=_positive_int, default=1,
                   help="process-parallel triple evaluation (default 1)")
    p.set_defaults(handler=_cmd_delta_verify)

    hn_p = sub.add_parser("hn", help="Herzog-Northcott ideal data")
    hn_sub = hn_p.add_subparsers(dest="subcommand", required=True)
    p = hn_sub.add_parser("build", parents=[common], help="build generators and multipliers from a, b")
    p.add_argument("--a", type=_triple, required=True, metavar="A1,A2,A3")
    p.add_argument("--b", type=_triple, required=True, metavar="B1,B2,B3")
    p.add_argument("--e", type=int, default=None,
                   help="ambient multiplicity for the classification verdict")
    p.set_defaults(handler=_cmd_hn_build)
    p = hn_sub.add_parser("solve", parents=[common], help="invert a multiplier triple to exponents")
    p.add_argument("--m", type=_triple, required=True, metavar="M1,M2,M3")
    p.set_defaults(handler=_cmd_hn_solve)

    cat_p = sub.add_parser("catalogue", help="worked decomposition examples")
    cat_sub = cat_p.add_subparsers(dest="subcommand", required=True)
    p = cat_sub.add_parser("check", parents=[common], help="re-check one catalogued example")
    p.add_argument("--id", required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--m", type=_triple, required=True, metavar="M1,M2,M3")
    p.set_defaults(handler=_cmd_catalogue_check)

    p = sub.add_parser("cases", parents=[common], help="decomposition shapes for a multiplicity")
    p.add_argument("--e", type=_positive_int, required=True)
    p.set_defaults(handler=_cmd_cases)
    return parser


def _emit(report: Report, fmt: str) -> None:
    if fmt == "json":
        payload: dict[str, Any] = {
            "schema": _SCHEMA,
            "command": report.command,
            "inputs": report.inputs,
            "status": report.status,
        }
        if report.error is not None:
            payload["error"] = report.error
        if report.result is not None:
            payload["result"] = report.result
        print(json.dumps(payload, sort_keys=True))
        return
    lines = [f"command: {report.command}"]
    lines.extend(
        f"input {k}: {_fmt_ints(v) if isinstance(v, list) else v}"
        for k, v in report.inputs.items()
    )
    lines.extend(report.text_lines)
    if report.error is not None:
        lines.append(f"error: {report.error['code']}")
        lines.append(f"error_message: {report.error['message']}")
    lines.append(f"status: {report.status}")
    print("\n".join(lines))


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    handler: Callable[[argparse.Namespace], Report] = args.handler
    started = time.perf_counter()
    try:
        report = handler(args)
    except DomainError as exc:
        report = Report(_command_name(args), _echo_inputs(args))
        report.fail(type(exc).__name__, str(exc), EXIT_DOMAIN)
    except InvariantViolation as exc:
        report = Report(_command_name(args), _echo_inputs(args))
        report.fail(type(exc).__name__, str(exc), EXIT_MISMATCH)
    _emit(report, args.format)
    print(f"runtime: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return report.exit_code


def _command_name(args: argparse.Namespace) -> str:
    sub = getattr(args, "subcommand", None)
    return f"{args.group} {sub}" if sub else args.group


def _echo_inputs(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"group", "subcommand", "handler", "format"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


if __name__ == "__main__":
    sys.exit(main())
