"""Command-line front end.

Five subcommands: `verify` checks the current-algebra form of the derived
orthogonal algebra, `classify` emits a decomposition certificate, `table`
prints the multiplication table in the distinguished basis, `oracle`
enumerates all ideals over a tiny prime field, and `counterexample`
reproduces the loss of semisimplicity after inseparable base change.

Exit codes: 0 when every internal check passes, 1 when a computation runs
but some check fails (which would falsify the library's claims) or a
domain error occurs, 2 for usage errors.  All randomness flows from one
seed (flag `--seed`, else ORTHOCURRENT_SEED, else 0).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .exact_linalg import Matrix
from .forms import make_form, orthogonalize
from .liealg import algebra_from_matrices, current_basis, tables_equal
from .oracle import enumerate_ideals, ideal_dimension_histogram
from .scalars import (
    FieldDescriptor,
    FieldElement,
    KIND_PRIME,
    ParseError,
    parse_field,
    parse_scalar,
    render_field,
    render_scalar,
)
from .structure import (
    CounterexampleReport,
    CurrentFormReport,
    DecompositionCertificate,
    build_pipeline,
    certificate_to_json,
    checks_to_json,
    classify,
    inseparable_counterexample,
    recheck_certificate_json,
    subspace_to_json,
    tensor_to_json,
    verify_current_form,
)

SEED_ENV = "ORTHOCURRENT_SEED"

# Symbolic table in the distinguished basis; coefficients refer to the
# diagonal entries a, b, c, d and to D = abcd.
TABLE_ROWS = (
    ("f1", "f2", "b", "f3"),
    ("f2", "f3", "c", "f1"),
    ("f3", "f1", "a", "f2"),
    ("f1", "h2", "b", "h3"),
    ("f2", "h3", "c", "h1"),
    ("f3", "h1", "a", "h2"),
    ("f2", "h1", "-b", "h3"),
    ("f3", "h2", "-c", "h1"),
    ("f1", "h3", "-a", "h2"),
    ("h1", "h2", "D b", "f3"),
    ("h2", "h3", "D c", "f1"),
    ("h3", "h1", "D a", "f2"),
)
BASIS_NAMES = ("f1", "f2", "f3", "h1", "h2", "h3")


@dataclass(frozen=True)
class CommandSpec:
    command: str
    field: Optional[FieldDescriptor] = None
    entries: Optional[tuple[FieldElement, ...]] = None
    gram: Optional[Matrix] = None
    as_json: bool = False
    seed: int = 0
    trials: int = 32
    p: int = 2

    @property
    def from_gram(self) -> bool:
        return self.gram is not None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocurrent",
        description="4-dimensional orthogonal Lie algebras as current algebras, exactly",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form_args(p, field_required=True):
        p.add_argument("--field", required=field_required,
                       help='field literal: Q, F<p>, F<p>(t), <base>[sqrt <D>]')
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--form", help="four comma-separated diagonal entries")
        group.add_argument("--gram", help="full symmetric Gram matrix as JSON rows of literals")
        p.add_argument("--json", action="store_true", dest="as_json")

    p_verify = sub.add_parser("verify", help="verify the current-algebra form of M")
    add_form_args(p_verify)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--trials", type=int, default=32,
                          help="attempts at a random nondegenerate subspace")

    p_classify = sub.add_parser("classify", help="emit a decomposition certificate")
    add_form_args(p_classify)

    p_table = sub.add_parser("table", help="print the multiplication table")
    add_form_args(p_table)

    p_oracle = sub.add_parser("oracle", help="enumerate all ideals over F_q")
    p_oracle.add_argument("--field", help="F2, F3 or F5")
    p_oracle.add_argument("--q", type=int, choices=(2, 3, 5),
                          help="shorthand for --field F<q>")
    group = p_oracle.add_mutually_exclusive_group(required=True)
    group.add_argument("--form", help="four comma-separated diagonal entries")
    group.add_argument("--gram", help="full symmetric Gram matrix as JSON rows of literals")
    p_oracle.add_argument("--json", action="store_true", dest="as_json")

    p_counter = sub.add_parser(
        "counterexample",
        help="simplicity lost after inseparable base change over F_p(t)",
    )
    p_counter.add_argument("--p", type=int, choices=(2, 3), default=2)
    p_counter.add_argument("--json", action="store_true", dest="as_json")
    return parser


def _parse_form(parser: argparse.ArgumentParser, field: FieldDescriptor,
                ns: argparse.Namespace):
    """(diagonal entries, gram matrix or None); literal problems exit 2.

    Mathematical defects of a Gram matrix (asymmetry, degeneracy) are left
    for execute(), which maps them to exit code 1 like any module error.
    """
    if ns.form is not None:
        parts = [p.strip() for p in ns.form.split(",")]
        if len(parts) != 4:
            parser.error("--form expects exactly four comma-separated entries")
        try:
            entries = tuple(parse_scalar(p, field) for p in parts)
        except (ParseError, ValueError) as exc:
            parser.error(f"bad --form entry: {exc}")
        return entries, None
    try:
        grid = json.loads(ns.gram)
        if not isinstance(grid, list) or len(grid) != 4:
            raise ParseError("expected four rows")
        rows = [[parse_scalar(str(x), field) for x in row] for row in grid]
        gram = Matrix(field, rows)
        if gram.ncols != 4:
            raise ParseError("expected four columns per row")
    except (ParseError, ValueError) as exc:
        parser.error(f"bad --gram matrix: {exc}")
    return None, gram


def parse_args(argv: Sequence[str]) -> CommandSpec:
    """Validated command spec; exits with code 2 on usage errors."""
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command == "counterexample":
        return CommandSpec("counterexample", p=ns.p, as_json=ns.as_json)
    if ns.command == "oracle":
        if (ns.field is None) == (ns.q is None):
            parser.error("oracle needs exactly one of --field or --q")
        literal = ns.field if ns.field is not None else f"F{ns.q}"
        try:
            field = parse_field(literal)
        except (ParseError, ValueError) as exc:
            parser.error(f"bad field literal: {exc}")
        if field.kind != KIND_PRIME or field.p not in (2, 3, 5):
            parser.error("oracle requires a finite prime field F2, F3 or F5")
        entries, gram = _parse_form(parser, field, ns)
        return CommandSpec("oracle", field=field, entries=entries, gram=gram,
                           as_json=ns.as_json)
    try:
        field = parse_field(ns.field)
    except (ParseError, ValueError) as exc:
        parser.error(f"bad field literal: {exc}")
    entries, gram = _parse_form(parser, field, ns)
    seed = 0
    trials = 32
    if ns.command == "verify":
        trials = ns.trials
        if ns.seed is not None:
            seed = ns.seed
        else:
            seed = int(os.environ.get(SEED_ENV, "0"))
    return CommandSpec(ns.command, field=field, entries=entries, gram=gram,
                       as_json=ns.as_json, seed=seed, trials=trials)


# ---------------------------------------------------------------------------
# Rendering.
# ---------------------------------------------------------------------------


def _form_header(spec: CommandSpec, disc: FieldElement) -> list[str]:
    entries = ", ".join(render_scalar(x) for x in spec.entries)
    lines = [f"field {render_field(spec.field)}, form diag({entries}), D = {render_scalar(disc)}"]
    if spec.from_gram:
        lines.append("(diagonal entries obtained by orthogonalizing the given Gram matrix)")
    return lines


def _check_lines(checks) -> list[str]:
    return [f"  check {c.name}: {'ok' if c.ok else 'FAILED'}" for c in checks]


def _render_verify(spec: CommandSpec, report: CurrentFormReport) -> str:
    lines = _form_header(spec, report.disc)
    d = report.dims
    lines.append(
        f"dims: skew-adjoint {d['skew_adjoint']}, derived {d['derived']}, "
        f"core {d['core_skew_adjoint']}, core derived {d['core_derived']}"
    )
    lines.append(f"table matches core (x) F[X]/(X^2-D): {'yes' if report.equal else 'NO'}")
    w = report.random_w
    diag = ", ".join(render_scalar(x) for x in w.diagonal)
    lines.append(
        f"random W (seed {report.seed}, attempt {w.attempts}): diagonal ({diag}), "
        f"D' = {render_scalar(w.disc)}, tables match: {'yes' if w.equal else 'NO'}"
    )
    lines += _check_lines(report.checks)
    lines.append("PASS" if report.ok else "FAIL")
    return "\n".join(lines)


def _verify_json(spec: CommandSpec, report: CurrentFormReport) -> dict:
    return {
        "command": "verify",
        "field": render_field(spec.field),
        "form": [render_scalar(x) for x in report.entries],
        "D": render_scalar(report.disc),
        "seed": report.seed,
        "dims": report.dims,
        "equal": report.equal,
        "table": tensor_to_json(report.table),
        "random_w": {
            "attempts": report.random_w.attempts,
            "subspace": subspace_to_json(report.random_w.subspace),
            "diagonal": [render_scalar(x) for x in report.random_w.diagonal],
            "D": render_scalar(report.random_w.disc),
            "equal": report.random_w.equal,
        },
        "checks": checks_to_json(report.checks),
    }


def _symbol_value(symbol: str, values: dict) -> FieldElement:
    neg = symbol.startswith("-")
    names = symbol.lstrip("-").split()
    out = None
    for name in names:
        out = values[name] if out is None else out * values[name]
    return -out if neg else out


def _expected_table(field, entries):
    a, b, c, d = entries
    values = {"a": a, "b": b, "c": c, "d": d, "D": a * b * c * d}
    zero = field.zero()
    tensor = [[[zero] * 6 for _ in range(6)] for _ in range(6)]
    index = {name: i for i, name in enumerate(BASIS_NAMES)}
    for left, right, symbol, target in TABLE_ROWS:
        i, j, k = index[left], index[right], index[target]
        coeff = _symbol_value(symbol, values)
        tensor[i][j][k] = coeff
        tensor[j][i][k] = -coeff
    return tuple(tuple(tuple(e) for e in row) for row in tensor)


def _table_payload(spec: CommandSpec):
    pipe = build_pipeline(spec.field, spec.entries)
    expected = _expected_table(spec.field, spec.entries)
    matches = tables_equal(pipe.algebra.constants, expected)
    a, b, c, d = spec.entries
    values = {"a": a, "b": b, "c": c, "d": d, "D": pipe.disc}
    entries = []
    for left, right, symbol, target in TABLE_ROWS:
        coeff = _symbol_value(symbol, values)
        entries.append((left, right, symbol, target, coeff))
    return pipe, entries, matches


def _render_table(spec: CommandSpec) -> tuple[str, bool]:
    pipe, entries, matches = _table_payload(spec)
    lines = _form_header(spec, pipe.disc)
    for pos, (left, right, symbol, target, coeff) in enumerate(entries):
        lines.append(f"[{left},{right}] = {symbol} {target} = {render_scalar(coeff)} {target}")
        if pos % 3 == 2 and pos != len(entries) - 1:
            lines.append("")
    lines.append("[f1,h1] = [f2,h2] = [f3,h3] = 0")
    lines.append(f"  check table_matches_computed: {'ok' if matches else 'FAILED'}")
    lines.append("PASS" if matches else "FAIL")
    return "\n".join(lines), matches


def _table_json(spec: CommandSpec) -> tuple[dict, bool]:
    pipe, entries, matches = _table_payload(spec)
    data = {
        "command": "table",
        "field": render_field(spec.field),
        "form": [render_scalar(x) for x in spec.entries],
        "D": render_scalar(pipe.disc),
        "entries": [
            {
                "bracket": f"[{left},{right}]",
                "symbolic": f"{symbol} {target}",
                "coefficient": render_scalar(coeff),
                "target": target,
            }
            for left, right, symbol, target, coeff in entries
        ],
        "table": tensor_to_json(pipe.algebra.constants),
        "checks": [{"name": "table_matches_computed", "ok": matches}],
    }
    return data, matches


def _render_classify(spec: CommandSpec, cert: DecompositionCertificate) -> str:
    lines = _form_header(spec, cert.disc)
    lines.append(f"case: {cert.case}")
    if cert.case == "two_simple_ideals":
        for name in ("I1", "I2"):
            rows = subspace_to_json(cert.witnesses[name])
            lines.append(f"  {name} basis: {rows}")
    elif cert.case == "semidirect_N_R":
        for name in ("N", "R"):
            rows = subspace_to_json(cert.witnesses[name])
            lines.append(f"  {name} basis: {rows}")
    else:
        lines.append(f"  extension: {render_field(cert.witnesses['extension'])}")
    lines += _check_lines(cert.checks)
    lines.append("PASS" if cert.ok else "FAIL")
    return "\n".join(lines)


def _render_oracle(spec: CommandSpec, ideals, hist) -> str:
    lines = _form_header(spec, spec.entries[0] * spec.entries[1] * spec.entries[2] * spec.entries[3])
    lines.append(f"ideals found: {len(ideals)}")
    lines.append("dimension histogram: " + ", ".join(f"{k}: {v}" for k, v in sorted(hist.items())))
    for space in ideals:
        lines.append(f"  dim {space.dim}: {subspace_to_json(space)}")
    return "\n".join(lines)


def _oracle_json(spec: CommandSpec, ideals, hist) -> dict:
    disc = spec.entries[0] * spec.entries[1] * spec.entries[2] * spec.entries[3]
    return {
        "command": "oracle",
        "field": render_field(spec.field),
        "form": [render_scalar(x) for x in spec.entries],
        "D": render_scalar(disc),
        "ideal_count": len(ideals),
        "histogram": {str(k): v for k, v in sorted(hist.items())},
        "ideals": [subspace_to_json(s) for s in ideals],
        "checks": [{"name": "enumeration_complete", "ok": True}],
    }


def _render_counterexample(report: CounterexampleReport) -> str:
    lines = [
        f"p = {report.p}: base {render_field(report.base_field)}, "
        f"extension {render_field(report.extension_field)}, s = {render_scalar(report.s)}",
        f"current algebra dimension: {report.current_dim}",
        f"radical dimension: {report.radical.dim}",
        f"abelian ideal dimension: {report.abelian_ideal.dim}",
        f"quotient perfect of dimension {report.quotient_dim}: "
        f"{'yes' if report.quotient_perfect else 'NO'}",
    ]
    lines += _check_lines(report.checks)
    lines.append("PASS" if report.ok else "FAIL")
    return "\n".join(lines)


def _counterexample_json(report: CounterexampleReport) -> dict:
    return {
        "command": "counterexample",
        "p": report.p,
        "base_field": render_field(report.base_field),
        "extension_field": render_field(report.extension_field),
        "s": render_scalar(report.s),
        "current_dim": report.current_dim,
        "radical_dim": report.radical.dim,
        "radical": subspace_to_json(report.radical),
        "abelian_ideal": subspace_to_json(report.abelian_ideal),
        "quotient_perfect": report.quotient_perfect,
        "quotient_dim": report.quotient_dim,
        "descent_checks": checks_to_json(report.descent.checks),
        "checks": checks_to_json(report.checks),
    }


# ---------------------------------------------------------------------------
# Execution.
# ---------------------------------------------------------------------------


def execute(spec: CommandSpec) -> tuple[int, str]:
    """Run one validated command; returns (exit code, rendered output)."""
    try:
        if spec.gram is not None:
            diagonal = orthogonalize(make_form(spec.gram)).diagonal
            spec = replace(spec, entries=tuple(diagonal))
        if spec.command == "verify":
            report = verify_current_form(spec.field, spec.entries,
                                         seed=spec.seed, max_tries=spec.trials)
            if spec.as_json:
                return (0 if report.ok else 1), json.dumps(_verify_json(spec, report), indent=2)
            return (0 if report.ok else 1), _render_verify(spec, report)
        if spec.command == "classify":
            cert = classify(spec.field, spec.entries)
            if spec.as_json:
                data = certificate_to_json(cert)
                data["command"] = "classify"
                return (0 if cert.ok else 1), json.dumps(data, indent=2)
            return (0 if cert.ok else 1), _render_classify(spec, cert)
        if spec.command == "table":
            if spec.as_json:
                data, matches = _table_json(spec)
                return (0 if matches else 1), json.dumps(data, indent=2)
            text, matches = _render_table(spec)
            return (0 if matches else 1), text
        if spec.command == "oracle":
            alg = algebra_from_matrices(
                spec.field, current_basis(*spec.entries).matrices()
            )
            ideals = enumerate_ideals(alg)
            hist = ideal_dimension_histogram(ideals)
            if spec.as_json:
                return 0, json.dumps(_oracle_json(spec, ideals, hist), indent=2)
            return 0, _render_oracle(spec, ideals, hist)
        if spec.command == "counterexample":
            report = inseparable_counterexample(spec.p)
            if spec.as_json:
                return (0 if report.ok else 1), json.dumps(_counterexample_json(report), indent=2)
            return (0 if report.ok else 1), _render_counterexample(report)
        raise AssertionError(f"unknown command {spec.command!r}")
    except (ValueError, RuntimeError, ZeroDivisionError) as exc:
        return 1, f"error: {exc}"


def recheck_json(data: dict) -> list[dict]:
    """Re-run the checks embedded in any emitted JSON document."""
    command = data.get("command")
    if command == "classify" or (command is None and "case" in data):
        return checks_to_json(recheck_certificate_json(data))
    if command == "verify":
        field = parse_field(data["field"])
        entries = [parse_scalar(x, field) for x in data["form"]]
        report = verify_current_form(field, entries, seed=data["seed"])
        fresh = _verify_json(CommandSpec("verify", field=field, entries=tuple(entries),
                                         seed=data["seed"]), report)
        agreement = fresh == data
        return [{"name": "reproduced_identically", "ok": agreement}] + fresh["checks"]
    if command == "table":
        field = parse_field(data["field"])
        spec = CommandSpec("table", field=field,
                           entries=tuple(parse_scalar(x, field) for x in data["form"]))
        fresh, matches = _table_json(spec)
        return [{"name": "reproduced_identically", "ok": fresh["entries"] == data["entries"]
                 and fresh["table"] == data["table"]},
                {"name": "table_matches_computed", "ok": matches}]
    if command == "oracle":
        field = parse_field(data["field"])
        spec = CommandSpec("oracle", field=field,
                           entries=tuple(parse_scalar(x, field) for x in data["form"]))
        alg = algebra_from_matrices(field, current_basis(*spec.entries).matrices())
        ideals = enumerate_ideals(alg)
        fresh = _oracle_json(spec, ideals, ideal_dimension_histogram(ideals))
        return [{"name": "reproduced_identically",
                 "ok": fresh["ideals"] == data["ideals"]
                 and fresh["histogram"] == data["histogram"]}]
    if command == "counterexample":
        report = inseparable_counterexample(data["p"])
        fresh = _counterexample_json(report)
        return [{"name": "reproduced_identically", "ok": fresh == data}] + fresh["checks"]
    raise ValueError("unrecognized document")


def main(argv: Optional[Sequence[str]] = None) -> int:
    spec = parse_args(sys.argv[1:] if argv is None else list(argv))
    code, output = execute(spec)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
