"""Command-line interface: algebra-file parsing, dispatch, reports.

The file format puts one algebra per file::

    dim 3
    basis e h f
    [e,h] = -2 e
    [e,f] = h
    [h,f] = -2 f

Lines starting with ``#`` are comments, unlisted brackets are zero,
rationals are ``p`` or ``p/q``, and a coefficient of one may be left off.
``render_algebra`` is the exact inverse of ``parse_algebra``, so files can
be regenerated from any algebra (the ``catalog`` command does exactly
that).

Exit codes: 0 for a completed computation regardless of the verdict, 1 for
any input, parse or validation problem, and 2 when ``--assert`` is given
and the computed verdict (or consistency, for crosscheck) is negative.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import IO, Sequence

from .catalog import builtin, catalog_names
from .liealg import LieAlgebra
from .linalg import Vector
from .oracle import cross_validate, find_witness, nilpotent_in_all_reps
from .semisimple import (
    is_nilpotent_element_power,
    killing_matrix,
    radical,
)


class ParseError(ValueError):
    """Input rejected, with the offending line (and column when known)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        place = ""
        if line is not None:
            place = f"line {line}: " if column is None else f"line {line}, column {column}: "
        super().__init__(place + message)
        self.line = line
        self.column = column


_NAME_PATTERN = r"[A-Za-z_][A-Za-z0-9_~.]*"
_NAME_RE = re.compile(rf"^{_NAME_PATTERN}$")
_DIM_RE = re.compile(r"^dim\s+(\d+)$")
_BRACKET_RE = re.compile(
    rf"^\[\s*({_NAME_PATTERN})\s*,\s*({_NAME_PATTERN})\s*\]\s*=\s*(.+)$")
_TERM_RE = re.compile(rf"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s+)?({_NAME_PATTERN})")


def _parse_terms(rhs: str, line_no: int, offset: int,
                 index_of: dict[str, int]) -> dict[int, Fraction]:
    expansion: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(rhs):
        match = _TERM_RE.match(rhs, pos)
        if match is None or (not first and match.group(1) is None):
            raise ParseError("expected a signed term like `2 h` or `- e`",
                             line_no, offset + pos + 1)
        sign = -1 if match.group(1) == "-" else 1
        coeff = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        name = match.group(3)
        if name not in index_of:
            raise ParseError(f"unknown basis name {name!r}", line_no, offset + match.start(3) + 1)
        k = index_of[name]
        expansion[k] = expansion.get(k, Fraction(0)) + sign * coeff
        pos = match.end()
        first = False
        while pos < len(rhs) and rhs[pos].isspace():
            pos += 1
    if first:
        raise ParseError("empty bracket right-hand side", line_no, offset + 1)
    return {k: c for k, c in expansion.items() if c}


def parse_algebra(text: str) -> LieAlgebra:
    """Read an algebra file; raises ParseError with line numbers on bad input."""
    dim: int | None = None
    names: tuple[str, ...] | None = None
    index_of: dict[str, int] = {}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim"):
            if dim is not None:
                raise ParseError("duplicate dim line", line_no)
            match = _DIM_RE.match(line)
            if match is None:
                raise ParseError("dim line must be `dim <n>`", line_no)
            dim = int(match.group(1))
            continue
        if line.startswith("basis"):
            if dim is None:
                raise ParseError("basis line before dim line", line_no)
            if names is not None:
                raise ParseError("duplicate basis line", line_no)
            listed = tuple(line.split()[1:])
            if len(listed) != dim:
                raise ParseError(f"{len(listed)} basis names for dim {dim}", line_no)
            for name in listed:
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad basis name {name!r}", line_no)
                if name in index_of:
                    raise ParseError(f"duplicate basis name {name!r}", line_no)
                index_of[name] = len(index_of)
            names = listed
            continue
        if line.startswith("["):
            if names is None:
                raise ParseError("bracket line before basis line", line_no)
            match = _BRACKET_RE.match(line)
            if match is None:
                raise ParseError("bracket line must be `[a,b] = <terms>`", line_no)
            left, right = match.group(1), match.group(2)
            for name in (left, right):
                if name not in index_of:
                    raise ParseError(f"unknown basis name {name!r}", line_no)
            i, j = index_of[left], index_of[right]
            if i == j:
                raise ParseError(f"diagonal bracket [{left},{left}] is identically zero",
                                 line_no)
            expansion = _parse_terms(match.group(3), line_no, match.start(3), index_of)
            key = (i, j) if i < j else (j, i)
            if key in table:
                raise ParseError(f"duplicate bracket line for pair ({left}, {right})", line_no)
            table[key] = expansion if i < j else {k: -c for k, c in expansion.items()}
            continue
        raise ParseError(f"unrecognized line {line!r}", line_no)
    if dim is None:
        raise ParseError("missing dim line")
    if names is None:
        if dim == 0:
            names = ()
        else:
            raise ParseError("missing basis line")
    return LieAlgebra(dim, names, table)


def parse_element(text: str, dim: int) -> Vector:
    """Comma-separated exact rationals, one per basis element."""
    stripped = text.strip()
    if stripped == "" and dim == 0:
        return ()
    parts = stripped.split(",")
    if len(parts) != dim:
        raise ParseError(f"element has {len(parts)} coordinates, expected {dim}")
    coords = []
    for part in parts:
        try:
            coords.append(Fraction(part.strip()))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {part.strip()!r}") from None
    return tuple(coords)


def _render_terms(expansion: dict[int, Fraction], names: Sequence[str]) -> str:
    parts = []
    for k in sorted(expansion):
        c = expansion[k]
        magnitude = abs(c)
        body = names[k] if magnitude == 1 else f"{magnitude} {names[k]}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def render_algebra(algebra: LieAlgebra) -> str:
    """Serialize an algebra so that parse_algebra reads back an equal value."""
    lines = [f"dim {algebra.dim}"]
    if algebra.dim:
        lines.append("basis " + " ".join(algebra.basis_names))
    for (i, j) in sorted(algebra.table):
        lhs = f"[{algebra.basis_names[i]},{algebra.basis_names[j]}]"
        lines.append(f"{lhs} = {_render_terms(algebra.table[(i, j)], algebra.basis_names)}")
    return "\n".join(lines) + "\n"


# --- reports -----------------------------------------------------------------

def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    return value


def _payload_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "outcomes":
            lines.append(f"corpus ({len(value)} representations):")
            for row in value:
                lines.append(
                    f"  {row['label']}  dim={row['dim']}  nilpotent={_fmt(row['nilpotent'])}")
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}:")
            for row in value:
                lines.append("  " + " ".join(str(_fmt(x)) for x in row))
        elif isinstance(value, list):
            lines.append(f"{key}: " + " ".join(str(_fmt(x)) for x in value))
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines) + "\n"


def _emit(payload: dict, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif payload.get("command") == "catalog" and "file" in payload:
        out.write(payload["file"])
    else:
        out.write(_payload_text(payload))


def _vector_strings(vector) -> list[str]:
    return [str(c) for c in vector]


def _matrix_strings(matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in matrix.entries]


def _load(path: str) -> LieAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_algebra(text)


def _validated(path: str) -> LieAlgebra:
    algebra = _load(path)
    violations = algebra.jacobi_violations()
    if violations:
        raise ParseError(f"{path}: " + "; ".join(violations))
    return algebra


def _cmd_validate(args, out) -> int:
    algebra = _load(args.file)
    violations = algebra.jacobi_violations()
    payload = {
        "command": "validate",
        "file": args.file,
        "dim": algebra.dim,
        "valid": not violations,
        "violations": violations,
    }
    _emit(payload, args.format, out)
    return 0 if not violations else 1


def _cmd_info(args, out) -> int:
    algebra = _validated(args.file)
    payload = {
        "command": "info",
        "file": args.file,
        "dim": algebra.dim,
        "basis": list(algebra.basis_names),
        "derived_dim": algebra.derived_subalgebra().dim,
        "radical_dim": radical(algebra).dim,
        "center_dim": algebra.center().dim,
        "solvable": algebra.is_solvable(),
        "nilpotent": algebra.is_nilpotent_algebra(),
        "semisimple": radical(algebra).is_zero(),
        "derived_series_dims": [s.dim for s in algebra.derived_series()],
        "lower_central_dims": [s.dim for s in algebra.lower_central_series()],
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_radical(args, out) -> int:
    algebra = _validated(args.file)
    rad = radical(algebra)
    payload = {
        "command": "radical",
        "file": args.file,
        "dim": rad.dim,
        "basis_vectors": [_vector_strings(v) for v in rad.basis],
        "semisimple": rad.is_zero(),
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_killing(args, out) -> int:
    algebra = _validated(args.file)
    form = killing_matrix(algebra)
    payload = {
        "command": "killing",
        "file": args.file,
        "gram": _matrix_strings(form.gram),
        "nondegenerate": form.is_nondegenerate(),
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_nilpotent(args, out) -> int:
    algebra = _validated(args.file)
    element = parse_element(args.element, algebra.dim)
    verdict = is_nilpotent_element_power(algebra, element)
    payload = {
        "command": "nilpotent",
        "file": args.file,
        "element": _vector_strings(element),
        "ad_nilpotent": verdict,
    }
    _emit(payload, args.format, out)
    if args.assert_ and not verdict:
        return 2
    return 0


def _witness_payload(witness, acts_nilpotently_flag) -> dict:
    return {
        "witness_case": witness.case_tag,
        "witness_label": witness.rep.label,
        "witness_dim": witness.rep.dim_v,
        "witness_exponent": witness.exponent_checked,
        "witness_acts_nilpotently": acts_nilpotently_flag,
    }


def _cmd_oracle(args, out) -> int:
    algebra = _validated(args.file)
    element = parse_element(args.element, algebra.dim)
    verdict = nilpotent_in_all_reps(algebra, element)
    payload = {
        "command": "oracle",
        "file": args.file,
        "element": _vector_strings(element),
        "answer": verdict.answer,
        "in_derived": verdict.in_derived,
        "image_nilpotent": verdict.image_nilpotent,
        "radical_dim": verdict.radical_dim,
        "derived_dim": verdict.derived_dim,
    }
    if args.witness and not verdict.answer:
        witness = find_witness(algebra, element)
        payload.update(_witness_payload(witness, False))
    _emit(payload, args.format, out)
    if args.assert_ and not verdict.answer:
        return 2
    return 0


def _cmd_crosscheck(args, out) -> int:
    algebra = _validated(args.file)
    element = parse_element(args.element, algebra.dim)
    report = cross_validate(algebra, element, depth=args.depth, max_dim=args.max_dim)
    payload = {
        "command": "crosscheck",
        "file": args.file,
        "element": _vector_strings(element),
        "depth": report.depth,
        "max_dim": report.max_dim,
        "answer": report.verdict.answer,
        "consistent": report.consistent,
        "corpus_size": len(report.outcomes),
        "outcomes": [
            {"label": r.label, "dim": r.dim, "nilpotent": r.nilpotent}
            for r in report.outcomes],
    }
    if report.witness is not None:
        payload.update(_witness_payload(report.witness, report.witness_acts_nilpotently))
    _emit(payload, args.format, out)
    if args.assert_ and not report.consistent:
        return 2
    return 0


def _cmd_catalog(args, out) -> int:
    if args.name is None:
        payload = {"command": "catalog", "names": catalog_names()}
        _emit(payload, args.format, out)
        return 0
    try:
        entry = builtin(args.name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    payload = {
        "command": "catalog",
        "name": entry.name,
        "file": render_algebra(entry.algebra),
    }
    _emit(payload, args.format, out)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "info": _cmd_info,
    "radical": _cmd_radical,
    "killing": _cmd_killing,
    "nilpotent": _cmd_nilpotent,
    "oracle": _cmd_oracle,
    "crosscheck": _cmd_crosscheck,
    "catalog": _cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default text)")
    common.add_argument("--assert", dest="assert_", action="store_true",
                        help="exit 2 when the verdict or consistency is negative")

    parser = argparse.ArgumentParser(
        prog="lienil",
        description="Exact tests for nilpotent action of Lie algebra elements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", parents=[common],
                                help="check a file against the Jacobi identity")
    p_validate.add_argument("file")

    p_info = sub.add_parser("info", parents=[common], help="structural summary")
    p_info.add_argument("file")

    p_radical = sub.add_parser("radical", parents=[common], help="maximal solvable ideal")
    p_radical.add_argument("file")

    p_killing = sub.add_parser("killing", parents=[common], help="Killing form Gram matrix")
    p_killing.add_argument("file")

    p_nilpotent = sub.add_parser("nilpotent", parents=[common],
                                 help="is the adjoint of an element nilpotent")
    p_nilpotent.add_argument("file")
    p_nilpotent.add_argument("--element", required=True,
                             help="comma-separated coordinates in basis order")

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="does the element act nilpotently in every representation")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--element", required=True,
                          help="comma-separated coordinates in basis order")
    p_oracle.add_argument("--witness", action="store_true",
                          help="on a negative answer, include the witness representation")

    p_cross = sub.add_parser("crosscheck", parents=[common],
                             help="validate the verdict against a corpus of representations")
    p_cross.add_argument("file")
    p_cross.add_argument("--element", required=True,
                         help="comma-separated coordinates in basis order")
    p_cross.add_argument("--depth", type=int, default=2,
                         help="construction closure depth (default 2)")
    p_cross.add_argument("--max-dim", type=int, default=128, dest="max_dim",
                         help="drop corpus members wider than this (default 128)")

    p_catalog = sub.add_parser("catalog", parents=[common],
                               help="list built-in algebras or render one as a file")
    p_catalog.add_argument("name", nargs="?", default=None)

    return parser


def run(argv: Sequence[str] | None = None, out: IO[str] | None = None) -> int:
    """Parse arguments, run one command, write one report; returns the exit code."""
    stream = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    fmt = getattr(args, "format", "text")
    try:
        return _COMMANDS[args.command](args, stream)
    except (ParseError, ValueError) as exc:
        _emit({"command": args.command, "error": str(exc)}, fmt, stream)
        return 1


def main() -> None:
    sys.exit(run())
