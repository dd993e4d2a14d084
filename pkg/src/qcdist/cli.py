"""Command-line front end: bound, codeword, expand, exact, validate.

Machine-readable JSON goes to stdout (and optionally a file); short
human summaries go to stderr.  Every JSON document embeds a manifest
with input digests, flags, seed, tool version and wall time, so a run
can be reproduced from its own output.

Exit codes: 0 success, 1 input error, 2 vacuous or degenerate result,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import EXHAUSTIVE, SAMPLED, BoundQuery, theorem1_bound, theorem2_bound
from .codeword import (
    CheckLevel,
    RemovalRejected,
    check_removal,
    lemma1_codeword,
    lemma2_codeword,
    verify_codeword,
)
from .exact import DEFAULT_DIMENSION_CAP, DimensionCapExceeded, exact_min_distance
from .expansion import (
    expand,
    load_shift_assignment,
    to_scalar,
    validate_first_stage,
)
from .matrix import (
    BinaryMatrix,
    MatrixFormatError,
    PunctureSet,
    load_poly_matrix,
    load_weight_matrix,
    save_poly_matrix,
    save_weight_matrix,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2
EXIT_RESOURCE = 3


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _manifest(command: str, inputs: dict[str, str], flags: dict, seed, started: float) -> dict:
    return {
        "command": command,
        "inputs": {name: _digest(path) for name, path in inputs.items() if path},
        "flags": flags,
        "seed": seed,
        "version": __version__,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }


def _emit(document: dict, json_path: str | None) -> None:
    text = json.dumps(document, indent=2, sort_keys=True)
    print(text)
    if json_path:
        Path(json_path).write_text(text + "\n", encoding="utf-8")


def _parse_puncture(text: str | None) -> PunctureSet:
    if not text:
        return PunctureSet(())
    return PunctureSet.from_text(text)


def cmd_bound(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    weights = load_weight_matrix(args.matrix)
    puncture = _parse_puncture(args.puncture)
    max_remove = args.max_remove
    if args.theorem == 1:
        if max_remove not in (None, 0):
            raise ValueError("--theorem 1 admits no row removal; drop --max-remove")
        max_remove = 0
    elif max_remove is None:
        max_remove = 2
    query = BoundQuery(
        weights,
        puncture,
        max_removed_rows=max_remove,
        mode=SAMPLED if args.mode == "sample" else EXHAUSTIVE,
        samples=args.samples,
        seed=args.seed,
    )
    bound = theorem1_bound if args.theorem == 1 else theorem2_bound
    report = bound(query, workers=args.workers)
    document = {
        "manifest": _manifest(
            "bound",
            {"matrix": args.matrix},
            {
                "puncture": puncture.to_text(),
                "theorem": args.theorem,
                "max_remove": max_remove,
                "mode": args.mode,
                "samples": args.samples,
                "workers": args.workers,
            },
            args.seed,
            started,
        ),
        "bound": report.to_json_dict(),
    }
    _emit(document, args.json)
    if report.bound_value is None:
        print("bound: none (every candidate vanished)", file=sys.stderr)
        return EXIT_DEGENERATE
    print(
        f"bound {report.bound_value} at S={list(report.witness_s)} T={list(report.witness_t)}"
        f" after {report.candidates_examined} candidates",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_codeword(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    matrix = load_poly_matrix(args.matrix)
    puncture = _parse_puncture(args.puncture)
    level = CheckLevel(args.level)
    removed = tuple(int(r) for r in args.rows_removed.split(",")) if args.rows_removed else ()
    if args.columns:
        columns = tuple(int(c) for c in args.columns.split(","))
    else:
        # Discover a witness from the weight-level bound search.
        query = BoundQuery(
            matrix.weight_matrix(),
            puncture,
            max_removed_rows=args.max_remove if args.max_remove is not None else 2,
        )
        report = theorem2_bound(query)
        if report.bound_value is None:
            raise ValueError("no usable bound witness; give --columns explicitly")
        columns, removed = report.witness_s, report.witness_t
    if removed:
        cert = check_removal(matrix, columns, removed, level)
        word = lemma2_codeword(matrix, puncture, cert)
    else:
        word = lemma1_codeword(matrix, puncture, columns)
    verified = verify_codeword(matrix, word)
    document = {
        "manifest": _manifest(
            "codeword",
            {"matrix": args.matrix},
            {
                "columns": list(columns),
                "rows_removed": list(removed),
                "puncture": puncture.to_text(),
                "level": level.value,
            },
            None,
            started,
        ),
        "codeword": {**word.to_json_dict(), "verified": verified},
    }
    _emit(document, args.json)
    if word.is_zero:
        print("zero codeword (vacuous construction)", file=sys.stderr)
        return EXIT_DEGENERATE
    if word.punctured_only:
        print("codeword weight sits entirely on punctured columns", file=sys.stderr)
        return EXIT_DEGENERATE
    print(
        f"codeword of transmitted weight {word.transmitted_weight}, verified={verified}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    proto = load_weight_matrix(args.proto)
    shifts = load_shift_assignment(args.shifts)
    n = args.n if args.n is not None else shifts.n
    expanded = expand(proto, shifts, n)
    stage = 1
    if args.stage2_shifts:
        if args.n2 is None:
            raise ValueError("--stage2-shifts needs --n2")
        mid = to_scalar(expanded).as_weight_matrix()
        if not mid.is_type_one:
            raise ValueError("stage-1 expansion did not produce a type-I matrix")
        stage2 = load_shift_assignment(args.stage2_shifts)
        expanded = expand(mid, stage2, args.n2)
        stage = 2
    out_path = Path(args.out)
    if args.scalar:
        scalar = to_scalar(expanded)
        save_weight_matrix(scalar.as_weight_matrix(), out_path)
        shape = [scalar.m, scalar.n]
        kind = "binary (weight-matrix file)"
    else:
        save_poly_matrix(expanded, out_path)
        shape = [expanded.j, expanded.l]
        kind = "polynomial"
    document = {
        "manifest": _manifest(
            "expand",
            {
                "proto": args.proto,
                "shifts": args.shifts,
                "stage2_shifts": args.stage2_shifts,
            },
            {"n": n, "n2": args.n2, "scalar": bool(args.scalar), "stages": stage},
            None,
            started,
        ),
        "expanded": {
            "out": str(out_path),
            "out_sha256": _digest(str(out_path)),
            "kind": kind,
            "shape": shape,
            "modulus": expanded.n,
        },
    }
    _emit(document, args.json)
    print(f"wrote {kind} matrix {shape[0]} x {shape[1]} to {out_path}", file=sys.stderr)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    matrix = load_poly_matrix(args.matrix)
    puncture = _parse_puncture(args.puncture)
    result = exact_min_distance(matrix, puncture, max_dimension=args.max_dim)
    document = {
        "manifest": _manifest(
            "exact",
            {"matrix": args.matrix},
            {"puncture": puncture.to_text(), "max_dim": args.max_dim},
            None,
            started,
        ),
        "exact": result.to_json_dict(),
    }
    _emit(document, args.json)
    if result.min_distance is None:
        reason = (
            "puncturing loses dimensionality"
            if not result.dimensionality_preserved
            else "code has dimension 0"
        )
        print(f"distance undefined: {reason}", file=sys.stderr)
        return EXIT_DEGENERATE
    print(
        f"d = {result.min_distance} (k = {result.dimension_k}, "
        f"{result.codewords_enumerated} codewords)",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    stage1 = load_weight_matrix(args.stage1)
    proto = load_weight_matrix(args.proto)
    binary = BinaryMatrix.from_weight_matrix(stage1)
    report = validate_first_stage(binary, proto, args.n1)
    document = {
        "manifest": _manifest(
            "validate",
            {"stage1": args.stage1, "proto": args.proto},
            {"n1": args.n1},
            None,
            started,
        ),
        "validation": report.to_json_dict(),
    }
    _emit(document, args.json)
    if not report.ok:
        for issue in report.issues:
            print(
                f"block ({issue.block_row}, {issue.block_col}): {issue.reason}",
                file=sys.stderr,
            )
        return EXIT_DEGENERATE
    print("all blocks are circulant with the protomatrix weights", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcdist",
        description="Minimum-distance upper bounds and oracles for quasi-cyclic LDPC codes",
    )
    parser.add_argument("--version", action="version", version=f"qcdist {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="permanent-based distance upper bound on a weight matrix")
    p.add_argument("--matrix", required=True, help="weight-matrix file (J L header)")
    p.add_argument("--puncture", default="", help="comma-separated punctured columns")
    p.add_argument("--theorem", type=int, choices=(1, 2), default=2)
    p.add_argument("--max-remove", type=int, default=None, help="row removals allowed (theorem 2)")
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("codeword", help="construct an explicit codeword from permanents")
    p.add_argument("--matrix", required=True, help="polynomial-matrix file (N J L header)")
    p.add_argument("--columns", default="", help="column subset S; omitted = use bound witness")
    p.add_argument("--rows-removed", default="", help="row subset T")
    p.add_argument("--puncture", default="")
    p.add_argument("--level", choices=("weight", "poly"), default="weight")
    p.add_argument("--max-remove", type=int, default=None, help="for witness discovery")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_codeword)

    p = sub.add_parser("expand", help="cyclically expand a protomatrix")
    p.add_argument("--proto", required=True)
    p.add_argument("--shifts", required=True)
    p.add_argument("--n", type=int, default=None, help="expansion factor (defaults to shift file)")
    p.add_argument("--stage2-shifts", default=None)
    p.add_argument("--n2", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--scalar", action="store_true", help="write the scalar matrix instead")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("exact", help="brute-force minimum distance of a small code")
    p.add_argument("--matrix", required=True, help="polynomial-matrix file (N J L header)")
    p.add_argument("--puncture", default="")
    p.add_argument("--max-dim", type=int, default=DEFAULT_DIMENSION_CAP)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("validate", help="check a stage-1 expansion against its protomatrix")
    p.add_argument("--stage1", required=True, help="0/1 weight-matrix file")
    p.add_argument("--proto", required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MatrixFormatError, RemovalRejected, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
