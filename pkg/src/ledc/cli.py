"""Command-line front end and JSON file formats.

Structure files describe a locality structure:

    {"q": 13, "groups": [{"K": [1,2,3,4], "n": 5},
                         {"K": [2,3,4,5,6,7], "n": 7}]}

Positions N may be given per group; when omitted everywhere, group 1
takes positions 1..n1, group 2 the next n2, and so on. Code files add a
generator matrix to a structure:

    {"structure": {...}, "method": "cyclic", "omega": 2,
     "G": [[...], ...], "claimed_distance": 5}

Exit codes are a stable contract: 0 success, 2 input or validation
error, 3 construction precondition failure, 4 verification failure,
5 unrecoverable decode.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .code import (
    LedcCode,
    encode,
    erasure_decode,
    local_decode,
    make_code,
    verify_ledc,
)
from .construct import construct_cyclic, construct_nested, construct_random
from .errors import (
    ExhaustedAttempts,
    FieldTooSmall,
    Inconsistent,
    LedcError,
    NotPrimitive,
    PreconditionViolated,
    UnrecoverableErasurePattern,
)
from .field import PrimeField, make_field
from .linalg import make_matrix, rank, submatrix
from .locality import LocalityStructure, blocks_for_sizes, dmax_witness, make_structure

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4
EXIT_DECODE = 5

VERIFY_BOTH_BUDGET = 10**7

# ---------- file formats ----------


@dataclass(frozen=True)
class CodeFile:
    """A deserialized code file."""

    code: LedcCode
    method: str
    omega: Optional[int]
    seed: Optional[int]
    claimed_distance: int


def structure_from_dict(d: dict) -> tuple[LocalityStructure, PrimeField]:
    f = make_field(int(d["q"]))
    groups = d["groups"]
    if not isinstance(groups, list) or not groups:
        raise ValueError("'groups' must be a nonempty list")
    K = [[int(i) for i in g["K"]] for g in groups]
    sizes = [int(g["n"]) for g in groups]
    listed = [g for g in groups if "N" in g]
    if not listed:
        N = blocks_for_sizes(sizes)
    elif len(listed) == len(groups):
        N = [[int(j) for j in g["N"]] for g in groups]
        for g, ng in zip(groups, N):
            if len(ng) != int(g["n"]):
                raise ValueError(f"group declares n={g['n']} but lists {len(ng)} positions")
    else:
        raise ValueError("either every group or no group may list N explicitly")
    return make_structure(K, N), f


def structure_to_dict(s: LocalityStructure, f: PrimeField) -> dict:
    return {
        "q": f.q,
        "groups": [
            {"K": list(Kg), "n": len(Ng), "N": list(Ng)}
            for Kg, Ng in zip(s.K, s.N)
        ],
    }


def code_from_dict(d: dict) -> CodeFile:
    s, f = structure_from_dict(d["structure"])
    rows = [[int(v) for v in row] for row in d["G"]]
    for row in rows:
        for v in row:
            if not 0 <= v < f.q:
                raise ValueError(f"matrix entry {v} outside [0, {f.q})")
    code = make_code(s, f, make_matrix(f, rows))
    omega = d.get("omega")
    seed = d.get("seed")
    return CodeFile(
        code=code,
        method=str(d["method"]),
        omega=None if omega is None else int(omega),
        seed=None if seed is None else int(seed),
        claimed_distance=int(d["claimed_distance"]),
    )


def code_to_dict(cf: CodeFile) -> dict:
    out = {
        "structure": structure_to_dict(cf.code.structure, cf.code.field),
        "method": cf.method,
        "G": cf.code.G.to_rows(),
        "claimed_distance": cf.claimed_distance,
    }
    if cf.omega is not None:
        out["omega"] = cf.omega
    if cf.seed is not None:
        out["seed"] = cf.seed
    return out


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _fail_input(exc: Exception) -> int:
    print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_INPUT


_INPUT_ERRORS = (LedcError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError)


# ---------- vector parsing ----------


def _parse_vector(text: str, q: int, expected: int, allow_erasure: bool) -> list:
    tokens = [tok.strip() for tok in text.split(",")] if text.strip() else []
    if len(tokens) != expected:
        raise ValueError(f"expected {expected} comma-separated values, got {len(tokens)}")
    out = []
    for tok in tokens:
        if allow_erasure and tok == "?":
            out.append(None)
            continue
        v = int(tok)
        if not 0 <= v < q:
            raise ValueError(f"value {v} outside [0, {q})")
        out.append(v)
    return out


# ---------- commands ----------


def cmd_bound(args: argparse.Namespace) -> int:
    try:
        s, _ = structure_from_dict(_load_json(args.structure_file))
        witness = dmax_witness(s)
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)
    print(f"dmax={witness.dmax}")
    print(f"blocks={','.join(map(str, witness.blocks))}")
    print(f"data={','.join(map(str, witness.data))}")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        s, f = structure_from_dict(_load_json(args.structure_file))
        if args.q is not None:
            f = make_field(args.q)
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)
    try:
        omega = None
        seed = None
        if args.method == "nested":
            code = construct_nested(s, f)
        elif args.method == "cyclic":
            code, ingredients = construct_cyclic(s, f, args.omega)
            if ingredients is not None:
                omega = ingredients.omega
        else:
            seed = args.seed if args.seed is not None else 0
            code = construct_random(s, f, seed, args.max_attempts)
    except (PreconditionViolated, FieldTooSmall, NotPrimitive, ExhaustedAttempts) as exc:
        print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    cf = CodeFile(
        code=code,
        method=args.method,
        omega=omega,
        seed=seed,
        claimed_distance=code.meta["claimed_distance"],
    )
    payload = json.dumps(code_to_dict(cf), indent=2)
    if args.out == "-":
        print(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        print(f"wrote={args.out}")
        print(f"claimed_distance={cf.claimed_distance}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        cf = code_from_dict(_load_json(args.code_file))
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)
    q, k = cf.code.field.q, cf.code.structure.k
    method = args.distance_method
    if method is None:
        method = "both" if q**k <= VERIFY_BOTH_BUDGET else "rank"
    report = verify_ledc(cf.code, distance_method=method)
    print(f"support={'ok' if report.support_ok else 'FAIL'}")
    for g, ok in enumerate(report.local_mds, start=1):
        print(f"local_mds_{g}={'ok' if ok else 'FAIL'}")
    print(f"distance={report.distance}")
    print(f"claimed={cf.claimed_distance}")
    print(f"dmax={report.dmax}")
    print(f"optimal={'true' if report.optimal else 'false'}")
    passed = (
        report.support_ok
        and report.local_mds_ok
        and report.distance == cf.claimed_distance
        and report.optimal
    )
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_encode(args: argparse.Namespace) -> int:
    try:
        cf = code_from_dict(_load_json(args.code_file))
        x = _parse_vector(args.data, cf.code.field.q, cf.code.structure.k, False)
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)
    word = encode(cf.code, x)
    print(f"codeword={','.join(map(str, word))}")
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    try:
        cf = code_from_dict(_load_json(args.code_file))
        received = _parse_vector(args.received, cf.code.field.q, cf.code.structure.n, True)
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)
    try:
        x = erasure_decode(cf.code, received)
    except (UnrecoverableErasurePattern, Inconsistent) as exc:
        print(f"error={type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DECODE
    print(f"data={','.join(map(str, x))}")
    return EXIT_OK


def cmd_demo(args: argparse.Namespace) -> int:
    """Walk one failure scenario: local-only repair, then cooperation."""
    try:
        cf = code_from_dict(_load_json(args.code_file))
        code = cf.code
        s, f = code.structure, code.field
        failed: list[int] = []
        if args.fail.strip():
            failed = [int(tok) for tok in args.fail.split(",")]
        for p in failed:
            if not 1 <= p <= s.n:
                raise ValueError(f"position {p} outside 1..{s.n}")
        if len(set(failed)) != len(failed):
            raise ValueError("failed positions must be distinct")
    except _INPUT_ERRORS as exc:
        return _fail_input(exc)

    failed_set = set(failed)
    x = [(i % f.q) for i in range(1, s.k + 1)]
    word = encode(code, x)
    print(f"data symbols: {','.join(map(str, x))}")
    print(f"failed positions: {','.join(map(str, failed)) if failed else 'none'}")
    all_local = True
    for g in range(1, s.m + 1):
        Ng = s.N[g - 1]
        Kg = s.K[g - 1]
        surviving = [p for p in Ng if p not in failed_set]
        lost = len(Ng) - len(surviving)
        ok = len(surviving) >= len(Kg) and rank(
            submatrix(code.G, [i - 1 for i in Kg], [p - 1 for p in surviving])
        ) == len(Kg)
        if ok:
            recovered = local_decode(code, g, [(p, word[p - 1]) for p in surviving])
            ok = all(recovered[i] == x[i - 1] for i in Kg)
        print(
            f"group {g}: lost {lost} of {len(Ng)} positions; "
            f"local recovery {'succeeds' if ok else 'FAILS, needs cooperation'}"
        )
        print(f"group{g}_local={'ok' if ok else 'fail'}")
        all_local = all_local and ok
    received = [None if (j + 1) in failed_set else word[j] for j in range(s.n)]
    try:
        recovered_x = erasure_decode(code, received)
        global_ok = recovered_x == x
    except UnrecoverableErasurePattern:
        global_ok = False
    print(
        "global recovery "
        + ("succeeds: all data restored by cooperation" if global_ok else "FAILS: too many erasures")
    )
    print(f"global={'ok' if global_ok else 'fail'}")
    if not failed:
        print("no failures: every group decodes locally")
    return EXIT_OK


# ---------- argument parsing ----------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ledc",
        description="Distance bounds, constructions and verification for "
        "codes with locally encodable and decodable groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="optimal distance bound for a structure")
    p.add_argument("structure_file")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build a generator matrix")
    p.add_argument("structure_file")
    p.add_argument("--method", required=True, choices=["nested", "cyclic", "random"])
    p.add_argument("--q", type=int, default=None, help="override the field order")
    p.add_argument("--omega", type=int, default=None, help="primitive element (cyclic)")
    p.add_argument("--seed", type=int, default=None, help="random stream seed")
    p.add_argument("--max-attempts", type=int, default=20)
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-check a code file end to end")
    p.add_argument("code_file")
    p.add_argument(
        "--distance-method",
        choices=["exhaustive", "rank", "both"],
        default=None,
        help="default: both within budget, rank beyond it",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode a data vector")
    p.add_argument("code_file")
    p.add_argument("--data", required=True, help="comma-separated data symbols")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a word with erasures")
    p.add_argument("code_file")
    p.add_argument("--received", required=True, help="comma-separated, ? = erased")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("demo", help="show local vs cooperative recovery")
    p.add_argument("code_file")
    p.add_argument("--fail", default="", help="comma-separated failed positions")
    p.set_defaults(func=cmd_demo)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
