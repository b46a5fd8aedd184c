"""Command-line surface: classify, counterparts, complexity, simulate,
speedup.  Every subcommand prints a single JSON document on stdout.

Exit codes: 0 success, 2 malformed input, 3 non-unitary matrix, 4 size limit
exceeded.  QCORR_TOL overrides the default tolerance; an explicit --tol flag
wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .matrixcore import (
    DEFAULT_TOL,
    NonUnitaryError,
    SizeLimitError,
    cycle_notation,
    matrix_from_json,
)
from .oracleforge import (
    BooleanFunction,
    BVInstance,
    bv_function,
    phase_oracle,
    standard_oracle,
)
from .correspondence import (
    CosetId,
    PauliGrid,
    RandomSample,
    classify_triple,
    extract_counterpart,
    makhlin_invariants,
    parse_basis_word,
    search_counterparts,
)
from . import querylab

_COSET_ORDER = list(CosetId)


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("QCORR_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise ValueError(f"QCORR_TOL is not a number: {env!r}") from None
    return DEFAULT_TOL


def _load_json_file(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _parse_bits(text: str, flag: str) -> tuple[int, ...]:
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"{flag} must be a nonempty string of 0s and 1s, got {text!r}")
    return tuple(int(ch) for ch in text)


def _cc_class_names(cc) -> list[str]:
    return [rep.name for rep in _COSET_ORDER if rep in cc]


def cmd_classify(args) -> dict:
    tol = _resolve_tol(args)
    mat = matrix_from_json(_load_json_file(args.matrix))
    if mat.shape != (4, 4):
        raise ValueError(f"classify needs a 4x4 matrix, got {mat.shape[0]}x{mat.shape[1]}")
    triple = makhlin_invariants(mat, tol)
    warnings = []
    if abs(triple.gamma_imag) >= tol:
        warnings.append(
            f"gamma has imaginary part {triple.gamma_imag:.3e} at or above tolerance"
        )
    return {
        "alpha": triple.alpha,
        "beta": triple.beta,
        "gamma": triple.gamma,
        "cc_class": _cc_class_names(classify_triple(triple, tol)),
        "warnings": warnings,
    }


def _build_oracle(args):
    if args.oracle == "standard":
        if args.function:
            f = BooleanFunction.from_json(_load_json_file(args.function))
        elif args.bv:
            f = bv_function(BVInstance.from_json(_load_json_file(args.bv)))
        else:
            raise ValueError("standard oracle needs --function or --bv")
        return standard_oracle(f)
    if args.bv is None:
        raise ValueError("phase oracle needs --bv")
    return phase_oracle(BVInstance.from_json(_load_json_file(args.bv)))


def _parse_space(text: str, m: int):
    if text.upper() == "GRID":
        return PauliGrid()
    if text.lower().startswith("random:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"random space must look like random:COUNT:SEED, got {text!r}")
        return RandomSample(int(parts[1]), int(parts[2]))
    return parse_basis_word(text, m)


def cmd_counterparts(args) -> list:
    tol = _resolve_tol(args)
    action = _build_oracle(args)
    space = _parse_space(args.bases, action.m)
    if isinstance(space, tuple):
        gp = extract_counterpart(action, space, tol)
        found = [] if gp is None else [(args.bases.upper(), space, gp)]
    else:
        found = search_counterparts(action, space, tol)
    return [
        {
            "bases": name,
            "perm": cycle_notation(gp.perm),
            "phases_present": bool(any(abs(p - 1.0) > tol for p in gp.phases)),
        }
        for name, _, gp in found
    ]


def _build_problem(name: str, n: int) -> querylab.ProblemSpec:
    if name == "parity":
        return querylab.parity_problem(n)
    return querylab.bv_problem(n)


def cmd_complexity(args) -> dict:
    tol = _resolve_tol(args)
    problem = _build_problem(args.problem, args.n)
    oracle = args.oracle
    if oracle == "OS":
        fam = querylab.family_os(problem)
    elif oracle == "OA":
        fam = querylab.family_oa(problem)
    elif oracle == "OB":
        if args.problem != "bv":
            raise ValueError("OB is only defined for the bv problem")
        fam = querylab.family_ob(problem)
    elif oracle == "OBT":
        if args.problem != "bv":
            raise ValueError("OBT is only defined for the bv problem")
        fam = querylab.family_obtilde(problem)
    elif oracle.startswith("extracted:"):
        bases = parse_basis_word(oracle.split(":", 1)[1], problem.n + 1)
        fam = querylab.family_extracted(problem, bases, tol)
        if fam is None:
            raise ValueError("extraction fails for some hypothesis under those bases")
    else:
        raise ValueError(f"unknown oracle {oracle!r}")
    depth = querylab.deterministic_query_complexity(problem, fam)
    return {"queries": None if math.isinf(depth) else int(depth)}


def cmd_simulate(args) -> dict:
    if args.algorithm == "bv":
        if args.k is None:
            raise ValueError("bv simulation needs --k")
        k = _parse_bits(args.k, "--k")
        n = args.n if args.n is not None else len(k)
        if n != len(k):
            raise ValueError(f"--n {n} does not match --k length {len(k)}")
        inst = BVInstance(n, args.k0, k)
        recovered, queries = querylab.run_bv_quantum(inst)
        return {"k": "".join(str(b) for b in recovered), "queries": queries}
    if args.function:
        f = BooleanFunction.from_json(_load_json_file(args.function))
    elif args.truth:
        truth = _parse_bits(args.truth, "--truth")
        size = len(truth)
        if size < 2 or size & (size - 1):
            raise ValueError("--truth length must be a power of two >= 2")
        f = BooleanFunction(size.bit_length() - 1, truth)
    else:
        raise ValueError("parity simulation needs --function or --truth")
    parity, queries = querylab.run_parity_quantum(f)
    return {"parity": parity, "queries": queries}


def cmd_speedup(args) -> dict:
    tol = _resolve_tol(args)
    problem = _build_problem(args.problem, args.n)
    report = querylab.speedup_report(problem, tol=tol)
    return report.as_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcorr",
        description="Classical counterparts of quantum oracles and query-complexity audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None, help="tolerance (default 1e-9, or QCORR_TOL)")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("classify", help="two-qubit invariants and counterpart class")
    p.add_argument("--matrix", required=True, help="JSON matrix file")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("counterparts", help="search basis assignments for classical counterparts")
    p.add_argument("--oracle", required=True, choices=["standard", "phase"])
    p.add_argument("--function", help="JSON truth-table file")
    p.add_argument("--bv", help="JSON promise-instance file")
    p.add_argument("--bases", required=True, help="GRID, a C/H word, or random:COUNT:SEED")
    add_common(p)
    p.set_defaults(func=cmd_counterparts)

    p = sub.add_parser("complexity", help="exact deterministic query count")
    p.add_argument("--problem", required=True, choices=["parity", "bv"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--oracle", required=True, help="OS, OA, OB, OBT, or extracted:WORD")
    add_common(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("simulate", help="run the quantum algorithm and count queries")
    p.add_argument("--algorithm", required=True, choices=["bv", "parity"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", help="hidden bit string for bv")
    p.add_argument("--k0", type=int, default=0, choices=[0, 1])
    p.add_argument("--function", help="JSON truth-table file for parity")
    p.add_argument("--truth", help="inline truth table bits for parity")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("speedup", help="full genuine-speed-up report")
    p.add_argument("--problem", required=True, choices=["parity", "bv"])
    p.add_argument("--n", required=True, type=int)
    add_common(p)
    p.set_defaults(func=cmd_speedup)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except NonUnitaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(result, indent=2 if args.pretty else None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
