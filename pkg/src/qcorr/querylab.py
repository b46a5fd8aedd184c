"""Exact deterministic query complexity, quantum query counting, and the
speed-up report comparing a quantum oracle against every classical
counterpart it induces.

Classical query model: one query submits a full m-bit input string and
observes the full m-bit output string (reversible-gate semantics); phases on
counterparts are invisible to a classical user and are ignored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrixcore import HADAMARD, SizeLimitError, apply_single_qubit
from .oracleforge import (
    BooleanFunction,
    BVInstance,
    GeneralizedPermutation,
    bv_function,
    classical_OA,
    classical_OB,
    classical_OBtilde,
    classical_OS,
    phase_oracle,
    standard_oracle,
)
from .correspondence import DEFAULT_TOL, PauliGrid, basis_word, extract_counterpart, iter_assignments

MAX_HYPOTHESES = 65536
MAX_QUERY_BITS = 12
PARITY_SEARCH_LIMIT = 2
BV_SEARCH_LIMIT = 6


@dataclass(frozen=True)
class Hypothesis:
    ident: int
    instance: BooleanFunction | BVInstance
    label: object


@dataclass(frozen=True)
class ProblemSpec:
    """A promise problem as an explicit hypothesis list with labels."""

    name: str
    n: int
    hypotheses: tuple[Hypothesis, ...]

    def labels(self) -> list:
        return [h.label for h in self.hypotheses]


def iter_boolean_functions(n: int):
    """All 2**(2**n) truth tables on n bits, in truth-table integer order."""
    size = 1 << n
    for code in range(1 << size):
        truth = tuple((code >> (size - 1 - i)) & 1 for i in range(size))
        yield BooleanFunction(n, truth)


def iter_bv_instances(n: int):
    """All 2**(n+1) promise instances (k0, k), k enumerated numerically."""
    for k0 in (0, 1):
        for k_int in range(1 << n):
            k = tuple((k_int >> (n - 1 - j)) & 1 for j in range(n))
            yield BVInstance(n, k0, k)


def parity_problem(n: int) -> ProblemSpec:
    """Decide whether a function takes the value 1 an even or odd number of
    times; hypotheses are all truth tables on n bits."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > PARITY_SEARCH_LIMIT:
        raise SizeLimitError(
            f"exact parity search is limited to n <= {PARITY_SEARCH_LIMIT} (got n={n})"
        )
    hyps = tuple(
        Hypothesis(i, f, f.parity()) for i, f in enumerate(iter_boolean_functions(n))
    )
    return ProblemSpec("parity", n, hyps)


def bv_problem(n: int) -> ProblemSpec:
    """Identify the hidden string k of a promised affine function."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > BV_SEARCH_LIMIT:
        raise SizeLimitError(
            f"exact bv search is limited to n <= {BV_SEARCH_LIMIT} (got n={n})"
        )
    hyps = tuple(
        Hypothesis(i, inst, inst.k) for i, inst in enumerate(iter_bv_instances(n))
    )
    return ProblemSpec("bv", n, hyps)


def hypothesis_function(h: Hypothesis) -> BooleanFunction:
    if isinstance(h.instance, BVInstance):
        return bv_function(h.instance)
    return h.instance


@dataclass(frozen=True)
class ClassicalOracleFamily:
    """One classical oracle per hypothesis, all over the same m bits."""

    name: str
    m: int
    maps: tuple[GeneralizedPermutation, ...]

    def __post_init__(self):
        if any(gp.m != self.m for gp in self.maps):
            raise ValueError("all family members must act on the same bit count")


def family_os(problem: ProblemSpec) -> ClassicalOracleFamily:
    maps = tuple(classical_OS(hypothesis_function(h)) for h in problem.hypotheses)
    return ClassicalOracleFamily("O_S", problem.n + 1, maps)


def family_oa(problem: ProblemSpec) -> ClassicalOracleFamily:
    maps = tuple(classical_OA(hypothesis_function(h)) for h in problem.hypotheses)
    return ClassicalOracleFamily("O_A", problem.n + 1, maps)


def family_ob(problem: ProblemSpec) -> ClassicalOracleFamily:
    maps = tuple(classical_OB(h.instance) for h in problem.hypotheses)
    return ClassicalOracleFamily("O_B", problem.n + 1, maps)


def family_obtilde(problem: ProblemSpec) -> ClassicalOracleFamily:
    maps = tuple(classical_OBtilde(h.instance) for h in problem.hypotheses)
    return ClassicalOracleFamily("O_Btilde", problem.n, maps)


def family_extracted(problem: ProblemSpec, bases, tol: float = DEFAULT_TOL):
    """Counterpart family for one basis assignment over the standard oracle,
    or None when extraction fails for any hypothesis."""
    maps = []
    for h in problem.hypotheses:
        gp = extract_counterpart(standard_oracle(hypothesis_function(h)), bases, tol)
        if gp is None:
            return None
        maps.append(gp)
    return ClassicalOracleFamily(basis_word(bases) or "general", problem.n + 1, tuple(maps))


def deterministic_query_complexity(problem: ProblemSpec, family: ClassicalOracleFamily):
    """Depth of the best adaptive deterministic decision tree.

    Minimax recursion over hypothesis sets: a set costs 0 when all labels
    agree, else 1 plus the best worst-case cost over the output partition of
    some query string.  Returns math.inf when no query sequence can separate
    the labels.
    """
    hyps = problem.hypotheses
    if len(family.maps) != len(hyps):
        raise ValueError("family size does not match hypothesis count")
    if len(hyps) > MAX_HYPOTHESES:
        raise SizeLimitError(f"hypothesis count {len(hyps)} exceeds {MAX_HYPOTHESES}")
    if family.m > MAX_QUERY_BITS:
        raise SizeLimitError(f"query width {family.m} exceeds {MAX_QUERY_BITS} bits")

    labels = [h.label for h in hyps]
    perms = [gp.perm for gp in family.maps]
    query_strings = range(1 << family.m)
    memo: dict[tuple[int, ...], float] = {}

    def depth(ids: tuple[int, ...]):
        first = labels[ids[0]]
        if all(labels[i] == first for i in ids[1:]):
            return 0
        cached = memo.get(ids)
        if cached is not None:
            return cached
        best = math.inf
        for q in query_strings:
            groups: dict[int, list[int]] = {}
            for i in ids:
                groups.setdefault(perms[i][q], []).append(i)
            if len(groups) == 1:
                continue
            worst = 0
            for out in sorted(groups):
                worst = max(worst, depth(tuple(groups[out])))
                if worst + 1 >= best:
                    break
            else:
                best = worst + 1
                if best == 1:
                    break
        memo[ids] = best
        return best

    return depth(tuple(range(len(hyps))))


def _assert_normalized(state: np.ndarray, tol: float = 1e-9):
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > tol:
        raise RuntimeError(f"statevector norm drifted to {norm}")


def run_bv_quantum(inst: BVInstance):
    """One-query identification of k: H on all qubits, the phase oracle,
    H again; the final state is exactly the basis state for k."""
    if inst.n > 16:
        raise SizeLimitError(f"bv simulation limited to n <= 16 (got n={inst.n})")
    n = inst.n
    state = np.zeros(1 << n, dtype=complex)
    state[0] = 1.0
    for j in range(n):
        state = apply_single_qubit(state, HADAMARD, j, n)
    state = phase_oracle(inst).apply(state)
    _assert_normalized(state)
    for j in range(n):
        state = apply_single_qubit(state, HADAMARD, j, n)
    _assert_normalized(state)
    idx = int(np.argmax(np.abs(state)))
    if abs(abs(state[idx]) - 1.0) > 1e-9:
        raise RuntimeError("final state is not a computational basis state")
    k = tuple((idx >> (n - 1 - j)) & 1 for j in range(n))
    return k, 1


def run_parity_quantum(f: BooleanFunction):
    """Parity in 2**(n-1) queries: one kickback step per setting of the
    trailing n-1 input bits.

    Each step places the first input qubit in the Hadamard-basis 0 state and
    the query qubit in the Hadamard-basis 1 state, queries the standard
    oracle once, and reads the first qubit back in the Hadamard basis; the
    outcome is deterministically f(0, rest) XOR f(1, rest).
    """
    if f.n > 12:
        raise SizeLimitError(f"parity simulation limited to n <= 12 (got n={f.n})")
    n = f.n
    m = n + 1
    oracle = standard_oracle(f)
    plus = np.array([1, 1], dtype=complex) / np.sqrt(2.0)
    minus = np.array([1, -1], dtype=complex) / np.sqrt(2.0)
    total = 0
    settings = 1 << (n - 1)
    for rest in range(settings):
        vec = plus
        for j in range(1, n):
            bit = (rest >> (n - 1 - j)) & 1
            e = np.zeros(2, dtype=complex)
            e[bit] = 1.0
            vec = np.kron(vec, e)
        vec = np.kron(vec, minus)
        out = oracle.apply(vec)
        _assert_normalized(out)
        out = apply_single_qubit(out, HADAMARD, 0, m)
        _assert_normalized(out)
        p_one = float(np.sum(np.abs(out[1 << n:]) ** 2))
        if min(p_one, 1.0 - p_one) > 1e-9:
            raise RuntimeError("kickback readout is not deterministic")
        total ^= int(p_one > 0.5)
    return total, settings


@dataclass(frozen=True)
class QueryReport:
    """Classical query counts for every counterpart, next to the quantum
    count, with the naive and genuine speed-up ratios."""

    problem: str
    n: int
    entries: tuple[tuple[str, float], ...]
    quantum_queries: int
    naive_speedup: float
    genuine_speedup: float

    def as_dict(self) -> dict:
        return {
            "problem": self.problem,
            "n": self.n,
            "entries": [
                {"oracle": name, "queries": None if math.isinf(d) else int(d)}
                for name, d in self.entries
            ],
            "quantum_queries": self.quantum_queries,
            "naive_speedup": self.naive_speedup,
            "genuine_speedup": self.genuine_speedup,
        }


def speedup_report(problem: ProblemSpec, space=None, tol: float = DEFAULT_TOL) -> QueryReport:
    """Audit a problem for genuine quantum advantage.

    Counts queries for the named classical oracles and for every counterpart
    family the basis search finds over the standard oracle (an assignment is
    admissible only if extraction succeeds for every hypothesis); families
    that cannot separate the labels appear with an infinite count and do not
    enter the genuine-speed-up minimum.
    """
    space = PauliGrid() if space is None else space
    first = problem.hypotheses[0]
    if problem.name == "parity":
        _, quantum = run_parity_quantum(first.instance)
        named = (("O_S", family_os(problem)), ("O_A", family_oa(problem)))
    elif problem.name == "bv":
        _, quantum = run_bv_quantum(first.instance)
        named = (("O_S", family_os(problem)), ("O_B", family_ob(problem)))
    else:
        raise ValueError(f"unknown problem {problem.name!r}")

    entries = []
    for name, fam in named:
        entries.append((name, deterministic_query_complexity(problem, fam)))
    for name, bases in iter_assignments(space, problem.n + 1):
        fam = family_extracted(problem, bases, tol)
        if fam is not None:
            entries.append((name, deterministic_query_complexity(problem, fam)))

    d_standard = entries[0][1]
    finite = [d for _, d in entries if not math.isinf(d)]
    return QueryReport(
        problem=problem.name,
        n=problem.n,
        entries=tuple(entries),
        quantum_queries=quantum,
        naive_speedup=d_standard / quantum,
        genuine_speedup=min(finite) / quantum,
    )
