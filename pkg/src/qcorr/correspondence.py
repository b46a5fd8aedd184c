"""Classical counterparts of quantum oracles under per-qubit computational
basis choices, and the complete two-qubit classification.

The extraction side conjugates an oracle by a product of single-qubit basis
changes, one column at a time, and tests whether the result is a generalized
permutation.  The classification side computes the three local invariants of
a 4x4 unitary in the magic basis and matches them against the five possible
counterpart classes, identified by the six cosets of the two-bit reversible
gates modulo pre/post bit flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np

from .matrixcore import (
    DEFAULT_TOL,
    MAGIC_Q,
    NonUnitaryError,
    SizeLimitError,
    apply_single_qubit,
    detect_from_columns,
    is_unitary,
    random_unitary,
)
from .oracleforge import OracleAction


class QubitBasis:
    """Orthonormal pair of single-qubit states used as the 0/1 encoding.

    ``matrix`` holds the pair as columns.  ``label`` is 'C' for the standard
    pair, 'H' for the Hadamard-rotated pair, '?' for anything else.
    """

    __slots__ = ("label", "matrix", "_is_standard")

    def __init__(self, label: str, matrix: np.ndarray):
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise ValueError("basis matrix must be 2x2")
        if np.max(np.abs(matrix.conj().T @ matrix - np.eye(2))) > 1e-12:
            raise ValueError("basis columns must be orthonormal within 1e-12")
        self.label = label
        self.matrix = matrix
        self._is_standard = bool(np.allclose(matrix, np.eye(2), atol=1e-15))

    def __repr__(self):
        return f"QubitBasis({self.label!r})"


CHI = QubitBasis("C", np.eye(2, dtype=complex))
ETA = QubitBasis("H", np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0))


def general_basis(matrix: np.ndarray) -> QubitBasis:
    """Wrap an arbitrary orthonormal state pair (columns)."""
    return QubitBasis("?", matrix)


def parse_basis_word(word: str, m: int | None = None) -> tuple[QubitBasis, ...]:
    """Parse a word over {C, H}, one letter per qubit, first letter = qubit 0."""
    bases = []
    for ch in word.upper():
        if ch == "C":
            bases.append(CHI)
        elif ch == "H":
            bases.append(ETA)
        else:
            raise ValueError(f"basis word may only contain C or H, got {ch!r}")
    if m is not None and len(bases) != m:
        raise ValueError(f"basis word length {len(bases)} does not match {m} qubits")
    return tuple(bases)


def basis_word(bases) -> str | None:
    """C/H word for an assignment, or None if any basis is non-standard."""
    letters = [b.label for b in bases]
    if any(ch not in ("C", "H") for ch in letters):
        return None
    return "".join(letters)


def conjugate_column(action: OracleAction, bases, col: int) -> np.ndarray:
    """One column of the basis-conjugated oracle, without materializing it.

    Builds the product state encoding ``col``, pushes it through the oracle,
    and rotates the result back into the product basis.
    """
    m = action.m
    if len(bases) != m:
        raise ValueError(f"{len(bases)} bases given for an oracle on {m} qubits")
    vec = np.ones(1, dtype=complex)
    for j, basis in enumerate(bases):
        bit = (col >> (m - 1 - j)) & 1
        vec = np.kron(vec, basis.matrix[:, bit])
    out = action.apply(vec)
    for j, basis in enumerate(bases):
        if not basis._is_standard:
            out = apply_single_qubit(out, basis.matrix.conj().T, j, m)
    return out


def extract_counterpart(action: OracleAction, bases, tol: float = DEFAULT_TOL):
    """Classical counterpart induced by a basis assignment, or None.

    The counterpart exists iff every conjugated column is a single basis
    vector up to phase; the result collects the full permutation and its
    output phases.
    """
    if len(bases) != action.m:
        raise ValueError(f"{len(bases)} bases given for an oracle on {action.m} qubits")
    columns = (conjugate_column(action, bases, col) for col in range(action.dim))
    return detect_from_columns(action.dim, columns, tol)


class PauliGrid:
    """Search space: every chi/eta assignment, enumerated lexicographically."""

    def __repr__(self):
        return "PauliGrid()"


@dataclass(frozen=True)
class RandomSample:
    """Search space: seeded random product bases (exploratory, no
    completeness claim)."""

    count: int
    seed: int


GRID_QUBIT_LIMIT = 13


def iter_assignments(space, m: int):
    """Yield (name, assignment) pairs for a search space, in a fixed order."""
    if isinstance(space, PauliGrid):
        if m > GRID_QUBIT_LIMIT:
            raise SizeLimitError(
                f"chi/eta grid on {m} qubits exceeds the {GRID_QUBIT_LIMIT}-qubit limit"
            )
        for code in range(1 << m):
            bases = tuple(ETA if (code >> (m - 1 - j)) & 1 else CHI for j in range(m))
            yield basis_word(bases), bases
    elif isinstance(space, RandomSample):
        rng = np.random.default_rng(space.seed)
        for idx in range(space.count):
            bases = tuple(general_basis(random_unitary(2, rng)) for _ in range(m))
            yield f"random:{idx}", bases
    else:
        raise ValueError(f"unknown search space {space!r}")


def search_counterparts(action: OracleAction, space, tol: float = DEFAULT_TOL):
    """All assignments in the space whose extraction succeeds.

    Returns (name, assignment, counterpart) triples in deterministic order.
    """
    found = []
    for name, bases in iter_assignments(space, action.m):
        gp = extract_counterpart(action, bases, tol)
        if gp is not None:
            found.append((name, bases, gp))
    return found


@dataclass(frozen=True)
class MakhlinTriple:
    """Local invariants of a two-qubit unitary.

    ``gamma`` is the real part of the third invariant; its imaginary part is
    kept in ``gamma_imag`` so callers can flag an inconsistency when it is
    not negligible.
    """

    alpha: float
    beta: float
    gamma: float
    gamma_imag: float = 0.0


def makhlin_invariants(u: np.ndarray, tol: float = DEFAULT_TOL) -> MakhlinTriple:
    """Invariants (alpha, beta, gamma) of a 4x4 unitary.

    alpha + i*beta = Tr(V)^2 / (16 det U) and
    gamma = (Tr(V)^2 - Tr(V^2)) / (4 det U), with V = W^T W and W the unitary
    rewritten in the magic basis.  Equal for all unitaries that differ only
    by single-qubit operations on either side, or by a global phase.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {u.shape}")
    if not is_unitary(u, tol):
        raise NonUnitaryError("matrix is not unitary within tolerance")
    w = MAGIC_Q.conj().T @ u @ MAGIC_Q
    v = w.T @ w
    tr2 = np.trace(v) ** 2
    det = np.linalg.det(u)
    g = tr2 / (16 * det)
    gamma = (tr2 - np.trace(v @ v)) / (4 * det)
    return MakhlinTriple(float(g.real), float(g.imag), float(gamma.real), float(gamma.imag))


class CosetId(Enum):
    """The six classes of 2-bit reversible gates modulo pre/post bit flips,
    named by their canonical representatives. Each value is the
    representative's action on basis indices."""

    I = (0, 1, 2, 3)
    SWAP = (0, 2, 1, 3)
    CNOT12 = (0, 1, 3, 2)
    CNOT21 = (0, 3, 2, 1)
    SWAT12 = (0, 2, 3, 1)
    SWAT21 = (0, 3, 1, 2)


# The XOR-mask subgroup {x, x^1, x^2, x^3} is the normal Klein four-group of
# S4, so left and right cosets coincide and membership is unambiguous.
_XOR_MASKS = tuple(tuple(i ^ mask for i in range(4)) for mask in range(4))


def _build_coset_table() -> dict[tuple[int, ...], CosetId]:
    table: dict[tuple[int, ...], CosetId] = {}
    for rep in CosetId:
        for mask_perm in _XOR_MASKS:
            composed = tuple(rep.value[mask_perm[i]] for i in range(4))
            if composed in table:
                raise RuntimeError("coset representatives are not disjoint")
            table[composed] = rep
    if set(table) != set(permutations(range(4))):
        raise RuntimeError("cosets do not cover all 24 permutations")
    return table


_COSET_OF = _build_coset_table()

CC_EMPTY: frozenset[CosetId] = frozenset()
CC_CNOT_FAMILY = frozenset({CosetId.I, CosetId.CNOT12, CosetId.CNOT21})
CC_SWAP_FAMILY = frozenset({CosetId.SWAP, CosetId.SWAT12, CosetId.SWAT21})
CC_IDENTITY_ONLY = frozenset({CosetId.I})
CC_SWAP_ONLY = frozenset({CosetId.SWAP})


def coset_of(p) -> CosetId:
    """Coset of a permutation of {0,1,2,3} under the XOR-mask subgroup."""
    key = tuple(int(v) for v in p)
    try:
        return _COSET_OF[key]
    except KeyError:
        raise ValueError(f"{p!r} is not a permutation of 0..3") from None


def classify_triple(t: MakhlinTriple, tol: float = DEFAULT_TOL) -> frozenset[CosetId]:
    """Counterpart class from the invariants.

    |alpha| < tol is treated as alpha == 0 before the sign tests, so a triple
    near (0, 0, 1) always resolves to the three-element class.
    """
    if abs(t.beta) >= tol:
        return CC_EMPTY
    if abs(t.alpha) < tol:
        if abs(t.gamma - 1.0) < tol:
            return CC_CNOT_FAMILY
        if abs(t.gamma + 1.0) < tol:
            return CC_SWAP_FAMILY
        return CC_EMPTY
    if t.alpha >= tol and abs(t.gamma - (1.0 + 2.0 * t.alpha)) < tol:
        return CC_IDENTITY_ONLY
    if t.alpha <= -tol and abs(t.gamma - (-1.0 + 2.0 * t.alpha)) < tol:
        return CC_SWAP_ONLY
    return CC_EMPTY


def classify_cc(u: np.ndarray, tol: float = DEFAULT_TOL) -> frozenset[CosetId]:
    """Set of counterpart cosets of a 4x4 unitary (possibly empty)."""
    return classify_triple(makhlin_invariants(u, tol), tol)
