"""Dense complex linear algebra for small multi-qubit unitaries.

Conventions:
  - All matrices are complex128 ndarrays, row-major, dimension a power of two.
  - Bit/qubit ordering is big-endian: qubit 0 is the *most significant* bit of
    a basis index, so ``tensor(a, b)`` puts ``a`` on the high-order bits.
  - A generalized permutation is a unitary with exactly one nonzero,
    unit-modulus entry per row and column.  It factors as ``diag(phases) @ P``
    where ``P`` maps basis index ``j`` to ``perm[j]``; phases are therefore
    indexed by the *output* string.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9


class NonUnitaryError(ValueError):
    """Input matrix fails the unitarity check required by an operation."""


class SizeLimitError(ValueError):
    """A requested computation exceeds a documented hard size limit."""


_SQRT2_INV = 1.0 / np.sqrt(2.0)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV
CNOT12 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CNOT21 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)

SWAT12 = SWAP @ CNOT12
SWAT21 = SWAP @ CNOT21

MAGIC_Q = _SQRT2_INV * np.array(
    [[1, 0, 0, 1j], [0, 1j, 1, 0], [0, 1j, -1, 0], [1, 0, 0, -1j]], dtype=complex
)


def identity(m: int = 1) -> np.ndarray:
    """Identity on m qubits (dimension 2**m)."""
    if m < 1:
        raise ValueError(f"need at least one qubit, got m={m}")
    return np.eye(1 << m, dtype=complex)


def sigma_x_phased(theta: float, phi: float) -> np.ndarray:
    """Bit flip with free phases: antidiagonal (e^{i*theta}, e^{i*phi})."""
    return np.array([[0, np.exp(1j * theta)], [np.exp(1j * phi), 0]], dtype=complex)


_FIXED_GATES = {
    "sigma_x": SIGMA_X,
    "sigma_z": SIGMA_Z,
    "hadamard": HADAMARD,
    "cnot12": CNOT12,
    "cnot21": CNOT21,
    "swap": SWAP,
    "swat12": SWAT12,
    "swat21": SWAT21,
    "magic_q": MAGIC_Q,
    "cz": CZ,
}


def gate(name: str, *args: float) -> np.ndarray:
    """Look up a named gate matrix.

    Fixed gates take no arguments; ``identity`` takes the qubit count and
    ``sigma_x_phased`` takes the two phase angles.
    """
    key = name.lower()
    if key == "identity":
        return identity(int(args[0]) if args else 1)
    if key == "sigma_x_phased":
        return sigma_x_phased(*args)
    try:
        return _FIXED_GATES[key].copy()
    except KeyError:
        raise ValueError(f"unknown gate {name!r}") from None


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with ``a`` as the high-order block index."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("tensor requires square matrices")
    return np.kron(a, b)


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def is_unitary(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Max-entry norm of A†A − I below tol."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    delta = a.conj().T @ a - np.eye(a.shape[0])
    return bool(np.max(np.abs(delta)) < tol)


def num_bits(dim: int) -> int:
    """Bit width m with dim == 2**m; rejects non-powers of two."""
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return dim.bit_length() - 1


def apply_single_qubit(state: np.ndarray, u2: np.ndarray, qubit: int, m: int) -> np.ndarray:
    """Apply a 2x2 matrix to one qubit of an m-qubit statevector.

    ``qubit`` counts from 0 at the most significant bit.
    """
    psi = np.asarray(state, dtype=complex).reshape((2,) * m)
    psi = np.moveaxis(psi, qubit, 0)
    out = np.tensordot(np.asarray(u2, dtype=complex), psi, axes=([1], [0]))
    return np.moveaxis(out, 0, qubit).reshape(-1)


@dataclass(frozen=True)
class GeneralizedPermutation:
    """Permutation of m-bit strings with a unit-modulus phase per output string.

    The matrix form is ``diag(phases) @ P`` with ``P[perm[j], j] = 1``, i.e.
    basis state ``j`` maps to ``phases[perm[j]] * |perm[j]>``.
    """

    m: int
    perm: tuple[int, ...]
    phases: tuple[complex, ...]

    def __post_init__(self):
        dim = 1 << self.m
        if len(self.perm) != dim or len(self.phases) != dim:
            raise ValueError(f"perm/phases length must be 2**m = {dim}")
        if sorted(self.perm) != list(range(dim)):
            raise ValueError("perm is not a bijection on the m-bit strings")
        mags = np.abs(np.asarray(self.phases))
        if np.max(np.abs(mags - 1.0)) > DEFAULT_TOL:
            raise ValueError("phases must all have unit modulus")

    @property
    def dim(self) -> int:
        return 1 << self.m

    def as_matrix(self) -> np.ndarray:
        mat = np.zeros((self.dim, self.dim), dtype=complex)
        for j, i in enumerate(self.perm):
            mat[i, j] = self.phases[i]
        return mat

    def apply(self, state: np.ndarray) -> np.ndarray:
        """Action on a statevector, without materializing the matrix."""
        state = np.asarray(state, dtype=complex)
        out = np.empty_like(state)
        idx = np.asarray(self.perm)
        out[idx] = np.asarray(self.phases)[idx] * state
        return out

    def bit_map(self, x: int) -> int:
        """Phase-free classical action on an input string."""
        return self.perm[x]

    def is_involution(self) -> bool:
        return all(self.perm[self.perm[j]] == j for j in range(self.dim))


def detect_from_columns(dim: int, columns, tol: float = DEFAULT_TOL):
    """Streaming generalized-permutation detection.

    Consumes an iterable of column vectors and stops at the first column that
    is not a single basis vector up to phase.  Returns None when the matrix is
    not a generalized permutation.
    """
    m = num_bits(dim)
    perm = [-1] * dim
    phases = [0j] * dim
    for j, col in enumerate(columns):
        col = np.asarray(col)
        big = np.flatnonzero(np.abs(col) > tol)
        if big.size != 1:
            return None
        i = int(big[0])
        entry = complex(col[i])
        if abs(abs(entry) - 1.0) > tol:
            return None
        perm[j] = i
        phases[i] = entry
    if sorted(perm) != list(range(dim)):
        return None
    return GeneralizedPermutation(m, tuple(perm), tuple(phases))


def detect_generalized_permutation(mat: np.ndarray, tol: float = DEFAULT_TOL):
    """Decompose into permutation + phases, or None if any column mixes."""
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    dim = mat.shape[0]
    num_bits(dim)
    return detect_from_columns(dim, (mat[:, j] for j in range(dim)), tol)


def cycle_notation(perm) -> str:
    """Disjoint-cycle string for a permutation, 'id' for the identity."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "id"


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def matrix_to_json(mat: np.ndarray) -> dict:
    mat = np.asarray(mat, dtype=complex)
    return {
        "dim": mat.shape[0],
        "entries": [[float(v.real), float(v.imag)] for v in mat.reshape(-1)],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    """Parse {"dim": d, "entries": [[re, im], ...]} (row-major, length d**2)."""
    try:
        dim = int(obj["dim"])
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if dim < 1 or len(entries) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for dim={dim}, got {len(entries)}")
    flat = np.empty(dim * dim, dtype=complex)
    for idx, pair in enumerate(entries):
        if len(pair) != 2:
            raise ValueError(f"entry {idx} is not a [re, im] pair")
        flat[idx] = complex(float(pair[0]), float(pair[1]))
    if not np.all(np.isfinite(flat.view(float))):
        raise ValueError("matrix entries must be finite")
    return flat.reshape(dim, dim)
