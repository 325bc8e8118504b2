"""Partial trace and purity for arbitrary qubit subsets of arbitrary n.

This is the brute-force reference implementation: reduced density matrices
are built by bit-mask index interleaving and purities read off as the
squared Frobenius norm. The four-qubit closed forms in ``closed_form`` are
checked against this module, never derived from it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .errors import ArityError, SubsetError
from .qstate import PureState

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Reduced density matrix for an ordered subset of kept qubits."""

    kept_qubits: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.complex128)
        dim = 1 << len(self.kept_qubits)
        if m.shape != (dim, dim):
            raise SubsetError(
                f"expected a {dim}x{dim} matrix for {len(self.kept_qubits)} kept "
                f"qubits, got shape {m.shape}"
            )
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise SubsetError("density matrix is not Hermitian within 1e-12")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise SubsetError("density matrix trace is not 1 within 1e-12")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    def min_eigenvalue(self) -> float:
        """Smallest eigenvalue; >= -1e-10 up to numerical noise for valid reductions."""
        return float(np.linalg.eigvalsh(self.entries)[0])


@lru_cache(maxsize=None)
def _index_table(n: int, keep: tuple[int, ...]) -> np.ndarray:
    """table[x, z] = full basis index whose kept bits spell x and traced bits spell z.

    Patterns follow the package convention: within both the kept and traced
    groups, ascending qubit number maps to descending bit significance.
    """
    traced = tuple(q for q in range(1, n + 1) if q not in keep)
    nk, nt = len(keep), len(traced)
    table = np.empty((1 << nk, 1 << nt), dtype=np.intp)
    for x in range(1 << nk):
        base = 0
        for pos, q in enumerate(keep):
            if (x >> (nk - 1 - pos)) & 1:
                base |= 1 << (n - q)
        for z in range(1 << nt):
            i = base
            for pos, q in enumerate(traced):
                if (z >> (nt - 1 - pos)) & 1:
                    i |= 1 << (n - q)
            table[x, z] = i
    return table


def _canonical_subset(n: int, keep: Iterable[int]) -> tuple[int, ...]:
    subset = tuple(sorted(set(int(q) for q in keep)))
    if not subset:
        raise SubsetError("keep set must be non-empty")
    if subset[0] < 1 or subset[-1] > n:
        raise SubsetError(f"keep set {subset} out of range 1..{n}")
    if len(subset) == n:
        raise SubsetError("keep set must be a proper subset of the qubits")
    return subset


def reduced_matrix(amplitudes: np.ndarray, n: int, keep: tuple[int, ...]) -> np.ndarray:
    """rho_A as a bare array; ``amplitudes`` may carry leading batch axes."""
    m = amplitudes[..., _index_table(n, keep)]
    return m @ np.conj(np.swapaxes(m, -1, -2))


def reduced_density(state: PureState, keep: Iterable[int]) -> DensityMatrix:
    """Partial trace of |psi><psi| down to the kept qubits."""
    subset = _canonical_subset(state.n_qubits, keep)
    return DensityMatrix(subset, reduced_matrix(state.amplitudes, state.n_qubits, subset))


def purity(rho: DensityMatrix | np.ndarray) -> float:
    """Tr(rho^2) as the squared Frobenius norm, exact for Hermitian rho."""
    m = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return float(np.real(np.vdot(m, m)))


def subset_purity(amplitudes: np.ndarray, n: int, keep: tuple[int, ...]) -> np.ndarray:
    """Batched Tr(rho_A^2) straight from (stacked) amplitude vectors."""
    rho = reduced_matrix(amplitudes, n, keep)
    return np.sum(np.abs(rho) ** 2, axis=(-2, -1))


def balanced_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """All C(n, floor(n/2)) qubit subsets of size floor(n/2), ascending order."""
    if n < 2:
        raise ArityError(f"no balanced bipartition exists for n={n}")
    return tuple(combinations(range(1, n + 1), n // 2))


def all_balanced_purities(state: PureState) -> Mapping[tuple[int, ...], float]:
    """Purity of every balanced subset (complements included for even n)."""
    amps = state.amplitudes
    return {
        subset: float(subset_purity(amps, state.n_qubits, subset))
        for subset in balanced_subsets(state.n_qubits)
    }
