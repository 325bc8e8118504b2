"""Explicit four-qubit purity formulas and the K1 + K2 criterion.

Everything here works directly on the 16 amplitudes; no density matrix is
ever materialized, so this module stays an independent route from the
partial-trace oracle in ``reduction``.

Convention: K is reported such that K = 2 * (3 * pi_ME - 1) on normalized
states. Under this convention the known example values hold (K = 1 for the
uniform six- and eight-term states, 5/9 for the uniform Brown-support
state, 0 exactly on maximally entangled states), and the maximal
entanglement criterion is K1 + K2 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArityError
from .qstate import PureState

#: The six balanced pair bipartitions of four qubits, ascending order.
PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

#: Unordered pairs of kept-bit patterns, lexicographic.
_PATTERN_PAIRS = tuple((x, y) for x in range(4) for y in range(x + 1, 4))


def _kept_bit(i: int, q: int) -> int:
    return (i >> (4 - q)) & 1


@lru_cache(maxsize=None)
def _pair_groups(pair: tuple[int, int]) -> np.ndarray:
    """Bucket the 16 basis indices by kept-bit pattern.

    Row x lists the four indices whose kept qubits spell x, ordered by the
    traced-bit pattern so that cross-overlaps pair amplitudes with equal
    traced bits.
    """
    q1, q2 = pair
    t1, t2 = (q for q in (1, 2, 3, 4) if q not in pair)
    table = np.empty((4, 4), dtype=np.intp)
    for i in range(16):
        x = (_kept_bit(i, q1) << 1) | _kept_bit(i, q2)
        z = (_kept_bit(i, t1) << 1) | _kept_bit(i, t2)
        table[x, z] = i
    table.flags.writeable = False
    return table


def _require_four_qubits(state: PureState) -> np.ndarray:
    if state.n_qubits != 4:
        raise ArityError(f"closed forms are four-qubit only, got n={state.n_qubits}")
    return state.amplitudes


def _pair_purity(amps: np.ndarray, pair: tuple[int, int]) -> np.ndarray:
    """One balanced purity: four squared group norms plus six doubled cross-overlaps."""
    g = _pair_groups(pair)
    grouped = amps[..., g]                      # (..., 4 patterns, 4 members)
    norms = np.sum(np.abs(grouped) ** 2, axis=-1)
    total = np.sum(norms**2, axis=-1)
    for x, y in _PATTERN_PAIRS:
        overlap = np.sum(grouped[..., x, :] * np.conj(grouped[..., y, :]), axis=-1)
        total = total + 2.0 * np.abs(overlap) ** 2
    return total


@dataclass(frozen=True)
class PairPurities:
    """The six balanced purities of a four-qubit state."""

    pi12: float
    pi13: float
    pi14: float
    pi23: float
    pi24: float
    pi34: float

    def as_dict(self) -> dict[tuple[int, int], float]:
        return {
            (1, 2): self.pi12,
            (1, 3): self.pi13,
            (1, 4): self.pi14,
            (2, 3): self.pi23,
            (2, 4): self.pi24,
            (3, 4): self.pi34,
        }


@dataclass(frozen=True)
class KDecomposition:
    """Split of the criterion quantity into its diagonal and cross parts.

    ``k2`` is a sum of squared magnitudes, so it is nonnegative by
    construction; ``k_total`` is nonnegative on every normalized state.
    """

    k1: float
    k2: float

    @property
    def k_total(self) -> float:
        return self.k1 + self.k2


def pair_purities(state: PureState) -> PairPurities:
    """All six balanced purities from the closed forms (no partial trace)."""
    amps = _require_four_qubits(state)
    return PairPurities(*(float(_pair_purity(amps, pair)) for pair in PAIRS))


# ---------------------------------------------------------------------------
# K2: all 36 doubled squared cross-overlaps, six per balanced bipartition
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _k2_terms() -> tuple[np.ndarray, np.ndarray]:
    """Left/right index quadruples of the 36 cross-overlap terms, generated
    from the same bipartition machinery as the pair purities."""
    left, right = [], []
    for pair in PAIRS:
        g = _pair_groups(pair)
        for x, y in _PATTERN_PAIRS:
            left.append(g[x])
            right.append(g[y])
    return np.array(left), np.array(right)


def k2_of_amplitudes(amps: np.ndarray) -> np.ndarray:
    """Batched K2; ``amps`` has shape (..., 16)."""
    left, right = _k2_terms()
    overlaps = np.sum(amps[..., left] * np.conj(amps[..., right]), axis=-1)
    return 2.0 * np.sum(np.abs(overlaps) ** 2, axis=-1)


def k2_value(state: PureState) -> float:
    """Cross part of the criterion: sum of 36 doubled squared overlaps, >= 0."""
    return float(k2_of_amplitudes(_require_four_qubits(state)))


# ---------------------------------------------------------------------------
# K1: quartic diagonal polynomial from the Hamming-distance weight rule
# ---------------------------------------------------------------------------

#: Weight of |a_i|^2 |a_j|^2 by the Hamming distance d between the 4-bit
#: indices i and j. A distinct pair shares a diagonal block in C(4-d, 2) of
#: the six balanced bipartitions, so the diagonal part of the summed
#: purities carries 2*C(4-d, 2) per unordered pair and 6 per |a_i|^4;
#: subtracting twice the squared normalization leaves 2*(C(4-d, 2) - 2)
#: per pair and 4 per quartic term.
PAIR_WEIGHT_BY_DISTANCE = {1: 2.0, 2: -2.0, 3: -4.0, 4: -4.0}
QUARTIC_WEIGHT = 4.0


@lru_cache(maxsize=None)
def _k1_weight_matrix() -> np.ndarray:
    w = np.zeros((16, 16))
    for i in range(16):
        for j in range(16):
            if i != j:
                w[i, j] = PAIR_WEIGHT_BY_DISTANCE[(i ^ j).bit_count()]
    w.flags.writeable = False
    return w


def k1_of_amplitudes(amps: np.ndarray) -> np.ndarray:
    """Batched K1; ``amps`` has shape (..., 16)."""
    p = np.abs(amps) ** 2
    w = _k1_weight_matrix()
    pair_part = 0.5 * np.einsum("...i,ij,...j->...", p, w, p)
    return QUARTIC_WEIGHT * np.sum(p**2, axis=-1) + pair_part


def k1_value(state: PureState) -> float:
    """Diagonal part of the criterion: quartic polynomial in the |a_i|^2."""
    return float(k1_of_amplitudes(_require_four_qubits(state)))


def k_total(state: PureState) -> KDecomposition:
    """K1, K2 and their sum, computed purely from the closed forms."""
    amps = _require_four_qubits(state)
    return KDecomposition(
        k1=float(k1_of_amplitudes(amps)), k2=float(k2_of_amplitudes(amps))
    )


def k_total_of_amplitudes(amps: np.ndarray) -> np.ndarray:
    """Batched K1 + K2 for sweep-style workloads."""
    return k1_of_amplitudes(amps) + k2_of_amplitudes(amps)
