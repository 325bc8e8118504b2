"""Shared test utilities."""
import numpy as np

from entpot.qstate import PureState


def random_unitary(rng):
    """Haar-random 2x2 unitary via QR with phase fix."""
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_amplitude_batch(n, count, rng):
    """(count, 2**n) array of normalized rotation-invariant random amplitudes."""
    dim = 1 << n
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def permute_qubits(state, perm):
    """Relabel qubits: old qubit q becomes perm[q-1] in the new state."""
    n = state.n_qubits
    out = np.zeros_like(state.amplitudes)
    for i in range(state.dim):
        j = 0
        for q in range(1, n + 1):
            bit = (i >> (n - q)) & 1
            j |= bit << (n - perm[q - 1])
        out[j] = state.amplitudes[i]
    return PureState(n, out)
