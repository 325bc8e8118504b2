"""Minimize the entanglement potential over normalized n-qubit pure states.

States are encoded as raw real vectors of length 2**(n+1) (interleaved
real/imaginary parts). The objective normalizes internally, so it is
invariant under scaling of the point and its gradient is automatically
tangential to the sphere; projection is a single renormalization.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ConfigError, DegenerateStateError, DimensionError
from .qstate import PureState
from .reduction import _index_table, balanced_subsets

#: Armijo sufficient-decrease constant, step shrink factor, initial step.
ARMIJO = 1e-4
SHRINK = 0.5
INITIAL_STEP = 1.0
#: Gradient norm below which a restart is declared converged.
GRAD_TOL = 1e-9

Method = Literal["projected_gradient", "anneal_then_polish"]


def _decode(point: np.ndarray) -> tuple[np.ndarray, int]:
    point = np.asarray(point, dtype=np.float64)
    if point.ndim != 1 or point.size < 8 or point.size & (point.size - 1):
        raise DimensionError(
            f"point must have length 2**(n+1) with n >= 2, got {point.shape}"
        )
    n = point.size.bit_length() - 2
    return point[0::2] + 1j * point[1::2], n


def encode_state(state: PureState) -> np.ndarray:
    """Real encoding of a state's amplitudes (interleaved re/im)."""
    out = np.empty(2 * state.dim)
    out[0::2] = state.amplitudes.real
    out[1::2] = state.amplitudes.imag
    return out


def _raw_potential(c: np.ndarray, n: int) -> float:
    """Mean sum of |rho_A|^2 entries of the *unnormalized* vector c."""
    total = 0.0
    for subset in balanced_subsets(n):
        m = c[_index_table(n, subset)]
        rho = m @ m.conj().T
        total += float(np.real(np.vdot(rho, rho)))
    return total / len(balanced_subsets(n))


def objective(point: np.ndarray) -> float:
    """Potential of the normalized state encoded by ``point``; scale-invariant."""
    c, n = _decode(point)
    norm_sq = float(np.real(np.vdot(c, c)))
    if norm_sq == 0.0:
        raise DegenerateStateError("zero point has no direction")
    return _raw_potential(c, n) / norm_sq**2


def gradient(point: np.ndarray) -> np.ndarray:
    """Exact gradient of ``objective``; validated against central differences."""
    c, n = _decode(point)
    norm_sq = float(np.real(np.vdot(c, c)))
    if norm_sq == 0.0:
        raise DegenerateStateError("zero point has no direction")
    subsets = balanced_subsets(n)
    g = np.zeros_like(c)
    raw = 0.0
    for subset in subsets:
        table = _index_table(n, subset)
        m = c[table]
        rho = m @ m.conj().T
        raw += float(np.real(np.vdot(rho, rho)))
        g[table] += 2.0 * (rho @ m)
    raw /= len(subsets)
    g /= len(subsets)
    # d/dc* of raw(c)/|c|^4, with raw homogeneous of degree 2 in c and c*
    dc = g / norm_sq**2 - (2.0 * raw / norm_sq**3) * c
    out = np.empty_like(point, dtype=np.float64)
    out[0::2] = 2.0 * dc.real
    out[1::2] = 2.0 * dc.imag
    return out


@dataclass(frozen=True)
class MinimizeConfig:
    n_qubits: int
    restarts: int = 20
    max_iters: int = 5000
    step_tol: float = 1e-10
    objective_tol: float = 1e-12
    seed: int = 0
    method: Method = "projected_gradient"

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ConfigError(f"n_qubits must be >= 2, got {self.n_qubits}")
        if self.restarts < 1 or self.max_iters < 1:
            raise ConfigError("restarts and max_iters must be positive")
        if self.step_tol <= 0 or self.objective_tol <= 0:
            raise ConfigError("tolerances must be positive")
        if self.method not in ("projected_gradient", "anneal_then_polish"):
            raise ConfigError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class MinimizeResult:
    """Best state found plus per-restart traces.

    ``converged[r]`` is True when restart r hit a stopping tolerance
    (gradient norm, step size, or objective stagnation) rather than the
    iteration cap.
    """

    best_state: PureState
    best_value: float
    best_restart: int
    traces: list[list[tuple[int, float]]]
    converged: list[bool]
    seed: int

    @property
    def final_values(self) -> list[float]:
        return [trace[-1][1] for trace in self.traces]


def _normalize(p: np.ndarray) -> np.ndarray:
    return p / np.linalg.norm(p)


def _projected_gradient(
    p: np.ndarray,
    max_iters: int,
    step_tol: float,
    objective_tol: float,
    start_iter: int = 0,
    trace: list[tuple[int, float]] | None = None,
) -> tuple[np.ndarray, float, list[tuple[int, float]], bool]:
    """Descent with backtracking line search; renormalize after every step."""
    p = _normalize(p)
    f = objective(p)
    if trace is None:
        trace = [(start_iter, f)]
    converged = False
    for it in range(start_iter + 1, start_iter + max_iters + 1):
        g = gradient(p)
        g_sq = float(g @ g)
        if np.sqrt(g_sq) < GRAD_TOL:
            converged = True
            break
        step, accepted = INITIAL_STEP, False
        while step >= step_tol:
            q = _normalize(p - step * g)
            fq = objective(q)
            if fq <= f - ARMIJO * step * g_sq:
                accepted = True
                break
            step *= SHRINK
        if not accepted:
            converged = True  # step tolerance reached
            break
        improvement = f - fq
        p, f = q, fq
        trace.append((it, f))
        if improvement < objective_tol:
            converged = True  # objective stagnated below ftol
            break
    return p, f, trace, converged


def _anneal_then_polish(
    p: np.ndarray,
    rng: np.random.Generator,
    max_iters: int,
    step_tol: float,
    objective_tol: float,
) -> tuple[np.ndarray, float, list[tuple[int, float]], bool]:
    """Temperature-ladder random walk on the sphere, then gradient polish."""
    p = _normalize(p)
    f = objective(p)
    trace = [(0, f)]
    anneal_iters = min(400, max_iters // 2)
    temperatures = np.geomspace(1e-1, 1e-4, num=8)
    per_temp = max(1, anneal_iters // len(temperatures))
    it = 0
    for temp in temperatures:
        sigma = np.sqrt(temp)
        for _ in range(per_temp):
            it += 1
            q = _normalize(p + sigma * rng.standard_normal(p.size))
            fq = objective(q)
            if fq <= f or rng.random() < np.exp(-(fq - f) / temp):
                p, f = q, fq
            trace.append((it, f))
    return _projected_gradient(
        p, max_iters - it, step_tol, objective_tol, start_iter=it, trace=trace
    )


def minimize_potential(config: MinimizeConfig) -> MinimizeResult:
    """Multi-start minimization; deterministic given (config, seed).

    Each restart draws its starting point from its own stream seeded by
    (seed, restart index), so results do not depend on scheduling; the best
    restart is chosen by (value, index) lexicographic order.
    """
    dim = 1 << (config.n_qubits + 1)
    u_seed = config.seed & 0xFFFFFFFFFFFFFFFF
    traces: list[list[tuple[int, float]]] = []
    converged: list[bool] = []
    best: tuple[float, int, np.ndarray] | None = None
    for r in range(config.restarts):
        rng = np.random.default_rng([u_seed, r])
        start = rng.standard_normal(dim)
        if config.method == "projected_gradient":
            p, f, trace, ok = _projected_gradient(
                start, config.max_iters, config.step_tol, config.objective_tol
            )
        else:
            p, f, trace, ok = _anneal_then_polish(
                start, rng, config.max_iters, config.step_tol, config.objective_tol
            )
        traces.append(trace)
        converged.append(ok)
        if best is None or f < best[0]:
            best = (f, r, p)
    assert best is not None
    f_best, r_best, p_best = best
    c, _ = _decode(p_best)
    state = PureState(config.n_qubits, c / np.linalg.norm(c))
    return MinimizeResult(state, f_best, r_best, traces, converged, config.seed)


def export_trace_csv(result: MinimizeResult, path) -> None:
    """Write (restart, iteration, value) rows for every trace sample."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["restart", "iteration", "value"])
        for r, trace in enumerate(result.traces):
            for iteration, value in trace:
                writer.writerow([r, iteration, repr(value)])
