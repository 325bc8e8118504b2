"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""
import json
import time

import numpy as np

from entpot.cli import run
from entpot.closed_form import (
    _pair_purity,
    k_total,
    k_total_of_amplitudes,
    pair_purities,
)
from entpot.ket_parser import eval_ket, format_ket, parse_ket
from entpot.mmes_search import MinimizeConfig, gradient, minimize_potential, objective
from entpot.potential import analyze, pi_me_of_amplitudes
from entpot.qstate import apply_local_unitary, catalog_state, random_state
from entpot.reduction import balanced_subsets, subset_purity

from helpers import random_amplitude_batch, random_unitary


def _report(num, ok, detail):
    line = f"ACCEPTANCE {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def test_c01_hs_reproduction():
    state = catalog_state("hs", "omega")
    report = analyze(state)  # warm up caches before timing
    times = []
    for _ in range(20):
        t0 = time.perf_counter()
        analyze(state)
        times.append(time.perf_counter() - t0)
    elapsed = min(times)
    purity_err = max(abs(v - 1 / 3) for v in report.purities.values())
    pi_err = abs(report.pi_me - 1 / 3)
    k_err = abs(report.k_total)
    ok = purity_err < 1e-12 and pi_err < 1e-12 and k_err < 1e-12 and elapsed < 1e-3
    _report(1, ok, f"hs/omega: purity err {purity_err:.1e}, pi_ME err {pi_err:.1e}, "
                   f"K err {k_err:.1e}, analyze {elapsed*1e6:.0f} us")


def test_c02_k_value_table():
    expected = {
        ("eq7", "uniform"): 1.0,
        ("eq9", "uniform"): 1.0,
        ("yc", "phases"): 0.0,
        ("yc", "signs"): 0.0,
        ("eq11", "uniform"): 1.0,
        ("cluster", "sign"): 0.0,
        ("cluster", "phase"): 0.0,
        ("eq13", "uniform"): 5.0 / 9.0,
        ("brown", "phases"): 0.0,
        ("brown", "signs"): 0.0,
    }
    worst = max(
        abs(k_total(catalog_state(name, variant)).k_total - want)
        for (name, variant), want in expected.items()
    )
    _report(2, worst < 1e-12, f"10 catalog K values, worst err {worst:.1e}")


def test_c03_yc_purities():
    pp = pair_purities(catalog_state("yc", "signs"))
    worst = max(abs(pp.pi12 - 0.25), abs(pp.pi13 - 0.25), abs(pp.pi14 - 0.5))
    _report(3, worst < 1e-12, f"yc/signs pi_12/13/14, worst err {worst:.1e}")


def _random_four_qubit_batch(count, seed):
    return random_amplitude_batch(4, count, np.random.default_rng(seed))


def test_c04_closed_form_oracle_equivalence():
    amps = _random_four_qubit_batch(10_000, 44)
    worst = 0.0
    for pair in balanced_subsets(4):
        closed = _pair_purity(amps, pair)
        oracle = subset_purity(amps, 4, pair)
        worst = max(worst, float(np.max(np.abs(closed - oracle))))
    _report(4, worst < 1e-12,
            f"10^4 states x 6 subsets, max |closed - oracle| = {worst:.1e}")


def test_c05_scale_identity():
    amps = _random_four_qubit_batch(10_000, 55)
    k = k_total_of_amplitudes(amps)
    d = 3.0 * pi_me_of_amplitudes(amps, 4) - 1.0
    s = float(np.median(k / d))
    residual = float(np.max(np.abs(k - 2.0 * d)))
    ok = abs(s - 2.0) < 1e-9 and residual < 1e-9
    # the printed criterion polynomial satisfies K = 2*(3*pi_ME - 1), i.e.
    # s = 2, not the s = 1 a direct reading of the potential identity gives
    _report(5, ok, f"measured s = {s:.12f} (printed convention: 2), "
                   f"max |K - 2(3pi-1)| = {residual:.1e}")


def test_c06_nonnegativity_sweep():
    start = time.perf_counter()
    rng = np.random.default_rng(66)
    min_k, min_pi = np.inf, np.inf
    for _ in range(10):
        amps = random_amplitude_batch(4, 100_000, rng)
        min_k = min(min_k, float(np.min(k_total_of_amplitudes(amps))))
        min_pi = min(min_pi, float(np.min(pi_me_of_amplitudes(amps, 4))))
    elapsed = time.perf_counter() - start
    ok = min_k >= -1e-9 and min_pi >= 1 / 3 - 1e-9 and elapsed < 60.0
    _report(6, ok, f"10^6 states: min K = {min_k:.3e}, min pi_ME = {min_pi:.12f}, "
                   f"{elapsed:.1f} s")


def test_c07_minimizer_reproduction(capsys):
    start = time.perf_counter()
    code = run(["minimize", "--n", "4", "--restarts", "20", "--seed", "42",
                "--format", "json"])
    best4 = json.loads(capsys.readouterr().out)["best_value"]
    result2 = minimize_potential(MinimizeConfig(n_qubits=2, restarts=5, seed=42))
    elapsed = time.perf_counter() - start
    ok = (code == 0 and best4 <= 0.33334
          and abs(result2.best_value - 0.5) <= 1e-9 and elapsed < 30.0)
    _report(7, ok, f"n=4 best = {best4:.9f} (<= 0.33334), "
                   f"n=2 best = {result2.best_value:.12f}, {elapsed:.1f} s")


def test_c08_complement_symmetry():
    rng = np.random.default_rng(88)
    worst = 0.0
    for n in (3, 4, 5, 6):
        amps = random_amplitude_batch(n, 250, rng)
        for subset in balanced_subsets(n):
            complement = tuple(q for q in range(1, n + 1) if q not in subset)
            diff = np.abs(
                subset_purity(amps, n, subset) - subset_purity(amps, n, complement)
            )
            worst = max(worst, float(np.max(diff)))
    _report(8, worst < 1e-12,
            f"10^3 states, n in 3..6: max |pi_A - pi_Abar| = {worst:.1e}")


def test_c09_local_unitary_invariance():
    rng = np.random.default_rng(99)
    worst = 0.0
    for _ in range(1000):
        state = random_state(4, rng)
        before = pi_me_of_amplitudes(state.amplitudes, 4)
        rotated = state
        for qubit in range(1, 5):
            rotated = apply_local_unitary(rotated, qubit, random_unitary(rng))
        after = pi_me_of_amplitudes(rotated.amplitudes, 4)
        worst = max(worst, abs(float(after) - float(before)))
    _report(9, worst < 1e-10, f"10^3 trials: max |delta pi_ME| = {worst:.1e}")


def test_c10_gradient_check():
    rng = np.random.default_rng(1010)
    h, worst = 1e-5, 0.0
    for n in (2, 3, 4, 5):
        for _ in range(25):
            point = rng.standard_normal(1 << (n + 1))
            g = gradient(point)
            fd = np.empty_like(point)
            for k in range(point.size):
                up, down = point.copy(), point.copy()
                up[k] += h
                down[k] -= h
                fd[k] = (objective(up) - objective(down)) / (2 * h)
            rel = np.linalg.norm(fd - g) / max(np.linalg.norm(fd), 1e-12)
            worst = max(worst, rel)
    _report(10, worst < 1e-5,
            f"100 points, n in 2..5: worst relative FD error = {worst:.1e}")


def test_c11_parser_round_trip():
    rng = np.random.default_rng(1111)
    worst = 0.0
    for _ in range(1000):
        state = random_state(4, rng)
        back = eval_ket(parse_ket(format_ket(state, 17)), "strict")
        worst = max(worst, float(np.max(np.abs(back.amplitudes - state.amplitudes))))
    hs_expr = "(|0011>+|1100>+w*(|0101>+|1010>)+w*w*(|0110>+|1001>))/sqrt(6)"
    hs_err = float(np.max(np.abs(
        eval_ket(parse_ket(hs_expr)).amplitudes
        - catalog_state("hs", "omega").amplitudes
    )))
    ok = worst < 1e-12 and hs_err < 1e-15
    _report(11, ok, f"10^3 round trips: max amplitude err = {worst:.1e}, "
                    f"HS expression err = {hs_err:.1e}")
