#!/usr/bin/env python3
"""Reproduce the numerical minimum of the entanglement potential.

For four qubits the known minimum is 1/3 (about 0.333), attained e.g. by
the Higuchi-Sudbery state. Runs the multi-start projected-gradient search
and prints per-restart outcomes plus the gap to 1/3.
"""
import argparse
import time

from entpot.ket_parser import format_ket
from entpot.mmes_search import MinimizeConfig, export_trace_csv, minimize_potential


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--method", default="projected_gradient",
                    choices=("projected_gradient", "anneal_then_polish"))
    ap.add_argument("--trace-csv", default=None)
    args = ap.parse_args()

    config = MinimizeConfig(n_qubits=args.n, restarts=args.restarts,
                            seed=args.seed, method=args.method)
    t0 = time.perf_counter()
    result = minimize_potential(config)
    elapsed = time.perf_counter() - t0

    print(f"n = {args.n}, {args.restarts} restarts, seed {args.seed}, "
          f"method {args.method} ({elapsed:.1f} s)")
    for r, trace in enumerate(result.traces):
        iters, value = trace[-1]
        flag = "converged" if result.converged[r] else "max-iters"
        best = " <- best" if r == result.best_restart else ""
        print(f"  restart {r:2d}: value {value:.15f} after {iters:4d} iters "
              f"({flag}){best}")
    print(f"best value = {result.best_value:.15f}")
    if args.n == 4:
        print(f"gap to 1/3 = {result.best_value - 1/3:.3e}")
    print(f"best state = {format_ket(result.best_state, precision=6)}")
    if args.trace_csv:
        export_trace_csv(result, args.trace_csv)
        print(f"trace written to {args.trace_csv}")


if __name__ == "__main__":
    main()
