#!/usr/bin/env python3
"""Tabulate the catalog states: criterion split K1/K2, total K, potential,
and verdict. Reproduces the known values (K = 1, 0, 5/9 and pi_ME = 1/2,
1/3, 23/54) for the named four-qubit states."""
from entpot.closed_form import k_total
from entpot.potential import analyze
from entpot.qstate import catalog_names, catalog_state

if __name__ == "__main__":
    header = f"{'state':16s} {'K1':>12s} {'K2':>12s} {'K':>12s} {'pi_ME':>14s}  verdict"
    print(header)
    print("-" * len(header))
    for full_name in catalog_names():
        name, variant = full_name.split("/")
        state = catalog_state(name, variant)
        kd = k_total(state)
        report = analyze(state)
        print(f"{full_name:16s} {kd.k1:12.6f} {kd.k2:12.6f} {kd.k_total:12.6f} "
              f"{report.pi_me:14.10f}  {report.verdict}")
