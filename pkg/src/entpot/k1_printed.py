"""Hand transcription of the printed pair-weight table for K1, as a cross-check target.

The implementation of record is the Hamming-distance rule in
``closed_form``; this verbatim transcription of the printed polynomial is
kept only so the two can be compared term by term. The printed table has
known defects: the |a_12|^2 row is absent outright, five weights in the
|a_6|^2 row are garbled, and the (13, 15) weight has the wrong sign. The
rule, not the transcription, reproduces the known K values and the
oracle identity K = 2*(3*pi_ME - 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .closed_form import PAIR_WEIGHT_BY_DISTANCE, QUARTIC_WEIGHT

#: Printed coefficient of |a_i|^2 |a_j|^2 for i < j, transcribed row by row.
#: Rows are keyed by i; absent cells were not printed at all.
PRINTED_PAIR_WEIGHTS: dict[int, dict[int, float]] = {
    0: {1: 2, 2: 2, 3: -2, 4: 2, 5: -2, 6: -2, 7: -4, 8: 2, 9: -2, 10: -2,
        11: -4, 12: -2, 13: -4, 14: -4, 15: -4},
    1: {2: -2, 3: 2, 4: -2, 5: 2, 6: -4, 7: -2, 8: -2, 9: 2, 10: -4, 11: -2,
        12: -4, 13: -2, 14: -4, 15: -4},
    2: {3: 2, 4: -2, 5: -4, 6: 2, 7: -2, 8: -2, 9: -4, 10: 2, 11: -2, 12: -4,
        13: -4, 14: -2, 15: -4},
    3: {4: -4, 5: -2, 6: -2, 7: 2, 8: -4, 9: -2, 10: -2, 11: 2, 12: -4,
        13: -4, 14: -4, 15: -2},
    4: {5: 2, 6: 2, 7: -2, 8: -2, 9: -4, 10: -4, 11: -4, 12: 2, 13: -2,
        14: -2, 15: -4},
    5: {6: -2, 7: 2, 8: -4, 9: -2, 10: -4, 11: -4, 12: -2, 13: 2, 14: -4,
        15: -2},
    6: {7: 2, 8: -4, 9: -4, 10: -4, 11: -4, 12: -4, 13: -2, 14: -2, 15: 2},
    7: {8: -4, 9: -4, 10: -4, 11: -2, 12: -4, 13: -2, 14: -2, 15: 2},
    8: {9: 2, 10: 2, 11: -2, 12: 2, 13: -2, 14: -2, 15: -4},
    9: {10: -2, 11: 2, 12: -2, 13: 2, 14: -4, 15: -2},
    10: {11: 2, 12: -2, 13: -4, 14: 2, 15: -2},
    11: {12: -4, 13: -2, 14: -2, 15: 2},
    # Row 12 is missing from the printed table.
    13: {14: -2, 15: -2},
    14: {15: 2},
}

PRINTED_QUARTIC_WEIGHT = 4.0


def rule_pair_weights() -> dict[int, dict[int, float]]:
    """The full 120-pair weight table generated by the Hamming-distance rule."""
    return {
        i: {j: PAIR_WEIGHT_BY_DISTANCE[(i ^ j).bit_count()] for j in range(i + 1, 16)}
        for i in range(15)
    }


@dataclass(frozen=True)
class WeightDiscrepancy:
    """One cell where the printed table disagrees with the rule."""

    i: int
    j: int
    printed: float | None  # None when the cell was not printed at all
    rule: float


def coefficient_discrepancies() -> list[WeightDiscrepancy]:
    """Every (i, j) cell where the printed transcription differs from the rule."""
    rule = rule_pair_weights()
    found = []
    for i in range(15):
        printed_row = PRINTED_PAIR_WEIGHTS.get(i, {})
        for j in range(i + 1, 16):
            printed = printed_row.get(j)
            if printed is None or printed != rule[i][j]:
                found.append(WeightDiscrepancy(i, j, printed, rule[i][j]))
    return found


def comparison_report() -> str:
    """Term-by-term comparison of the rule against the printed transcription."""
    rule = rule_pair_weights()
    discrepancies = coefficient_discrepancies()
    bad_cells = {(d.i, d.j) for d in discrepancies}
    lines = [
        "K1 pair-weight comparison: Hamming-distance rule vs printed table",
        f"quartic |a_i|^4 weight: rule {QUARTIC_WEIGHT:+g}, "
        f"printed {PRINTED_QUARTIC_WEIGHT:+g}",
        "",
    ]
    for i in range(15):
        cells = []
        for j in range(i + 1, 16):
            printed = PRINTED_PAIR_WEIGHTS.get(i, {}).get(j)
            mark = "" if (i, j) not in bad_cells else " <-- MISMATCH"
            printed_str = "absent" if printed is None else f"{printed:+g}"
            cells.append(f"  ({i:2d},{j:2d})  rule {rule[i][j]:+g}  printed {printed_str}{mark}")
        lines.append(f"row |a_{i}|^2:")
        lines.extend(cells)
    lines.append("")
    lines.append(f"{len(discrepancies)} discrepant cell(s) out of 120:")
    for d in discrepancies:
        printed_str = "absent" if d.printed is None else f"{d.printed:+g}"
        lines.append(f"  ({d.i:2d},{d.j:2d})  printed {printed_str}, rule {d.rule:+g}")
    return "\n".join(lines)
