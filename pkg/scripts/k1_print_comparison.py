#!/usr/bin/env python3
"""Print the term-by-term comparison between the generated K1 coefficient rule
and the hand-transcribed printed table, listing every discrepant cell."""
from entpot.k1_printed import comparison_report

if __name__ == "__main__":
    print(comparison_report())
