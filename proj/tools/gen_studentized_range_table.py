#!/usr/bin/env python3
"""Regenerates src/lens/studentized_range_table.cpp.

Upper-tail critical values q(alpha; k, df) of the studentized range
distribution, evaluated with scipy.stats.studentized_range.
"""
import math
import sys

import numpy as np
from scipy.stats import studentized_range

ALPHAS = (0.05, 0.01, 0.001)
KS = range(2, 21)
DFS = list(range(2, 31)) + [35, 40, 50, 60, 80, 120, 240]


def main(path):
    rows = []
    for alpha in ALPHAS:
        for k in KS:
            values = []
            for df in DFS:
                values.append(studentized_range.ppf(1.0 - alpha, k, df))
            values.append(studentized_range.ppf(1.0 - alpha, k, np.inf))
            rows.append((alpha, k, values))
            print(f"alpha={alpha} k={k} done", file=sys.stderr)

    with open(path, "w") as out:
        out.write("// Generated by tools/gen_studentized_range_table.py. Do not edit.\n\n")
        out.write('#include "faultlens/lens/studentized_range_table.hpp"\n\n')
        out.write("namespace faultlens::lens::detail {\n\n")
        out.write("const std::array<double, kTabulatedDfCount> kTabulatedDf = {\n   ")
        for df in DFS:
            out.write(f" {df}.0,")
        out.write(" std::numeric_limits<double>::infinity()};\n\n")
        out.write("const std::array<QRow, kQRowCount> kQRows = {{\n")
        for alpha, k, values in rows:
            body = ", ".join(f"{v:.4f}" for v in values)
            out.write(f"    {{{alpha}, {k}, {{{body}}}}},\n")
        out.write("}};\n\n")
        out.write("}  // namespace faultlens::lens::detail\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/lens/studentized_range_table.cpp")
