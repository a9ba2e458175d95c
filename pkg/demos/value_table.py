#!/usr/bin/env python3
"""Print the defective Ramsey value grid for every class at a chosen defect.

Exact values print bare, conjectured values with a trailing ?, open cells
as lo-hi ranges.

Usage: python demos/value_table.py [k] [max_ij]
"""

import sys

from defram import GraphClass, RamseyQuery, defective_ramsey


def cell_text(value) -> str:
    if value.is_exact:
        return str(value.value)
    if value.status == "conjectured":
        return f"{value.value}?"
    return f"{value.lo}-{value.hi}"


def main() -> None:
    k = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    hi = int(sys.argv[2]) if len(sys.argv) > 2 else 12
    lo = k + 2
    for cls in GraphClass:
        if cls is GraphClass.ALL:
            continue
        print(f"\n{cls.value}, k={k} (rows i, columns j, both from {lo})")
        header = "    " + "".join(f"{j:>7}" for j in range(lo, hi + 1))
        print(header)
        for i in range(lo, hi + 1):
            row = [cell_text(defective_ramsey(RamseyQuery(cls, k, i, j)))
                   for j in range(lo, hi + 1)]
            print(f"{i:>4}" + "".join(f"{c:>7}" for c in row))


if __name__ == "__main__":
    main()
