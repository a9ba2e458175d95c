#!/usr/bin/env python3
"""Stochastic witness hunting.

First rediscovers two witnesses that are known to exist, then attacks a
conjectured cell: the conjecture that the bipartite value at (k=1, i=4,
j=10) equals 19 would be refuted by any order-19 witness, so a hit here
would be news (and a miss proves nothing).

Usage: python demos/witness_hunt.py [seed] [budget]
"""

import sys
import time

from defram import GraphClass, graph6_encode, hunt_witness, ramsey_value

KNOWN = [
    (GraphClass.BIPARTITE, 1, 4, 8, 14),
    (GraphClass.SPLIT, 2, 5, 9, 11),
]


def run(cls, k, i, j, n, seed, budget) -> None:
    start = time.perf_counter()
    g = hunt_witness(cls, k, i, j, n, budget=budget, seed=seed)
    elapsed = time.perf_counter() - start
    if g is None:
        print(f"{cls.value} k={k} ({i},{j}) at order {n}: no witness after "
              f"{budget} moves [{elapsed:.1f}s]")
    else:
        print(f"{cls.value} k={k} ({i},{j}) at order {n}: found {graph6_encode(g)} "
              f"[{elapsed:.1f}s]  (proves the value exceeds {n})")


def main() -> None:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    budget = int(sys.argv[2]) if len(sys.argv) > 2 else 20000
    for cls, k, i, j, n in KNOWN:
        run(cls, k, i, j, n, seed, budget)

    cell = ramsey_value(GraphClass.BIPARTITE, 1, 4, 10)
    print(f"\nopen cell: bipartite k=1 (4,10) is {cell.status} "
          f"{cell.value} in [{cell.lo}, {cell.hi}]")
    print("hunting an order-19 witness (a hit would refute the conjectured value):")
    run(GraphClass.BIPARTITE, 1, 4, 10, 19, seed, budget)


if __name__ == "__main__":
    main()
