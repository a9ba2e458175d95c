"""Isomorph-free exhaustive generation and from-scratch value verification.

Graphs of order m arise by attaching a new vertex to every order-(m-1)
graph of the class; an extension is kept only when the new vertex sits in
the automorphism orbit of the canonical deletion target, and attachment
neighbourhoods are deduplicated by parent-automorphism orbits, so each
isomorphism class appears exactly once without storing past levels.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass, field
from functools import partial

from .canon import _canon, _orbit
from .classes import GraphClass, member
from .defects import ramsey_check
from .formulas import RamseyValue
from .graph6 import graph6_encode
from .graphs import DomainError, Graph, bits

ENV_BUDGET = "DEFRAM_BUDGET"
DEFAULT_BUDGETS = {GraphClass.FOREST: 12, GraphClass.SPLIT: 12}
DEFAULT_BUDGET = 10


class BudgetError(DomainError):
    """An enumeration order above the configured budget was requested."""


def order_budget(cls: GraphClass, budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{ENV_BUDGET} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGETS.get(cls, DEFAULT_BUDGET)


def _apply_perm_to_mask(perm, mask: int) -> int:
    out = 0
    while mask:
        b = mask & -mask
        mask ^= b
        out |= 1 << perm[b.bit_length() - 1]
    return out


def _extend_parent(parent: Graph, cls: GraphClass) -> list[Graph]:
    """All accepted one-vertex extensions of ``parent`` inside the class."""
    m = parent.n
    _, _, pgens = _canon(m, parent.adj)
    children = []
    seen = bytearray(1 << m)
    for neigh in range(1 << m):
        if seen[neigh]:
            continue
        orbit = [neigh]
        seen[neigh] = 1
        qi = 0
        while qi < len(orbit):
            cur = orbit[qi]
            qi += 1
            for perm in pgens:
                img = _apply_perm_to_mask(perm, cur)
                if not seen[img]:
                    seen[img] = 1
                    orbit.append(img)
        rows = tuple(row | (1 << m) if (neigh >> u) & 1 else row
                     for u, row in enumerate(parent.adj)) + (neigh,)
        child = Graph(m + 1, rows)
        if not member(child, cls):
            continue
        _, lab, cgens = _canon(m + 1, rows)
        target = lab[m]
        if target == m or target in _orbit(cgens, m):
            children.append(child)
    return children


def enumerate_levels(cls: GraphClass, n: int, budget: int | None = None,
                     workers: int = 1) -> list[list[Graph]]:
    """Lists of all class members of each order 0..n, one per isomorphism
    class, in a deterministic order."""
    cap = order_budget(cls, budget)
    if n > cap:
        raise BudgetError(
            f"order {n} exceeds the enumeration budget {cap}; pass a larger "
            f"budget or set {ENV_BUDGET}")
    if n < 0:
        raise DomainError("order must be >= 0")
    levels: list[list[Graph]] = [[Graph(0, ())]]
    pool = None
    try:
        if workers > 1:
            pool = multiprocessing.get_context("fork").Pool(workers)
        for m in range(1, n + 1):
            parents = levels[m - 1]
            if pool is not None and len(parents) > 4 * workers:
                chunks = pool.map(partial(_extend_parent, cls=cls), parents,
                                  chunksize=max(1, len(parents) // (4 * workers)))
            else:
                chunks = [_extend_parent(p, cls) for p in parents]
            levels.append([g for chunk in chunks for g in chunk])
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return levels


def enumerate_class(cls: GraphClass, n: int, budget: int | None = None,
                    workers: int = 1) -> list[Graph]:
    """All class members of order n, one per isomorphism class."""
    return enumerate_levels(cls, n, budget, workers)[n]


@dataclass
class EnumerationReport:
    """Result of exhaustively checking one cell at one order."""

    cls: GraphClass
    order: int
    k: int
    i: int
    j: int
    examined: int
    all_pass: bool
    counterexamples: list[str] = field(default_factory=list)
    lower_witness: str | None = None
    elapsed: float = 0.0

    @property
    def confirmed(self) -> bool:
        return self.all_pass and self.lower_witness is not None

    def to_json(self) -> dict:
        return {
            "class": self.cls.value, "order": self.order,
            "k": self.k, "i": self.i, "j": self.j,
            "examined": self.examined, "all_pass": self.all_pass,
            "counterexamples": self.counterexamples,
            "lower_witness": self.lower_witness,
            "confirmed": self.confirmed, "elapsed": self.elapsed,
        }


def verify_value(cls: GraphClass, k: int, i: int, j: int, claimed: int,
                 budget: int | None = None, workers: int = 1) -> EnumerationReport:
    """Check a claimed value from scratch: every class graph of order
    ``claimed`` must hold a witness set, and some graph one order below
    must hold neither."""
    if claimed < 1:
        raise DomainError("claimed value must be >= 1")
    start = time.perf_counter()
    levels = enumerate_levels(cls, claimed, budget, workers)
    counterexamples = [graph6_encode(g) for g in levels[claimed]
                       if ramsey_check(g, k, i, j).neither]
    lower_witness = None
    for g in levels[claimed - 1]:
        if ramsey_check(g, k, i, j).neither:
            lower_witness = graph6_encode(g)
            break
    return EnumerationReport(
        cls=cls, order=claimed, k=k, i=i, j=j,
        examined=len(levels[claimed]) + len(levels[claimed - 1]),
        all_pass=not counterexamples,
        counterexamples=counterexamples,
        lower_witness=lower_witness,
        elapsed=time.perf_counter() - start,
    )


def compute_ramsey_exhaustive(cls: GraphClass, k: int, i: int, j: int,
                              n_max: int, budget: int | None = None,
                              workers: int = 1) -> RamseyValue | None:
    """Smallest order at which every enumerated class graph holds a
    witness set, or None if none up to ``n_max``."""
    levels = enumerate_levels(cls, n_max, budget, workers)
    for n in range(1, n_max + 1):
        if all(not ramsey_check(g, k, i, j).neither for g in levels[n]):
            return RamseyValue.exact(n, "exhaustive")
    return None
