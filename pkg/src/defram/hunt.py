"""Stochastic witness hunting for open cells.

Seeded local search over class members of a fixed order.  Moves are edge
additions, removals and swaps preserving class membership; the score is
how far the largest sparse/dense sets overshoot their allowed sizes, and
moves are biased toward the violating set (add an edge inside an
oversized sparse set, remove an edge from an oversized dense one).  A
returned graph is always validated; a miss proves nothing.
"""

from __future__ import annotations

import random

from .classes import GraphClass, member
from .defects import alpha_k, ramsey_check
from .graphs import Graph, bits, complement, empty_graph, make_graph

DEFAULT_HUNT_BUDGET = 20000


def _score(g: Graph, k: int, i: int, j: int):
    """(score, oversized sparse set or 0, oversized dense set or 0).

    The score is (worst excess, total excess): the primary part is zero
    exactly on witnesses, the secondary steers ties toward states with
    only one side left to repair."""
    s_size, s_set = alpha_k(g, k)
    d_size, d_set = alpha_k(complement(g), k)
    s_excess = max(0, s_size - (j - 1))
    d_excess = max(0, d_size - (i - 1))
    return ((max(s_excess, d_excess), s_excess + d_excess),
            s_set if s_excess else 0,
            d_set if d_excess else 0)


def _random_member(cls: GraphClass, n: int, rng: random.Random) -> Graph:
    """A random class member: greedy random edge insertions from empty."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if rng.random() < 0.35:
            candidate = make_graph(n, edges + [(u, v)])
            if member(candidate, cls):
                edges.append((u, v))
    return make_graph(n, edges)


def _sparse_repair(g: Graph, rng: random.Random, sparse_set: int) -> tuple[int, int] | None:
    inside = list(bits(sparse_set))
    for _ in range(8):
        u, v = rng.sample(inside, 2)
        if not g.has_edge(u, v):
            return (min(u, v), max(u, v))
    return None


def _dense_repair(g: Graph, rng: random.Random, dense_set: int) -> tuple[int, int] | None:
    inside = [(u, v) for (u, v) in g.edges()
              if (dense_set >> u) & 1 and (dense_set >> v) & 1]
    return rng.choice(inside) if inside else None


def _mutate(g: Graph, rng: random.Random, sparse_set: int, dense_set: int) -> Graph | None:
    n = g.n
    targeted = rng.random() < 0.8
    if targeted and (sparse_set or dense_set):
        if sparse_set and dense_set:
            # repair both at once: drop a dense-set edge, close a sparse-set gap
            add = _sparse_repair(g, rng, sparse_set)
            drop = _dense_repair(g, rng, dense_set)
            if add and drop:
                return make_graph(n, [e for e in g.edges() if e != drop] + [add])
        if sparse_set and (not dense_set or rng.random() < 0.5):
            add = _sparse_repair(g, rng, sparse_set)
            if add:
                return make_graph(n, g.edges() + [add])
        else:
            drop = _dense_repair(g, rng, dense_set)
            if drop:
                return make_graph(n, [e for e in g.edges() if e != drop])
    present = g.edges()
    absent = [(u, v) for u in range(n) for v in range(u + 1, n)
              if not g.has_edge(u, v)]
    move = rng.randrange(3)
    edges = list(present)
    if move == 0 and absent:          # add
        edges.append(rng.choice(absent))
    elif move == 1 and present:       # remove
        edges.remove(rng.choice(present))
    elif move == 2 and present and absent:  # swap
        edges.remove(rng.choice(present))
        edges.append(rng.choice(absent))
    else:
        return None
    return make_graph(n, edges)


def hunt_witness(cls: GraphClass, k: int, i: int, j: int, n: int,
                 budget: int = DEFAULT_HUNT_BUDGET, seed: int = 0) -> Graph | None:
    """Search for an order-n class graph with neither witness set.

    A result proves the cell value exceeds n; None after ``budget`` moves
    proves nothing.  Same seed, same flags: same output.
    """
    rng = random.Random(seed)
    moves = 0
    restart_after = max(300, budget // 10)
    while moves < budget:
        g = _random_member(cls, n, rng)
        score, s_set, d_set = _score(g, k, i, j)
        stale = 0
        while moves < budget and stale < restart_after:
            if score[0] == 0:
                if member(g, cls) and ramsey_check(g, k, i, j).neither:
                    return g
                break  # cannot happen; restart rather than trust a bad score
            moves += 1
            candidate = _mutate(g, rng, s_set, d_set)
            if candidate is None or not member(candidate, cls):
                stale += 1
                continue
            cand_score, cand_s, cand_d = _score(candidate, k, i, j)
            if cand_score <= score or rng.random() < 0.05:
                stale = 0 if cand_score < score else stale + 1
                g, score, s_set, d_set = candidate, cand_score, cand_s, cand_d
            else:
                stale += 1
    return None
