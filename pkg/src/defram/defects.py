"""k-sparse and k-dense vertex sets: membership, optimization, witnesses.

A set S is k-sparse when every vertex of S has at most k neighbours
inside S; it is k-dense when it is k-sparse in the complement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import GraphClass, _blocks, is_cactus
from .graphs import (
    DomainError,
    Graph,
    VertexSet,
    bits,
    complement,
    components,
)

ORACLE_MAX_ORDER = 24


def is_k_sparse(g: Graph, sub: VertexSet, k: int) -> bool:
    """True iff every vertex of ``sub`` has at most k neighbours in it."""
    for v in bits(sub):
        if (g.adj[v] & sub).bit_count() > k:
            return False
    return True


def is_k_dense(g: Graph, sub: VertexSet, k: int) -> bool:
    """True iff ``sub`` is k-sparse in the complement of g."""
    return is_k_sparse(complement(g), sub, k)


def _can_add(adj, v: int, chosen: int, k: int) -> bool:
    # chosen + v stays k-sparse: v gains <= k neighbours and no chosen
    # neighbour of v is already at degree k
    nb = adj[v] & chosen
    if nb.bit_count() > k:
        return False
    for u in bits(nb):
        if (adj[u] & chosen).bit_count() >= k:
            return False
    return True


def _greedy_sparse(adj, cand: int, k: int) -> int:
    """Greedy k-sparse subset of ``cand`` (ascending degree, then index)."""
    verts = sorted(bits(cand), key=lambda v: ((adj[v] & cand).bit_count(), v))
    chosen = 0
    for v in verts:
        if _can_add(adj, v, chosen, k):
            chosen |= 1 << v
    return chosen


def _bnb_sparse(adj, cand: int, k: int, floor_size: int, floor_set: int,
                stop_at: int | None) -> tuple[int, int]:
    """Branch and bound for a maximum k-sparse subset of ``cand``.

    Only improvements over ``floor_size`` are searched for.  Branches on a
    maximum-degree vertex of the candidate-induced subgraph (ties to the
    lowest index), include branch first, pruning once |chosen| plus the
    number of remaining candidates cannot beat the best known size.
    When ``stop_at`` is reached the search aborts with the current best.
    """
    best_size = floor_size
    best_set = floor_set

    def rec(chosen: int, size: int, cand: int) -> bool:
        nonlocal best_size, best_set
        if size > best_size:
            best_size, best_set = size, chosen
            if stop_at is not None and size >= stop_at:
                return True
        if size + cand.bit_count() <= best_size or not cand:
            return False
        bv, bd = -1, -1
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (adj[v] & cand).bit_count()
            if d > bd:
                bv, bd = v, d
        vbit = 1 << bv
        new_chosen = chosen | vbit
        new_cand = 0
        m = cand ^ vbit
        while m:
            b = m & -m
            m ^= b
            if _can_add(adj, b.bit_length() - 1, new_chosen, k):
                new_cand |= b
        if rec(new_chosen, size + 1, new_cand):
            return True
        return rec(chosen, size, cand ^ vbit)

    rec(0, 0, cand)
    return best_size, best_set


def alpha_k(g: Graph, k: int) -> tuple[int, VertexSet]:
    """Maximum k-sparse set size with one optimal witness.

    Computed per connected component and summed.
    """
    if k < 0:
        raise DomainError("defect k must be >= 0")
    total = 0
    witness = 0
    for comp in components(g):
        greedy = _greedy_sparse(g.adj, comp, k)
        size, best = _bnb_sparse(g.adj, comp, k, greedy.bit_count(), greedy, None)
        total += size
        witness |= best
    return total, witness


def _trim(mask: int, size: int) -> int:
    out = 0
    for v in bits(mask):
        out |= 1 << v
        size -= 1
        if size == 0:
            break
    return out


def find_sparse_set(g: Graph, k: int, target: int) -> VertexSet | None:
    """A k-sparse set of exactly ``target`` vertices, or None.

    Decision variant of alpha_k: exits as soon as the target is reached,
    and abandons a graph early once the remaining components cannot make
    up the difference.
    """
    if target <= 0:
        return 0
    comps = components(g)
    sizes = [c.bit_count() for c in comps]
    acc_size = 0
    acc_set = 0
    for idx, comp in enumerate(comps):
        rest = sum(sizes[idx + 1:])
        need_here = target - acc_size - rest  # this component must deliver this many
        greedy = _greedy_sparse(g.adj, comp, k)
        if greedy.bit_count() >= target - acc_size:
            return _trim(acc_set | greedy, target)
        floor = max(greedy.bit_count(), need_here - 1)
        floor_set = greedy if greedy.bit_count() >= floor else 0
        size, best = _bnb_sparse(g.adj, comp, k, floor, floor_set,
                                 stop_at=target - acc_size)
        if size < need_here:
            return None
        acc_size += size
        acc_set |= best
        if acc_size >= target:
            return _trim(acc_set, target)
    return None


def alpha_k_oracle(g: Graph, k: int) -> int:
    """Exhaustive alpha_k: enumerate every k-sparse set.

    Subset recursion in vertex order; a set that stops being k-sparse is
    never extended (supersets cannot recover).  Exponential, for
    cross-checking the solver on small graphs only.
    """
    if g.n > ORACLE_MAX_ORDER:
        raise DomainError(f"oracle limited to order {ORACLE_MAX_ORDER}, got {g.n}")
    best = 0

    def rec(start: int, chosen: int, size: int):
        nonlocal best
        if size > best:
            best = size
        for v in range(start, g.n):
            grown = chosen | (1 << v)
            if is_k_sparse(g, grown, k):
                rec(v + 1, grown, size + 1)

    rec(0, 0, 0)
    return best


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of checking one graph for a k-dense i-set / k-sparse j-set."""

    has_dense: bool
    has_sparse: bool
    dense_witness: VertexSet | None
    sparse_witness: VertexSet | None

    @property
    def neither(self) -> bool:
        return not (self.has_dense or self.has_sparse)


def ramsey_check(g: Graph, k: int, i: int, j: int) -> WitnessReport:
    """Look for a k-sparse j-set and a k-dense i-set in g."""
    if i < 1 or j < 1:
        raise DomainError("set sizes i and j must be >= 1")
    sparse = find_sparse_set(g, k, j)
    dense = find_sparse_set(complement(g), k, i)
    return WitnessReport(
        has_dense=dense is not None,
        has_sparse=sparse is not None,
        dense_witness=dense,
        sparse_witness=sparse,
    )


def sparsity_remainder(n: int) -> int:
    """0 when n is divisible by 4, else 1."""
    return 0 if n % 4 == 0 else 1


def class_sparse_lower_bound(cls: GraphClass, n: int, k: int) -> int:
    """Guaranteed minimum alpha_k over all order-n members of the class.

    Supported for forests (any k >= 1) and cacti (k = 1 uses the
    parity-sensitive form, k >= 2 the sharp floor form).
    """
    if k < 1:
        raise DomainError("bounds are stated for k >= 1")
    if cls is GraphClass.FOREST:
        return -((-(k + 1) * n) // (k + 2))  # ceil((k+1)n / (k+2))
    if cls is GraphClass.CACTUS:
        if n < 1:
            raise DomainError("cactus bound needs n >= 1")
        if k == 1:
            return n // 2 + sparsity_remainder(n)
        return (k * n) // (k + 1) + 1
    raise DomainError(f"no sparse lower bound for class {cls.value}")


def _bfs_dist(adj, alive: int, sources: int) -> dict[int, int]:
    dist = {v: 0 for v in bits(sources)}
    frontier = sources
    seen = sources
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        d += 1
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def cactus_deforesting_matching(g: Graph) -> list[tuple[int, int]]:
    """A matching whose removal turns the cactus into a forest.

    Exactly one edge per cycle block.  While some component still has
    several cycles, the two cycles furthest apart are located, an edge of
    one avoiding its closest vertex to the other is recorded, and the
    branch hanging behind that vertex is discarded; a lone cycle in a
    component just loses one edge.  All ties break toward the lowest
    vertex index.
    """
    if not is_cactus(g):
        raise DomainError("input is not a cactus")
    adj = list(g.adj)
    alive = g.vertex_mask()
    removed: list[tuple[int, int]] = []

    def comp_of(mask: int, start_bit: int) -> int:
        comp = start_bit
        frontier = start_bit
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        return comp

    while True:
        cycles = [b for b in _blocks(adj, alive) if b.bit_count() >= 3]
        if not cycles:
            break
        # lowest-vertex component that still contains a cycle
        cyc_verts = 0
        for c in cycles:
            cyc_verts |= c
        comp = comp_of(alive, cyc_verts & -cyc_verts)
        local = [c for c in cycles if c & comp]
        if len(local) == 1:
            cyc = local[0]
            u = (cyc & -cyc).bit_length() - 1
            v = ((adj[u] & cyc) & -(adj[u] & cyc)).bit_length() - 1
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            removed.append((min(u, v), max(u, v)))
            continue
        best_key = None
        pair = None
        for a in range(len(local)):
            dist = _bfs_dist(adj, alive, local[a])
            for b in range(a + 1, len(local)):
                d = min(dist[v] for v in bits(local[b]))
                lows = sorted(((local[a] & -local[a]).bit_length() - 1,
                               (local[b] & -local[b]).bit_length() - 1))
                key = (-d, lows[0], lows[1])
                if best_key is None or key < best_key:
                    best_key = key
                    if lows[0] == (local[a] & -local[a]).bit_length() - 1:
                        pair = (local[a], local[b])
                    else:
                        pair = (local[b], local[a])
        cyc, other = pair
        dist_other = _bfs_dist(adj, alive, other)
        v = min(bits(cyc), key=lambda x: (dist_other[x], x))
        vbit = 1 << v
        edge = None
        for x in bits(cyc & ~vbit):
            row = adj[x] & cyc & ~vbit & ~((1 << (x + 1)) - 1)
            if row:
                y = (row & -row).bit_length() - 1
                edge = (x, y)
                break
        x, y = edge
        branch = comp_of(alive & ~vbit, 1 << x)
        removed.append(edge)
        alive &= ~branch
        for w in range(g.n):
            adj[w] = adj[w] & alive if (1 << w) & alive else 0
    return sorted(removed)
