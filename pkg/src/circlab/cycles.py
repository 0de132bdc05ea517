"""Exact longest-cycle search, cycle and clique counting, spanning embeddings.

Cycles are counted as subgraphs: a cycle is its vertex sequence up to
rotation and reflection, so ``K5`` has ``5!/10 = 12`` five-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .budget import UNLIMITED, Budget
from .errors import CountOverflowError, DomainError
from .graph import Graph, _iter_bits, blocks

COUNT_BITS = 128
COUNT_MAX = (1 << COUNT_BITS) - 1
ORACLE_MAX_VERTICES = 16


def checked_count(value: int) -> int:
    """Return ``value`` unchanged unless it overflows the 128-bit counter."""
    if value < 0:
        raise DomainError("counts are non-negative")
    if value > COUNT_MAX:
        raise CountOverflowError(f"count exceeds {COUNT_BITS}-bit range")
    return value


class _Found(Exception):
    pass


# -- longest cycles ----------------------------------------------------


def _component_sizes_bound(adj, start_mask: int, avail: int, closers: int) -> int:
    """Largest component of ``avail`` touching ``start_mask`` and ``closers``."""
    best = 0
    todo = start_mask & avail
    while todo:
        seed = todo & -todo
        comp = frontier = seed
        while frontier:
            nxt = 0
            for w in _iter_bits(frontier):
                nxt |= adj[w]
            frontier = nxt & avail & ~comp
            comp |= frontier
        todo &= ~comp
        if comp & closers:
            size = comp.bit_count()
            if size > best:
                best = size
    return best


def _longest_in_block(adj, block: int, best: int, stop: int, budget: Budget) -> int:
    """Longest cycle inside the vertex set ``block`` if longer than ``best``.

    The search stops as soon as a cycle of length ``>= stop`` is found.
    """
    for s in _iter_bits(block):
        allowed = block & ~((2 << s) - 1)
        if allowed.bit_count() + 1 <= best:
            break
        closers = adj[s] & allowed
        if closers.bit_count() < 2:
            continue

        def dfs(u: int, visited: int, length: int) -> None:
            nonlocal best
            budget.check()
            if length >= 3 and adj[u] >> s & 1 and length > best:
                best = length
                if best >= stop:
                    raise _Found
            avail = allowed & ~visited
            nbrs = adj[u] & avail
            if not nbrs:
                return
            if length + _component_sizes_bound(adj, nbrs, avail, closers) <= best:
                return
            for w in _iter_bits(nbrs):
                dfs(w, visited | 1 << w, length + 1)

        try:
            for w in _iter_bits(closers):
                # Orient each cycle so its second vertex is the smaller neighbour of s.
                dfs(w, (1 << s) | (1 << w), 2)
        except _Found:
            return best
    return best


def _longest_cycle(g: Graph, stop: int, budget: Budget) -> int:
    adj = g.adj
    masks = []
    for b in blocks(g)[0]:
        if len(b) >= 3:
            m = 0
            for v in b:
                m |= 1 << v
            masks.append(m)
    masks.sort(key=lambda m: (-m.bit_count(), m))
    best = 0
    for m in masks:
        size = m.bit_count()
        if size <= best:
            break
        best = _longest_in_block(adj, m, best, min(stop, size), budget)
        if best >= stop:
            break
    return best


def circumference(g: Graph, budget: Budget = UNLIMITED) -> int:
    """Length of a longest cycle; 0 for forests."""
    return _longest_cycle(g, g.n, budget)


def has_cycle_at_least(g: Graph, m: int, budget: Budget = UNLIMITED) -> bool:
    if m < 3:
        raise DomainError("cycle length threshold must be at least 3")
    if m > g.n:
        return False
    return _longest_cycle(g, m, budget) >= m


def has_cycle_through_at_least(g: Graph, v: int, m: int, budget: Budget = UNLIMITED) -> bool:
    """Whether some cycle of length ``>= m`` passes through ``v``."""
    adj = g.adj
    if m > g.n:
        return False
    allowed = g.vertex_mask & ~(1 << v)
    closers = adj[v]
    if closers.bit_count() < 2:
        return False

    def dfs(u: int, visited: int, length: int) -> bool:
        budget.check()
        if length >= m and adj[u] >> v & 1:
            return True
        avail = allowed & ~visited
        nbrs = adj[u] & avail
        if not nbrs or length + _component_sizes_bound(adj, nbrs, avail, closers) < m:
            return False
        return any(dfs(w, visited | 1 << w, length + 1) for w in _iter_bits(nbrs))

    return any(dfs(w, (1 << v) | (1 << w), 2) for w in _iter_bits(closers))


# -- counting ----------------------------------------------------------


def count_cycles(g: Graph, m: int, budget: Budget = UNLIMITED) -> int:
    """Number of ``m``-cycles in ``g`` (as unlabelled subgraphs)."""
    if m < 3:
        raise DomainError("cycle length must be at least 3")
    if m > g.n:
        raise DomainError(f"cycle length {m} exceeds vertex count {g.n}")
    adj = g.adj
    total = 0
    for s in range(g.n - m + 1):
        allowed = g.vertex_mask & ~((2 << s) - 1)
        closers = adj[s] & allowed
        if closers.bit_count() < 2:
            continue
        last_layer = closers

        def walk(u: int, visited: int, depth: int) -> int:
            budget.check()
            nbrs = adj[u] & allowed & ~visited
            if depth == m - 1:
                return (nbrs & last_layer).bit_count()
            return sum(walk(w, visited | 1 << w, depth + 1) for w in _iter_bits(nbrs))

        for w in _iter_bits(closers):
            total += walk(w, (1 << s) | (1 << w), 2)
    # Each cycle was traversed once per direction.
    return checked_count(total // 2)


def count_cycles_through(g: Graph, v: int, m: int, budget: Budget = UNLIMITED) -> int:
    """Number of ``m``-cycles containing vertex ``v``."""
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} not in graph of order {g.n}")
    if m < 3 or m > g.n:
        raise DomainError(f"cycle length must lie in 3..{g.n}")
    adj = g.adj
    allowed = g.vertex_mask & ~(1 << v)
    closers = adj[v]

    def walk(u: int, visited: int, depth: int) -> int:
        budget.check()
        nbrs = adj[u] & allowed & ~visited
        if depth == m - 1:
            return (nbrs & closers).bit_count()
        return sum(walk(w, visited | 1 << w, depth + 1) for w in _iter_bits(nbrs))

    total = sum(walk(w, (1 << v) | (1 << w), 2) for w in _iter_bits(closers))
    return checked_count(total // 2)


def count_cliques(g: Graph, s: int, budget: Budget = UNLIMITED) -> int:
    """Number of ``s``-vertex complete subgraphs.

    Uses a pivoted clique tree: every root-to-leaf path with ``h`` held
    vertices and ``p`` pivots stands for ``comb(p, s - h)`` cliques of size
    ``s``, so cliques inside large dense regions are never listed one by one.
    """
    if s < 1:
        raise DomainError("clique size must be at least 1")
    adj = g.adj
    total = 0

    def grow(cand: int, held: int, pivots: int) -> None:
        nonlocal total
        budget.check()
        if held > s:
            return
        if not cand:
            if s - held <= pivots:
                total += comb(pivots, s - held)
            return
        pivot = max(_iter_bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), -u))
        grow(cand & adj[pivot], held, pivots + 1)
        rest = cand & ~adj[pivot] & ~(1 << pivot)
        done = 0
        for v in _iter_bits(rest):
            grow(cand & adj[v] & ~done, held + 1, pivots)
            done |= 1 << v

    grow(g.vertex_mask, 0, 0)
    return checked_count(total)


def oracle_count_cycles(g: Graph, m: int) -> int:
    """Naive cycle count used to cross-check :func:`count_cycles`.

    Tries every injective vertex sequence of length ``m`` and divides the
    number of closed ones by the ``2m`` rotations and reflections.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise DomainError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices")
    if not 3 <= m <= g.n:
        raise DomainError(f"cycle length must lie in 3..{g.n}")
    adj = g.adj
    hits = 0
    for seq in permutations(range(g.n), m):
        if all(adj[seq[i]] >> seq[i + 1] & 1 for i in range(m - 1)) and adj[seq[-1]] >> seq[0] & 1:
            hits += 1
    assert hits % (2 * m) == 0
    return hits // (2 * m)


# -- spanning embeddings -----------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map witnessing ``G ⊆ H``: ``mapping[v]`` is v's image."""

    mapping: tuple[int, ...]

    def is_valid(self, g: Graph, h: Graph) -> bool:
        m = self.mapping
        if len(m) != g.n or len(set(m)) != len(m) or any(not 0 <= x < h.n for x in m):
            return False
        return all(h.has_edge(m[u], m[v]) for u, v in g.edges())


def is_spanning_subgraph(g: Graph, h: Graph, budget: Budget = UNLIMITED) -> Embedding | None:
    """Find a bijection ``V(G) -> V(H)`` carrying edges of G to edges of H."""
    n = g.n
    if n != h.n:
        raise DomainError(f"order mismatch: {n} vs {h.n}")
    if g.num_edges() > h.num_edges():
        return None
    dg = g.degrees()
    dh = h.degrees()
    if any(a > b for a, b in zip(sorted(dg, reverse=True), sorted(dh, reverse=True))):
        return None

    # Place vertices so each new one has as many placed neighbours as possible.
    order: list[int] = []
    placed = 0
    while len(order) < n:
        v = max(
            (u for u in range(n) if not placed >> u & 1),
            key=lambda u: ((g.adj[u] & placed).bit_count(), dg[u], -u),
        )
        order.append(v)
        placed |= 1 << v
    prior = [g.adj[v] & _mask_before(order, i) for i, v in enumerate(order)]

    hadj = h.adj
    fits = [0] * n
    for v in range(n):
        for x in range(n):
            if dh[x] >= dg[v]:
                fits[v] |= 1 << x
    image = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        budget.check()
        v = order[i]
        cand = fits[v] & ~used
        for u in _iter_bits(prior[i]):
            cand &= hadj[image[u]]
        for x in _iter_bits(cand):
            image[v] = x
            if place(i + 1, used | 1 << x):
                return True
        image[v] = -1
        return False

    if not place(0, 0):
        return None
    return Embedding(tuple(image))


def _mask_before(order: list[int], i: int) -> int:
    m = 0
    for v in order[:i]:
        m |= 1 << v
    return m
