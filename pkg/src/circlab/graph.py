"""Immutable small simple graphs stored as per-vertex neighbour bitsets.

Vertex ``v``'s neighbourhood is the Python int ``adj[v]``; bit ``u`` is set
iff ``uv`` is an edge.  Graphs are values: every operation that "changes" a
graph returns a new one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError, Graph6Error

VERTEX_CAP = 64
MAX_VERTEX_CAP = 128
ENUMERATION_CAP = 10

CanonicalCode = bytes


def _check_cap(n: int, cap: int) -> None:
    if cap > MAX_VERTEX_CAP:
        raise CapacityError(f"vertex cap {cap} exceeds the hard maximum {MAX_VERTEX_CAP}")
    if n > cap:
        raise CapacityError(f"{n} vertices exceeds the vertex cap {cap}")


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        _check_cap(self.n, MAX_VERTEX_CAP)
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"vertex {v} has neighbours outside range({self.n})")
            if row >> v & 1:
                raise DomainError(f"loop at vertex {v}")
            for u in _iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- basic queries -------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} not in graph of order {self.n}")
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        if self.n == 0:
            raise DomainError("minimum degree of the empty graph is undefined")
        return min(row.bit_count() for row in self.adj)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    # -- derived graphs ------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return graph_from_edges(self.n, self.edges() + list(edges), cap=MAX_VERTEX_CAP)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise DomainError(f"edge {u}{v} not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("relabelling must be a permutation of range(n)")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for u in _iter_bits(row):
                new_row |= 1 << perm[u]
            adj[perm[v]] = new_row
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in _iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph._trusted(len(keep), tuple(adj))

    def component_mask(self, v: int, within: int | None = None) -> int:
        """Bitmask of the component of ``v`` in the subgraph induced by ``within``."""
        if within is None:
            within = self.vertex_mask
        seen = frontier = 1 << v
        adj = self.adj
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= adj[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        rest = self.vertex_mask
        out = []
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = self.component_mask(v)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.n == 0 or self.component_mask(0) == self.vertex_mask

    def is_two_connected(self) -> bool:
        return is_two_connected(self)

    def blocks(self) -> tuple[list[frozenset[int]], list[int]]:
        return blocks(self)

    def canonical_code(self, cap: int = ENUMERATION_CAP) -> CanonicalCode:
        return canonical_code(self, cap)

    def graph6(self) -> str:
        return write_graph6(self)


# -- constructors ------------------------------------------------------


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int = VERTEX_CAP) -> Graph:
    """Build a graph on ``range(n)``; repeated pairs are merged."""
    if n < 0:
        raise DomainError("vertex count must be non-negative")
    _check_cap(n, cap)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u}, {v}) has an endpoint outside range({n})")
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return graph_from_edges(n, ())


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}``: vertex 0 is the centre."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph, cap: int = VERTEX_CAP) -> Graph:
    """``G ∪ H`` with H's vertices shifted by ``g.n``."""
    _check_cap(g.n + h.n, cap)
    shift = g.n
    return Graph._trusted(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph, cap: int = VERTEX_CAP) -> Graph:
    """``G + H``: the disjoint union plus every edge between the two sides."""
    _check_cap(g.n + h.n, cap)
    shift = g.n
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << shift
    adj = tuple(row | h_all for row in g.adj) + tuple((row << shift) | g_all for row in h.adj)
    return Graph._trusted(g.n + h.n, adj)


def union_all(graphs: Iterable[Graph], cap: int = VERTEX_CAP) -> Graph:
    out = empty_graph(0)
    for g in graphs:
        out = disjoint_union(out, g, cap)
    return out


# -- structural predicates ---------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return g.min_degree()


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    n = g.n
    if n < 3:
        return False
    full = g.vertex_mask
    if g.component_mask(0) != full:
        return False
    for v in range(n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if g.component_mask(start, rest) != rest:
            return False
    return True


def blocks(g: Graph) -> tuple[list[frozenset[int]], list[int]]:
    """Block-cut decomposition.

    Returns ``(blocks, cut_vertices)``.  Blocks are vertex sets sorted by
    their smallest vertex; an isolated vertex forms a block on its own and a
    bridge forms a two-vertex block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            disc[root] = timer
            timer += 1
            found.append(frozenset((root,)))
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    found.sort(key=lambda b: (min(b), sorted(b)))
    return found, sorted(cuts)


# -- canonical form ----------------------------------------------------


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split pieces are ordered by neighbour count, so the result commutes with
    relabelling the graph.
    """
    queue = deque(_mask(c) for c in cells)
    singletons = sum(1 for c in cells if len(c) == 1)
    n_cells = len(cells)
    total = sum(len(c) for c in cells)
    while queue and singletons < total:
        w = queue.popleft()
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
                continue
            for key in sorted(buckets):
                piece = buckets[key]
                new_cells.append(piece)
                queue.append(_mask(piece))
                if len(piece) == 1:
                    singletons += 1
        if len(new_cells) != n_cells:
            cells = new_cells
            n_cells = len(cells)
    return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _canonical_order(g: Graph) -> list[int]:
    adj = g.adj
    n = g.n
    if n <= 1:
        return list(range(n))
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        reps: list[int] = []
        for v in cell:
            # Swapping twins is an automorphism that fixes the current
            # partition, so their subtrees yield identical leaf codes.
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue
            reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search(start)
    return best_order


def canonical_form(g: Graph, cap: int = ENUMERATION_CAP) -> Graph:
    """Isomorphism-class representative: the relabelling with the least code."""
    if g.n > cap:
        raise CapacityError(f"canonical form requested for {g.n} vertices; enumeration cap is {cap}")
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_code(g: Graph, cap: int = ENUMERATION_CAP) -> CanonicalCode:
    """Bytes equal for two graphs iff they are isomorphic.

    The code is the graph6 string of :func:`canonical_form`.
    """
    return write_graph6(canonical_form(g, cap)).encode("ascii")


# -- graph6 ------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr((n >> s & 63) + 63) for s in (12, 6, 0)]
    else:  # pragma: no cover - beyond MAX_VERTEX_CAP
        raise CapacityError("graph too large for graph6")
    acc = 0
    width = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes, cap: int = MAX_VERTEX_CAP) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        text = text[base:]
    if not text:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", base + i)
    values = [ord(ch) - 63 for ch in text]
    if values[0] != 63:
        n, pos = values[0], 1
    elif len(values) >= 2 and values[1] == 63:
        if len(values) < 8:
            raise Graph6Error("truncated 8-byte size field", base)
        n = 0
        for x in values[2:8]:
            n = n << 6 | x
        pos = 8
    else:
        if len(values) < 4:
            raise Graph6Error("truncated 4-byte size field", base)
        n = values[1] << 12 | values[2] << 6 | values[3]
        pos = 4
    _check_cap(n, cap)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(values) - pos != expected:
        raise Graph6Error(
            f"graph6 body for n={n} needs {expected} characters, found {len(values) - pos}", base + pos
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = values[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if values[-1] & ((1 << pad) - 1):
            raise Graph6Error("padding bits set beyond the upper triangle", base + len(values) - 1)
    return Graph._trusted(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    """One graph per non-blank line."""
    out = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_graph6(line))
    return out
