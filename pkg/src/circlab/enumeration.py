"""Exhaustive generation of small graphs up to isomorphism.

Graphs on ``n`` vertices are grown from the representatives on ``n - 1``
vertices by adding one vertex.  Every graph arises this way from the graph
left after deleting a vertex of minimum degree, so the augmentation only
tries neighbour sets that keep the new vertex at minimum degree.
Circumference ``<= L`` is inherited by subgraphs, so it is enforced at every
level; the remaining filters apply to the final level only.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator

from .budget import UNLIMITED, Budget
from .cycles import has_cycle_at_least, has_cycle_through_at_least
from .errors import CapacityError, DomainError
from .graph import (
    ENUMERATION_CAP,
    Graph,
    canonical_code,
    empty_graph,
    is_two_connected,
    parse_graph6,
)

NAIVE_ORACLE_MAX = 6


def enumeration_cap() -> int:
    """The enumeration cap, overridable through ``CIRCLAB_CAP``."""
    raw = os.environ.get("CIRCLAB_CAP")
    if raw is None:
        return ENUMERATION_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"CIRCLAB_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise DomainError("CIRCLAB_CAP must be positive")
    return cap


@dataclass(frozen=True)
class EnumerationFilter:
    n: int | None
    min_degree: int | None = None
    require_two_connected: bool = False
    max_circumference: int | None = None
    connected_only: bool = False
    cap: int | None = None

    def effective_cap(self) -> int:
        return enumeration_cap() if self.cap is None else self.cap

    def accepts(self, g: Graph, budget: Budget = UNLIMITED) -> bool:
        """Check every filter condition on a labelled graph."""
        if self.n is not None and g.n != self.n:
            return False
        if self.min_degree is not None and g.n and g.min_degree() < self.min_degree:
            return False
        if self.require_two_connected and not is_two_connected(g):
            return False
        if self.connected_only and not g.is_connected():
            return False
        if self.max_circumference is not None and self.max_circumference + 1 >= 3:
            if has_cycle_at_least(g, self.max_circumference + 1, budget):
                return False
        return True


def _augmentations(parent: Graph, min_new_degree: int) -> Iterator[Graph]:
    """Children of ``parent`` whose new vertex has minimum degree."""
    n = parent.n
    degs = parent.degrees()
    v_bit = 1 << n
    for d in range(min_new_degree, n + 1):
        if any(x < d - 1 for x in degs):
            break
        forced = [v for v in range(n) if degs[v] == d - 1]
        free = [v for v in range(n) if degs[v] >= d]
        need = d - len(forced)
        if need < 0 or need > len(free):
            continue
        base = 0
        for v in forced:
            base |= 1 << v
        for extra in combinations(free, need):
            mask = base
            for v in extra:
                mask |= 1 << v
            adj = tuple(row | v_bit if mask >> i & 1 else row for i, row in enumerate(parent.adj)) + (mask,)
            yield Graph._trusted(n + 1, adj)


def _grow_chunk(
    parents: list[str],
    max_circumference: int | None,
    final: EnumerationFilter | None,
    deadline: float | None,
) -> list[bytes]:
    """Canonical codes of accepted children of the given parents."""
    budget = Budget(deadline=deadline)
    min_new = 0
    if final is not None and final.min_degree is not None:
        min_new = final.min_degree
    codes: set[bytes] = set()
    for text in parents:
        parent = parse_graph6(text)
        for child in _augmentations(parent, min_new):
            budget.check()
            if max_circumference is not None and has_cycle_through_at_least(
                child, child.n - 1, max_circumference + 1, budget
            ):
                continue
            if final is not None:
                if final.require_two_connected and not is_two_connected(child):
                    continue
                if final.connected_only and not child.is_connected():
                    continue
                if final.min_degree is not None and child.min_degree() < final.min_degree:
                    continue
            codes.add(canonical_code(child, cap=child.n))
    return sorted(codes)


def _grow(
    parents: list[str],
    max_circumference: int | None,
    final: EnumerationFilter | None,
    workers: int,
    budget: Budget,
) -> list[str]:
    if workers <= 1 or len(parents) < 2 * workers:
        codes = _grow_chunk(parents, max_circumference, final, budget.deadline)
    else:
        # Interleaved shards balance the cheap sparse parents with dense ones.
        shards = [parents[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _grow_chunk,
                shards,
                [max_circumference] * workers,
                [final] * workers,
                [budget.deadline] * workers,
            )
            merged: set[bytes] = set()
            for part in parts:
                merged.update(part)
        codes = sorted(merged)
    return [c.decode("ascii") for c in codes]


# Completed levels only; a level interrupted by its budget is not stored.
_LEVELS: dict[tuple[int, int | None], tuple[str, ...]] = {}


def _hereditary_level(
    n: int, max_circumference: int | None, workers: int, budget: Budget = UNLIMITED
) -> tuple[str, ...]:
    """Canonical graph6 codes of all n-vertex graphs with circumference <= L."""
    key = (n, max_circumference)
    if key in _LEVELS:
        return _LEVELS[key]
    if n <= 1:
        level = (canonical_code(empty_graph(n)).decode("ascii"),)
    else:
        parents = list(_hereditary_level(n - 1, max_circumference, workers, budget))
        level = tuple(_grow(parents, max_circumference, None, workers, budget))
    _LEVELS[key] = level
    return level


def enumerate_graphs(
    flt: EnumerationFilter,
    *,
    workers: int = 1,
    source: str | Path | None = None,
    budget: Budget = UNLIMITED,
) -> list[Graph]:
    """One representative per isomorphism class satisfying ``flt``.

    Generated universes come back in canonical form, sorted by canonical
    code.  With ``source`` the graphs are read from a graph6 file (one per
    line) instead, filtered with the same conditions and kept in file order.
    """
    if source is not None:
        return list(_filter_external(flt, source, budget))
    if flt.n is None:
        raise DomainError("generated universes need a vertex count")
    n = flt.n
    cap = flt.effective_cap()
    if n > cap:
        raise CapacityError(f"enumeration of {n}-vertex graphs exceeds the cap {cap}")
    if n < 0:
        raise DomainError("vertex count must be non-negative")
    if n <= 1:
        g = empty_graph(n)
        return [g] if flt.accepts(g) else []
    max_c = flt.max_circumference
    if max_c is not None and max_c < 3:
        max_c = 2
    parents = list(_hereditary_level(n - 1, max_c, workers, budget))
    codes = _grow(parents, max_c, flt, workers, budget)
    return [parse_graph6(c) for c in codes]


def _filter_external(flt: EnumerationFilter, source: str | Path, budget: Budget) -> Iterator[Graph]:
    try:
        fh = open(source, encoding="ascii")
    except OSError as exc:
        raise DomainError(f"cannot read universe file {source}: {exc}") from exc
    with fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            g = parse_graph6(line)
            budget.check()
            if flt.accepts(g, budget):
                yield g


def graphs_up_to(n_max: int, n_min: int = 1, **kwargs) -> Iterator[Graph]:
    """All generated graphs with ``n_min <= n <= n_max`` satisfying the filter."""
    workers = kwargs.pop("workers", 1)
    budget = kwargs.pop("budget", UNLIMITED)
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(EnumerationFilter(n, **kwargs), workers=workers, budget=budget)


# -- naive oracle --------------------------------------------------------


def naive_isomorphism_classes(n: int) -> list[Graph]:
    """Representatives of every isomorphism class by brute force.

    Each of the ``2**C(n,2)`` labelled graphs is mapped to the least edge
    mask over all ``n!`` relabellings; distinct minima are the classes.
    Independent of :func:`canonical_code`; only feasible for ``n <= 6``.
    """
    import numpy as np

    if n > NAIVE_ORACLE_MAX:
        raise CapacityError(f"naive oracle limited to n <= {NAIVE_ORACLE_MAX}")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    best = masks.copy()
    for perm in permutations(range(n)):
        image = np.zeros_like(masks)
        for e, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            target = index[(a, b) if a < b else (b, a)]
            image |= ((masks >> e) & 1) << target
        np.minimum(best, image, out=best)
    reps = []
    for m in np.unique(best).tolist():
        edges = [pairs[e] for e in range(len(pairs)) if m >> e & 1]
        adj = [0] * n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        reps.append(Graph._trusted(n, tuple(adj)))
    return reps


def count_classes(graphs: Iterable[Graph]) -> int:
    return len({canonical_code(g, cap=max(g.n, 1)) for g in graphs})
