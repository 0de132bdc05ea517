"""Theorem verification over exhaustively enumerated small graphs.

Every ``verify_*`` function returns a :class:`TheoremReport`.  Reports are
deterministic: universes come out of the enumerator sorted by canonical
code, per-graph checks are merged back into that order, and timing is kept
out of the serialised report unless explicitly requested.
"""

from __future__ import annotations

import json
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from .budget import UNLIMITED, Budget
from .cycles import circumference, count_cliques, count_cycles, is_spanning_subgraph
from .enumeration import EnumerationFilter, enumerate_graphs
from .errors import BudgetExceeded, DomainError
from .families import FamilySpec, build_family, family_catalog, h_graph
from .formulas import (
    THEOREM,
    TRIVIAL,
    dirac_min_circumference,
    kopylov_max_edges,
    luo_max_cliques,
    turan_extremal_value,
)
from .graph import Graph, canonical_code, complete_graph, graph_from_edges, parse_graph6, write_graph6

SCHEMA = 1

PASS = "pass"
VIOLATION = "violation"
INCONCLUSIVE = "inconclusive"
PARTIAL = "partial"

EXIT_CODES = {PASS: 0, VIOLATION: 2, INCONCLUSIVE: 3, PARTIAL: 3}


@dataclass
class TheoremReport:
    theorem: str
    parameters: dict[str, Any]
    universe_size: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    verdict: str = PASS
    partial: bool = False
    elapsed_seconds: float = 0.0

    def finish(self, started: float, inconclusive: bool = False) -> TheoremReport:
        self.elapsed_seconds = time.perf_counter() - started
        if self.violations:
            self.verdict = VIOLATION
        elif self.partial:
            self.verdict = PARTIAL
        elif inconclusive:
            self.verdict = INCONCLUSIVE
        else:
            self.verdict = PASS
        return self

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        out = {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "parameters": self.parameters,
            "universe_size": self.universe_size,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "details": self.details,
            "verdict": self.verdict,
            "partial": self.partial,
        }
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True, default=_json_default)


def _json_default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# -- sharded per-graph checks ------------------------------------------------


def _run_shard(check: Callable, codes: list[str], extra: Any, deadline: float | None) -> list[Any]:
    budget = Budget(deadline=deadline)
    return [check(parse_graph6(c), extra, budget) for c in codes]


def map_universe(
    check: Callable[[Graph, Any, Budget], Any],
    graphs: list[Graph],
    extra: Any = None,
    *,
    workers: int = 1,
    budget: Budget = UNLIMITED,
) -> tuple[list[Any], bool]:
    """Apply ``check`` to every graph; returns (results in input order, complete).

    Work is split into strata by edge count.  When the budget runs out the
    results of finished strata are kept and the rest are ``None``.
    """
    results: list[Any] = [None] * len(graphs)
    strata: dict[int, list[int]] = defaultdict(list)
    for i, g in enumerate(graphs):
        strata[g.num_edges()].append(i)
    order = sorted(strata)
    if workers <= 1:
        try:
            for e in order:
                for i in strata[e]:
                    results[i] = check(graphs[i], extra, budget)
        except BudgetExceeded:
            return results, False
        return results, True
    codes = [write_graph6(g) for g in graphs]
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {
            e: pool.submit(_run_shard, check, [codes[i] for i in strata[e]], extra, budget.deadline)
            for e in order
        }
        for e in order:
            try:
                part = futures[e].result()
            except BudgetExceeded:
                complete = False
                continue
            for i, r in zip(strata[e], part):
                results[i] = r
    return results, complete


def _universe(flt: EnumerationFilter, workers: int, budget: Budget, source: str | Path | None) -> list[Graph]:
    return enumerate_graphs(flt, workers=workers, source=source, budget=budget)


def _guarded(report: TheoremReport, started: float, body: Callable[[], bool | None]) -> TheoremReport:
    try:
        inconclusive = bool(body())
    except BudgetExceeded:
        report.partial = True
        inconclusive = False
    return report.finish(started, inconclusive)


# -- Dirac -------------------------------------------------------------------


def _dirac_check(g: Graph, _extra: Any, budget: Budget) -> tuple[int, int, int]:
    return g.min_degree(), circumference(g, budget), g.n


def verify_dirac(
    n_max: int, *, workers: int = 1, budget: Budget = UNLIMITED, source: str | Path | None = None
) -> TheoremReport:
    """Every 2-connected graph with minimum degree d has c(G) >= min(n, 2d)."""
    started = time.perf_counter()
    report = TheoremReport("dirac", {"n_max": n_max})

    def body() -> None:
        per_n: dict[str, dict[str, int]] = {}
        report.details["per_n"] = per_n
        for n in range(3, n_max + 1) if source is None else [None]:
            flt = EnumerationFilter(n, require_two_connected=True)
            graphs = _universe(flt, workers, budget, source)
            results, complete = map_universe(_dirac_check, graphs, workers=workers, budget=budget)
            for g, res in zip(graphs, results):
                if res is None:
                    continue
                report.universe_size += 1
                d, c, order = res
                bound = dirac_min_circumference(order, d - 1)
                stats = per_n.setdefault(str(order), {"graphs": 0, "tight": 0})
                stats["graphs"] += 1
                if c < bound:
                    report.violations.append(
                        {"graph6": write_graph6(g), "detail": f"c={c} < min(n, 2*delta)={bound} with delta={d}"}
                    )
                elif c == bound:
                    stats["tight"] += 1
                    if c < order:
                        report.witnesses.append({"graph6": write_graph6(g), "value": c})
            if not complete:
                raise BudgetExceeded("time budget exhausted")

    return _guarded(report, started, body)


# -- Kopylov -----------------------------------------------------------------


def verify_kopylov(
    n_max: int, ell: int, *, workers: int = 1, budget: Budget = UNLIMITED, source: str | Path | None = None
) -> TheoremReport:
    """2-connected graphs on n > ell vertices with c(G) <= ell obey the edge bound.

    Witnesses are the graphs meeting the bound with equality.
    """
    if ell < 4:
        raise DomainError("kopylov verification needs ell >= 4")
    started = time.perf_counter()
    report = TheoremReport("kopylov", {"n_max": n_max, "ell": ell})

    def body() -> None:
        h_attains: dict[str, bool] = {}
        orders = range(ell + 1, n_max + 1) if source is None else [None]
        for n in orders:
            flt = EnumerationFilter(n, require_two_connected=True, max_circumference=ell)
            for g in _universe(flt, workers, budget, source):
                if g.n <= ell:
                    continue
                report.universe_size += 1
                bound = kopylov_max_edges(g.n, ell)
                e = g.num_edges()
                if e > bound:
                    report.violations.append({"graph6": write_graph6(g), "detail": f"e={e} > bound={bound}"})
                elif e == bound:
                    report.witnesses.append({"graph6": write_graph6(g), "value": e})
        for n in range(ell + 1, n_max + 1):
            h_code = canonical_code(h_graph(n, ell), cap=n).decode("ascii")
            h_attains[str(n)] = any(w["graph6"] == h_code for w in report.witnesses)
        report.details["h_graph_among_witnesses"] = h_attains
        report.details["bounds"] = {str(n): kopylov_max_edges(n, ell) for n in range(ell + 1, n_max + 1)}

    return _guarded(report, started, body)


# -- stability of Dirac's theorem -----------------------------------------


@dataclass(frozen=True)
class _StabilityHosts:
    k: int
    n: int
    embed_odd: tuple[tuple[str, str], ...]
    iso_odd: frozenset[bytes]
    embed_even: tuple[tuple[str, str], ...]
    iso_even: frozenset[bytes]


def _stability_hosts(k: int, n: int) -> _StabilityHosts:
    embed_odd: list[tuple[str, str]] = []
    iso_odd: set[bytes] = set()
    embed_even: list[tuple[str, str]] = []
    iso_even: set[bytes] = set()
    if n >= 2 * k + 1:
        embed_odd.append((f"H({n},{2 * k + 1})", write_graph6(h_graph(n, 2 * k + 1))))
    if n >= 2 * k:
        embed_even.append((f"H({n},{2 * k})", write_graph6(h_graph(n, 2 * k))))
    if n >= 2 * k + 1:
        for spec in family_catalog(n, k):
            g, _ = build_family(spec)
            if spec.family == "H":
                continue
            if spec.family == "H1":
                iso_odd.add(canonical_code(g, cap=n))
            elif spec.family == "H2":
                iso_even.add(canonical_code(g, cap=n))
            else:
                embed_odd.append((spec.label(), write_graph6(g)))
    else:
        # n = 2k: only the H2 members can occur (n = b(k-1) + 2 with b = 2).
        if (n - 2) % (k - 1) == 0 and (n - 2) // (k - 1) >= 2:
            for variant in ("joined", "nonjoined"):
                g, _ = build_family(FamilySpec("H2", n, k=k, b=(n - 2) // (k - 1), variant=variant))
                iso_even.add(canonical_code(g, cap=n))
    return _StabilityHosts(k, n, tuple(embed_odd), frozenset(iso_odd), tuple(embed_even), frozenset(iso_even))


def classify_stability(g: Graph, k: int, hosts: _StabilityHosts | None = None, budget: Budget = UNLIMITED) -> str | None:
    """Name the stability clause covering ``g``, or ``None`` if none applies.

    ``g`` is assumed 2-connected with minimum degree ``k``.
    """
    if hosts is None:
        hosts = _stability_hosts(k, g.n)
    c = circumference(g, budget)
    if c >= 2 * k + 2:
        return "c>=2k+2"
    if c == 2 * k + 1:
        for label, host in hosts.embed_odd:
            if is_spanning_subgraph(g, parse_graph6(host), budget) is not None:
                return f"subgraph of {label}"
        if canonical_code(g, cap=g.n) in hosts.iso_odd:
            return "member of H1"
        return None
    if c == 2 * k:
        for label, host in hosts.embed_even:
            if is_spanning_subgraph(g, parse_graph6(host), budget) is not None:
                return f"subgraph of {label}"
        if canonical_code(g, cap=g.n) in hosts.iso_even:
            return "member of H2"
    return None


def _stability_check(g: Graph, hosts: _StabilityHosts, budget: Budget) -> str | None:
    return classify_stability(g, hosts.k, hosts, budget)


def verify_stability(
    k: int, n: int, *, workers: int = 1, budget: Budget = UNLIMITED, source: str | Path | None = None
) -> TheoremReport:
    """Every 2-connected graph with minimum degree k, n >= c(G) + 1 and
    c(G) <= 2k + 1 falls into one of the stability clauses."""
    if k < 2:
        raise DomainError("stability verification needs k >= 2")
    if n < 3:
        raise DomainError("stability verification needs n >= 3")
    started = time.perf_counter()
    report = TheoremReport("stability", {"k": k, "n": n})

    def body() -> None:
        max_c = min(2 * k + 1, n - 1)
        flt = EnumerationFilter(n, min_degree=k, require_two_connected=True, max_circumference=max_c)
        universe = _universe(flt, workers, budget, source)
        exact = [g for g in universe if g.min_degree() == k]
        report.details["universe_min_degree_at_least_k"] = len(universe)
        report.universe_size = len(exact)
        hosts = _stability_hosts(k, n)
        results, complete = map_universe(_stability_check, exact, hosts, workers=workers, budget=budget)
        clauses: Counter[str] = Counter()
        for g, clause in zip(exact, results):
            code = write_graph6(g)
            if clause is None:
                if not complete:
                    continue
                report.violations.append(
                    {"graph6": code, "detail": f"c={circumference(g)} matches no stability clause"}
                )
            else:
                clauses[clause] += 1
                report.witnesses.append({"graph6": code, "value": clause})
        report.details["clauses"] = dict(sorted(clauses.items()))
        if not complete:
            raise BudgetExceeded("time budget exhausted")

    return _guarded(report, started, body)


# -- generalized Turán numbers -------------------------------------------------


@dataclass(frozen=True)
class TuranResult:
    value: int
    witnesses: tuple[str, ...]
    universe_size: int


def _cycle_count_check(g: Graph, m: int, budget: Budget) -> int:
    return count_cycles(g, m, budget) if m <= g.n else 0


def compute_generalized_turan(
    n: int, m: int, ell: int, *, workers: int = 1, budget: Budget = UNLIMITED
) -> TuranResult:
    """Exact maximum number of m-cycles over n-vertex graphs with c(G) <= ell.

    All graphs count, connected or not; the witnesses are the canonical
    graph6 strings of every maximiser.
    """
    if m < 3:
        raise DomainError("cycle length must be at least 3")
    universe = enumerate_graphs(EnumerationFilter(n, max_circumference=ell), workers=workers, budget=budget)
    counts, complete = map_universe(_cycle_count_check, universe, m, workers=workers, budget=budget)
    if not complete:
        raise BudgetExceeded("time budget exhausted")
    best = max(counts, default=0)
    witnesses = tuple(write_graph6(g) for g, c in zip(universe, counts) if c == best)
    return TuranResult(best, witnesses, len(universe))


def turan_report(n: int, m: int, ell: int, *, workers: int = 1, budget: Budget = UNLIMITED) -> TheoremReport:
    """Compare the exact extremal count with the predicted closed form.

    Below the proven order thresholds a disagreement is inconclusive, never
    a violation.
    """
    started = time.perf_counter()
    report = TheoremReport("turan", {"n": n, "m": m, "ell": ell})

    def body() -> bool:
        result = compute_generalized_turan(n, m, ell, workers=workers, budget=budget)
        report.universe_size = result.universe_size
        report.witnesses = [{"graph6": w, "value": result.value} for w in result.witnesses]
        report.details["exact_value"] = result.value
        if n < ell and m <= ell:
            report.details["predicted"] = None
            report.details["status"] = "no prediction for n < ell"
            return True
        predicted = turan_extremal_value(n, m, ell)
        report.details.update(
            {
                "predicted": predicted.value,
                "basis": predicted.basis,
                "threshold": predicted.threshold,
                "delta": result.value - predicted.value,
            }
        )
        if result.value == predicted.value:
            report.details["status"] = "match"
            return False
        above = predicted.threshold is not None and n >= predicted.threshold
        if predicted.basis in (THEOREM, TRIVIAL) and (above or predicted.basis == TRIVIAL):
            report.violations.append(
                {"graph6": result.witnesses[0], "detail": f"exact {result.value} != predicted {predicted.value}"}
            )
            return False
        report.details["status"] = "inconclusive (below threshold)"
        return True

    return _guarded(report, started, body)


def explore_conjecture(n: int, m: int, ell: int, *, workers: int = 1, budget: Budget = UNLIMITED) -> TheoremReport:
    """Record one data point comparing ex(n, C_m, long cycles) with C_m(H(n, ell))."""
    if n < ell:
        raise DomainError("conjecture exploration needs n >= ell")
    started = time.perf_counter()
    report = TheoremReport("conjecture", {"n": n, "m": m, "ell": ell})

    def body() -> bool:
        result = compute_generalized_turan(n, m, ell, workers=workers, budget=budget)
        h_count = count_cycles(h_graph(n, ell), m) if m <= n else 0
        h_code = canonical_code(h_graph(n, ell), cap=n).decode("ascii")
        report.universe_size = result.universe_size
        report.witnesses = [{"graph6": w, "value": result.value} for w in result.witnesses]
        report.details.update(
            {
                "exact_value": result.value,
                "h_graph_count": h_count,
                "delta": result.value - h_count,
                "h_graph_is_maximiser": h_code in result.witnesses,
                "status": "match" if result.value == h_count else "mismatch (data only)",
            }
        )
        if m in (4, 5) and m <= ell:
            predicted = turan_extremal_value(n, m, ell)
            report.details["theorem_value"] = predicted.value
        return result.value != h_count

    return _guarded(report, started, body)


# -- Luo -------------------------------------------------------------------


def luo_chain(n: int, ell: int) -> Graph:
    """Cliques ``K_ell`` glued in a path at cut vertices, ``n`` vertices total.

    When ``ell - 1`` does not divide ``n - 1`` the last block is a smaller
    clique.
    """
    if n < 1 or ell < 2:
        raise DomainError("chain needs n >= 1 and ell >= 2")
    edges = []
    start = 0
    while start < n - 1:
        end = min(start + ell - 1, n - 1)
        block = range(start, end + 1)
        edges += [(u, v) for u in block for v in block if u < v]
        start = end
    return graph_from_edges(n, edges)


def _clique_check(g: Graph, s: int, budget: Budget) -> int:
    return count_cliques(g, s, budget)


def _blocks_all_complete(g: Graph, ell: int) -> bool:
    bl, _ = g.blocks()
    return all(len(b) == ell and g.induced(b) == complete_graph(ell) for b in bl)


def verify_luo(
    n_max: int, ell: int, s: int, *, workers: int = 1, budget: Budget = UNLIMITED, source: str | Path | None = None
) -> TheoremReport:
    """Graphs with c(G) <= ell have at most (n-1)/(ell-1) * C(ell, s) copies of K_s."""
    if ell < 3:
        raise DomainError("luo verification needs ell >= 3")
    if not 2 <= s <= ell:
        raise DomainError("luo verification needs 2 <= s <= ell")
    started = time.perf_counter()
    report = TheoremReport("luo", {"n_max": n_max, "ell": ell, "s": s})

    def body() -> None:
        chains: dict[str, dict[str, Any]] = {}
        orders = range(2, n_max + 1) if source is None else [None]
        for n in orders:
            flt = EnumerationFilter(n, max_circumference=ell)
            graphs = _universe(flt, workers, budget, source)
            counts, complete = map_universe(_clique_check, graphs, s, workers=workers, budget=budget)
            for g, count in zip(graphs, counts):
                if count is None:
                    continue
                report.universe_size += 1
                bound = luo_max_cliques(g.n, ell, s)
                code = write_graph6(g)
                if count > bound.value:
                    report.violations.append({"graph6": code, "detail": f"K_{s} count {count} > {bound.value}"})
                elif count == bound.value and count > 0:
                    ok = bound.equality_possible and _blocks_all_complete(g, ell)
                    report.witnesses.append({"graph6": code, "value": count})
                    if not ok:
                        report.violations.append(
                            {"graph6": code, "detail": "equality without every block being K_ell"}
                        )
            if not complete:
                raise BudgetExceeded("time budget exhausted")
        for n in range(max(2, ell), n_max + 1):
            chain = luo_chain(n, ell)
            bound = luo_max_cliques(n, ell, s)
            count = count_cliques(chain, s)
            chains[str(n)] = {
                "count": count,
                "bound": str(bound.value),
                "attains": count == bound.value,
                "equality_possible": bound.equality_possible,
            }
        report.details["chains"] = chains

    return _guarded(report, started, body)
