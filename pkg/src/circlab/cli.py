"""Command-line front end: ``circlab <subcommand> [flags]``.

Exit status: 0 pass, 2 violation, 3 inconclusive or partial (time budget
exhausted), 64 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import formulas
from .budget import UNLIMITED, Budget
from .cycles import circumference, count_cliques, count_cycles
from .errors import BudgetExceeded, CirclabError
from .families import FAMILIES, FamilySpec, build_family
from .graph import Graph, parse_graph6, read_graph6_file, write_graph6
from .harness import (
    SCHEMA,
    explore_conjecture,
    turan_report,
    verify_dirac,
    verify_kopylov,
    verify_luo,
    verify_stability,
)

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 64

THEOREMS = ("dirac", "kopylov", "stability", "luo")
FORMULAS = (
    "dirac",
    "kopylov",
    "fkv",
    "luo",
    "c5_h",
    "c4_h",
    "c5_family",
    "c5_reference",
    "c5_low_degree",
    "c4_low_degree",
    "turan",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    params: dict[str, Any] = field(default_factory=dict)
    input: Path | None = None
    output: Path | None = None
    workers: int = 1
    time_budget: float | None = None
    cap: int | None = None

    def validate(self) -> None:
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise UsageError("--time-budget must be positive")
        if self.cap is not None and self.cap < 1:
            raise UsageError("--cap must be positive")
        for key in ("n", "k", "ell", "s", "m", "n_max", "b1", "b2", "b", "t"):
            value = self.params.get(key)
            if value is not None and value < 0:
                raise UsageError(f"--{key.replace('_', '-')} must be non-negative")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for name in ("n", "k", "ell", "s", "m", "b1", "b2", "b", "t", "n-max"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--variant")
    common.add_argument("--input", type=Path, help="graph6 file, one graph per line")
    common.add_argument("--output", type=Path, help="also write the JSON result here")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--time-budget", type=float, help="seconds")
    common.add_argument("--cap", type=int, help="enumeration cap (overrides CIRCLAB_CAP)")

    parser = _Parser(prog="circlab", description="Exact circumference and extremal cycle-count workbench.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    sub.add_parser("construct", parents=[common], help="build a family member, print graph6")
    p = sub.add_parser("analyze", parents=[common], help="invariants of graph6 inputs")
    p.add_argument("graph6", nargs="*", help="graph6 strings (or use --input)")
    p = sub.add_parser("bounds", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("formula", choices=FORMULAS)
    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem check")
    p.add_argument("theorem", choices=THEOREMS)
    sub.add_parser("turan", parents=[common], help="exact generalized Turan number")
    sub.add_parser("conjecture", parents=[common], help="record a conjecture data point")
    return parser


def parse_args(argv: Sequence[str] | None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    params = {
        key: getattr(ns, key)
        for key in ("n", "k", "ell", "s", "m", "n_max", "b1", "b2", "b", "t", "family", "variant")
    }
    for extra in ("graph6", "formula", "theorem"):
        if hasattr(ns, extra):
            params[extra] = getattr(ns, extra)
    return RunConfig(ns.subcommand, params, ns.input, ns.output, ns.workers, ns.time_budget, ns.cap)


def _need(params: dict[str, Any], *names: str) -> list[int]:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return [params[n] for n in names]


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=_default)


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(type(obj).__name__)


# -- subcommands -------------------------------------------------------------


def _family_spec(params: dict[str, Any]) -> FamilySpec:
    (family,) = _need(params, "family")
    (n,) = _need(params, "n")
    fields = {key: params[key] for key in ("k", "ell", "b1", "b2", "b", "t") if params.get(key) is not None}
    if params.get("variant"):
        fields["variant"] = params["variant"]
    if family == "H" and "ell" not in fields:
        raise UsageError("family H needs --ell")
    if family in ("H1", "H2", "K2_Kk_bCliques") and "k" not in fields:
        raise UsageError(f"family {family} needs --k")
    if family == "H1" and "variant" not in fields:
        fields["variant"] = "G"
    if family == "H2" and "variant" not in fields:
        fields["variant"] = "joined"
    if family == "H":
        fields.setdefault("k", fields["ell"] // 2)
    return FamilySpec(family, n, **fields)


def _construct(cfg: RunConfig) -> tuple[int, str, dict[str, Any]]:
    spec = _family_spec(cfg.params)
    g, meta = build_family(spec)
    code = write_graph6(g)
    payload = {
        "schema": SCHEMA,
        "spec": spec.to_dict(),
        "graph6": code,
        "expected_circumference": meta.expected_circumference,
        "min_degree": meta.expected_min_degree,
    }
    return EXIT_OK, code, payload


def _analyze_one(g: Graph, code: str, params: dict[str, Any], budget: Budget) -> dict[str, Any]:
    ms = [params["m"]] if params.get("m") is not None else list(range(3, min(g.n, 6) + 1))
    ss = [params["s"]] if params.get("s") is not None else list(range(2, min(g.n, 4) + 1))
    return {
        "graph6": code,
        "n": g.n,
        "edges": g.num_edges(),
        "circumference": circumference(g, budget),
        "min_degree": g.min_degree() if g.n else 0,
        "two_connected": g.is_two_connected(),
        "cycle_counts": {str(m): count_cycles(g, m, budget) if 3 <= m <= g.n else 0 for m in ms},
        "clique_counts": {str(s): count_cliques(g, s, budget) for s in ss if s >= 1},
    }


def _analyze(cfg: RunConfig, budget: Budget) -> tuple[int, str, dict[str, Any]]:
    codes = list(cfg.params.get("graph6") or [])
    graphs = [(parse_graph6(c), c) for c in codes]
    if cfg.input is not None:
        graphs += [(g, write_graph6(g)) for g in read_graph6_file(cfg.input)]
    if not graphs:
        raise UsageError("analyze needs graph6 strings or --input")
    m = cfg.params.get("m")
    if m is not None and m < 3:
        raise UsageError("--m must be at least 3")
    s = cfg.params.get("s")
    if s is not None and s < 1:
        raise UsageError("--s must be at least 1")
    results = [_analyze_one(g, code, cfg.params, budget) for g, code in graphs]
    payload = {"schema": SCHEMA, "graphs": results}
    text = _dumps(payload)
    return EXIT_OK, text, payload


def _bounds(cfg: RunConfig) -> tuple[int, str, dict[str, Any]]:
    p = cfg.params
    name = p["formula"]
    exact: Fraction | None = None
    if name == "dirac":
        n, k = _need(p, "n", "k")
        inputs, value = {"n": n, "k": k}, formulas.dirac_min_circumference(n, k)
    elif name == "kopylov":
        n, ell = _need(p, "n", "ell")
        inputs, value = {"n": n, "ell": ell}, formulas.kopylov_max_edges(n, ell)
    elif name == "fkv":
        n, ell = _need(p, "n", "ell")
        inputs, value = {"n": n, "ell": ell}, formulas.fkv_edge_threshold(n, ell)
    elif name == "luo":
        n, ell, s = _need(p, "n", "ell", "s")
        bound = formulas.luo_max_cliques(n, ell, s)
        inputs, value, exact = {"n": n, "ell": ell, "s": s}, bound.integer_bound, bound.value
    elif name == "c5_h":
        n, ell = _need(p, "n", "ell")
        inputs, value = {"n": n, "ell": ell}, formulas.c5_in_h(n, ell)
    elif name == "c4_h":
        n, ell = _need(p, "n", "ell")
        inputs, value = {"n": n, "ell": ell}, formulas.c4_closed_form_h(n, ell)
    elif name in ("c5_family", "c5_reference"):
        spec = _family_spec(p)
        inputs = spec.to_dict()
        fn = formulas.c5_closed_form if name == "c5_family" else formulas.reference_c5_expression
        value = fn(spec)
    elif name == "c5_low_degree":
        n, k = _need(p, "n", "k")
        bound = formulas.low_degree_c5_bound(n, k)
        inputs, value, exact = {"n": n, "k": k}, bound.floor, bound.value
    elif name == "c4_low_degree":
        n, k = _need(p, "n", "k")
        inputs, value = {"n": n, "k": k}, formulas.low_degree_c4_bound(n, k)
    else:
        n, m, ell = _need(p, "n", "m", "ell")
        ev = formulas.turan_extremal_value(n, m, ell)
        inputs, value = {"n": n, "m": m, "ell": ell}, ev.value
        inputs["basis"] = ev.basis
    payload: dict[str, Any] = {"schema": SCHEMA, "formula": name, "inputs": inputs, "value": value}
    if exact is not None:
        payload["exact_rational"] = str(exact)
    return EXIT_OK, _dumps(payload), payload


def _verify(cfg: RunConfig, budget: Budget):
    p = cfg.params
    kw = {"workers": cfg.workers, "budget": budget, "source": cfg.input}
    theorem = p["theorem"]
    if theorem == "dirac":
        (n_max,) = _need(p, "n_max")
        return verify_dirac(n_max, **kw)
    if theorem == "kopylov":
        n_max, ell = _need(p, "n_max", "ell")
        return verify_kopylov(n_max, ell, **kw)
    if theorem == "stability":
        k, n = _need(p, "k", "n")
        return verify_stability(k, n, **kw)
    n_max, ell, s = _need(p, "n_max", "ell", "s")
    return verify_luo(n_max, ell, s, **kw)


def _precheck_cap(cfg: RunConfig) -> None:
    # Fail on oversized universes before any work starts.
    from .enumeration import enumeration_cap

    cap = enumeration_cap()
    if cfg.input is not None:
        return
    n = cfg.params.get("n_max") if cfg.subcommand == "verify" and cfg.params.get("theorem") != "stability" else None
    if n is None and cfg.subcommand in ("verify", "turan", "conjecture"):
        n = cfg.params.get("n")
    if n is not None and n > cap:
        raise UsageError(f"n = {n} exceeds the enumeration cap {cap}; pass --cap or supply --input")


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one configured command; returns (exit status, stdout text)."""
    cfg.validate()
    if cfg.cap is not None:
        os.environ["CIRCLAB_CAP"] = str(cfg.cap)
    _precheck_cap(cfg)
    budget = UNLIMITED if cfg.time_budget is None else Budget(cfg.time_budget)
    if cfg.subcommand == "construct":
        status, text, payload = _construct(cfg)
        if cfg.output is not None:
            cfg.output.write_text(_dumps(payload) + "\n")
        return status, text
    if cfg.subcommand == "analyze":
        try:
            status, text, _ = _analyze(cfg, budget)
        except BudgetExceeded:
            text = _dumps({"schema": SCHEMA, "partial": True, "graphs": []})
            status = EXIT_INCONCLUSIVE
    elif cfg.subcommand == "bounds":
        status, text, _ = _bounds(cfg)
    else:
        if cfg.subcommand == "verify":
            report = _verify(cfg, budget)
        elif cfg.subcommand == "turan":
            n, m, ell = _need(cfg.params, "n", "m", "ell")
            report = turan_report(n, m, ell, workers=cfg.workers, budget=budget)
        else:
            n, m, ell = _need(cfg.params, "n", "m", "ell")
            report = explore_conjecture(n, m, ell, workers=cfg.workers, budget=budget)
        status, text = report.exit_code, report.to_json()
    if cfg.output is not None:
        cfg.output.write_text(text + "\n")
    return status, text


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = run(cfg)
    except (UsageError, CirclabError, ValueError, OSError) as exc:
        print(f"circlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
