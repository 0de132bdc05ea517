"""Constructors for the extremal graph families of Dirac-type stability.

Every builder returns the graph together with a :class:`FamilyMeta` whose
circumference is the value the construction is designed to have and whose
minimum degree is *measured* on the built graph.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any

from .errors import SpecError
from .graph import (
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    join,
    star_graph,
    union_all,
)

FAMILIES = ("H", "H1", "H2", "K2_Kk_bCliques", "K3_Matching", "K2_StarMatching")
H1_VARIANTS = ("G", "G1", "G2", "G3")
H2_VARIANTS = ("joined", "nonjoined")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of one extremal construction.

    Only the fields relevant to ``family`` are used; the rest stay at their
    defaults.  ``ell`` is meaningful for ``H`` only.
    """

    family: str
    n: int
    k: int = 0
    ell: int = 0
    b1: int = 0
    b2: int = 0
    b: int = 0
    t: int = 0
    variant: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FamilySpec:
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise SpecError(f"unknown FamilySpec fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> FamilySpec:
        return cls.from_dict(json.loads(text))

    def label(self) -> str:
        f = self.family
        if f == "H":
            return f"H({self.n},{self.ell})"
        if f == "H1":
            return f"H1[k={self.k},b1={self.b1},b2={self.b2},{self.variant}]"
        if f == "H2":
            return f"H2[k={self.k},b={self.b},{self.variant}]"
        if f == "K2_Kk_bCliques":
            return f"K2+(K{self.k}+{self.b}K{self.k - 1})"
        if f == "K3_Matching":
            return f"K3+{(self.n - 3) // 2}K2"
        return f"K2+(S{self.n - 3 - 2 * self.t}+{self.t}K2)"


@dataclass(frozen=True)
class FamilyMeta:
    expected_circumference: int
    expected_min_degree: int


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SpecError(message)


def cliques(count: int, size: int) -> Graph:
    """``count`` disjoint copies of ``K_size``."""
    return union_all([complete_graph(size)] * count)


def h_graph(n: int, ell: int) -> Graph:
    """``H(n, ell)``: ``K_k + I_{n-k}`` with ``k = ell // 2``, plus one edge
    inside the independent side when ``ell`` is odd."""
    _require(ell >= 4, "H requires ell >= 4")
    _require(n >= ell, "H requires n >= ell")
    k = ell // 2
    g = join(complete_graph(k), empty_graph(n - k))
    if ell % 2:
        g = g.add_edges([(k, k + 1)])
    return g


def _build_h1(spec: FamilySpec) -> Graph:
    k, b1, b2 = spec.k, spec.b1, spec.b2
    _require(k >= 2, "H1 requires k >= 2")
    _require(b1 >= 1 and b2 >= 1, "H1 requires b1 >= 1 and b2 >= 1 (with an empty side the circumference is 2k)")
    _require(spec.n == (b1 + b2) * (k - 1) + 3, "H1 requires n = (b1 + b2)(k - 1) + 3")
    _require(spec.variant in H1_VARIANTS, f"H1 variant must be one of {H1_VARIANTS}")
    # Vertex 0 is u, 1 is u1, 2 is u2.
    side1 = join(empty_graph(1), cliques(b1, k - 1))
    side2 = join(empty_graph(1), cliques(b2, k - 1))
    body = disjoint_union(side1, side2)
    # body puts u1 at 0 and u2 at side1.n; move them to 1 and 2 after joining u.
    g0 = join(empty_graph(1), body)
    u1, u2 = 1, 1 + side1.n
    perm = list(range(g0.n))
    perm[u1], perm[u2] = 1, 2
    others = [v for v in range(g0.n) if v not in (0, u1, u2)]
    for new, v in enumerate(others, start=3):
        perm[v] = new
    g = g0.relabel(perm).add_edges([(1, 2)])
    drop = {"G": [], "G1": [(0, 1)], "G2": [(0, 2)], "G3": [(0, 1), (0, 2)]}[spec.variant]
    return g.remove_edges(drop)


def _build_h2(spec: FamilySpec) -> Graph:
    k, b = spec.k, spec.b
    _require(k >= 2, "H2 requires k >= 2")
    _require(b >= 2, "H2 requires b >= 2 (b = 1 gives a clique)")
    _require(spec.n == b * (k - 1) + 2, "H2 requires n = b(k - 1) + 2")
    _require(spec.variant in H2_VARIANTS, f"H2 variant must be one of {H2_VARIANTS}")
    top = complete_graph(2) if spec.variant == "joined" else empty_graph(2)
    return join(top, cliques(b, k - 1))


def _build_k2_kk(spec: FamilySpec) -> Graph:
    k, b = spec.k, spec.b
    _require(k >= 2, "K2_Kk_bCliques requires k >= 2")
    _require(b >= 1, "K2_Kk_bCliques requires b >= 1")
    _require(spec.n == k + 2 + b * (k - 1), "K2_Kk_bCliques requires n = k + 2 + b(k - 1)")
    return join(complete_graph(2), disjoint_union(complete_graph(k), cliques(b, k - 1)))


def _build_k3_matching(spec: FamilySpec) -> Graph:
    n = spec.n
    _require(n % 2 == 1, "K3_Matching requires n odd")
    _require(n >= 9, "K3_Matching requires n >= 9 (fewer than three matching edges cannot reach circumference 9)")
    _require(spec.k in (0, 4), "K3_Matching belongs to k = 4")
    return join(complete_graph(3), cliques((n - 3) // 2, 2))


def _build_k2_star(spec: FamilySpec) -> Graph:
    n, t = spec.n, spec.t
    leaves = n - 3 - 2 * t
    _require(t >= 1, "K2_StarMatching requires t >= 1 (t = 0 has circumference 6)")
    _require(leaves >= 2, "K2_StarMatching requires n - 3 - 2t >= 2 star leaves")
    _require(spec.k in (0, 3), "K2_StarMatching belongs to k = 3")
    return join(complete_graph(2), disjoint_union(star_graph(leaves), cliques(t, 2)))


def build_family(spec: FamilySpec) -> tuple[Graph, FamilyMeta]:
    f = spec.family
    if f == "H":
        g = h_graph(spec.n, spec.ell)
        circ = spec.ell
    elif f == "H1":
        g = _build_h1(spec)
        circ = 2 * spec.k + 1
    elif f == "H2":
        g = _build_h2(spec)
        circ = 2 * spec.k
    elif f == "K2_Kk_bCliques":
        g = _build_k2_kk(spec)
        circ = 2 * spec.k + 1
    elif f == "K3_Matching":
        g = _build_k3_matching(spec)
        circ = 9
    elif f == "K2_StarMatching":
        g = _build_k2_star(spec)
        circ = 7
    else:
        raise SpecError(f"unknown family {f!r}; expected one of {FAMILIES}")
    assert g.n == spec.n, (spec, g.n)
    return g, FamilyMeta(circ, g.min_degree())


def family_catalog(n: int, k: int) -> list[FamilySpec]:
    """Every construction from the stability conclusion realisable at (n, k).

    Empty below ``n = 2k + 1``, where none of the constructions fit.
    """
    if k < 2:
        raise SpecError("family_catalog requires k >= 2")
    if n < 2 * k + 1:
        return []
    out = [FamilySpec("H", n, k=k, ell=2 * k + 1), FamilySpec("H", n, k=k, ell=2 * k)]
    if (n - 3) % (k - 1) == 0:
        b = (n - 3) // (k - 1)
        for b1 in range(1, b):
            for variant in H1_VARIANTS:
                out.append(FamilySpec("H1", n, k=k, b1=b1, b2=b - b1, variant=variant))
    if (n - 2) % (k - 1) == 0 and (n - 2) // (k - 1) >= 2:
        for variant in H2_VARIANTS:
            out.append(FamilySpec("H2", n, k=k, b=(n - 2) // (k - 1), variant=variant))
    if (n - k - 2) % (k - 1) == 0 and (n - k - 2) // (k - 1) >= 1:
        out.append(FamilySpec("K2_Kk_bCliques", n, k=k, b=(n - k - 2) // (k - 1)))
    if k == 4 and n % 2 == 1 and n >= 9:
        out.append(FamilySpec("K3_Matching", n, k=4))
    if k == 3:
        for t in range(1, (n - 5) // 2 + 1):
            out.append(FamilySpec("K2_StarMatching", n, k=3, t=t))
    return out
