"""Closed-form bounds and subgraph counts for bounded-circumference graphs.

Throughout, ``k = ell // 2`` and ``lam = ell - 2k`` (0 or 1); ``lam`` is
always derived from ``ell`` and never accepted from a caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cycles import checked_count, count_cycles
from .errors import DomainError, SpecError
from .families import FamilySpec, h_graph


@dataclass(frozen=True)
class BoundInputs:
    n: int
    k: int = 0
    ell: int = 0
    s: int = 0

    @property
    def lam(self) -> int:
        return self.ell - 2 * (self.ell // 2)


def _split(ell: int) -> tuple[int, int]:
    return ell // 2, ell % 2


# -- classical bounds ----------------------------------------------------


def dirac_min_circumference(n: int, k: int) -> int:
    """Lower bound on c(G) for 2-connected G with minimum degree >= k + 1."""
    if n < 3 or k < 1:
        raise DomainError("dirac bound needs n >= 3 and k >= 1")
    return min(n, 2 * (k + 1))


def kopylov_max_edges(n: int, ell: int) -> int:
    """Most edges in a 2-connected n-vertex graph with circumference <= ell.

    Valid for ``n > ell``; at ``n == ell`` complete graphs exceed it.
    """
    if not n >= ell >= 4:
        raise DomainError("kopylov bound needs n >= ell >= 4")
    k, lam = _split(ell)
    long_clique = comb(ell - 1, 2) + 2 * (n - ell + 1)
    split_graph = comb(k, 2) + k * (n - k) + (1 if (ell - 1) % 2 == 0 else 0)
    return max(long_clique, split_graph)


def fkv_edge_threshold(n: int, ell: int) -> int:
    """Edge count below which the FKV stability dichotomy is not needed."""
    if ell < 3:
        raise DomainError("fkv threshold needs ell >= 3")
    if n < 3 * (ell // 2):
        raise DomainError(f"fkv threshold requires n ≥ 3⌊ℓ/2⌋ (= {3 * (ell // 2)}), got n = {n}")
    up = -(-ell // 2)
    return comb(up + 2, 2) + (ell // 2 - 1) * (n - up - 2)


@dataclass(frozen=True)
class LuoBound:
    value: Fraction
    equality_possible: bool

    @property
    def integer_bound(self) -> int:
        return self.value.numerator // self.value.denominator


def luo_max_cliques(n: int, ell: int, s: int) -> LuoBound:
    """Upper bound on the number of ``K_s`` when circumference <= ell."""
    if ell < 3:
        raise DomainError("luo bound needs ell >= 3")
    if not 1 <= s <= ell:
        raise DomainError("luo bound needs 1 <= s <= ell")
    if n < 1:
        raise DomainError("luo bound needs n >= 1")
    return LuoBound(Fraction(n - 1, ell - 1) * comb(ell, s), (n - 1) % (ell - 1) == 0)


# -- five-cycles -----------------------------------------------------------


def c5_in_h(n: int, ell: int) -> int:
    """Five-cycles in H(n, ell)."""
    if not n >= ell >= 4:
        raise DomainError("H(n, ell) needs n >= ell >= 4")
    k, lam = _split(ell)
    total = (
        comb(n - k, 2) * comb(k, 3) * 3 * 2
        + (n - k) * comb(k, 4) * comb(4, 2) * 2
        + comb(k, 5) * 12
        + lam * ((n - k - 2) * comb(k, 2) * 2 + comb(k, 3) * 3 * 2)
    )
    return checked_count(total)


def _c5_clique_with_hubs(k: int, hubs_adjacent: bool) -> int:
    # Five-cycles inside K_{k-1} joined to two hub vertices.
    full = 12 * comb(k + 1, 5)
    return full if hubs_adjacent else full - (k - 1) * (k - 2) * (k - 3)


def _c5_h1(spec: FamilySpec) -> int:
    k, b1, b2 = spec.k, spec.b1, spec.b2
    q = k - 1
    has_uu1 = spec.variant in ("G", "G2")
    has_uu2 = spec.variant in ("G", "G1")
    # Cycles inside one clique plus its two hubs.
    inside = b1 * _c5_clique_with_hubs(k, has_uu1) + b2 * _c5_clique_with_hubs(k, has_uu2)
    # Cycles through u and one u_i visiting two cliques on the same side.
    two_cliques = (b1 * (b1 - 1) + b2 * (b2 - 1)) * q * q * (q - 1)
    # Cycles through u, u1, u2 and the edge u1u2.
    all_hubs = has_uu2 * b1 * q * (q - 1) + has_uu1 * b2 * q * (q - 1) + b1 * b2 * q * q
    return inside + two_cliques + all_hubs


def _c5_two_hubs(sizes: list[int], hubs_adjacent: bool) -> int:
    # Two hub vertices joined to disjoint cliques of the given sizes.
    total = 0
    for m in sizes:
        full = 12 * comb(m + 2, 5)
        total += full if hubs_adjacent else full - m * (m - 1) * (m - 2)
    for i, a in enumerate(sizes):
        for j, c in enumerate(sizes):
            if i != j:
                total += a * (a - 1) * c
    return total


def c5_closed_form(spec: FamilySpec) -> int:
    """Five-cycle count of a family member, each form checked by enumeration."""
    f = spec.family
    if f == "H":
        return c5_in_h(spec.n, spec.ell)
    if f == "H1":
        return checked_count(_c5_h1(spec))
    if f == "H2":
        sizes = [spec.k - 1] * spec.b
        return checked_count(_c5_two_hubs(sizes, spec.variant == "joined"))
    if f == "K2_Kk_bCliques":
        sizes = [spec.k] + [spec.k - 1] * spec.b
        return checked_count(_c5_two_hubs(sizes, True))
    if f == "K3_Matching":
        m = (spec.n - 3) // 2
        return checked_count(m * 12 + 2 * comb(m, 2) * 12 + comb(m, 2) * 24)
    if f == "K2_StarMatching":
        t = spec.t
        leaves = spec.n - 3 - 2 * spec.t
        return checked_count(2 * comb(t, 2) * 4 + comb(leaves, 2) * 6 + 4 * t * leaves + 2 * (leaves + 1) * t)
    raise SpecError(f"no five-cycle formula for family {f!r}")


def reference_c5_expression(spec: FamilySpec) -> int | None:
    """Uncorrected reference expressions for the family five-cycle counts.

    Kept for reporting: several disagree with enumeration and
    :func:`c5_closed_form` is the checked replacement.  ``None`` where no
    reference expression exists.  The star family reads its free symbol as
    the number of star leaves.
    """
    f, n, k = spec.family, spec.n, spec.k
    if f == "H":
        return c5_in_h(n, spec.ell)
    if f == "H1":
        if k == 2:
            return spec.b1 * spec.b2
        b1, b2 = spec.b1, spec.b2
        return (
            (n - 3) // (k - 1) * comb(k + 1, 5) * 12
            + 2 * (comb(b1, 2) + comb(b2, 2)) * comb(k - 1, 2) * (k - 1)
            + 2 * (b1 + b2) * comb(k - 1, 2)
            + b1 * b2 * (k - 1) ** 2
        )
    if f == "H2":
        b = (n - 2) // (k - 1)
        return b * comb(k + 1, 5) * 12 + 2 * comb(b, 2) * comb(k - 1, 2) * (k - 1)
    if f == "K2_Kk_bCliques":
        b = spec.b
        return (
            (b * comb(k + 1, 5) + comb(k + 2, 5)) * 12
            + 2 * comb(b, 2) * comb(k - 1, 2) * (k - 1)
            + 2 * (k * b * comb(k - 1, 2) + b * comb(k, 2) * (k - 1))
        )
    if f == "K3_Matching":
        m = (n - 3) // 2
        return m * 12 + 2 * comb(m, 2) * 12 + comb(m, 2) * 24
    if f == "K2_StarMatching":
        return c5_closed_form(spec)
    return None


# -- four-cycles -----------------------------------------------------------


def c4_closed_form_h(n: int, ell: int) -> int:
    """Four-cycles in H(n, ell).

    Inside the clique, 3 per 4-set; one outside vertex with three clique
    vertices, 3 ways (which clique vertex sits opposite); two outside
    vertices, always opposite each other; and, for odd ell, the extra edge
    followed by an ordered clique pair.
    """
    if not n >= ell >= 4:
        raise DomainError("H(n, ell) needs n >= ell >= 4")
    k, lam = _split(ell)
    return checked_count(
        3 * comb(k, 4) + 3 * (n - k) * comb(k, 3) + comb(n - k, 2) * comb(k, 2) + lam * 2 * comb(k, 2)
    )


# -- per-vertex bounds for low-degree vertices -------------------------------


@dataclass(frozen=True)
class RationalBound:
    value: Fraction

    @property
    def floor(self) -> int:
        return self.value.numerator // self.value.denominator


def low_degree_c5_bound(n: int, k: int) -> RationalBound:
    """Bound on five-cycles through a vertex of degree <= k - 1."""
    if k < 3:
        raise DomainError("five-cycle vertex bound needs k >= 3")
    if n < 3 * k:
        raise DomainError("five-cycle vertex bound needs n >= 3k")
    return RationalBound(Fraction(k * (k - 2) ** 2 * n) - Fraction(k * k * (k - 2) ** 2, 2))


def low_degree_c4_bound(n: int, k: int) -> int:
    """Bound on four-cycles through a vertex of degree <= k - 1."""
    if k < 1 or n < 1:
        raise DomainError("four-cycle vertex bound needs k >= 1 and n >= 1")
    return comb(k - 1, 2) * n


# -- generalized Turán values ------------------------------------------------

THEOREM = "theorem"
CONJECTURE = "conjecture"
CONSTRUCTION = "construction"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class ExtremalValue:
    value: int
    basis: str
    # Order above which the theorem is proved; None where no threshold applies.
    threshold: float | None = None


def c5_theorem_threshold(ell: int) -> float:
    return 200.0 if ell == 5 else 100 * ell ** 1.5


def c4_theorem_threshold(ell: int) -> float:
    return 10 * ell ** 1.5


def turan_extremal_value(n: int, m: int, ell: int) -> ExtremalValue:
    """Predicted maximum number of m-cycles when circumference <= ell."""
    if m < 3:
        raise DomainError("cycle length must be at least 3")
    if m > ell:
        return ExtremalValue(0, TRIVIAL)
    if not n >= ell >= 4:
        raise DomainError("extremal value needs n >= ell >= 4")
    if m == 5 and ell == 5:
        return ExtremalValue((n - 3) ** 2 // 2, THEOREM, c5_theorem_threshold(5))
    if m == 5:
        return ExtremalValue(c5_in_h(n, ell), THEOREM, c5_theorem_threshold(ell))
    if m == 4:
        return ExtremalValue(c4_closed_form_h(n, ell), THEOREM, c4_theorem_threshold(ell))
    basis = CONJECTURE if m >= 4 else CONSTRUCTION
    return ExtremalValue(count_cycles(h_graph(n, ell), m), basis)
