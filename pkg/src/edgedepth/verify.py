"""Executable checks of the depth inequalities and ideal identities.

Every check returns a :class:`VerificationReport` (or a plain bool for the
identity checks). A report compares a computed left-hand side ``value``
(a depth, or a star packing number for the deletion lemmas) with a
``bound``; the verdict is ``holds`` exactly when ``value >= bound``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .constructions import (HypothesisError, edge_ideal, mixed_ideal,
                            symbolic_power)
from .graphs import (Graph, StarPacking, canonical_form, delete_vertices,
                     is_chordal, is_star_packing, star_packing_number)
from .homology import QQ, GF2, FieldSpec, betti_table, betti_via_taylor, depth, \
    TAYLOR_MAX_GENERATORS
from .monomials import MonomialIdeal, colon, equals, intersect, power

HOLDS = "holds"
VIOLATED = "violated"
GUARANTEED = "guaranteed"
EXPLORATORY = "exploratory"

CSV_COLUMNS = ("id", "n", "edges", "chordal", "s", "alpha2", "depth", "bound",
               "slack", "verdict", "char", "ms")


@dataclass
class VerificationReport:
    id: str
    theorem: str
    graph: Graph
    value: int
    bound: int
    alpha2: int | None = None
    s: int | None = None
    mode: str = GUARANTEED
    characteristic: int = 0
    ms: float = 0.0
    chordal: bool | None = None
    graph2: Graph | None = None
    extra: dict = field(default_factory=dict)

    @property
    def slack(self) -> int:
        return self.value - self.bound

    @property
    def verdict(self) -> str:
        return HOLDS if self.slack >= 0 else VIOLATED

    @property
    def failed(self) -> bool:
        """A violation of a theorem-backed instance."""
        return self.mode == GUARANTEED and self.verdict == VIOLATED

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "theorem": self.theorem,
            "mode": self.mode,
            "graph": self.graph.to_dict(),
            "s": self.s,
            "alpha2": self.alpha2,
            "depth": self.value,
            "bound": self.bound,
            "slack": self.slack,
            "verdict": self.verdict,
            "char": self.characteristic,
            "chordal": self.chordal,
            "ms": round(self.ms, 3),
        }
        if self.graph2 is not None:
            out["graph2"] = self.graph2.to_dict()
        if self.extra:
            out["extra"] = self.extra
        return out

    def csv_row(self, timings: bool = True) -> list:
        edges = " ".join(f"{u}-{v}" for u, v in self.graph.edges)
        chordal = "" if self.chordal is None else int(self.chordal)
        return [self.id, self.graph.n, edges, chordal,
                "" if self.s is None else self.s,
                "" if self.alpha2 is None else self.alpha2,
                self.value, self.bound, self.slack, self.verdict,
                self.characteristic, f"{self.ms:.1f}" if timings else ""]


class DepthOracle:
    """depth S/I for ideals built from graphs, memoised up to relabelling.

    Relabelling the vertices permutes the variables, which is a ring
    automorphism, so the depth of a graph ideal only depends on the
    isomorphism class of its (coloured) graph. With ``cross_check`` every
    newly computed ideal with few enough generators is also resolved by
    the Taylor complex and over GF(2); disagreements are collected in
    ``mismatches``.
    """

    def __init__(self, field: FieldSpec = QQ, cache: bool = True, cross_check: bool = False):
        self.field = field
        self.cache = {} if cache else None
        self.cross_check = cross_check
        self.mismatches: list[dict] = []
        self.checked = 0
        self.checked_ideals: set[MonomialIdeal] = set()

    def of_ideal(self, I: MonomialIdeal) -> int:
        d = depth(I, self.field)
        if self.cross_check:
            self.cross_check_ideal(I, d)
        return d

    def cross_check_ideal(self, I: MonomialIdeal, d: int | None = None):
        """Compare against the other characteristic and, when small, the Taylor complex."""
        if I in self.checked_ideals or I.is_zero or I.is_unit:
            return
        self.checked_ideals.add(I)
        if d is None:
            d = depth(I, self.field)
        other = depth(I, GF2 if self.field.characteristic != 2 else QQ)
        if other != d:
            self.mismatches.append({"ideal": str(I), "n": I.n, "kind": "characteristic",
                                    "depth": d, "other": other})
        if len(I) <= TAYLOR_MAX_GENERATORS:
            self.checked += 1
            if betti_table(I, self.field) != betti_via_taylor(I, self.field):
                self.mismatches.append({"ideal": str(I), "n": I.n, "kind": "taylor"})

    def _memo(self, key, build):
        if self.cache is None:
            return self.of_ideal(build())
        if key not in self.cache:
            self.cache[key] = self.of_ideal(build())
        return self.cache[key]

    def edge_ideal(self, G: Graph) -> int:
        return self.symbolic(G, 1)

    def symbolic(self, G: Graph, s: int) -> int:
        key = ("sym", s, canonical_form(G) if self.cache is not None else None)
        return self._memo(key, lambda: symbolic_power(G, s))

    def ordinary(self, G: Graph, s: int) -> int:
        key = ("pow", s, canonical_form(G) if self.cache is not None else None)
        return self._memo(key, lambda: power(edge_ideal(G), s))

    def mixed(self, H: Graph, H2: Graph, s: int) -> int:
        key = ("mixed", s, canonical_form(H, H2) if self.cache is not None else None)
        return self._memo(key, lambda: mixed_ideal(H, H2, s))


def _default_oracle(oracle: DepthOracle | None, F: FieldSpec) -> DepthOracle:
    if oracle is not None:
        return oracle
    return DepthOracle(F, cache=False)


# --- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class DepthCertificate:
    """Rows (center b_{i,0}, neighbours b_{i,1..t_i}) of pairwise distinct variables."""
    rows: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        rows = tuple((int(c), tuple(int(v) for v in nbrs)) for c, nbrs in self.rows)
        object.__setattr__(self, "rows", rows)
        flat = [c for c, _ in rows] + [v for _, nbrs in rows for v in nbrs]
        if len(flat) != len(set(flat)):
            raise ValueError(f"certificate repeats a variable: {rows}")

    @property
    def q(self) -> int:
        return len(self.rows)

    def variables(self) -> set[int]:
        return {c for c, _ in self.rows} | {v for _, nbrs in self.rows for v in nbrs}


def check_certificate(I: MonomialIdeal, B: DepthCertificate | Sequence) -> tuple[bool, int]:
    """Test the two certificate conditions on the minimal generators of I.

    (i) no generator has degree above 1 in a neighbour variable;
    (ii) a generator divisible by a row's centre is divisible by one of its
    neighbours. Accepted certificates guarantee depth S/I >= q.
    """
    if not isinstance(B, DepthCertificate):
        B = DepthCertificate(tuple(B))
    if I.is_unit:
        raise ValueError("certificates need a proper ideal")
    if any(v >= I.n for v in B.variables()):
        raise ValueError(f"certificate uses a variable outside x1..x{I.n}")
    for center, nbrs in B.rows:
        for g in I.gens:
            if any(g[v] > 1 for v in nbrs):
                return False, B.q
            if g[center] and not any(g[v] for v in nbrs):
                return False, B.q
    return True, B.q


def certificate_from_star_packing(G: Graph, P: StarPacking | Iterable[int]) -> DepthCertificate:
    centers = P.centers if isinstance(P, StarPacking) else frozenset(P)
    if not is_star_packing(G, centers):
        raise HypothesisError(f"{sorted(centers)} is not a star packing")
    return DepthCertificate(tuple((c, tuple(sorted(G.neighbors(c)))) for c in sorted(centers)))


# --- depth inequalities -----------------------------------------------------------

def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - t0) * 1000.0


def check_edge_ideal_bound(G: Graph, F: FieldSpec = QQ, oracle: DepthOracle | None = None,
                           id: str = "cor22") -> VerificationReport:
    """depth S/I(G) >= alpha_2(G), for every graph."""
    oracle = _default_oracle(oracle, F)
    t0 = time.perf_counter()
    a2, _ = star_packing_number(G)
    d = oracle.edge_ideal(G)
    ms = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(id, "cor22", G, d, a2, alpha2=a2, s=1,
                              characteristic=oracle.field.characteristic, ms=ms,
                              chordal=is_chordal(G).chordal)


def check_symbolic_depth_bound(G: Graph, s: int, require_chordal: bool = False,
                               F: FieldSpec = QQ, oracle: DepthOracle | None = None,
                               id: str | None = None) -> VerificationReport:
    """depth S/I(G)^(s) >= alpha_2(G) - s + 1.

    Theorem-backed for chordal G (any s), for s = 2 (any G) and for s = 1;
    everything else is reported as exploratory.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    oracle = _default_oracle(oracle, F)
    chordal = is_chordal(G).chordal
    if require_chordal and not chordal:
        raise HypothesisError("graph is not chordal")
    guaranteed = chordal or s <= 2
    theorem = "thm34" if chordal else ("thm42" if s == 2 else ("cor22" if s == 1 else "sym"))
    t0 = time.perf_counter()
    a2, _ = star_packing_number(G)
    d = oracle.symbolic(G, s)
    ms = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(id or theorem, theorem, G, d, a2 - s + 1, alpha2=a2, s=s,
                              mode=GUARANTEED if guaranteed else EXPLORATORY,
                              characteristic=oracle.field.characteristic, ms=ms,
                              chordal=chordal)


def check_ordinary_power_bound(G: Graph, s: int, F: FieldSpec = QQ,
                               oracle: DepthOracle | None = None,
                               id: str = "forest-pow") -> VerificationReport:
    """depth S/I(G)^s >= alpha_2(G) - s + 1; theorem-backed for forests."""
    oracle = _default_oracle(oracle, F)
    t0 = time.perf_counter()
    a2, _ = star_packing_number(G)
    d = oracle.ordinary(G, s)
    ms = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(id, "forest-pow", G, d, a2 - s + 1, alpha2=a2, s=s,
                              mode=GUARANTEED if G.is_forest() else EXPLORATORY,
                              characteristic=oracle.field.characteristic, ms=ms,
                              chordal=is_chordal(G).chordal)


def check_mixed_bound(H: Graph, H2: Graph, s: int, F: FieldSpec = QQ,
                      oracle: DepthOracle | None = None,
                      id: str = "prop33") -> VerificationReport:
    """depth S/(I(H)^(s) + I(H')) >= alpha_2(H u H') - s + 1.

    Requires H chordal, H u H' chordal and E(H), E(H') disjoint.
    """
    if H.n != H2.n:
        raise HypothesisError("H and H' must share the vertex set")
    if H.edge_set() & H2.edge_set():
        raise HypothesisError("E(H) and E(H') intersect")
    if not is_chordal(H):
        raise HypothesisError("H is not chordal")
    G = H.union(H2)
    if not is_chordal(G):
        raise HypothesisError("H u H' is not chordal")
    oracle = _default_oracle(oracle, F)
    t0 = time.perf_counter()
    a2, _ = star_packing_number(G)
    d = oracle.mixed(H, H2, s)
    ms = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(id, "prop33", G, d, a2 - s + 1, alpha2=a2, s=s,
                              characteristic=oracle.field.characteristic, ms=ms,
                              chordal=True, graph2=H2, extra={"H": H.to_dict()})


# --- ideal identities -------------------------------------------------------------

def colon_identity_sides(G: Graph, edge: tuple[int, int], k: int):
    """Both sides of (I^(k) : xy) = (I^(k-1) : x) n (I^(k-1) : y)."""
    x, y = edge
    if not (0 <= x < G.n and 0 <= y < G.n) or not G.has_edge(x, y):
        raise HypothesisError(f"{edge} is not an edge")
    if k < 2:
        raise HypothesisError(f"k must be at least 2, got {k}")
    n = G.n
    xy = tuple(1 if j in (x, y) else 0 for j in range(n))
    ex = tuple(1 if j == x else 0 for j in range(n))
    ey = tuple(1 if j == y else 0 for j in range(n))
    lhs = colon(symbolic_power(G, k), xy)
    lower = symbolic_power(G, k - 1)
    rhs = intersect(colon(lower, ex), colon(lower, ey))
    return lhs, rhs


def check_colon_identity(G: Graph, edge: tuple[int, int], k: int) -> bool:
    lhs, rhs = colon_identity_sides(G, edge, k)
    return equals(lhs, rhs)


def check_forest_power_coincidence(G: Graph, s: int) -> bool:
    """I(G)^s == I(G)^(s) for a forest G."""
    if not G.is_forest():
        raise HypothesisError("graph has a cycle")
    return equals(power(edge_ideal(G), s), symbolic_power(G, s))


# --- star packing deletion lemmas ---------------------------------------------

def lemma31_hypotheses(G: Graph, W: Iterable[int], A: Iterable[int]) -> str | None:
    W, A = set(W), set(A)
    if not W <= set(range(G.n)) or not A <= set(range(G.n)):
        return "W and A must be vertex subsets"
    allowed = set().union(*(G.closed_neighborhood(x) for x in W)) if W else set()
    if not A <= allowed:
        return f"A is not inside the closed neighbourhoods of W: {sorted(A - allowed)}"
    return None


def lemma32_hypotheses(G: Graph, W: Sequence[int], A: Iterable[int]) -> str | None:
    """W is ordered: W[0] plays x_1."""
    A = set(A)
    if not W:
        return "W must be nonempty"
    if len(set(W)) != len(W) or not set(W) | A <= set(range(G.n)):
        return "W must be distinct vertices and A a vertex subset"
    if not G.is_clique(W):
        return "W is not a clique"
    x1 = W[0]
    reach = set().union(*(G.neighbors(x) for x in W))
    if not A <= reach:
        return "condition (i): A is not inside the open neighbourhoods of W"
    if not (G.neighbors(x1) - set(W[1:])) <= A:
        return "condition (ii): A misses a neighbour of x1 outside W"
    if x1 in A:
        return "condition (iii): x1 lies in A"
    return None


def check_packing_deletion_lemmas(G: Graph, W: Sequence[int], A: Iterable[int],
                                  mode: str, id: str | None = None) -> VerificationReport:
    """alpha_2(G - A) against alpha_2(G) - |W| (lemma31) or alpha_2(G) - d + 1 (lemma32)."""
    A = sorted(set(A))
    W = list(W)
    if mode == "lemma31":
        reason = lemma31_hypotheses(G, W, A)
        drop = len(set(W))
    elif mode == "lemma32":
        reason = lemma32_hypotheses(G, W, A)
        drop = len(W) - 1
    else:
        raise ValueError(f"unknown lemma mode {mode!r}")
    if reason:
        raise HypothesisError(reason)
    t0 = time.perf_counter()
    a2, _ = star_packing_number(G)
    sub, _ = delete_vertices(G, A)
    a2_sub, _ = star_packing_number(sub)
    ms = (time.perf_counter() - t0) * 1000.0
    theorem = "lem31" if mode == "lemma31" else "lem32"
    return VerificationReport(id or theorem, theorem, G, a2_sub, a2 - drop, alpha2=a2,
                              ms=ms, extra={"W": W, "A": A})
