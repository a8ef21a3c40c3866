"""Simple graphs on vertices 0..n-1 and the combinatorics of star packings.

Adjacency is stored as one bitmask per vertex. Vertex ``i`` corresponds to
the variable ``x{i+1}`` of the polynomial ring.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        self.n = n
        adj = [0] * n
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        g = cls(len(adj))
        g.adj = tuple(adj)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def components(self) -> list[frozenset[int]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(frozenset(_bits(comp)))
        return comps

    def is_forest(self) -> bool:
        return self.num_edges == self.n - len(self.components())

    def square(self) -> "Graph":
        """Graph on the same vertices, adjacent iff distance is 1 or 2."""
        adj = []
        for v in range(self.n):
            reach = self.adj[v]
            for u in _bits(self.adj[v]):
                reach |= self.adj[u]
            adj.append(reach & ~(1 << v))
        return Graph.from_adjacency(adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_adjacency([full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v becomes perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def union(self, other: "Graph") -> "Graph":
        if self.n != other.n:
            raise GraphError("union needs graphs on the same vertex set")
        return Graph.from_adjacency([a | b for a, b in zip(self.adj, other.adj)])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls(data["n"], data["edges"])


def delete_vertices(G: Graph, A: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V(G) minus A, relabelled compactly.

    Returns the new graph and the map old label -> new label.
    """
    A = set(A)
    bad = [v for v in A if not 0 <= v < G.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} not in the graph")
    keep = [v for v in range(G.n) if v not in A]
    label = {v: i for i, v in enumerate(keep)}
    edges = [(label[u], label[v]) for u, v in G.edges if u in label and v in label]
    return Graph(len(keep), edges), label


def remove_vertices(G: Graph, A: Iterable[int]) -> Graph:
    """G with the vertices of A made isolated; labels are kept.

    The edge set is the one of G minus A, which is all the ideal side needs.
    """
    drop = _mask(A)
    return Graph.from_adjacency(
        [0 if drop >> v & 1 else a & ~drop for v, a in enumerate(G.adj)])


# --- chordality -----------------------------------------------------------

@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    ordering: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.chordal


def maximum_cardinality_search(G: Graph) -> list[int]:
    """Vertices in the order MCS visits them."""
    weight = [0] * G.n
    visited = 0
    order = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not visited >> u & 1), key=lambda u: weight[u])
        order.append(v)
        visited |= 1 << v
        for u in _bits(G.adj[v] & ~visited):
            weight[u] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, ordering: Sequence[int]) -> bool:
    later = 0
    for v in reversed(ordering):
        if not G.is_clique(_bits(G.adj[v] & later)):
            return False
        later |= 1 << v
    return True


def _shortest_path(G: Graph, src: int, dst: int, allowed: int) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for u in _bits(G.adj[v] & allowed):
            if u not in prev:
                prev[u] = v
                queue.append(u)
    return None


def find_induced_cycle(G: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or None if G is chordal."""
    full = (1 << G.n) - 1
    for v in range(G.n):
        nbrs = list(_bits(G.adj[v]))
        for u, w in combinations(nbrs, 2):
            if G.has_edge(u, w):
                continue
            allowed = full & ~(G.adj[v] | 1 << v) | 1 << u | 1 << w
            path = _shortest_path(G, u, w, allowed)
            if path is not None:
                return (v, *path)
    return None


def is_chordal(G: Graph) -> ChordalityResult:
    order = maximum_cardinality_search(G)
    # reversed MCS order is a perfect elimination ordering iff G is chordal
    peo = tuple(reversed(order))
    if is_perfect_elimination_ordering(G, peo):
        return ChordalityResult(True, ordering=peo)
    cycle = find_induced_cycle(G)
    assert cycle is not None and len(cycle) >= 4
    return ChordalityResult(False, cycle=cycle)


def simplicial_vertices(G: Graph) -> frozenset[int]:
    return frozenset(v for v in range(G.n) if G.is_clique(_bits(G.adj[v])))


# --- vertex covers ----------------------------------------------------------

def maximal_cliques(G: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting over bitmasks."""
    out = []

    def expand(R: int, P: int, X: int):
        if not P and not X:
            out.append(frozenset(_bits(R)))
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & G.adj[u]).count("1"))
        for v in _bits(P & ~G.adj[pivot]):
            expand(R | 1 << v, P & G.adj[v], X & G.adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    if G.n:
        expand(0, (1 << G.n) - 1, 0)
    return out


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    if G.n == 0:
        return [frozenset()]
    return maximal_cliques(G.complement())


def minimal_vertex_covers(G: Graph) -> list[frozenset[int]]:
    """All minimal vertex covers, sorted by size then lexicographically."""
    everything = frozenset(range(G.n))
    covers = {everything - A for A in maximal_independent_sets(G)}
    return sorted(covers, key=lambda C: (len(C), sorted(C)))


def is_vertex_cover(G: Graph, C: Iterable[int]) -> bool:
    C = set(C)
    return all(u in C or v in C for u, v in G.edges)


# --- star packings ----------------------------------------------------------

@dataclass(frozen=True)
class StarPacking:
    centers: frozenset[int]

    def __len__(self):
        return len(self.centers)


def is_star_packing(G: Graph, centers: Iterable[int]) -> bool:
    centers = list(centers)
    bad = [v for v in centers if not 0 <= v < G.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} not in the graph")
    if len(set(centers)) != len(centers):
        return False
    used = 0
    for v in centers:
        closed = G.adj[v] | 1 << v
        if used & closed:
            return False
        used |= closed
    return True


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _max_independent(adj: Sequence[int], cand: int) -> int:
    """Maximum independent set inside the vertex bitmask ``cand``."""
    best = _greedy_independent(adj, cand)

    def upper(P: int) -> int:
        k = _popcount(P)
        if k <= 1:
            return k
        degs = [_popcount(adj[v] & P) for v in _bits(P)]
        m = sum(degs) // 2
        if m == 0:
            return k
        top = max(degs)
        # every vertex of a cover meets at most `top` edges
        return k - -(-m // top)

    def search(chosen: int, P: int):
        nonlocal best
        while P:
            # vertices of degree <= 1 in P always belong to some maximum set
            low = next((v for v in _bits(P) if _popcount(adj[v] & P) <= 1), None)
            if low is None:
                break
            chosen |= 1 << low
            P &= ~(adj[low] | 1 << low)
        if _popcount(chosen) + upper(P) <= _popcount(best):
            return
        if not P:
            best = chosen
            return
        v = max(_bits(P), key=lambda u: _popcount(adj[u] & P))
        search(chosen | 1 << v, P & ~(adj[v] | 1 << v))
        search(chosen, P & ~(1 << v))

    search(0, cand)
    return best


def _greedy_independent(adj: Sequence[int], cand: int) -> int:
    chosen = 0
    P = cand
    while P:
        v = min(_bits(P), key=lambda u: _popcount(adj[u] & P))
        chosen |= 1 << v
        P &= ~(adj[v] | 1 << v)
    return chosen


def star_packing_number(G: Graph) -> tuple[int, StarPacking]:
    """alpha_2(G) with a witness packing.

    Centers of a star packing are exactly independent sets of the square
    graph, solved per connected component by branch and bound.
    """
    sq = G.square()
    centers = 0
    for comp in G.components():
        centers |= _max_independent(sq.adj, _mask(comp))
    witness = StarPacking(frozenset(_bits(centers)))
    assert is_star_packing(G, witness.centers)
    return len(witness), witness


def star_packing_number_brute(G: Graph) -> int:
    """Exhaustive maximum over all center subsets; for small test graphs."""
    best = 0
    closed = [G.adj[v] | 1 << v for v in range(G.n)]
    for mask in range(1 << G.n):
        k = _popcount(mask)
        if k <= best:
            continue
        used = 0
        ok = True
        for v in _bits(mask):
            if used & closed[v]:
                ok = False
                break
            used |= closed[v]
        if ok:
            best = k
    return best


def alpha2(G: Graph) -> int:
    return star_packing_number(G)[0]


# --- text formats -------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the JSON form ``{"n": .., "edges": [[u, v], ..]}`` or the plain form.

    The plain form is a header line ``n m`` followed by ``m`` lines ``u v``.
    Duplicate edges and self-loops are rejected.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed graph JSON at line {exc.lineno}: {exc.msg}") from None
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphError('graph JSON needs fields "n" and "edges"')
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphError(f'field "n" must be a nonnegative integer, got {n!r}')
        edges = []
        for k, e in enumerate(data["edges"]):
            if (not isinstance(e, list) or len(e) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
                raise GraphError(f'field "edges"[{k}] must be a pair of integers, got {e!r}')
            edges.append(tuple(e))
        return _build(n, edges, lambda k: f'"edges"[{k}]')

    lines = [ln for ln in stripped.splitlines()]
    if not lines or not lines[0].strip():
        raise GraphError("empty graph text")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise GraphError(f"line 1: expected 'n m', got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for k, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"line {k + 2}: expected 'u v', got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return _build(n, edges, lambda k: f"line {k + 2}")


def _build(n: int, edges, where) -> Graph:
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} above the supported {MAX_VERTICES}")
    seen = set()
    for k, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"{where(k)}: vertex out of range 0..{n - 1} in ({u}, {v})")
        if u == v:
            raise GraphError(f"{where(k)}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"{where(k)}: duplicate edge {key}")
        seen.add(key)
    return Graph(n, edges)


def format_graph_text(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


# --- canonical labelling ------------------------------------------------------

def _refine(n: int, weight, colors: list[int]) -> list[int]:
    """Colour refinement: split classes by the multiset of (edge colour, neighbour class)."""
    while True:
        sigs = [(colors[v], tuple(sorted((weight[v][u], colors[u])
                                         for u in range(n) if weight[v][u])))
                for v in range(n)]
        ranked = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranked[sig] for sig in sigs]
        if len(ranked) == len(set(colors)):
            return new
        colors = new


def canonical_form(*graphs: Graph) -> tuple:
    """An isomorphism invariant that is complete: equal iff the graph tuples
    are isomorphic under one common vertex relabelling.

    Several graphs on one vertex set are treated as a single edge-coloured
    graph. Individualisation-refinement without automorphism pruning; meant
    for the small graphs of exhaustive enumerations.
    """
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise GraphError("canonical_form needs graphs on one vertex set")
    weight = [[0] * n for _ in range(n)]
    for c, g in enumerate(graphs, start=1):
        for u, v in g.edges:
            weight[u][v] = weight[v][u] = weight[u][v] * (len(graphs) + 1) + c
    best = None

    def leaf_key(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((pos[u], pos[v], weight[u][v]) if pos[u] < pos[v]
                            else (pos[v], pos[u], weight[u][v])
                            for u in range(n) for v in range(u + 1, n) if weight[u][v]))

    def search(colors):
        nonlocal best
        colors = _refine(n, weight, colors)
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        split = next((c for c in sorted(counts) if counts[c] > 1), None)
        if split is None:
            key = leaf_key(colors)
            if best is None or key < best:
                best = key
            return
        for v in range(n):
            if colors[v] == split:
                # individualise v ahead of the rest of its class
                search([2 * c + (c == split and u != v) for u, c in enumerate(colors)])

    search([0] * n)
    return (n, len(graphs), best)
