"""Seeded instance generators: random and exhaustive graphs, trees, ideals."""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Iterator

from .graphs import Graph, is_chordal
from .monomials import MonomialIdeal


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_labeled_chordal_graphs(n: int) -> Iterator[Graph]:
    return (G for G in all_labeled_graphs(n) if is_chordal(G))


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Grow a chordal graph by attaching each new vertex to a random clique.

    The new vertex is simplicial when added, so the reverse insertion order
    is a perfect elimination ordering. Labels are shuffled at the end.
    """
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        clique: list[int] = []
        if rng.random() < 0.85:
            start = rng.randrange(v)
            clique = [start]
            others = [u for u in range(v) if u != start]
            rng.shuffle(others)
            for u in others:
                if all(u in adj[w] for w in clique) and rng.random() < 0.5:
                    clique.append(u)
        for u in clique:
            adj[v].add(u)
            adj[u].add(v)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u in range(n) for v in adj[u] if u < v])


def prufer_to_tree(seq) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on n vertices, one per Pruefer sequence."""
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)])


def random_clique(G: Graph, rng: random.Random, first: int | None = None) -> list[int]:
    """A random clique, grown greedily from ``first`` (or a random vertex)."""
    x1 = rng.randrange(G.n) if first is None else first
    clique = [x1]
    others = sorted(G.neighbors(x1))
    rng.shuffle(others)
    for u in others:
        if all(G.has_edge(u, w) for w in clique) and rng.random() < 0.6:
            clique.append(u)
    return clique


def random_chordal_subgraph_split(G: Graph, rng: random.Random, tries: int = 50):
    """Random edge 2-colouring (H, H') of G with H chordal."""
    edges = G.edges
    for _ in range(tries):
        keep = [e for e in edges if rng.random() < 0.5]
        H = Graph(G.n, keep)
        if is_chordal(H):
            rest = [e for e in edges if e not in set(keep)]
            return H, Graph(G.n, rest)
    return Graph(G.n), G


def random_monomial_ideal(n: int, max_gens: int, max_exp: int,
                          rng: random.Random) -> MonomialIdeal:
    """Random proper monomial ideal; some variables are kept squarefree."""
    squarefree = {j for j in range(n) if rng.random() < 0.5}
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, min(n, 4))
        supp = rng.sample(range(n), size)
        exps = [0] * n
        for j in supp:
            exps[j] = 1 if j in squarefree else rng.randint(1, max_exp)
        gens.append(tuple(exps))
    return MonomialIdeal(n, gens)


def random_certificate(I: MonomialIdeal, rng: random.Random):
    """Random certificate rows (center, neighbours) satisfying both conditions.

    Returns a list of rows; may be empty when no centre fits.
    """
    n = I.n
    max_exp = [max((g[j] for g in I.gens), default=0) for j in range(n)]
    unused = set(range(n))
    rows = []
    order = list(range(n))
    rng.shuffle(order)
    for center in order:
        if center not in unused or rng.random() < 0.25:
            continue
        pool = [j for j in sorted(unused) if j != center and max_exp[j] <= 1]
        nbrs = [j for j in pool if rng.random() < 0.3]
        ok = True
        for g in I.gens:
            if g[center] and not any(g[j] for j in nbrs):
                fix = [j for j in pool if g[j] and j not in nbrs]
                if not fix:
                    ok = False
                    break
                nbrs.append(rng.choice(fix))
        if not ok:
            continue
        rows.append((center, tuple(sorted(nbrs))))
        unused -= {center, *nbrs}
    return rows
