"""Ideals attached to graphs: edge ideals, cover primes and symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

import numpy as np

from .graphs import Graph, minimal_vertex_covers
from .monomials import Monomial, MonomialIdeal, ideal_sum

#: abort symbolic power construction beyond this many generators
DEFAULT_GENERATOR_CAP = 5000


class GeneratorCapExceeded(RuntimeError):
    pass


class HypothesisError(ValueError):
    """Inputs violate the hypotheses a construction or check requires."""


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.n, [Monomial.from_support(e, G.n) for e in G.edges])


def prime_power(C: Iterable[int], s: int, n: int) -> MonomialIdeal:
    """p_C^s: every degree-s monomial supported on C."""
    C = sorted(set(C))
    if not C:
        raise ValueError("the prime of an empty cover is the zero ideal; p_C^s is undefined here")
    if s < 1:
        raise ValueError(f"prime powers need s >= 1, got {s}")
    gens = [Monomial.from_support(combo, n) for combo in combinations_with_replacement(C, s)]
    return MonomialIdeal(n, gens, _canonical=True)


def _intersect_prime_power(I: MonomialIdeal, C: list[int], s: int) -> MonomialIdeal:
    """I n p_C^s without forming all pairwise lcms.

    The minimal monomials of (g) n p_C^s are g*u with u supported on C and
    deg u = s - deg_C(g), so only those products are generated.
    """
    n = I.n
    A = I.array
    deficit = s - A[:, C].sum(axis=1)
    parts = [A[deficit <= 0]]
    for k in range(1, s + 1):
        rows = A[deficit == k]
        if not len(rows):
            continue
        U = np.array([Monomial.from_support(c, n).exponents
                      for c in combinations_with_replacement(C, k)], dtype=np.int64)
        parts.append((rows[:, None, :] + U[None, :, :]).reshape(-1, n))
    return MonomialIdeal._from_array(n, np.vstack(parts))


def in_prime_power(m, C: Iterable[int], s: int) -> bool:
    exps = m.exponents if isinstance(m, Monomial) else m
    return sum(exps[j] for j in C) >= s


@dataclass(frozen=True)
class CoverPrimeDecomposition:
    covers: tuple[frozenset[int], ...]
    primes: tuple[MonomialIdeal, ...]

    @classmethod
    def of(cls, G: Graph) -> "CoverPrimeDecomposition":
        covers = tuple(minimal_vertex_covers(G))
        return cls(covers, tuple(MonomialIdeal.variables(C, G.n) for C in covers if C))


def symbolic_power(G: Graph, s: int, cap: int = DEFAULT_GENERATOR_CAP) -> MonomialIdeal:
    """I(G)^(s) as the intersection of p_C^s over all minimal vertex covers C.

    For s <= 0 this is the unit ideal; for an edgeless graph and s >= 1 it is zero.
    """
    if s <= 0:
        return MonomialIdeal.unit(G.n)
    if G.num_edges == 0:
        return MonomialIdeal.zero(G.n)
    result = None
    for C in minimal_vertex_covers(G):
        if result is None:
            result = prime_power(C, s, G.n)
        else:
            result = _intersect_prime_power(result, sorted(C), s)
        if len(result) > cap:
            raise GeneratorCapExceeded(
                f"symbolic power s={s} exceeded {cap} generators on {G!r}")
    return result


def in_symbolic_power(G: Graph, s: int, m) -> bool:
    """Membership by checking every cover inequality; independent of the intersection."""
    if s <= 0:
        return True
    covers = minimal_vertex_covers(G)
    if G.num_edges == 0:
        return False
    return all(in_prime_power(m, C, s) for C in covers)


def mixed_ideal(H: Graph, H2: Graph, s: int) -> MonomialIdeal:
    """I(H)^(s) + I(H2) for edge-disjoint graphs on a common vertex set."""
    if H.n != H2.n:
        raise HypothesisError("H and H' must share the vertex set")
    if s < 1:
        raise HypothesisError(f"s must be positive, got {s}")
    common = H.edge_set() & H2.edge_set()
    if common:
        raise HypothesisError(f"edge sets overlap in {sorted(common)}")
    return ideal_sum(symbolic_power(H, s), edge_ideal(H2))
