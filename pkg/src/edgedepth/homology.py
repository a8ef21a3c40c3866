"""Multigraded Betti numbers and depth of S/I for monomial ideals I.

The main route computes beta_{i+1,b}(S/I) as the rank of reduced homology
H_{i-1} of the upper Koszul complex K^b(I) = {tau subset supp(b) : x^(b - tau) in I},
sweeping b over the grid of generator exponents. The Taylor complex gives an
independent second route used for cross-checking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable

import numpy as np

from .linalg import is_prime, rank
from .monomials import MonomialIdeal

#: betti_via_taylor enumerates all 2^m generator subsets
TAYLOR_MAX_GENERATORS = 14


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"field characteristic must be 0 or prime, got {c}")

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of vertex subsets, faces stored as bitmasks.

    ``faces`` empty is the void complex; ``faces == {0}`` is the irrelevant
    complex {emptyset}. The two have different reduced homology.
    """
    vertices: frozenset[int]
    faces: frozenset[int]

    @classmethod
    def from_faces(cls, vertices: Iterable[int], faces: Iterable[Iterable[int]]):
        masks = set()
        for f in faces:
            m = 0
            for v in f:
                m |= 1 << v
            masks.add(m)
        return cls(frozenset(vertices), frozenset(masks))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_irrelevant(self) -> bool:
        return self.faces == frozenset({0})

    @property
    def dimension(self) -> int:
        return max((_popcount(f) for f in self.faces), default=0) - 1

    def face_sets(self) -> list[frozenset[int]]:
        return sorted((frozenset(_bits(f)) for f in self.faces), key=lambda s: (len(s), sorted(s)))

    def is_closed(self) -> bool:
        return all(f & ~(1 << v) in self.faces for f in self.faces for v in _bits(f))


def upper_koszul_complex(I: MonomialIdeal, b) -> SimplicialComplex:
    b = tuple(int(e) for e in b)
    if len(b) != I.n:
        raise ValueError(f"multidegree {b} does not live in {I.n} variables")
    if any(e < 0 for e in b):
        raise ValueError(f"multidegree {b} has a negative entry")
    supp = [j for j, e in enumerate(b) if e]
    faces = []
    for k in range(1 << len(supp)):
        tau = [supp[i] for i in _bits(k)]
        c = list(b)
        for j in tau:
            c[j] -= 1
        if I.__contains__(tuple(c)):
            faces.append(tau)
    return SimplicialComplex.from_faces(supp, faces)


def reduced_homology_ranks(K: SimplicialComplex, F: FieldSpec = QQ) -> list[int]:
    """Ranks of reduced homology; entry k is the rank of H_{k-1}."""
    if K.is_void:
        return [0]
    by_dim: dict[int, list[int]] = {}
    for f in K.faces:
        by_dim.setdefault(_popcount(f) - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}

    def boundary_rank(d: int) -> int:
        # rank of the boundary map from d-faces to (d-1)-faces
        if d not in by_dim or d - 1 not in by_dim:
            return 0
        lower = index[d - 1]
        rows = []
        for f in by_dim[d]:
            row = {}
            for pos, v in enumerate(_bits(f)):
                row[lower[f & ~(1 << v)]] = -1 if pos & 1 else 1
            rows.append(row)
        return rank(rows, F.characteristic)

    ranks = {d: boundary_rank(d) for d in range(0, top + 1)}
    out = []
    for d in range(-1, top + 1):
        dim_c = len(by_dim.get(d, ()))
        out.append(dim_c - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return out


@dataclass
class BettiTable:
    """Multigraded Betti numbers of S/I: (i, b) -> beta_{i,b}."""
    n: int
    entries: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def totals(self) -> list[int]:
        top = max((i for i, _ in self.entries), default=-1)
        out = [0] * (top + 1)
        for (i, _), r in self.entries.items():
            out[i] += r
        return out

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _), r in self.entries.items() if r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        mine = {k: v for k, v in self.entries.items() if v}
        theirs = {k: v for k, v in other.entries.items() if v}
        return self.n == other.n and mine == theirs

    def to_dict(self) -> dict:
        rows = [{"i": i, "b": list(b), "rank": r}
                for (i, b), r in sorted(self.entries.items()) if r]
        return {"n": self.n, "entries": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        return cls(data["n"], {(e["i"], tuple(e["b"])): e["rank"] for e in data["entries"]})


def _check_proper(I: MonomialIdeal):
    if I.is_unit:
        raise ValueError("S/I is zero for the unit ideal; no Betti numbers or depth")


class LatticeViolation(AssertionError):
    pass


def strong_core(faces: frozenset[int], vertices: int) -> frozenset[int]:
    """Delete dominated vertices until none is left.

    v is dominated by w when every facet containing v also contains w; then
    deleting v is a strong deformation retraction, so homology is unchanged.
    """
    faces = set(faces)
    while True:
        facets = [f for f in faces
                  if not any(f | 1 << v in faces for v in _bits(vertices & ~f))]
        removed = False
        for v in _bits(vertices):
            common = vertices
            for f in facets:
                if f >> v & 1:
                    common &= f
            if common & ~(1 << v):
                faces = {f for f in faces if not f >> v & 1}
                vertices &= ~(1 << v)
                removed = True
                break
        if not removed:
            return frozenset(faces)


def betti_table(I: MonomialIdeal, F: FieldSpec = QQ, full_grid: bool = False) -> BettiTable:
    """Multigraded Betti table of S/I via upper Koszul complexes.

    Only lcm-lattice points of the exponent grid can carry homology. With
    ``full_grid`` every grid point in I is examined and a nonzero entry off
    the lattice raises :class:`LatticeViolation`.
    """
    _check_proper(I)
    n = I.n
    table = BettiTable(n, {(0, (0,) * n): 1})
    if I.is_zero:
        return table
    gens = I.array
    active = [j for j in range(n) if gens[:, j].any()]
    values = [np.unique(np.concatenate([[0], gens[:, j]])) for j in active]
    shape = tuple(len(v) for v in values)
    k = len(active)
    sub = gens[:, active]

    # every grid point as an index vector and as an exponent vector
    idx = np.indices(shape).reshape(k, -1).T
    pts = np.stack([values[j][idx[:, j]] for j in range(k)], axis=1)

    in_I = np.zeros(len(pts), dtype=bool)
    lattice = np.zeros(len(pts), dtype=bool)
    for start in range(0, len(pts), 2048):
        block = pts[start:start + 2048]
        div = np.all(sub[None, :, :] <= block[:, None, :], axis=2)
        in_I[start:start + len(block)] = div.any(axis=1)
        lcm = np.where(div[:, :, None], sub[None, :, :], 0).max(axis=1)
        lattice[start:start + len(block)] = np.all(lcm == block, axis=1)

    chosen = np.nonzero(in_I if full_grid else in_I & lattice)[0]
    strides = np.array([int(np.prod(shape[j + 1:])) for j in range(k)], dtype=np.int64)
    flat = idx[chosen] @ strides
    taus = np.arange(1 << k)
    tau_bits = (taus[:, None] >> np.arange(k)[None, :]) & 1
    offsets = tau_bits @ strides
    # tau lies in supp(b) iff no coordinate of tau has index 0 at b
    zero_coords = (idx[chosen] == 0).astype(np.int64) @ (1 << np.arange(k))
    inside = (zero_coords[:, None] & taus[None, :]) == 0
    target = np.where(inside, flat[:, None] - offsets[None, :], 0)
    faces = inside & in_I[target]

    cone = np.zeros(len(chosen), dtype=bool)
    for v in range(k):
        without = taus[(taus >> v & 1) == 0]
        ok = np.all(~faces[:, without] | faces[:, without | (1 << v)], axis=1)
        cone |= ok

    for row in np.nonzero(~cone)[0]:
        face_masks = frozenset(int(t) for t in np.nonzero(faces[row])[0])
        face_masks = strong_core(face_masks, (1 << k) - 1)
        K = SimplicialComplex(frozenset(range(k)), face_masks)
        ranks = reduced_homology_ranks(K, F)
        point = chosen[row]
        b = [0] * n
        for j, e in zip(active, pts[point]):
            b[j] = int(e)
        b = tuple(b)
        for pos, r in enumerate(ranks):
            if r:
                if not lattice[point]:
                    raise LatticeViolation(f"nonzero Betti number off the lcm lattice at {b}")
                # pos indexes H_{pos-1}, which feeds beta_{pos+1}
                table.entries[(pos + 1, b)] = table.entries.get((pos + 1, b), 0) + r
    return table


def projective_dimension(I: MonomialIdeal, F: FieldSpec = QQ) -> int:
    _check_proper(I)
    if I.is_zero:
        return 0
    return betti_table(_restrict_to_support(I), F).projective_dimension


def _restrict_to_support(I: MonomialIdeal) -> MonomialIdeal:
    supp = sorted(I.support)
    if len(supp) == I.n:
        return I
    return MonomialIdeal(len(supp), [tuple(g[j] for j in supp) for g in I.gens], _canonical=True)


def depth(I: MonomialIdeal, F: FieldSpec = QQ) -> int:
    """depth S/I = n - pd(S/I)."""
    _check_proper(I)
    if I.is_zero:
        return I.n
    return I.n - projective_dimension(I, F)


def betti_via_taylor(I: MonomialIdeal, F: FieldSpec = QQ,
                     max_generators: int = TAYLOR_MAX_GENERATORS) -> BettiTable:
    """Betti table of S/I from the Taylor complex tensored with the field.

    After tensoring, the differential keeps only the faces sigma -> sigma - g
    with lcm(sigma - g) == lcm(sigma), so the complex splits by multidegree.
    """
    _check_proper(I)
    m = len(I)
    if m > max_generators:
        raise ValueError(f"Taylor complex on {m} generators exceeds the cap of {max_generators}")
    n = I.n
    gens = I.array
    lcms = np.zeros((1 << m, n), dtype=np.int64)
    for g in range(m):
        lo, hi = 1 << g, 1 << (g + 1)
        lcms[lo:hi] = np.maximum(lcms[:lo], gens[g])
    _, label = np.unique(lcms, axis=0, return_inverse=True)
    label = label.reshape(-1)

    groups: dict[int, list[int]] = {}
    for sigma, lab in enumerate(label.tolist()):
        groups.setdefault(lab, []).append(sigma)

    table = BettiTable(n)
    for lab, members in groups.items():
        b = tuple(int(e) for e in lcms[members[0]])
        by_size: dict[int, list[int]] = {}
        for sigma in members:
            by_size.setdefault(_popcount(sigma), []).append(sigma)
        pos = {sigma: i for size in by_size.values() for i, sigma in enumerate(size)}

        def diff_rank(size: int) -> int:
            if size not in by_size or size - 1 not in by_size:
                return 0
            rows = []
            for sigma in by_size[size]:
                row = {}
                for p, g in enumerate(_bits(sigma)):
                    face = sigma & ~(1 << g)
                    if label[face] == lab:
                        row[pos[face]] = -1 if p & 1 else 1
                rows.append(row)
            return rank(rows, F.characteristic)

        ranks = {size: diff_rank(size) for size in by_size}
        for size, sigmas in by_size.items():
            h = len(sigmas) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                table.entries[(size, b)] = h
    return table


def lcm_lattice(I: MonomialIdeal) -> set[tuple[int, ...]]:
    """All lcms of nonempty generator subsets (brute-force closure)."""
    lattice = set()
    frontier = set(I.gens)
    while frontier:
        lattice |= frontier
        frontier = {tuple(max(a, c) for a, c in zip(x, g)) for x in frontier for g in I.gens}
        frontier -= lattice
    return lattice


def grid(I: MonomialIdeal):
    """Iterate the exponent grid prod_j {0} + {exponents of x_j among generators}."""
    cols = [sorted({0} | {g[j] for g in I.gens}) for j in range(I.n)]
    return cartesian(*cols)
