"""Monomials and monomial ideals in K[x1, ..., xn].

A monomial is stored as its exponent vector. A monomial ideal is stored as
the antichain of its minimal generators in a canonical order (total degree
ascending, then lexicographically descending), so two ideals are equal
exactly when their generator tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

Exponents = tuple[int, ...]

# pairwise divisibility is evaluated in row blocks of this size
_BLOCK = 512


class DimensionError(ValueError):
    """Raised when monomials or ideals from different ambient rings meet."""


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, j: int, n: int) -> "Monomial":
        """The variable x_{j+1} (0-based index ``j``)."""
        exps = [0] * n
        exps[j] = 1
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        exps = [0] * n
        for j in support:
            exps[j] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, e in enumerate(self.exponents) if e)

    def degree_in(self, j: int) -> int:
        return self.exponents[j]

    def _check(self, other: "Monomial"):
        if self.n != other.n:
            raise DimensionError(f"ambient dimensions differ: {self.n} vs {other.n}")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * a for a in self.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self.exponents)

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        return cls(parse_monomial(text, n))


def format_monomial(exps: Sequence[int]) -> str:
    factors = []
    for j, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{j + 1}")
        elif e > 1:
            factors.append(f"x{j + 1}^{e}")
    return "*".join(factors) if factors else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Exponents:
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if m is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        j = int(m.group(1)) - 1
        if not 0 <= j < n:
            raise DimensionError(f"variable x{j + 1} outside x1..x{n}")
        exps[j] += int(m.group(2) or 1)
    return tuple(exps)


def _sort_key(exps: Exponents):
    return (sum(exps), tuple(-e for e in exps))


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Divisibility-minimal rows of a 2-d exponent array (duplicates removed)."""
    if len(arr) == 0:
        return arr
    arr = np.unique(arr, axis=0)
    if len(arr) == 1:
        return arr
    arr = arr[np.argsort(arr.sum(axis=1), kind="stable")]
    # Only rows of smaller or equal degree can divide, and a row with a
    # non-minimal divisor also has a minimal one, so each block is tested
    # against the minimal rows found so far plus the block itself.
    kept = arr[:0]
    for start in range(0, len(arr), _BLOCK):
        block = arr[start:start + _BLOCK]
        cand = np.vstack([kept, block])
        div = np.all(cand[None, :, :] <= block[:, None, :], axis=2)
        div[np.arange(len(block)), len(kept) + np.arange(len(block))] = False
        kept = np.vstack([kept, block[~div.any(axis=1)]])
    return kept


def _divisible_mask(targets: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """mask[i] is True when targets[i] is divisible by some row of gens."""
    out = np.zeros(len(targets), dtype=bool)
    if len(gens) == 0 or len(targets) == 0:
        return out
    for start in range(0, len(targets), _BLOCK):
        block = targets[start:start + _BLOCK]
        out[start:start + len(block)] = np.all(
            gens[None, :, :] <= block[:, None, :], axis=2).any(axis=1)
    return out


class MonomialIdeal:
    """A monomial ideal of K[x1..xn], immutable, held by its minimal generators."""

    __slots__ = ("n", "gens", "_arr")

    def __init__(self, n: int, gens: Iterable[Sequence[int] | Monomial] = (), *,
                 _canonical: bool = False):
        self.n = int(n)
        rows = [g.exponents if isinstance(g, Monomial) else tuple(int(e) for e in g)
                for g in gens]
        for r in rows:
            if len(r) != self.n:
                raise DimensionError(f"generator {r} does not live in {self.n} variables")
            if any(e < 0 for e in r):
                raise ValueError(f"negative exponent in {r}")
        if not _canonical:
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), self.n)
            rows = [tuple(int(e) for e in r) for r in _minimal_rows(arr)]
        self.gens: tuple[Exponents, ...] = tuple(sorted(rows, key=_sort_key))
        self._arr = None

    @classmethod
    def _from_array(cls, n: int, arr: np.ndarray) -> "MonomialIdeal":
        rows = [tuple(int(e) for e in r) for r in _minimal_rows(arr)]
        return cls(n, rows, _canonical=True)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, (), _canonical=True)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n], _canonical=True)

    @classmethod
    def variables(cls, support: Iterable[int], n: int) -> "MonomialIdeal":
        """The monomial prime generated by the given variables."""
        return cls(n, [Monomial.variable(j, n) for j in sorted(set(support))])

    @property
    def array(self) -> np.ndarray:
        if self._arr is None:
            self._arr = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.n)
        return self._arr

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(g) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def support(self) -> frozenset[int]:
        """Variables appearing in some minimal generator."""
        return frozenset(j for g in self.gens for j, e in enumerate(g) if e)

    def __len__(self) -> int:
        return len(self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, {self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, s: int) -> "MonomialIdeal":
        return power(self, s)

    @classmethod
    def parse(cls, text: str, n: int) -> "MonomialIdeal":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"ideal text must be parenthesised: {text!r}")
        body = text[1:-1].strip()
        if body in ("", "0"):
            return cls.zero(n)
        return cls(n, [parse_monomial(part, n) for part in body.split(",")])


def _same_dim(*ideals: MonomialIdeal) -> int:
    dims = {I.n for I in ideals}
    if len(dims) != 1:
        raise DimensionError(f"ambient dimensions differ: {sorted(dims)}")
    return dims.pop()


def minimalize(gens: Iterable[Sequence[int] | Monomial], n: int) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    return MonomialIdeal(n, gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(I, J)
    if I.is_zero:
        return J
    if J.is_zero:
        return I
    return MonomialIdeal._from_array(n, np.vstack([I.array, J.array]))


def sum_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    return reduce(ideal_sum, ideals, MonomialIdeal.zero(n))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    cand = (I.array[:, None, :] + J.array[None, :, :]).reshape(-1, n)
    return MonomialIdeal._from_array(n, cand)


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """Ordinary power I^s for s >= 1."""
    if s < 1:
        raise ValueError(f"ordinary powers need s >= 1, got {s}")
    result = I
    for _ in range(s - 1):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_dim(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(n)
    A, B = I.array, J.array
    # a generator already in the other ideal absorbs every lcm it takes part in
    a_in = _divisible_mask(A, B)
    b_in = _divisible_mask(B, A)
    parts = [A[a_in], B[b_in]]
    A2, B2 = A[~a_in], B[~b_in]
    if len(A2) and len(B2):
        parts.append(np.maximum(A2[:, None, :], B2[None, :, :]).reshape(-1, n))
    return MonomialIdeal._from_array(n, np.vstack(parts))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left fold of :func:`intersect`; needs at least one ideal."""
    if not ideals:
        raise ValueError("empty intersection has no ambient ring")
    return reduce(intersect, ideals)


def _as_exponents(u, n: int) -> Exponents:
    exps = u.exponents if isinstance(u, Monomial) else tuple(u)
    if len(exps) != n:
        raise DimensionError(f"monomial {exps} does not live in {n} variables")
    return exps


def colon(I: MonomialIdeal, u) -> MonomialIdeal:
    """(I : u) for a monomial u."""
    exps = _as_exponents(u, I.n)
    if I.is_zero:
        return I
    if not any(exps):
        return I
    cand = np.maximum(I.array - np.array(exps, dtype=np.int64), 0)
    return MonomialIdeal._from_array(I.n, cand)


def contains(I: MonomialIdeal, m) -> bool:
    exps = _as_exponents(m, I.n)
    return any(all(a <= b for a, b in zip(g, exps)) for g in I.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I.gens == J.gens


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I is contained in J."""
    _same_dim(I, J)
    return all(contains(J, g) for g in I.gens)
