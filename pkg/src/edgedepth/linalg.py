"""Exact rank of sparse integer matrices over Q or GF(p).

Rows are dicts ``{column: value}``. Elimination is incremental: each row is
reduced against the pivots found so far, so the rank is the number of rows
that survive. Over Q the reduction is fraction-free (cross-multiplication
followed by division by the row content); over GF(2) rows become bitmasks.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rank(rows: Iterable[Mapping[int, int]], characteristic: int = 0) -> int:
    if characteristic == 0:
        return _rank_rational(rows)
    if characteristic == 2:
        return _rank_gf2(rows)
    return _rank_modp(rows, characteristic)


def _rank_gf2(rows) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        bits = 0
        for c, v in row.items():
            if v & 1:
                bits ^= 1 << c
        while bits:
            lead = bits.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = bits
                r += 1
                break
            bits ^= p
    return r


def _rank_modp(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                r += 1
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return r


def _rank_rational(rows) -> int:
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                r += 1
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            content = 0
            for v in new.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                new = {c: v // content for c, v in new.items()}
            row = new
    return r
