"""Rank of sparse rational matrices, exactly and modulo a prime.

Rows are mappings ``column -> coefficient``. The exact path clears
denominators and eliminates over the integers with content removal after
every step (fraction-free, no rationals ever formed). The modular path works
in GF(p). :func:`rank` runs both and refuses to answer if they differ.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .errors import RankMismatch

Number = Union[int, Fraction]
Row = Mapping[int, Number]

DEFAULT_PRIME = 2_147_483_647


def integer_row(row: Row) -> dict[int, int]:
    """Scale a rational row to a primitive integer row (zero entries dropped)."""
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = reduce(lcm, (v.denominator for _, v in items), 1)
    ints = {c: int(v * den) for c, v in items}
    g = reduce(gcd, ints.values())
    return {c: v // g for c, v in ints.items()}


def exact_rank(rows: Iterable[Row]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = integer_row(row)
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                if r[lead] < 0:
                    r = {c: -v for c, v in r.items()}
                pivots[lead] = r
                break
            a, b = r[lead], p[lead]
            if b == 1:
                new = dict(r)
            else:
                new = {c: b * v for c, v in r.items()}
            for c, v in p.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if new:
                g = reduce(gcd, new.values())
                if g != 1:
                    new = {c: v // g for c, v in new.items()}
            r = new
    return len(pivots)


def modular_rank(rows: Iterable[Row], prime: int = DEFAULT_PRIME) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {}
        for c, v in row.items():
            v = Fraction(v)
            w = v.numerator * pow(v.denominator, -1, prime) % prime
            if w:
                r[c] = w
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                inv = pow(r[lead], -1, prime)
                pivots[lead] = {c: v * inv % prime for c, v in r.items()}
                break
            a = r[lead]
            for c, v in p.items():
                w = (r.get(c, 0) - a * v) % prime
                if w:
                    r[c] = w
                else:
                    r.pop(c, None)
    return len(pivots)


def rank(rows: Iterable[Row], check_modular: bool = True) -> int:
    rows = list(rows)
    r = exact_rank(rows)
    if check_modular:
        m = modular_rank(rows)
        if m != r:
            raise RankMismatch(f"exact rank {r} but rank mod p is {m}")
    return r
