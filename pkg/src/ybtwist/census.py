"""Exhaustive census of small involutive solutions and of twist systems.

Solutions are generated as right cyclic non-degenerate left quasigroups
(one permutation per row, chosen by backtracking) and turned into biracks
by the correspondence with involutive biracks.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .birack import Birack, derive_birack, is_birack_graded, make_birack
from .errors import HypothesisViolated, SizeUnsupported
from .isotope import TwistSystem
from .structures import (
    Grading,
    Perm,
    Table,
    compose,
    inverse,
    is_automorphism,
    is_graded,
    preserves_grading,
    relabel,
    validate_left_quasigroup,
)

MAX_N = 4
MAX_N_LONG = 5


def _check_size(n: int, allow_long: bool) -> None:
    limit = MAX_N_LONG if allow_long else MAX_N
    if not 1 <= n <= limit:
        hint = "" if allow_long or n != MAX_N_LONG else " (n = 5 needs allow_long, or --long on the command line)"
        raise SizeUnsupported(f"census supports 1 <= n <= {limit}, got {n}{hint}")


# -- search ------------------------------------------------------------------

def _extend(n: int, perms, inverses, rows: list, invs: list, out: list) -> None:
    k = len(rows)
    if k == n:
        out.append(tuple(rows))
        return
    diag = {invs[x][x] for x in range(k)}
    for p, q in zip(perms, inverses):
        if q[k] in diag:
            continue
        rows.append(p)
        invs.append(q)
        if _consistent(rows, invs, k, n):
            _extend(n, perms, inverses, rows, invs, out)
        rows.pop()
        invs.pop()


def _consistent(rows, invs, k: int, n: int) -> bool:
    """Right cyclic identity on every pair that became checkable when row k was placed."""
    for x in range(k + 1):
        ix = invs[x]
        Lx = rows[x]
        for y in range(x + 1, k + 1):
            a, b = ix[y], invs[y][x]
            if a > k or b > k:
                continue
            if k not in (x, y, a, b):
                continue
            La, Lb, Ly = rows[a], rows[b], rows[y]
            for z in range(n):
                if Lx[La[z]] != Ly[Lb[z]]:
                    return False
    return True


def _search_from(n: int, first: Perm) -> list[Table]:
    perms = list(itertools.permutations(range(n)))
    inverses = [inverse(p) for p in perms]
    out: list[Table] = []
    rows, invs = [first], [inverse(first)]
    if _consistent(rows, invs, 0, n):
        _extend(n, perms, inverses, rows, invs, out)
    return out


def right_cyclic_tables(n: int, workers: int = 1) -> list[Table]:
    """All labeled non-degenerate right cyclic tables on n points, sorted."""
    firsts = list(itertools.permutations(range(n)))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_search_from, [n] * len(firsts), firsts))
    else:
        chunks = [_search_from(n, f) for f in firsts]
    return sorted(t for chunk in chunks for t in chunk)


def naive_right_cyclic_tables(n: int) -> list[Table]:
    """Reference oracle: filter every n!^n row tuple, no pruning.

    Uses the three-variable form ``(x\\y)\\(x\\z) = (y\\x)\\(y\\z)`` and its own
    division tables so it shares no code path with the pruned search.
    """
    perms = list(itertools.permutations(range(n)))
    out = []
    for rows in itertools.product(perms, repeat=n):
        ldiv = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                ldiv[x][rows[x][y]] = y
        if len({ldiv[x][x] for x in range(n)}) != n:
            continue
        if all(
            ldiv[ldiv[x][y]][ldiv[x][z]] == ldiv[ldiv[y][x]][ldiv[y][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        ):
            out.append(tuple(rows))
    return sorted(out)


# -- isomorphism -------------------------------------------------------------

CanonicalForm = tuple[Table, Table]


def canonical_label(B: Birack) -> CanonicalForm:
    """Least ``(circ, bullet)`` over all relabelings, compared row-major."""
    n = B.n
    return min(
        (relabel(B.circ, f), relabel(B.bullet, f)) for f in itertools.permutations(range(n))
    )


def automorphism_count(B: Birack) -> int:
    return sum(1 for f in itertools.permutations(range(B.n)) if is_automorphism(B, f))


def orbit_size(B: Birack) -> int:
    return factorial(B.n) // automorphism_count(B)


def enumerate_solutions(
    n: int, up_to_iso: bool = True, allow_long: bool = False, workers: int = 1
) -> list[Birack]:
    """Every involutive birack on n points, or one per isomorphism class.

    Output is sorted by canonical form (then by table for labeled output).
    Representatives are the canonical tables themselves.
    """
    _check_size(n, allow_long)
    labeled = _labeled(n, workers)
    if not up_to_iso:
        return [B for _, B in labeled]
    return _representatives(labeled)


def _labeled(n: int, workers: int) -> list[tuple[CanonicalForm, Birack]]:
    biracks = [derive_birack(validate_left_quasigroup(t)) for t in right_cyclic_tables(n, workers)]
    keyed = sorted(((canonical_label(B), B.circ), B) for B in biracks)
    return [(key[0], B) for key, B in keyed]


def _representatives(labeled) -> list[Birack]:
    forms = sorted({form for form, _ in labeled})
    return [make_birack(circ, bullet) for circ, bullet in forms]


@dataclass(frozen=True)
class CensusSummary:
    n: int
    labeled: int
    classes: int
    orbit_sizes: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return sum(self.orbit_sizes) == self.labeled


def census_summary(n: int, allow_long: bool = False, workers: int = 1) -> CensusSummary:
    _check_size(n, allow_long)
    labeled = _labeled(n, workers)
    reps = _representatives(labeled)
    return CensusSummary(n, len(labeled), len(reps), tuple(orbit_size(B) for B in reps))


# -- gradings and twist systems ------------------------------------------------

def all_gradings(n: int) -> Iterator[Grading]:
    """Every set partition of 0..n-1 as a first-occurrence numbered grading."""

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield Grading(tuple(prefix))
            return
        for b in range(1, top + 2):
            prefix.append(b)
            yield from grow(prefix, max(top, b))
            prefix.pop()

    yield from grow([], 0)


def gradings_of(B, birack: bool = True) -> list[Grading]:
    """Gradings compatible with B (both operations when ``birack``)."""
    test = is_birack_graded if birack else is_graded
    return [g for g in all_gradings(len(B.circ)) if test(B, g)]


def enumerate_twist_systems(B, g: Grading, strong: bool) -> list[TwistSystem]:
    """All twist systems for ``(B, g)`` passing the requested validation level, lexicographic."""
    if not is_graded(B, g):
        raise HypothesisViolated(["grading: left translations do not preserve blocks"])
    n = len(B.circ)
    circ = B.circ
    candidates = [f for f in itertools.permutations(range(n)) if preserves_grading(f, g)]
    if strong:
        candidates = [
            f
            for f in candidates
            if is_automorphism(B, f) and all(circ[f[x]] == circ[x] for x in range(n))
        ]
    out = []
    for phis in itertools.product(candidates, repeat=g.p):
        if all(
            compose(phis[s], phis[t]) == compose(phis[t], phis[s])
            for s in range(g.p)
            for t in range(s + 1, g.p)
        ):
            out.append(TwistSystem(phis, g))
    return out
