"""Quadratic sets ``r(x, y) = (x o y, x . y)`` and the braid relation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .birack import Birack, make_birack
from .errors import Degenerate, NotInvolutive, NotQuadraticSet, ShapeMismatch
from .structures import Perm, compose, is_perm

Pair = tuple[int, int]


@dataclass(frozen=True)
class Solution:
    """``r[x][y]`` is the image pair of ``(x, y)``."""

    r: tuple[tuple[Pair, ...], ...]

    def __post_init__(self):
        r = tuple(tuple((int(a), int(b)) for a, b in row) for row in self.r)
        object.__setattr__(self, "r", r)
        n = len(r)
        if n < 1 or any(len(row) != n for row in r):
            raise ShapeMismatch("pair table must be n x n")
        images = {pair for row in r for pair in row}
        if any(not (0 <= a < n and 0 <= b < n) for a, b in images) or len(images) != n * n:
            raise NotQuadraticSet("r is not a bijection of X x X")

    @property
    def n(self) -> int:
        return len(self.r)

    def __call__(self, x: int, y: int) -> Pair:
        return self.r[x][y]

    def L(self, x: int) -> Perm:
        return tuple(self.r[x][y][0] for y in range(self.n))

    def R(self, y: int) -> Perm:
        return tuple(self.r[x][y][1] for x in range(self.n))

    def is_nondegenerate(self) -> bool:
        return all(is_perm(self.L(x)) and is_perm(self.R(x)) for x in range(self.n))

    def is_involutive(self) -> bool:
        r = self.r
        return all(r[a][b] == (x, y) for x in range(self.n) for y in range(self.n) for a, b in [r[x][y]])


def flip(n: int) -> Solution:
    return Solution(tuple(tuple((y, x) for y in range(n)) for x in range(n)))


def to_solution(B: Birack) -> Solution:
    n = B.n
    return Solution(tuple(tuple((B.circ[x][y], B.bullet[x][y]) for y in range(n)) for x in range(n)))


def from_solution(S: Solution) -> Birack:
    if not S.is_nondegenerate():
        raise Degenerate("some L_x or R_x is not a bijection")
    if not S.is_involutive():
        raise NotInvolutive("r o r is not the identity")
    n = S.n
    circ = [[S.r[x][y][0] for y in range(n)] for x in range(n)]
    bullet = [[S.r[x][y][1] for y in range(n)] for x in range(n)]
    return make_birack(circ, bullet)


def braid_counterexample(S: Solution) -> Optional[tuple[int, int, int]]:
    """First triple (lexicographic) where the two sides of the braid relation differ."""
    r = S.r
    n = S.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # (id x r)(r x id)(id x r)
                b, c = r[y][z]
                a, b = r[x][b]
                b, c = r[b][c]
                left = (a, b, c)
                # (r x id)(id x r)(r x id)
                a, b = r[x][y]
                b, c = r[b][z]
                a, b = r[a][b]
                if left != (a, b, c):
                    return (x, y, z)
    return None


def is_braided(S: Solution) -> bool:
    return braid_counterexample(S) is None


@dataclass(frozen=True)
class BraidConditions:
    l1: bool
    r1: bool
    lr3: bool

    def __iter__(self):
        return iter((self.l1, self.r1, self.lr3))

    @property
    def all(self) -> bool:
        return self.l1 and self.r1 and self.lr3


def check_l1_r1_lr3(S: Solution, require_nondegenerate: bool = True) -> BraidConditions:
    """Evaluate l1, r1 and lr3 over all triples.

    The three identities only make sense as a braid criterion for
    non-degenerate S, hence the default guard; pass
    ``require_nondegenerate=False`` to evaluate them on any pair table.
    """
    if require_nondegenerate and not S.is_nondegenerate():
        raise Degenerate("some L_x or R_x is not a bijection")
    n = S.n
    r = S.r

    def lact(x, y):
        return r[x][y][0]

    def ract(x, y):
        # x^y
        return r[x][y][1]

    l1 = r1 = lr3 = True
    for x in range(n):
        for y in range(n):
            xy, x_y = lact(x, y), ract(x, y)
            for z in range(n):
                if l1 and lact(x, lact(y, z)) != lact(xy, lact(x_y, z)):
                    l1 = False
                yz, y_z = lact(y, z), ract(y, z)
                if r1 and ract(x_y, z) != ract(ract(x, yz), y_z):
                    r1 = False
                if lr3 and ract(xy, lact(x_y, z)) != lact(ract(x, yz), y_z):
                    lr3 = False
    return BraidConditions(l1, r1, lr3)


def is_square_free(S: Solution) -> bool:
    return all(S.r[x][x] == (x, x) for x in range(S.n))


def permutation_group(S: Solution) -> list[Perm]:
    """Sorted elements of the group generated by the left actions ``L_x``."""
    if not S.is_nondegenerate():
        raise Degenerate("some L_x or R_x is not a bijection")
    gens = sorted(set(S.L(x) for x in range(S.n)))
    e = tuple(range(S.n))
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen)


def permutation_group_order(S: Solution) -> int:
    return len(permutation_group(S))
