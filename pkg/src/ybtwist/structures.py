"""Finite carriers, permutations, Cayley tables, gradings and left/right quasigroups.

Elements of an n-element carrier are the integers ``0..n-1``. A permutation
is a tuple ``p`` with ``p[x]`` the image of ``x``. A Cayley table is a tuple
of rows, ``table[x][y] = x o y``; row ``x`` is the left translation ``L_x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    ColumnNotBijective,
    MalformedInput,
    NotPermutation,
    RowNotBijective,
    ShapeMismatch,
)

Perm = tuple[int, ...]
Table = tuple[tuple[int, ...], ...]


# -- permutations -----------------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(p: Sequence[int]) -> bool:
    n = len(p)
    return sorted(p) == list(range(n))


def as_perm(p: Sequence[int], n: Optional[int] = None) -> Perm:
    p = tuple(int(v) for v in p)
    if not is_perm(p):
        raise NotPermutation(f"{list(p)} is not a permutation of 0..{len(p) - 1}")
    if n is not None and len(p) != n:
        raise ShapeMismatch(f"permutation has length {len(p)}, expected {n}")
    return p


def compose(f: Perm, g: Perm) -> Perm:
    """``f o g``: apply ``g`` first, then ``f``."""
    return tuple(f[i] for i in g)


def inverse(f: Perm) -> Perm:
    inv = [0] * len(f)
    for i, v in enumerate(f):
        inv[v] = i
    return tuple(inv)


def power(f: Perm, k: int) -> Perm:
    if k < 0:
        f, k = inverse(f), -k
    result = identity(len(f))
    while k:
        if k & 1:
            result = compose(f, result)
        f = compose(f, f)
        k >>= 1
    return result


# -- tables ------------------------------------------------------------------

def as_table(rows, n: Optional[int] = None, name: str = "table") -> Table:
    """Coerce nested sequences to a square table of valid indices."""
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"{name}: entries must be integers ({exc})") from None
    if n is None:
        n = len(table)
    if n < 1:
        raise MalformedInput(f"{name}: carrier must be nonempty")
    if len(table) != n:
        raise ShapeMismatch(f"{name}: has {len(table)} rows, expected {n}")
    for x, row in enumerate(table):
        if len(row) != n:
            raise ShapeMismatch(f"{name}[{x}]: has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedInput(f"{name}[{x}][{y}] = {v} is outside 0..{n - 1}")
    return table


def column(table: Table, y: int) -> Perm:
    return tuple(row[y] for row in table)


def transpose(table: Table) -> Table:
    return tuple(zip(*table))


def relabel(table: Table, f: Perm) -> Table:
    """Transport ``table`` along the bijection ``f``: ``T'[f x][f y] = f(T[x][y])``."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        fx = f[x]
        row = table[x]
        for y in range(n):
            out[fx][f[y]] = f[row[y]]
    return tuple(tuple(r) for r in out)


def trivial_table(n: int) -> Table:
    """The table ``x o y = y``; every left translation is the identity."""
    return tuple(identity(n) for _ in range(n))


# -- quasigroups -------------------------------------------------------------

@dataclass(frozen=True)
class LeftQuasigroup:
    circ: Table
    ldiv: Table

    @property
    def n(self) -> int:
        return len(self.circ)

    def L(self, x: int) -> Perm:
        return self.circ[x]

    def L_inv(self, x: int) -> Perm:
        return self.ldiv[x]


@dataclass(frozen=True)
class RightQuasigroup:
    """``bullet[x][y] = x . y``; ``rdiv[x][y] = x / y``, so ``R_y`` is column ``y``."""

    bullet: Table
    rdiv: Table

    @property
    def n(self) -> int:
        return len(self.bullet)

    def R(self, y: int) -> Perm:
        return column(self.bullet, y)


def validate_left_quasigroup(circ) -> LeftQuasigroup:
    circ = as_table(circ, name="circ")
    ldiv = []
    for x, row in enumerate(circ):
        if not is_perm(row):
            raise RowNotBijective(x)
        ldiv.append(inverse(row))
    return LeftQuasigroup(circ, tuple(ldiv))


def validate_right_quasigroup(bullet) -> RightQuasigroup:
    bullet = as_table(bullet, name="bullet")
    n = len(bullet)
    rdiv = [[0] * n for _ in range(n)]
    for y in range(n):
        col = column(bullet, y)
        if not is_perm(col):
            raise ColumnNotBijective(y)
        for x, v in enumerate(col):
            rdiv[v][y] = x
    return RightQuasigroup(bullet, tuple(tuple(r) for r in rdiv))


def is_nondegenerate(Q: LeftQuasigroup) -> bool:
    """True iff ``x -> x \\ x`` is a bijection."""
    return is_perm([Q.ldiv[x][x] for x in range(Q.n)])


def is_right_cyclic(Q: LeftQuasigroup) -> bool:
    """Check ``L_x L_{x\\y} = L_y L_{y\\x}`` as permutations for all pairs."""
    circ, ldiv = Q.circ, Q.ldiv
    n = Q.n
    for x in range(n):
        for y in range(x + 1, n):
            a = circ[ldiv[x][y]]
            b = circ[ldiv[y][x]]
            Lx, Ly = circ[x], circ[y]
            for z in range(n):
                if Lx[a[z]] != Ly[b[z]]:
                    return False
    return True


# -- gradings ----------------------------------------------------------------

@dataclass(frozen=True)
class Grading:
    """Partition of the carrier into blocks ``1..p``, numbered by first occurrence."""

    block: tuple[int, ...]

    def __post_init__(self):
        block = tuple(int(b) for b in self.block)
        object.__setattr__(self, "block", block)
        if not block:
            raise MalformedInput("grading: empty")
        seen = 0
        for x, b in enumerate(block):
            if b == seen + 1:
                seen = b
            elif not 1 <= b <= seen:
                raise MalformedInput(
                    f"grading[{x}] = {b}: blocks must be numbered 1..p by first occurrence"
                )

    @classmethod
    def trivial(cls, n: int) -> "Grading":
        return cls((1,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Grading":
        """Number arbitrary hashable labels by first occurrence."""
        ids: dict = {}
        return cls(tuple(ids.setdefault(v, len(ids) + 1) for v in labels))

    @property
    def n(self) -> int:
        return len(self.block)

    @property
    def p(self) -> int:
        return max(self.block)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.p)]
        for x, b in enumerate(self.block):
            out[b - 1].append(x)
        return out

    def degree(self, x: int) -> tuple[int, ...]:
        vec = [0] * self.p
        vec[self.block[x] - 1] = 1
        return tuple(vec)

    def multidegree(self, word: Sequence[int]) -> tuple[int, ...]:
        vec = [0] * self.p
        for x in word:
            vec[self.block[x] - 1] += 1
        return tuple(vec)


def is_graded(Q, g: Grading) -> bool:
    """All left translations preserve blocks: ``block[x o y] == block[y]``."""
    if g.n != len(Q.circ):
        raise ShapeMismatch(f"grading has length {g.n}, carrier has {len(Q.circ)}")
    block = g.block
    return all(block[v] == block[y] for row in Q.circ for y, v in enumerate(row))


def preserves_grading(f: Perm, g: Grading) -> bool:
    return all(g.block[f[x]] == g.block[x] for x in range(len(f)))


def is_automorphism(Q, f: Sequence[int], g: Optional[Grading] = None) -> bool:
    """``f(x o y) = f(x) o f(y)``; also checks ``.`` when ``Q`` carries a ``bullet`` table.

    With a grading, ``f`` must additionally map every block into itself.
    """
    f = as_perm(f, len(Q.circ))
    if g is not None and not preserves_grading(f, g):
        return False
    tables = [Q.circ]
    bullet = getattr(Q, "bullet", None)
    if bullet is not None:
        tables.append(bullet)
    n = len(f)
    for t in tables:
        for x in range(n):
            row, frow = t[x], t[f[x]]
            for y in range(n):
                if f[row[y]] != frow[f[y]]:
                    return False
    return True
