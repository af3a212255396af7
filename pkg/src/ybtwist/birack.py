"""Biracks: construction from right cyclic left quasigroups and structural predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotNondegenerate, NotRightCyclic, ShapeMismatch
from .structures import (
    Grading,
    LeftQuasigroup,
    Table,
    column,
    is_graded,
    is_nondegenerate,
    is_right_cyclic,
    trivial_table,
    validate_left_quasigroup,
    validate_right_quasigroup,
)


@dataclass(frozen=True)
class Birack:
    circ: Table
    ldiv: Table
    bullet: Table
    rdiv: Table

    @property
    def n(self) -> int:
        return len(self.circ)

    @property
    def left(self) -> LeftQuasigroup:
        return LeftQuasigroup(self.circ, self.ldiv)

    def L(self, x: int):
        return self.circ[x]

    def R(self, y: int):
        return column(self.bullet, y)


def make_birack(circ, bullet) -> Birack:
    """Build a Birack from its two tables, deriving both divisions.

    Only the quasigroup axioms are enforced here; the mixed identities are
    the business of :func:`verify_birack`.
    """
    Q = validate_left_quasigroup(circ)
    P = validate_right_quasigroup(bullet)
    if P.n != Q.n:
        raise ShapeMismatch(f"circ has size {Q.n}, bullet has size {P.n}")
    return Birack(Q.circ, Q.ldiv, P.bullet, P.rdiv)


def derive_birack(Q: LeftQuasigroup) -> Birack:
    """The involutive birack with ``x . y = (x o y) \\ x``."""
    if not is_right_cyclic(Q):
        raise NotRightCyclic("left quasigroup is not right cyclic")
    if not is_nondegenerate(Q):
        raise NotNondegenerate("x -> x\\x is not a bijection")
    circ, ldiv = Q.circ, Q.ldiv
    n = Q.n
    bullet = tuple(tuple(ldiv[circ[x][y]][x] for y in range(n)) for x in range(n))
    return make_birack(circ, bullet)


def projection_birack(n: int) -> Birack:
    """``x o y = y`` and ``x . y = x``."""
    return make_birack(trivial_table(n), tuple((x,) * n for x in range(n)))


@dataclass(frozen=True)
class BirackVerdict:
    ok: bool
    failure: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_birack(B: Birack) -> BirackVerdict:
    """Check both quasigroup axioms and the three mixed identities on all triples.

    Failures are reported in a fixed order: left quasigroup, right
    quasigroup, then identity 1, 2, 3, each scanned lexicographically.
    """
    n = B.n
    c, ld, b, rd = B.circ, B.ldiv, B.bullet, B.rdiv
    for x in range(n):
        for y in range(n):
            if c[x][ld[x][y]] != y or ld[x][c[x][y]] != y:
                return BirackVerdict(False, "left quasigroup", (x, y))
    for x in range(n):
        for y in range(n):
            if b[rd[y][x]][x] != y or rd[b[y][x]][x] != y:
                return BirackVerdict(False, "right quasigroup", (y, x))
    for x in range(n):
        for y in range(n):
            xy, xby = c[x][y], b[x][y]
            for z in range(n):
                if c[x][c[y][z]] != c[xy][c[xby][z]]:
                    return BirackVerdict(False, "identity 1", (x, y, z))
    for x in range(n):
        for y in range(n):
            xy, xby = c[x][y], b[x][y]
            for z in range(n):
                if b[xy][c[xby][z]] != c[b[x][c[y][z]]][b[y][z]]:
                    return BirackVerdict(False, "identity 2", (x, y, z))
    for x in range(n):
        for y in range(n):
            xby = b[x][y]
            for z in range(n):
                if b[xby][z] != b[b[x][c[y][z]]][b[y][z]]:
                    return BirackVerdict(False, "identity 3", (x, y, z))
    return BirackVerdict(True)


def is_involutive(B: Birack) -> bool:
    c, b = B.circ, B.bullet
    for x in range(B.n):
        for y in range(B.n):
            u, v = c[x][y], b[x][y]
            if c[u][v] != x or b[u][v] != y:
                return False
    return True


def satisfies_lri(B: Birack) -> bool:
    """``R_x = L_x^{-1}`` for every x, i.e. ``(x o y) . x = y = x o (y . x)``."""
    c, b = B.circ, B.bullet
    n = B.n
    return all(b[c[x][y]][x] == y and c[x][b[y][x]] == y for x in range(n) for y in range(n))


def satisfies_lri_involutive(B: Birack) -> bool:
    """lri in the involutive form ``(x o y) \\ x = y \\ x``; only valid for involutive B."""
    c, ld = B.circ, B.ldiv
    n = B.n
    return all(ld[c[x][y]][x] == ld[y][x] for x in range(n) for y in range(n))


def is_birack_graded(B: Birack, g: Grading) -> bool:
    """Both ``x o y`` and ``y . x`` stay in the block of ``y``."""
    if not is_graded(B, g):
        return False
    block = g.block
    return all(block[v] == block[y] for y, row in enumerate(B.bullet) for v in row)


def is_distributive(Q: Union[LeftQuasigroup, Birack]) -> bool:
    """``L_x L_y = L_{x o y} L_x``; on a Birack also ``(y . z) . x = (y . x) . (z . x)``."""
    c = Q.circ
    n = len(c)
    for x in range(n):
        Lx = c[x]
        for y in range(n):
            Ly, Lxy = c[y], c[Lx[y]]
            for z in range(n):
                if Lx[Ly[z]] != Lxy[Lx[z]]:
                    return False
    b = getattr(Q, "bullet", None)
    if b is not None:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if b[b[y][z]][x] != b[b[y][x]][b[z][x]]:
                        return False
    return True


def is_two_reductive(Q: Union[LeftQuasigroup, Birack]) -> bool:
    """``L_{x o y} = L_y`` for all x, y."""
    c = Q.circ
    return all(c[v] == c[y] for row in c for y, v in enumerate(row))


def l_equivalence_partition(Q: Union[LeftQuasigroup, Birack]) -> Grading:
    """Group elements with equal left translations."""
    return Grading.from_labels(Q.circ)

