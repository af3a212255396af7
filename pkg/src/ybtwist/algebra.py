"""Quadratic Yang-Baxter algebras, their Zhang twists, and graded dimensions.

A quadratic relation is a vector in the span of the basis tensors ``x (x) y``.
Relation sets are kept in a canonical form (terms sorted, leading
coefficient +1, duplicates removed) so that two presentations on the same
generators can be compared elementwise as well as by span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional, Sequence, Union

from .birack import Birack
from .errors import BudgetExceeded, HypothesisViolated, ShapeMismatch
from .isotope import TwistSystem, birack_hypotheses, isotope_birack
from .linalg import rank
from .structures import inverse

Pair = tuple[int, int]
Coeff = Union[int, Fraction]
Word = tuple[int, ...]

DEFAULT_MAX_DEGREE = 6
DEFAULT_MAX_ENTRIES = 10**7


def _clean(c) -> Coeff:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True, order=True)
class TensorVector:
    terms: tuple[tuple[Pair, Coeff], ...]

    @classmethod
    def from_dict(cls, coeffs: Mapping[Pair, Coeff]) -> "TensorVector":
        terms = sorted(((int(x), int(y)), _clean(c)) for (x, y), c in coeffs.items() if c)
        return cls(tuple(terms))

    @classmethod
    def binomial(cls, left: Pair, right: Pair) -> "TensorVector":
        """``left - right`` as tensors."""
        if left == right:
            return cls(())
        return cls.from_dict({left: 1, right: -1})

    def is_zero(self) -> bool:
        return not self.terms

    def canonical(self) -> "TensorVector":
        if not self.terms:
            return self
        lead = Fraction(self.terms[0][1])
        return TensorVector(tuple((pair, _clean(Fraction(c) / lead)) for pair, c in self.terms))

    def as_dict(self) -> dict[Pair, Coeff]:
        return dict(self.terms)

    def substitute(self, mapping) -> "TensorVector":
        """Apply a map on basis pairs; coefficients of colliding images add up."""
        out: dict[Pair, Fraction] = {}
        for pair, c in self.terms:
            img = mapping(pair)
            out[img] = out.get(img, 0) + Fraction(c)
        return TensorVector.from_dict(out)

    def __str__(self) -> str:
        parts = []
        for i, ((x, y), c) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            mono = f"{coef}x{x}x{y}"
            if i == 0:
                parts.append(mono if sign == "+" else f"-{mono}")
            else:
                parts.append(f"{sign} {mono}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class QuadraticRelationSet:
    n: int
    relations: tuple[TensorVector, ...]

    @classmethod
    def build(cls, n: int, vectors: Iterable[TensorVector]) -> "QuadraticRelationSet":
        canon = {v.canonical() for v in vectors if not v.is_zero()}
        for v in canon:
            for (x, y), _ in v.terms:
                if not (0 <= x < n and 0 <= y < n):
                    raise ShapeMismatch(f"relation {v} mentions a generator outside 0..{n - 1}")
        return cls(n, tuple(sorted(canon)))

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def strings(self) -> list[str]:
        return [str(v) for v in self.relations]

    def to_json(self) -> list:
        return [[[x, y, str(c)] for (x, y), c in v.terms] for v in self.relations]


@dataclass(frozen=True)
class HilbertTable:
    dims: tuple[int, ...]

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, d: int) -> int:
        return self.dims[d]

    def __len__(self) -> int:
        return len(self.dims)


# -- relations ---------------------------------------------------------------

def quadratic_relations(B: Birack) -> QuadraticRelationSet:
    """``x y - (x o y)(x . y)`` for every pair not fixed by r."""
    n = B.n
    vectors = []
    for x in range(n):
        for y in range(n):
            image = (B.circ[x][y], B.bullet[x][y])
            if image != (x, y):
                vectors.append(TensorVector.binomial((x, y), image))
    return QuadraticRelationSet.build(n, vectors)


def twist_relations(R: QuadraticRelationSet, T: TwistSystem) -> QuadraticRelationSet:
    """Relations of the Zhang twist on the same generators: ``x (x) y -> x (x) phi^{-|x|}(y)``."""
    if T.grading.n != R.n or any(len(phi) != R.n for phi in T.phis):
        raise ShapeMismatch(f"twist system is on {T.grading.n} points, relations on {R.n}")
    if T.p != T.grading.p:
        raise ShapeMismatch(f"{T.p} twist maps for {T.grading.p} blocks")
    inv = [inverse(phi) for phi in T.phis]
    block = T.grading.block

    def sub(pair: Pair) -> Pair:
        x, y = pair
        return (x, inv[block[x] - 1][y])

    return QuadraticRelationSet.build(R.n, (v.substitute(sub) for v in R))


def _pair_rows(R: QuadraticRelationSet):
    n = R.n
    return [{x * n + y: c for (x, y), c in v.terms} for v in R]


def relation_rank(R: QuadraticRelationSet, check_modular: bool = True) -> int:
    return rank(_pair_rows(R), check_modular)


def span_equal(R1: QuadraticRelationSet, R2: QuadraticRelationSet, check_modular: bool = True) -> bool:
    if R1.n != R2.n:
        raise ShapeMismatch(f"relation sets on {R1.n} and {R2.n} generators")
    r1 = relation_rank(R1, check_modular)
    r2 = relation_rank(R2, check_modular)
    if r1 != r2:
        return False
    both = rank(_pair_rows(R1) + _pair_rows(R2), check_modular)
    return both == r1


# -- Hilbert functions -------------------------------------------------------

def degree_rows(R: QuadraticRelationSet, d: int) -> list[dict[int, Coeff]]:
    """All shifts ``u (x) rel (x) v`` of the relations into degree ``d``.

    Columns index words of length d in base n, first letter most significant.
    """
    n = R.n
    rows = []
    for i in range(d - 1):
        tail = n ** (d - 2 - i)
        for v in R:
            terms = [((x * n + y) * tail, c) for (x, y), c in v.terms]
            for u in range(n**i):
                head = u * n * n * tail
                for w in range(tail):
                    base = head + w
                    rows.append({base + t: c for t, c in terms})
    return rows


def hilbert_function(
    R: QuadraticRelationSet,
    d_max: int = DEFAULT_MAX_DEGREE,
    max_entries: int = DEFAULT_MAX_ENTRIES,
    check_modular: bool = True,
) -> HilbertTable:
    """``dim A_d = n^d - rank(I_d)`` for ``d = 0..d_max``, by exact elimination.

    ``max_entries`` caps the number of stored nonzero matrix entries at any
    single degree.
    """
    if d_max < 0:
        raise ValueError("d_max must be non-negative")
    n = R.n
    width = sum(len(v.terms) for v in R)
    for d in range(2, d_max + 1):
        entries = width * (d - 1) * n ** (d - 2)
        if entries > max_entries:
            raise BudgetExceeded(d, entries, max_entries)
    dims = [1, n][: d_max + 1]
    for d in range(2, d_max + 1):
        dims.append(n**d - rank(degree_rows(R, d), check_modular))
    return HilbertTable(tuple(dims))


def polynomial_hilbert(n: int, d_max: int = DEFAULT_MAX_DEGREE) -> HilbertTable:
    """Graded dimensions of the commutative polynomial ring in n variables."""
    if n < 1:
        raise ValueError("n must be positive")
    return HilbertTable(tuple(comb(n + d - 1, d) for d in range(d_max + 1)))


# -- Zhang twist -------------------------------------------------------------

def star_product(a: Sequence[int], b: Sequence[int], T: TwistSystem) -> Word:
    """``a * b = a phi^{|a|}(b)`` on words, phi acting letterwise."""
    phi = T.phi_power(T.grading.multidegree(a))
    return tuple(a) + tuple(phi[y] for y in b)


@dataclass(frozen=True)
class TheoremCertificate:
    original: QuadraticRelationSet
    twisted: QuadraticRelationSet
    isotope: QuadraticRelationSet
    elementwise_equal: bool
    span_equal: bool
    hilbert_original: Optional[HilbertTable] = None
    hilbert_isotope: Optional[HilbertTable] = None

    @property
    def hilbert_equal(self) -> Optional[bool]:
        if self.hilbert_original is None:
            return None
        return self.hilbert_original == self.hilbert_isotope

    @property
    def ok(self) -> bool:
        return self.elementwise_equal and self.span_equal and self.hilbert_equal is not False

    def __bool__(self) -> bool:
        return self.ok

    def diff(self) -> dict[str, list[str]]:
        tw, iso = set(self.twisted), set(self.isotope)
        return {
            "only_twisted": [str(v) for v in sorted(tw - iso)],
            "only_isotope": [str(v) for v in sorted(iso - tw)],
        }


def verify_theorem1(
    B: Birack,
    T: TwistSystem,
    hilbert_degree: Optional[int] = None,
    check_modular: bool = True,
) -> TheoremCertificate:
    """Certify that the isotope's algebra is the Zhang twist of the algebra of B.

    Compares the isotope relations with the twisted original relations both
    as canonical sets and as spans; with ``hilbert_degree`` the two algebras'
    graded dimensions are compared too.
    """
    failures = birack_hypotheses(B, T)
    if failures:
        raise HypothesisViolated(failures)
    original = quadratic_relations(B)
    twisted = twist_relations(original, T)
    star = quadratic_relations(isotope_birack(B, T, check=False))
    h0 = h1 = None
    if hilbert_degree is not None:
        h0 = hilbert_function(original, hilbert_degree, check_modular=check_modular)
        h1 = hilbert_function(star, hilbert_degree, check_modular=check_modular)
    return TheoremCertificate(
        original=original,
        twisted=twisted,
        isotope=star,
        elementwise_equal=twisted == star,
        span_equal=span_equal(twisted, star, check_modular),
        hilbert_original=h0,
        hilbert_isotope=h1,
    )
