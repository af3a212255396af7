"""Twist systems and phi-isotopes of graded left quasigroups and biracks.

A twist system is a sequence ``phi_1..phi_p`` of permutations attached to a
grading with ``p`` blocks. For a generator ``x`` in block ``s`` the twist
``phi^{|x|}`` is just ``phi_s``; composite exponents for words live in
:mod:`ybtwist.algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .birack import (
    Birack,
    is_birack_graded,
    is_distributive,
    is_involutive,
    l_equivalence_partition,
    make_birack,
    satisfies_lri,
    verify_birack,
)
from .errors import HypothesisViolated, NotDistributive, NotInvolutive, ShapeMismatch
from .structures import (
    Grading,
    LeftQuasigroup,
    Perm,
    as_perm,
    compose,
    identity,
    inverse,
    is_automorphism,
    is_graded,
    power,
    preserves_grading,
    validate_left_quasigroup,
)


@dataclass(frozen=True)
class TwistSystem:
    phis: tuple[Perm, ...]
    grading: Grading

    def __post_init__(self):
        object.__setattr__(self, "phis", tuple(as_perm(p) for p in self.phis))

    @classmethod
    def identity(cls, grading: Grading) -> "TwistSystem":
        return cls(tuple(identity(grading.n) for _ in range(grading.p)), grading)

    @property
    def p(self) -> int:
        return len(self.phis)

    def phi_of(self, x: int) -> Perm:
        """``phi^{|x|}`` for a generator x."""
        return self.phis[self.grading.block[x] - 1]

    def phi_power(self, alpha: Sequence[int]) -> Perm:
        """``phi_1^{a_1} ... phi_p^{a_p}``; exponents may be negative."""
        result = identity(self.grading.n)
        for phi, a in zip(self.phis, alpha):
            if a:
                result = compose(power(phi, a), result)
        return result


@dataclass(frozen=True)
class TwistVerdict:
    strong: bool
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def _check_shape(Q, T: TwistSystem) -> None:
    n = len(Q.circ)
    if T.grading.n != n:
        raise ShapeMismatch(f"grading has length {T.grading.n}, carrier has {n}")
    if T.p != T.grading.p:
        raise ShapeMismatch(f"{T.p} twist maps for {T.grading.p} blocks")
    for s, phi in enumerate(T.phis):
        if len(phi) != n:
            raise ShapeMismatch(f"phi[{s}] has length {len(phi)}, carrier has {n}")


def validate_twist_system(Q, T: TwistSystem, require_strong: bool = False) -> TwistVerdict:
    """Check the weak conditions and, on request, the strong ones.

    weak: the grading is compatible with Q, every phi_s preserves blocks, and
    the phi_s pairwise commute. strong: additionally every phi_s is an
    automorphism of Q and ``L_{phi_s(x)} = L_x`` for all s and x.
    """
    _check_shape(Q, T)
    g = T.grading
    failures = []
    if not is_graded(Q, g):
        failures.append("grading: left translations do not preserve blocks")
    for s, phi in enumerate(T.phis, 1):
        if not preserves_grading(phi, g):
            failures.append(f"phi_{s}: not degree-preserving")
    for s in range(T.p):
        for t in range(s + 1, T.p):
            if compose(T.phis[s], T.phis[t]) != compose(T.phis[t], T.phis[s]):
                failures.append(f"phi_{s + 1}, phi_{t + 1}: do not commute")
    if require_strong:
        circ = Q.circ
        for s, phi in enumerate(T.phis, 1):
            if not is_automorphism(Q, phi):
                failures.append(f"phi_{s}: not an automorphism")
            if any(circ[phi[x]] != circ[x] for x in range(len(circ))):
                failures.append(f"phi_{s}: L_phi(x) != L_x for some x")
    return TwistVerdict(require_strong, tuple(failures))


def isotope_quasigroup(Q: LeftQuasigroup, T: TwistSystem, strong: bool = False) -> LeftQuasigroup:
    """``x * y = x o phi^{|x|}(y)`` and ``x \\* y = phi^{-|x|}(x \\ y)``."""
    verdict = validate_twist_system(Q, T, strong)
    if not verdict:
        raise HypothesisViolated(verdict.failures)
    n = Q.n
    star = tuple(tuple(Q.circ[x][T.phi_of(x)[y]] for y in range(n)) for x in range(n))
    return validate_left_quasigroup(star)


def birack_hypotheses(B: Birack, T: TwistSystem) -> list[str]:
    """Every hypothesis the isotope construction and the Zhang twist comparison need on (B, phi)."""
    _check_shape(B, T)
    failures = []
    verdict = verify_birack(B)
    if not verdict:
        failures.append(f"birack: {verdict.failure} fails at {verdict.witness}")
    if not is_involutive(B):
        failures.append("birack: not involutive")
    if not is_birack_graded(B, T.grading):
        failures.append("birack: not graded for this grading")
    if not satisfies_lri(B):
        failures.append("birack: condition lri fails")
    failures.extend(validate_twist_system(B, T, True).failures)
    return failures


def isotope_birack(B: Birack, T: TwistSystem, check: bool = True) -> Birack:
    """The phi-isotope ``(*, \\*, <>, /<>)`` with ``x <> y = phi^{-|y|}(x . phi^{|x|}(y))``.

    With ``check`` the hypotheses are validated first and
    :class:`HypothesisViolated` lists whichever fail.
    """
    if check:
        failures = birack_hypotheses(B, T)
        if failures:
            raise HypothesisViolated(failures)
    n = B.n
    g = T.grading
    inv = [inverse(phi) for phi in T.phis]
    star = []
    diamond = []
    for x in range(n):
        phx = T.phi_of(x)
        star.append(tuple(B.circ[x][phx[y]] for y in range(n)))
        diamond.append(tuple(inv[g.block[y] - 1][B.bullet[x][phx[y]]] for y in range(n)))
    return make_birack(star, diamond)


def canonical_distributive_twist(
    B: Birack, representatives: Optional[Sequence[int]] = None
) -> TwistSystem:
    """Grade by equal left translations and set ``phi_s = L_{x_s}^{-1}``.

    ``representatives`` picks one element per class (default: the least).
    """
    if not is_involutive(B):
        raise NotInvolutive("birack is not involutive")
    if not is_distributive(B):
        raise NotDistributive("birack is not distributive")
    g = l_equivalence_partition(B)
    classes = g.blocks()
    if representatives is None:
        representatives = [cls[0] for cls in classes]
    if len(representatives) != g.p or any(
        g.block[x] != s for s, x in enumerate(representatives, 1)
    ):
        raise ShapeMismatch("need exactly one representative from each class, in class order")
    return TwistSystem(tuple(inverse(B.circ[x]) for x in representatives), g)
