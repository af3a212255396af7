import itertools

import pytest

from ybtwist.birack import (
    derive_birack,
    is_birack_graded,
    is_distributive,
    is_involutive,
    is_two_reductive,
    l_equivalence_partition,
    make_birack,
    projection_birack,
    satisfies_lri,
    satisfies_lri_involutive,
    verify_birack,
)
from ybtwist.census import all_gradings, right_cyclic_tables
from ybtwist.errors import NotRightCyclic
from ybtwist.structures import (
    Grading,
    is_graded,
    is_nondegenerate,
    is_right_cyclic,
    trivial_table,
    validate_left_quasigroup,
)

import oracles
from conftest import D4, P2, SIGMA_TABLE


def test_derive_examples(trivial2, p2):
    assert trivial2.bullet == ((0, 0), (1, 1))
    assert p2.bullet == ((1, 1), (0, 0))
    with pytest.raises(NotRightCyclic):
        derive_birack(validate_left_quasigroup(SIGMA_TABLE))


def test_finite_right_cyclic_tables_are_nondegenerate():
    # so NotNondegenerate from derive_birack is unreachable on finite input
    perms = list(itertools.permutations(range(3)))
    for rows in itertools.product(perms, repeat=3):
        Q = validate_left_quasigroup(rows)
        if is_right_cyclic(Q):
            assert is_nondegenerate(Q)


def test_derived_bullet_matches_oracle(d4, p2):
    for B in (d4, p2):
        assert [list(r) for r in B.bullet] == oracles.derived_bullet([list(r) for r in B.circ])


def test_verify_birack_examples(p2, bad_birack):
    assert verify_birack(p2)
    assert verify_birack(projection_birack(1))
    verdict = verify_birack(bad_birack)
    assert not verdict
    # x = 0 acts trivially, so the first failure is at x = 1
    assert verdict.failure == "identity 1"
    assert verdict.witness == (1, 0, 0)


def test_verify_birack_reports_quasigroup_failures():
    B = make_birack(P2, [[1, 1], [0, 0]])
    broken = type(B)(B.circ, ((0, 0), (0, 0)), B.bullet, B.rdiv)
    assert verify_birack(broken).failure == "left quasigroup"


def test_involutive_examples(p2, bad_birack):
    assert is_involutive(p2)
    assert is_involutive(projection_birack(2))
    assert not is_involutive(bad_birack)
    c, b = bad_birack.circ, bad_birack.bullet
    assert c[c[0][1]][b[0][1]] != 0


def test_lri_examples(p2, d4):
    assert satisfies_lri(p2)
    assert satisfies_lri(projection_birack(2))
    assert satisfies_lri(d4)


@pytest.mark.parametrize("circ, expected", [(P2, True), (D4, True), (SIGMA_TABLE, False)])
def test_distributive_examples(circ, expected):
    assert is_distributive(validate_left_quasigroup(circ)) is expected


def test_distributive_counterexample_location():
    c = SIGMA_TABLE
    # L_1 L_0 = sigma, L_{1 o 0} L_1 = L_1 L_1 = id
    assert [c[1][c[0][z]] for z in range(2)] == [1, 0]
    assert [c[c[1][0]][c[1][z]] for z in range(2)] == [0, 1]


@pytest.mark.parametrize("circ, expected", [(P2, True), (D4, True), (SIGMA_TABLE, False)])
def test_two_reductive_examples(circ, expected):
    assert is_two_reductive(validate_left_quasigroup(circ)) is expected


def test_l_equivalence_examples():
    assert l_equivalence_partition(validate_left_quasigroup(P2)).block == (1, 1)
    assert l_equivalence_partition(validate_left_quasigroup(D4)).block == (1, 1, 2, 2)
    assert l_equivalence_partition(validate_left_quasigroup(trivial_table(3))).block == (1, 1, 1)


def test_correspondence_over_labeled_census():
    for n in range(1, 5):
        for t in right_cyclic_tables(n):
            B = derive_birack(validate_left_quasigroup(t))
            assert verify_birack(B)
            assert is_involutive(B)


def test_census_structural_implications(census):
    for reps in census.values():
        for B in reps:
            assert satisfies_lri(B) is satisfies_lri_involutive(B)
            if is_distributive(B):
                assert is_two_reductive(B)
                assert satisfies_lri(B)
                g = l_equivalence_partition(B)
                assert is_graded(B, g)
                assert is_birack_graded(B, g)


def test_graded_left_condition_implies_right_condition(census):
    # for involutive biracks the bullet condition follows from the circ one
    for reps in census.values():
        for B in reps:
            for g in all_gradings(B.n):
                assert is_graded(B, g) is is_birack_graded(B, g)


def test_graded_birack_checks_bullet_independently():
    # circ preserves the blocks but bullet does not
    B = make_birack(trivial_table(2), [[1, 1], [0, 0]])
    g = Grading((1, 2))
    assert is_graded(B, g)
    assert not is_birack_graded(B, g)
