from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumpnum.closed_form import JumpingSetDescription, generators, jump_values
from jumpnum.curves import (
    EquisingularityClass,
    MultiplicitySequence,
    characteristic_exponents,
    characteristic_pairs,
    curve_jumping_numbers,
    equisingularity_from_jumps,
    ideal_from_class,
    ideal_jumps_from_curve,
    pairs_to_generators,
    sequence_from_pairs,
    validate_multiplicity_sequence,
)
from jumpnum.errors import InvalidPairs, InvalidSequence, MalformedJumpSet, NonpositiveBound
from jumpnum.proximity import validate_point_basis
from strategies import point_bases

BRANCH = (6, 3, 3, 3, 1, 1, 1)
CUSP = MultiplicitySequence((2, 1, 1))
SMOOTH = MultiplicitySequence((1,))


def branch_of(b):
    """The branch whose general member passes through the base points of b."""
    gs = b.structure
    return MultiplicitySequence(b.a[: gs.gamma[gs.g]] if gs.g else (1,))


# --- sequences and classes --------------------------------------------------

@pytest.mark.parametrize(
    "seq, t, expected",
    [((2, 1, 1), 0, (2, 1, 1)), (BRANCH, 1, BRANCH + (1,)), ((2, 1, 1), 2, (2, 1, 1, 1, 1))],
)
def test_ideal_from_class(seq, t, expected):
    ec = EquisingularityClass(validate_multiplicity_sequence(seq), t)
    assert ideal_from_class(ec).a == expected


def test_branch_ends_at_its_last_satellite():
    assert validate_point_basis(BRANCH).structure.gamma[2] == 7
    with pytest.raises(InvalidSequence):
        validate_multiplicity_sequence((2, 1, 1, 1))
    with pytest.raises(InvalidSequence):
        validate_multiplicity_sequence((2, 1))
    with pytest.raises(InvalidSequence):
        ideal_from_class(EquisingularityClass(CUSP, -1))
    assert validate_multiplicity_sequence((1,)) == SMOOTH


@pytest.mark.parametrize(
    "seq, exponents, pairs",
    [
        ((2, 1, 1), (2, 3), ((3, 2),)),
        ((1,), (1,), ()),
        (BRANCH, (6, 9, 13), ((3, 2), (13, 3))),
        ((4, 2, 2, 1, 1), (4, 6, 7), ((3, 2), (7, 2))),
    ],
)
def test_characteristic_data(seq, exponents, pairs):
    ms = MultiplicitySequence(seq)
    assert characteristic_exponents(ms) == exponents
    assert characteristic_pairs(ms) == pairs
    assert sequence_from_pairs(pairs) == ms


@given(point_bases())
def test_exponent_gcds_follow_the_terminal_satellites(b):
    ms = branch_of(b)
    basis = ms.basis
    gs = basis.structure
    betas = characteristic_exponents(ms)
    running = 0
    for k, beta in enumerate(betas):
        running = gcd(running, beta)
        assert running == basis[gs.gamma[k]]


@given(point_bases())
def test_pairs_round_trip(b):
    ms = branch_of(b)
    pairs = characteristic_pairs(ms)
    assert sequence_from_pairs(pairs) == ms
    assert characteristic_pairs(sequence_from_pairs(pairs)) == pairs


@pytest.mark.parametrize(
    "pairs",
    [[(3, 1)], [(4, 2)], [(1, 2)], [(3, 2), (5, 2)], [(3, 2), (7, 4)]],
)
def test_invalid_pairs(pairs):
    with pytest.raises(InvalidPairs):
        sequence_from_pairs(pairs)


# --- generators straight from pairs ----------------------------------------

def test_pair_formula_examples():
    assert pairs_to_generators([(3, 2)]) == JumpingSetDescription(pairs=((2, 3),), caps=())
    assert pairs_to_generators([]) == JumpingSetDescription(pairs=((1, 1),), caps=())
    two = pairs_to_generators([(3, 2), (7, 2)])
    assert two == JumpingSetDescription(pairs=((4, 6), (2, 13)), caps=(2,))
    assert two == generators(sequence_from_pairs([(3, 2), (7, 2)]).basis)


@given(point_bases())
def test_pair_formula_matches_generators(b):
    ms = branch_of(b)
    assert pairs_to_generators(characteristic_pairs(ms)) == generators(ms.basis)


# --- curve jumping numbers --------------------------------------------------

def test_curve_jump_examples():
    assert curve_jumping_numbers(EquisingularityClass(CUSP), 2) == [F(5, 6), 1, F(11, 6), 2]
    assert curve_jumping_numbers(EquisingularityClass(SMOOTH), 2) == [1, 2]
    branch = MultiplicitySequence(BRANCH)
    below = [c for c in jump_values(generators(branch.basis), 1) if c < 1]
    assert curve_jumping_numbers(EquisingularityClass(branch), 1) == below + [1]
    with pytest.raises(NonpositiveBound):
        curve_jumping_numbers(EquisingularityClass(CUSP), 0)


@given(point_bases(), st.integers(0, 3))
def test_curve_jumps_ignore_extra_free_points(b, t):
    ms = branch_of(b)
    assert curve_jumping_numbers(EquisingularityClass(ms, t), 3) == curve_jumping_numbers(
        EquisingularityClass(ms), 3
    )


@given(point_bases())
def test_curve_jumps_are_periodic(b):
    jumps = curve_jumping_numbers(EquisingularityClass(branch_of(b)), 4)
    assert all(c + 1 in jumps for c in jumps if c <= 3)
    assert 1 in jumps


# --- ideal jumps from the branch -------------------------------------------

def test_ideal_jumps_from_curve_examples():
    cusp = curve_jumping_numbers(EquisingularityClass(CUSP), 2)
    assert ideal_jumps_from_curve(cusp, valuation=6) == jump_values(generators(CUSP.basis), 2)
    assert ideal_jumps_from_curve([1, 2, 3], valuation=1) == [2, 3]
    branch = curve_jumping_numbers(EquisingularityClass(MultiplicitySequence(BRANCH)), 2)
    worked = validate_point_basis(BRANCH + (1,))
    assert ideal_jumps_from_curve(branch, n=8) == jump_values(generators(worked), 2)


@given(point_bases())
def test_ideal_jumps_from_curve_round_trip(b):
    ms = branch_of(b)
    curve = curve_jumping_numbers(EquisingularityClass(ms, b.n - len(ms.m)), 2)
    expected = jump_values(generators(b), 2)
    assert ideal_jumps_from_curve(curve, n=b.n) == expected
    assert ideal_jumps_from_curve(curve, valuation=b.self_intersection) == expected


@pytest.mark.parametrize(
    "kwargs",
    [{}, {"n": 3, "valuation": 6}],
)
def test_ideal_jumps_from_curve_needs_one_size(kwargs):
    with pytest.raises(MalformedJumpSet):
        ideal_jumps_from_curve([F(5, 6), 1, 2], **kwargs)


def test_ideal_jumps_from_curve_rejects():
    with pytest.raises(MalformedJumpSet):
        ideal_jumps_from_curve([F(5, 6), 2], n=3)
    with pytest.raises(MalformedJumpSet) as info:
        ideal_jumps_from_curve([F(5, 6), 1, 2], n=2)
    assert info.value.step == "tail"


# --- branch from jumps below one -------------------------------------------

@pytest.mark.parametrize(
    "below, seq",
    [([F(5, 6)], (2, 1, 1)), ([F(7, 10), F(9, 10)], (2, 2, 1, 1)), ([], (1,))],
)
def test_equisingularity_examples(below, seq):
    assert equisingularity_from_jumps(below).m == seq


@given(point_bases())
def test_equisingularity_round_trip(b):
    ms = branch_of(b)
    below = [c for c in curve_jumping_numbers(EquisingularityClass(ms), 1) if c < 1]
    assert equisingularity_from_jumps(below) == ms
