import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from suncg import patterns, weights
from suncg.patterns import GTPattern, YoungTableau

# all patterns of the su(3) irrep (2,1,0) in increasing index order
PATTERNS_210 = [
    [(2, 1, 0), (1, 0), (0,)],
    [(2, 1, 0), (1, 0), (1,)],
    [(2, 1, 0), (1, 1), (1,)],
    [(2, 1, 0), (2, 0), (0,)],
    [(2, 1, 0), (2, 0), (1,)],
    [(2, 1, 0), (2, 0), (2,)],
    [(2, 1, 0), (2, 1), (1,)],
    [(2, 1, 0), (2, 1), (2,)],
]

# the eight su(3) tableaux of shape (2,1), same states as PATTERNS_210
TABLEAUX_21 = [
    [[1, 1], [2]],
    [[1, 1], [3]],
    [[1, 2], [2]],
    [[1, 2], [3]],
    [[1, 3], [2]],
    [[1, 3], [3]],
    [[2, 2], [3]],
    [[2, 3], [3]],
]


@st.composite
def small_irreps(draw, max_rank=4, max_entry=4):
    n = draw(st.integers(min_value=2, max_value=max_rank))
    body = draw(st.lists(st.integers(0, max_entry), min_size=n - 1, max_size=n - 1))
    return tuple(sorted(body, reverse=True)) + (0,)


def test_pattern_shape_errors():
    with pytest.raises(ValueError):
        GTPattern([(2, 1, 0), (2, 1)])  # missing bottom row
    with pytest.raises(ValueError):
        GTPattern([(2, 1), (2, 1)])
    with pytest.raises(ValueError):
        GTPattern([])


def test_validate_examples():
    assert patterns.validate([(2, 1, 0), (2, 1), (2,)])
    assert not patterns.validate([(2, 1, 0), (2, 1), (0,)])


def test_single_entry_shift_patterns_are_invalid():
    # a lone 1 below the top row always breaks betweenness
    for n in (2, 3, 4):
        for l in range(1, n):
            for k in range(1, l + 1):
                rows = [[0] * (n - i) for i in range(n)]
                rows[n - l][k - 1] = 1
                assert not patterns.validate(rows)


def test_highest_examples():
    assert patterns.highest((2, 1, 0)) == GTPattern([(2, 1, 0), (2, 1), (2,)])
    assert patterns.highest((0, 0, 0)) == GTPattern([(0, 0, 0), (0, 0), (0,)])
    assert patterns.highest((4, 3, 1, 0)) == GTPattern([(4, 3, 1, 0), (4, 3, 1), (4, 3), (4,)])


def test_highest_pweight_is_the_irrep_label():
    for weight in ((2, 1, 0), (3, 0), (2, 2, 1, 0)):
        assert patterns.pweight(patterns.highest(weight)) == weight


def test_enumerate_210_order():
    result = patterns.enumerate_patterns((2, 1, 0))
    assert result == [GTPattern(rows) for rows in PATTERNS_210]


def test_enumerate_spin_half():
    assert patterns.enumerate_patterns((1, 0)) == [
        GTPattern([(1, 0), (0,)]),
        GTPattern([(1, 0), (1,)]),
    ]


def test_enumerate_200_count_matches_dimension():
    result = patterns.enumerate_patterns((2, 0, 0))
    assert len(result) == weights.dimension((2, 0, 0)) == 6
    assert len(set(result)) == 6
    assert all(patterns.validate(p) for p in result)


@settings(max_examples=40)
@given(small_irreps())
def test_enumerate_properties(weight):
    result = patterns.enumerate_patterns(weight)
    assert len(result) == weights.dimension(weight)
    assert len(set(result)) == len(result)
    assert all(patterns.validate(p) for p in result)
    assert result[0] == patterns.lowest(weight)
    assert result[-1] == patterns.highest(weight)


def test_index_examples():
    assert patterns.index(GTPattern([(2, 1, 0), (2, 0), (1,)])) == 5
    assert patterns.index(patterns.highest((2, 1, 0))) == 8
    # brute force: position within the enumeration
    target = GTPattern([(2, 1, 0), (1, 0), (0,)])
    expected = patterns.enumerate_patterns((2, 1, 0)).index(target) + 1
    assert patterns.index(target) == expected == 1


def test_index_rejects_invalid():
    with pytest.raises(ValueError):
        patterns.index(GTPattern([(2, 1, 0), (2, 1), (0,)]))


def test_from_index_examples():
    assert patterns.from_index((2, 1, 0), 1) == GTPattern([(2, 1, 0), (1, 0), (0,)])
    assert patterns.from_index((2, 1, 0), 8) == patterns.highest((2, 1, 0))
    # oracle: second element of the spin-3/2 enumeration
    assert patterns.from_index((3, 0), 2) == patterns.enumerate_patterns((3, 0))[1]
    assert patterns.from_index((3, 0), 2) == GTPattern([(3, 0), (1,)])


def test_from_index_range_errors():
    with pytest.raises(IndexError):
        patterns.from_index((2, 1, 0), 0)
    with pytest.raises(IndexError):
        patterns.from_index((2, 1, 0), 9)


@settings(max_examples=30)
@given(small_irreps())
def test_index_from_index_inverse(weight):
    for q, pattern in enumerate(patterns.enumerate_patterns(weight), start=1):
        assert patterns.index(pattern) == q
        assert patterns.from_index(weight, q) == pattern


def test_pweight_examples():
    assert patterns.pweight(patterns.highest((2, 1, 0))) == (2, 1, 0)
    assert patterns.pweight(GTPattern([(2, 1, 0), (2, 0), (1,)])) == (1, 1, 1)
    assert patterns.pweight(GTPattern([(2, 1, 0), (1, 1), (1,)])) == (1, 1, 1)


def test_zweight2_examples():
    assert patterns.zweight2(patterns.highest((2, 1, 0))) == (1, 1)
    assert patterns.zweight2(GTPattern([(2, 1, 0), (2, 0), (1,)])) == (0, 0)


@settings(max_examples=30)
@given(small_irreps())
def test_zweight_pweight_relation(weight):
    for pattern in patterns.enumerate_patterns(weight):
        pw = patterns.pweight(pattern)
        zw2 = patterns.zweight2(pattern)
        assert zw2 == tuple(pw[l] - pw[l + 1] for l in range(len(pw) - 1))
        assert sum(pw) == sum(weight)


@settings(max_examples=30)
@given(small_irreps())
def test_equal_pweight_iff_equal_row_sums(weight):
    enumerated = patterns.enumerate_patterns(weight)
    for a, b in zip(enumerated, enumerated[1:]):
        sums_equal = all(sum(a.row(l)) == sum(b.row(l)) for l in range(1, a.n))
        assert (patterns.pweight(a) == patterns.pweight(b)) == sums_equal


@pytest.mark.parametrize("weight", [(2, 1, 0), (2, 0, 0), (2, 1, 0, 0)])
def test_pweight_multiset_is_permutation_symmetric(weight):
    multiset = Counter(patterns.pweight(p) for p in patterns.enumerate_patterns(weight))
    n = len(weight)
    for sigma in itertools.permutations(range(n)):
        permuted = Counter(tuple(pw[i] for i in sigma) for pw in multiset.elements())
        assert permuted == multiset


def test_to_tableau_examples():
    big = GTPattern([(4, 3, 1, 0), (3, 2, 1), (3, 2), (2,)])
    assert patterns.to_tableau(big) == YoungTableau([[1, 1, 2, 4], [2, 2, 4], [3]])
    assert patterns.to_tableau(patterns.highest((2, 1, 0))) == YoungTableau([[1, 1], [2]])
    assert patterns.to_tableau(GTPattern([(2, 0), (1,)])) == YoungTableau([[1, 2]])


def test_tableau_box_counts_match_pweight():
    for pattern in patterns.enumerate_patterns((2, 1, 0)):
        tableau = patterns.to_tableau(pattern)
        boxes = Counter(x for row in tableau.rows for x in row)
        pw = patterns.pweight(pattern)
        assert boxes == Counter({l + 1: w for l, w in enumerate(pw) if w})


def test_from_tableau_examples():
    assert patterns.from_tableau(YoungTableau([[1, 1, 2, 4], [2, 2, 4], [3]]), 4) == GTPattern(
        [(4, 3, 1, 0), (3, 2, 1), (3, 2), (2,)]
    )
    assert patterns.from_tableau(YoungTableau([]), 3) == GTPattern([(0, 0, 0), (0, 0), (0,)])


def test_tableau_round_trip_210_and_4310():
    for weight in ((2, 1, 0), (4, 3, 1, 0)):
        for pattern in patterns.enumerate_patterns(weight):
            assert patterns.from_tableau(patterns.to_tableau(pattern), pattern.n) == pattern


def test_tableaux_of_210_as_a_set():
    computed = {patterns.to_tableau(p) for p in patterns.enumerate_patterns((2, 1, 0))}
    assert computed == {YoungTableau(rows) for rows in TABLEAUX_21}


def test_tableau_validation():
    with pytest.raises(ValueError):
        YoungTableau([[2, 1]])  # row decreases
    with pytest.raises(ValueError):
        YoungTableau([[1, 1], [1]])  # column not strict
    with pytest.raises(ValueError):
        YoungTableau([[1], [2, 2]])  # row lengths increase
    with pytest.raises(ValueError):
        YoungTableau([[0]])
    with pytest.raises(ValueError):
        patterns.from_tableau(YoungTableau([[1, 1], [2]]), 1)


def test_pattern_text_round_trip():
    pattern = GTPattern([(2, 1, 0), (2, 0), (1,)])
    assert pattern.to_text() == "2 1 0; 2 0; 1"
    assert patterns.parse("2 1 0; 2 0; 1") == pattern
    with pytest.raises(ValueError):
        patterns.parse("2 1 0;; 1")
    with pytest.raises(ValueError):
        patterns.parse("2 x; 1")


def test_entry_and_row_accessors():
    pattern = GTPattern([(2, 1, 0), (2, 0), (1,)])
    assert pattern.entry(1, 3) == 2
    assert pattern.entry(2, 2) == 0
    assert pattern.entry(1, 1) == 1
    assert pattern.row(2) == (2, 0)
    assert pattern.top_row == (2, 1, 0)
    with pytest.raises(IndexError):
        pattern.entry(3, 2)
