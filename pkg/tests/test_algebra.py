import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nakayama.algebra import (
    CYCLIC,
    LINEAR,
    KupischSeries,
    canonicalize,
    cyclic,
    descent_normal_form,
    enumerate_series,
    format_series,
    has_simple_projective,
    is_selfinjective,
    linear,
    local_size_at,
    opposite,
    parse_series,
    quotient_by_vertex,
    trace_is_projective,
    validate,
)
from nakayama.errors import ConstraintViolation, EmptySeries, NakayamaError, VertexOutOfRange


@st.composite
def cyclic_series(draw, max_n=8, max_c=30):
    """Arbitrary valid cyclic series: random entries repaired upwards until valid."""
    n = draw(st.integers(1, max_n))
    c = draw(st.lists(st.integers(2, max_c), min_size=n, max_size=n))
    changed = True
    while changed:
        changed = False
        for i in range(n):
            j = (i + 1) % n
            if c[j] < c[i] - 1:
                c[j] = c[i] - 1
                changed = True
    return validate(CYCLIC, c)


def test_validate_accepts_examples():
    assert validate(CYCLIC, [2, 3]).lengths == (2, 3)
    assert validate(CYCLIC, [3, 2, 2]).lengths == (3, 2, 2)
    assert validate(LINEAR, [2, 2, 1]).kind == LINEAR


def test_validate_reports_first_violation():
    with pytest.raises(ConstraintViolation) as exc:
        validate(CYCLIC, [4, 2])
    assert exc.value.index == 1
    assert "2 < c_1 - 1 = 3" in str(exc.value)


@pytest.mark.parametrize(
    "kind, lengths",
    [
        (CYCLIC, [1, 2]),
        (CYCLIC, [2, 4]),  # wraps: c_1 = 2 < c_2 - 1
        (LINEAR, [2, 2]),  # must end in 1
        (LINEAR, [3, 1]),  # c_1 > n
        (LINEAR, [1, 1]),
        (LINEAR, [3, 1, 1]),
    ],
)
def test_validate_rejects(kind, lengths):
    with pytest.raises(ConstraintViolation):
        validate(kind, lengths)


def test_validate_empty():
    with pytest.raises(EmptySeries):
        validate(CYCLIC, [])


def test_parse_and_format_round_trip():
    for text in ["2,2,3", "linear:2,2,1", "4,5"]:
        assert format_series(parse_series(text)) == text
    assert parse_series(" 2, 3 ") == cyclic(2, 3)
    with pytest.raises(NakayamaError):
        parse_series("2,x")
    with pytest.raises(ConstraintViolation):
        parse_series("4,2")


def test_canonicalize():
    assert canonicalize(cyclic(3, 2, 2)).lengths == (2, 2, 3)
    assert canonicalize(cyclic(4, 5)).lengths == (4, 5)
    assert canonicalize(cyclic(3, 3, 3)).lengths == (3, 3, 3)
    assert canonicalize(linear(2, 1)) == linear(2, 1)


def test_descent_normal_form():
    assert descent_normal_form(cyclic(3, 2, 2)).lengths == (2, 2, 3)
    assert descent_normal_form(cyclic(5, 4)).lengths == (4, 5)
    with pytest.raises(NakayamaError):
        descent_normal_form(cyclic(3, 3))


def test_selfinjective_and_simple_projective():
    assert is_selfinjective(cyclic(3, 3, 3))
    assert not is_selfinjective(cyclic(2, 3))
    assert not is_selfinjective(linear(2, 1))
    assert not has_simple_projective(cyclic(4, 5))
    assert has_simple_projective(linear(2, 1))
    assert not has_simple_projective(cyclic(2, 2, 3))


def test_opposite_examples():
    assert opposite(cyclic(4, 5)) == cyclic(4, 5)
    assert opposite(cyclic(3, 3, 3)) == cyclic(3, 3, 3)
    assert opposite(cyclic(2, 2, 3)) == cyclic(2, 2, 3)
    assert opposite(linear(3, 2, 1)) == linear(3, 2, 1)


def test_opposite_is_an_involution_exhaustively():
    for n in range(1, 7):
        for ks in enumerate_series(n, 12):
            op = opposite(ks)
            assert canonicalize(opposite(op)) == ks
            assert sorted(op.lengths) == sorted(ks.lengths)
            assert validate(CYCLIC, op.lengths)


def test_opposite_of_linear_series():
    for n in range(1, 7):
        for ks in enumerate_series(n, n, LINEAR):
            op = opposite(ks)
            assert opposite(op) == ks
            assert sorted(op.lengths) == sorted(ks.lengths)


def test_enumerate_small_cases():
    assert [ks.lengths for ks in enumerate_series(1, 3)] == [(2,), (3,)]
    assert [ks.lengths for ks in enumerate_series(2, 3)] == [(2, 2), (2, 3), (3, 3)]
    assert list(enumerate_series(0, 3)) == []


def _brute_force_classes(n, max_len, kind):
    found = set()
    low = 1 if kind == LINEAR else 2
    for lengths in itertools.product(range(low, max_len + 1), repeat=n):
        try:
            ks = validate(kind, lengths)
        except NakayamaError:
            continue
        found.add(canonicalize(ks))
    return sorted(found)


@pytest.mark.parametrize("n, max_len", [(1, 5), (2, 6), (3, 4), (3, 9), (4, 7), (5, 6)])
def test_enumerate_matches_unfiltered_product(n, max_len):
    emitted = list(enumerate_series(n, max_len))
    assert emitted == _brute_force_classes(n, max_len, CYCLIC)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumerate_linear_matches_unfiltered_product(n):
    assert list(enumerate_series(n, 9, LINEAR)) == _brute_force_classes(n, min(n, 9), LINEAR)


def test_enumerate_is_closed_under_rotation():
    emitted = set(enumerate_series(4, 8))
    for ks in emitted:
        for r in range(ks.n):
            rot = KupischSeries(CYCLIC, ks.lengths[r:] + ks.lengths[:r])
            assert canonicalize(rot) in emitted


def test_local_size_at():
    assert local_size_at(cyclic(4, 5), 1) == 2
    assert local_size_at(cyclic(2, 2, 3), 3) == 1
    assert local_size_at(cyclic(3, 3), 1) == 2
    with pytest.raises(VertexOutOfRange):
        local_size_at(cyclic(3, 3), 3)


def test_local_size_counts_top_repeats():
    for ks in itertools.chain.from_iterable(enumerate_series(n, 12) for n in range(1, 5)):
        for v in range(1, ks.n + 1):
            assert local_size_at(ks, v) == ks.layers(v).count(v)
            assert (local_size_at(ks, v) == 1) == (ks.c(v) <= ks.n)


def test_quotient_by_vertex():
    assert quotient_by_vertex(cyclic(2, 2, 2, 3), 4) == linear(2, 2, 1)
    assert quotient_by_vertex(cyclic(4, 5), 1) == linear(1)
    assert quotient_by_vertex(cyclic(2, 2, 3), 1) == linear(2, 1)
    with pytest.raises(NakayamaError):
        quotient_by_vertex(cyclic(3), 1)


def test_quotient_matches_layer_cut():
    # cut each P_{v+j} above the first S_v and compare with the closed form
    for ks in itertools.chain.from_iterable(enumerate_series(n, 10) for n in range(2, 6)):
        for v in range(1, ks.n + 1):
            cut = []
            for j in range(1, ks.n):
                layers = ks.layers(v + j)
                cut.append(layers.index(v) if v in layers else len(layers))
            assert quotient_by_vertex(ks, v).lengths == tuple(cut)


def test_trace_is_projective():
    assert trace_is_projective(cyclic(4, 5), 1)
    assert not trace_is_projective(cyclic(3, 3), 1)
    assert trace_is_projective(cyclic(2, 2, 3), 1)


@settings(max_examples=200, deadline=None)
@given(cyclic_series())
def test_quotients_are_valid_linear(ks):
    if ks.n == 1:
        return
    for v in range(1, ks.n + 1):
        q = quotient_by_vertex(ks, v)
        assert validate(LINEAR, q.lengths) == q
        assert q.n == ks.n - 1


@settings(max_examples=200, deadline=None)
@given(cyclic_series())
def test_opposite_invariants_on_large_series(ks):
    op = opposite(ks)
    assert sorted(op.lengths) == sorted(ks.lengths)
    assert canonicalize(opposite(op)) == canonicalize(ks)
    assert canonicalize(canonicalize(ks)) == canonicalize(ks)
