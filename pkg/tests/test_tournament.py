import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starfactor.bitset import mask_of, to_list
from starfactor.tournament import (
    ParseError,
    Tournament,
    TournamentError,
    add_sink,
    construct,
    cyclic_triple,
    parse,
    qr7,
    random_tournament,
    serialize,
    t6,
    t7,
    t8,
    transitive,
)

X = [0, 1, 2]
Y = [3, 4, 5]
U, V = 6, 7


def test_cyclic_triple_neighbourhoods():
    t = cyclic_triple()
    assert t.out_neighbors(0) == mask_of([1])
    assert t.in_neighbors(0) == mask_of([2])


def test_transitive_source_degree():
    assert transitive(5).out_degree(0) == 4


def test_out_of_range_vertex():
    with pytest.raises(IndexError):
        cyclic_triple().out_neighbors(3)
    with pytest.raises(IndexError):
        cyclic_triple().in_degree(-1)


def test_t6_degrees():
    t = t6()
    assert [t.out_degree(x) for x in X] == [2, 2, 2]
    assert [t.out_degree(y) for y in Y] == [3, 3, 3]


def test_t7_regular_and_t8_degrees():
    assert t7().out_degrees() == [3] * 7
    t = t8()
    assert all(t.out_degree(v) == 3 for v in Y + [U])
    assert all(t.out_degree(v) == 4 for v in X + [V])


def test_t6_edges_as_described():
    t = t6()
    for a, b in [(0, 1), (1, 2), (2, 0), (5, 4), (4, 3), (3, 5)]:
        assert t.has_edge(a, b)
    for i in range(3):
        assert t.has_edge(X[i], Y[i])
        for j in range(3):
            if i != j:
                assert t.has_edge(Y[i], X[j])


def test_t7_u_neighbourhoods():
    t = t7()
    assert t.in_neighbors(U) == mask_of(X)
    assert t.out_neighbors(U) == mask_of(Y)
    t = t8()
    assert t.in_neighbors(V) == mask_of(X)
    assert t.out_neighbors(V) == mask_of(Y + [U])


def test_add_sink():
    s = add_sink(t7())
    assert s.n == 8
    assert s.out_degree(7) == 0 and s.in_degree(7) == 7
    assert s.induced(mask_of(range(7)))[0] == t7()


def test_qr7():
    t = qr7()
    assert t.out_degrees() == [3] * 7
    assert t.has_edge(0, 1) and t.has_edge(0, 2) and t.has_edge(0, 4) and t.has_edge(3, 0)


@pytest.mark.parametrize("t", [cyclic_triple(), transitive(1), transitive(6), t6(), t7(), t8(), qr7(), add_sink(t8())])
def test_constructions_are_valid(t, valid):
    valid(t)


def test_construct_dispatch():
    assert construct("t8") == t8()
    assert construct("transitive", n=4) == transitive(4)
    assert construct("add_sink", base=t7()) == add_sink(t7())
    with pytest.raises(TournamentError):
        construct("nope")


def test_constructor_rejects_non_tournaments():
    with pytest.raises(TournamentError):
        Tournament([0b10, 0b01])  # both directions
    with pytest.raises(TournamentError):
        Tournament([0, 0])  # missing edge
    with pytest.raises(TournamentError):
        Tournament([0b1])  # loop
    with pytest.raises(TournamentError):
        Tournament([])


def test_tournament_immutable():
    t = cyclic_triple()
    with pytest.raises(AttributeError):
        t.n = 4


def test_induced_identity_and_edge():
    t = t7()
    sub, to_new, to_old = t.induced(t.vertices)
    assert sub == t
    sub, to_new, to_old = cyclic_triple().induced(mask_of([0, 1]))
    assert sub.n == 2 and sub.has_edge(0, 1)
    assert [to_new[v] for v in to_old] == [0, 1]


def test_induced_t7_y_and_u():
    sub, _, _ = t7().induced(mask_of(Y + [U]))
    assert max(sub.out_degrees()) <= 3


def test_induced_empty():
    with pytest.raises(TournamentError):
        t7().induced(0)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**64 - 1), st.data())
def test_induced_round_trip(n, seed, data):
    t = random_tournament(n, seed)
    subset = mask_of(data.draw(st.lists(st.integers(0, n - 1), min_size=1, unique=True)))
    sub, to_new, to_old = t.induced(subset)
    assert sub.n == subset.bit_count()
    assert all(to_new[to_old[i]] == i for i in range(sub.n))
    for i in range(sub.n):
        for j in range(sub.n):
            if i != j:
                assert sub.has_edge(i, j) == t.has_edge(to_old[i], to_old[j])


def test_random_single_vertex():
    t = random_tournament(1, 5)
    assert t.n == 1 and t.out == (0,)


def test_random_deterministic():
    assert random_tournament(20, 123) == random_tournament(20, 123)
    assert random_tournament(20, 123) != random_tournament(20, 124)


def test_random_rejects_bad_input():
    with pytest.raises(TournamentError):
        random_tournament(0, 1)


def test_random_mean_out_degree():
    degs = np.array([random_tournament(10, s).out_degree(0) for s in range(10_000)])
    se = np.sqrt(9 * 0.25 / len(degs))
    assert abs(degs.mean() - 4.5) < 3 * se


def test_random_matches_documented_bit_order():
    n, seed = 6, 99
    bits = np.random.default_rng(seed).integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8)
    t = random_tournament(n, seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for (i, j), b in zip(pairs, bits):
        assert t.has_edge(i, j) == bool(b)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**64 - 1))
def test_random_invariants(n, seed):
    t = random_tournament(n, seed)
    for v in range(n):
        assert t.out[v] & t.inn[v] == 0
        assert (t.out[v] | t.inn[v]).bit_count() == n - 1
    assert sum(t.out_degrees()) == n * (n - 1) // 2


def test_matrix_round_trip():
    t = t8()
    assert Tournament.from_matrix(t.to_matrix()) == t


def test_permuted():
    t = t7()
    order = [6, 5, 4, 3, 2, 1, 0]
    p = t.permuted(order)
    for i in range(7):
        for j in range(7):
            if i != j:
                assert p.has_edge(i, j) == t.has_edge(order[i], order[j])


# -- text format --------------------------------------------------------------


def test_serialize_cyclic_triple():
    assert serialize(cyclic_triple()) == "3\n010\n001\n100\n"


def test_parse_round_trip_t8():
    assert parse(serialize(t8())) == t8()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 25), st.integers(0, 2**32))
def test_parse_serialize_identity(n, seed):
    t = random_tournament(n, seed)
    text = serialize(t)
    assert parse(text) == t
    assert serialize(parse(text)) == text


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3\n011\n001\n100\n", 2, 3),  # adj[0][2] = adj[2][0] = 1
        ("2\n01\n10\n", 2, 2),  # both directions
        ("2\n00\n00\n", 2, 2),  # no edge
        ("2\n11\n00\n", 2, 1),  # diagonal
        ("2\n0x\n10\n", 2, 2),  # bad character
        ("3\n010\n001\n", 4, 1),  # too few rows
        ("3\n0100\n001\n100\n", 2, 4),  # row too long
        ("3\n010\n001\n100", 4, 1),  # missing final newline
        ("x\n", 1, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_completeness_violation_message():
    with pytest.raises(ParseError, match="both directions"):
        parse("3\n010\n101\n100\n")


def test_to_list_helper():
    assert to_list(mask_of([5, 1, 3])) == [1, 3, 5]
