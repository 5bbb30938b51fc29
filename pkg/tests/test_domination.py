import math
from itertools import combinations

import numpy as np
import pytest

from starfactor.bitset import mask_of, to_list
from starfactor.canon import is_isomorphic
from starfactor.domination import (
    AvoidabilityViolation,
    asymptotic_bound,
    avoidability_check,
    common_dominators,
    count_undominated,
    expected_undominated,
    expected_undominated_exact,
    find_k_dominated,
    find_star_cover,
    is_k_dominated,
    search_k_dominated,
    threshold_n,
)
from starfactor.enumeration import enumerate_classes
from starfactor.factor import has_star_factor_exact
from starfactor.tournament import Tournament, cyclic_triple, qr7, random_tournament, t7, transitive


def brute_dominated(t, k):
    """Reference: every k-set has an outside vertex beating all of it."""
    for u in combinations(range(t.n), k):
        if not any(all(t.has_edge(w, x) for x in u) for w in range(t.n) if w not in u):
            return False, u
    return True, None


def test_cyclic_triple_1_dominated():
    assert is_k_dominated(cyclic_triple(), 1).dominated


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_transitive_not_1_dominated(n):
    rep = is_k_dominated(transitive(n), 1)
    assert not rep.dominated and rep.witness == mask_of([0])


def test_qr7_2_dominated():
    ok, _ = brute_dominated(qr7(), 2)
    assert ok
    assert is_k_dominated(qr7(), 2).dominated
    assert is_k_dominated(qr7(), 2).sets_checked == 21


def test_k_range():
    with pytest.raises(ValueError):
        is_k_dominated(qr7(), 0)
    with pytest.raises(ValueError):
        is_k_dominated(qr7(), 7)


@pytest.mark.parametrize("n,k", [(5, 1), (6, 2), (7, 2), (7, 3), (9, 2), (10, 3)])
def test_witness_is_lexicographically_first(n, k):
    for seed in range(40):
        t = random_tournament(n, seed)
        ok, first = brute_dominated(t, k)
        rep = is_k_dominated(t, k)
        assert rep.dominated == ok
        assert (rep.witness is None) == ok
        if not ok:
            assert to_list(rep.witness) == list(first)
            assert common_dominators(t, rep.witness) == 0
            assert rep.witness.bit_count() == k


def test_report_dict():
    d = is_k_dominated(transitive(4), 1).to_dict()
    assert d == {"k": 1, "dominated": False, "witness": [0], "sets_checked": 1}


# -- expectation --------------------------------------------------------------


def test_expectation_full_set():
    for k in range(1, 8):
        assert expected_undominated(k, k) == pytest.approx(1.0, rel=1e-12)


def test_expectation_n7_k1():
    assert expected_undominated(7, 1) == pytest.approx(0.109375, rel=1e-12)
    assert expected_undominated_exact(7, 1) == 7 * (0.5**6)


def test_expectation_around_91():
    assert expected_undominated(91, 3) < 1 < expected_undominated(90, 3)


def test_expectation_matches_rationals():
    for n in range(1, 31):
        for k in range(1, min(n, 5) + 1):
            exact = expected_undominated_exact(n, k)
            assert abs(expected_undominated(n, k) - float(exact)) <= 1e-9 * float(exact)


def test_expectation_domain():
    with pytest.raises(ValueError):
        expected_undominated(3, 4)
    with pytest.raises(ValueError):
        expected_undominated(3, 0)


def _scan(k):
    n = k + 1
    while expected_undominated_exact(n, k) >= 1:
        n += 1
    return n


@pytest.mark.parametrize("k,expected", [(1, 3), (2, 21), (3, 91)])
def test_threshold_values(k, expected):
    assert _scan(k) == expected
    assert threshold_n(k) == expected


def test_threshold_k4_matches_rational_scan():
    assert threshold_n(4) == _scan(4)


def test_threshold_guard():
    with pytest.raises(ValueError):
        threshold_n(0)
    with pytest.raises(ValueError):
        threshold_n(40)


def test_asymptotic_bound_value():
    assert asymptotic_bound(3) == pytest.approx(8 * 9 * math.log(2))


def test_first_moment_consistency():
    counts = np.array([count_undominated(random_tournament(21, s), 2) for s in range(2000)])
    se = counts.std(ddof=1) / math.sqrt(len(counts))
    assert abs(counts.mean() - expected_undominated(21, 2)) < 3 * se


# -- search ---------------------------------------------------------------------


def test_only_the_cyclic_triple_is_1_dominated_on_3():
    dominated = [t for t in enumerate_classes(3).representatives if is_k_dominated(t, 1).dominated]
    assert len(dominated) == 1 and is_isomorphic(dominated[0], cyclic_triple())
    found = find_k_dominated(1, 3, 50, seed=0)
    assert found is not None and is_isomorphic(found, cyclic_triple())


def test_search_k2_n21():
    out = search_k_dominated(2, 21, 10_000, seed=0)
    assert out.tournament is not None
    assert is_k_dominated(out.tournament, 2).dominated
    assert out.tournament == random_tournament(21, out.seed)
    assert brute_dominated(out.tournament, 2)[0]


def test_search_k2_n5_fails():
    assert find_k_dominated(2, 5, 1000, seed=0) is None


def test_search_reproducible():
    assert search_k_dominated(2, 21, 500, 7) == search_k_dominated(2, 21, 500, 7)


def test_search_validation():
    with pytest.raises(ValueError):
        search_k_dominated(2, 21, 0, 1)


def test_no_2_dominated_on_six_or_fewer():
    # no 2-dominated tournament below 7 vertices; qr7 is one on 7
    for n in range(3, 7):
        assert all(not is_k_dominated(t, 2).dominated for t in enumerate_classes(n).representatives)
    assert is_k_dominated(qr7(), 2).dominated


def test_monotonicity_on_witnesses():
    found = [qr7(), search_k_dominated(2, 21, 10_000, 3).tournament, search_k_dominated(2, 22, 10_000, 0).tournament]
    for t in found:
        for k in range(1, 3):
            assert is_k_dominated(t, k).dominated


# -- avoidability ------------------------------------------------------------------


def test_avoidability_cyclic_triple():
    assert avoidability_check(cyclic_triple(), 1)


def test_avoidability_n22():
    out = search_k_dominated(2, 22, 100_000, seed=0)
    t = out.tournament
    assert t is not None
    assert avoidability_check(t, 2)
    assert has_star_factor_exact(t, 11) is None


def test_avoidability_on_dominated_classes():
    # every class of order <= 7 that is k-dominated with k | n
    for n in range(2, 8):
        for t in enumerate_classes(n).representatives:
            for k in range(1, n):
                if n % k == 0 and is_k_dominated(t, k).dominated:
                    assert avoidability_check(t, k)


def test_avoidability_preconditions():
    with pytest.raises(ValueError):
        avoidability_check(transitive(4), 1)
    with pytest.raises(ValueError):
        avoidability_check(qr7(), 2)  # 2 does not divide 7


def test_star_cover_on_non_dominated():
    assert find_star_cover(transitive(5), 1) == (0,)
    assert find_star_cover(t7(), 1) is None
