"""k-domination: every k-set of vertices has a common dominator outside it.

Includes the first-moment count of undominated k-sets in a uniform random
tournament, the least size at which that count drops below one, a seeded
random search for k-dominated tournaments, and the check that a k-dominated
tournament on a multiple of k vertices cannot be covered by k stars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bitset import mask_of, to_list
from .tournament import Tournament, random_tournament

MAX_THRESHOLD_K = 16
MONOTONE_LOOKAHEAD = 50


@dataclass(frozen=True)
class DominationReport:
    k: int
    dominated: bool
    witness: int | None  # bitmask of the first undominated k-set
    sets_checked: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "dominated": self.dominated,
            "witness": None if self.witness is None else to_list(self.witness),
            "sets_checked": self.sets_checked,
        }


def common_dominators(t: Tournament, subset: int) -> int:
    """Vertices outside ``subset`` that dominate all of it."""
    acc = t.vertices
    for v in to_list(subset):
        acc &= t.inn[v]
    return acc & ~subset


def is_k_dominated(t: Tournament, k: int) -> DominationReport:
    """Scan k-sets in lexicographic order and stop at the first undominated one.

    The running intersection of in-neighbourhoods is carried down the search,
    so once it empties the lexicographically least completion of the current
    prefix is the witness.
    """
    n = t.n
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n (k={k}, n={n})")
    inn = t.inn
    checked = 0

    def walk(start: int, depth: int, acc: int, chosen: int):
        nonlocal checked
        for v in range(start, n - (k - depth) + 1):
            here = acc & inn[v]
            picked = chosen | 1 << v
            if depth + 1 == k:
                checked += 1
                if not here:
                    return picked
                continue
            if not here:
                # every completion is undominated; take the smallest one
                checked += 1
                return picked | mask_of(range(v + 1, v + k - depth))
            found = walk(v + 1, depth + 1, here, picked)
            if found is not None:
                return found
        return None

    witness = walk(0, 0, t.vertices, 0)
    return DominationReport(k, witness is None, witness, checked)


def count_undominated(t: Tournament, k: int) -> int:
    inn = t.inn
    full = t.vertices
    total = 0
    for combo in combinations(range(t.n), k):
        acc = full
        for v in combo:
            acc &= inn[v]
        if not acc:
            total += 1
    return total


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n (k={k}, n={n})")


def expected_undominated(n: int, k: int) -> float:
    """C(n, k) (1 - 2^-k)^(n-k), evaluated in log space."""
    _check_nk(n, k)
    log_binom = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    return math.exp(log_binom + (n - k) * math.log1p(-(2.0**-k)))


def expected_undominated_exact(n: int, k: int) -> Fraction:
    _check_nk(n, k)
    return math.comb(n, k) * Fraction(2**k - 1, 2**k) ** (n - k)


def asymptotic_bound(k: int) -> float:
    """2^k k^2 ln 2, the leading term of the first-moment estimate (not a bound for small k)."""
    return 2.0**k * k * k * math.log(2)


def _below_one(n: int, k: int) -> bool:
    value = expected_undominated(n, k)
    if abs(value - 1.0) > 1e-9:
        return value < 1.0
    # float cannot settle ties such as E(2, 1) = 1 exactly
    return expected_undominated_exact(n, k) < 1


def threshold_n(k: int) -> int:
    """Least n > k with expected_undominated(n, k) < 1, found by scanning upward."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > MAX_THRESHOLD_K:
        raise ValueError(f"threshold scan is limited to k <= {MAX_THRESHOLD_K}")
    n = k + 1
    while not _below_one(n, k):
        n += 1
    prev = expected_undominated(n, k)
    for later in range(n + 1, n + 1 + MONOTONE_LOOKAHEAD):
        cur = expected_undominated(later, k)
        assert cur < prev, f"expectation not decreasing at n={later}, k={k}"
        prev = cur
    return n


@dataclass(frozen=True)
class SearchOutcome:
    tournament: Tournament | None
    seed: int | None  # seed of the successful trial
    trials: int  # trials actually run


def search_k_dominated(k: int, n: int, trials: int, seed: int) -> SearchOutcome:
    """Try ``random_tournament(n, seed + i)`` for ``i = 0..trials-1``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 1 <= k < n:
        raise ValueError(f"k must satisfy 1 <= k < n (k={k}, n={n})")
    for i in range(trials):
        t = random_tournament(n, seed + i)
        if is_k_dominated(t, k).dominated:
            return SearchOutcome(t, seed + i, i + 1)
    return SearchOutcome(None, None, trials)


def find_k_dominated(k: int, n: int, trials: int, seed: int) -> Tournament | None:
    return search_k_dominated(k, n, trials, seed).tournament


class AvoidabilityViolation(AssertionError):
    """A k-dominated tournament turned out to be covered by k stars."""


def find_star_cover(t: Tournament, k: int) -> tuple[int, ...] | None:
    """k centres whose out-neighbourhoods cover every other vertex, if any."""
    out = t.out
    full = t.vertices
    for centers in combinations(range(t.n), k):
        acc = 0
        for c in centers:
            acc |= out[c] | 1 << c
        if acc == full:
            return centers
    return None


def avoidability_check(t: Tournament, k: int) -> bool:
    """True iff no k stars of any sizes span ``t``; requires ``t`` k-dominated and k | n.

    For a k-dominated tournament the answer is always True, since the common
    dominator of any k centres lies in none of their stars; a cover found here
    raises AvoidabilityViolation.
    """
    if k < 1 or t.n % k:
        raise ValueError(f"k={k} must divide n={t.n}")
    if not is_k_dominated(t, k).dominated:
        raise ValueError(f"tournament is not {k}-dominated")
    cover = find_star_cover(t, k)
    if cover is not None:
        raise AvoidabilityViolation(f"centres {cover} span a {k}-dominated tournament")
    return True
