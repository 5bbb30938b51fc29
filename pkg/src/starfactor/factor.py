"""Stars, star-factors and the algorithms that find them.

An m-star is a centre together with m-1 leaves it dominates.  An m-star-factor
of an n-vertex tournament is a partition of the vertices into n/m such stars.

Three independent routes decide existence:

* :func:`find_star_factor_constructive` follows the max-out-degree
  construction, which always succeeds once ``n > 4m^2 - 6m``;
* :func:`has_star_factor_exact` tries every centre set and solves the leaf
  assignment as a capacitated bipartite matching;
* :func:`has_star_factor_bruteforce` partitions the vertex set directly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, perm
from typing import Sequence

from .bitset import lowest, mask_of, members, to_list
from .tournament import Tournament

DEFAULT_CENTER_BUDGET = 10**7
BRUTEFORCE_MAX_N = 12


@dataclass(frozen=True)
class Star:
    center: int
    leaves: int  # bitmask

    @property
    def vertices(self) -> int:
        return self.leaves | 1 << self.center

    @property
    def order(self) -> int:
        return self.leaves.bit_count() + 1

    def leaf_list(self) -> list[int]:
        return to_list(self.leaves)

    def to_dict(self) -> dict:
        return {"center": self.center, "leaves": self.leaf_list()}


@dataclass(frozen=True)
class StarFactor:
    m: int
    stars: tuple[Star, ...]

    def to_dict(self) -> dict:
        return {"m": self.m, "stars": [s.to_dict() for s in self.stars]}

    @classmethod
    def from_dict(cls, data: dict) -> "StarFactor":
        stars = tuple(Star(int(s["center"]), mask_of(int(v) for v in s["leaves"])) for s in data["stars"])
        return cls(int(data["m"]), stars)


def verify_star_factor(t: Tournament, factor: StarFactor) -> tuple[bool, str | None]:
    """Check ``factor`` against ``t``; returns ``(ok, reason)`` for the first violation.

    Raises IndexError if any star mentions a vertex outside ``t``.
    """
    n = t.n
    for s in factor.stars:
        if not 0 <= s.center < n or s.leaves >> n:
            raise IndexError(f"star centred at {s.center} uses vertices outside 0..{n - 1}")
    seen = 0
    for s in factor.stars:
        if s.leaves >> s.center & 1:
            return False, f"centre {s.center} listed among its own leaves"
        if s.leaves.bit_count() != factor.m - 1:
            return False, f"wrong size: star at {s.center} has {s.leaves.bit_count()} leaves, expected {factor.m - 1}"
        missing = s.leaves & ~t.out[s.center]
        if missing:
            leaf = (missing & -missing).bit_length() - 1
            return False, f"missing edge: {s.center} does not dominate leaf {leaf}"
        clash = seen & s.vertices
        if clash:
            v = (clash & -clash).bit_length() - 1
            return False, f"overlap: vertex {v} belongs to two stars"
        seen |= s.vertices
    if seen != t.vertices:
        v = ((t.vertices & ~seen) & -(t.vertices & ~seen)).bit_length() - 1
        return False, f"incomplete cover: vertex {v} is in no star"
    return True, None


def has_spanning_star(t: Tournament) -> bool:
    return any(d == t.n - 1 for d in t.out_degrees())


# -- greedy packing --------------------------------------------------------------


def _best_center(t: Tournament, pool: int) -> tuple[int, int]:
    """Vertex of ``pool`` with most out-neighbours inside ``pool`` (lowest index on ties)."""
    best_v, best_d = -1, -1
    out = t.out
    for v in members(pool):
        d = (out[v] & pool).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def greedy_pack(t: Tournament, subset: int, m: int) -> tuple[list[Star], int]:
    """Pack disjoint m-stars inside ``t[subset]`` until none is left.

    Repeatedly takes the remaining vertex of largest inner out-degree and, if
    it has at least m-1 remaining out-neighbours, makes a star from the m-1
    lowest-index ones.  Returns the stars and the uncovered leftover, which
    contains no m-star (so it has at most 2m-3 vertices).
    """
    if m < 2:
        raise ValueError("star order m must be at least 2")
    pool = subset
    stars = []
    while pool:
        v, d = _best_center(t, pool)
        if d < m - 1:
            break
        leaves = lowest(t.out[v] & pool, m - 1)
        stars.append(Star(v, leaves))
        pool &= ~(leaves | 1 << v)
    return stars, pool


# -- constructive algorithm ---------------------------------------------------------


class StageFailure(Exception):
    """The construction could not proceed; only possible when n <= 4m^2 - 6m."""

    def __init__(self, stage: int, detail: str, trace: "ConstructionTrace"):
        super().__init__(f"stage {stage}: {detail}")
        self.stage = stage
        self.detail = detail
        self.trace = trace


class ProofInequalityError(AssertionError):
    pass


class ProofInequalityWarning(UserWarning):
    pass


@dataclass
class Check:
    name: str
    lhs: float
    rhs: float
    holds: bool


@dataclass
class ConstructionTrace:
    """Intermediate sets of one constructive run (bitmasks) and the checked inequalities."""

    n: int
    m: int
    strict: bool
    x: int = -1
    leftover_in: int = 0  # A
    remainder_in: int = 0  # A'
    rest_out: int = 0  # B
    dominators: int = 0  # B'
    pivot: int | None = None  # y
    reserve: int = 0  # R
    stars: list[Star] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    factor: StarFactor | None = None

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]


def construction_bound(m: int) -> int:
    """Success is guaranteed for every multiple of m strictly above this."""
    return 4 * m * m - 6 * m


def _require(trace: ConstructionTrace, name: str, lhs, rhs, holds: bool) -> None:
    trace.checks.append(Check(name, lhs, rhs, holds))
    if holds:
        return
    msg = f"{name} violated: {lhs} vs {rhs} (n={trace.n}, m={trace.m})"
    if trace.strict:
        raise ProofInequalityError(msg)
    warnings.warn(msg, ProofInequalityWarning, stacklevel=3)


def trace_constructive(t: Tournament, m: int, strict: bool | None = None) -> ConstructionTrace:
    """Run the construction and return its trace; ``trace.factor`` holds the result.

    ``strict`` makes a violated inequality raise ProofInequalityError; by
    default that happens only above the bound, and below it the violation is
    a ProofInequalityWarning.  A stage that cannot proceed raises
    StageFailure carrying the partial trace.
    """
    n = t.n
    if m < 2:
        raise ValueError("star order m must be at least 2")
    if n % m:
        raise ValueError(f"n={n} is not a multiple of m={m}")
    if strict is None:
        strict = n > construction_bound(m)
    tr = ConstructionTrace(n=n, m=m, strict=strict)
    out = t.out

    # 1. centre of the final star
    degrees = t.out_degrees()
    x = degrees.index(max(degrees))
    tr.x = x
    n_minus, n_plus = t.inn[x], out[x]

    # 2. pack inside the in-neighbourhood
    stars, a_set = greedy_pack(t, n_minus, m)
    tr.stars.extend(stars)
    tr.leftover_in = a_set
    _require(tr, "|A| <= 2m-3", a_set.bit_count(), 2 * m - 3, a_set.bit_count() <= 2 * m - 3)

    # 3. stars with centre in A and leaves in N+(x)
    free_plus = n_plus
    a_prime = a_set
    for v in members(a_set):
        avail = out[v] & free_plus
        if avail.bit_count() >= m - 1:
            leaves = lowest(avail, m - 1)
            tr.stars.append(Star(v, leaves))
            free_plus &= ~leaves
            a_prime &= ~(1 << v)
    a = a_prime.bit_count()
    tr.remainder_in = a_prime

    # 4. B and the part of it dominating A'
    b_set = free_plus
    b_prime = 0
    for v in members(b_set):
        if a_prime & ~out[v] == 0:
            b_prime |= 1 << v
    tr.rest_out = b_set
    tr.dominators = b_prime
    nb, nbp = b_set.bit_count(), b_prime.bit_count()
    _require(tr, "|B| >= (n-1)/2 - (m-1)(2m-3-a)", nb, (n - 1) / 2 - (m - 1) * (2 * m - 3 - a),
             nb >= (n - 1) / 2 - (m - 1) * (2 * m - 3 - a))
    _require(tr, "|B'| >= |B| - a(m-2)", nbp, nb - a * (m - 2), nbp >= nb - a * (m - 2))
    _require(tr, "|B'| >= (n-1)/2 - (m-1)(2m-3) + a", nbp, (n - 1) / 2 - (m - 1) * (2 * m - 3) + a,
             nbp >= (n - 1) / 2 - (m - 1) * (2 * m - 3) + a)
    _require(tr, "|B'| >= 2m-3", nbp, 2 * m - 3, nbp >= 2 * m - 3)

    # 5. pivot y with m-2 successors inside B'
    y, dy = _best_center(t, b_prime) if b_prime else (-1, -1)
    _require(tr, "B' has a vertex of inner out-degree >= m-2", dy, m - 2, dy >= m - 2)
    if dy >= m - 2:
        tr.pivot = y
        tr.reserve = 1 << y | lowest(out[y] & b_prime, m - 2)
    elif a > 0:
        raise StageFailure(5, f"no vertex of B' (|B'|={nbp}) has {m - 2} successors inside B'", tr)

    # 6. cover A' from B'
    used_b = 0
    rest_a = a_prime
    if a >= m:
        outside = b_prime & ~tr.reserve
        if not outside:
            raise StageFailure(6, "B' has no vertex outside R to centre a star over A'", tr)
        c = (outside & -outside).bit_length() - 1
        leaves = lowest(rest_a, m - 1)
        tr.stars.append(Star(c, leaves))
        rest_a &= ~leaves
        used_b |= 1 << c
    if rest_a:
        need = m - 1 - rest_a.bit_count()
        pad = lowest(tr.reserve & ~(1 << tr.pivot), need)
        tr.stars.append(Star(tr.pivot, rest_a | pad))
        used_b |= 1 << tr.pivot | pad

    # 7. pack what is left of B, then a star centred at x
    stars, last = greedy_pack(t, b_set & ~used_b, m)
    tr.stars.extend(stars)
    _require(tr, "vertices left for x == m-1", last.bit_count(), m - 1, last.bit_count() == m - 1)
    if last.bit_count() != m - 1:
        raise StageFailure(7, f"{last.bit_count()} vertices left for the star at x", tr)
    tr.stars.append(Star(x, last))

    factor = StarFactor(m, tuple(tr.stars))
    ok, why = verify_star_factor(t, factor)
    if not ok:
        raise ProofInequalityError(f"construction produced an invalid factor: {why}")
    tr.factor = factor
    return tr


def find_star_factor_constructive(t: Tournament, m: int, strict: bool | None = None) -> StarFactor:
    return trace_constructive(t, m, strict).factor


# -- exact oracle ------------------------------------------------------------------


class BudgetExceeded(RuntimeError):
    pass


def _assign_leaves(t: Tournament, centers: Sequence[int], caps: Sequence[int]) -> list[int] | None:
    """Capacitated assignment of every non-centre to a dominating centre.

    Returns a per-centre list of leaf bitmasks, or None when some vertex
    cannot be placed.  Augmenting paths, one leaf at a time.
    """
    out = t.out
    center_mask = mask_of(centers)
    rest = t.vertices & ~center_mask
    k = len(centers)
    covered = 0
    for c in centers:
        covered |= out[c]
    if rest & ~covered:
        return None
    for c, cap in zip(centers, caps):
        if (out[c] & rest).bit_count() < cap:
            return None
    owner = {}
    held: list[list[int]] = [[] for _ in range(k)]
    options = {u: [i for i in range(k) if out[centers[i]] >> u & 1] for u in members(rest)}

    def augment(u: int, visited: set[int]) -> bool:
        for i in options[u]:
            if i in visited:
                continue
            visited.add(i)
            if len(held[i]) < caps[i]:
                held[i].append(u)
                owner[u] = i
                return True
            for j, w in enumerate(held[i]):
                if augment(w, visited):
                    held[i][j] = u
                    owner[u] = i
                    return True
        return False

    for u in members(rest):
        if not augment(u, set()):
            return None
    return [mask_of(h) for h in held]


def find_star_partition(
    t: Tournament, orders: Sequence[int], budget: int = DEFAULT_CENTER_BUDGET
) -> list[Star] | None:
    """Partition ``t`` into stars of the given orders (summing to n), if possible.

    Centres of equal order are taken in increasing index order so each
    unordered choice is tried once; tuples come in lexicographic order.
    """
    orders = sorted(orders, reverse=True)
    if sum(orders) != t.n or min(orders) < 1:
        raise ValueError(f"star orders {orders} do not partition {t.n} vertices")
    k = len(orders)
    caps = [o - 1 for o in orders]
    uniform = len(set(orders)) == 1
    total = comb(t.n, k) if uniform else perm(t.n, k)
    if total > budget:
        raise BudgetExceeded(f"{total} centre tuples exceed the budget of {budget}; raise it to proceed")
    it = combinations(range(t.n), k) if uniform else permutations(range(t.n), k)
    for centers in it:
        if not uniform and any(orders[i] == orders[i + 1] and centers[i] > centers[i + 1] for i in range(k - 1)):
            continue
        leaves = _assign_leaves(t, centers, caps)
        if leaves is not None:
            return [Star(c, lv) for c, lv in zip(centers, leaves)]
    return None


def has_star_factor_exact(t: Tournament, m: int, budget: int = DEFAULT_CENTER_BUDGET) -> StarFactor | None:
    """Lexicographically least centre set admitting an m-star-factor, or None."""
    if m < 1:
        raise ValueError("star order m must be positive")
    if t.n % m:
        raise ValueError(f"n={t.n} is not a multiple of m={m}")
    stars = find_star_partition(t, [m] * (t.n // m), budget)
    if stars is None:
        return None
    factor = StarFactor(m, tuple(stars))
    ok, why = verify_star_factor(t, factor)
    assert ok, why
    return factor


def has_star_factor_bruteforce(t: Tournament, m: int, max_n: int = BRUTEFORCE_MAX_N) -> bool:
    """Independent check: split the vertices into m-blocks, each with a spanning star."""
    if m < 1:
        raise ValueError("star order m must be positive")
    if t.n % m:
        raise ValueError(f"n={t.n} is not a multiple of m={m}")
    if t.n > max_n:
        raise BudgetExceeded(f"brute force is limited to n <= {max_n}; raise the limit to proceed")
    out = t.out

    def spans(block: int) -> bool:
        return any(block & ~out[w] == 1 << w for w in members(block))

    def search(free: int) -> bool:
        if not free:
            return True
        v = (free & -free).bit_length() - 1
        others = to_list(free ^ (1 << v))
        for rest in combinations(others, m - 1):
            block = 1 << v | mask_of(rest)
            if spans(block) and search(free & ~block):
                return True
        return False

    return search(t.vertices)
