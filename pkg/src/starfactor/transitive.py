"""Transitive subtournaments and partitions into transitive blocks."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .bitset import lowest, mask_of, members, to_list
from .factor import Star, StarFactor
from .tournament import Tournament

DEFAULT_SEARCH_BUDGET = 10**7


class SearchBudgetExceeded(RuntimeError):
    pass


class PartitionStageError(AssertionError):
    """A stage of the partition procedure could not be completed."""


def is_transitive_sequence(t: Tournament, seq) -> bool:
    out = t.out
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return False
    for i, v in enumerate(seq):
        later = mask_of(seq[i + 1:])
        if later & ~out[v]:
            return False
    return True


@dataclass(frozen=True)
class TransitivePartition:
    m: int
    blocks: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"m": self.m, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, data: dict) -> "TransitivePartition":
        return cls(int(data["m"]), tuple(tuple(int(v) for v in b) for b in data["blocks"]))

    def to_star_factor(self) -> StarFactor:
        """Each block's first vertex dominates the rest, giving an m-star."""
        return StarFactor(self.m, tuple(Star(b[0], mask_of(b[1:])) for b in self.blocks))


def verify_transitive_partition(t: Tournament, part: TransitivePartition) -> tuple[bool, str | None]:
    seen = 0
    for b in part.blocks:
        if any(not 0 <= v < t.n for v in b):
            raise IndexError(f"block {b} uses vertices outside 0..{t.n - 1}")
        if len(b) != part.m:
            return False, f"block {b} has {len(b)} vertices, expected {part.m}"
        if not is_transitive_sequence(t, b):
            return False, f"block {b} is not in transitive order"
        if seen & mask_of(b):
            return False, f"block {b} overlaps an earlier block"
        seen |= mask_of(b)
    if seen != t.vertices:
        return False, "blocks do not cover every vertex"
    return True, None


def greedy_transitive(t: Tournament, subset: int | None = None) -> list[int]:
    """Follow maximum out-degree down nested out-neighbourhoods.

    Each step keeps at least half of the remaining vertices, so the result has
    at least floor(lg n) + 1 vertices.
    """
    pool = t.vertices if subset is None else subset
    out = t.out
    seq = []
    while pool:
        best_v, best_d = -1, -1
        for v in members(pool):
            d = (out[v] & pool).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        seq.append(best_v)
        pool &= out[best_v]
    return seq


def find_transitive_exact(
    t: Tournament, size: int, subset: int | None = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> list[int] | None:
    """Backtracking search for a transitive subtournament of the given order."""
    pool = t.vertices if subset is None else subset
    if size < 0 or size > pool.bit_count():
        raise ValueError(f"order {size} is not within 0..{pool.bit_count()}")
    out = t.out
    nodes = 0

    def extend(cand: int, need: int) -> list[int] | None:
        nonlocal nodes
        if need == 0:
            return []
        for v in members(cand):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"transitive search exceeded {budget} nodes")
            rest = cand & out[v]
            if rest.bit_count() >= need - 1:
                tail = extend(rest, need - 1)
                if tail is not None:
                    return [v] + tail
        return None

    return extend(pool, size)


def theta_bound(m: int) -> int:
    """2^(m-1), enough vertices to force a transitive subtournament of order m."""
    return 1 << (m - 1)


def lonc_order(m: int) -> int:
    """m * ceil(theta((m-1) theta(m)) / m) with theta replaced by 2^(m-1)."""
    return m * ceil(theta_bound((m - 1) * theta_bound(m)) / m)


def lonc_partition(t: Tournament, m: int) -> TransitivePartition:
    """Partition a tournament of order ``lonc_order(m)`` into transitive m-blocks.

    A long transitive chain A is set aside; greedy chains of order m are
    peeled from the rest while at least 2^(m-1) outside vertices remain; each
    leftover outside vertex joins m-1 of its successors or predecessors in A;
    what survives of A is cut into consecutive blocks.
    """
    if m < 2:
        raise ValueError("block order m must be at least 2")
    need = lonc_order(m)
    if t.n != need:
        raise ValueError(f"partition procedure needs n = {need} for m = {m} (got n={t.n})")
    theta = theta_bound(m)
    chain_len = (m - 1) * theta
    out, inn = t.out, t.inn

    greedy = greedy_transitive(t)
    if len(greedy) >= chain_len:
        chain = greedy[:chain_len]
    else:
        chain = find_transitive_exact(t, chain_len)
        if chain is None:
            raise PartitionStageError(f"no transitive subtournament of order {chain_len}")
    chain_mask = mask_of(chain)

    blocks: list[tuple[int, ...]] = []
    outside = t.vertices & ~chain_mask
    while outside.bit_count() >= theta:
        seq = greedy_transitive(t, outside)
        if len(seq) < m:
            raise PartitionStageError(f"greedy chain of length {len(seq)} < {m} among {outside.bit_count()} vertices")
        blocks.append(tuple(seq[:m]))
        outside &= ~mask_of(seq[:m])

    position = {v: i for i, v in enumerate(chain)}
    alive = chain_mask
    for v in members(outside):
        if alive.bit_count() < 2 * (m - 1):
            raise PartitionStageError(f"only {alive.bit_count()} chain vertices left for vertex {v}")
        succ = out[v] & alive
        if succ.bit_count() >= m - 1:
            picked = sorted(to_list(lowest(succ, m - 1)), key=position.__getitem__)
            block = (v, *picked)
        else:
            pred = inn[v] & alive
            if pred.bit_count() < m - 1:
                raise PartitionStageError(f"vertex {v} has fewer than {m - 1} successors and predecessors in A")
            picked = sorted(to_list(lowest(pred, m - 1)), key=position.__getitem__)
            block = (*picked, v)
        blocks.append(block)
        alive &= ~mask_of(picked)

    rest = [v for v in chain if alive >> v & 1]
    if len(rest) % m:
        raise PartitionStageError(f"{len(rest)} chain vertices left, not a multiple of {m}")
    blocks.extend(tuple(rest[i:i + m]) for i in range(0, len(rest), m))

    part = TransitivePartition(m, tuple(blocks))
    ok, why = verify_transitive_partition(t, part)
    if not ok:
        raise PartitionStageError(why)
    return part


def exact_theta(m: int) -> int:
    """Least n with every n-vertex tournament holding a transitive m-subtournament.

    Uses the isomorphism class catalogues, so only small m (at most 4) are allowed.
    """
    from .enumeration import enumerate_classes

    if not 1 <= m <= 4:
        raise ValueError("exact_theta supports 1 <= m <= 4")
    n = m
    while True:
        if all(find_transitive_exact(rep, m) is not None for rep in enumerate_classes(n).representatives):
            return n
        n += 1
