"""Canonical codes for small tournaments.

The code of a tournament is the lexicographically least upper-triangular bit
string ``adj[p0][p1] adj[p0][p2] ... adj[p0][p(n-1)] adj[p1][p2] ...`` taken
over all orderings ``p`` of the vertices, packed big-endian behind a one-byte
vertex count.

The search places vertices one position at a time.  Once positions
``0..i-1`` are fixed and their rows are minimal, the remaining vertices sit in
an ordered partition whose cells may be permuted internally but not across
each other.  Row ``i`` is then minimised by putting, inside every cell, the
in-neighbours of the chosen vertex ahead of its out-neighbours, so the best
row for a candidate is read off from cell counts and the cells split in two.
All candidates tying for the least row are kept, which makes the result the
exact minimum over all ``n!`` orderings.
"""

from __future__ import annotations

from itertools import permutations

from .bitset import members
from .tournament import Tournament, TournamentError

MAX_CANON_N = 8


def _code_bytes(n: int, value: int) -> bytes:
    length = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + value.to_bytes(length, "big")


def _search(t: Tournament) -> tuple[int, list[int]]:
    n = t.n
    out, inn = t.out, t.inn
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), (t.vertices,))]
    code = 0
    for level in range(n - 1):
        best = -1
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for order, cells in states:
            first = cells[0]
            for v in members(first):
                ov, iv = out[v], inn[v]
                row = 0
                split = []
                for idx, cell in enumerate(cells):
                    if idx == 0:
                        cell ^= 1 << v
                        if not cell:
                            continue
                    lo = cell & iv
                    hi = cell & ov
                    a = lo.bit_count()
                    b = hi.bit_count()
                    row = (row << (a + b)) | ((1 << b) - 1)
                    if lo:
                        split.append(lo)
                    if hi:
                        split.append(hi)
                if best != -1 and row > best:
                    continue
                if row < best or best == -1:
                    best = row
                    nxt = {}
                key = tuple(split)
                if key not in nxt:
                    nxt[key] = order + (v,)
        code = (code << (n - 1 - level)) | best
        states = [(order, cells) for cells, order in nxt.items()]
    order, cells = states[0]
    last = list(members(cells[0])) if cells else []
    return code, list(order) + last


def _guard(t: Tournament) -> None:
    if t.n > MAX_CANON_N:
        raise TournamentError(f"canonical codes are limited to n <= {MAX_CANON_N} (got n={t.n})")


def canonical_code(t: Tournament) -> bytes:
    _guard(t)
    if t.n == 1:
        return _code_bytes(1, 0)
    return _code_bytes(t.n, _search(t)[0])


def canonical_form(t: Tournament) -> tuple[Tournament, bytes]:
    """Relabel ``t`` by a minimising ordering; returns the relabelled copy and its code."""
    _guard(t)
    if t.n == 1:
        return t, _code_bytes(1, 0)
    value, order = _search(t)
    return t.permuted(order), _code_bytes(t.n, value)


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def code_under(t: Tournament, order) -> int:
    """Row-major upper-triangle bits of ``t`` relabelled by ``order``, as an int."""
    value = 0
    out = t.out
    n = t.n
    for i in range(n):
        row = out[order[i]]
        for j in range(i + 1, n):
            value = (value << 1) | (row >> order[j] & 1)
    return value


def brute_force_code(t: Tournament) -> bytes:
    """Minimum over every vertex ordering; the unpruned reference for testing."""
    _guard(t)
    best = min(code_under(t, p) for p in permutations(range(t.n)))
    return _code_bytes(t.n, best)
