"""Tournaments stored as out-neighbourhood bitsets.

Vertices are the integers ``0..n-1``.  Row ``v`` of a tournament is an int
whose bit ``w`` is set iff the edge is directed ``v -> w``.  Vertex sets used
throughout the package are bitmasks over the same indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .bitset import full, mask_of, members

__all__ = [
    "Tournament",
    "TournamentError",
    "ParseError",
    "random_tournament",
    "transitive",
    "cyclic_triple",
    "t6",
    "t7",
    "t8",
    "add_sink",
    "qr7",
    "construct",
    "parse",
    "serialize",
    "T6_LABELS",
    "T7_LABELS",
    "T8_LABELS",
]

T6_LABELS = ("x1", "x2", "x3", "y1", "y2", "y3")
T7_LABELS = T6_LABELS + ("u",)
T8_LABELS = T7_LABELS + ("v",)


class TournamentError(ValueError):
    pass


class ParseError(TournamentError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Tournament:
    """An immutable tournament on ``n`` labelled vertices.

    Construct from out-neighbourhood rows; the constructor checks that the
    rows describe a loopless, complete, antisymmetric orientation.
    """

    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, rows: Iterable[int]):
        out = tuple(int(r) for r in rows)
        n = len(out)
        if n == 0:
            raise TournamentError("a tournament needs at least one vertex")
        everything = full(n)
        inn = [0] * n
        for v, row in enumerate(out):
            if row & ~everything:
                raise TournamentError(f"row {v} refers to vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise TournamentError(f"vertex {v} has a loop")
            for w in members(row):
                inn[w] |= 1 << v
        for v in range(n):
            if out[v] & inn[v]:
                w = (out[v] & inn[v]).bit_length() - 1
                raise TournamentError(f"both {v}->{w} and {w}->{v} are present")
            if (out[v] | inn[v]) != everything ^ (1 << v):
                w = (everything ^ (1 << v) ^ (out[v] | inn[v])).bit_length() - 1
                raise TournamentError(f"pair {{{v}, {w}}} has no edge")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", tuple(inn))
        object.__setattr__(self, "_hash", hash(out))

    def __setattr__(self, name, value):
        raise AttributeError("Tournament is immutable")

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.out == other.out

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tournament(n={self.n}, out={[hex(r) for r in self.out]})"

    # -- queries -----------------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def out_neighbors(self, v: int) -> int:
        self._check(v)
        return self.out[v]

    def in_neighbors(self, v: int) -> int:
        self._check(v)
        return self.inn[v]

    def out_degree(self, v: int) -> int:
        self._check(v)
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check(v)
        return self.inn[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.out[u] >> v & 1)

    def out_degrees(self) -> list[int]:
        return [r.bit_count() for r in self.out]

    @property
    def vertices(self) -> int:
        """Bitmask of all vertices."""
        return full(self.n)

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for v, row in enumerate(self.out):
            m[v, list(members(row))] = True
        return m

    @classmethod
    def from_matrix(cls, matrix) -> "Tournament":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise TournamentError("adjacency matrix must be square")
        return cls(mask_of(np.flatnonzero(row)) for row in a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tournament":
        rows = [0] * n
        for u, v in edges:
            rows[u] |= 1 << v
        return cls(rows)

    # -- derived tournaments -------------------------------------------------

    def induced(self, subset: int) -> tuple["Tournament", dict[int, int], list[int]]:
        """Subtournament on ``subset`` plus the index maps (old->new, new->old)."""
        old = list(members(subset & self.vertices))
        if not old:
            raise TournamentError("cannot induce on an empty vertex set")
        if subset & ~self.vertices:
            raise IndexError("subset contains vertices outside the tournament")
        to_new = {v: i for i, v in enumerate(old)}
        rows = []
        for v in old:
            row = 0
            for w in members(self.out[v] & subset):
                row |= 1 << to_new[w]
            rows.append(row)
        return Tournament(rows), to_new, old

    def permuted(self, order: Sequence[int]) -> "Tournament":
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise TournamentError("order must be a permutation of the vertices")
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        rows = []
        for v in order:
            row = 0
            for w in members(self.out[v]):
                row |= 1 << position[w]
            rows.append(row)
        return Tournament(rows)

    def delete(self, v: int) -> "Tournament":
        self._check(v)
        return self.induced(self.vertices ^ (1 << v))[0]


# -- random generation --------------------------------------------------------


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniform random tournament from numpy's PCG64 generator.

    ``np.random.default_rng(seed).integers(0, 2, C(n, 2))`` supplies one bit per
    pair ``i < j`` in row-major order; bit 1 orients the pair ``i -> j``.
    """
    if n < 1:
        raise TournamentError("n must be at least 1")
    if seed < 0:
        raise TournamentError("seed must be non-negative")
    if n == 1:
        return Tournament([0])
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8).astype(bool)
    upper = np.zeros((n, n), dtype=bool)
    upper[np.triu_indices(n, 1)] = bits
    lower = np.zeros((n, n), dtype=bool)
    lower[np.triu_indices(n, 1)] = ~bits
    adj = upper | lower.T
    packed = np.packbits(adj, axis=1, bitorder="little")
    return Tournament(int.from_bytes(row.tobytes(), "little") for row in packed)


# -- constructions -------------------------------------------------------------


def transitive(n: int) -> Tournament:
    """Transitive tournament with ``i -> j`` for ``i < j`` (vertex 0 is the source)."""
    if n < 1:
        raise TournamentError("n must be at least 1")
    return Tournament(full(n) & ~full(v + 1) for v in range(n))


def cyclic_triple() -> Tournament:
    """0 -> 1 -> 2 -> 0."""
    return Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)])


def _t6_edges() -> list[tuple[int, int]]:
    x = [0, 1, 2]
    y = [3, 4, 5]
    edges = [(x[0], x[1]), (x[1], x[2]), (x[2], x[0])]
    edges += [(y[2], y[1]), (y[1], y[0]), (y[0], y[2])]
    for i in range(3):
        edges.append((x[i], y[i]))
        for j in range(3):
            if i != j:
                edges.append((y[i], x[j]))
    return edges


def t6() -> Tournament:
    """Vertices ordered x1, x2, x3, y1, y2, y3.

    Cycles x1->x2->x3->x1 and y3->y2->y1->y3, edges x_i->y_i and y_i->x_j
    for i != j.  Every x has out-degree 2 and every y out-degree 3.
    """
    return Tournament.from_edges(6, _t6_edges())


def t7() -> Tournament:
    """``t6`` plus u (index 6) with in-neighbourhood X and out-neighbourhood Y."""
    edges = _t6_edges()
    edges += [(x, 6) for x in range(3)] + [(6, y) for y in range(3, 6)]
    return Tournament.from_edges(7, edges)


def t8() -> Tournament:
    """``t7`` plus v (index 7) beaten by X and beating Y and u."""
    edges = _t6_edges()
    edges += [(x, 6) for x in range(3)] + [(6, y) for y in range(3, 6)]
    edges += [(x, 7) for x in range(3)] + [(7, w) for w in range(3, 7)]
    return Tournament.from_edges(8, edges)


def add_sink(t: Tournament) -> Tournament:
    """Append vertex ``n`` dominated by every existing vertex."""
    return Tournament([row | 1 << t.n for row in t.out] + [0])


def qr7() -> Tournament:
    """Quadratic-residue tournament: i -> j iff j - i is 1, 2 or 4 mod 7."""
    return Tournament.from_edges(7, [(i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)])


_KINDS = {
    "cyclic3": cyclic_triple,
    "t6": t6,
    "t7": t7,
    "t8": t8,
    "qr7": qr7,
}


def construct(kind: str, n: int | None = None, base: Tournament | None = None) -> Tournament:
    """Dispatch by name: ``transitive`` (needs n), ``add_sink`` (needs base) or a fixed kind."""
    kind = kind.lower()
    if kind == "transitive":
        if n is None:
            raise TournamentError("transitive construction needs n")
        return transitive(n)
    if kind == "add_sink":
        if base is None:
            raise TournamentError("add_sink needs a base tournament")
        return add_sink(base)
    try:
        return _KINDS[kind]()
    except KeyError:
        raise TournamentError(f"unknown construction {kind!r}") from None


# -- text format ------------------------------------------------------------------


def serialize(t: Tournament) -> str:
    lines = [str(t.n)]
    for row in t.out:
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(t.n)))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Tournament:
    """Parse the text format produced by :func:`serialize`.

    Errors carry 1-based line and column numbers.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise ParseError("missing final newline", max(len(lines), 1), 1)
    if not lines:
        raise ParseError("empty input", 1, 1)
    head = lines[0]
    if not head.isdigit() or (len(head) > 1 and head[0] == "0"):
        raise ParseError(f"expected a positive decimal vertex count, got {head!r}", 1, 1)
    n = int(head)
    if n < 1:
        raise ParseError("vertex count must be positive", 1, 1)
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}", min(len(lines), n + 1) + 1, 1)
    rows = []
    for i, line in enumerate(lines[1:]):
        lineno = i + 2
        if len(line) != n:
            raise ParseError(f"row has {len(line)} characters, expected {n}", lineno, min(len(line), n) + 1)
        row = 0
        for j, ch in enumerate(line):
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r}", lineno, j + 1)
            if ch == "1":
                row |= 1 << j
        rows.append(row)
    for i in range(n):
        if rows[i] >> i & 1:
            raise ParseError("diagonal entry must be '0'", i + 2, i + 1)
        for j in range(i + 1, n):
            a = rows[i] >> j & 1
            b = rows[j] >> i & 1
            if a == b:
                what = "both directions present" if a else "no edge between the pair"
                raise ParseError(f"adj[{i}][{j}] and adj[{j}][{i}] inconsistent: {what}", i + 2, j + 1)
    return Tournament(rows)
