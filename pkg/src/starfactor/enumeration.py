"""Isomorphism classes of small tournaments and sweeps over them.

Classes of order n are produced by giving a new vertex every possible
out-neighbourhood over each class representative of order n - 1 and keeping
one tournament per canonical code.  Every n-vertex tournament arises this way,
since deleting any vertex leaves a tournament isomorphic to some
representative.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .canon import MAX_CANON_N, canonical_form
from .tournament import Tournament, parse, serialize

Predicate = Callable[[Tournament], bool]


@dataclass(frozen=True)
class ClassCatalog:
    n: int
    representatives: tuple[Tournament, ...]
    codes: tuple[bytes, ...]

    def __len__(self):
        return len(self.representatives)


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_CANON_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_CANON_N} (got {n})")


def _catalog(n: int, found: dict[bytes, Tournament]) -> ClassCatalog:
    codes = tuple(sorted(found))
    return ClassCatalog(n, tuple(found[c] for c in codes), codes)


def extend(parents: Iterable[Tournament]) -> dict[bytes, Tournament]:
    """Canonical forms of every one-vertex extension of ``parents``, keyed by code."""
    found: dict[bytes, Tournament] = {}
    for p in parents:
        k = p.n
        for beaten in range(1 << k):
            # new vertex k beats the vertices in ``beaten`` and loses to the rest
            rows = [row | (0 if beaten >> v & 1 else 1 << k) for v, row in enumerate(p.out)]
            rows.append(beaten)
            form, code = canonical_form(Tournament(rows))
            if code not in found:
                found[code] = form
    return found


_cache: dict[int, ClassCatalog] = {}


def enumerate_classes(n: int, parent_order: Callable[[Sequence[Tournament]], Sequence[Tournament]] | None = None,
                      use_cache: bool = True) -> ClassCatalog:
    """One canonical representative per isomorphism class of n-vertex tournaments.

    ``parent_order`` may reorder the (n-1)-representatives before extension;
    the resulting catalogue does not depend on it.
    """
    _check_n(n)
    if use_cache and parent_order is None and n in _cache:
        return _cache[n]
    if n == 1:
        cat = _catalog(1, {canonical_form(Tournament([0]))[1]: Tournament([0])})
    else:
        parents: Sequence[Tournament] = enumerate_classes(n - 1, use_cache=use_cache).representatives
        if parent_order is not None:
            parents = parent_order(parents)
        cat = _catalog(n, extend(parents))
    if use_cache and parent_order is None:
        _cache[n] = cat
    return cat


def raw_census(n: int) -> ClassCatalog:
    """Canonicalise all 2^C(n,2) labelled tournaments; the census oracle for n <= 6."""
    if not 1 <= n <= 6:
        raise ValueError("raw census is limited to n <= 6")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found: dict[bytes, Tournament] = {}
    for bits in product((0, 1), repeat=len(pairs)):
        rows = [0] * n
        for (i, j), b in zip(pairs, bits):
            if b:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
        form, code = canonical_form(Tournament(rows))
        found.setdefault(code, form)
    return _catalog(n, found)


# -- persistence ---------------------------------------------------------------


def dump_catalog(cat: ClassCatalog) -> str:
    chunks = [f"catalog n={cat.n} count={len(cat)}\n"]
    chunks.append("\n".join(serialize(t) for t in cat.representatives))
    return "".join(chunks)


def load_catalog(text: str) -> ClassCatalog:
    head, _, body = text.partition("\n")
    parts = head.split()
    if len(parts) != 3 or parts[0] != "catalog" or not parts[1].startswith("n=") or not parts[2].startswith("count="):
        raise ValueError(f"bad catalog header {head!r}")
    n = int(parts[1][2:])
    count = int(parts[2][6:])
    reps = [parse(chunk + "\n") for chunk in body.rstrip("\n").split("\n\n")] if body.strip() else []
    if len(reps) != count:
        raise ValueError(f"catalog header says {count} classes, found {len(reps)}")
    found: dict[bytes, Tournament] = {}
    for t in reps:
        if t.n != n:
            raise ValueError(f"catalog for n={n} contains a tournament on {t.n} vertices")
        form, code = canonical_form(t)
        if code in found:
            raise ValueError("catalog lists the same class twice")
        found[code] = form
    return _catalog(n, found)


def catalog_path(directory: str | os.PathLike, n: int) -> Path:
    return Path(directory) / f"tournaments-n{n}.catalog"


def cached_catalog(n: int, directory: str | os.PathLike | None = None) -> ClassCatalog:
    """Load the catalogue from ``directory`` if present, else build and save it there."""
    if directory is None:
        return enumerate_classes(n)
    path = catalog_path(directory, n)
    if path.exists():
        return load_catalog(path.read_text())
    cat = enumerate_classes(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_catalog(cat))
    return cat


# -- sweeps ----------------------------------------------------------------------


@dataclass(frozen=True)
class SweepReport:
    n: int
    predicate: str
    total: int
    failures: tuple[int, ...]  # class indices
    codes: tuple[bytes, ...]
    passed: tuple[bool, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class_index", "canonical_code_hex", "predicate", "result"])
        for i, (code, ok) in enumerate(zip(self.codes, self.passed)):
            w.writerow([i, code.hex(), self.predicate, "pass" if ok else "fail"])
        return buf.getvalue()


def sweep(cat: ClassCatalog, predicate: Predicate, name: str = "predicate") -> SweepReport:
    passed = tuple(bool(predicate(t)) for t in cat.representatives)
    failures = tuple(i for i, ok in enumerate(passed) if not ok)
    return SweepReport(cat.n, name, len(cat), failures, cat.codes, passed)
