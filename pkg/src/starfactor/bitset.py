"""Small helpers for vertex sets stored as Python int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the elements of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def lowest(mask: int, count: int) -> int:
    """Return the submask made of the ``count`` lowest elements of ``mask``."""
    out = 0
    while count > 0 and mask:
        low = mask & -mask
        out |= low
        mask ^= low
        count -= 1
    if count > 0:
        raise ValueError("mask has fewer elements than requested")
    return out


def full(n: int) -> int:
    return (1 << n) - 1
