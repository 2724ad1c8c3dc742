"""Subsets of a finite ground set ``{0, ..., n-1}`` stored as Python ints.

Bit ``i`` of a mask is set iff element ``i`` belongs to the subset.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full(n) & ~mask


def from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


def elements(mask: int) -> list[int]:
    return list(iter_elements(mask))


def iter_elements(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def contains(mask: int, x: int) -> bool:
    return bool((mask >> x) & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def lowest(mask: int) -> int:
    """Smallest element of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in ascending integer order."""
    bits = elements(mask)
    for k in range(1 << len(bits)):
        sub = 0
        for i, b in enumerate(bits):
            if (k >> i) & 1:
                sub |= 1 << b
        yield sub


def supermasks(mask: int, n: int) -> Iterator[int]:
    """All supersets of ``mask`` inside ``{0..n-1}``, ascending."""
    free = complement(mask, n)
    for sub in submasks(free):
        yield mask | sub


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, iter_elements(mask))) + "}"


def parse_literal(text: str, n: int) -> int:
    """Parse ``"0,2,3"`` (or ``""`` for the empty set) into a mask of width n."""
    text = text.strip().strip("{}[]")
    if not text:
        return 0
    mask = 0
    for i, tok in enumerate(text.split(",")):
        tok = tok.strip()
        try:
            x = int(tok)
        except ValueError:
            raise ValueError(f"bad set element {tok!r} at position {i}") from None
        if not 0 <= x < n:
            raise ValueError(f"set element {x} at position {i} not in [0, {n})")
        mask |= 1 << x
    return mask
