"""Bitmask helpers: a subset of {0, ..., n-1} is an int with bit i set for i."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        # next submask in increasing order
        sub = (sub - mask) & mask


def supermasks(mask: int, full: int) -> Iterator[int]:
    rest = full & ~mask
    for extra in submasks(rest):
        yield mask | extra


def fmt(mask: int) -> str:
    """Render a mask as ``{0,2}``."""
    return "{" + ",".join(str(i) for i in members(mask)) + "}"


def compress(mask: int, support: int) -> int:
    """Re-index the bits of ``mask`` (inside ``support``) to 0..|support|-1."""
    out = 0
    for k, i in enumerate(members(support)):
        if mask >> i & 1:
            out |= 1 << k
    return out


def expand(mask: int, support: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for k, i in enumerate(members(support)):
        if mask >> k & 1:
            out |= 1 << i
    return out


def parse_mask(text: str) -> int:
    """CLI subset syntax: a plain integer is a bitmask; ``1,2`` or ``{1,2}`` lists indices.

    ``{}`` is the empty set.  A single index needs braces (``{3}``) or a trailing comma.
    """
    s = text.strip()
    if s.startswith("{") or "," in s:
        body = s.strip("{}").strip()
        if not body:
            return 0
        idx = [int(p) for p in body.split(",") if p.strip()]
        if any(i < 0 for i in idx):
            raise ValueError(f"negative index in {text!r}")
        return mask_of(idx)
    m = int(s)
    if m < 0:
        raise ValueError(f"negative mask {text!r}")
    return m
