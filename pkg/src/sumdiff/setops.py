"""Set arithmetic on bitmask-encoded subsets of a group table.

A subset is a plain int whose bit i marks element index i. Python ints
are arbitrary width, so this scalar path works for any order the table
builders allow; the uint64 batch kernels are the ones capped at 64.
This module is deliberately simple and independent of those kernels so
the two routes can check each other.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .groups import GroupTable


class Classification(Enum):
    MSTD = "mstd"
    MDTS = "mdts"
    BALANCED = "balanced"


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with the given element indices set."""
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def indices_of(mask: int) -> list[int]:
    """Ascending element indices present in the mask."""
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def _check_mask(g: GroupTable, amask: int) -> None:
    if amask < 0 or amask >> g.order:
        raise ValueError(f"mask has bits outside the {g.order} valid element indices")


def sumset(g: GroupTable, amask: int) -> int:
    """Bitmask of all products a1*a2 with a1, a2 in the set."""
    _check_mask(g, amask)
    elems = indices_of(amask)
    rows = g.mul_rows
    out = 0
    for x in elems:
        row = rows[x]
        for y in elems:
            out |= 1 << row[y]
    return out


def diffset(g: GroupTable, amask: int) -> int:
    """Bitmask of all quotients a1*a2^-1 with a1, a2 in the set."""
    _check_mask(g, amask)
    elems = indices_of(amask)
    rows = g.mul_rows
    inv = g.inv_list
    out = 0
    for x in elems:
        row = rows[x]
        for y in elems:
            out |= 1 << row[inv[y]]
    return out


def sum_diff_sizes(g: GroupTable, amask: int) -> tuple[int, int]:
    """(|A+A|, |A-A|) for a nonempty set."""
    if amask == 0:
        raise ValueError("empty set has no classification")
    return sumset(g, amask).bit_count(), diffset(g, amask).bit_count()


def classify(g: GroupTable, amask: int) -> Classification:
    """Compare |A+A| against |A-A|; raises on the empty set."""
    s, d = sum_diff_sizes(g, amask)
    if s > d:
        return Classification.MSTD
    if s < d:
        return Classification.MDTS
    return Classification.BALANCED


def conjugate(g: GroupTable, amask: int, h: int) -> int:
    """Bitmask of h*a*h^-1 for a in the set."""
    _check_mask(g, amask)
    if not (0 <= h < g.order):
        raise ValueError(f"element index out of range for order {g.order}")
    rows = g.mul_rows
    hinv = g.inv_list[h]
    row = rows[h]
    out = 0
    for x in indices_of(amask):
        out |= 1 << rows[row[x]][hinv]
    return out
