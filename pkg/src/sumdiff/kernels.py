"""Numba kernels for bulk subset classification.

Subsets ride in uint64 accumulators here, so the ambient order is capped
at 64. The bit tables hold one preshifted word per ordered element pair:

    sumbit[x*m + y] = 1 << mul[x, y]
    difbit[x*m + y] = 1 << mul[x, inv[y]]

so the inner loop is a single load and OR per pair, and the sumset and
difference set of a k-subset cost 2*k*k word ops before two popcounts.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .groups import GroupTable, MAX_ENUM_ORDER


def bit_tables(g: GroupTable) -> tuple[np.ndarray, np.ndarray]:
    """Flattened pair-product bit tables (sum side, difference side)."""
    if g.order > MAX_ENUM_ORDER:
        raise ValueError(
            f"order {g.order} exceeds the {MAX_ENUM_ORDER}-bit kernel width"
        )
    mul = g.mul.astype(np.uint64)
    dif = g.mul[:, g.inv].astype(np.uint64)
    one = np.uint64(1)
    return (one << mul).ravel(), (one << dif).ravel()


@njit(cache=True)
def _popcount64(x):
    # SWAR popcount; numba has no intrinsic for this on uint64
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def count_fixed_min(sumbit, difbit, order, k, first):
    """Classify every k-subset of [0, order) whose least element is first.

    Subsets are walked with an odometer over the sorted index array e;
    e[0] stays pinned at first, which is what makes these strata disjoint
    and lets callers parallelize over first. Returns (mstd, mdts, bal).
    """
    e = np.empty(k, np.int64)
    for i in range(k):
        e[i] = first + i
    if e[k - 1] >= order:
        return 0, 0, 0
    mstd = 0
    mdts = 0
    bal = 0
    while True:
        s = np.uint64(0)
        d = np.uint64(0)
        for i in range(k):
            ri = e[i] * order
            for j in range(k):
                s |= sumbit[ri + e[j]]
                d |= difbit[ri + e[j]]
        ps = _popcount64(s)
        pd = _popcount64(d)
        if ps > pd:
            mstd += 1
        elif ps < pd:
            mdts += 1
        else:
            bal += 1
        i = k - 1
        while i >= 1 and e[i] == order - k + i:
            i -= 1
        if i == 0:
            break
        e[i] += 1
        for j in range(i + 1, k):
            e[j] = e[j - 1] + 1
    return mstd, mdts, bal


@njit(cache=True)
def pair_sizes(sumbit, difbit, order, elems):
    """(|A+A|, |A-A|) per row of element indices in the (N, k) matrix."""
    n_rows, k = elems.shape
    out = np.empty((n_rows, 2), np.int64)
    for r in range(n_rows):
        s = np.uint64(0)
        d = np.uint64(0)
        for i in range(k):
            ri = elems[r, i] * order
            for j in range(k):
                s |= sumbit[ri + elems[r, j]]
                d |= difbit[ri + elems[r, j]]
        out[r, 0] = _popcount64(s)
        out[r, 1] = _popcount64(d)
    return out
