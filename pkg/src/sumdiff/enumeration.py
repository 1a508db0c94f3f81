"""Exhaustive classification counts over all k-subsets of a group.

Enumeration is stratified by the smallest element index: the stratum of
subsets with minimum s has C(order-1-s, k-1) members, the strata are
disjoint, and each is handled by one jitted kernel call. Parallel runs
hand whole strata to worker processes and add the integer triples back
together, so worker count cannot change the result.
"""

from __future__ import annotations

import atexit
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb

import numpy as np

from . import kernels
from .groups import GroupFamily, GroupTable, MAX_ENUM_ORDER

# Jobs smaller than this run inline regardless of the worker setting:
# forking costs more than the enumeration itself. Parallel and inline
# runs sum the same per-stratum integers, so results are unaffected.
INLINE_SUBSET_THRESHOLD = 50_000

_POOLS: dict[int, ProcessPoolExecutor] = {}


def shared_pool(workers: int) -> ProcessPoolExecutor:
    """Reusable fork-based process pool, one per worker count.

    Pool startup is expensive relative to small enumerations, so pools
    stay alive for the life of the process and are shut down at exit.
    """
    pool = _POOLS.get(workers)
    if pool is None:
        ctx = multiprocessing.get_context("fork")
        pool = ProcessPoolExecutor(max_workers=workers, mp_context=ctx)
        _POOLS[workers] = pool
    return pool


def _shutdown_pools() -> None:
    for pool in _POOLS.values():
        pool.shutdown(cancel_futures=True)
    _POOLS.clear()


atexit.register(_shutdown_pools)


@dataclass(frozen=True)
class CountTriple:
    """How many subsets of the batch were sum-dominant, difference-dominant, balanced."""

    mstd: int
    mdts: int
    balanced: int

    @property
    def total(self) -> int:
        return self.mstd + self.mdts + self.balanced

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.mstd, self.mdts, self.balanced)

    def __add__(self, other: "CountTriple") -> "CountTriple":
        return CountTriple(
            self.mstd + other.mstd,
            self.mdts + other.mdts,
            self.balanced + other.balanced,
        )


@dataclass(frozen=True)
class TypeDescriptor:
    """Subset signature: how many rotations and how many reflections."""

    rotations: int
    reflections: int

    def __post_init__(self):
        if self.rotations < 0 or self.reflections < 0:
            raise ValueError("type counts must be nonnegative")

    @property
    def size(self) -> int:
        return self.rotations + self.reflections


def _check_enumerable(g: GroupTable, k: int) -> None:
    if g.order > MAX_ENUM_ORDER:
        raise ValueError(
            f"order {g.order} exceeds the {MAX_ENUM_ORDER}-element enumeration cap"
        )
    if not (1 <= k <= g.order):
        raise ValueError(f"subset size {k} out of range for order {g.order}")


def _count_strata(args) -> tuple[int, int, int]:
    # module-level so it pickles for the process pool
    sumbit, difbit, order, k, firsts = args
    mstd = mdts = bal = 0
    for first in firsts:
        a, b, c = kernels.count_fixed_min(sumbit, difbit, order, k, first)
        mstd += a
        mdts += b
        bal += c
    return mstd, mdts, bal


def count_by_size(g: GroupTable, k: int, workers: int = 1) -> CountTriple:
    """Classify every k-subset of the group by brute force.

    Always enumerates, even for |A| > order/2 where every subset is
    balanced; that fact stays a tested invariant rather than a shortcut.
    """
    _check_enumerable(g, k)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    sumbit, difbit = kernels.bit_tables(g)
    firsts = list(range(g.order - k + 1))
    if (
        workers == 1
        or len(firsts) == 1
        or comb(g.order, k) < INLINE_SUBSET_THRESHOLD
    ):
        mstd, mdts, bal = _count_strata((sumbit, difbit, g.order, k, firsts))
        return CountTriple(mstd, mdts, bal)

    # Round-robin over strata: early strata are the big ones, so dealing
    # them out one at a time balances the buckets well enough.
    buckets = [firsts[i::workers] for i in range(workers)]
    buckets = [b for b in buckets if b]
    parts = list(
        shared_pool(workers).map(
            _count_strata,
            [(sumbit, difbit, g.order, k, b) for b in buckets],
        )
    )
    mstd = sum(p[0] for p in parts)
    mdts = sum(p[1] for p in parts)
    bal = sum(p[2] for p in parts)
    return CountTriple(mstd, mdts, bal)


def parallel_count(g: GroupTable, k: int, workers: int) -> CountTriple:
    """count_by_size with an explicit worker count; results are identical."""
    return count_by_size(g, k, workers=workers)


_SPLIT_FAMILIES = (GroupFamily.DIHEDRAL, GroupFamily.DICYCLIC)

_CHUNK_ROWS = 1 << 16


def count_by_type(g: GroupTable, k: int, t: TypeDescriptor) -> CountTriple:
    """Classify the k-subsets with a fixed rotation/reflection signature.

    Summing over all signatures with rotations + reflections = k gives
    count_by_size(g, k).
    """
    if g.spec.family not in _SPLIT_FAMILIES:
        raise ValueError(
            f"{g.spec.family.value} has no rotation/reflection split"
        )
    if t.size != k:
        raise ValueError(f"type {t} does not describe size-{k} subsets")
    _check_enumerable(g, k)
    half = g.spec.split
    if t.rotations > half or t.reflections > half:
        return CountTriple(0, 0, 0)

    sumbit, difbit = kernels.bit_tables(g)
    if t.reflections == 0:
        refl = np.empty((1, 0), dtype=np.int64)
    else:
        refl = np.fromiter(
            (i for c in combinations(range(half, g.order), t.reflections) for i in c),
            dtype=np.int64,
            count=comb(half, t.reflections) * t.reflections,
        ).reshape(-1, t.reflections)
    n_refl = refl.shape[0]

    mstd = mdts = bal = 0
    rot_iter = combinations(range(half), t.rotations)
    block = max(1, _CHUNK_ROWS // max(1, n_refl))
    while True:
        rots = list(islice(rot_iter, block))
        if not rots:
            break
        rot_arr = np.asarray(rots, dtype=np.int64).reshape(len(rots), t.rotations)
        elems = np.empty(
            (len(rots) * n_refl, k), dtype=np.int64
        )
        elems[:, : t.rotations] = np.repeat(rot_arr, n_refl, axis=0)
        elems[:, t.rotations :] = np.tile(refl, (len(rots), 1))
        sizes = kernels.pair_sizes(sumbit, difbit, g.order, elems)
        mstd += int((sizes[:, 0] > sizes[:, 1]).sum())
        mdts += int((sizes[:, 0] < sizes[:, 1]).sum())
        bal += int((sizes[:, 0] == sizes[:, 1]).sum())
    return CountTriple(mstd, mdts, bal)


def triple_congruence_count(n: int) -> int:
    """Count 3-subsets of Z/2nZ where some element is the average of the other two.

    Brute force over all C(2n, 3) subsets, checking the three congruences
    2a = b + c, 2b = a + c, 2c = a + b (mod 2n).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("defined for odd n >= 3")
    tn = 2 * n
    hits = 0
    for a, b, c in combinations(range(tn), 3):
        if (
            (2 * a - b - c) % tn == 0
            or (2 * b - a - c) % tn == 0
            or (2 * c - a - b) % tn == 0
        ):
            hits += 1
    return hits
