"""Half-cycle boundary constructions inside dicyclic groups.

A structured set of parameter n is A = R ∪ Sb in Dic_{4n}, where R is a
run of n consecutive rotations a^r, ..., a^(r+n-1) and S ⊆ Z/2nZ with
|S| = n picks the reflections a^s b. These have |A| = 2n, the boundary
size, and their classification is controlled by three conditions on
(r, S):

  has_diff_n     n ∈ S-S. The rotation half of A-A is R-R ∪ S-S and
                 R-R covers every residue except n, so this decides
                 whether |A-A| is 4n or 4n-1.
  has_diff_shift (2r+n-1 mod 2n) ∈ S-S. The rotation part of A+A is
                 R+R ∪ (S-S+n), and R+R misses exactly 2r-1 ≡ 2r+n-1 - n,
                 so this decides whether |A+A|'s rotation part fills.
  covers_all     {r+t+s : 0 ≤ t < n, s ∈ S} = Z/2nZ, which forces the
                 reflection part of A+A to be complete.

Sets S avoiding difference n are the pair transversals: one pick from
each opposite pair (i, i+n), 2^n in total.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from math import comb
from typing import Iterator

import numpy as np

from . import kernels
from .enumeration import CountTriple, INLINE_SUBSET_THRESHOLD, shared_pool
from .formulas import BoundaryBounds, FormulaKind, boundary_bounds
from .groups import GroupFamily, GroupSpec, GroupTable, build_group
from .setops import Classification, classify, mask_of

MIN_N = 6
MAX_N_CLASSIFY = 32
MAX_N_ENUMERATE = 10


@dataclass(frozen=True)
class StructuredSpec:
    """Parameters (n, r, S) of one half-cycle construction."""

    n: int
    r: int
    s_mask: int

    def __post_init__(self):
        if not (MIN_N <= self.n <= MAX_N_CLASSIFY):
            raise ValueError(f"n must be in [{MIN_N}, {MAX_N_CLASSIFY}], got {self.n}")
        if not (0 <= self.r <= self.n):
            raise ValueError(f"r must be in [0, {self.n}], got {self.r}")
        tn = 2 * self.n
        if self.s_mask < 0 or self.s_mask >> tn:
            raise ValueError("s_mask has bits outside Z/2nZ")
        if self.s_mask.bit_count() != self.n:
            raise ValueError(f"S must have exactly {self.n} residues")

    @classmethod
    def from_residues(cls, n: int, r: int, residues) -> "StructuredSpec":
        return cls(n=n, r=r, s_mask=mask_of(x % (2 * n) for x in residues))

    @property
    def residues(self) -> tuple[int, ...]:
        tn = 2 * self.n
        return tuple(i for i in range(tn) if (self.s_mask >> i) & 1)


@dataclass(frozen=True)
class ConditionReport:
    """The three classification-driving conditions of a structured spec."""

    has_diff_n: bool
    has_diff_shift: bool
    covers_all: bool


def _rotated(mask: int, shift: int, tn: int) -> int:
    """Cyclic left rotation of a 2n-bit mask (adds shift to every residue)."""
    shift %= tn
    full = (1 << tn) - 1
    return ((mask << shift) | (mask >> (tn - shift))) & full if shift else mask


def _diff_mask(s_mask: int, tn: int) -> int:
    """Bitmask of S-S in Z/2nZ."""
    out = 0
    for s in range(tn):
        if (s_mask >> s) & 1:
            out |= _rotated(s_mask, tn - s, tn)
    return out


def _cover_mask(s_mask: int, n: int, r: int) -> int:
    """Bitmask of {r + t + s} over 0 <= t < n, s in S."""
    tn = 2 * n
    out = 0
    for t in range(n):
        out |= _rotated(s_mask, r + t, tn)
    return out


def realize(spec: StructuredSpec) -> int:
    """Element mask of A = R ∪ Sb inside Dic_{4n}'s index convention."""
    tn = 2 * spec.n
    rot = 0
    for t in range(spec.n):
        rot |= 1 << ((spec.r + t) % tn)
    return rot | (spec.s_mask << tn)


def condition_report(spec: StructuredSpec) -> ConditionReport:
    """Evaluate the three conditions directly from (n, r, S)."""
    tn = 2 * spec.n
    diffs = _diff_mask(spec.s_mask, tn)
    shift = (2 * spec.r + spec.n - 1) % tn
    full = (1 << tn) - 1
    return ConditionReport(
        has_diff_n=bool((diffs >> spec.n) & 1),
        has_diff_shift=bool((diffs >> shift) & 1),
        covers_all=_cover_mask(spec.s_mask, spec.n, spec.r) == full,
    )


@lru_cache(maxsize=None)
def _dic_table(n: int) -> GroupTable:
    return build_group(GroupSpec(GroupFamily.DICYCLIC, n))


def classify_structured(spec: StructuredSpec) -> Classification:
    """Realize the set and classify it with the scalar set arithmetic."""
    return classify(_dic_table(spec.n), realize(spec))


def _check_enum_n(n: int) -> None:
    if not (MIN_N <= n <= MAX_N_ENUMERATE):
        raise ValueError(f"n must be in [{MIN_N}, {MAX_N_ENUMERATE}], got {n}")


_CHUNK_ROWS = 1 << 15


def _classify_r_stratum(args) -> tuple[int, int, int]:
    """Counts over all C(2n, n) reflection choices for one rotation start r."""
    n, r = args
    g = _dic_table(n)
    sumbit, difbit = kernels.bit_tables(g)
    tn = 2 * n
    rot_row = [(r + t) % tn for t in range(n)]
    combo_iter = combinations(range(tn), n)
    mstd = mdts = bal = 0
    while True:
        chunk = list(islice(combo_iter, _CHUNK_ROWS))
        if not chunk:
            break
        elems = np.empty((len(chunk), tn), dtype=np.int64)
        elems[:, :n] = rot_row
        elems[:, n:] = np.asarray(chunk, dtype=np.int64) + tn
        sizes = kernels.pair_sizes(sumbit, difbit, g.order, elems)
        mstd += int((sizes[:, 0] > sizes[:, 1]).sum())
        mdts += int((sizes[:, 0] < sizes[:, 1]).sum())
        bal += int((sizes[:, 0] == sizes[:, 1]).sum())
    return mstd, mdts, bal


def enumerate_structured(n: int, workers: int = 1) -> CountTriple:
    """Classify every structured spec: (n+1) rotation starts x C(2n, n) sets."""
    _check_enum_n(n)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    tasks = [(n, r) for r in range(n + 1)]
    total = (n + 1) * comb(2 * n, n)
    if workers == 1 or total < INLINE_SUBSET_THRESHOLD:
        parts = [_classify_r_stratum(t) for t in tasks]
    else:
        parts = list(shared_pool(workers).map(_classify_r_stratum, tasks))
    return CountTriple(
        sum(p[0] for p in parts),
        sum(p[1] for p in parts),
        sum(p[2] for p in parts),
    )


def survey(n: int) -> Iterator[tuple[StructuredSpec, ConditionReport, Classification]]:
    """Yield every spec with its condition report and classification.

    Python-level generator, meant for the consistency checks at small n;
    use enumerate_structured for plain counting.
    """
    _check_enum_n(n)
    g = _dic_table(n)
    sumbit, difbit = kernels.bit_tables(g)
    tn = 2 * n
    for r in range(n + 1):
        rot_row = [(r + t) % tn for t in range(n)]
        combo_iter = combinations(range(tn), n)
        while True:
            chunk = list(islice(combo_iter, _CHUNK_ROWS))
            if not chunk:
                break
            elems = np.empty((len(chunk), tn), dtype=np.int64)
            elems[:, :n] = rot_row
            elems[:, n:] = np.asarray(chunk, dtype=np.int64) + tn
            sizes = kernels.pair_sizes(sumbit, difbit, g.order, elems)
            for row, (ps, pd) in zip(chunk, sizes.tolist()):
                spec = StructuredSpec(n=n, r=r, s_mask=mask_of(row))
                if ps > pd:
                    cls = Classification.MSTD
                elif ps < pd:
                    cls = Classification.MDTS
                else:
                    cls = Classification.BALANCED
                yield spec, condition_report(spec), cls


@dataclass(frozen=True)
class BoundCheck:
    """One component of the boundary bound report."""

    component: str
    count: int
    bound: int
    exact: bool
    ok: bool


def check_structured_bounds(n: int, counts: CountTriple) -> list[BoundCheck]:
    """Compare enumerated structured counts against the closed-form bounds."""
    bounds: BoundaryBounds = boundary_bounds(n)
    out = []
    for component, count, res in (
        ("mstd", counts.mstd, bounds.mstd),
        ("mdts", counts.mdts, bounds.mdts),
        ("balanced", counts.balanced, bounds.balanced),
    ):
        exact = res.kind is FormulaKind.EXACT
        ok = count == res.value if exact else count >= res.value
        out.append(
            BoundCheck(component=component, count=count, bound=res.value, exact=exact, ok=ok)
        )
    return out


def iter_transversals(n: int) -> Iterator[int]:
    """All 2^n masks choosing one residue from each opposite pair (i, i+n)."""
    for bits in range(1 << n):
        mask = 0
        for i in range(n):
            mask |= 1 << (i + n if (bits >> i) & 1 else i)
        yield mask


def _shift_targets(n: int) -> list[int]:
    tn = 2 * n
    return [(2 * r + n - 1) % tn for r in range(n + 1)]


def verify_transversal_shifts(n: int) -> bool:
    """Even n: every transversal S has (2r+n-1 mod 2n) ∈ S-S for every r.

    Exhaustive over all (n+1) * 2^n cases.
    """
    if n < MIN_N or n % 2:
        raise ValueError(f"defined for even n >= {MIN_N}, got {n}")
    tn = 2 * n
    targets = _shift_targets(n)
    for s_mask in iter_transversals(n):
        diffs = _diff_mask(s_mask, tn)
        if any(not (diffs >> t) & 1 for t in targets):
            return False
    return True


def _random_size_n_masks(n: int, count: int, seed: int) -> Iterator[int]:
    rng = random.Random(seed)
    tn = 2 * n
    for _ in range(count):
        yield mask_of(rng.sample(range(tn), n))


def verify_size_n_shifts(n: int, sample: int | None = None, seed: int = 0) -> bool:
    """Odd n: every size-n subset S of Z/2nZ has every shift in S-S.

    Exhaustive over C(2n, n) subsets when sample is None, otherwise over
    that many pseudo-random subsets.
    """
    if n < MIN_N or n % 2 == 0:
        raise ValueError(f"defined for odd n >= {MIN_N}, got {n}")
    tn = 2 * n
    targets = _shift_targets(n)
    if sample is None:
        masks = (mask_of(c) for c in combinations(range(tn), n))
    else:
        masks = _random_size_n_masks(n, sample, seed)
    for s_mask in masks:
        diffs = _diff_mask(s_mask, tn)
        if any(not (diffs >> t) & 1 for t in targets):
            return False
    return True


def verify_diff_n_covers(n: int, sample: int | None = None, seed: int = 0) -> bool:
    """n ∈ S-S implies covers_all, for every size-n S tested.

    The cover translates with r ({r+t+s} is {t+s} shifted by r), so
    fullness is checked once at r = 0 and holds for every r iff it holds
    there.
    """
    if n < MIN_N:
        raise ValueError(f"defined for n >= {MIN_N}, got {n}")
    tn = 2 * n
    full = (1 << tn) - 1
    if sample is None:
        masks = (mask_of(c) for c in combinations(range(tn), n))
    else:
        masks = _random_size_n_masks(n, sample, seed)
    for s_mask in masks:
        if (_diff_mask(s_mask, tn) >> n) & 1:
            if _cover_mask(s_mask, n, 0) != full:
                return False
    return True


def count_covering_transversals(n: int, r: int) -> int:
    """Number of pair transversals whose cover at rotation start r is full."""
    if n < MIN_N:
        raise ValueError(f"defined for n >= {MIN_N}, got {n}")
    if not (0 <= r <= n):
        raise ValueError(f"r must be in [0, {n}], got {r}")
    tn = 2 * n
    full = (1 << tn) - 1
    return sum(
        1 for s_mask in iter_transversals(n) if _cover_mask(s_mask, n, r) == full
    )
