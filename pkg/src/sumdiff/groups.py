"""Dense multiplication tables for small finite groups.

Every group here has a closed-form product on canonical element indices,
so tables are built directly rather than through a presentation solver.
Indexing convention (fixed, relied on by the rest of the package):

    cyclic     k         <-> g^k                      order n
    cyclicxz2  i + n*j   <-> (g^i, h^j), j in {0,1}   order 2n
    dihedral   k         <-> r^k          (k < n)     order 2n
               n + k     <-> r^k * f
    dic        k         <-> a^k          (k < 2n)    order 4n
               2n + k    <-> a^k * b

For dihedral groups f is any fixed reflection (f^2 = 1, f r f = r^-1).
For dic, b satisfies b^2 = a^n and b a^k = a^-k b, so the "reflections"
a^k b all square to the central element a^n instead of the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

MAX_TABLE_ORDER = 128
MAX_ENUM_ORDER = 64


class GroupFamily(Enum):
    CYCLIC = "cyclic"
    CYCLIC_X_Z2 = "cyclicxz2"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dic"


_ORDER_FACTOR = {
    GroupFamily.CYCLIC: 1,
    GroupFamily.CYCLIC_X_Z2: 2,
    GroupFamily.DIHEDRAL: 2,
    GroupFamily.DICYCLIC: 4,
}


@dataclass(frozen=True)
class GroupSpec:
    """Family plus size parameter; the pair determines the group."""

    family: GroupFamily
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"{self.family.value} parameter must be >= 1, got {self.n}")
        if self.order > MAX_TABLE_ORDER:
            raise ValueError(
                f"{self.family.value} n={self.n} has order {self.order}, "
                f"above the table cap {MAX_TABLE_ORDER}"
            )

    @property
    def order(self) -> int:
        return _ORDER_FACTOR[self.family] * self.n

    @property
    def name(self) -> str:
        if self.family is GroupFamily.CYCLIC:
            return f"Z_{self.n}"
        if self.family is GroupFamily.CYCLIC_X_Z2:
            return f"Z_{self.n}xZ_2"
        if self.family is GroupFamily.DIHEDRAL:
            return f"D_{self.order}"
        return f"Dic_{self.order}"

    @property
    def split(self) -> int:
        """Index where the second coset (f-labeled elements) starts.

        Equal to the order for cyclic groups, which have no second coset.
        """
        if self.family is GroupFamily.CYCLIC:
            return self.n
        return self.order // 2


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Multiplication table, inverse table, and element labels."""

    spec: GroupSpec
    mul: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...]
    identity: int = 0

    @property
    def order(self) -> int:
        return self.spec.order

    # Plain nested lists are noticeably faster than numpy scalar indexing
    # for the element-at-a-time set arithmetic in setops.
    @cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def inv_list(self) -> list[int]:
        return self.inv.tolist()


def _cyclic_product(n: int, x: int, y: int) -> int:
    return (x + y) % n


def _cyclic_x_z2_product(n: int, x: int, y: int) -> int:
    i = (x % n + y % n) % n
    j = (x // n + y // n) % 2
    return i + n * j


def _reflection_product(half: int, twist: int, x: int, y: int) -> int:
    """Product in a group generated by rotations a^k and one extra element.

    half is the rotation count; twist is the rotation picked up when two
    f-elements multiply (0 for dihedral where f^2 = 1, half/2 for dic
    where b^2 = a^n). Uses f a^k = a^-k f.
    """
    xi, xf = x % half, x >= half
    yi, yf = y % half, y >= half
    if not xf and not yf:
        return (xi + yi) % half
    if not xf and yf:
        return half + (xi + yi) % half
    if xf and not yf:
        return half + (xi - yi) % half
    return (xi - yi + twist) % half


def build_group(spec: GroupSpec) -> GroupTable:
    """Construct the full multiplication table for the given spec."""
    m = spec.order
    fam = spec.family
    if fam is GroupFamily.CYCLIC:
        prod = lambda x, y: _cyclic_product(spec.n, x, y)
    elif fam is GroupFamily.CYCLIC_X_Z2:
        prod = lambda x, y: _cyclic_x_z2_product(spec.n, x, y)
    elif fam is GroupFamily.DIHEDRAL:
        prod = lambda x, y: _reflection_product(spec.n, 0, x, y)
    else:
        prod = lambda x, y: _reflection_product(2 * spec.n, spec.n, x, y)

    mul = np.empty((m, m), dtype=np.int64)
    for x in range(m):
        for y in range(m):
            mul[x, y] = prod(x, y)
    inv = (mul == 0).argmax(axis=1).astype(np.int64)

    half = spec.split
    labels = tuple(
        f"r{k}" if k < half else f"f{k - half}" for k in range(m)
    )
    return GroupTable(spec=spec, mul=mul, inv=inv, labels=labels)


def cyclic(n: int) -> GroupTable:
    return build_group(GroupSpec(GroupFamily.CYCLIC, n))


def cyclic_x_z2(n: int) -> GroupTable:
    return build_group(GroupSpec(GroupFamily.CYCLIC_X_Z2, n))


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n."""
    return build_group(GroupSpec(GroupFamily.DIHEDRAL, n))


def dicyclic(n: int) -> GroupTable:
    """Dicyclic group of order 4n."""
    return build_group(GroupSpec(GroupFamily.DICYCLIC, n))


def multiply(g: GroupTable, x: int, y: int) -> int:
    """Table lookup for the product x*y, with bounds checking."""
    m = g.order
    if not (0 <= x < m and 0 <= y < m):
        raise ValueError(f"element index out of range for order {m}")
    return g.mul_rows[x][y]


def invert(g: GroupTable, x: int) -> int:
    """Table lookup for x^-1, with bounds checking."""
    if not (0 <= x < g.order):
        raise ValueError(f"element index out of range for order {g.order}")
    return g.inv_list[x]


def verify_axioms(g: GroupTable) -> None:
    """Raise ValueError unless the table is a genuine group table.

    Checks the Latin square property, two-sided identity at index 0,
    two-sided inverses, and full associativity (vectorized, O(m^3) memory
    in int64 which is fine up to the 128 cap).
    """
    m = g.order
    mul = g.mul
    rng = np.arange(m)
    if mul.shape != (m, m):
        raise ValueError("multiplication table has the wrong shape")
    if not (np.sort(mul, axis=1) == rng).all():
        raise ValueError("a row is not a permutation (Latin square fails)")
    if not (np.sort(mul, axis=0) == rng[:, None]).all():
        raise ValueError("a column is not a permutation (Latin square fails)")
    if not (mul[g.identity] == rng).all() or not (mul[:, g.identity] == rng).all():
        raise ValueError("index 0 is not a two-sided identity")
    if not (mul[rng, g.inv] == g.identity).all() or not (mul[g.inv, rng] == g.identity).all():
        raise ValueError("inverse table is wrong")
    if not np.array_equal(mul[mul], mul[:, mul]):
        raise ValueError("associativity fails")
