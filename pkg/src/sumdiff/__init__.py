"""Enumeration and verification of sum-dominant subsets of small groups.

In a finite group written multiplicatively, A+A is {a1*a2} and A-A is
{a1*a2^-1}. A subset is sum-dominant (mstd) when |A+A| > |A-A|,
difference-dominant (mdts) when the inequality reverses, and balanced
otherwise. This package enumerates those classes exhaustively for small
dihedral, dicyclic, cyclic, and Z_n x Z_2 groups, checks the known
closed-form counts against brute force, and analyzes a structured family
at the boundary size |A| = order/2.
"""

from .enumeration import CountTriple, TypeDescriptor, count_by_size, count_by_type
from .groups import GroupFamily, GroupSpec, GroupTable, build_group
from .setops import Classification, classify, diffset, sumset

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CountTriple",
    "GroupFamily",
    "GroupSpec",
    "GroupTable",
    "TypeDescriptor",
    "build_group",
    "classify",
    "count_by_size",
    "count_by_type",
    "diffset",
    "sumset",
    "__version__",
]
