"""Iwahori-Hecke algebras of extended affine Weyl groups and nearby-cycle multiplicities.

Elements are passed as strings: either encodings such as ``"t[1,0,0]*w[s1]"``
or words in the simple affine reflections such as ``"s0.s1"`` (``"e"`` for the
identity). Coweights are comma-separated, e.g. ``"1,1,0,0"``. Laurent
polynomials come back as ``{v_exponent: coefficient}`` with ``v**2 == q``.
"""

from ._core import (
    Group,
    InvalidInput,
    InvariantViolation,
    MultiplicityTable,
    oracle_suite,
)

__all__ = [
    "Group",
    "InvalidInput",
    "InvariantViolation",
    "MultiplicityTable",
    "multiplicity_table",
    "oracle_suite",
]


def multiplicity_table(group: str, mu: str, jobs: int = 1) -> MultiplicityTable:
    """Multiplicity table for ``group`` and the dominant coweight ``mu``."""
    return Group(group).multiplicities(mu, jobs)
