"""Enumeration of the minimal entanglement generating set for m parties.

For ``m`` subsystems the set contains one EPR label per 2-subset and one
GHZ^k label per k-subset for ``3 <= k <= m``, so ``2^m - m - 1`` labels in
total.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .exceptions import CapacityError
from .operators import ClassKind, ClassLabel

#: Largest m the catalog will enumerate by default (2^20 labels are cheap;
#: anything bigger is almost certainly a mistake).
DEFAULT_CATALOG_CAP = 20


@dataclass(frozen=True)
class MegsCatalog:
    """Ordered labels of the generating set for ``m`` subsystems."""

    m: int
    labels: tuple[ClassLabel, ...]
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return len(self.labels)

    def epr_labels(self) -> tuple[ClassLabel, ...]:
        return tuple(lb for lb in self.labels if lb.kind is ClassKind.EPR)


def _check_m(m: int, m_cap: int) -> int:
    m = int(m)
    if m < 2:
        raise ValueError(f"the generating set needs at least 2 subsystems, got m={m}")
    if m > m_cap:
        raise CapacityError(f"catalog for m={m} exceeds the configured cap {m_cap}")
    return m


def megs_counts(m: int, m_cap: int = DEFAULT_CATALOG_CAP) -> dict[int, int]:
    """Label counts by subset size: ``{k: C(m, k)}`` for ``2 <= k <= m``."""
    m = _check_m(m, m_cap)
    return {k: comb(m, k) for k in range(2, m + 1)}


def enumerate_megs(m: int, m_cap: int = DEFAULT_CATALOG_CAP) -> MegsCatalog:
    """The full catalog: EPR pairs first (lexicographic), then GHZ subsets
    ordered by size and lexicographically within each size."""
    m = _check_m(m, m_cap)
    labels = [ClassLabel(ClassKind.EPR, pair) for pair in itertools.combinations(range(m), 2)]
    for k in range(3, m + 1):
        labels.extend(ClassLabel(ClassKind.GHZ, s) for s in itertools.combinations(range(m), k))
    return MegsCatalog(m=m, labels=tuple(labels), counts=megs_counts(m, m_cap))
