"""Gender categories and category sets.

A sentence is summarized by the subset of {Masculine, Feminine, Ambiguous}
pronoun categories it contains.  The eight possible subsets have a fixed
canonical order used everywhere counts are serialized:

    None, A, F, FA, M, MA, FM, FMA

which is exactly index = 4*has_M + 2*has_F + 1*has_A.
"""

from __future__ import annotations

import enum
from typing import Iterable


class GenderCategory(enum.Enum):
    MASCULINE = "M"
    FEMININE = "F"
    AMBIGUOUS = "A"

    @property
    def order(self) -> int:
        # serialization order: M < F < A
        return _CATEGORY_ORDER[self]

    @classmethod
    def from_letter(cls, letter: str) -> "GenderCategory":
        try:
            return cls(letter)
        except ValueError:
            raise ValueError(f"unknown category letter: {letter!r}") from None


_CATEGORY_ORDER = {
    GenderCategory.MASCULINE: 0,
    GenderCategory.FEMININE: 1,
    GenderCategory.AMBIGUOUS: 2,
}

_BITS = {
    GenderCategory.MASCULINE: 4,
    GenderCategory.FEMININE: 2,
    GenderCategory.AMBIGUOUS: 1,
}

# canonical labels for the 8 subsets, in canonical index order
SET_LABELS = ("None", "A", "F", "FA", "M", "MA", "FM", "FMA")


class CategorySet:
    """Immutable subset of the three categories; the empty set is "None"."""

    __slots__ = ("_bits",)

    def __init__(self, categories: Iterable[GenderCategory] = ()):
        bits = 0
        for c in categories:
            bits |= _BITS[c]
        self._bits = bits

    @classmethod
    def from_index(cls, index: int) -> "CategorySet":
        if not 0 <= index <= 7:
            raise ValueError(f"category set index out of range: {index}")
        s = cls.__new__(cls)
        s._bits = index
        return s

    @classmethod
    def from_label(cls, label: str) -> "CategorySet":
        try:
            return cls.from_index(SET_LABELS.index(label))
        except ValueError:
            raise ValueError(f"unknown category set label: {label!r}") from None

    @property
    def index(self) -> int:
        return self._bits

    @property
    def label(self) -> str:
        return SET_LABELS[self._bits]

    def __contains__(self, category: GenderCategory) -> bool:
        return bool(self._bits & _BITS[category])

    def __iter__(self):
        for c in (GenderCategory.MASCULINE, GenderCategory.FEMININE,
                  GenderCategory.AMBIGUOUS):
            if c in self:
                yield c

    def __len__(self) -> int:
        return bin(self._bits).count("1")

    def __eq__(self, other) -> bool:
        return isinstance(other, CategorySet) and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(("CategorySet", self._bits))

    def __repr__(self) -> str:
        return f"CategorySet<{self.label}>"


def set_contains(index: int, category: GenderCategory) -> bool:
    """Membership test on a canonical set index without building objects."""
    return bool(index & _BITS[category])
