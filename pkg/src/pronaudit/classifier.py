"""Per-sentence category sets and aligned-pair classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .categories import CategorySet
from .corpus import SentencePair
from .lexicon import Lexicon
from .tokenizer import PronounOccurrence, extract_pronouns


@dataclass(frozen=True)
class PairClassification:
    pair_id: str
    en_set: CategorySet
    ja_set: CategorySet
    en_occurrences: tuple[PronounOccurrence, ...]
    ja_occurrences: tuple[PronounOccurrence, ...]


def category_set(occurrences: Iterable[PronounOccurrence]) -> CategorySet:
    """Union of occurrence categories; presence semantics, duplicates collapse."""
    return CategorySet(o.category for o in occurrences)


def classify_pair(
    pair: SentencePair, en_lexicon: Lexicon, ja_lexicon: Lexicon
) -> PairClassification:
    en_occ = tuple(extract_pronouns(pair.source.text, en_lexicon))
    ja_occ = tuple(extract_pronouns(pair.target.text, ja_lexicon))
    return PairClassification(
        pair.pair_id, category_set(en_occ), category_set(ja_occ), en_occ, ja_occ
    )
