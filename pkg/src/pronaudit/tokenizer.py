"""Pronoun occurrence extraction.

English: rule-based word tokenization (letter runs with embedded
apostrophes), case-insensitive lexicon lookup, with apostrophe-clitic
splitting so "he's" / "he'd" still yield the pronoun "he".

Japanese: the text is segmented at punctuation/whitespace boundaries and
each segment is scanned leftmost-longest against the lexicon surfaces.
No morphological analysis is involved; results are a pure function of
(text, lexicon).

All spans are (start, end) character offsets into the original sentence
text, end exclusive, and never overlap.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from ._kernel import find_token_runs, scan_longest
from .categories import GenderCategory
from .lexicon import Lexicon

_APOSTROPHES = ("'", "’")


@dataclass(frozen=True)
class PronounOccurrence:
    surface: str          # as found in the text
    lexicon_surface: str  # canonical lexicon entry matched
    category: GenderCategory
    span: tuple[int, int]


@dataclass(frozen=True)
class FilteredText:
    """Japanese text split into punctuation-bounded segments.

    Segments are (start, end) offsets into the original text, so any span
    inside a segment is already a valid span of the original.
    """

    text: str
    segments: tuple[tuple[int, int], ...]

    def segment_strings(self) -> list[str]:
        return [self.text[s:e] for s, e in self.segments]


def _is_ja_boundary(ch: str) -> bool:
    if ch.isspace():  # includes U+3000 ideographic space
        return True
    o = ord(ch)
    if o < 0x80:
        return not ch.isalnum()
    # full-width ASCII punctuation and half-width CJK punctuation
    if 0xFF01 <= o <= 0xFF0F or 0xFF1A <= o <= 0xFF20 \
            or 0xFF3B <= o <= 0xFF40 or 0xFF5B <= o <= 0xFF65:
        return True
    return ch in "、。・「」『』（）【】〈〉《》〔〕！？〜…‥―“”‘’"


def preprocess_ja(text: str) -> FilteredText:
    """Mark punctuation boundaries; return the segment view of the text."""
    segments = []
    start = None
    for i, ch in enumerate(text):
        if _is_ja_boundary(ch):
            if start is not None:
                segments.append((start, i))
                start = None
        elif start is None:
            start = i
    if start is not None:
        segments.append((start, len(text)))
    return FilteredText(text, tuple(segments))


@functools.lru_cache(maxsize=16)
def _en_index(lexicon: Lexicon):
    folded = {}
    for surface in lexicon.surfaces():
        folded[surface.casefold()] = surface
    return folded


@functools.lru_cache(maxsize=16)
def _ja_index(lexicon: Lexicon):
    by_first: dict[str, list[str]] = {}
    for surface in lexicon.surfaces():
        by_first.setdefault(surface[0], []).append(surface)
    for candidates in by_first.values():
        candidates.sort(key=lambda s: (-len(s), s))
    return by_first


def _fold(token: str) -> str:
    # normalize curly apostrophes so "he’s" behaves like "he's"
    return token.replace("’", "'").casefold()


def extract_pronouns_en(text: str, lexicon: Lexicon) -> list[PronounOccurrence]:
    """All English pronoun occurrences, sorted by span."""
    if lexicon.language != "eng":
        raise ValueError(f"expected an eng lexicon, got {lexicon.language!r}")
    index = _en_index(lexicon)
    occurrences = []
    for start, end, leading in find_token_runs(text):
        token = text[start:end]
        if leading:
            # e.g. 'em: keep the apostrophe when the lexicon knows the form
            hit = index.get("'" + _fold(token))
            if hit is not None:
                occurrences.append(PronounOccurrence(
                    text[start - 1:end], hit, lexicon.category_of(hit),
                    (start - 1, end)))
                continue
        hit = index.get(_fold(token))
        if hit is not None:
            occurrences.append(PronounOccurrence(
                token, hit, lexicon.category_of(hit), (start, end)))
            continue
        # clitic split: he's / he'd / she'll -> pronoun before the apostrophe
        for apo in _APOSTROPHES:
            cut = token.find(apo)
            if cut > 0:
                hit = index.get(_fold(token[:cut]))
                if hit is not None:
                    occurrences.append(PronounOccurrence(
                        token[:cut], hit, lexicon.category_of(hit),
                        (start, start + cut)))
                break
    return occurrences


def extract_pronouns_ja(text: str, lexicon: Lexicon) -> list[PronounOccurrence]:
    """All Japanese pronoun occurrences, leftmost-longest, sorted by span."""
    if lexicon.language != "jpn":
        raise ValueError(f"expected a jpn lexicon, got {lexicon.language!r}")
    index = _ja_index(lexicon)
    occurrences = []
    for seg_start, seg_end in preprocess_ja(text).segments:
        for start, end in scan_longest(text, seg_start, seg_end, index):
            surface = text[start:end]
            occurrences.append(PronounOccurrence(
                surface, surface, lexicon.category_of(surface), (start, end)))
    return occurrences


def extract_pronouns(text: str, lexicon: Lexicon) -> list[PronounOccurrence]:
    """Dispatch on the lexicon's language."""
    if lexicon.language == "eng":
        return extract_pronouns_en(text, lexicon)
    if lexicon.language == "jpn":
        return extract_pronouns_ja(text, lexicon)
    raise ValueError(f"no tokenizer for language {lexicon.language!r}")
