"""Pronoun lexicons: built-in English/Japanese lists plus TSV load/save.

Surfaces are NFC-normalized.  A surface may belong to exactly one category;
conflicting files are rejected.  The built-in lists deduplicate repeated
entries but otherwise keep every listed item, including the "maybe pronoun"
words (何, "one", "self") that live in the ambiguous category on purpose.
"""

from __future__ import annotations

import hashlib
import io
import unicodedata
from dataclasses import dataclass, field

from .categories import GenderCategory

BUILTIN_VERSION = "builtin-1"

_JA_MASCULINE = [
    "きみ", "君", "お前", "俺", "彼", "彼ら", "僕", "君たち", "オレ",
    "おまえ", "ぼく", "ボク", "僕ら", "僕達", "おれ", "吾輩", "キミ",
    "てめえ", "小生", "てめえ", "僕たち",
]

_JA_FEMININE = ["彼女", "あたし", "彼女ら"]

_JA_AMBIGUOUS = [
    "何", "私", "それ", "あなた", "みんな", "あいつ", "誰", "わたし",
    "貴方", "どなた", "我々", "あんた", "そつ", "やつ", "みな", "奴",
    "あれ", "なに", "皆", "みなさん", "みなさま", "我ら", "余", "彼等",
    "だれ", "奴ら", "ウチ", "わたくし", "われわれ", "よそ", "われ",
    "奴等", "己", "おのれ", "何れ", "わし", "彼奴",
]

_EN_MASCULINE = ["he", "him", "his", "himself"]

_EN_FEMININE = ["her", "she", "herself"]

_EN_AMBIGUOUS = [
    "I", "you", "it", "me", "my", "your", "them", "their", "myself",
    "they", "themselves", "we", "us", "oneself", "our", "yourself",
    "its", "itself", "self", "ourselves", "'em", "theirs", "thyself",
    "one", "ours", "themself", "theirself", "theirselves", "theirselves",
    "xe", "xem", "xim", "hir", "xemself", "xemself", "hirsself",
    "hirselves", "ze", "zeself", "zeselves",
]


class LexiconError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LexiconEntry:
    surface: str
    category: GenderCategory = field(compare=False)

    def __post_init__(self):
        if not self.surface:
            raise LexiconError("empty lexicon surface")
        if any(c in self.surface for c in "\t\n\r"):
            raise LexiconError(f"surface contains tab/newline: {self.surface!r}")


class Lexicon:
    """Immutable surface -> category mapping for one language."""

    def __init__(self, language: str, entries, source: str = "custom"):
        self.language = language
        self.source = source
        mapping: dict[str, GenderCategory] = {}
        for e in entries:
            surface = unicodedata.normalize("NFC", e.surface)
            prev = mapping.get(surface)
            if prev is not None and prev is not e.category:
                raise LexiconError(
                    f"conflicting categories for surface {surface!r}: "
                    f"{prev.value} vs {e.category.value}"
                )
            mapping[surface] = e.category
        self._mapping = mapping
        self.max_surface_length = max((len(s) for s in mapping), default=0)

    @property
    def entries(self) -> frozenset[LexiconEntry]:
        return frozenset(LexiconEntry(s, c) for s, c in self._mapping.items())

    def category_of(self, surface: str) -> GenderCategory | None:
        return self._mapping.get(surface)

    def surfaces(self, category: GenderCategory | None = None) -> set[str]:
        if category is None:
            return set(self._mapping)
        return {s for s, c in self._mapping.items() if c is category}

    def __len__(self) -> int:
        return len(self._mapping)

    def __contains__(self, surface: str) -> bool:
        return surface in self._mapping

    def items(self):
        return self._mapping.items()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lexicon)
                and self.language == other.language
                and self._mapping == other._mapping)

    def __hash__(self):
        # lexicons are immutable; cache, they get used as cache keys
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash((self.language, frozenset(self._mapping.items())))
            self._hash = h
        return h

    def digest(self) -> str:
        """SHA-256 over the canonical serialization; provenance for reports."""
        return hashlib.sha256(serialize_lexicon(self)).hexdigest()


def builtin_lexicon(language: str) -> Lexicon:
    """Built-in pronoun lexicon for "eng" or "jpn"."""
    if language == "eng":
        lists = [
            (_EN_MASCULINE, GenderCategory.MASCULINE),
            (_EN_FEMININE, GenderCategory.FEMININE),
            (_EN_AMBIGUOUS, GenderCategory.AMBIGUOUS),
        ]
    elif language == "jpn":
        lists = [
            (_JA_MASCULINE, GenderCategory.MASCULINE),
            (_JA_FEMININE, GenderCategory.FEMININE),
            (_JA_AMBIGUOUS, GenderCategory.AMBIGUOUS),
        ]
    else:
        raise LexiconError(f"no builtin lexicon for language {language!r}")
    entries = [LexiconEntry(s, c) for surfaces, c in lists for s in surfaces]
    return Lexicon(language, entries, source=BUILTIN_VERSION)


def load_lexicon(stream, language: str = "und") -> Lexicon:
    """Load a lexicon from `surface<TAB>category` TSV bytes or text.

    Category letters are M/F/A; `#` introduces a comment line.
    """
    if isinstance(stream, bytes):
        text = stream.decode("utf-8")
    elif isinstance(stream, str):
        text = stream
    else:
        raw = stream.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"line {lineno}: expected `surface<TAB>category`")
        surface, letter = parts
        if not surface:
            raise LexiconError(f"line {lineno}: empty surface")
        if letter not in ("M", "F", "A"):
            raise LexiconError(f"line {lineno}: unknown category letter {letter!r}")
        entries.append(LexiconEntry(surface, GenderCategory.from_letter(letter)))
    return Lexicon(language, entries)


def serialize_lexicon(lexicon: Lexicon) -> bytes:
    """Deterministic TSV dump; inverse of load_lexicon."""
    out = io.StringIO()
    out.write(f"# pronoun lexicon ({lexicon.language}); surface<TAB>M|F|A\n")
    for surface, cat in sorted(
        lexicon.items(), key=lambda kv: (kv[1].order, kv[0])
    ):
        out.write(f"{surface}\t{cat.value}\n")
    return out.getvalue().encode("utf-8")
