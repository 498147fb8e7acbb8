"""Aligned bilingual corpus ingestion.

Supports the Tatoeba export pair (sentences.csv + links.csv, both TSV)
and a two-column parallel TSV convenience format.  Parsing is tolerant:
malformed records are skipped and counted, never fatal.  Results are
deterministic functions of the input bytes.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Optional


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Sentence:
    id: int
    language: str
    text: str


@dataclass(frozen=True)
class SentencePair:
    pair_id: str
    source: Sentence  # English side
    target: Sentence  # Japanese side


def make_pair_id(id_a: int, id_b: int) -> str:
    # orientation-independent and stable
    return f"{min(id_a, id_b)}-{max(id_a, id_b)}"


@dataclass(frozen=True)
class Corpus:
    pairs: tuple[SentencePair, ...]
    source_language: str
    target_language: str

    def __len__(self) -> int:
        return len(self.pairs)

    def digest(self) -> str:
        h = hashlib.sha256()
        for p in self.pairs:
            h.update(
                f"{p.pair_id}\x1f{p.source.id}\x1f{p.source.text}"
                f"\x1f{p.target.id}\x1f{p.target.text}\x1e".encode("utf-8")
            )
        return h.hexdigest()


def _decode(data) -> str:
    if isinstance(data, str):
        return data
    if not isinstance(data, (bytes, bytearray)):
        data = data.read()
        if isinstance(data, str):
            return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusError(f"input is not UTF-8 at byte offset {e.start}") from e


def _lines(text: str) -> Iterable[str]:
    # LF and CRLF only; splitlines() would also split on U+2028 etc.
    for line in text.split("\n"):
        yield line.rstrip("\r")


def parse_sentences(stream, language: Optional[str] = None):
    """Parse `id<TAB>lang<TAB>text` records.

    Returns (sentences, skipped_count).  Records with a bad shape, a
    non-integer id, or empty text are skipped; a language filter drops
    non-matching records without counting them as skipped.
    """
    text = _decode(stream)
    sentences: list[Sentence] = []
    seen_ids: dict[tuple[str, int], str] = {}
    skipped = 0
    for line in _lines(text):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            skipped += 1
            continue
        raw_id, lang, body = parts
        if not raw_id.isdigit() or not (2 <= len(lang) <= 3) or not body.strip():
            skipped += 1
            continue
        if language is not None and lang != language:
            continue
        sid = int(raw_id)
        if (lang, sid) in seen_ids:
            skipped += 1
            continue
        seen_ids[(lang, sid)] = body
        sentences.append(Sentence(sid, lang, body))
    return sentences, skipped


def parse_links(stream):
    """Parse `id<TAB>translation_id` link records; returns (links, skipped)."""
    text = _decode(stream)
    links: list[tuple[int, int]] = []
    skipped = 0
    for line in _lines(text):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].isdigit() or not parts[1].isdigit():
            skipped += 1
            continue
        links.append((int(parts[0]), int(parts[1])))
    return links, skipped


def build_pairs(
    sentences_a: Iterable[Sentence],
    sentences_b: Iterable[Sentence],
    links: Iterable[tuple[int, int]],
    source_language: str = "eng",
    target_language: str = "jpn",
):
    """Join two sentence sets through id links into a Corpus.

    Orientation is normalized so `source` always carries source_language.
    Duplicate links (either order) collapse; links with a missing endpoint
    are dropped and counted.  Returns (corpus, dropped_count).
    """
    by_id = {}
    for s in sentences_a:
        by_id[(s.language, s.id)] = s
    for s in sentences_b:
        by_id[(s.language, s.id)] = s

    pairs: list[SentencePair] = []
    seen: set[str] = set()
    dropped = 0
    for id_a, id_b in links:
        src = by_id.get((source_language, id_a))
        tgt = by_id.get((target_language, id_b))
        if src is None or tgt is None:
            # try the opposite orientation before giving up
            src = by_id.get((source_language, id_b))
            tgt = by_id.get((target_language, id_a))
        if src is None or tgt is None:
            dropped += 1
            continue
        pid = make_pair_id(src.id, tgt.id)
        if pid in seen:
            continue
        seen.add(pid)
        pairs.append(SentencePair(pid, src, tgt))
    corpus = Corpus(tuple(pairs), source_language, target_language)
    return corpus, dropped


def parse_parallel_tsv(
    stream, source_language: str = "eng", target_language: str = "jpn"
):
    """Parse `english<TAB>japanese` lines into a Corpus; ids are line numbers.

    Returns (corpus, skipped_count).
    """
    text = _decode(stream)
    pairs: list[SentencePair] = []
    skipped = 0
    lineno = 0
    for line in _lines(text):
        if not line:
            continue
        lineno += 1
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            skipped += 1
            continue
        src = Sentence(lineno, source_language, parts[0])
        tgt = Sentence(lineno, target_language, parts[1])
        pairs.append(SentencePair(make_pair_id(lineno, lineno), src, tgt))
    return Corpus(tuple(pairs), source_language, target_language), skipped
