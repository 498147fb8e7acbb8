"""Review sessions over the suggestion queue, backed by an append-only log.

Suggestions are regenerated deterministically from the corpus on every
start; the only durable state is the decisions log (JSON lines, one
decision per line, append-only).  Replaying the log over freshly
generated suggestions reconstructs the session exactly, so a crash after
any prefix of writes is recoverable.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .corpus import Corpus, SentencePair
from .lexicon import Lexicon
from .rewrite import (
    PlaceholderSuggestion,
    ReviewDecision,
    RewriteError,
    apply,
    parse_placeholder,
    suggest,
)


class ReviewLogError(ValueError):
    pass


class UnknownSuggestionError(KeyError):
    pass


def decision_to_json(d: ReviewDecision) -> str:
    rec = {"suggestion_id": d.suggestion_id, "action": d.action}
    if d.replacement is not None:
        rec["replacement"] = d.replacement
    if d.reviewer:
        rec["reviewer"] = d.reviewer
    if d.timestamp:
        rec["timestamp"] = d.timestamp
    return json.dumps(rec, ensure_ascii=False)


def decision_from_json(line: str) -> ReviewDecision:
    rec = json.loads(line)
    return ReviewDecision(
        suggestion_id=rec["suggestion_id"],
        action=rec["action"],
        replacement=rec.get("replacement"),
        reviewer=rec.get("reviewer", ""),
        timestamp=rec.get("timestamp", ""),
    )


def validate_replacement(text: str) -> None:
    """Edited replacements must be a placeholder token or plain text.

    Anything that looks like a placeholder (starts with "[p") must parse.
    """
    if text.startswith("[p"):
        parse_placeholder(text)


@dataclass(frozen=True)
class Progress:
    pending: int
    accepted: int
    rejected: int
    edited: int

    @property
    def total(self) -> int:
        return self.pending + self.accepted + self.rejected + self.edited


class ReviewSession:
    """Single-writer review state over one corpus."""

    def __init__(self, corpus: Corpus, en_lexicon: Lexicon, ja_lexicon: Lexicon,
                 decisions_log: str | Path, scope: str = "gendered"):
        self.corpus = corpus
        self.en_lexicon = en_lexicon
        self.ja_lexicon = ja_lexicon
        self.scope = scope
        self.decisions_log = Path(decisions_log)
        self.corpus_digest = corpus.digest()
        self.warnings: list[str] = []
        self._lock = threading.Lock()
        self._pairs: dict[str, SentencePair] = {p.pair_id: p for p in corpus.pairs}
        self._suggestions: dict[str, PlaceholderSuggestion] = {}
        self._order: list[str] = []
        for pair in corpus.pairs:
            for s in suggest(pair, en_lexicon, ja_lexicon, scope=scope):
                self._suggestions[s.suggestion_id] = s
                self._order.append(s.suggestion_id)
        self._replay_log()
        self._log_fh = open(self.decisions_log, "a", encoding="utf-8")

    def _replay_log(self) -> None:
        if not self.decisions_log.exists():
            return
        with open(self.decisions_log, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    decision = decision_from_json(line)
                except (ValueError, KeyError) as e:
                    raise ReviewLogError(
                        f"{self.decisions_log}: corrupt log line {lineno}: {e}"
                    ) from e
                try:
                    self._apply_decision(decision)
                except UnknownSuggestionError:
                    self.warnings.append(
                        f"log line {lineno}: decision for unknown suggestion "
                        f"{decision.suggestion_id}; skipped")

    def _apply_decision(self, decision: ReviewDecision) -> PlaceholderSuggestion:
        s = self._suggestions.get(decision.suggestion_id)
        if s is None:
            raise UnknownSuggestionError(decision.suggestion_id)
        if decision.action == "accept":
            s.status, s.edited_text = "accepted", None
        elif decision.action == "reject":
            s.status, s.edited_text = "rejected", None
        else:
            s.status, s.edited_text = "edited", decision.replacement
        return s

    def close(self) -> None:
        self._log_fh.close()

    # -- queries ---------------------------------------------------------

    def progress(self) -> Progress:
        counts = {"pending": 0, "accepted": 0, "rejected": 0, "edited": 0}
        for s in self._suggestions.values():
            counts[s.status] += 1
        return Progress(**counts)

    def pair(self, pair_id: str) -> SentencePair:
        try:
            return self._pairs[pair_id]
        except KeyError:
            raise UnknownSuggestionError(pair_id) from None

    def suggestions_for_pair(self, pair_id: str) -> list[PlaceholderSuggestion]:
        out = [self._suggestions[sid] for sid in self._order
               if self._suggestions[sid].pair_id == pair_id]
        out.sort(key=lambda s: (s.side, s.span[0]))
        return out

    def suggestion(self, suggestion_id: str) -> PlaceholderSuggestion:
        try:
            return self._suggestions[suggestion_id]
        except KeyError:
            raise UnknownSuggestionError(suggestion_id) from None

    def list_suggestions(
        self,
        status: Optional[str] = None,
        category: Optional[str] = None,
        language: Optional[str] = None,
        page: int = 1,
        page_size: int = 20,
    ):
        """Filtered, stably ordered page; returns (items, total_filtered)."""
        if status is not None and status not in (
                "pending", "accepted", "rejected", "edited"):
            raise ValueError(f"invalid status filter {status!r}")
        if category is not None and category not in ("M", "F", "A"):
            raise ValueError(f"invalid category filter {category!r}")
        if language is not None and language not in ("en", "ja"):
            raise ValueError(f"invalid language filter {language!r}")
        if page < 1 or not 1 <= page_size <= 200:
            raise ValueError("invalid pagination")
        items = [self._suggestions[sid] for sid in self._order]
        if status is not None:
            items = [s for s in items if s.status == status]
        if category is not None:
            items = [s for s in items if s.category.value == category]
        if language is not None:
            items = [s for s in items if s.side == language]
        items.sort(key=lambda s: (s.pair_id, s.side, s.span[0]))
        total = len(items)
        lo = (page - 1) * page_size
        return items[lo:lo + page_size], total

    # -- mutations -------------------------------------------------------

    def record_decision(self, decision: ReviewDecision) -> PlaceholderSuggestion:
        """Write-ahead: the log line is durable before memory changes."""
        with self._lock:
            s = self._suggestions.get(decision.suggestion_id)
            if s is None:
                raise UnknownSuggestionError(decision.suggestion_id)
            if decision.action == "edit":
                validate_replacement(decision.replacement)
            self._log_fh.write(decision_to_json(decision) + "\n")
            self._log_fh.flush()
            os.fsync(self._log_fh.fileno())
            return self._apply_decision(decision)

    def export_templated(self, out_path: str | Path):
        """Apply current decisions over all pairs; write a parallel TSV.

        Pairs whose accepted spans overlap (possible after hand edits of
        the log) are exported untouched and listed in the error report.
        Returns (path, errors).
        """
        out_path = Path(out_path)
        errors: list[dict] = []
        by_pair: dict[str, list[PlaceholderSuggestion]] = {}
        for sid in self._order:
            s = self._suggestions[sid]
            by_pair.setdefault(s.pair_id, []).append(s)
        lines = []
        for pair in self.corpus.pairs:
            suggestions = by_pair.get(pair.pair_id, [])
            try:
                templated = apply(pair, suggestions)
                lines.append(f"{templated.en_text}\t{templated.ja_text}")
            except RewriteError as e:
                errors.append({"pair_id": pair.pair_id, "error": str(e)})
                lines.append(f"{pair.source.text}\t{pair.target.text}")
        out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return out_path, errors


def start_session(corpus: Corpus, en_lexicon: Lexicon, ja_lexicon: Lexicon,
                  decisions_log: str | Path, scope: str = "gendered") -> ReviewSession:
    return ReviewSession(corpus, en_lexicon, ja_lexicon, decisions_log, scope)
