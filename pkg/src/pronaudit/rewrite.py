"""Placeholder rewriting: suggest, apply, expand, round-trip check.

A placeholder token stands in for a concrete pronoun:

    [p]                 shorthand for [p1]
    [p2]                referent slot 2
    [p1:subj]           with an English role (subj|obj|poss|refl)
    [p1:subj:hero]      constrained to the paradigm with id "hero"

Within one sentence pair, occurrences that belong to the same pronoun
paradigm share one referent index (he/his -> [p1:subj]/[p1:poss]);
distinct paradigms get ascending indices in order of first appearance.
Japanese placeholders carry no role.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .categories import GenderCategory
from .corpus import SentencePair
from .lexicon import Lexicon
from .tokenizer import extract_pronouns

ROLES = ("subj", "obj", "poss", "refl")

_TOKEN_RE = re.compile(
    r"\[p(?P<index>[1-9][0-9]*)?"
    r"(?::(?P<role>subj|obj|poss|refl))?"
    r"(?::(?P<list_id>[A-Za-z0-9_-]+))?\]"
)

_APOSTROPHES = ("'", "’")


class RewriteError(ValueError):
    pass


@dataclass(frozen=True)
class PlaceholderToken:
    index: int = 1
    role: Optional[str] = None
    list_id: Optional[str] = None

    def __post_init__(self):
        if self.index < 1:
            raise RewriteError(f"placeholder index must be >= 1, got {self.index}")
        if self.role is not None and self.role not in ROLES:
            raise RewriteError(f"unknown placeholder role {self.role!r}")
        if self.list_id is not None and self.role is None:
            raise RewriteError("a list_id requires a role position in the token")

    def render(self) -> str:
        body = f"p{self.index}"
        if self.role:
            body += f":{self.role}"
        if self.list_id:
            body += f":{self.list_id}"
        return f"[{body}]"


def parse_placeholder(text: str) -> PlaceholderToken:
    m = _TOKEN_RE.fullmatch(text)
    if not m:
        raise RewriteError(f"not a valid placeholder token: {text!r}")
    return PlaceholderToken(
        int(m.group("index") or 1), m.group("role"), m.group("list_id"))


@dataclass(frozen=True)
class Paradigm:
    id: str
    language: str
    category: GenderCategory
    forms: tuple[tuple[str, str], ...]  # (role, surface); jpn uses ("base", x)

    def form(self, role: str) -> str:
        for r, s in self.forms:
            if r == role:
                return s
        raise RewriteError(f"paradigm {self.id!r} has no {role!r} form")

    def surfaces(self) -> set[str]:
        return {s.casefold() for _, s in self.forms}


BUILTIN_PARADIGMS = (
    Paradigm("he", "eng", GenderCategory.MASCULINE,
             (("subj", "he"), ("obj", "him"), ("poss", "his"),
              ("refl", "himself"))),
    Paradigm("she", "eng", GenderCategory.FEMININE,
             (("subj", "she"), ("obj", "her"), ("poss", "her"),
              ("refl", "herself"))),
    Paradigm("they", "eng", GenderCategory.AMBIGUOUS,
             (("subj", "they"), ("obj", "them"), ("poss", "their"),
              ("refl", "themselves"))),
    Paradigm("kare", "jpn", GenderCategory.MASCULINE, (("base", "彼"),)),
    Paradigm("kanojo", "jpn", GenderCategory.FEMININE, (("base", "彼女"),)),
    Paradigm("anohito", "jpn", GenderCategory.AMBIGUOUS, (("base", "あの人"),)),
)


def paradigm_by_id(pid: str) -> Paradigm:
    for p in BUILTIN_PARADIGMS:
        if p.id == pid:
            return p
    raise RewriteError(f"unknown paradigm id {pid!r}")


def _form_map(language: str) -> dict[str, tuple[Paradigm, str]]:
    """casefolded surface -> (paradigm, role); first role in list order wins."""
    out: dict[str, tuple[Paradigm, str]] = {}
    for p in BUILTIN_PARADIGMS:
        if p.language != language:
            continue
        for role, surface in p.forms:
            out.setdefault(surface.casefold(), (p, role))
    return out


_EN_FORMS = _form_map("eng")
_JA_FORMS = _form_map("jpn")


@dataclass
class PlaceholderSuggestion:
    suggestion_id: str
    pair_id: str
    side: str  # "en" | "ja"
    span: tuple[int, int]
    surface: str
    token: PlaceholderToken
    category: GenderCategory
    paradigm_id: Optional[str]
    agreement_risk: bool
    status: str = "pending"  # pending | accepted | rejected | edited
    edited_text: Optional[str] = None


@dataclass(frozen=True)
class ReviewDecision:
    suggestion_id: str
    action: str  # accept | reject | edit
    replacement: Optional[str] = None
    reviewer: str = ""
    timestamp: str = ""

    def __post_init__(self):
        if self.action not in ("accept", "reject", "edit"):
            raise RewriteError(f"unknown decision action {self.action!r}")
        if self.action == "edit" and not self.replacement:
            raise RewriteError("edit decisions require a replacement")


@dataclass(frozen=True)
class TemplatedPair:
    pair_id: str
    en_text: str
    ja_text: str
    applied: tuple[str, ...]  # suggestion ids, in span order
    agreement_risk_ids: tuple[str, ...]


def _in_scope(side: str, surface: str, category: GenderCategory,
              scope: str) -> bool:
    if scope == "all":
        return True
    if category in (GenderCategory.MASCULINE, GenderCategory.FEMININE):
        return True
    # the English they-forms are gendered-relevant despite category A
    return side == "en" and surface.casefold() in _THEY_SURFACES


_THEY_SURFACES = paradigm_by_id("they").surfaces()


def suggest(pair: SentencePair, en_lexicon: Lexicon, ja_lexicon: Lexicon,
            scope: str = "gendered") -> list[PlaceholderSuggestion]:
    """Propose one placeholder per in-scope pronoun occurrence."""
    if scope not in ("gendered", "all"):
        raise RewriteError(f"unknown scope {scope!r}")
    out: list[PlaceholderSuggestion] = []
    for side, text, lexicon, forms in (
        ("en", pair.source.text, en_lexicon, _EN_FORMS),
        ("ja", pair.target.text, ja_lexicon, _JA_FORMS),
    ):
        group_index: dict[str, int] = {}
        for occ in extract_pronouns(text, lexicon):
            if not _in_scope(side, occ.surface, occ.category, scope):
                continue
            folded = occ.lexicon_surface.casefold()
            hit = forms.get(folded)
            if hit is not None:
                paradigm, role = hit
                key = f"paradigm:{paradigm.id}"
                pid = paradigm.id
            else:
                paradigm, role, pid = None, None, None
                key = f"surface:{folded}"
            index = group_index.setdefault(key, len(group_index) + 1)
            start, end = occ.span
            risk = end < len(text) and text[end] in _APOSTROPHES
            out.append(PlaceholderSuggestion(
                suggestion_id=f"{pair.pair_id}:{side}:{start}:{end}",
                pair_id=pair.pair_id,
                side=side,
                span=occ.span,
                surface=occ.surface,
                token=PlaceholderToken(index, role if side == "en" else None),
                category=occ.category,
                paradigm_id=pid,
                agreement_risk=risk,
            ))
    return out


def _fold_decisions(decisions: Iterable[ReviewDecision]) -> dict[str, ReviewDecision]:
    latest: dict[str, ReviewDecision] = {}
    for d in decisions:
        latest[d.suggestion_id] = d  # last writer wins
    return latest


def apply(pair: SentencePair, suggestions: list[PlaceholderSuggestion],
          decisions: Iterable[ReviewDecision] = ()) -> TemplatedPair:
    """Substitute accepted/edited suggestions into the pair text.

    Replacements run right-to-left per side so earlier spans stay valid.
    Suggestions without a decision use their own status field.
    """
    latest = _fold_decisions(decisions)
    texts = {"en": pair.source.text, "ja": pair.target.text}
    to_apply: dict[str, list[tuple[PlaceholderSuggestion, str]]] = {"en": [], "ja": []}
    for s in suggestions:
        d = latest.get(s.suggestion_id)
        if d is not None:
            status = {"accept": "accepted", "reject": "rejected",
                      "edit": "edited"}[d.action]
            replacement = d.replacement if d.action == "edit" else None
        else:
            status, replacement = s.status, s.edited_text
        if status == "accepted":
            to_apply[s.side].append((s, s.token.render()))
        elif status == "edited":
            if replacement is None:
                raise RewriteError(
                    f"edited suggestion {s.suggestion_id} has no replacement")
            to_apply[s.side].append((s, replacement))
    applied: list[PlaceholderSuggestion] = []
    for side, items in to_apply.items():
        items.sort(key=lambda it: it[0].span[0])
        prev_end = None
        for s, _ in items:
            if prev_end is not None and s.span[0] < prev_end:
                raise RewriteError(
                    f"overlapping accepted spans in pair {pair.pair_id} ({side})")
            prev_end = s.span[1]
        text = texts[side]
        for s, replacement in reversed(items):
            start, end = s.span
            text = text[:start] + replacement + text[end:]
        texts[side] = text
        applied.extend(s for s, _ in items)
    applied.sort(key=lambda s: (s.side, s.span))
    return TemplatedPair(
        pair.pair_id, texts["en"], texts["ja"],
        tuple(s.suggestion_id for s in applied),
        tuple(s.suggestion_id for s in applied if s.agreement_risk),
    )


def _at_sentence_start(prefix: str) -> bool:
    stripped = prefix.rstrip()
    return not stripped or stripped[-1] in ".!?"


def _expand_text(text: str, side: str,
                 assignment: dict[int, tuple[Optional[Paradigm], Optional[Paradigm]]]
                 ) -> str:
    out: list[str] = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        token = PlaceholderToken(
            int(m.group("index") or 1), m.group("role"), m.group("list_id"))
        if token.index not in assignment:
            raise RewriteError(f"no paradigm assigned to index {token.index}")
        en_p, ja_p = assignment[token.index]
        paradigm = en_p if side == "en" else ja_p
        if paradigm is None:
            raise RewriteError(
                f"no {side} paradigm assigned to index {token.index}")
        if token.list_id is not None and paradigm.id != token.list_id:
            raise RewriteError(
                f"index {token.index} requires paradigm {token.list_id!r}, "
                f"got {paradigm.id!r}")
        role = token.role or ("subj" if side == "en" else "base")
        form = paradigm.form(role)
        out.append(text[pos:m.start()])
        if side == "en" and _at_sentence_start("".join(out)):
            form = form[:1].upper() + form[1:]
        out.append(form)
        pos = m.end()
    out.append(text[pos:])
    return "".join(out)


@dataclass(frozen=True)
class ExpandedPair:
    pair_id: str
    en_text: str
    ja_text: str
    agreement_risk_ids: tuple[str, ...]


def expand(templated: TemplatedPair,
           assignment: dict[int, tuple[Optional[Paradigm], Optional[Paradigm]]]
           ) -> ExpandedPair:
    """Replace every placeholder with the assigned paradigm's form."""
    return ExpandedPair(
        templated.pair_id,
        _expand_text(templated.en_text, "en", assignment),
        _expand_text(templated.ja_text, "ja", assignment),
        templated.agreement_risk_ids,
    )


def _normalize_caps_en(text: str) -> str:
    # capitalization at sentence starts only; used for round-trip comparison
    out = []
    for i, ch in enumerate(text):
        if ch.isalpha() and _at_sentence_start(text[:i]):
            out.append(ch.upper())
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class RoundtripResult:
    pair_id: str
    status: str  # pass | fail | out_of_paradigm
    out_of_paradigm: tuple[str, ...] = ()
    diffs: tuple[str, ...] = ()


def roundtrip_check(pair: SentencePair, en_lexicon: Lexicon,
                    ja_lexicon: Lexicon) -> RoundtripResult:
    """suggest(all) -> accept all -> apply -> expand with original paradigms.

    Passes iff the expansion restores the original texts (modulo English
    sentence-initial capitalization).  Pronouns outside the built-in
    paradigms put the pair out of round-trip scope.
    """
    suggestions = suggest(pair, en_lexicon, ja_lexicon, scope="all")
    unparadigmed = sorted({s.surface for s in suggestions if s.paradigm_id is None})
    if unparadigmed:
        return RoundtripResult(pair.pair_id, "out_of_paradigm",
                               tuple(unparadigmed))
    for s in suggestions:
        s.status = "accepted"
    templated = apply(pair, suggestions)
    assignment: dict[int, list[Optional[Paradigm]]] = {}
    for s in suggestions:
        slot = assignment.setdefault(s.token.index, [None, None])
        slot[0 if s.side == "en" else 1] = paradigm_by_id(s.paradigm_id)
    expanded = expand(
        templated, {i: (en, ja) for i, (en, ja) in assignment.items()})
    diffs = []
    if _normalize_caps_en(expanded.en_text) != _normalize_caps_en(pair.source.text):
        diffs.append(f"en: {expanded.en_text!r} != {pair.source.text!r}")
    if expanded.ja_text != pair.target.text:
        diffs.append(f"ja: {expanded.ja_text!r} != {pair.target.text!r}")
    status = "fail" if diffs else "pass"
    return RoundtripResult(pair.pair_id, status, (), tuple(diffs))
