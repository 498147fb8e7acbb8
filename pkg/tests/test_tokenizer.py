import random

from hypothesis import given, settings, strategies as st

from pronaudit import _fallback
from pronaudit.categories import GenderCategory
from pronaudit.lexicon import Lexicon, LexiconEntry
from pronaudit.tokenizer import (
    extract_pronouns_en,
    extract_pronouns_ja,
    preprocess_ja,
)

from .oracles import oracle_extract_en, oracle_extract_ja

M, F, A = (GenderCategory.MASCULINE, GenderCategory.FEMININE,
           GenderCategory.AMBIGUOUS)


# -- English ------------------------------------------------------------

def test_en_line51(en_lexicon):
    occ = extract_pronouns_en(
        "The last person I told my idea to thought I was nuts.", en_lexicon)
    assert [(o.surface, o.category) for o in occ] == [
        ("I", A), ("my", A), ("I", A)]


def test_en_empty(en_lexicon):
    assert extract_pronouns_en("", en_lexicon) == []


def test_en_apostrophe_split(en_lexicon):
    occ = extract_pronouns_en("He said he'd see Him.", en_lexicon)
    assert [(o.surface, o.category) for o in occ] == [
        ("He", M), ("he", M), ("Him", M)]


def test_en_possessive_s(en_lexicon):
    occ = extract_pronouns_en("he's crazy about it", en_lexicon)
    assert [(o.surface, o.span) for o in occ] == [
        ("he", (0, 2)), ("it", (17, 19))]


def test_en_leading_apostrophe(en_lexicon):
    occ = extract_pronouns_en("tell 'em now", en_lexicon)
    assert [(o.surface, o.lexicon_surface) for o in occ] == [("'em", "'em")]


def test_en_span_validity(en_lexicon):
    text = "She told herself they'd win; I believed her."
    for o in extract_pronouns_en(text, en_lexicon):
        assert text[o.span[0]:o.span[1]] == o.surface


def test_en_no_partial_word_match(en_lexicon):
    # "it" inside "itinerary" or "his" inside "history" must not count
    occ = extract_pronouns_en("history and itinerary", en_lexicon)
    assert occ == []


# -- Japanese -----------------------------------------------------------

def test_ja_boundary_segments():
    ft = preprocess_ja("僕が、僕を")
    assert ft.segment_strings() == ["僕が", "僕を"]


def test_ja_only_punctuation():
    assert preprocess_ja("、。！？").segments == ()


def test_ja_line51(ja_lexicon):
    occ = extract_pronouns_ja(
        "僕が最後に自分の考えを伝えた人は、僕を気遣いだと思ったようだ。", ja_lexicon)
    assert [(o.surface, o.category) for o in occ] == [("僕", M), ("僕", M)]


def test_ja_longest_match(ja_lexicon):
    occ = extract_pronouns_ja("彼女は彼を見た", ja_lexicon)
    assert [(o.surface, o.category) for o in occ] == [("彼女", F), ("彼", M)]


def test_ja_nan(ja_lexicon):
    occ = extract_pronouns_ja("何もない", ja_lexicon)
    assert [(o.surface, o.category) for o in occ] == [("何", A)]


def test_ja_matches_never_cross_boundary(ja_lexicon):
    # 彼 then boundary then 女: must not match 彼女
    occ = extract_pronouns_ja("彼、女", ja_lexicon)
    assert [o.surface for o in occ] == ["彼"]


def test_ja_empty(ja_lexicon):
    assert extract_pronouns_ja("", ja_lexicon) == []


# -- oracle agreement ---------------------------------------------------

_EN_WORDS = ["he", "she", "it", "they", "'em", "cat", "dog", "he's",
             "she'd", "I'm", "running", "Him", "HERSELF", "x'y'z", "don't"]
_JA_CHUNKS = ["彼", "彼女", "彼女ら", "僕", "何", "私", "、", "。", "犬",
              "見た", "は", " ", "あの", "人", "てめえ", "き", "きみ"]


@settings(max_examples=200)
@given(st.lists(st.sampled_from(_EN_WORDS), max_size=12),
       st.sampled_from([" ", "  ", ", ", "! "]))
def test_en_oracle_agreement(words, sep):
    from pronaudit.lexicon import builtin_lexicon
    lex = builtin_lexicon("eng")
    text = sep.join(words)
    got = [(o.surface, o.lexicon_surface, o.span)
           for o in extract_pronouns_en(text, lex)]
    assert got == oracle_extract_en(text, lex)


@settings(max_examples=200)
@given(st.lists(st.sampled_from(_JA_CHUNKS), max_size=15))
def test_ja_oracle_agreement(chunks):
    from pronaudit.lexicon import builtin_lexicon
    lex = builtin_lexicon("jpn")
    text = "".join(chunks)
    got = [(o.surface, o.lexicon_surface, o.span)
           for o in extract_pronouns_ja(text, lex)]
    assert got == oracle_extract_ja(text, lex)


# -- invariants ---------------------------------------------------------

def _shuffled_lexicon(lexicon, seed):
    entries = [LexiconEntry(s, c) for s, c in lexicon.items()]
    random.Random(seed).shuffle(entries)
    return Lexicon(lexicon.language, entries)


def test_lexicon_permutation_determinism(en_lexicon, ja_lexicon):
    en_text = "He said she'd tell 'em about themselves."
    ja_text = "彼女らは彼と僕のてめえを見た。"
    base_en = extract_pronouns_en(en_text, en_lexicon)
    base_ja = extract_pronouns_ja(ja_text, ja_lexicon)
    for seed in range(5):
        assert extract_pronouns_en(
            en_text, _shuffled_lexicon(en_lexicon, seed)) == base_en
        assert extract_pronouns_ja(
            ja_text, _shuffled_lexicon(ja_lexicon, seed)) == base_ja


def test_en_case_insensitivity(en_lexicon):
    text = "he told them it was his."
    lower = extract_pronouns_en(text, en_lexicon)
    upper = extract_pronouns_en(text.upper(), en_lexicon)
    assert [(o.lexicon_surface, o.span) for o in lower] == \
           [(o.lexicon_surface, o.span) for o in upper]


def test_monotonicity_adding_entry(ja_lexicon):
    text = "僕は犬を見た"
    before = {o.span for o in extract_pronouns_ja(text, ja_lexicon)}
    bigger = Lexicon("jpn", [LexiconEntry(s, c) for s, c in ja_lexicon.items()]
                     + [LexiconEntry("犬", GenderCategory.AMBIGUOUS)])
    after = {o.span for o in extract_pronouns_ja(text, bigger)}
    assert before <= after


# -- kernel equivalence -------------------------------------------------

@settings(max_examples=300)
@given(st.text(max_size=60))
def test_kernel_token_runs_match_fallback(text):
    from pronaudit import _kernel
    assert _kernel.find_token_runs(text) == _fallback.find_token_runs(text)


@settings(max_examples=300)
@given(st.text(alphabet="彼女ら僕何私、。abc ", max_size=40))
def test_kernel_scan_match_fallback(text):
    from pronaudit import _kernel
    from pronaudit.lexicon import builtin_lexicon
    from pronaudit.tokenizer import _ja_index
    index = _ja_index(builtin_lexicon("jpn"))
    assert _kernel.scan_longest(text, 0, len(text), index) == \
        _fallback.scan_longest(text, 0, len(text), index)
