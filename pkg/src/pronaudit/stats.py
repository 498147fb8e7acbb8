"""Confusion matrix, presence/match tables, chi-square tests, audit report.

The confusion matrix counts sentence pairs by (English category set,
Japanese category set) in the canonical 8x8 order.  Presence counting is
sentence-level: a pair contributes once to a category if its set contains
that category, regardless of how many pronoun tokens occurred.

Chi-square is the plain Pearson statistic; the Yates continuity
correction is applied only to 2x2 tables.  p-values are deliberately not
computed; the contract is (chi2, df, Cramer's V).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import __version__
from .categories import SET_LABELS, GenderCategory, set_contains
from .classifier import PairClassification, classify_pair
from .corpus import Corpus
from .lexicon import Lexicon

REPORT_SCHEMA_VERSION = "1"

_CATS = (GenderCategory.MASCULINE, GenderCategory.FEMININE,
         GenderCategory.AMBIGUOUS)
_CAT_NAMES = {
    GenderCategory.MASCULINE: "masculine",
    GenderCategory.FEMININE: "feminine",
    GenderCategory.AMBIGUOUS: "ambiguous",
}


class StatsError(ValueError):
    pass


class ConfusionMatrix:
    """8x8 pair counts; rows = English set index, columns = Japanese."""

    def __init__(self, counts=None):
        if counts is None:
            self.counts = np.zeros((8, 8), dtype=np.int64)
        else:
            arr = np.asarray(counts, dtype=np.int64)
            if arr.shape != (8, 8):
                raise StatsError(f"expected an 8x8 matrix, got {arr.shape}")
            if (arr < 0).any():
                raise StatsError("negative cell in confusion matrix")
            self.counts = arr

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def diagonal_total(self) -> int:
        return int(np.trace(self.counts))

    def diagonal_rate(self) -> float:
        total = self.total
        return self.diagonal_total() / total if total else 0.0

    def __eq__(self, other):
        return (isinstance(other, ConfusionMatrix)
                and bool((self.counts == other.counts).all()))

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        return ConfusionMatrix(self.counts + other.counts)


def confusion_matrix(classifications: Iterable[PairClassification]) -> ConfusionMatrix:
    m = ConfusionMatrix()
    n = 0
    for c in classifications:
        m.counts[c.en_set.index, c.ja_set.index] += 1
        n += 1
    assert m.total == n
    return m


@dataclass(frozen=True)
class PresenceCounts:
    english: dict
    japanese: dict

    def non_masculine(self, side: str) -> int:
        d = self.english if side == "english" else self.japanese
        return d["feminine"] + d["ambiguous"]


def presence_counts(matrix: ConfusionMatrix) -> PresenceCounts:
    rows = matrix.counts.sum(axis=1)
    cols = matrix.counts.sum(axis=0)
    def count(marg, cat):
        return int(sum(marg[i] for i in range(8) if set_contains(i, cat)))
    english = {_CAT_NAMES[c]: count(rows, c) for c in _CATS}
    japanese = {_CAT_NAMES[c]: count(cols, c) for c in _CATS}
    for d in (english, japanese):
        d["non_masculine"] = d["feminine"] + d["ambiguous"]
    return PresenceCounts(english, japanese)


@dataclass(frozen=True)
class MatchTable:
    match: dict    # category name -> pairs with g on both sides
    mismatch: dict  # category name -> pairs with g on exactly one side

    def non(self, category: GenderCategory) -> tuple[int, int]:
        """(match, mismatch) summed over the other two categories."""
        others = [c for c in _CATS if c is not category]
        return (sum(self.match[_CAT_NAMES[c]] for c in others),
                sum(self.mismatch[_CAT_NAMES[c]] for c in others))


def match_table(matrix: ConfusionMatrix) -> MatchTable:
    match = {}
    mismatch = {}
    for cat in _CATS:
        m = mm = 0
        for i in range(8):
            for j in range(8):
                en, ja = set_contains(i, cat), set_contains(j, cat)
                if en and ja:
                    m += int(matrix.counts[i, j])
                elif en != ja:
                    mm += int(matrix.counts[i, j])
        match[_CAT_NAMES[cat]] = m
        mismatch[_CAT_NAMES[cat]] = mm
    return MatchTable(match, mismatch)


@dataclass(frozen=True)
class ChiSquareResult:
    chi2: float
    df: int
    cramers_v: float
    yates_applied: bool
    n: int


def chi_square(table: Sequence[Sequence[int]], yates: bool = False) -> ChiSquareResult:
    """Pearson chi-square over an r x c contingency table.

    Yates continuity correction (2x2 only) uses the closed form
    N(|ad-bc| - N/2)^2 / ((a+b)(c+d)(a+c)(b+d)), with the standard clamp
    to zero when |ad-bc| < N/2.
    """
    obs = np.asarray(table, dtype=np.float64)
    if obs.ndim != 2 or obs.shape[0] < 2 or obs.shape[1] < 2:
        raise StatsError("contingency table must be at least 2x2")
    if (obs < 0).any():
        raise StatsError("negative cell in contingency table")
    r, c = obs.shape
    row_tot = obs.sum(axis=1)
    col_tot = obs.sum(axis=0)
    n = obs.sum()
    if n <= 0 or (row_tot == 0).any() or (col_tot == 0).any():
        raise StatsError("degenerate table (zero row or column total)")
    df = (r - 1) * (c - 1)
    if yates:
        if (r, c) != (2, 2):
            raise StatsError("Yates correction is defined for 2x2 tables only")
        a, b = obs[0]
        cc, d = obs[1]
        diff = max(0.0, abs(a * d - b * cc) - n / 2.0)
        chi2 = n * diff * diff / (row_tot[0] * row_tot[1] * col_tot[0] * col_tot[1])
    else:
        expected = np.outer(row_tot, col_tot) / n
        if (expected <= 0).any():
            raise StatsError("expected cell value not positive")
        chi2 = float(((obs - expected) ** 2 / expected).sum())
    v = float(np.sqrt(chi2 / (n * (min(r, c) - 1))))
    return ChiSquareResult(float(chi2), df, v, yates, int(n))


@dataclass(frozen=True)
class BiasTest:
    label: str
    description: str
    table: tuple
    result: Optional[ChiSquareResult]
    error: Optional[str] = None


def bias_tests(matrix: ConfusionMatrix) -> list[BiasTest]:
    """The four reproducible cross-language bias tests, labeled T1-T4."""
    pres = presence_counts(matrix)
    mt = match_table(matrix)
    en, ja = pres.english, pres.japanese
    non_m = mt.non(GenderCategory.MASCULINE)
    non_f = mt.non(GenderCategory.FEMININE)
    specs = [
        ("T1", "language x {masculine,feminine,ambiguous} presence", False,
         ((en["masculine"], en["feminine"], en["ambiguous"]),
          (ja["masculine"], ja["feminine"], ja["ambiguous"]))),
        ("T2", "language x masculine/non-masculine presence (Yates)", True,
         ((en["masculine"], en["non_masculine"]),
          (ja["masculine"], ja["non_masculine"]))),
        # the match/mismatch tests are plain Pearson: the published values
        # reproduce exactly without the continuity correction
        ("T3", "masculine vs non-masculine x match/mismatch", False,
         ((mt.match["masculine"], mt.mismatch["masculine"]), non_m)),
        ("T4", "feminine vs non-feminine x match/mismatch", False,
         ((mt.match["feminine"], mt.mismatch["feminine"]), non_f)),
    ]
    out = []
    for label, desc, yates, table in specs:
        try:
            out.append(BiasTest(label, desc, table, chi_square(table, yates=yates)))
        except StatsError as e:
            out.append(BiasTest(label, desc, table, None, str(e)))
    return out


def export_matrix_tsv(matrix: ConfusionMatrix) -> bytes:
    lines = ["\t" + "\t".join(SET_LABELS)]
    for i, label in enumerate(SET_LABELS):
        lines.append(label + "\t" + "\t".join(
            str(int(v)) for v in matrix.counts[i]))
    return ("\n".join(lines) + "\n").encode("utf-8")


def import_matrix_tsv(stream) -> ConfusionMatrix:
    if isinstance(stream, (bytes, bytearray)):
        text = bytes(stream).decode("utf-8")
    elif isinstance(stream, str):
        text = stream
    else:
        raw = stream.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    lines = [ln.rstrip("\r") for ln in text.split("\n") if ln.strip()]
    if len(lines) != 9:
        raise StatsError(f"matrix TSV must have a header plus 8 rows, got {len(lines)} lines")
    header = lines[0].split("\t")
    if tuple(header[1:]) != SET_LABELS:
        raise StatsError(f"bad matrix header; expected columns {','.join(SET_LABELS)}")
    counts = []
    for i, line in enumerate(lines[1:]):
        cells = line.split("\t")
        if cells[0] != SET_LABELS[i]:
            raise StatsError(f"row {i + 1}: expected label {SET_LABELS[i]}, got {cells[0]!r}")
        if len(cells) != 9:
            raise StatsError(f"row {i + 1}: expected 8 cells")
        try:
            counts.append([int(v) for v in cells[1:]])
        except ValueError:
            raise StatsError(f"row {i + 1}: non-integer cell") from None
    return ConfusionMatrix(counts)


def _result_dict(t: BiasTest) -> dict:
    d = {"label": t.label, "description": t.description,
         "table": [list(row) for row in t.table]}
    if t.result is not None:
        d.update({
            "n": t.result.n,
            "chi2": round(t.result.chi2, 4),
            "df": t.result.df,
            "cramers_v": round(t.result.cramers_v, 4),
            "yates": t.result.yates_applied,
        })
    else:
        d["error"] = t.error
    return d


def _matrix_section(matrix: ConfusionMatrix) -> dict:
    return {
        "labels": list(SET_LABELS),
        "counts": matrix.counts.tolist(),
        "total": matrix.total,
    }


def _stats_sections(matrix: ConfusionMatrix) -> dict:
    pres = presence_counts(matrix)
    mt = match_table(matrix)
    non_m = mt.non(GenderCategory.MASCULINE)
    non_f = mt.non(GenderCategory.FEMININE)
    non_a = mt.non(GenderCategory.AMBIGUOUS)
    return {
        "matrix": _matrix_section(matrix),
        "diagonal": {
            "matched": matrix.diagonal_total(),
            "total": matrix.total,
            "rate": round(matrix.diagonal_rate(), 6),
        },
        "presence": {"english": pres.english, "japanese": pres.japanese},
        "match_table": {
            "masculine": {"match": mt.match["masculine"],
                          "mismatch": mt.mismatch["masculine"]},
            "feminine": {"match": mt.match["feminine"],
                         "mismatch": mt.mismatch["feminine"]},
            "ambiguous": {"match": mt.match["ambiguous"],
                          "mismatch": mt.mismatch["ambiguous"]},
            "non_masculine": {"match": non_m[0], "mismatch": non_m[1]},
            "non_feminine": {"match": non_f[0], "mismatch": non_f[1]},
            "non_ambiguous": {"match": non_a[0], "mismatch": non_a[1]},
        },
        "bias_tests": [_result_dict(t) for t in bias_tests(matrix)],
        "excluded_tests": [
            {"description": "within-language masculine vs non-masculine tests",
             "status": "not reproducible from published data"},
        ],
    }


def _classify_chunk(args):
    pairs, en_lexicon, ja_lexicon = args
    return [classify_pair(p, en_lexicon, ja_lexicon) for p in pairs]


def classify_corpus(corpus: Corpus, en_lexicon: Lexicon, ja_lexicon: Lexicon,
                    workers: int = 1) -> list[PairClassification]:
    """Classify every pair, optionally sharded over worker processes.

    Results keep corpus order, so the outcome is identical for any
    worker count.
    """
    if workers <= 1 or len(corpus) < 2 * workers:
        return [classify_pair(p, en_lexicon, ja_lexicon) for p in corpus.pairs]
    import concurrent.futures

    chunk = (len(corpus) + workers - 1) // workers
    jobs = [(corpus.pairs[i:i + chunk], en_lexicon, ja_lexicon)
            for i in range(0, len(corpus), chunk)]
    out: list[PairClassification] = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_classify_chunk, jobs):
            out.extend(part)
    return out


def audit_report(
    corpus: Corpus, en_lexicon: Lexicon, ja_lexicon: Lexicon,
    config: Optional[dict] = None, workers: int = 1,
) -> dict:
    """Full audit over a corpus: classify every pair, then all statistics.

    The result is a plain dict with fixed key order; serialize with
    render_report for byte-deterministic output.
    """
    classifications = classify_corpus(corpus, en_lexicon, ja_lexicon, workers)
    matrix = confusion_matrix(classifications)
    token_totals = {
        "english": {name: 0 for name in _CAT_NAMES.values()},
        "japanese": {name: 0 for name in _CAT_NAMES.values()},
    }
    for c in classifications:
        for o in c.en_occurrences:
            token_totals["english"][_CAT_NAMES[o.category]] += 1
        for o in c.ja_occurrences:
            token_totals["japanese"][_CAT_NAMES[o.category]] += 1
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool": {"name": "pronaudit", "version": __version__},
        "inputs": {
            "pair_count": len(corpus),
            "corpus_digest": corpus.digest(),
            "en_lexicon": {"source": en_lexicon.source,
                           "digest": en_lexicon.digest()},
            "ja_lexicon": {"source": ja_lexicon.source,
                           "digest": ja_lexicon.digest()},
        },
    }
    if config:
        report["config"] = config
    report.update(_stats_sections(matrix))
    report["token_totals"] = token_totals
    return report


def matrix_report(matrix: ConfusionMatrix, source: str = "matrix-import",
                  config: Optional[dict] = None) -> dict:
    """Audit report computed from an imported matrix (no corpus/tokenizing)."""
    digest = hashlib.sha256(export_matrix_tsv(matrix)).hexdigest()
    report = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool": {"name": "pronaudit", "version": __version__},
        "inputs": {"matrix_source": source, "matrix_digest": digest},
    }
    if config:
        report["config"] = config
    report.update(_stats_sections(matrix))
    return report


def render_report(report: dict) -> bytes:
    """Deterministic JSON rendering (insertion key order, LF terminated)."""
    return (json.dumps(report, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
