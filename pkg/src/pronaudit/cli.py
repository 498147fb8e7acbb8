"""Command line entry point.

Subcommands: audit, matrix, stats, tokenize, lexicon export|validate,
rewrite suggest|apply|expand|roundtrip, serve.

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal error.
All file outputs are byte-deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .corpus import (
    Corpus,
    CorpusError,
    build_pairs,
    parse_links,
    parse_parallel_tsv,
    parse_sentences,
)
from .lexicon import (
    Lexicon,
    LexiconError,
    builtin_lexicon,
    load_lexicon,
    serialize_lexicon,
)
from .review import ReviewLogError, decision_from_json, start_session
from .rewrite import (
    RewriteError,
    apply as apply_suggestions,
    expand,
    paradigm_by_id,
    roundtrip_check,
    suggest,
)
from .stats import (
    StatsError,
    audit_report,
    bias_tests,
    classify_corpus,
    confusion_matrix,
    export_matrix_tsv,
    import_matrix_tsv,
    matrix_report,
    render_report,
)
from .tokenizer import extract_pronouns


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _load_corpus(args) -> Corpus:
    if getattr(args, "pairs", None):
        if getattr(args, "sentences", None) or getattr(args, "links", None):
            raise UsageError("use either --pairs or --sentences/--links, not both")
        corpus, skipped = parse_parallel_tsv(
            _read_bytes(args.pairs), args.src_lang, args.tgt_lang)
        if skipped:
            print(f"warning: {skipped} malformed line(s) skipped in {args.pairs}",
                  file=sys.stderr)
        return corpus
    if getattr(args, "sentences", None) and getattr(args, "links", None):
        sentences_src, sk1 = parse_sentences(
            _read_bytes(args.sentences), language=None)
        links, sk2 = parse_links(_read_bytes(args.links))
        src = [s for s in sentences_src if s.language == args.src_lang]
        tgt = [s for s in sentences_src if s.language == args.tgt_lang]
        corpus, dropped = build_pairs(src, tgt, links,
                                      args.src_lang, args.tgt_lang)
        for n, what in ((sk1, "sentence record(s)"), (sk2, "link record(s)"),
                        (dropped, "dangling link(s)")):
            if n:
                print(f"warning: {n} {what} skipped", file=sys.stderr)
        return corpus
    raise UsageError("an input is required: --pairs, or --sentences with --links")


def _load_lexicons(args) -> tuple[Lexicon, Lexicon]:
    if getattr(args, "lexicon_en", None):
        en = load_lexicon(_read_bytes(args.lexicon_en), language="eng")
        en.source = f"file:{args.lexicon_en}"
    else:
        en = builtin_lexicon("eng")
    if getattr(args, "lexicon_ja", None):
        ja = load_lexicon(_read_bytes(args.lexicon_ja), language="jpn")
        ja.source = f"file:{args.lexicon_ja}"
    else:
        ja = builtin_lexicon("jpn")
    return en, ja


def _emit(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)


def _add_corpus_flags(p, lexicons=True):
    p.add_argument("--pairs", help="two-column parallel TSV (english<TAB>japanese)")
    p.add_argument("--sentences", help="Tatoeba sentences.csv TSV (id, lang, text)")
    p.add_argument("--links", help="Tatoeba links.csv TSV (id, translation_id)")
    p.add_argument("--src-lang", default="eng", help="source language code")
    p.add_argument("--tgt-lang", default="jpn", help="target language code")
    if lexicons:
        p.add_argument("--lexicon-en", help="English lexicon TSV (default: built-in)")
        p.add_argument("--lexicon-ja", help="Japanese lexicon TSV (default: built-in)")


def _config_echo(args, keys) -> dict:
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def build_parser() -> _Parser:
    parser = _Parser(prog="pronaudit", description=__doc__.splitlines()[0]
                     if __doc__ else None)
    parser.add_argument("--version", action="version",
                        version=f"pronaudit {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("audit", help="full bias audit report over a corpus")
    _add_corpus_flags(p)
    p.add_argument("--out", help="report output path (default: stdout)")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for classification")

    p = sub.add_parser("matrix", help="compute/export the 8x8 confusion matrix")
    _add_corpus_flags(p)
    p.add_argument("--matrix", help="re-emit an existing matrix TSV instead")
    p.add_argument("--out", help="matrix TSV output path (default: stdout)")

    p = sub.add_parser("stats", help="run the bias tests on a matrix TSV")
    p.add_argument("--matrix", required=True, help="8x8 matrix TSV input")
    p.add_argument("--out", help="JSON report output path (default: text to stdout)")

    p = sub.add_parser("tokenize", help="debug-dump pronoun occurrences as TSV")
    _add_corpus_flags(p)
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("lexicon", help="lexicon utilities")
    lex_sub = p.add_subparsers(dest="lexicon_command", metavar="subcommand")
    pe = lex_sub.add_parser("export", help="export a built-in lexicon as TSV")
    pe.add_argument("--lang", required=True, choices=["eng", "jpn"])
    pe.add_argument("--out", help="output path (default: stdout)")
    pv = lex_sub.add_parser("validate", help="validate a lexicon TSV file")
    pv.add_argument("--file", required=True)

    p = sub.add_parser("rewrite", help="placeholder rewriting")
    rw_sub = p.add_subparsers(dest="rewrite_command", metavar="subcommand")
    ps = rw_sub.add_parser("suggest", help="emit placeholder suggestions as JSONL")
    _add_corpus_flags(ps)
    ps.add_argument("--scope", choices=["gendered", "all"], default="gendered")
    ps.add_argument("--out", help="output path (default: stdout)")
    pa = rw_sub.add_parser("apply", help="apply decisions; emit templated TSV")
    _add_corpus_flags(pa)
    pa.add_argument("--scope", choices=["gendered", "all"], default="gendered")
    pa.add_argument("--decisions", required=True, help="decisions JSONL log")
    pa.add_argument("--out", help="output path (default: stdout)")
    px = rw_sub.add_parser("expand", help="expand a templated TSV with paradigms")
    px.add_argument("--pairs", required=True, help="templated parallel TSV")
    px.add_argument("--src-lang", default="eng")
    px.add_argument("--tgt-lang", default="jpn")
    px.add_argument("--assign", action="append", default=[], metavar="N:EN:JA",
                    help="index:english-paradigm:japanese-paradigm (repeatable)")
    px.add_argument("--out", help="output path (default: stdout)")
    pr = rw_sub.add_parser("roundtrip", help="suggest/apply/expand round-trip check")
    _add_corpus_flags(pr)
    pr.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("serve", help="start the review service")
    _add_corpus_flags(p)
    p.add_argument("--scope", choices=["gendered", "all"], default="gendered")
    p.add_argument("--decisions", required=True, help="decisions JSONL log path")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", help="serve a built frontend from this directory")
    return parser


def _cmd_audit(args) -> int:
    corpus = _load_corpus(args)
    en, ja = _load_lexicons(args)
    config = _config_echo(args, ("pairs", "sentences", "links", "src_lang",
                                 "tgt_lang", "lexicon_en", "lexicon_ja"))
    report = audit_report(corpus, en, ja, config=config, workers=args.workers)
    _emit(render_report(report), args.out)
    return 0


def _cmd_matrix(args) -> int:
    if args.matrix:
        matrix = import_matrix_tsv(_read_bytes(args.matrix))
    else:
        corpus = _load_corpus(args)
        en, ja = _load_lexicons(args)
        matrix = confusion_matrix(classify_corpus(corpus, en, ja))
    _emit(export_matrix_tsv(matrix), args.out)
    return 0


def _cmd_stats(args) -> int:
    matrix = import_matrix_tsv(_read_bytes(args.matrix))
    if args.out:
        report = matrix_report(matrix, source=args.matrix)
        _emit(render_report(report), args.out)
        return 0
    for t in bias_tests(matrix):
        if t.result is None:
            print(f"{t.label}  {t.description}: error: {t.error}")
        else:
            r = t.result
            print(f"{t.label}  {t.description}: chi2({r.df}, N={r.n}) = "
                  f"{r.chi2:.1f}, Cramer's V = {r.cramers_v:.2f}")
    total = matrix.total
    if total:
        print(f"diagonal match rate: {matrix.diagonal_total()}/{total} = "
              f"{matrix.diagonal_rate():.4f}")
    return 0


def _cmd_tokenize(args) -> int:
    corpus = _load_corpus(args)
    en, ja = _load_lexicons(args)
    lines = []
    for pair in corpus.pairs:
        for lang, text, lex in (("en", pair.source.text, en),
                                ("ja", pair.target.text, ja)):
            for o in extract_pronouns(text, lex):
                lines.append(f"{pair.pair_id}\t{lang}\t{o.surface}\t"
                             f"{o.category.value}\t{o.span[0]}\t{o.span[1]}")
    _emit(("\n".join(lines) + "\n" if lines else "").encode("utf-8"), args.out)
    return 0


def _cmd_lexicon(args) -> int:
    if args.lexicon_command == "export":
        _emit(serialize_lexicon(builtin_lexicon(args.lang)), args.out)
        return 0
    if args.lexicon_command == "validate":
        lex = load_lexicon(_read_bytes(args.file))
        print(f"ok: {len(lex)} entries, max surface length "
              f"{lex.max_surface_length}")
        return 0
    raise UsageError("lexicon requires a subcommand: export | validate")


def _suggestion_json(s) -> dict:
    return {
        "suggestion_id": s.suggestion_id, "pair_id": s.pair_id,
        "side": s.side, "span": list(s.span), "surface": s.surface,
        "proposed_token": s.token.render(), "category": s.category.value,
        "paradigm_id": s.paradigm_id, "agreement_risk": s.agreement_risk,
    }


def _cmd_rewrite(args) -> int:
    cmd = args.rewrite_command
    if cmd == "suggest":
        corpus = _load_corpus(args)
        en, ja = _load_lexicons(args)
        lines = [json.dumps(_suggestion_json(s), ensure_ascii=False)
                 for pair in corpus.pairs
                 for s in suggest(pair, en, ja, scope=args.scope)]
        _emit(("\n".join(lines) + "\n" if lines else "").encode("utf-8"), args.out)
        return 0
    if cmd == "apply":
        corpus = _load_corpus(args)
        en, ja = _load_lexicons(args)
        decisions = []
        for lineno, line in enumerate(
                _read_bytes(args.decisions).decode("utf-8").splitlines(), 1):
            if line.strip():
                try:
                    decisions.append(decision_from_json(line))
                except (ValueError, KeyError) as e:
                    raise InputError(
                        f"{args.decisions}: bad decision line {lineno}: {e}")
        lines = []
        for pair in corpus.pairs:
            suggestions = suggest(pair, en, ja, scope=args.scope)
            templated = apply_suggestions(pair, suggestions, decisions)
            lines.append(f"{templated.en_text}\t{templated.ja_text}")
        _emit(("\n".join(lines) + "\n").encode("utf-8"), args.out)
        return 0
    if cmd == "expand":
        assignment = {}
        for spec in args.assign:
            parts = spec.split(":")
            if len(parts) != 3:
                raise UsageError(f"bad --assign {spec!r}; expected N:EN:JA")
            idx = int(parts[0])
            assignment[idx] = (paradigm_by_id(parts[1]),
                               paradigm_by_id(parts[2]))
        corpus, skipped = parse_parallel_tsv(
            _read_bytes(args.pairs), args.src_lang, args.tgt_lang)
        if skipped:
            print(f"warning: {skipped} malformed line(s) skipped", file=sys.stderr)
        from .rewrite import TemplatedPair
        lines = []
        for pair in corpus.pairs:
            templated = TemplatedPair(pair.pair_id, pair.source.text,
                                      pair.target.text, (), ())
            expanded = expand(templated, assignment)
            lines.append(f"{expanded.en_text}\t{expanded.ja_text}")
        _emit(("\n".join(lines) + "\n").encode("utf-8"), args.out)
        return 0
    if cmd == "roundtrip":
        corpus = _load_corpus(args)
        en, ja = _load_lexicons(args)
        lines = []
        failures = 0
        for pair in corpus.pairs:
            r = roundtrip_check(pair, en, ja)
            detail = ""
            if r.status == "out_of_paradigm":
                detail = "\t" + ",".join(r.out_of_paradigm)
            elif r.status == "fail":
                failures += 1
                detail = "\t" + "; ".join(r.diffs)
            lines.append(f"{pair.pair_id}\t{r.status}{detail}")
        _emit(("\n".join(lines) + "\n" if lines else "").encode("utf-8"), args.out)
        return 0 if failures == 0 else 2
    raise UsageError(
        "rewrite requires a subcommand: suggest | apply | expand | roundtrip")


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    corpus = _load_corpus(args)
    en, ja = _load_lexicons(args)
    session = start_session(corpus, en, ja, args.decisions, scope=args.scope)
    for w in session.warnings:
        print(f"warning: {w}", file=sys.stderr)
    app = create_app(session, static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "audit": _cmd_audit,
    "matrix": _cmd_matrix,
    "stats": _cmd_stats,
    "tokenize": _cmd_tokenize,
    "lexicon": _cmd_lexicon,
    "rewrite": _cmd_rewrite,
    "serve": _cmd_serve,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required (see --help)")
        return _COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (InputError, CorpusError, LexiconError, StatsError, RewriteError,
            ReviewLogError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 3
    except Exception as e:  # pragma: no cover - internal failures
        print(f"error: internal: {e}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
