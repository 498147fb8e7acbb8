#!/usr/bin/env python3
"""Compare the compiled scanning kernels against the pure-Python fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--sentences N] [--repeat R]

Generates a synthetic bilingual corpus, then times find_token_runs and
scan_longest from both backends over identical inputs and reports the
throughput ratio.  Also cross-checks that both backends return identical
results on every benchmarked sentence.
"""

import argparse
import random
import time

from pronaudit import _fallback, _kernel
from pronaudit.lexicon import builtin_lexicon
from pronaudit.tokenizer import _ja_index

_EN_WORDS = ["he", "she", "they", "him", "her", "his", "themselves", "'em",
             "cat", "dog", "ran", "saw", "the", "a", "history", "don't",
             "o'clock", "thought", "idea", "person"]
_JA_CHUNKS = ["彼", "彼女", "彼女ら", "僕", "何", "私", "あの人", "てめえ",
              "犬", "見た", "走った", "は", "が", "を", "考え", "、", "。"]


def make_corpus(n, seed=20240824):
    rng = random.Random(seed)
    en = [" ".join(rng.choices(_EN_WORDS, k=rng.randint(4, 14)))
          for _ in range(n)]
    ja = ["".join(rng.choices(_JA_CHUNKS, k=rng.randint(4, 18)))
          for _ in range(n)]
    return en, ja


def bench(label, func, args_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            func(*args)
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<28} {best * 1e3:8.2f} ms "
          f"({len(args_list) / best:,.0f} sentences/s)")
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sentences", type=int, default=20000,
                        help="sentences per language (default 20000)")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best-of (default 5)")
    args = parser.parse_args()

    if _kernel.BACKEND != "c":
        print("warning: compiled backend unavailable; comparing the "
              "fallback against itself")
    print(f"active backend: {_kernel.BACKEND}")

    en, ja = make_corpus(args.sentences)
    index = _ja_index(builtin_lexicon("jpn"))
    run_args = [(text,) for text in en]
    scan_args = [(text, 0, len(text), index) for text in ja]

    mismatches = sum(
        _kernel.find_token_runs(t) != _fallback.find_token_runs(t)
        for (t,) in run_args)
    mismatches += sum(
        _kernel.scan_longest(*a) != _fallback.scan_longest(*a)
        for a in scan_args)
    if mismatches:
        raise SystemExit(f"backend disagreement on {mismatches} sentences")
    print(f"backends agree on all {args.sentences} sentences per language")

    print("find_token_runs (English letter-run scan):")
    c_runs = bench("compiled", _kernel.find_token_runs, run_args,
                   args.repeat)
    py_runs = bench("pure python", _fallback.find_token_runs, run_args,
                    args.repeat)
    print(f"  speedup: {py_runs / c_runs:.2f}x")

    print("scan_longest (Japanese leftmost-longest scan):")
    c_scan = bench("compiled", _kernel.scan_longest, scan_args, args.repeat)
    py_scan = bench("pure python", _fallback.scan_longest, scan_args,
                    args.repeat)
    print(f"  speedup: {py_scan / c_scan:.2f}x")


if __name__ == "__main__":
    main()
