"""Pure-Python matching kernels.

Same interface and semantics as the compiled module in _speedups.pyx;
selected at import time by _kernel when the extension is unavailable (or
forced via PRONAUDIT_PURE_PYTHON=1).
"""

from __future__ import annotations

_APOSTROPHES = ("'", "’")


def find_token_runs(text):
    """Spans of candidate English word tokens (letters + embedded apostrophes).

    Returns (start, end, has_leading_apostrophe) triples; start/end exclude
    any leading apostrophe, which the caller re-attaches only when the
    lexicon says so (covers surfaces like 'em).
    """
    runs = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isalpha():
            start = i
            i += 1
            while i < n:
                ch = text[i]
                if ch.isalpha():
                    i += 1
                elif ch in _APOSTROPHES and i + 1 < n and text[i + 1].isalpha():
                    i += 2
                else:
                    break
            leading = start > 0 and text[start - 1] in _APOSTROPHES
            runs.append((start, i, leading))
        else:
            i += 1
    return runs


def scan_longest(text, seg_start, seg_end, first_char_map):
    """Leftmost-longest dictionary scan over text[seg_start:seg_end].

    first_char_map maps a surface's first character to the surfaces that
    start with it, sorted by length descending.  Returned spans never
    overlap.
    """
    spans = []
    pos = seg_start
    while pos < seg_end:
        candidates = first_char_map.get(text[pos])
        if candidates:
            remaining = seg_end - pos
            for surface in candidates:
                n = len(surface)
                if n <= remaining and text[pos:pos + n] == surface:
                    spans.append((pos, pos + n))
                    pos += n
                    break
            else:
                pos += 1
        else:
            pos += 1
    return spans
