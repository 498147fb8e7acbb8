# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled matching kernels; mirror of _fallback.py."""


cdef inline bint _is_letter(Py_UCS4 ch):
    return ch.isalpha()


cpdef list find_token_runs(str text):
    cdef Py_ssize_t i = 0, n = len(text), start
    cdef Py_UCS4 ch
    cdef bint leading
    cdef list runs = []
    while i < n:
        ch = text[i]
        if _is_letter(ch):
            start = i
            i += 1
            while i < n:
                ch = text[i]
                if _is_letter(ch):
                    i += 1
                elif (ch == u"'" or ch == u"’") and i + 1 < n and _is_letter(text[i + 1]):
                    i += 2
                else:
                    break
            leading = start > 0 and (text[start - 1] == u"'" or text[start - 1] == u"’")
            runs.append((start, i, leading))
        else:
            i += 1
    return runs


cpdef list scan_longest(str text, Py_ssize_t seg_start, Py_ssize_t seg_end,
                        dict first_char_map):
    cdef Py_ssize_t pos = seg_start, n, remaining
    cdef list spans = []
    cdef list candidates
    cdef str surface
    cdef bint matched
    while pos < seg_end:
        candidates = first_char_map.get(text[pos])
        if candidates is not None:
            remaining = seg_end - pos
            matched = False
            for surface in candidates:
                n = len(surface)
                if n <= remaining and text[pos:pos + n] == surface:
                    spans.append((pos, pos + n))
                    pos += n
                    matched = True
                    break
            if not matched:
                pos += 1
        else:
            pos += 1
    return spans
