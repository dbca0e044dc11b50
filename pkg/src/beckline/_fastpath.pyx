# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop for the pairwise line-grouping pass.

Works on machine integers only.  The caller guarantees every coordinate
is an integer with |v| <= 10**9, which keeps the raw coefficients inside
int64: |a|, |b| <= 2*10**9 and |c| = |x2*y1 - x1*y2| <= 2*10**18 < 2**63.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc, qsort


ctypedef struct PairRec:
    int64_t a
    int64_t b
    int64_t c
    int i
    int j


cdef int _cmp_pair(const void *pa, const void *pb) noexcept nogil:
    cdef const PairRec *x = <const PairRec *> pa
    cdef const PairRec *y = <const PairRec *> pb
    if x.a != y.a:
        return -1 if x.a < y.a else 1
    if x.b != y.b:
        return -1 if x.b < y.b else 1
    if x.c != y.c:
        return -1 if x.c < y.c else 1
    return 0


cdef inline int64_t _gcd64(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def group_lines(xs, ys, colors):
    """Group all point pairs by canonical line.

    xs, ys: sequences of Python ints; colors: sequence of 0 (red) / 1 (blue).
    Returns a list of (a, b, c, red_count, blue_count) tuples, one per
    induced line, sorted by (a, b, c).  Identical to the pure-Python
    grouping in beckline.engine.
    """
    cdef Py_ssize_t n = len(xs)
    if n < 2:
        return []
    cdef Py_ssize_t m = n * (n - 1) // 2
    cdef int64_t *px = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *py = <int64_t *> malloc(n * sizeof(int64_t))
    cdef char *pc = <char *> malloc(n)
    cdef Py_ssize_t *seen = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef PairRec *recs = <PairRec *> malloc(m * sizeof(PairRec))
    if px == NULL or py == NULL or pc == NULL or seen == NULL or recs == NULL:
        free(px); free(py); free(pc); free(seen); free(recs)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, run_start, run_id, idx
    cdef int64_t a, b, c, g
    cdef int red, blue
    cdef int t
    try:
        for i in range(n):
            px[i] = xs[i]
            py[i] = ys[i]
            t = colors[i]
            pc[i] = <char> t
            seen[i] = -1

        k = 0
        with nogil:
            for i in range(n):
                for j in range(i + 1, n):
                    a = py[j] - py[i]
                    b = px[i] - px[j]
                    c = px[j] * py[i] - px[i] * py[j]
                    g = _gcd64(_gcd64(a, b), c)
                    a = a // g
                    b = b // g
                    c = c // g
                    if a < 0 or (a == 0 and b < 0):
                        a = -a
                        b = -b
                        c = -c
                    recs[k].a = a
                    recs[k].b = b
                    recs[k].c = c
                    recs[k].i = <int> i
                    recs[k].j = <int> j
                    k += 1
            qsort(recs, m, sizeof(PairRec), _cmp_pair)

        out = []
        run_start = 0
        run_id = 0
        while run_start < m:
            k = run_start
            while (k < m and recs[k].a == recs[run_start].a
                   and recs[k].b == recs[run_start].b
                   and recs[k].c == recs[run_start].c):
                k += 1
            red = 0
            blue = 0
            for j in range(run_start, k):
                idx = recs[j].i
                if seen[idx] != run_id:
                    seen[idx] = run_id
                    if pc[idx] == 0:
                        red += 1
                    else:
                        blue += 1
                idx = recs[j].j
                if seen[idx] != run_id:
                    seen[idx] = run_id
                    if pc[idx] == 0:
                        red += 1
                    else:
                        blue += 1
            out.append((recs[run_start].a, recs[run_start].b, recs[run_start].c,
                        red, blue))
            run_start = k
            run_id += 1
        return out
    finally:
        free(px)
        free(py)
        free(pc)
        free(seen)
        free(recs)
