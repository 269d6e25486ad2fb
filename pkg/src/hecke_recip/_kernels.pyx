# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled cyclic-word kernels; mirrors ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cpdef long exponent_rank(long k):
    return 2 * k - 1 if k > 0 else -2 * k


cdef Py_ssize_t _booth(long *s, Py_ssize_t n, long *fail) noexcept:
    # s holds the sequence twice (length 2n); fail has length 2n
    cdef Py_ssize_t k = 0, j, i
    cdef long sj
    for j in range(2 * n):
        fail[j] = -1
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def least_rotation(seq):
    cdef Py_ssize_t n = len(seq), j, res
    if n < 2:
        return 0
    cdef long *s = <long *> malloc(4 * n * sizeof(long))
    if s == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            s[j] = seq[j]
            s[j + n] = s[j]
        res = _booth(s, n, s + 2 * n)
    finally:
        free(s)
    return res


def smallest_period(seq):
    cdef Py_ssize_t n = len(seq), d, i
    cdef bint ok
    cdef list items = list(seq)
    for d in range(1, n + 1):
        if n % d:
            continue
        ok = True
        for i in range(d, n):
            if items[i] != items[i - d]:
                ok = False
                break
        if ok:
            return d
    return n


cdef struct _State:
    long *alphabet
    long *ranks
    long *weights
    Py_ssize_t nalpha
    long *seq      # current exponents
    long *rseq     # current ranks, doubled buffer for Booth
    long *fail
    Py_ssize_t depth
    Py_ssize_t maxdepth


cdef int _extend(_State *st, long budget, Py_ssize_t first, list out) except -1:
    cdef Py_ssize_t a, j, L = st.depth
    if L >= 2:
        for j in range(L):
            st.rseq[L + j] = st.rseq[j]
        if _booth(st.rseq, L, st.fail) == 0:
            out.append(tuple([st.seq[j] for j in range(L)]))
    if L == st.maxdepth:
        return 0
    for a in range(first, st.nalpha):
        if st.weights[a] > budget:
            continue
        st.seq[L] = st.alphabet[a]
        st.rseq[L] = st.ranks[a]
        st.depth = L + 1
        _extend(st, budget - st.weights[a], first, out)
        st.depth = L
    return 0


def canonical_cycles(long p, long x):
    cdef long r = p // 2
    cdef long low = -r + 1 if p % 2 == 0 else -r
    alpha = sorted((k for k in range(low, r + 1) if k), key=exponent_rank)
    cdef Py_ssize_t nalpha = len(alpha), a
    cdef Py_ssize_t maxdepth = x // 2 + 1
    cdef _State st
    cdef list out = []
    st.nalpha = nalpha
    st.maxdepth = maxdepth
    st.alphabet = <long *> malloc(nalpha * sizeof(long))
    st.ranks = <long *> malloc(nalpha * sizeof(long))
    st.weights = <long *> malloc(nalpha * sizeof(long))
    st.seq = <long *> malloc((maxdepth + 1) * sizeof(long))
    st.rseq = <long *> malloc(2 * (maxdepth + 1) * sizeof(long))
    st.fail = <long *> malloc(2 * (maxdepth + 1) * sizeof(long))
    try:
        if (st.alphabet == NULL or st.ranks == NULL or st.weights == NULL
                or st.seq == NULL or st.rseq == NULL or st.fail == NULL):
            raise MemoryError()
        for a in range(nalpha):
            st.alphabet[a] = alpha[a]
            st.ranks[a] = exponent_rank(alpha[a])
            st.weights[a] = 1 + abs(alpha[a])
        for a in range(nalpha):
            if st.weights[a] <= x:
                st.seq[0] = st.alphabet[a]
                st.rseq[0] = st.ranks[a]
                st.depth = 1
                _extend(&st, x - st.weights[a], a, out)
    finally:
        free(st.alphabet); free(st.ranks); free(st.weights)
        free(st.seq); free(st.rseq); free(st.fail)
    return out
