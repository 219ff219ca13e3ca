# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Same signatures and results; callers guarantee that codes fit in int64 and
that coefficient products cannot overflow (see ``kernels``).
"""

from libc.stdlib cimport malloc, calloc, free
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

ctypedef long long i64


cdef i64* _pack(object rows, int k) except NULL:
    cdef Py_ssize_t n = len(rows)
    cdef i64* buf = <i64*> malloc((n * k + 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, s
    for r in range(n):
        row = rows[r]
        for s in range(k):
            buf[r * k + s] = row[s]
    return buf


cdef i64* _powers(int k, int cap) except NULL:
    cdef i64* pw = <i64*> malloc((k + 1) * sizeof(i64))
    if pw == NULL:
        raise MemoryError()
    cdef int j
    pw[0] = 1
    for j in range(1, k + 1):
        pw[j] = pw[j - 1] * (cap + 1)
    return pw


cdef inline bint _member(const i64* gens, int ng, int k, const i64* exps) nogil:
    cdef int g, s
    cdef bint ok
    for g in range(ng):
        ok = True
        for s in range(k):
            if gens[g * k + s] > exps[s]:
                ok = False
                break
        if ok:
            return True
    return False


cdef void _walk_ie(const i64* gens, const i64* degs, int ng, int k, int cap,
                   const i64* pw, i64* stack, int depth, int start,
                   i64 deg, i64 code, int sign,
                   unordered_map[i64, i64]& out) nogil:
    cdef const i64* cur = stack + depth * k
    cdef i64* nxt = stack + (depth + 1) * k
    cdef int j, s
    cdef i64 ndeg, ncode, gv
    for j in range(start, ng):
        if degs[j] > cap:
            break
        ndeg = deg
        ncode = code
        for s in range(k):
            gv = gens[j * k + s]
            if gv > cur[s]:
                ndeg += gv - cur[s]
                ncode += (gv - cur[s]) * pw[s]
                nxt[s] = gv
            else:
                nxt[s] = cur[s]
        if ndeg > cap:
            continue
        out[ncode] -= sign
        _walk_ie(gens, degs, ng, k, cap, pw, stack, depth + 1, j + 1,
                 ndeg, ncode, -sign, out)


def incl_excl(gens, int k, int cap):
    cdef int ng = len(gens)
    cdef i64* G = _pack(gens, k)
    cdef i64* pw = _powers(k, cap)
    cdef i64* degs = <i64*> calloc(ng + 1, sizeof(i64))
    cdef i64* stack = <i64*> calloc((ng + 2) * k + 1, sizeof(i64))
    cdef unordered_map[i64, i64] out
    cdef unordered_map[i64, i64].iterator it
    cdef int j, s
    try:
        if degs == NULL or stack == NULL:
            raise MemoryError()
        for j in range(ng):
            for s in range(k):
                degs[j] += G[j * k + s]
        out[0] = 1
        with nogil:
            _walk_ie(G, degs, ng, k, cap, pw, stack, 0, 0, 0, 0, 1, out)
        result = {}
        it = out.begin()
        while it != out.end():
            if deref(it).second != 0:
                result[deref(it).first] = deref(it).second
            inc(it)
        return result
    finally:
        free(G)
        free(pw)
        free(degs)
        free(stack)


cdef void _walk_sc(const i64* gens, int ng, int k, int cap, const i64* pw, i64* exps,
                   int pos, i64 budget, i64 code,
                   vector[i64]& out, vector[i64]& degs) nogil:
    cdef i64 e
    for e in range(budget + 1):
        exps[pos] = e
        if _member(gens, ng, k, exps):
            break
        if pos == k - 1:
            out.push_back(code + e * pw[pos])
            degs.push_back(cap - budget + e)
        else:
            _walk_sc(gens, ng, k, cap, pw, exps, pos + 1, budget - e, code + e * pw[pos],
                     out, degs)
    exps[pos] = 0


def staircase(gens, int k, int cap):
    cdef int ng = len(gens)
    cdef i64* G = _pack(gens, k)
    cdef i64* pw = _powers(k, cap)
    cdef i64* exps = <i64*> calloc(k + 1, sizeof(i64))
    cdef vector[i64] out, degs
    try:
        if exps == NULL:
            raise MemoryError()
        if k == 0:
            return ([], []) if _member(G, ng, k, exps) else ([0], [0])
        with nogil:
            _walk_sc(G, ng, k, cap, pw, exps, 0, cap, 0, out, degs)
        return list(out), list(degs)
    finally:
        free(G)
        free(pw)
        free(exps)


def convolve(a_codes, a_degs, a_coefs, b_codes, b_degs, b_coefs, int cap):
    cdef Py_ssize_t na = len(a_codes), nb = len(b_codes), i, j
    cdef i64* ac = <i64*> malloc((na + 1) * sizeof(i64))
    cdef i64* ad = <i64*> malloc((na + 1) * sizeof(i64))
    cdef i64* af = <i64*> malloc((na + 1) * sizeof(i64))
    cdef i64* bc = <i64*> malloc((nb + 1) * sizeof(i64))
    cdef i64* bd = <i64*> malloc((nb + 1) * sizeof(i64))
    cdef i64* bf = <i64*> malloc((nb + 1) * sizeof(i64))
    cdef unordered_map[i64, i64] out
    cdef unordered_map[i64, i64].iterator it
    try:
        if not (ac and ad and af and bc and bd and bf):
            raise MemoryError()
        for i in range(na):
            ac[i] = a_codes[i]; ad[i] = a_degs[i]; af[i] = a_coefs[i]
        for j in range(nb):
            bc[j] = b_codes[j]; bd[j] = b_degs[j]; bf[j] = b_coefs[j]
        with nogil:
            for i in range(na):
                if ad[i] > cap:
                    continue
                for j in range(nb):
                    if ad[i] + bd[j] <= cap:
                        out[ac[i] + bc[j]] += af[i] * bf[j]
        result = {}
        it = out.begin()
        while it != out.end():
            if deref(it).second != 0:
                result[deref(it).first] = deref(it).second
            inc(it)
        return result
    finally:
        free(ac); free(ad); free(af)
        free(bc); free(bd); free(bf)


def koszul(gens, int k, int cap, codes):
    cdef int ng = len(gens)
    cdef Py_ssize_t nm = len(codes), r
    cdef i64* G = NULL
    cdef i64* M = NULL
    cdef i64* buf = NULL
    cdef i64* res = NULL
    cdef i64 c, total
    cdef int s, nsupp, bits, b, size
    cdef int supp[64]
    cdef bint is_one
    if k > 62:
        raise ValueError("too many variables for the Koszul kernel")
    try:
        G = _pack(gens, k)
        M = <i64*> malloc((nm * k + 1) * sizeof(i64))
        buf = <i64*> calloc(k + 1, sizeof(i64))
        res = <i64*> calloc(nm + 1, sizeof(i64))
        if M == NULL or buf == NULL or res == NULL:
            raise MemoryError()
        for r in range(nm):
            c = codes[r]
            for s in range(k):
                M[r * k + s] = c % (cap + 1)
                c = c // (cap + 1)
        with nogil:
            for r in range(nm):
                nsupp = 0
                is_one = True
                for s in range(k):
                    if M[r * k + s] > 0:
                        supp[nsupp] = s
                        nsupp += 1
                        is_one = False
                total = 1 if is_one else 0
                for bits in range(1 << nsupp):
                    size = 0
                    for s in range(k):
                        buf[s] = M[r * k + s]
                    for b in range(nsupp):
                        if bits & (1 << b):
                            buf[supp[b]] -= 1
                            size += 1
                    if _member(G, ng, k, buf):
                        total += 1 if size % 2 == 1 else -1
                res[r] = total
        return [res[r] for r in range(nm)]
    finally:
        free(G)
        free(M)
        free(buf)
        free(res)
