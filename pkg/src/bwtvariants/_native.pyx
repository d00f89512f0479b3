# cython: language_level=3
"""Compiled kernels. Mirrors the behaviour of ``_fallback`` exactly."""

from cpython cimport array
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

import array as _array_mod

BACKEND = "native"

cdef array.array _INT_TEMPLATE = _array_mod.array("i", [])


cdef inline int* _imalloc(size_t n) except NULL:
    cdef int* p = <int*> malloc(n * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


# ---------------------------------------------------------------------------
# suffix array (SA-IS)

cdef void _induce(const int* s, int n, int sigma, int* sa,
                  const unsigned char* is_s, const int* bucket, int* bptr,
                  const int* lms_seq, int nlms) noexcept:
    cdef int i, j, p, c, acc
    for i in range(n):
        sa[i] = -1
    acc = 0
    for c in range(sigma):
        acc += bucket[c]
        bptr[c] = acc - 1
    for i in range(nlms - 1, -1, -1):
        p = lms_seq[i]
        c = s[p]
        sa[bptr[c]] = p
        bptr[c] -= 1
    acc = 0
    for c in range(sigma):
        bptr[c] = acc
        acc += bucket[c]
    for p in range(n):
        j = sa[p] - 1
        if sa[p] > 0 and not is_s[j]:
            c = s[j]
            sa[bptr[c]] = j
            bptr[c] += 1
    acc = 0
    for c in range(sigma):
        acc += bucket[c]
        bptr[c] = acc - 1
    for p in range(n - 1, -1, -1):
        j = sa[p] - 1
        if sa[p] > 0 and is_s[j]:
            c = s[j]
            sa[bptr[c]] = j
            bptr[c] -= 1


cdef int _sais(const int* s, int n, int sigma, int* sa) except -1:
    # s[n-1] must be a unique smallest symbol 0.
    cdef int i, j, p, c, cur, prev, pidx, nlms, lab
    if n == 1:
        sa[0] = 0
        return 0
    if n == 2:
        sa[0] = 1
        sa[1] = 0
        return 0

    cdef unsigned char* is_s = <unsigned char*> malloc(n)
    cdef unsigned char* is_lms = <unsigned char*> malloc(n)
    cdef int* bucket = _imalloc(sigma)
    cdef int* bptr = _imalloc(sigma)
    cdef int* lms = _imalloc(n // 2 + 1)
    cdef int* names = NULL
    cdef int* reduced = NULL
    cdef int* sa1 = NULL
    if is_s == NULL or is_lms == NULL:
        raise MemoryError()
    try:
        memset(is_lms, 0, n)
        is_s[n - 1] = 1
        for i in range(n - 2, -1, -1):
            if s[i] < s[i + 1] or (s[i] == s[i + 1] and is_s[i + 1]):
                is_s[i] = 1
            else:
                is_s[i] = 0
        nlms = 0
        for i in range(1, n):
            if is_s[i] and not is_s[i - 1]:
                lms[nlms] = i
                nlms += 1
                is_lms[i] = 1
        memset(bucket, 0, sigma * sizeof(int))
        for i in range(n):
            bucket[s[i]] += 1

        _induce(s, n, sigma, sa, is_s, bucket, bptr, lms, nlms)

        names = _imalloc(n)
        cur = -1
        prev = -1
        for pidx in range(n):
            p = sa[pidx]
            if p <= 0 or not is_lms[p]:
                continue
            if prev == -1:
                cur += 1
            else:
                i = 0
                while True:
                    if s[prev + i] != s[p + i] or is_s[prev + i] != is_s[p + i]:
                        cur += 1
                        break
                    if i > 0 and (is_lms[prev + i] or is_lms[p + i]):
                        if not (is_lms[prev + i] and is_lms[p + i]):
                            cur += 1
                        break
                    i += 1
            names[p] = cur
            prev = p

        reduced = _imalloc(nlms)
        sa1 = _imalloc(nlms)
        for i in range(nlms):
            reduced[i] = names[lms[i]]
        if cur + 1 == nlms:
            for i in range(nlms):
                sa1[reduced[i]] = i
        else:
            _sais(reduced, nlms, cur + 1, sa1)
        # reuse the names buffer for the sorted LMS positions
        for i in range(nlms):
            names[i] = lms[sa1[i]]
        _induce(s, n, sigma, sa, is_s, bucket, bptr, names, nlms)
    finally:
        free(is_s)
        free(is_lms)
        free(bucket)
        free(bptr)
        free(lms)
        free(names)
        free(reduced)
        free(sa1)
    return 0


def suffix_array(data, int sigma):
    """Suffix array of ``data`` (ints in [1, sigma)). Returns array('i')."""
    cdef Py_ssize_t n = len(data)
    cdef array.array out = array.clone(_INT_TEMPLATE, n, zero=False)
    if n == 0:
        return out
    cdef int* s = _imalloc(n + 1)
    cdef int* sa = _imalloc(n + 1)
    cdef Py_ssize_t i
    cdef array.array adata
    try:
        if isinstance(data, _array_mod.array) and data.typecode == "i":
            adata = data
            memcpy(s, adata.data.as_ints, n * sizeof(int))
        else:
            for i in range(n):
                s[i] = data[i]
        s[n] = 0
        _sais(s, n + 1, sigma, sa)
        memcpy(out.data.as_ints, sa + 1, n * sizeof(int))
    finally:
        free(s)
        free(sa)
    return out


# ---------------------------------------------------------------------------
# omega order of all rotations of a collection

def conjugate_sort(seqs):
    """Sort every rotation of every sequence by the omega order.

    Returns flat positions into the plain concatenation of ``seqs``.
    """
    cdef Py_ssize_t k = len(seqs)
    cdef Py_ssize_t total = 0
    cdef int maxlen = 0
    cdef Py_ssize_t si, li
    for si in range(k):
        li = len(seqs[si])
        total += li
        if li > maxlen:
            maxlen = <int> li
    cdef array.array out = array.clone(_INT_TEMPLATE, total, zero=False)
    if total == 0:
        return out

    cdef int N = <int> total
    cdef int cntsize = N if N > 256 else 256
    if maxlen > cntsize:
        cntsize = maxlen
    cntsize += 2

    cdef unsigned char* data = <unsigned char*> malloc(N)
    cdef int* start_of = _imalloc(N)
    cdef int* off = _imalloc(N)
    cdef int* slen = _imalloc(N)
    cdef int* rank = _imalloc(N)
    cdef int* key2 = _imalloc(N)
    cdef int* order = _imalloc(N)
    cdef int* tmp = _imalloc(N)
    cdef int* newrank = _imalloc(N)
    cdef int* cnt = _imalloc(cntsize)
    if data == NULL:
        raise MemoryError()

    cdef int i, j, n, p, v, c, acc, lab, base, shift, distinct
    cdef const unsigned char* sp
    cdef bytes sbytes
    try:
        base = 0
        for i in range(k):
            sbytes = seqs[i]
            sp = sbytes
            n = <int> len(sbytes)
            for j in range(n):
                start_of[base + j] = base
                off[base + j] = j
                slen[base + j] = n
                data[base + j] = sp[j]
            base += n

        # dense initial ranks from the byte values
        memset(cnt, 0, 257 * sizeof(int))
        for p in range(N):
            cnt[data[p] + 1] += 1
        lab = -1
        for v in range(256):
            if cnt[v + 1] > 0:
                lab += 1
                cnt[v + 1] = lab
            else:
                cnt[v + 1] = 0
        for p in range(N):
            rank[p] = cnt[data[p] + 1]
        distinct = lab + 1

        shift = 1
        while shift < 2 * maxlen and distinct < N:
            for p in range(N):
                key2[p] = rank[start_of[p] + (off[p] + shift) % slen[p]]
            # stable LSD radix: by key2 then by rank
            memset(cnt, 0, (N + 1) * sizeof(int))
            for p in range(N):
                cnt[key2[p] + 1] += 1
            for v in range(1, N + 1):
                cnt[v] += cnt[v - 1]
            for p in range(N):
                tmp[cnt[key2[p]]] = p
                cnt[key2[p]] += 1
            memset(cnt, 0, (N + 1) * sizeof(int))
            for p in range(N):
                cnt[rank[p] + 1] += 1
            for v in range(1, N + 1):
                cnt[v] += cnt[v - 1]
            for i in range(N):
                p = tmp[i]
                order[cnt[rank[p]]] = p
                cnt[rank[p]] += 1
            lab = 0
            newrank[order[0]] = 0
            for i in range(1, N):
                if (rank[order[i]] != rank[order[i - 1]]
                        or key2[order[i]] != key2[order[i - 1]]):
                    lab += 1
                newrank[order[i]] = lab
            memcpy(rank, newrank, N * sizeof(int))
            distinct = lab + 1
            shift <<= 1

        # final order: rank, then sequence length (exponent rule), then position
        memset(cnt, 0, (maxlen + 2) * sizeof(int))
        for p in range(N):
            cnt[slen[p] + 1] += 1
        for v in range(1, maxlen + 2):
            cnt[v] += cnt[v - 1]
        for p in range(N):
            order[cnt[slen[p]]] = p
            cnt[slen[p]] += 1
        memset(cnt, 0, (N + 1) * sizeof(int))
        for p in range(N):
            cnt[rank[p] + 1] += 1
        for v in range(1, N + 1):
            cnt[v] += cnt[v - 1]
        for i in range(N):
            p = order[i]
            tmp[cnt[rank[p]]] = p
            cnt[rank[p]] += 1
        memcpy(out.data.as_ints, tmp, N * sizeof(int))
    finally:
        free(data)
        free(start_of)
        free(off)
        free(slen)
        free(rank)
        free(key2)
        free(order)
        free(tmp)
        free(newrank)
        free(cnt)
    return out


# ---------------------------------------------------------------------------
# shared-suffix detection over a sorted rotation order

cdef array.array _as_int_array(obj):
    if isinstance(obj, _array_mod.array) and obj.typecode == "i":
        return obj
    return _array_mod.array("i", obj)


def shared_suffix_mask(bytes collapsed, sa, ulen):
    """mask[r] == 1 iff sorted rows r and r+1 begin with the same string
    suffix followed by a separator."""
    cdef array.array asa = _as_int_array(sa)
    cdef array.array aul = _as_int_array(ulen)
    cdef Py_ssize_t m = len(asa)
    if m == 0:
        return b""
    cdef const unsigned char* text = collapsed
    cdef const int* psa = asa.data.as_ints
    cdef const int* pul = aul.data.as_ints
    cdef bytearray mask = bytearray(m - 1)
    cdef Py_ssize_t r
    cdef int a, b, la, t, ok
    for r in range(m - 1):
        a = psa[r]
        b = psa[r + 1]
        la = pul[a]
        if la != pul[b]:
            continue
        ok = 1
        for t in range(la):
            if text[a + t] != text[b + t]:
                ok = 0
                break
        if ok:
            mask[r] = 1
    return bytes(mask)


# ---------------------------------------------------------------------------
# feasibility census of concatenation dollar orders

cdef inline int _next_perm(int* a, int n) noexcept:
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return 0
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return 1


def feasible_image_size(int k):
    """Number of distinct dollar-order permutations reachable over all k!
    input orders of the concatenation variant."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1
    if k > 11:
        raise ValueError("census supported for k <= 11")

    cdef unsigned long long fact = 1
    cdef int i, j
    for i in range(2, k + 1):
        fact *= i
    cdef size_t nbytes = <size_t> ((fact + 7) // 8)
    cdef unsigned char* bits = <unsigned char*> malloc(nbytes)
    cdef int* rho = _imalloc(k)
    cdef int* rinv = _imalloc(k + 1)
    cdef int* pi_inv = _imalloc(k + 1)
    if bits == NULL:
        raise MemoryError()
    cdef int r1, rk, phi, f, smaller, going
    cdef unsigned long long lehmer, count
    cdef size_t bi
    cdef unsigned int v
    try:
        memset(bits, 0, nbytes)
        for i in range(k):
            rho[i] = i + 1
        going = 1
        while going:
            for i in range(k):
                rinv[rho[i]] = i + 1
            r1 = rho[0]
            rk = rho[k - 1]
            pi_inv[rk] = 1
            for i in range(1, k + 1):
                if i == rk:
                    continue
                phi = rho[rinv[i]]  # successor of i along rho
                f = phi if phi < r1 else phi - 1
                pi_inv[i] = f + 1
            # Lehmer rank of pi_inv[1..k]
            lehmer = 0
            for i in range(1, k + 1):
                smaller = 0
                for j in range(i + 1, k + 1):
                    if pi_inv[j] < pi_inv[i]:
                        smaller += 1
                lehmer = lehmer * (k - i + 1) + smaller
            bits[lehmer >> 3] |= <unsigned char> (1 << (lehmer & 7))
            going = _next_perm(rho, k)
        count = 0
        for bi in range(nbytes):
            v = bits[bi]
            while v:
                v &= v - 1
                count += 1
    finally:
        free(bits)
        free(rho)
        free(rinv)
        free(pi_inv)
    return count


# ---------------------------------------------------------------------------
# distances

def hamming(bytes a, bytes b):
    if len(a) != len(b):
        raise ValueError("hamming distance needs equal lengths")
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    cdef Py_ssize_t i, n = len(a)
    cdef Py_ssize_t d = 0
    for i in range(n):
        if pa[i] != pb[i]:
            d += 1
    return d


def edit_distance(bytes a, bytes b):
    """Levenshtein distance, two-row dynamic program."""
    if a == b:
        return 0
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef const unsigned char* pa = a
    cdef const unsigned char* pb = b
    while i < la and i < lb and pa[i] == pb[i]:
        i += 1
    while j < la - i and j < lb - i and pa[la - 1 - j] == pb[lb - 1 - j]:
        j += 1
    pa += i
    pb += i
    la -= i + j
    lb -= i + j
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:
        pa, pb = pb, pa
        la, lb = lb, la
    cdef int* prev = _imalloc(lb + 1)
    cdef int* cur = _imalloc(lb + 1)
    cdef int* swap
    cdef Py_ssize_t r, c
    cdef int sub, best
    try:
        for c in range(lb + 1):
            prev[c] = <int> c
        for r in range(1, la + 1):
            cur[0] = <int> r
            for c in range(1, lb + 1):
                sub = prev[c - 1] + (1 if pa[r - 1] != pb[c - 1] else 0)
                best = prev[c] + 1
                if cur[c - 1] + 1 < best:
                    best = cur[c - 1] + 1
                if sub < best:
                    best = sub
                cur[c] = best
            swap = prev
            prev = cur
            cur = swap
        best = prev[lb]
    finally:
        free(prev)
        free(cur)
    return best
