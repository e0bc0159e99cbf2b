# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as :mod:`eqmotive._pykernels`."""

cdef enum:
    MAXN = 6
    MAXM = 9


cdef int _rank(int rows[MAXN][MAXM], int nrows, int ncols, int p) noexcept nogil:
    cdef int work[MAXN][MAXM]
    cdef int i, j, col, r = 0, piv, f, inv, tmp
    for i in range(nrows):
        for j in range(ncols):
            work[i][j] = rows[i][j]
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if work[i][col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = work[r][j]
                work[r][j] = work[piv][j]
                work[piv][j] = tmp
        inv = 1  # p is tiny, so search for the inverse
        while (work[r][col] * inv) % p != 1:
            inv += 1
        for j in range(ncols):
            work[r][j] = (work[r][j] * inv) % p
        for i in range(nrows):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                for j in range(ncols):
                    work[i][j] = ((work[i][j] - f * work[r][j]) % p + p) % p
        r += 1
    return r


def rank_mod_p(rows, int p):
    cdef int mat[MAXN][MAXM]
    cdef int i, j, nrows = len(rows), ncols
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    if nrows > MAXN or ncols > MAXM:
        from ._pykernels import rank_mod_p as slow
        return slow(rows, p)
    for i in range(nrows):
        for j in range(ncols):
            mat[i][j] = rows[i][j] % p
    return _rank(mat, nrows, ncols, p)


def profile_histogram(int n, int m, int p, prefix=()):
    if n > MAXN or m > MAXM:
        from ._pykernels import profile_histogram as slow
        return slow(n, m, p, prefix)
    cdef int mat[MAXN][MAXM]
    cdef int sub[MAXN][MAXM]
    cdef int key[64]
    cdef int t = len(prefix)
    cdef int nmask = (1 << n) - 1
    cdef long long total = 1, it
    cdef int i, j, s, cnt, code
    for i in range(n - t):
        for j in range(m):
            total *= p
    for i in range(n):
        for j in range(m):
            mat[i][j] = 0
    for i in range(t):
        code = prefix[i]
        for j in range(m):
            mat[i][j] = code % p
            code //= p
    hist = {}
    for it in range(total):
        for s in range(1, nmask + 1):
            cnt = 0
            for i in range(n):
                if (s >> i) & 1:
                    for j in range(m):
                        sub[cnt][j] = mat[i][j]
                    cnt += 1
            key[s - 1] = _rank(sub, cnt, m, p)
        kt = tuple([key[s] for s in range(nmask)])
        hist[kt] = hist.get(kt, 0) + 1
        # odometer over the free rows; digit order matches base-p row codes
        i = t
        j = 0
        while i < n:
            mat[i][j] += 1
            if mat[i][j] < p:
                break
            mat[i][j] = 0
            j += 1
            if j == m:
                j = 0
                i += 1
    return hist
