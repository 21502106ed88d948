# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_kernels_py``.

Same signatures and results.  Entries are C ``long long``; callers route
anything that could overflow to the Python fallback (see ``kernels.py``).
"""
from libc.stdlib cimport malloc, free


def to_dominant(labels, cartan):
    cdef Py_ssize_t n = len(labels)
    cdef long long *c = <long long *> malloc(n * sizeof(long long))
    cdef long long *C = <long long *> malloc(n * n * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef long long cj
    steps = []
    if c == NULL or C == NULL:
        free(c)
        free(C)
        raise MemoryError()
    try:
        for i in range(n):
            c[i] = labels[i]
            for j in range(n):
                C[i * n + j] = cartan[i][j]
        while True:
            j = 0
            while j < n and c[j] >= 0:
                j += 1
            if j == n:
                break
            cj = c[j]
            for i in range(n):
                c[i] -= cj * C[j * n + i]
            steps.append(j)
        return tuple([c[i] for i in range(n)]), steps
    finally:
        free(c)
        free(C)


def orbit(labels, cartan, Py_ssize_t cap):
    cdef Py_ssize_t n = len(labels)
    cdef long long *C = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *buf = <long long *> malloc(n * sizeof(long long))
    cdef Py_ssize_t i, j, k
    cdef long long cj
    if C == NULL or buf == NULL:
        free(C)
        free(buf)
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                C[i * n + j] = cartan[i][j]
        start = tuple(labels)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    buf[i] = c[i]
                for j in range(n):
                    cj = buf[j]
                    if cj == 0:
                        continue
                    d = tuple([buf[k] - cj * C[j * n + k] for k in range(n)])
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
                        if len(seen) > cap:
                            return None
            frontier = nxt
        return list(seen)
    finally:
        free(C)
        free(buf)


def additive_closure(vectors, seed):
    cdef Py_ssize_t m = len(vectors)
    cdef Py_ssize_t a, b, c
    index = {v: i for i, v in enumerate(vectors)}
    cdef Py_ssize_t dim = len(vectors[0]) if m else 0
    cdef char *member = <char *> malloc(m if m else 1)
    if member == NULL:
        raise MemoryError()
    try:
        for a in range(m):
            member[a] = 0
        work = []
        for a in seed:
            if not member[a]:
                member[a] = 1
                work.append(a)
        members = list(work)
        while work:
            a = work.pop()
            va = vectors[a]
            for b in list(members):
                vb = vectors[b]
                s = tuple([va[k] + vb[k] for k in range(dim)])
                got = index.get(s)
                if got is not None:
                    c = got
                    if not member[c]:
                        member[c] = 1
                        members.append(c)
                        work.append(c)
        return sorted(members)
    finally:
        free(member)
