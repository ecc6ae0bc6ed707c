"""Numba-jitted kernels: the default backend when numba is installed.

Same contracts as ``_kernels_numpy`` (see there); compiled with cache=True
so the first process pays the JIT cost once.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

I64_MIN = np.iinfo(np.int64).min
I64_MAX = np.iinfo(np.int64).max


@njit(cache=True)
def matmul(av, am, bv, bm):
    # i-j-k order walks bv row-wise; I64_MAX doubles as the running-min seed
    # (a genuine sum equal to I64_MAX still sets the mask via <=)
    m, n = av.shape
    p = bv.shape[1]
    cv = np.full((m, p), I64_MAX, dtype=np.int64)
    cm = np.zeros((m, p), dtype=np.bool_)
    for i in range(m):
        for j in range(n):
            if not am[i, j]:
                continue
            a = av[i, j]
            hi = I64_MAX - a if a > 0 else I64_MAX
            lo = I64_MIN - a if a < 0 else I64_MIN
            for k in range(p):
                if bm[j, k]:
                    b = bv[j, k]
                    if b > hi or b < lo:
                        return cv, cm, False
                    s = a + b
                    if s <= cv[i, k]:
                        cv[i, k] = s
                        cm[i, k] = True
    for i in range(m):
        for k in range(p):
            if not cm[i, k]:
                cv[i, k] = 0
    return cv, cm, True


@njit(cache=True)
def _assignment_sum(av, am, perm):
    # absorption first: a term with any epsilon factor is epsilon, full stop
    n = perm.shape[0]
    for i in range(n):
        if not am[i, perm[i]]:
            return np.int64(0), False, True
    total = np.int64(0)
    for i in range(n):
        v = av[i, perm[i]]
        if v > 0:
            if total > I64_MAX - v:
                return np.int64(0), False, False
        elif v < 0:
            if total < I64_MIN - v:
                return np.int64(0), False, False
        total += v
    return total, True, True


@njit(cache=True)
def bidet_scan(av, am):
    # Heap's order: every step is one transposition, so parity just flips
    n = av.shape[0]
    perm = np.arange(n)
    counts = np.zeros(n, dtype=np.int64)
    best_even = np.int64(0)
    have_even = False
    best_odd = np.int64(0)
    have_odd = False
    even = True

    value, finite, ok = _assignment_sum(av, am, perm)
    if not ok:
        return np.int64(0), False, np.int64(0), False, False
    if finite:
        best_even = value
        have_even = True

    i = 0
    while i < n:
        if counts[i] < i:
            if i % 2 == 0:
                t = perm[0]
                perm[0] = perm[i]
                perm[i] = t
            else:
                c = counts[i]
                t = perm[c]
                perm[c] = perm[i]
                perm[i] = t
            even = not even
            value, finite, ok = _assignment_sum(av, am, perm)
            if not ok:
                return np.int64(0), False, np.int64(0), False, False
            if finite:
                if even:
                    if not have_even or value < best_even:
                        best_even = value
                        have_even = True
                else:
                    if not have_odd or value < best_odd:
                        best_odd = value
                        have_odd = True
            counts[i] += 1
            i = 0
        else:
            counts[i] = 0
            i += 1
    return best_even, have_even, best_odd, have_odd, True
