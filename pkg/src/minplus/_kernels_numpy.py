"""Pure-numpy kernels: the fallback backend.

A matrix is a pair of arrays (values: int64, finite: bool); entries with a
False mask are epsilon and carry a canonical 0 value.  Kernels return an
``ok`` flag instead of raising: False means a finite sum left the int64
range (checked left to right, so no wrapped value is ever kept).
"""

from __future__ import annotations

from itertools import islice, permutations

import numpy as np

NAME = "numpy"

I64_MIN = int(np.iinfo(np.int64).min)
I64_MAX = int(np.iinfo(np.int64).max)

_PERM_CHUNK = 20_000


def matmul(av, am, bv, bm):
    """Min-plus product of (av, am) @ (bv, bm); returns (cv, cm, ok)."""
    m, n = av.shape
    p = bv.shape[1]
    cv = np.zeros((m, p), dtype=np.int64)
    cm = np.zeros((m, p), dtype=bool)
    for i in range(m):
        a = av[i][:, None]
        fin = am[i][:, None] & bm
        # predicted overflow among finite pairs, before any wrapping add
        ovf = fin & (((bv > 0) & (a > I64_MAX - bv)) | ((bv < 0) & (a < I64_MIN - bv)))
        if ovf.any():
            return cv, cm, False
        sums = np.where(fin, a + bv, I64_MAX)
        found = fin.any(axis=0)
        cm[i] = found
        cv[i] = np.where(found, sums.min(axis=0), 0)
    return cv, cm, True


def bidet_scan(av, am):
    """Minimum assignment sum split by permutation parity.

    Returns (best_even, have_even, best_odd, have_odd, ok).  A term with
    any epsilon factor is absorbed and never contributes (nor overflows).
    """
    n = av.shape[0]
    rows = np.arange(n)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    best_even = 0
    have_even = False
    best_odd = 0
    have_odd = False
    stream = permutations(range(n))
    while True:
        batch = list(islice(stream, _PERM_CHUNK))
        if not batch:
            break
        idx = np.array(batch, dtype=np.int64)
        vals = av[rows, idx]
        full = am[rows, idx].all(axis=1)
        acc = np.zeros(len(batch), dtype=np.int64)
        for j in range(n):
            v = vals[:, j]
            ovf = full & (((v > 0) & (acc > I64_MAX - v)) | ((v < 0) & (acc < I64_MIN - v)))
            if ovf.any():
                return np.int64(0), False, np.int64(0), False, False
            acc = acc + v
        inversions = (idx[:, :, None] > idx[:, None, :])[:, upper].sum(axis=1)
        even = (inversions & 1) == 0
        for want_even in (True, False):
            sel = full & (even if want_even else ~even)
            if not sel.any():
                continue
            m = int(acc[sel].min())
            if want_even:
                if not have_even or m < best_even:
                    best_even, have_even = m, True
            else:
                if not have_odd or m < best_odd:
                    best_odd, have_odd = m, True
    return np.int64(best_even), have_even, np.int64(best_odd), have_odd, True
