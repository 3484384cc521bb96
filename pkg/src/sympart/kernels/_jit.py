"""numba kernels. Same contracts as ``_numpy``."""

import numpy as np
from numba import njit


@njit(cache=True)
def signed_subset_sums(y):
    m = y.shape[0]
    size = 1 << m
    sums = np.zeros(size, dtype=np.int64)
    signs = np.empty(size, dtype=np.int8)
    signs[0] = -1
    for mask in range(1, size):
        low = mask & -mask
        j = 0
        while (low >> j) != 1:
            j += 1
        prev = mask ^ low
        sums[mask] = sums[prev] + y[j]
        signs[mask] = -signs[prev]
    return sums, signs


@njit(cache=True)
def _count_compositions(total, parts):
    # C(total - 1, parts - 1)
    n = total - 1
    k = parts - 1
    if k > n - k:
        k = n - k
    c = 1
    for i in range(k):
        c = c * (n - i) // (i + 1)
    return c


@njit(cache=True)
def _compositions(total, parts):
    count = _count_compositions(total, parts)
    out = np.empty((count, parts), dtype=np.int64)
    k = np.ones(parts, dtype=np.int64)
    k[parts - 1] = total - parts + 1
    row = 0
    while True:
        out[row, :] = k
        row += 1
        # rightmost slot whose suffix can give up one unit
        suffix = k[parts - 1]
        i = parts - 2
        while i >= 0 and suffix - 1 < parts - 1 - i:
            suffix += k[i]
            i -= 1
        if i < 0:
            break
        k[i] += 1
        for l in range(i + 1, parts - 1):
            k[l] = 1
        k[parts - 1] = suffix - 1 - (parts - 2 - i)
    return out


def compositions(total, parts):
    """Compositions of ``total`` into ``parts`` positive parts, lexicographic order."""
    if parts < 1 or total < parts:
        return np.zeros((0, max(parts, 0)), dtype=np.int64)
    return _compositions(int(total), int(parts))


@njit(cache=True)
def _denumerant_table(d, s_max):
    out = np.zeros(s_max + 1, dtype=np.int64)
    out[0] = 1
    for di in d:
        for s in range(di, s_max + 1):
            out[s] += out[s - di]
    return out


def denumerant_table(d, s_max):
    """``out[s]`` = number of nonnegative solutions of ``sum t_i d_i = s``."""
    return _denumerant_table(np.asarray(d, dtype=np.int64), int(s_max))
