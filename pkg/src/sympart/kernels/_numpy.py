"""Pure-numpy kernels. Output is identical, element for element, to ``_jit``."""

from functools import lru_cache

import numpy as np


def signed_subset_sums(y):
    """All 2**m subset sums of ``y`` and their inclusion-exclusion signs.

    Index ``mask`` holds the subset whose bit ``j`` selects ``y[j]``; the sign
    is ``(-1)**(|S|+1)``, so the empty subset carries -1.
    """
    y = np.asarray(y, dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    signs = np.full(1, -1, dtype=np.int8)
    for v in y:
        sums = np.concatenate((sums, sums + v))
        signs = np.concatenate((signs, -signs))
    return sums, signs


@lru_cache(maxsize=64)
def _compositions_cached(total, parts):
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = []
    for first in range(1, total - parts + 2):
        rest = _compositions_cached(total - first, parts - 1)
        head = np.full((rest.shape[0], 1), first, dtype=np.int64)
        blocks.append(np.hstack((head, rest)))
    return np.vstack(blocks)


def compositions(total, parts):
    """Compositions of ``total`` into ``parts`` positive parts, lexicographic order."""
    if parts < 1 or total < parts:
        return np.zeros((0, max(parts, 0)), dtype=np.int64)
    return _compositions_cached(int(total), int(parts)).copy()


def denumerant_table(d, s_max):
    """``out[s]`` = number of nonnegative solutions of ``sum t_i d_i = s``."""
    out = np.zeros(s_max + 1, dtype=np.int64)
    out[0] = 1
    for di in np.asarray(d, dtype=np.int64):
        di = int(di)
        for res in range(min(di, s_max + 1)):
            out[res::di] = np.cumsum(out[res::di])
    return out
