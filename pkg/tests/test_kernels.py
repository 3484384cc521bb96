from itertools import combinations
import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sympart import kernels

from oracles import count_brute

IMPLS = [pytest.param(kernels.numpy_impl, id="numpy")]
if kernels.jit_impl is not None:
    IMPLS.append(pytest.param(kernels.jit_impl, id="numba"))


@pytest.mark.parametrize("impl", IMPLS)
@given(st.lists(st.integers(-1000, 1000), min_size=0, max_size=8))
@settings(max_examples=60, deadline=None)
def test_subset_sums_match_itertools(impl, ys):
    sums, signs = impl.signed_subset_sums(np.array(ys, dtype=np.int64))
    assert len(sums) == 2 ** len(ys)
    got = sorted(zip(sums.tolist(), signs.tolist()))
    want = sorted(
        (sum(c), (-1) ** (k + 1))
        for k in range(len(ys) + 1)
        for c in combinations(ys, k)
    )
    assert got == want


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("total, parts", [(1, 1), (5, 1), (5, 2), (7, 3), (6, 6), (12, 5)])
def test_compositions(impl, total, parts):
    K = impl.compositions(total, parts)
    assert K.shape == (math.comb(total - 1, parts - 1), parts)
    assert (K >= 1).all() and (K.sum(axis=1) == total).all()
    rows = [tuple(r) for r in K.tolist()]
    assert rows == sorted(set(rows))


@pytest.mark.parametrize("impl", IMPLS)
def test_compositions_empty(impl):
    assert impl.compositions(2, 3).shape == (0, 3)


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("d", [(1,), (1, 2), (2, 4), (3, 5, 7), (2, 2, 3)])
def test_denumerant_table(impl, d):
    table = impl.denumerant_table(np.array(d, dtype=np.int64), 40)
    assert table.tolist() == [count_brute(s, d) for s in range(41)]


@pytest.mark.skipif(kernels.jit_impl is None, reason="numba not installed")
def test_backends_agree_elementwise():
    J, N = kernels.jit_impl, kernels.numpy_impl
    y = np.array([5, -3, 11, 2, 0, 7], dtype=np.int64)
    for a, b in zip(J.signed_subset_sums(y), N.signed_subset_sums(y)):
        assert np.array_equal(a, b)
    assert np.array_equal(J.compositions(11, 4), N.compositions(11, 4))
    d = np.array([3, 5, 7], dtype=np.int64)
    assert np.array_equal(J.denumerant_table(d, 300), N.denumerant_table(d, 300))


def test_env_flag_selects_numpy():
    code = "from sympart import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, SYMPART_NO_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"


def test_numpy_backend_end_to_end():
    code = (
        "from sympart.cli import main; import sys;"
        "sys.exit(main(['t-poly', '--r', '4', '--json']) or main(['eval-p', '--n', '5', '--x', '1,1']))"
    )
    env = dict(os.environ, SYMPART_NO_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode == 0
    lines = out.stdout.split()
    assert lines[0] == '{"E1^4":"1/16","E1^2*E2":"1/8","E2^2":"1/48","E4":"-1/120"}'
    assert lines[1] == "-30"
