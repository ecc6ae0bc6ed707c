"""The numba and numpy kernel backends must agree bit for bit."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from minplus import _backend
from minplus import _kernels_numpy as knp

knb = pytest.importorskip("minplus._kernels_numba")


def random_pair(rng, m, n, eps_prob=0.3, lo=-100, hi=100):
    values = rng.integers(lo, hi + 1, size=(m, n)).astype(np.int64)
    finite = rng.random((m, n)) >= eps_prob
    values[~finite] = 0
    return values, finite


class TestMatmulEquivalence:
    def test_random_shapes(self):
        rng = np.random.default_rng(401)
        for _ in range(60):
            m, n, p = (int(x) for x in rng.integers(1, 8, size=3))
            av, am = random_pair(rng, m, n)
            bv, bm = random_pair(rng, n, p)
            cv1, cm1, ok1 = knp.matmul(av, am, bv, bm)
            cv2, cm2, ok2 = knb.matmul(av, am, bv, bm)
            assert bool(ok1) and bool(ok2)
            assert np.array_equal(cm1, cm2)
            assert np.array_equal(cv1, cv2)

    def test_all_epsilon(self):
        av = np.zeros((3, 3), dtype=np.int64)
        am = np.zeros((3, 3), dtype=bool)
        for kern in (knp, knb):
            cv, cm, ok = kern.matmul(av, am, av, am)
            assert bool(ok) and not cm.any() and not cv.any()

    def test_overflow_flag_agrees(self):
        big = np.array([[np.iinfo(np.int64).max, 0]], dtype=np.int64)
        mask = np.ones((1, 2), dtype=bool)
        col = np.array([[1], [0]], dtype=np.int64)
        colmask = np.ones((2, 1), dtype=bool)
        for kern in (knp, knb):
            _, _, ok = kern.matmul(big, mask, col, colmask)
            assert not bool(ok)

    def test_absorbed_huge_entries_are_fine(self):
        big = np.array([[np.iinfo(np.int64).max, 0]], dtype=np.int64)
        mask = np.ones((1, 2), dtype=bool)
        col = np.array([[0], [7]], dtype=np.int64)
        colmask = np.array([[False], [True]], dtype=bool)
        for kern in (knp, knb):
            cv, cm, ok = kern.matmul(big, mask, col, colmask)
            assert bool(ok) and cm[0, 0] and cv[0, 0] == 7


def _norm_scan(result):
    d1, have1, d2, have2, ok = result
    return (int(d1) if have1 else None, int(d2) if have2 else None, bool(ok))


class TestBidetEquivalence:
    def test_random_small(self):
        rng = np.random.default_rng(402)
        for _ in range(80):
            n = int(rng.integers(1, 7))
            av, am = random_pair(rng, n, n)
            assert _norm_scan(knp.bidet_scan(av, am)) == _norm_scan(knb.bidet_scan(av, am))

    def test_epsilon_heavy(self):
        rng = np.random.default_rng(403)
        for _ in range(40):
            n = int(rng.integers(1, 6))
            av, am = random_pair(rng, n, n, eps_prob=0.8)
            assert _norm_scan(knp.bidet_scan(av, am)) == _norm_scan(knb.bidet_scan(av, am))

    def test_overflow_flag_agrees(self):
        top = np.iinfo(np.int64).max
        av = np.array([[top, 0], [0, top]], dtype=np.int64)
        am = np.ones((2, 2), dtype=bool)
        for kern in (knp, knb):
            assert not bool(kern.bidet_scan(av, am)[4])

    def test_numpy_chunked_enumeration(self):
        # n=8 has 40320 permutations, crossing the numpy batch size twice
        assert math.factorial(8) > 2 * knp._PERM_CHUNK
        rng = np.random.default_rng(404)
        av, am = random_pair(rng, 8, 8)
        assert _norm_scan(knp.bidet_scan(av, am)) == _norm_scan(knb.bidet_scan(av, am))


class TestSelection:
    def test_explicit_choices(self):
        assert _backend.load_backend("numpy").NAME == "numpy"
        assert _backend.load_backend("numba").NAME == "numba"
        assert _backend.load_backend("auto").NAME == "numba"  # numba is installed here

    def test_invalid_choice(self):
        with pytest.raises(ValueError):
            _backend.load_backend("cython")

    def test_env_flag_forces_numpy(self, fixtures_dir):
        env = dict(os.environ, MINPLUS_BACKEND="numpy")
        code = (
            "import minplus; print(minplus.backend_name()); "
            "a = minplus.load_matrix(r'%s').matrix; "
            "print(minplus.format_matrix(minplus.power(a, 4)) == "
            "minplus.format_matrix(minplus.load_matrix(r'%s').matrix))"
            % (fixtures_dir / "p34_A.txt", fixtures_dir / "p34_pow4.txt")
        )
        result = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        assert result.returncode == 0, result.stderr
        assert result.stdout.split() == ["numpy", "True"]

    def test_env_flag_rejects_unknown(self):
        env = dict(os.environ, MINPLUS_BACKEND="fortran")
        result = subprocess.run(
            [sys.executable, "-c", "import minplus"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert result.returncode != 0
        assert "MINPLUS_BACKEND" in result.stderr
