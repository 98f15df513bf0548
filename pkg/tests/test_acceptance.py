"""
Exit criteria.  Every check is exact (rational or bitwise arithmetic); the
only numeric thresholds are wall-clock budgets.  Each test records a
PASS/FAIL line that is printed in the terminal summary.
"""

import io
import json
import random
import time
from contextlib import contextmanager
from math import comb

import sympy
from conftest import ACCEPTANCE_RESULTS

from balfam import SetFamily
from balfam.balancer import (
    BALANCED,
    UNION,
    BalanceCertificate,
    build_T,
    extended_incidence,
    find_balanced_general,
    find_balanced_uniform,
    find_union_balanced,
    in_subspace_V,
    verify_certificate,
)
from balfam.cli import run
from balfam.family import format_family, gen_nonuniform_sharp, gen_uniform_sharp, mask_of, popcount
from balfam.linalg import RationalMatrix, kernel_dimension, kernel_vector, rank
from balfam.oracle import brute_force_find
from balfam.search import scan_conjecture, scan_theorem


@contextmanager
def criterion(num, label):
    ACCEPTANCE_RESULTS[num] = (False, label)
    yield
    ACCEPTANCE_RESULTS[num] = (True, label)


def cli(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue()


def test_c01_theorem3_exhaustive():
    with criterion(1, "theorem3 scans (4,2) -> 6 and (5,2) -> 210 families, no counterexample, < 10 s"):
        start = time.perf_counter()
        for n, k, expected in [(4, 2, 6), (5, 2, comb(10, 6))]:
            code, out = cli(["scan", "--kind", "theorem3", "--n", str(n), "--k", str(k)])
            report = json.loads(out)
            assert code == 0
            assert report["families_checked"] == expected
            assert report["counterexamples"] == []
        assert time.perf_counter() - start < 10


def _threshold_families(n, pool, size):
    from itertools import combinations
    return [SetFamily(n, c) for c in combinations(pool, size)]


def test_c02_theorem2_exhaustive():
    with criterion(2, "all 56 size-5 families on [3] balanced by oracle and general finder, < 10 s"):
        start = time.perf_counter()
        fams = _threshold_families(3, range(8), 5)
        assert len(fams) == 56
        for f in fams:
            assert brute_force_find(f, BALANCED).found is not None
            assert verify_certificate(f, find_balanced_general(f))
        assert scan_theorem("theorem2", 3).counterexamples == ()
        assert time.perf_counter() - start < 10


def test_c03_theorem1_exhaustive():
    with criterion(3, "all 35 size-4 nonempty families on [3] union-balanced by oracle and finder, < 10 s"):
        start = time.perf_counter()
        fams = _threshold_families(3, range(1, 8), 4)
        assert len(fams) == 35
        for f in fams:
            assert brute_force_find(f, UNION).found is not None
            cert = find_union_balanced(f)
            assert cert.mode == UNION and verify_certificate(f, cert)
        assert scan_theorem("theorem1", 3).counterexamples == ()
        assert time.perf_counter() - start < 10


def test_c04_sharpness():
    with criterion(4, "sharpness witnesses unbalanced for n in 3..10 / 2..10, union finder succeeds, < 30 s"):
        start = time.perf_counter()
        for n in range(3, 11):
            assert brute_force_find(gen_uniform_sharp(n), BALANCED).found is None
        for n in range(2, 11):
            f = gen_nonuniform_sharp(n)
            assert brute_force_find(f, BALANCED).found is None
            assert verify_certificate(f, find_union_balanced(f))
        assert time.perf_counter() - start < 30


def test_c05_rank_dimension():
    with criterion(5, "rank T(n,k) = n and kernel dimension n for n <= 16, 1 <= k <= n"):
        for n in range(1, 17):
            for k in range(1, n + 1):
                T = build_T(n, k)
                assert T.shape == (n, 2 * n)
                assert rank(T) == n
                assert kernel_dimension(T) == n


def test_c06_V_membership():
    with criterion(6, "V-membership iff |A| = k for all A in 2^[n], n <= 10"):
        for n in range(1, 11):
            vectors = [(popcount(a), extended_incidence(a, n)) for a in range(1 << n)]
            for k in range(1, n + 1):
                for size, v in vectors:
                    assert in_subspace_V(v, n, k) == (size == k)


def _random_uniform(rnd, n, k):
    masks = set()
    while len(masks) < n + 1:
        masks.add(mask_of(rnd.sample(range(1, n + 1), k)))
    return SetFamily(n, tuple(rnd.sample(sorted(masks), n + 1)))


def test_c07_randomized_soundness():
    with criterion(7, "1000 random k-uniform families (n <= 16, m = n+1): certificates verify, oracle agrees for m <= 12"):
        rnd = random.Random(20261016)
        choices = [(n, k) for n in range(4, 17) for k in range(1, n) if comb(n, k) >= n + 1]
        failures = 0
        for _ in range(1000):
            n, k = rnd.choice(choices)
            f = _random_uniform(rnd, n, k)
            cert = find_balanced_uniform(f)
            ok = bool(cert.i1) and bool(cert.i2) and verify_certificate(f, cert)
            if ok and len(f) <= 12:
                ok = brute_force_find(f, BALANCED).found is not None
            failures += not ok
        assert failures == 0


def test_c08_kernel_exactness():
    with criterion(8, "1000 random integer matrices: exact zero kernel, rank-nullity, determinism"):
        rnd = random.Random(8)
        for _ in range(1000):
            r, c = rnd.randint(1, 8), rnd.randint(1, 12)
            rows = [[rnd.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            m = RationalMatrix(rows)
            x = kernel_vector(m)
            rk = rank(m)
            assert rk == sympy.Matrix(rows).rank()
            assert kernel_dimension(m) == c - rk
            if x is None:
                assert rk == c
            else:
                assert any(x) and all(v == 0 for v in m.dot(x))
            assert kernel_vector(RationalMatrix(rows)) == x


def test_c09_conjecture_scan():
    with criterion(9, "conjecture scans n=4 and n=5 with no counterexample, n=5 < 60 s"):
        code, out = cli(["scan", "--kind", "conjecture", "--n", "4"])
        assert code == 0 and json.loads(out)["counterexamples"] == []
        start = time.perf_counter()
        code, out = cli(["scan", "--kind", "conjecture", "--n", "5"])
        assert code == 0 and json.loads(out)["counterexamples"] == []
        assert time.perf_counter() - start < 60
        assert scan_conjecture(5).families_checked == 1380


def test_c10_cli_round_trip(tmp_path):
    with criterion(10, "gen -> find -> verify exits 0 for every mode at n = 6; brute on witnesses exits 1"):
        n = "6"
        pipelines = {
            "uniform": (["gen", "--kind", "complete-uniform", "--n", n, "--k", "2"], ""),
            "general": (["gen", "--kind", "complete-uniform", "--n", n, "--k", "3"], ""),
            "union": (["gen", "--kind", "nonuniform-sharp", "--n", n], ""),
        }
        # one member past each sharp bound
        augmented = {
            "uniform": (["gen", "--kind", "uniform-sharp", "--n", n], "4,5\n"),
            "general": (["gen", "--kind", "nonuniform-sharp", "--n", n], "-\n"),
        }
        runs = [(mode, argv, extra) for mode, (argv, extra) in pipelines.items()]
        runs += [(mode, argv, extra) for mode, (argv, extra) in augmented.items()]
        for i, (mode, gen_argv, extra) in enumerate(runs):
            code, fam_text = cli(gen_argv)
            assert code == 0
            fam_path = tmp_path / f"fam{i}.txt"
            fam_path.write_text(fam_text + extra)
            code, cert_text = cli(["find", "--mode", mode, "--input", str(fam_path)])
            assert code == 0, mode
            cert_path = tmp_path / f"cert{i}.json"
            cert_path.write_text(cert_text)
            code, _ = cli(["verify", "--family", str(fam_path), "--cert", str(cert_path)])
            assert code == 0, mode
            BalanceCertificate.from_json(json.loads(cert_text))
        for witness in (gen_uniform_sharp(6), gen_nonuniform_sharp(6)):
            code, out = cli(["brute", "--mode", "balanced"], format_family(witness))
            assert code == 1 and json.loads(out)["found"] is None
