import math
import random

import pytest

from specialpair.census import (
    CSV_HEADER,
    SUMMARY_KEYS,
    hypothesis1_scan,
    hypothesis_threshold,
    is_primitive_root,
    iter_census,
    kernel_nonspecial,
    nonspecial_shape_statistic,
    pipeline_check,
    primitive_root_set,
    records_to_csv,
    run_census,
    sieve_window,
)
from specialpair.criterion import SPECIAL, classify_pair

from oracles import (
    census_values,
    is_prime_naive,
    kernel_naive,
    legendre_naive,
    nonspecial_count_naive,
    order_naive,
)

# (2, -2): q = 3, k = 0 since -2 = 1 mod 3 and (2/3) = -1.
# (-2, 2): q = 3 fails ((-2/3) = 1), q = 5 fails (2^2 != 1 mod 5),
#          q = 7 works with 4^2 = 2 mod 7.
N2_TABLE = """\
alpha,beta,class,witness_q,witness_k,primes_tried,micros
-2,-2,nonspecial_samefield,,,0,
-2,2,special,7,2,3,
2,-2,special,3,0,1,
2,2,nonspecial_samefield,,,0,
"""


def test_n2_fixture(tmp_path):
    out = tmp_path / "c.csv"
    summary = run_census(2, 100, 1, out=out, timing=False)
    assert out.read_text() == N2_TABLE
    assert summary.to_dict() == {
        "n": 2,
        "total_pairs": 4,
        "special": 2,
        "nonspecial_square": 0,
        "nonspecial_samefield": 2,
        "undetermined": 0,
        "max_witness_q": 7,
        "nonspecial_ratio": 2 / (2**1.5 * math.log(2)),
    }


@pytest.mark.parametrize("n", [2, 3, 7, 12])
def test_partition(n):
    s = run_census(n, 200, 1)
    assert s.special + s.nonspecial_square + s.nonspecial_samefield + s.undetermined == s.total_pairs
    assert s.total_pairs == (2 * n - 2) ** 2


def test_rows_match_classify_pair():
    rng = random.Random(1)
    records = list(iter_census(40, 10**4, timing=False))
    assert [(r.alpha, r.beta) for r in records] == [(a, b) for a in census_values(40) for b in census_values(40)]
    for rec in rng.sample(records, 1000):
        assert rec.cls == classify_pair(rec.alpha, rec.beta, 10**4)


def test_nonspecial_matches_kernel_predicate():
    for rec in iter_census(30, 10**4, timing=False):
        assert (rec.cls.kind != SPECIAL) == kernel_nonspecial(rec.alpha, rec.beta)


def test_timing_column_filled(tmp_path):
    out = tmp_path / "t.csv"
    run_census(3, 100, out=out)
    rows = out.read_text().splitlines()[1:]
    assert all(r.split(",")[-1].isdigit() for r in rows)


def test_records_to_csv_matches_file(tmp_path):
    out = tmp_path / "c.csv"
    run_census(5, 100, out=out, timing=False)
    assert records_to_csv(iter_census(5, 100, timing=False)) == out.read_text()


def test_parallel_matches_serial():
    serial = records_to_csv(iter_census(9, 10**4, jobs=1, timing=False))
    parallel = records_to_csv(iter_census(9, 10**4, jobs=3, timing=False))
    assert serial == parallel


def test_resume_rejects_bad_header(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b,c\n")
    with pytest.raises(ValueError):
        run_census(3, 100, resume_from=bad)


def test_resume_rejects_foreign_rows(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text(",".join(CSV_HEADER) + "\n5,5,special,3,0,1,\n")
    with pytest.raises(ValueError):
        run_census(3, 100, resume_from=bad)


@pytest.mark.parametrize("cut", [0, 1, 17, 40])
def test_resume_from_any_cut(tmp_path, cut):
    fresh = tmp_path / "fresh.csv"
    fresh_summary = run_census(6, 10**4, out=fresh, timing=False)
    data = fresh.read_bytes()
    lines = data.splitlines(keepends=True)
    partial = tmp_path / "partial.csv"
    # keep the header, `cut` rows, and half of the next row
    head = b"".join(lines[: cut + 1])
    partial.write_bytes(head + lines[cut + 1][:5])
    resumed = run_census(6, 10**4, resume_from=partial, timing=False)
    assert partial.read_bytes() == data
    assert resumed.to_dict() == fresh_summary.to_dict()


def test_invalid_arguments():
    with pytest.raises(ValueError):
        list(iter_census(1))
    with pytest.raises(ValueError):
        list(iter_census(5, q_bound=2))
    with pytest.raises(ValueError):
        list(iter_census(5, jobs=0))


def test_summary_keys():
    assert tuple(run_census(3, 100).to_dict()) == SUMMARY_KEYS


class TestShapeStatistic:
    def test_n4(self):
        (row,) = nonspecial_shape_statistic([4])
        # alpha = 4 is the only square: 1 * 6 pairs; kernels -1: {-4}, 2: {2}, -2: {-2},
        # 3: {3}, -3: {-3} each contribute one same-field pair
        assert row.square_alpha_pairs == 6
        assert row.nonspecial_count == nonspecial_count_naive(4) == 11

    @pytest.mark.parametrize("n", [10, 37, 64])
    def test_matches_enumeration(self, n):
        (row,) = nonspecial_shape_statistic([n])
        assert row.nonspecial_count == nonspecial_count_naive(n)

    def test_monotone_and_positive(self):
        rows = nonspecial_shape_statistic([4, 9, 20, 50, 100])
        counts = [r.nonspecial_count for r in rows]
        assert counts == sorted(counts)
        assert all(0 < r.ratio < math.inf for r in rows)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            nonspecial_shape_statistic([3])


class TestHypothesis1:
    def test_beta_two(self):
        (r,) = hypothesis1_scan(10**4, [2])
        # primes in (50, 100] that are +-1 mod 8: 71, 73, 79, 89, 97
        assert r.qualifying_primes == 5
        assert r.threshold == pytest.approx(25 / math.log(10**4))
        assert r.passes

    def test_beta_three(self):
        window = [q for q in range(51, 101) if is_prime_naive(q)]
        expected = sum(1 for q in window if legendre_naive(3, q) == 1)
        assert expected == 6
        (r,) = hypothesis1_scan(10**4, [3])
        assert r.qualifying_primes == 6 and r.passes

    @pytest.mark.parametrize("n", [16, 17, 99, 10**4, 12345, 10**6])
    def test_window_endpoints(self, n):
        root = math.sqrt(n)
        expected = [q for q in range(2, math.isqrt(n) + 1) if is_prime_naive(q) and root / 2 < q <= root]
        assert sieve_window(n) == expected

    @pytest.mark.parametrize("beta", [4, 9, 25, 49])
    def test_square_beta(self, beta):
        (r,) = hypothesis1_scan(10**6, [beta])
        window = sieve_window(10**6)
        assert r.qualifying_primes == sum(1 for q in window if beta % q)
        assert r.passes

    def test_threshold_arithmetic(self):
        for r in hypothesis1_scan(4000, range(-30, 31)):
            threshold = math.sqrt(4000) / 4 / math.log(4000)
            assert r.threshold == pytest.approx(threshold)
            assert r.passes == (r.qualifying_primes > threshold)
        assert hypothesis_threshold(10**4) == pytest.approx(2.71434, abs=1e-5)


class TestPipeline:
    def test_primitive_roots(self):
        assert is_primitive_root(2, 11)
        assert not is_primitive_root(2, 7)
        assert not is_primitive_root(22, 11)

    def test_square_alpha_empty(self):
        assert primitive_root_set(4, 10**4, 3) == []
        report = pipeline_check(4, 3, 10**4)
        assert report.p_alpha_size == 0 and not report.special_via_pipeline
        assert report.wieferich_ok_q is None

    def test_primitive_root_set_matches_enumeration(self):
        window = [q for q in range(51, 101) if is_prime_naive(q)]
        expected = [q for q in window if legendre_naive(3, q) == 1 and order_naive(2, q) == q - 1]
        assert primitive_root_set(2, 10**4, 3) == expected == [59, 61, 83]

    def test_two_three(self):
        report = pipeline_check(2, 3, 10**4)
        assert report.special_via_pipeline
        assert report.wieferich_ok_q == 59
        assert report.p_alpha_size == 3
        assert report.witness.q == 59

    def test_wieferich_exclusion(self):
        report = pipeline_check(2, 3, 10**4, primes=[1093])
        assert report.wieferich_ok_q is None
        assert not report.special_via_pipeline

    def test_consistent_with_classify_pair(self):
        for alpha in range(-30, 31):
            for beta in (-7, 2, 3, 5, 6, 10):
                if abs(alpha) < 2:
                    continue
                report = pipeline_check(alpha, beta, 10**4)
                if report.special_via_pipeline:
                    assert classify_pair(alpha, beta).kind == SPECIAL
