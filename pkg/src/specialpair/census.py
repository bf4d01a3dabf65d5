"""Exhaustive census of integer pairs and the sieve-pipeline experiments.

The census classifies every ordered pair (alpha, beta) with
``1 < |alpha|, |beta| <= N`` and writes one CSV row per pair in row-major
order.  Rows are computed per alpha by a process pool and merged in order,
so output does not depend on ``jobs``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from .arith import mult_order, primes_in_range, squarefree_kernel, val_of_power_minus_one
from .criterion import (
    CLASS_NAMES,
    DEFAULT_Q_BOUND,
    NONSPECIAL_SAMEFIELD,
    NONSPECIAL_SQUARE,
    SPECIAL,
    UNDETERMINED,
    CriterionWitness,
    PairClass,
    PairClassifier,
    theorem1_check,
)
from .symbols import legendre

CSV_HEADER = ("alpha", "beta", "class", "witness_q", "witness_k", "primes_tried", "micros")
SUMMARY_KEYS = (
    "n",
    "total_pairs",
    "special",
    "nonspecial_square",
    "nonspecial_samefield",
    "undetermined",
    "max_witness_q",
    "nonspecial_ratio",
)


@dataclass(frozen=True)
class CensusRecord:
    alpha: int
    beta: int
    cls: PairClass
    micros: Optional[int] = None

    @property
    def witness_q(self) -> Optional[int]:
        return self.cls.witness.q if self.cls.witness else None

    @property
    def primes_tried(self) -> int:
        return self.cls.primes_tried

    def csv_fields(self) -> list:
        w = self.cls.witness
        return [
            self.alpha,
            self.beta,
            self.cls.kind,
            "" if w is None else w.q,
            "" if w is None else w.k,
            self.cls.primes_tried,
            "" if self.micros is None else self.micros,
        ]


@dataclass
class CensusSummary:
    n: int
    total_pairs: int = 0
    special: int = 0
    nonspecial_square: int = 0
    nonspecial_samefield: int = 0
    undetermined: int = 0
    max_witness_q: Optional[int] = None

    @property
    def nonspecial(self) -> int:
        return self.nonspecial_square + self.nonspecial_samefield

    @property
    def nonspecial_ratio(self) -> float:
        return self.nonspecial / (self.n**1.5 * math.log(self.n))

    def add(self, kind: str, witness_q: Optional[int]) -> None:
        self.total_pairs += 1
        setattr(self, kind, getattr(self, kind) + 1)
        if witness_q is not None and (self.max_witness_q is None or witness_q > self.max_witness_q):
            self.max_witness_q = witness_q

    def to_dict(self) -> dict:
        return {key: getattr(self, key) for key in SUMMARY_KEYS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def census_values(n: int) -> list[int]:
    """The integers x with 1 < |x| <= n, ascending."""
    return [x for x in range(-n, n + 1) if abs(x) > 1]


def _classify_row(args: tuple[int, int, int, bool, Optional[int]]) -> list[tuple]:
    alpha, n, q_bound, timing, after_beta = args
    classifier = PairClassifier(alpha, q_bound)
    out = []
    clock = time.perf_counter_ns
    for beta in census_values(n):
        if after_beta is not None and beta <= after_beta:
            continue
        t0 = clock() if timing else 0
        cls = classifier.classify(beta)
        micros = (clock() - t0) // 1000 if timing else None
        w = cls.witness
        if w is not None and (pow(alpha, 2 * w.k, w.q**w.e) - beta) % w.q**w.e:
            raise AssertionError(f"witness for ({alpha}, {beta}) fails to re-verify")
        out.append((beta, cls, micros))
    return out


def iter_census(
    n: int,
    q_bound: int = DEFAULT_Q_BOUND,
    jobs: int = 1,
    timing: bool = True,
    start_after: Optional[tuple[int, int]] = None,
) -> Iterator[CensusRecord]:
    """Yield census records in row-major (alpha, beta) order.

    ``start_after`` skips every pair up to and including the given one.
    """
    if n < 2:
        raise ValueError("N must be at least 2")
    if q_bound < 3:
        raise ValueError("q_bound must be at least 3")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    alphas = census_values(n)
    tasks = []
    for alpha in alphas:
        after = None
        if start_after is not None:
            if alpha < start_after[0]:
                continue
            if alpha == start_after[0]:
                after = start_after[1]
        tasks.append((alpha, n, q_bound, timing, after))
    if jobs == 1:
        results: Iterable = map(_classify_row, tasks)
        for task, row in zip(tasks, results):
            for beta, cls, micros in row:
                yield CensusRecord(task[0], beta, cls, micros)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for task, row in zip(tasks, pool.map(_classify_row, tasks)):
            for beta, cls, micros in row:
                yield CensusRecord(task[0], beta, cls, micros)


def _read_resume(path: Path, n: int) -> tuple[CensusSummary, Optional[tuple[int, int]], int]:
    """Summary of the complete rows in a partial census CSV, the last pair, and
    the byte length of the complete prefix."""
    data = path.read_bytes()
    end = data.rfind(b"\n") + 1
    text = data[:end].decode()
    lines = text.splitlines()
    if not lines or tuple(lines[0].split(",")) != CSV_HEADER:
        raise ValueError(f"{path}: missing or invalid census header")
    summary = CensusSummary(n)
    values = census_values(n)
    pos = {x: i for i, x in enumerate(values)}
    last = None
    for count, row in enumerate(csv.reader(lines[1:])):
        if len(row) != len(CSV_HEADER) or row[2] not in CLASS_NAMES:
            raise ValueError(f"{path}: malformed row {count + 2}: {row}")
        alpha, beta = int(row[0]), int(row[1])
        if alpha not in pos or beta not in pos or pos[alpha] * len(values) + pos[beta] != count:
            raise ValueError(f"{path}: row {count + 2} is out of order for N={n}")
        summary.add(row[2], int(row[3]) if row[3] else None)
        last = (alpha, beta)
    return summary, last, end


def run_census(
    n: int,
    q_bound: int = DEFAULT_Q_BOUND,
    jobs: int = 1,
    out: Optional[os.PathLike | str] = None,
    resume_from: Optional[os.PathLike | str] = None,
    timing: bool = True,
    on_record=None,
) -> CensusSummary:
    """Run the census, writing CSV rows to ``out`` and returning the summary.

    With ``resume_from`` the partial CSV at that path is validated, trimmed
    to its last complete row and extended in place (``out`` is ignored).
    ``on_record`` is called with each newly computed :class:`CensusRecord`.
    """
    start_after = None
    if resume_from is not None:
        path = Path(resume_from)
        summary, start_after, end = _read_resume(path, n)
        with open(path, "r+b") as fh:
            fh.truncate(end)
        fh = open(path, "a", newline="")
    else:
        summary = CensusSummary(n)
        fh = open(out, "w", newline="") if out is not None else None
        if fh is not None:
            fh.write(",".join(CSV_HEADER) + "\n")
    writer = csv.writer(fh, lineterminator="\n") if fh is not None else None
    buffered: list = []
    try:
        for rec in iter_census(n, q_bound, jobs, timing, start_after):
            summary.add(rec.cls.kind, rec.witness_q)
            if writer is not None:
                buffered.append(rec.csv_fields())
                if len(buffered) >= 4096:
                    writer.writerows(buffered)
                    buffered.clear()
            if on_record is not None:
                on_record(rec)
    finally:
        # on interruption the rows computed so far stay resumable
        if writer is not None:
            writer.writerows(buffered)
        if fh is not None:
            fh.close()
    return summary


def records_to_csv(records: Iterable[CensusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_fields())
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Counting non-special pairs from squarefree kernels alone


def kernel_nonspecial(alpha: int, beta: int) -> bool:
    """The necessary conditions fail: alpha is a square or both share a kernel."""
    ka = squarefree_kernel(alpha)
    return ka == 1 or ka == squarefree_kernel(beta)


@dataclass(frozen=True)
class ShapeRow:
    n: int
    nonspecial_count: int
    ratio: float
    square_alpha_pairs: int


def nonspecial_shape_statistic(n_grid: Sequence[int]) -> list[ShapeRow]:
    """Non-special pair counts and their ratio to N**1.5 * log N.

    ``square_alpha_pairs`` is the number of pairs whose alpha is a perfect
    square, i.e. (isqrt(N) - 1) * (2N - 2).
    """
    rows = []
    for n in n_grid:
        if n < 4:
            raise ValueError("each N must be at least 4")
        values = census_values(n)
        kernels = Counter(squarefree_kernel(x) for x in values)
        squares = kernels.get(1, 0)
        count = squares * len(values) + sum(c * c for d, c in kernels.items() if d != 1)
        rows.append(
            ShapeRow(
                n=n,
                nonspecial_count=count,
                ratio=count / (n**1.5 * math.log(n)),
                square_alpha_pairs=(math.isqrt(n) - 1) * (2 * n - 2),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# Sieve pipeline: Hypothesis 1, primitive-root sets, Wieferich filter


@dataclass(frozen=True)
class HypothesisReport:
    beta: int
    n: int
    qualifying_primes: int
    threshold: float
    passes: bool


@dataclass(frozen=True)
class PipelineReport:
    alpha: int
    beta: int
    n: int
    p_alpha_size: int
    wieferich_ok_q: Optional[int]
    special_via_pipeline: bool
    witness: Optional[CriterionWitness] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.witness is None:
            d["witness"] = None
        return d


def sieve_window(n: int) -> list[int]:
    """Primes q with sqrt(N)/2 < q <= sqrt(N)."""
    if n < 16:
        raise ValueError("N must be at least 16")
    r = math.isqrt(n)
    return list(primes_in_range(r // 2, r))


def hypothesis_threshold(n: int) -> float:
    return 0.25 * math.sqrt(n) / math.log(n)


def hypothesis1_scan(n: int, betas: Iterable[int]) -> list[HypothesisReport]:
    """Count primes q in the window with (beta/q) = 1 against sqrt(N) / (4 log N)."""
    window = sieve_window(n)
    threshold = hypothesis_threshold(n)
    reports = []
    for beta in betas:
        count = sum(1 for q in window if legendre(beta, q) == 1)
        reports.append(HypothesisReport(beta, n, count, threshold, count > threshold))
    return reports


def is_primitive_root(a: int, q: int) -> bool:
    if a % q == 0:
        return False
    return mult_order(a % q, q) == q - 1


def primitive_root_set(alpha: int, n: int, beta: int) -> list[int]:
    """Primes q in the window with (beta/q) = 1 and alpha a primitive root mod q."""
    for name, x in (("alpha", alpha), ("beta", beta)):
        if x in (-1, 0, 1):
            raise ValueError(f"{name} must not be 0 or +-1")
    return [q for q in sieve_window(n) if legendre(beta, q) == 1 and is_primitive_root(alpha, q)]


def pipeline_check(
    alpha: int, beta: int, n: int, primes: Optional[Iterable[int]] = None
) -> PipelineReport:
    """Look for q in P(alpha) with v_q(alpha**(q-1) - 1) = 1 and confirm the pair.

    ``primes`` replaces P(alpha) with an explicit candidate set.
    """
    candidates = primitive_root_set(alpha, n, beta) if primes is None else sorted(primes)
    for q in candidates:
        if val_of_power_minus_one(alpha, q - 1, q) != 1:
            continue
        witness = theorem1_check(alpha, beta, q)
        if witness is None:
            raise AssertionError(f"q={q} passed the pipeline filter but fails the criterion")
        return PipelineReport(alpha, beta, n, len(candidates), q, True, witness)
    return PipelineReport(alpha, beta, n, len(candidates), None, False)
