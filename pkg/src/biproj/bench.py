"""Timing harness for the two projection routes."""

from __future__ import annotations

import csv
import gc
import io
import logging
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import UnsatisfiableSpec
from .generator import GenSpec, Model, generate
from .graph import BipartiteGraph, to_biadjacency
from .projection import project_matrix, project_sparse

log = logging.getLogger(__name__)

CSV_COLUMNS = ("algorithm", "n1", "n2", "m", "reps", "median_ns", "edges_out")
ALGORITHMS = ("MatrixScan", "SparseWedge")
MIN_REPS = 3


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n1: int
    n2: int
    m: int
    wall_time: int  # median over repetitions, nanoseconds
    peak_edges_out: int
    repetitions: int
    samples: tuple[int, ...] = ()

    def row(self) -> list:
        return [self.algorithm, self.n1, self.n2, self.m, self.repetitions, self.wall_time, self.peak_edges_out]


@dataclass
class BenchRun:
    records: list[BenchRecord] = field(default_factory=list)
    errors: list[tuple[int, int, str]] = field(default_factory=list)

    def median(self, algorithm: str, n1: int, n2: int) -> int:
        for r in self.records:
            if (r.algorithm, r.n1, r.n2) == (algorithm, n1, n2):
                return r.wall_time
        raise KeyError((algorithm, n1, n2))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            writer.writerow(r.row())
        return buf.getvalue()

    def loglog_slopes(self, algorithm: str = "MatrixScan") -> dict[int, float]:
        """Least-squares slope of log(time) against log(n1), per fixed n2."""
        by_n2: dict[int, list[BenchRecord]] = {}
        for r in self.records:
            if r.algorithm == algorithm:
                by_n2.setdefault(r.n2, []).append(r)
        slopes = {}
        for n2, recs in sorted(by_n2.items()):
            if len({r.n1 for r in recs}) < 2:
                continue
            x = np.log([r.n1 for r in recs])
            y = np.log([max(r.wall_time, 1) for r in recs])
            slopes[n2] = float(np.polyfit(x, y, 1)[0])
        return slopes


def time_call(fn: Callable[[], object], reps: int) -> tuple[int, list[int], object]:
    """Run ``fn`` ``reps`` times back to back; return (median ns, samples, last result).

    One untimed warm-up call precedes the measured repetitions.
    """
    if reps < MIN_REPS:
        raise ValueError(f"need at least {MIN_REPS} repetitions, got {reps}")
    samples = []
    result = fn()
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            result = fn()
            samples.append(time.perf_counter_ns() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    return int(statistics.median(samples)), samples, result


def _runner(g: BipartiteGraph, algorithm: str) -> Callable[[], object]:
    if algorithm == "MatrixScan":
        matrix = to_biadjacency(g)
        return lambda: project_matrix(matrix)
    if algorithm == "SparseWedge":
        return lambda: project_sparse(g)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def bench_graph(g: BipartiteGraph, reps: int, algorithms: Iterable[str] = ALGORITHMS) -> list[BenchRecord]:
    records = []
    for algo in algorithms:
        median, samples, proj = time_call(_runner(g, algo), reps)
        records.append(BenchRecord(algo, g.n1, g.n2, g.m, median, len(proj.edges), reps, tuple(samples)))
    return records


def run_bench(
    sizes: Sequence[tuple[int, int]],
    model: Model | Callable[[int, int], Model],
    reps: int = 5,
    seed: int = 0,
    algorithms: Iterable[str] = ALGORITHMS,
) -> BenchRun:
    """Time every algorithm on one seeded graph per size.

    ``model`` is either a fixed generator model or a factory called with
    (n1, n2) for each size. Generator failures are recorded per size and do
    not stop the run.

    Repetitions are interleaved: round r times every (size, algorithm) once
    before round r + 1 starts. Runs stay strictly sequential, but slow drift
    in machine speed then affects all sizes alike, which keeps time ratios
    between sizes stable.
    """
    if not sizes:
        raise ValueError("sizes must not be empty")
    if reps < MIN_REPS:
        raise ValueError(f"need at least {MIN_REPS} repetitions, got {reps}")
    algorithms = tuple(algorithms)
    run = BenchRun()
    jobs = []
    for n1, n2 in sizes:
        size_model = model(n1, n2) if callable(model) else model
        try:
            g = generate(GenSpec(n1, n2, size_model, seed=seed))
        except UnsatisfiableSpec as exc:
            log.warning("skipping size %dx%d: %s", n1, n2, exc)
            run.errors.append((n1, n2, str(exc)))
            continue
        for algo in algorithms:
            fn = _runner(g, algo)
            jobs.append((g, algo, fn, len(fn().edges)))  # untimed warm-up

    samples: list[list[int]] = [[] for _ in jobs]
    gc.collect()  # start from a clean heap so earlier work does not leak into the timings
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            for k, (_, _, fn, _) in enumerate(jobs):
                t0 = time.perf_counter_ns()
                fn()
                samples[k].append(time.perf_counter_ns() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()

    for (g, algo, _, edges_out), times in zip(jobs, samples):
        median = int(statistics.median(times))
        run.records.append(BenchRecord(algo, g.n1, g.n2, g.m, median, edges_out, reps, tuple(times)))
    return run
