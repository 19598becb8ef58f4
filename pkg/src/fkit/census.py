"""Finite-field enumeration engines: rank stratum counts for the Jordan and
Freudenthal spaces, fiber cardinalities, and orthogonal-group orders.

Exhaustive scans walk an odometer over coordinate vectors in a fixed order,
partitioned into a fixed number of chunks so that counts and checksums are
bit-for-bit reproducible regardless of how many workers merge them.
Sampling uses a counter-based Philox generator with an explicit seed.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import fibers, jordan as jmod
from .composition import AlgebraError
from .fields import PrimeField
from .kernels import PackedAlgebra
from .kernels import loops

EXHAUSTIVE_LIMIT = 10**8
N_CHUNKS = 64
_CHECKSUM_MOD = 2305843009213693951


class OverflowSpaceError(ValueError):
    """The requested exhaustive enumeration is too large."""


class CensusReport:
    def __init__(self, space, field, mode, counts, wall, checksum=None, seed=None):
        self.space = space
        self.field = field
        self.mode = mode
        self.counts = dict(counts)
        self.wall = wall
        self.checksum = checksum
        self.seed = seed

    @property
    def total(self):
        return sum(self.counts.values())

    def to_dict(self):
        out = {
            "space": self.space,
            "field": self.field.to_json(),
            "mode": self.mode,
            "counts": {str(k): v for k, v in self.counts.items()},
            "total": self.total,
            "wall_seconds": round(self.wall, 3),
        }
        if self.checksum is not None:
            out["checksum"] = self.checksum
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["space", "field", "mode", "rank", "count"])
        fdesc = json.dumps(self.field.to_json())
        for k in sorted(self.counts):
            w.writerow([self.space, fdesc, self.mode, k, self.counts[k]])
        return buf.getvalue()

    def __repr__(self):
        return f"CensusReport({self.space}, {self.mode}, {self.counts})"


def default_workers():
    try:
        return max(1, int(os.environ.get("FKIT_WORKERS", "1")))
    except ValueError:
        return 1


def _chunks(total):
    """Fixed partition of range(total) (independent of worker count)."""
    n = min(N_CHUNKS, total) or 1
    step = total // n
    out = []
    start = 0
    for i in range(n):
        stop = start + step + (1 if i < total % n else 0)
        out.append((start, stop))
        start = stop
    return out


def _merge_checksums(chunk_sums):
    cks = 0
    for c in chunk_sums:
        cks = (cks * 1099511628211 + c + 1) % _CHECKSUM_MOD
    return cks


def _jordan_chunk(args):
    table, conjm, gram, tvec, m, p, start, stop = args
    counts, cks = loops.scan_jordan_ranks(table, conjm, gram, tvec, m, p, start, stop)
    return np.asarray(counts), int(cks)


def _w_chunk(args):
    table, conjm, gram, tvec, jgram, m, p, start, stop = args
    counts, cks = loops.scan_w_ranks(table, conjm, gram, tvec, jgram, m, p, start, stop)
    return np.asarray(counts), int(cks)


def _run_chunks(fn, argsets, workers):
    if workers <= 1:
        return [fn(a) for a in argsets]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, argsets))


def jordan_census(algebra, mode="exhaustive", n_samples=10**5, seed=0, workers=None):
    if not isinstance(algebra.field, PrimeField):
        raise AlgebraError("census requires a finite prime field")
    workers = workers if workers is not None else default_workers()
    pk = PackedAlgebra(algebra)
    p = pk.p
    L = pk.jdim
    t0 = time.time()
    if mode == "exhaustive":
        total = p**L
        if total > EXHAUSTIVE_LIMIT:
            raise OverflowSpaceError(
                f"|J| = {p}^{L} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}"
            )
        argsets = [
            (pk.table, pk.conj, pk.gram, pk.tvec, pk.m, p, a, b)
            for a, b in _chunks(total)
        ]
        results = _run_chunks(_jordan_chunk, argsets, workers)
        counts = np.zeros(4, dtype=np.int64)
        for c, _ in results:
            counts += c
        cks = _merge_checksums([c for _, c in results])
        return CensusReport(
            f"jordan[{algebra.tag}]",
            algebra.field,
            "exhaustive",
            {r: int(counts[r]) for r in range(4)},
            time.time() - t0,
            checksum=cks,
        )
    # sampled
    gen = np.random.Generator(np.random.Philox(seed))
    samples = gen.integers(0, p, size=(n_samples, L), dtype=np.int64)
    counts = np.zeros(4, dtype=np.int64)
    for row in samples:
        if not row.any():
            r = 0
        elif not loops.jsharp(pk.table, pk.conj, pk.gram, row, p).any():
            r = 1
        elif loops.jnorm(pk.table, pk.gram, pk.tvec, row, p) == 0:
            r = 2
        else:
            r = 3
        counts[r] += 1
    return CensusReport(
        f"jordan[{algebra.tag}]",
        algebra.field,
        f"sampled({n_samples})",
        {r: int(counts[r]) for r in range(4)},
        time.time() - t0,
        seed=seed,
    )


def freudenthal_census(algebra, mode="exhaustive", n_samples=10**4, seed=0, workers=None):
    if not isinstance(algebra.field, PrimeField):
        raise AlgebraError("census requires a finite prime field")
    workers = workers if workers is not None else default_workers()
    pk = PackedAlgebra(algebra)
    p = pk.p
    n = pk.wdim
    t0 = time.time()
    if mode == "exhaustive":
        total = p**n
        if total > EXHAUSTIVE_LIMIT:
            raise OverflowSpaceError(
                f"|W| = {p}^{n} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}"
            )
        argsets = [
            (pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, pk.m, p, a, b)
            for a, b in _chunks(total)
        ]
        results = _run_chunks(_w_chunk, argsets, workers)
        counts = np.zeros(5, dtype=np.int64)
        for c, _ in results:
            counts += c
        cks = _merge_checksums([c for _, c in results])
        return CensusReport(
            f"freudenthal[{algebra.tag}]",
            algebra.field,
            "exhaustive",
            {r: int(counts[r]) for r in range(5)},
            time.time() - t0,
            checksum=cks,
        )
    gen = np.random.Generator(np.random.Philox(seed))
    samples = gen.integers(0, p, size=(n_samples, n), dtype=np.int64)
    counts = loops.sample_w_ranks(
        pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, samples, p
    )
    return CensusReport(
        f"freudenthal[{algebra.tag}]",
        algebra.field,
        f"sampled({n_samples})",
        {r: int(counts[r]) for r in range(5)},
        time.time() - t0,
        seed=seed,
    )


def fiber_census(xi, algebra):
    """Exact |rank-1 fiber over xi| by exhaustive scan of (C^0)^3."""
    if algebra.dim != 4:
        raise AlgebraError("fiber census needs dim C = 4")
    if not isinstance(algebra.field, PrimeField):
        raise AlgebraError("fiber census requires a finite prime field")
    p = algebra.field.p
    if p**9 > EXHAUSTIVE_LIMIT:
        raise OverflowSpaceError(f"|C^0|^3 = {p}^9 exceeds the exhaustive limit")
    count, _ = fibers._fiber_scan(xi, algebra)
    return count


def nilpotent_strips(algebra):
    """All trace-zero strip triples beta with sharp(J(beta)) = 0, as packed
    Jordan coordinate rows (plus the raw odometer indices)."""
    pk = PackedAlgebra(algebra)
    p = pk.p
    cap = 4096
    while True:
        buf = np.zeros(cap, dtype=np.int64)
        found = loops.scan_strip_sharp_zero(
            pk.table, pk.conj, pk.gram, pk.trace0, pk.m, p, buf
        )
        if found <= cap:
            break
        cap = int(found)
    idxs = buf[:found]
    kdim = pk.trace0.shape[0]
    strips = np.zeros((found, pk.jdim), dtype=np.int64)
    for r, idx in enumerate(idxs):
        t = int(idx)
        for slot in range(3):
            for j in range(kdim):
                d = t % p
                t //= p
                for u in range(pk.m):
                    pos = 3 + slot * pk.m + u
                    strips[r, pos] = (strips[r, pos] + d * pk.trace0[j, u]) % p
    return strips, idxs


def _rank0_chunk(args):
    table, conjm, gram, tvec, jgram, unit, strips, m, p, a, b = args
    count, cand = loops.scan_rank0_pairs(
        table, conjm, gram, tvec, jgram, unit, strips, m, p, a, b
    )
    return int(count), int(cand)


def rank0_fiber_census(algebra, workers=None):
    """Exhaustive count of rank-1 elements (0, b, c, 0) in the fiber over 0,
    scanned as pairs of sharp-zero strips pruned by b * c = 0 (a necessary
    rank-1 condition) before the full intrinsic rank test."""
    if algebra.dim != 4:
        raise AlgebraError("rank-0 fiber census needs dim C = 4")
    workers = workers if workers is not None else default_workers()
    t0 = time.time()
    pk = PackedAlgebra(algebra)
    strips, _ = nilpotent_strips(algebra)
    K = strips.shape[0]
    n = min(N_CHUNKS, K)
    step = K // n
    ranges = []
    start = 0
    for i in range(n):
        stop = start + step + (1 if i < K % n else 0)
        ranges.append((start, stop))
        start = stop
    argsets = [
        (pk.table, pk.conj, pk.gram, pk.tvec, pk.jgram, pk.unit, strips, pk.m, pk.p, a, b)
        for a, b in ranges
    ]
    results = _run_chunks(_rank0_chunk, argsets, workers)
    count = sum(c for c, _ in results)
    cand = sum(c for _, c in results)
    q = pk.p
    return {
        "strips": int(K),
        "candidates": cand,
        "rank1_count": count,
        "expected": (q**2 - 1) * (q**6 - 1) // (q - 1),
        "wall_seconds": round(time.time() - t0, 3),
    }


def so3_order(form, field=None):
    """|{g : det g = 1, g c g^T = c}| over F_p by pruned brute force."""
    field = field or form.field
    if not isinstance(field, PrimeField):
        raise AlgebraError("so3_order requires a finite prime field")
    if form.is_degenerate():
        raise AlgebraError("so3_order requires a nondegenerate form")
    cm = np.array([[x.v for x in row] for row in form.gram], dtype=np.int64)
    return int(loops.so3_order(cm, field.p))
