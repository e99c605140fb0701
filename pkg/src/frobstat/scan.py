"""Scan pipeline: count a curve at every good prime up to a bound and emit
one JSONL record per prime, ascending.

Output is byte-identical for identical configs regardless of thread count
or seed: workers only parallelize the per-prime counting, and the merge is
ordered by p before anything is written.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Optional

from .counting import HyperellipticCurve, count_points, good_primes, make_curve
from .lpoly import lpoly_from_counts
from .stats import ScanRecord


@dataclass(frozen=True)
class ScanConfig:
    f_coeffs: tuple[int, ...]
    n: int
    label: str = ""
    threads: int = 1
    seed: int = 0  # carried for uniformity; the scan itself is seed-free
    out: Optional[str] = None


def record_for_prime(curve: HyperellipticCurve, p: int) -> ScanRecord:
    n1 = count_points(curve, p, 1)
    if curve.genus == 1:
        lp = lpoly_from_counts(1, p, n1)
        return ScanRecord(p=p, n1=n1, c1=lp.c1, a1bar=lp.c1 / math.sqrt(p))
    n2 = count_points(curve, p, 2)
    lp = lpoly_from_counts(2, p, n1, n2)
    return ScanRecord(
        p=p,
        n1=n1,
        c1=lp.c1,
        a1bar=lp.c1 / math.sqrt(p),
        n2=n2,
        c2=lp.c2,
        a2bar=lp.c2 / p,
    )


_WORK_CURVE: Optional[HyperellipticCurve] = None


def _init_worker(f_coeffs: tuple[int, ...], label: str) -> None:
    global _WORK_CURVE
    _WORK_CURVE = make_curve(f_coeffs, label)


def _worker_record(p: int) -> ScanRecord:
    assert _WORK_CURVE is not None
    return record_for_prime(_WORK_CURVE, p)


def scan_curve(
    curve: HyperellipticCurve, n: int, threads: int = 1
) -> list[ScanRecord]:
    """Records for every good prime <= n, ascending."""
    primes = good_primes(curve, n)
    if threads <= 1 or len(primes) < 4:
        return [record_for_prime(curve, p) for p in primes]
    chunk = max(1, len(primes) // (8 * threads))
    with ProcessPoolExecutor(
        max_workers=threads,
        initializer=_init_worker,
        initargs=(curve.f_coeffs, curve.label),
    ) as pool:
        records = list(pool.map(_worker_record, primes, chunksize=chunk))
    records.sort(key=lambda r: r.p)
    return records


def write_records(records: Iterable[ScanRecord], stream: IO[str]) -> None:
    for rec in records:
        stream.write(json.dumps(rec.to_json_dict(), separators=(",", ":")))
        stream.write("\n")


def read_records(stream: IO[str]) -> list[ScanRecord]:
    records = []
    for line in stream:
        line = line.strip()
        if line:
            records.append(ScanRecord.from_json_dict(json.loads(line)))
    return records


def run_scan(config: ScanConfig):
    """Execute a scan; write JSONL to config.out when set.

    Returns (curve, records).
    """
    curve = make_curve(config.f_coeffs, config.label)
    records = scan_curve(curve, config.n, config.threads)
    if config.out is not None:
        with open(config.out, "w") as fh:
            write_records(records, fh)
    return curve, records
