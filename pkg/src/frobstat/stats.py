"""Empirical Frobenius statistics from scan records, and classification.

A ScanRecord holds the per-prime integers (counts and L-coefficients) plus
the normalized real coefficients.  Point-mass detection works on the exact
integers: a1bar = 0 iff c1 = 0, and a2bar = v iff c2 = v*p, so no floating
comparison is ever involved in a density.

Accumulation is a fold over records sorted by prime; any partition of the
records merges to byte-identical tables because the reduction order is
fixed by p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .haar import STGroupEntry, catalog, exact_moment


@dataclass(frozen=True)
class ScanRecord:
    p: int
    n1: int
    c1: int
    a1bar: float
    n2: Optional[int] = None
    c2: Optional[int] = None
    a2bar: Optional[float] = None

    @property
    def genus(self) -> int:
        return 1 if self.c2 is None else 2

    def to_json_dict(self) -> dict:
        d = {"p": self.p, "n1": self.n1}
        if self.genus == 2:
            d["n2"] = self.n2
        d["c1"] = self.c1
        if self.genus == 2:
            d["c2"] = self.c2
        d["a1bar"] = self.a1bar
        if self.genus == 2:
            d["a2bar"] = self.a2bar
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "ScanRecord":
        return cls(
            p=d["p"],
            n1=d["n1"],
            c1=d["c1"],
            a1bar=d["a1bar"],
            n2=d.get("n2"),
            c2=d.get("c2"),
            a2bar=d.get("a2bar"),
        )


@dataclass
class MomentStat:
    value: float
    stderr: float
    n: int


@dataclass
class MomentTable:
    genus: int
    entries: dict[tuple[int, int], MomentStat] = field(default_factory=dict)
    # prefix series: (d1, d2) -> ((cutoff, value), ...) at power-of-two cutoffs
    prefix: dict[tuple[int, int], tuple[tuple[int, float], ...]] = field(
        default_factory=dict
    )


def moment_orders(genus: int, dmax: int) -> list[tuple[int, int]]:
    """(d1, d2) pairs with weight d1 + 2*d2 <= dmax, excluding (0, 0)."""
    out = []
    for d1 in range(dmax + 1):
        top = 0 if genus == 1 else (dmax - d1) // 2
        for d2 in range(top + 1):
            if d1 or d2:
                out.append((d1, d2))
    return out


def empirical_moments(records: Sequence[ScanRecord], dmax: int = 8) -> MomentTable:
    """Averages of a1bar^d1 * a2bar^d2 over the records.

    Records are folded in ascending-p order; prefix values are recorded at
    cutoffs 2^10, 2^11, ... up to the largest prime present.
    """
    recs = sorted(records, key=lambda r: r.p)
    if not recs:
        raise ValueError("no records")
    genus = recs[0].genus
    if any(r.genus != genus for r in recs):
        raise ValueError("mixed-genus records")
    orders = moment_orders(genus, dmax)
    cutoffs = []
    top = recs[-1].p
    c = 1024
    while c <= top:
        cutoffs.append(c)
        c *= 2

    sums = {o: 0.0 for o in orders}
    sqsums = {o: 0.0 for o in orders}
    prefix: dict[tuple[int, int], list[tuple[int, float]]] = {o: [] for o in orders}
    next_cut = 0
    n = 0
    for r in recs:
        while next_cut < len(cutoffs) and r.p > cutoffs[next_cut]:
            for o in orders:
                if n:
                    prefix[o].append((cutoffs[next_cut], sums[o] / n))
            next_cut += 1
        n += 1
        for d1, d2 in orders:
            term = r.a1bar**d1 if d1 else 1.0
            if d2:
                term *= r.a2bar**d2
            sums[(d1, d2)] += term
            sqsums[(d1, d2)] += term * term
    while next_cut < len(cutoffs):
        for o in orders:
            prefix[o].append((cutoffs[next_cut], sums[o] / n))
        next_cut += 1

    table = MomentTable(genus=genus)
    for o in orders:
        mean = sums[o] / n
        if n > 1:
            var = max(sqsums[o] / n - mean * mean, 0.0) * n / (n - 1)
            se = math.sqrt(var / n)
        else:
            se = 0.0
        table.entries[o] = MomentStat(value=mean, stderr=se, n=n)
        table.prefix[o] = tuple(prefix[o])
    return table


@dataclass(frozen=True)
class DensityStat:
    statistic: str
    value: Fraction
    hits: int
    n: int

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.hits, self.n)


def empirical_density(
    records: Sequence[ScanRecord], statistic: str, value
) -> DensityStat:
    """Exact share of records with the normalized statistic equal to value.

    a1bar = v can only happen at rational v = 0 (c1 = 0); a2bar = v means
    c2 = v * p, tested in exact rational arithmetic.
    """
    v = Fraction(value)
    recs = list(records)
    if not recs:
        raise ValueError("no records")
    if statistic == "a1":
        # c1 / sqrt(p) is irrational unless c1 = 0, so only v = 0 can hit
        hits = sum(1 for r in recs if r.c1 == 0) if v == 0 else 0
    elif statistic == "a2":
        if any(r.genus != 2 for r in recs):
            raise ValueError("a2 density needs genus-2 records")
        hits = sum(1 for r in recs if Fraction(r.c2) == v * r.p)
    else:
        raise ValueError("statistic must be 'a1' or 'a2'")
    return DensityStat(statistic=statistic, value=v, hits=hits, n=len(recs))


@dataclass(frozen=True)
class HistogramRow:
    left: float
    right: float
    count: int
    density: float


@dataclass(frozen=True)
class HistogramResult:
    rows: tuple[HistogramRow, ...]
    n: int
    clamped: int  # how many out-of-range values were pushed into end bins


def histogram(
    values: Iterable[float], bins: int, lo: float, hi: float
) -> HistogramResult:
    """Fixed-range histogram; out-of-range values are clamped into the end
    bins and counted in `clamped` so nothing is silently dropped."""
    if bins < 1 or not hi > lo:
        raise ValueError("need bins >= 1 and hi > lo")
    counts = [0] * bins
    width = (hi - lo) / bins
    n = 0
    clamped = 0
    for v in values:
        n += 1
        idx = int((v - lo) / width)
        if v < lo or idx < 0:
            idx = 0
            clamped += 1
        elif v >= hi or idx >= bins:
            if v > hi:
                clamped += 1
            idx = bins - 1
        counts[idx] += 1
    rows = tuple(
        HistogramRow(
            left=lo + i * width,
            right=lo + (i + 1) * width,
            count=c,
            density=c / (n * width) if n else 0.0,
        )
        for i, c in enumerate(counts)
    )
    return HistogramResult(rows=rows, n=n, clamped=clamped)


# ---------------------------------------------------------------------------
# classification against the catalog

STDERR_FLOOR = 1e-3

# moment orders entering the score
_TRACKED_G1 = [(d, 0) for d in range(1, 7)]
_TRACKED_G2 = [(d, 0) for d in range(1, 7)] + [(0, d) for d in range(1, 4)] + [(2, 1)]

# point masses entering the score
_DENSITY_G1 = [("a1", Fraction(0))]
_DENSITY_G2 = [("a1", Fraction(0))] + [("a2", Fraction(v)) for v in (-2, -1, 0, 1, 2)]


def tracked_orders(genus: int) -> list[tuple[int, int]]:
    return list(_TRACKED_G1 if genus == 1 else _TRACKED_G2)


def tracked_densities(genus: int) -> list[tuple[str, Fraction]]:
    return list(_DENSITY_G1 if genus == 1 else _DENSITY_G2)


def classify(
    table: MomentTable,
    densities: Optional[dict[tuple[str, Fraction], DensityStat]] = None,
    entries: Optional[Sequence[STGroupEntry]] = None,
) -> list[tuple[str, float]]:
    """Rank candidate groups by squared standardized distance.

    score(G) = sum over tracked moments of ((emp - exact) / max(se, floor))^2
    plus the same for tracked point masses.  Ascending score; ties broken
    lexicographically by group id, so the output is fully deterministic.
    """
    if entries is None:
        entries = [e for e in catalog() if e.genus == table.genus]
    densities = densities or {}
    results = []
    for entry in entries:
        if entry.genus != table.genus:
            raise ValueError(f"{entry.id} has genus {entry.genus}, table {table.genus}")
        score = 0.0
        for order in tracked_orders(table.genus):
            stat = table.entries.get(order)
            if stat is None:
                continue
            theo = float(exact_moment(entry.id, order[0], order[1]))
            z = (stat.value - theo) / max(stat.stderr, STDERR_FLOOR)
            score += z * z
        for key, dstat in sorted(densities.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            stat_name, v = key
            theo = float(entry.point_mass(stat_name, v))
            freq = float(dstat.frequency)
            se = math.sqrt(max(freq * (1.0 - freq), 0.0) / dstat.n)
            z = (freq - theo) / max(se, STDERR_FLOOR)
            score += z * z
        results.append((entry.id, score))
    results.sort(key=lambda t: (t[1], t[0]))
    return results


def records_density_map(
    records: Sequence[ScanRecord],
) -> dict[tuple[str, Fraction], DensityStat]:
    """Empirical point-mass stats for the tracked (statistic, value) pairs."""
    genus = records[0].genus
    return {
        (stat, v): empirical_density(records, stat, v)
        for stat, v in tracked_densities(genus)
    }
