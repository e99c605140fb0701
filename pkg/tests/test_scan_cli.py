import csv
import io
import json
import math

import pytest

from frobstat import cli
from frobstat.counting import WeilBoundError, count_points, good_primes, make_curve
from frobstat.lpoly import lpoly_from_counts
from frobstat.scan import (
    ScanConfig,
    read_records,
    record_for_prime,
    run_scan,
    scan_curve,
    write_records,
)
from frobstat.stats import empirical_moments

E1 = [1, 1, 0, 1]


def _dump(records):
    buf = io.StringIO()
    write_records(records, buf)
    return buf.getvalue()


def test_record_for_prime_matches_counting():
    curve = make_curve([1, -1, 0, 0, 0, 1])
    p = 29
    rec = record_for_prime(curve, p)
    n1 = count_points(curve, p, 1)
    n2 = count_points(curve, p, 2)
    lp = lpoly_from_counts(2, p, n1, n2)
    assert (rec.p, rec.n1, rec.n2) == (p, n1, n2)
    assert (rec.c1, rec.c2) == (lp.c1, lp.c2)
    assert rec.a1bar == lp.c1 / math.sqrt(p)
    assert rec.a2bar == lp.c2 / p


def test_scan_ascending_and_complete():
    curve = make_curve(E1)
    records = scan_curve(curve, 600)
    assert [r.p for r in records] == good_primes(curve, 600)
    assert all(r.genus == 1 for r in records)


def test_scan_bytes_identical_across_threads():
    curve = make_curve(E1)
    base = _dump(scan_curve(curve, 600, threads=1))
    for threads in (2, 3):
        assert _dump(scan_curve(curve, 600, threads=threads)) == base


def test_jsonl_roundtrip_and_key_order():
    curve = make_curve(E1)
    records = scan_curve(curve, 200)
    text = _dump(records)
    assert read_records(io.StringIO(text)) == records
    first = text.splitlines()[0]
    assert list(json.loads(first).keys()) == ["p", "n1", "c1", "a1bar"]
    g2 = _dump([record_for_prime(make_curve([1, -1, 0, 0, 0, 1]), 11)])
    assert list(json.loads(g2).keys()) == [
        "p", "n1", "n2", "c1", "c2", "a1bar", "a2bar",
    ]


def test_run_scan_writes_file(tmp_path):
    out = tmp_path / "e1.jsonl"
    cfg = ScanConfig(f_coeffs=tuple(E1), n=300, out=str(out))
    curve, records = run_scan(cfg)
    assert curve.genus == 1
    assert out.read_text() == _dump(records)


# -- CLI --------------------------------------------------------------------

def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_cli_scan_to_stdout(capsys):
    assert cli.main(["scan", "--f", "1,1,0,1", "--N", "100"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    curve = make_curve(E1)
    assert len(lines) == len(good_primes(curve, 100))
    row = json.loads(lines[0])
    assert row["p"] == 3 and row["n1"] == 4


def test_cli_pipeline_matches_library(tmp_path):
    scan_out = tmp_path / "scan.jsonl"
    mom_out = tmp_path / "moments.csv"
    cls_out = tmp_path / "classify.csv"
    assert cli.main(
        ["scan", "--f", "1,1,0,1", "--N", "800", "--out", str(scan_out)]
    ) == 0
    assert cli.main(
        ["moments", "--in", str(scan_out), "--out", str(mom_out)]
    ) == 0
    assert cli.main(
        ["classify", "--in", str(scan_out), "--out", str(cls_out)]
    ) == 0

    with open(scan_out) as fh:
        records = read_records(fh)
    table = empirical_moments(records, dmax=8)

    rows = _read_csv(mom_out)
    assert rows[0] == ["d1", "d2", "value", "stderr", "n"]
    seen = {}
    for d1, d2, value, stderr, n in rows[1:]:
        seen[(int(d1), int(d2))] = (value, stderr, int(n))
    assert set(seen) == set(table.entries)
    for key, stat in table.entries.items():
        value, stderr, n = seen[key]
        assert value == f"{stat.value:.12g}"
        assert stderr == f"{stat.stderr:.12g}"
        assert n == stat.n

    rows = _read_csv(cls_out)
    assert rows[0] == ["rank", "group_id", "score"]
    assert [r[0] for r in rows[1:]] == ["1", "2", "3"]
    scores = [float(r[2]) for r in rows[1:]]
    assert scores == sorted(scores)
    assert {r[1] for r in rows[1:]} == {"U(1)", "SU(2)", "N(U(1))"}


def test_cli_density_and_hist(tmp_path):
    scan_out = tmp_path / "cm.jsonl"
    assert cli.main(
        ["scan", "--f", "1,0,0,1", "--N", "500", "--out", str(scan_out)]
    ) == 0
    den_out = tmp_path / "density.csv"
    assert cli.main(
        ["density", "--in", str(scan_out), "--stat", "a1",
         "--value", "0", "--out", str(den_out)]
    ) == 0
    rows = _read_csv(den_out)
    assert rows[0] == ["statistic", "value", "hits", "n", "frequency"]
    stat, value, hits, n, freq = rows[1]
    assert stat == "a1" and value == "0"
    # supersingular frequency near 1/2 for the CM curve
    assert 0.3 < int(hits) / int(n) < 0.7
    assert freq == f"{int(hits)}/{int(n)}" or int(freq.split('/')[0]) * int(n) == int(hits) * int(freq.split('/')[1])

    hist_out = tmp_path / "hist.csv"
    assert cli.main(
        ["hist", "--in", str(scan_out), "--bins", "8", "--out", str(hist_out)]
    ) == 0
    rows = _read_csv(hist_out)
    assert rows[0] == ["left", "right", "count", "density"]
    assert len(rows) == 9
    with open(scan_out) as fh:
        n_rec = len(read_records(fh))
    assert sum(int(r[2]) for r in rows[1:]) == n_rec


def test_cli_catalog(tmp_path):
    meta_out = tmp_path / "meta.csv"
    assert cli.main(["catalog", "--metadata", "--out", str(meta_out)]) == 0
    rows = _read_csv(meta_out)
    assert rows[0] == [
        "connected_part", "end_tensor_r", "component_group", "name", "q_realizable",
    ]
    assert len(rows) - 1 == 52
    assert sum(int(r[4]) for r in rows[1:]) == 34

    cat_out = tmp_path / "catalog.csv"
    assert cli.main(["catalog", "--out", str(cat_out)]) == 0
    rows = _read_csv(cat_out)
    assert rows[0] == ["group_id", "d1", "d2", "value"]
    lut = {(r[0], r[1], r[2]): r[3] for r in rows[1:]}
    assert lut[("SU(2)", "2", "0")] == "1"
    assert lut[("SU(2)", "4", "0")] == "2"
    assert lut[("USp(4)", "4", "0")] == "3"
    assert lut[("N(U(1))", "mass_a1", "0")] == "1/2"


def test_cli_birch(tmp_path):
    out = tmp_path / "birch.csv"
    assert cli.main(["birch", "--p", "5,7", "--dmax", "10", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["p", "d", "bruteforce", "formula", "match"]
    assert len(rows) - 1 == 2 * 5
    assert all(r[4] == "1" for r in rows[1:])
    lut = {(r[0], r[1]): r[2] for r in rows[1:]}
    assert lut[("5", "2")] == "24/5"


def test_cli_chebotarev(tmp_path):
    out = tmp_path / "cheb.csv"
    assert cli.main(
        ["chebotarev", "--poly=-2,0,0,1",
         "--group", "(1 2);(1 2 3)", "--N", "2000", "--out", str(out)]
    ) == 0
    rows = _read_csv(out)
    assert rows[0] == ["partition", "predicted", "observed", "frequency", "abs_error"]
    preds = {r[0]: r[1] for r in rows[1:]}
    assert preds == {"1+1+1": "1/6", "1+2": "1/2", "3": "1/3"}
    assert all(float(r[4]) < 0.1 for r in rows[1:])


def test_cli_exit_codes(tmp_path, capsys):
    # singular curve: discriminant zero
    assert cli.main(["scan", "--f", "0,0,0,1", "--N", "50"]) == 2
    # malformed coefficient list
    assert cli.main(["scan", "--f", "1,x,3", "--N", "50"]) == 2
    # missing input file
    assert cli.main(["moments", "--in", str(tmp_path / "missing.jsonl")]) == 3
    # empty input file is a configuration error, not an I/O error
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert cli.main(["moments", "--in", str(empty)]) == 2
    capsys.readouterr()


def test_cli_internal_failure_exit(monkeypatch, capsys):
    def boom(args):
        raise WeilBoundError("synthetic trace bound violation")

    monkeypatch.setattr(cli, "_cmd_scan", boom)
    assert cli.main(["scan", "--f", "1,1,0,1", "--N", "10"]) == 4
    assert "internal validation failure" in capsys.readouterr().err


def test_csv_uses_plain_newlines(tmp_path):
    out = tmp_path / "m.csv"
    scan_out = tmp_path / "s.jsonl"
    assert cli.main(
        ["scan", "--f", "1,1,0,1", "--N", "100", "--out", str(scan_out)]
    ) == 0
    assert cli.main(["moments", "--in", str(scan_out), "--out", str(out)]) == 0
    raw = out.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")
