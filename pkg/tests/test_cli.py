import json
import subprocess
import sys

import pytest

from modpart.cache import ScanCache
from modpart.cli import main


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MODPART_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


# -- verify ------------------------------------------------------------------


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--modulus", "4", "--max-n", "10", "--out", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["status"] == "verified"
    cell = next(c for c in rep["cells"] if c["type"] == [1, 3, 1] and c["n"] == 10)
    assert cell["p_count"] == cell["q_count"] == 1
    assert set(cell) == {"m", "n", "type", "p_count", "q_count", "status"}


def test_verify_modulus_three_to_forty(capsys):
    code, _, _ = run(capsys, "verify", "--modulus", "3", "--max-n", "40", "--jobs", "2", "--no-timing")
    assert code == 0


def test_verify_rejects_bad_modulus(capsys):
    assert usage(capsys, "verify", "--modulus", "1", "--max-n", "5") == 2
    assert usage(capsys, "verify", "--modulus", "3", "--max-n", "5", "--types", "weird") == 2


def test_reports_are_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "--modulus", "3", "--max-n", "12", "--no-timing", "--out", str(a))
    run(capsys, "verify", "--modulus", "3", "--max-n", "12", "--no-timing", "--jobs", "3", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_resume_skips_only_matching_cached_cells(tmp_path, capsys, isolated_cache):
    out = tmp_path / "r.json"
    run(capsys, "verify", "--modulus", "3", "--max-n", "8", "--cache", "--out", str(out))
    recs = ScanCache(isolated_cache).records()
    assert len(recs) == 8
    hashes = {k: r.counts_hash for k, r in recs.items()}

    run(capsys, "verify", "--modulus", "3", "--max-n", "10", "--resume", "--out", str(out))
    rep = json.loads(out.read_text())
    assert rep["flags"]["cached_n"] == list(range(1, 9))
    assert {c["n"] for c in rep["cells"]} == {9, 10}

    # a different type filter is a different key, so nothing is skipped
    run(capsys, "verify", "--modulus", "3", "--max-n", "10", "--types", "pure", "--resume", "--out", str(out))
    assert json.loads(out.read_text())["flags"]["cached_n"] == []

    # re-running with equal inputs reproduces the counts hash
    run(capsys, "verify", "--modulus", "3", "--max-n", "8", "--cache", "--out", str(out))
    again = ScanCache(isolated_cache).records()
    assert all(again[k].counts_hash == h for k, h in hashes.items())


def test_cache_ignores_torn_lines(isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "scan.jsonl").write_text('{"m": 3, "n": 1\n\n')
    assert ScanCache(isolated_cache).records() == {}


# -- table -------------------------------------------------------------------


def test_table_weight_eleven_mixed_rows(capsys):
    code, out, _ = run(capsys, "table", "--modulus", "3", "--n", "11", "--mixed-only")
    assert code == 0
    rows = [line for line in out.splitlines() if not line.startswith(" ")]
    assert rows[0].startswith("(1,2)  P:4  Q:4")
    assert rows[-1].startswith("(9,1)  P:1  Q:1")
    assert len(rows) == 10


def test_table_singleton(capsys):
    code, out, _ = run(capsys, "table", "--modulus", "2", "--n", "1")
    assert code == 0
    assert out.splitlines() == ["(1)  P:1  Q:1", "    P-side: 1", "    Q-side: 1"]


def test_table_modulus_four_row(capsys):
    _, out, _ = run(capsys, "table", "--modulus", "4", "--n", "10", "--mixed-only")
    lines = out.splitlines()
    k = lines.index("(0,2,2)  P:1  Q:1")
    assert lines[k + 1] == "    P-side: 4+4+2"
    assert lines[k + 2] == "    Q-side: 3+3+2+2"


# -- series ------------------------------------------------------------------


def test_series_dumps(capsys):
    _, out, _ = run(capsys, "series", "--modulus", "3", "--trunc", "11", "--which", "q")
    assert "z1^1 z2^2 q^11 : 4" in out.splitlines()
    _, out, _ = run(capsys, "series", "--trunc", "0", "--which", "pure")
    assert out == "q^0 : 1\n"
    _, out, _ = run(capsys, "series", "--modulus", "3", "--trunc", "14", "--which", "p")
    assert "z1^3 z2^1 q^14 : 7" in out.splitlines()


def test_series_p_equals_factorized(capsys):
    _, p, _ = run(capsys, "series", "--modulus", "4", "--trunc", "12", "--which", "p")
    _, f, _ = run(capsys, "series", "--modulus", "4", "--trunc", "12", "--which", "factorized")
    assert p == f


def test_series_lemma_selector(capsys):
    code, out, _ = run(capsys, "series", "--trunc", "9", "--which", "lemma:B:0:2")
    assert code == 0
    assert out.splitlines()[0] == "q^7 : 1"


@pytest.mark.parametrize("which", ["x", "lemma:C:1:0", "lemma:B:0:1", "lemma:B"])
def test_series_bad_selector(capsys, which):
    code, _, err = run(capsys, "series", "--trunc", "5", "--which", which)
    assert code == 2
    assert "error" in err


# -- qdiff -------------------------------------------------------------------


def test_qdiff_all_checks(capsys, tmp_path):
    out = tmp_path / "q.json"
    code, text, _ = run(capsys, "qdiff", "--max-length", "12", "--trunc", "30", "--cell", "6,1,11", "--out", str(out))
    assert code == 0
    assert "FAIL" not in text
    assert "cell ((6,1),11) = 2" in text
    assert all(json.loads(out.read_text())["checks"].values())


def test_qdiff_trivial(capsys):
    code, text, _ = run(capsys, "qdiff", "--max-length", "0", "--trunc", "5")
    assert code == 0
    assert text.count("PASS") == 4


# -- rrag --------------------------------------------------------------------


@pytest.mark.parametrize("i, count", [(2, 7), (1, 4)])
def test_rrag_examples(capsys, i, count):
    code, out, _ = run(capsys, "rrag", "--d", "2", "--i", str(i), "--max-n", "11")
    assert code == 0
    last = out.splitlines()[-1].split()
    assert last == ["n=11", f"types={count}", f"gap={count}", "PASS"]


def test_rrag_rejects_out_of_range_i(capsys):
    code, _, err = run(capsys, "rrag", "--d", "2", "--i", "5", "--max-n", "11")
    assert code == 2
    assert "1..4" in err


def test_rrag_literal_reports_mismatch(capsys):
    code, _, _ = run(capsys, "rrag", "--d", "2", "--i", "1", "--max-n", "8", "--ag-interpretation", "literal")
    assert code == 1


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "modpart.cli", "verify", "--modulus", "2", "--max-n", "6"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "verified"
