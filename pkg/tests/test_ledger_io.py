import pytest

from siegel_vanishing import ledger_io
from siegel_vanishing.hasse import AmpMode
from siegel_vanishing.rootsys import SystemContext
from siegel_vanishing.vanishing import VanishingLedger, WeightBox, fixpoint


@pytest.fixture(scope="module")
def solved():
    L = VanishingLedger(SystemContext(2, 7), WeightBox(-20, 0))
    fixpoint(L)
    return L


def test_format_header(solved):
    text = ledger_io.dumps(solved)
    lines = text.splitlines()
    assert lines[0] == "hasse-vanish-ledger v1"
    assert lines[1] == "g=2 p=7 kmin=-20 kmax=0 mode=hasse"
    assert lines[2] == "[degree 0]"
    assert "[degree 2]" in lines


def test_roundtrip_bytes(solved, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    ledger_io.save(solved, a)
    back = ledger_io.load(a)
    assert back == solved
    ledger_io.save(back, b)
    assert a.read_bytes() == b.read_bytes()
    assert set(tmp_path.iterdir()) == {a, b}  # no temp files left behind


def test_empty_roundtrip(tmp_path):
    L = VanishingLedger(SystemContext(3, 11), WeightBox(-2, 1), AmpMode.ORBITAL)
    ledger_io.save(L, tmp_path / "x")
    assert ledger_io.load(tmp_path / "x") == L


@pytest.mark.parametrize("bad,match", [
    ("nope\n", "not a ledger"),
    ("hasse-vanish-ledger v1\ng=2 p=7\n", "lacks"),
    ("hasse-vanish-ledger v1\ng=2 p=7 kmin=-5 kmax=0 mode=hasse\n-1 -2\n", "before any section"),
    ("hasse-vanish-ledger v1\ng=2 p=7 kmin=-5 kmax=0 mode=hasse\n[degree 0]\n-1 -2\n"
     "[degree 1]\n[degree 2]\n", "nested"),
    ("hasse-vanish-ledger v1\ng=2 p=7 kmin=-5 kmax=0 mode=hasse\n[degree 0]\n-2 -1\n", "not a box"),
    ("hasse-vanish-ledger v1\ng=2 p=7 kmin=-5 kmax=0 mode=hasse\n[degree 7]\n", "unexpected"),
])
def test_rejects_malformed(bad, match):
    with pytest.raises(ledger_io.LedgerFormatError, match=match):
        ledger_io.loads(bad)


def test_incompatible(solved, tmp_path):
    path = tmp_path / "l.txt"
    ledger_io.save(solved, path)
    with pytest.raises(ledger_io.IncompatibleLedger):
        ledger_io.load_or_create(path, SystemContext(2, 11), WeightBox(-20, 0), AmpMode.HASSE)
    with pytest.raises(ledger_io.IncompatibleLedger):
        ledger_io.load_or_create(path, SystemContext(2, 7), WeightBox(-20, 0), AmpMode.ORBITAL)
    same = ledger_io.load_or_create(path, SystemContext(2, 7), WeightBox(-20, 0), AmpMode.HASSE)
    assert same == solved


def test_export_modes(solved):
    d = solved.ctx.d
    plain = [set(ledger_io.export_rows(solved, e)) for e in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            assert not plain[i] & plain[j]
    cum = [set(ledger_io.export_rows(solved, e, cumulative=True)) for e in range(d)]
    for e in range(d - 1):
        assert cum[e] <= cum[e + 1]
    assert set().union(*plain) == cum[-1]
    rows = ledger_io.export_rows(solved, 0)
    assert rows == sorted(rows, key=lambda r: tuple(map(int, r.split())))


def test_export_reverse_columns():
    L = VanishingLedger(SystemContext(2, 7), WeightBox(-5, 0))
    L.insert(0, [(-2, -4)])
    assert ledger_io.export_rows(L, 0) == ["-2 -4"]
    assert ledger_io.export_rows(L, 0, reverse_columns=True) == ["-4 -2"]
    assert ledger_io.export_rows(L, 1) == []
