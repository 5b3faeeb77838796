import subprocess
import sys

import pytest

from kgnet.cli import cli_main
from kgnet.keds import parse_keds
from kgnet.pajek import loads_pajek


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = cli_main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return go


def test_build(run, fixtures_dir):
    code, out, _ = run("build", fixtures_dir / "biblio.nt")
    assert code == 0 and out == "n_S=17 n_T=25 m=50\n"


def test_recognize_k4_is_a_rejection_not_an_error(run, fixtures_dir):
    code, out, _ = run("recognize", fixtures_dir / "k4.graph")
    assert code == 0
    assert out.startswith("rejected: cycle:") and "witness:" in out


def test_recognize_triples(run, fixtures_dir):
    code, out, _ = run("recognize", fixtures_dir / "nested.nt")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "accepted: 6 steps" and len(lines) == 7


def test_derive_coauthorship(run, fixtures_dir):
    code, out, _ = run("derive", "--expr", "WA^T * WA", fixtures_dir / "biblio.paj")
    assert code == 0
    assert out == "rows=authors:2 cols=authors:2\na1 a1 1\na1 a2 1\na2 a1 1\na2 a2 2\n"


def test_derive_bool(run, fixtures_dir):
    code, out, _ = run("derive", "--semiring", "bool", "--expr", "WA^T * WA",
                       fixtures_dir / "biblio.paj")
    assert code == 0 and "a2 a2 true" in out


def test_parse_triples(run, fixtures_dir):
    code, out, _ = run("parse-triples", fixtures_dir / "nested.nt")
    assert code == 0 and len(out.splitlines()) == 6


def test_project_and_export(run, fixtures_dir, tmp_path):
    target = tmp_path / "bib.net"
    code, _, _ = run("project", "--attribute", "http://example.org/bib/sex",
                     fixtures_dir / "biblio.nt", "-o", target)
    assert code == 0
    net = loads_pajek(target.read_text(encoding="utf-8"))
    assert "http://example.org/bib/sex" in net.properties
    code, out, _ = run("export", target)
    assert code == 0 and out == target.read_text(encoding="utf-8")


def test_keds_import_and_slice(run, fixtures_dir):
    code, out, _ = run("keds-import", fixtures_dir / "balkans.keds")
    assert code == 0
    assert loads_pajek(out).content() == parse_keds(
        (fixtures_dir / "balkans.keds").read_text(encoding="utf-8")).content()
    code, out, _ = run("slice", "--t", "7031", fixtures_dir / "balkans.keds")
    assert code == 0 and loads_pajek(out).m == 1


def test_stats(run, fixtures_dir):
    code, out, _ = run("stats", fixtures_dir / "biblio5.paj")
    assert code == 0
    assert out.splitlines()[:4] == ["n=12 m=24", "mode works: 5", "mode authors: 4",
                                    "mode keywords: 3"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate", "x"],
        ["derive", "f.paj"],
        ["derive", "--expr", "A", "--semiring", "tropical", "f.paj"],
        ["slice", "--t", "soon", "f.paj"],
        ["build"],
    ],
)
def test_usage_errors_exit_2(run, argv):
    code, _, err = run(*argv)
    assert code == 2 and "usage:" in err


def test_data_errors_exit_1(run, fixtures_dir, tmp_path):
    bad = tmp_path / "bad.nt"
    bad.write_text("<http://ex/a> <http://ex/p> .\n", encoding="utf-8")
    code, _, err = run("build", bad)
    assert code == 1 and "error" in err
    code, _, err = run("build", tmp_path / "missing.nt")
    assert code == 1
    code, _, err = run("derive", "--expr", "WA * WA", fixtures_dir / "biblio.paj")
    assert code == 1 and "WA" in err
    empty = tmp_path / "empty.paj"
    empty.write_text("", encoding="utf-8")
    code, _, err = run("stats", empty)
    assert code == 1 and "*Vertices" in err


def test_help_exits_0(run):
    code, out, _ = run("--help")
    assert code == 0 and "derive" in out


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "kgnet", "build", str(fixtures_dir / "nested.nt")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "n_S=8 n_T=6 m=12\n"
    proc = subprocess.run([sys.executable, "-m", "kgnet", "--bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
