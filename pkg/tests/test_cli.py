import pytest

from edgecolour.cli import bench_rows, main
from edgecolour.instances import gen_complete, gen_cycle, gen_petersen, write_graph


@pytest.fixture
def graph_file(tmp_path):
    def make(graph, name="g.txt"):
        path = tmp_path / name
        path.write_text(write_graph(graph))
        return str(path)
    return make


def test_solve_yes_and_verify(graph_file, tmp_path, capsys):
    g = graph_file(gen_cycle(5))
    out = str(tmp_path / "c.txt")
    assert main(["solve", "--k", "3", g, "--out", out]) == 0
    assert capsys.readouterr().out.startswith("YES")
    assert main(["verify", "--k", "3", g, out]) == 0


def test_solve_no(graph_file, capsys):
    assert main(["solve", "--k", "2", graph_file(gen_cycle(5))]) == 1
    text = capsys.readouterr().out
    assert text.startswith("NO")
    assert "q: 5" in text
    assert "t_semicore" in text


def test_solve_missing_file(tmp_path, capsys):
    assert main(["solve", "--k", "3", str(tmp_path / "nope.txt")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_solve_bad_format(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p 3 2\ne 0 1\n")
    assert main(["solve", "--k", "3", str(path)]) == 2


def test_usage_error():
    assert main(["solve", "--k", "x", "g"]) == 2
    assert main([]) == 2


def test_timeout(graph_file, monkeypatch, capsys):
    import edgecolour.cli as cli

    def stall(graph, k, check=False):
        import time
        time.sleep(5)

    monkeypatch.setattr(cli, "solve", stall)
    assert main(["solve", "--k", "3", graph_file(gen_cycle(5)), "--timeout", "0.05"]) == 3
    assert "TIMEOUT" in capsys.readouterr().out


@pytest.mark.parametrize("graph, expected", [
    (gen_petersen(), "4 (Class 2)"),
    (gen_complete(4), "3 (Class 1)"),
    (gen_complete(3), "3 (Class 2)"),
])
def test_chromatic_index(graph_file, tmp_path, capsys, graph, expected):
    g = graph_file(graph)
    out = str(tmp_path / "w.txt")
    assert main(["chromatic-index", g, "--out", out]) == 0
    assert capsys.readouterr().out.strip() == expected
    k = expected.split()[0]
    assert main(["verify", "--k", k, g, out]) == 0


def test_chromatic_index_edgeless(tmp_path, capsys):
    path = tmp_path / "e.txt"
    path.write_text("p 3 0\n")
    assert main(["chromatic-index", str(path)]) == 2
    assert "no edges" in capsys.readouterr().err


@pytest.mark.parametrize("colours, code, message", [
    ("0 1 1\n0 2 2\n1 2 3\n", 0, "OK"),
    ("0 1 1\n0 2 1\n1 2 2\n", 1, "share vertex 0"),
    ("0 1 1\n0 2 2\n1 2 4\n", 1, "outside palette"),
    ("0 1 1\n0 2 2\n", 1, "uncoloured"),
])
def test_verify(graph_file, tmp_path, capsys, colours, code, message):
    g = graph_file(gen_complete(3))
    path = tmp_path / "c.txt"
    path.write_text(colours)
    assert main(["verify", "--k", "3", g, str(path)]) == code
    assert message in capsys.readouterr().out


def test_verify_format_error(graph_file, tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("0 1\n")
    assert main(["verify", "--k", "3", graph_file(gen_complete(3)), str(path)]) == 2


def test_decompose(graph_file, capsys):
    assert main(["decompose", graph_file(gen_petersen())]) == 0
    text = capsys.readouterr().out
    assert "p: 10" in text and "semi-core edges: 15" in text


def test_generate(tmp_path, capsys):
    assert main(["generate", "cycle", "3"]) == 0
    assert capsys.readouterr().out == "p 3 3\ne 0 1\ne 0 2\ne 1 2\n"
    out = tmp_path / "g.txt"
    assert main(["generate", "few-max-degree", "2", "3", "40", "--seed", "9", "--out", str(out)]) == 0
    assert out.read_text().startswith("p 40 ")
    assert main(["generate", "petersen"]) == 0
    assert main(["generate", "cycle"]) == 2
    assert main(["generate", "cycle", "2"]) == 2


def test_bench_rows_and_output(capsys):
    rows = bench_rows(3, 2, [200], seed=1, repeats=2)
    assert len(rows) == 1
    assert set(rows[0]) == {"n", "m", "q", "t_decompose", "t_semicore", "t_extend", "t_total"}
    assert main(["bench", "--k", "3", "--p", "2", "--n", "100,200", "--repeats", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    csv_start = lines.index("n,m,q,t_decompose,t_semicore,t_extend,t_total")
    assert len(lines[csv_start + 1:]) == 2


def test_bench_rejects():
    assert main(["bench", "--k", "3", "--p", "2", "--n", "100", "--repeats", "0"]) == 2
    assert main(["bench", "--k", "3", "--p", "2", "--n", "5"]) == 2
