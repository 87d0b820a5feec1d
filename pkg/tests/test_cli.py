import io

import pytest

from eflcolor import Coloring, Hypergraph, parse, parse_coloring, serialize, serialize_coloring
from eflcolor.cli import main
from eflcolor.errors import DuplicateVertexInEdge, EmptyEdge, FormatError, IsolatedVertex
from eflcolor.formats import parse_instance, parse_many
from eflcolor.generators import dual_affine_plane, pencil


def run(argv, stdin=""):
    out = io.StringIO()
    import sys

    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out=out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


class TestParse:
    def test_single_edge(self):
        assert parse("p hg 3 1\ne 0 1 2\n") == Hypergraph(3, [[0, 1, 2]])

    def test_comments_ignored(self):
        text = "c hello\np hg 3 2\nc mid\ne 0 1\n\nc x\ne 1 2\n"
        assert parse(text).edges == ((0, 1), (1, 2))

    def test_duplicate_vertex(self):
        with pytest.raises(DuplicateVertexInEdge, match="line 2"):
            parse("p hg 2 1\ne 0 0 1\n")

    def test_empty_edge(self):
        with pytest.raises(EmptyEdge):
            parse("p hg 1 2\ne 0\ne\n")

    def test_syntax_errors(self):
        with pytest.raises(FormatError) as info:
            parse("p hg 2 1\ne 0 x\n")
        assert info.value.line == 2
        with pytest.raises(FormatError):
            parse("p graph 2 1\ne 0 1\n")
        with pytest.raises(FormatError):
            parse("p hg 2 2\ne 0 1\n")
        with pytest.raises(FormatError):
            parse("q 1\n")

    def test_sparse_labels_remapped(self):
        pi = parse_instance("e 10 30\ne 30 70\n")
        assert pi.labels == (10, 30, 70)
        assert pi.remapped
        assert pi.hypergraph.edges == ((0, 1), (1, 2))

    def test_isolated_declared_vertex(self):
        with pytest.raises(IsolatedVertex):
            parse("p hg 3 1\ne 0 1\n")

    def test_round_trip(self):
        for H in (dual_affine_plane(3), pencil(4), Hypergraph(2, [[0], [0, 1], [0]])):
            text = serialize(H)
            assert parse(text) == H
            assert serialize(parse(text)) == text

    def test_parse_many(self):
        text = serialize(pencil(2)) + serialize(pencil(3))
        assert [p.hypergraph for p in parse_many(text)] == [pencil(2), pencil(3)]
        with pytest.raises(FormatError):
            parse(text)

    def test_coloring_round_trip(self):
        col = Coloring((0, 2, 1), 3)
        assert parse_coloring(serialize_coloring(col, ["x"]), 3) == col

    def test_coloring_errors(self):
        with pytest.raises(FormatError):
            parse_coloring("v 0 1\n", 1)
        with pytest.raises(FormatError):
            parse_coloring("s 2\nv 0 5\n", 1)
        with pytest.raises(FormatError):
            parse_coloring("s 2\nv 0 1\nv 0 1\n", 1)


class TestCommands:
    def test_gen_dualaffine_then_partition(self):
        code, inst = run(["gen", "dualaffine", "3"])
        assert code == 0
        code, out = run(["color", "-", "--algo", "partition", "--n", "9"], stdin=inst)
        assert code == 0
        assert "c verdict valid" in out
        assert "c colors_used 4" in out

    def test_gen_pencil_then_efl(self):
        _, inst = run(["gen", "pencil", "5"])
        code, out = run(["color", "-", "--algo", "efl"], stdin=inst)
        assert code == 0
        assert "c rainbow yes" in out and "c colors_used 5" in out

    def test_color_output_feeds_check(self, tmp_path):
        _, inst = run(["gen", "pencil", "4"])
        f = tmp_path / "p.hg"
        f.write_text(inst)
        _, col = run(["color", str(f), "--algo", "efl"])
        c = tmp_path / "p.col"
        c.write_text(col)
        assert run(["check", str(f), str(c)]) == (0, "valid\n")

    def test_check_corrupted(self, tmp_path):
        f = tmp_path / "p.hg"
        f.write_text("p hg 3 1\ne 0 1 2\n")
        c = tmp_path / "bad.col"
        c.write_text("s 3\nv 0 0\nv 1 0\nv 2 1\n")
        code, out = run(["check", str(f), str(c)])
        assert code == 1
        assert out == "invalid edge 0 vertices 0 1 color 0\n"

    def test_check_partial(self, tmp_path):
        f = tmp_path / "p.hg"
        f.write_text("p hg 3 1\ne 0 1 2\n")
        c = tmp_path / "part.col"
        c.write_text("s 3\nv 0 0\n")
        assert run(["check", str(f), str(c)]) == (1, "invalid uncolored vertex 1\n")

    def test_classify(self):
        _, inst = run(["gen", "pencil", "4"])
        code, out = run(["classify", "-", "--n", "4"], stdin=inst)
        assert code == 0
        assert "class Dense" in out and "linear yes" in out and "uniform yes n 4" in out
        code, _ = run(["classify", "-", "--n", "4", "--expect", "WeaklyDense"], stdin=inst)
        assert code == 1

    def test_classify_reports_violation(self):
        from conftest import five_degree_two_instance

        code, out = run(["classify", "-", "--n", "9"], stdin=serialize(five_degree_two_instance()))
        assert code == 0
        assert "class NotWeaklyDense" in out
        assert "violation k 2 count 5 witnesses 0 1 2 3 4" in out

    def test_chi(self):
        _, inst = run(["gen", "dualaffine", "2"])
        code, out = run(["chi", "-"], stdin=inst)
        assert code == 0 and out.startswith("chi 3\n")

    def test_chi_cap_env(self, monkeypatch):
        _, inst = run(["gen", "dualaffine", "3"])
        monkeypatch.setenv("EFLCOLOR_ORACLE_CAP", "5")
        code, _ = run(["chi", "-"], stdin=inst)
        assert code == 2
        code, _ = run(["chi", "-", "--cap", "20"], stdin=inst)
        assert code == 0

    def test_trace(self):
        _, inst = run(["gen", "random", "12", "--seed", "4", "--weakly-dense"])
        code, out = run(["trace", "-"], stdin=inst)
        assert code == 0
        assert out.startswith("n 12\n")
        assert "c verdict valid" in out
        assert sum(line.startswith("phase3 edge") for line in out.splitlines()) == 12

    def test_gen_random_count(self, tmp_path):
        f = tmp_path / "many.hg"
        assert run(["gen", "random", "5", "--seed", "3", "--count", "4", "-o", str(f)]) == (0, "")
        insts = parse_many(f.read_text())
        assert len(insts) == 4
        assert all(p.hypergraph.edge_count == 5 for p in insts)

    def test_errors_exit_2(self):
        assert run(["color", "-", "--algo", "efl"], stdin="p hg 2 1\ne 0 0\n")[0] == 2
        assert run(["gen", "dualaffine", "4"])[0] == 2
        assert run(["gen", "random", "4"])[0] == 2
        assert run(["bogus"])[0] == 2
        assert run(["color", "-", "--algo", "efl", "--n", "3"], stdin=serialize(pencil(4)))[0] == 2
        assert run(["color", "-", "--algo", "efl"], stdin=serialize(dual_affine_plane(2)))[0] == 2

    def test_module_entry_point(self):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "eflcolor", "gen", "pencil", "2"], capture_output=True, text=True, check=True
        )
        assert proc.stdout == "c pencil n 2\np hg 3 2\ne 0 1\ne 0 2\n"
