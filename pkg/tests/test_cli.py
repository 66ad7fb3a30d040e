import json

import pytest

from outerfan.cli import main
from outerfan.graph import complete_graph, cycle_graph, format_edge_list, path_graph


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


@pytest.fixture
def k5_file(tmp_path):
    p = tmp_path / "k5.txt"
    p.write_text(format_edge_list(complete_graph(5)))
    return str(p)


class TestRecognizeCommand:
    def test_k5_accepted(self, capsys, k5_file):
        code, report = run(capsys, ["recognize", k5_file])
        assert code == 0
        assert report["verdict"] == "accepted"
        assert report["embeddings"] == [[0, 1, 2, 3, 4]]

    def test_p3_rejected(self, capsys, tmp_path):
        p = tmp_path / "p3.txt"
        p.write_text(format_edge_list(path_graph(3)))
        code, report = run(capsys, ["recognize", str(p)])
        assert code == 1
        assert report["verdict"] == "rejected_not_biconnected"

    def test_malformed_line(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("3 1\na b c\n")
        code = main(["recognize", str(p)])
        err = capsys.readouterr().err
        assert code == 2
        assert "line 2" in err

    def test_oracle_agreement(self, capsys, k5_file):
        code, report = run(capsys, ["recognize", k5_file, "--oracle"])
        assert code == 0
        assert report["agreement"] is True

    def test_svg_written(self, capsys, tmp_path, k5_file):
        out = tmp_path / "k5.svg"
        code, report = run(capsys, ["recognize", k5_file, "--svg", str(out)])
        assert code == 0
        assert out.read_text().count("<line") == 10

    def test_outer_edges_flag(self, capsys, tmp_path):
        p = tmp_path / "k4.txt"
        p.write_text(format_edge_list(complete_graph(4)))
        code, report = run(capsys, ["recognize", str(p), "--outer-edges", "0-2"])
        assert code == 0

    def test_missing_file(self, capsys):
        assert main(["recognize", "/nonexistent/file"]) == 2


class TestOracleCommand:
    def test_k6(self, capsys, tmp_path):
        p = tmp_path / "k6.txt"
        p.write_text(format_edge_list(complete_graph(6)))
        code, report = run(capsys, ["oracle", str(p)])
        assert code == 0
        assert report["outer_fan_planar"] is False
        assert report["maximal"] is False

    def test_c7(self, capsys, tmp_path):
        p = tmp_path / "c7.txt"
        p.write_text(format_edge_list(cycle_graph(7)))
        code, report = run(capsys, ["oracle", str(p)])
        assert report["outer_fan_planar"] is True
        assert report["maximal"] is False

    def test_size_cap(self, capsys, tmp_path):
        p = tmp_path / "c13.txt"
        p.write_text(format_edge_list(cycle_graph(13)))
        assert main(["oracle", str(p)]) == 2


class TestReductionCommands:
    def test_end_to_end(self, capsys, tmp_path):
        inst = tmp_path / "inst.json"
        wit = tmp_path / "wit.json"
        code, report = run(
            capsys,
            ["gen-3p", "--m", "3", "--B", "24", "--A", "7,7,7,8,8,8,8,9,10", "-o", str(inst)],
        )
        assert code == 0 and report["K"] == 13
        code, report = run(
            capsys,
            ["route-witness", "--instance", str(inst), "--triples", "0,1,8;2,3,7;4,5,6", "-o", str(wit)],
        )
        assert code == 0
        assert report["vertical_crossings_per_path"] == [102, 102, 102]
        code, report = run(
            capsys, ["verify-witness", "--instance", str(inst), "--witness", str(wit)]
        )
        assert code == 0 and report["valid"] is True

        # tamper: force a barrier 2-hop crossing, expect exit 1 and a report
        payload = json.loads(wit.read_text())
        instd = json.loads(inst.read_text())
        barrier = next(
            k for k, r in instd["roles"]["edges"].items() if r["kind"] == "two_hop"
        )
        bset = set(map(int, barrier.split(",")))
        foreign = next(
            k
            for k, r in instd["roles"]["edges"].items()
            if r["kind"] == "path" and not bset & set(map(int, k.split(",")))
        )
        payload.setdefault(barrier, []).append(foreign)
        payload.setdefault(foreign, []).append(barrier)
        tampered = tmp_path / "tampered.json"
        tampered.write_text(json.dumps(payload))
        code, report = run(
            capsys, ["verify-witness", "--instance", str(inst), "--witness", str(tampered)]
        )
        assert code == 1
        assert report["valid"] is False
        assert any(v["kind"] == "barrier_crossed" for v in report["violations"])

    def test_gen_rejects_bad_input(self, capsys, tmp_path):
        code = main(
            ["gen-3p", "--m", "3", "--B", "24", "--A", "7,7,7,8,8,8,8,9,12", "-o", str(tmp_path / "x.json")]
        )
        assert code == 2
