import io
import json

import pytest

from src.cli import EXIT_ERROR, EXIT_FINDINGS, EXIT_OK, main
from src.components.families import FamilySpec, generate
from src.utils.graph6 import decode_graph6, encode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParams:
    def test_t11_json(self, capsys):
        code, out, _ = run(capsys, "params", "--family", "T", "--n", "11")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["n"] == 11 and data["m"] == 27 and data["kappa"] == 3
        assert (data["params"]["pi_num"], data["params"]["pi_den"]) == (6, 5)
        assert (data["params"]["rho_num"], data["params"]["rho_den"]) == (11, 5)
        assert data["labels"][0] == "b_0"
        assert data["status"][0] == 22

    def test_inline_graph6_text(self, capsys):
        code, out, _ = run(capsys, "params", "--g6", "C~", "--format", "text")
        assert code == EXIT_OK
        assert out == "C~ n=4 m=6 kappa=3 rad=1 diam=1 pi=1/1 rho=1/1\n"

    def test_file_with_several_graphs(self, capsys, tmp_path):
        path = tmp_path / "two.g6"
        path.write_text("C~\nCh\n")
        code, out, _ = run(capsys, "params", "--in", str(path))
        assert code == EXIT_OK
        assert [row["graph6"] for row in json.loads(out)] == ["C~", "Ch"]

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(">>graph6<<Ch\n"))
        code, out, _ = run(capsys, "params", "--in", "-", "--format", "csv")
        assert code == EXIT_OK
        header, row = out.splitlines()
        assert header.startswith("graph6,n,m,kappa")
        assert row.startswith("Ch,4,3,1")

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "out" / "k4.json"
        code, out, _ = run(capsys, "params", "--g6", "C~", "--out", str(target))
        assert code == EXIT_OK and out == ""
        assert json.loads(target.read_text())["kappa"] == 3


class TestFamily:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "family", "--family", "Q", "--n", "8")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["provenance"]["pi"] == "known-discrepancy"
        assert (data["corrections"]["pi_num"], data["corrections"]["pi_den"]) == (10, 7)
        assert (data["closed_forms"]["pi_num"], data["closed_forms"]["pi_den"]) == (24, 7)

    def test_g6_round_trip(self, capsys):
        code, out, _ = run(capsys, "family", "--family", "MOP", "--n", "8", "--format", "g6")
        assert code == EXIT_OK
        assert decode_graph6(out).edges() == generate(FamilySpec("MOP", 8)).edges()

    def test_text_uses_labels(self, capsys):
        _, out, _ = run(capsys, "family", "--family", "Gnk", "--n", "5", "--kappa", "1", "--format", "text")
        assert out.splitlines()[1] == "b_0 x1_1"

    def test_inadmissible(self, capsys):
        code, _, err = run(capsys, "family", "--family", "T", "--n", "12")
        assert code == EXIT_ERROR
        assert err.startswith("error: n: ")

    def test_missing_order(self, capsys):
        code, _, err = run(capsys, "family", "--family", "T")
        assert code == EXIT_ERROR
        assert "error: n: " in err


class TestClassify:
    def test_k4(self, capsys):
        code, out, _ = run(capsys, "classify", "--g6", "C~")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["flags"]["maximal_planar"] and not data["flags"]["outerplanar"]
        assert len(data["embedding"]["faces"]) == 4

    def test_k5_witness(self, capsys):
        k5 = encode_graph6(decode_graph6("D~{"))
        _, out, _ = run(capsys, "classify", "--g6", k5)
        assert json.loads(out)["embedding"]["kuratowski"]["kind"] == "K5"


class TestLemmas:
    def test_mop8_passes(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--family", "MOP", "--n", "8")
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["failures"] == 0
        assert {row["lemma_id"] for row in data["reports"]} == {"L3.3"}

    def test_precondition(self, capsys):
        code, _, err = run(capsys, "lemmas", "--family", "T", "--n", "11", "--lemma", "L3.1b")
        assert code == EXIT_ERROR
        assert err.startswith("error: class: ")

    def test_nothing_applies(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--g6", "Ch", "--format", "text")
        assert code == EXIT_OK
        assert out == "no lemma applies\n"


class TestCheck:
    def test_k4_file(self, capsys, tmp_path):
        path = tmp_path / "k4.g6"
        path.write_text("C~\n")
        code, out, _ = run(capsys, "check", "--in", str(path))
        data = json.loads(out)
        assert code == EXIT_OK
        assert data["violations"] == []
        assert "THM4.1" in [b["id"] for b in data["bounds"]]

    def test_gnk_csv(self, capsys):
        code, out, _ = run(capsys, "check", "--family", "Gnk", "--n", "12", "--kappa", "2", "--format", "csv")
        assert code == EXIT_OK
        thm51 = [line for line in out.splitlines() if ",THM5.1," in line]
        assert len(thm51) == 1 and ",equality," in thm51[0]

    def test_text_marks_quarantined(self, capsys):
        _, out, _ = run(capsys, "check", "--family", "MOP", "--n", "8", "--format", "text")
        assert "COR5.5d-printed" in out and "(quarantined)" in out

    def test_violation_exit_code(self, capsys, monkeypatch):
        from src.components import bounds_registry

        spec = bounds_registry.REGISTRY["THM1.1b"]
        broken = type(spec)(**{**spec.__dict__, "formula": lambda n, k, d: bounds_registry.Fraction(0)})
        monkeypatch.setitem(bounds_registry.REGISTRY, "THM1.1b", broken)
        code, out, _ = run(capsys, "check", "--g6", "Ch")
        assert code == EXIT_FINDINGS
        assert json.loads(out)["violations"] == ["THM1.1b"]


class TestEnumerate:
    def test_g6(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "maximal_planar", "--n", "6")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 2

    def test_json(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--class", "maximal_outerplanar", "--n", "8", "--format", "json")
        assert json.loads(out)["count"] == 12

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "enumerate", "--class", "quadrangulation", "--n", "12")
        assert code == EXIT_ERROR
        assert err.startswith("error: n: ")


class TestSweep:
    def test_mop_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "--class", "maximal_outerplanar", "--n-max", "7", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("class,n,count,recount,id")

    def test_random_json(self, capsys):
        code, out, _ = run(capsys, "sweep", "--class", "random_connected", "--n-max", "7",
                           "--seed", "3", "--count", "15")
        data = json.loads(out)
        assert code == EXIT_OK
        assert (data["seed"], data["count"]) == (3, 15)
        assert sum(row["count"] for row in data["orders"]) == 15

    def test_recount_disagreement_exits_with_findings(self, capsys, monkeypatch):
        from src.pipeline.sweep_pipeline import SweepPipeline

        monkeypatch.setattr(SweepPipeline, "_recount", lambda self, graph_class, n: 99)
        code, out, _ = run(capsys, "sweep", "--class", "maximal_outerplanar", "--n-max", "5")
        assert code == EXIT_FINDINGS
        data = json.loads(out)
        assert data["recount_mismatches"] == [3, 4, 5]
        assert data["violations"] == []

    def test_bad_n_max(self, capsys):
        code, _, err = run(capsys, "sweep", "--class", "maximal_outerplanar", "--n-max", "20")
        assert code == EXIT_ERROR
        assert err.startswith("error: n-max: ")


class TestDiscrepancies:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "discrepancies")
        rows = json.loads(out)
        assert code == EXIT_OK
        assert {"Q.pi", "Q.k", "COR5.5d-printed"} <= {row["id"] for row in rows}
        assert not any(row["matches"] for row in rows)


class TestErrors:
    @pytest.mark.parametrize(
        "argv, field",
        [
            (["params", "--g6", "C"], "graph6"),
            (["params", "--g6", ":Fa@x^"], "graph6"),
            (["params", "--g6", "Bw", "--family", "T"], "input"),
            (["params"], "input"),
            (["params", "--g6", "C`"], "graph"),
        ],
    )
    def test_input_errors(self, capsys, argv, field):
        code, out, err = run(capsys, *argv)
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith(f"error: {field}: ")
        assert len(err.strip().splitlines()) == 1

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", "--in", str(tmp_path / "absent.g6"))
        assert code == EXIT_ERROR
        assert err.startswith("error: in: ")

    def test_usage_errors_exit_with_one(self, capsys):
        code, _, err = run(capsys, "params", "--format", "xml", "--g6", "C~")
        assert code == EXIT_ERROR
        assert err.startswith("error: usage: ")

    def test_no_command(self, capsys):
        code, _, err = run(capsys)
        assert code == EXIT_ERROR
        assert err.startswith("error: command: ")
