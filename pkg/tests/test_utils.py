import pytest

from src.exception import CustomException, Graph6FormatError
from src.utils.common import dump_json, frame_to_csv, load_json, load_text_file, save_json
from src.utils.config import DEFAULTS, EngineConfig
from src.utils.graph6 import (
    decode_graph6,
    encode_graph6,
    iter_graph6_stream,
    load_graph6_file,
    strip_graph6_header,
    write_graph6_stream,
)
from helpers import complete, cycle, path


class TestGraph6:
    def test_known_codes(self):
        assert encode_graph6(complete(4)) == "C~"
        assert encode_graph6(path(4)) == "Ch"
        assert decode_graph6("D~{").edge_count == 10

    def test_header_is_stripped(self):
        assert strip_graph6_header(">>graph6<<Ch\n") == "Ch"
        assert decode_graph6(">>graph6<<Ch").edges() == path(4).edges()

    @pytest.mark.parametrize("text", ["", "C", "C~~", ":Fa@x^", "C\x10"])
    def test_malformed(self, text, rejected):
        err = rejected(Graph6FormatError, decode_graph6, text)
        assert err.field == "graph6"

    def test_stream(self, tmp_path):
        text = write_graph6_stream([complete(4), cycle(5)])
        assert text.count("\n") == 2
        assert [g.n for g in iter_graph6_stream(["", *text.splitlines()])] == [4, 5]
        target = tmp_path / "pair.g6"
        target.write_text(text)
        assert [g.edge_count for g in load_graph6_file(str(target))] == [6, 5]


class TestCommon:
    def test_dump_json_is_sorted(self):
        assert dump_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'

    def test_json_round_trip(self, tmp_path):
        target = str(tmp_path / "nested" / "data.json")
        save_json({"n": 8}, target)
        assert load_json(target) == {"n": 8}

    def test_missing_file(self, tmp_path):
        with pytest.raises(CustomException) as excinfo:
            load_text_file(str(tmp_path / "absent.txt"))
        assert isinstance(excinfo.value.original, FileNotFoundError)

    def test_frame_to_csv_keeps_column_order(self):
        assert frame_to_csv([{"b": 1, "a": 2}], ["a", "b"]) == "a,b\n2,1\n"


class TestEngineConfig:
    def test_defaults_without_file(self, tmp_path):
        config = EngineConfig(str(tmp_path / "missing.yaml"))
        assert config.enumeration_range("maximal_planar") == (4, 10)
        assert config.as_dict() == DEFAULTS

    def test_file_overrides_merge(self, tmp_path):
        target = tmp_path / "config.yaml"
        target.write_text("enumeration:\n  quadrangulation:\n    max_n: 8\n")
        config = EngineConfig(str(target))
        assert config.enumeration_range("quadrangulation") == (4, 8)
        assert config.enumeration_range("maximal_outerplanar") == (3, 14)

    def test_worker_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PLANAR_DIST_WORKERS", "3")
        assert EngineConfig(str(tmp_path / "missing.yaml")).workers() == 3

    def test_recount_limits(self, tmp_path):
        config = EngineConfig(str(tmp_path / "missing.yaml"))
        assert config.recount_max_n("maximal_planar") == 6
        assert config.recount_max_n("quadrangulation") == 0

    def test_unknown_class(self, tmp_path):
        with pytest.raises(CustomException):
            EngineConfig(str(tmp_path / "missing.yaml")).enumeration_range("cubic")
