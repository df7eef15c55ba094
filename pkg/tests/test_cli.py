import json
import logging
import os

import pytest

from bottsamelson.BottSamelsonRunner import BottSamelsonRunner
from bottsamelson.cli import main
from bottsamelson.compute.command_factory import get_command_by_name
from bottsamelson.constants import EXIT_NON_GKM, EXIT_OK, EXIT_USAGE, TOOL_VERSION
from bottsamelson.exceptions import InternalInvariant
from bottsamelson.model.CacheEntry import CacheEntry, cache_key
from bottsamelson.model.RunConfig import RunConfig, resolve_cache_dir


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def decompose_config(cache_dir, **kwargs):
    return RunConfig(command="decompose", type_label="A", rank=2, word=(1, 2, 1), cache_dir=str(cache_dir), **kwargs)


class TestCommands:
    def test_census(self, capsys, tmp_path):
        code, out = run_cli(capsys, "census", "--type", "A", "--rank", "2", "--n", "3", "--cache-dir", str(tmp_path))
        assert code == EXIT_OK
        assert json.loads(out) == {"type": "A", "rank": 2, "n": 3, "count": 6}

    def test_graded_rank(self, capsys):
        code, out = run_cli(capsys, "grk", "--type", "A", "--rank", "2", "--word", "1,2,1,2,1", "--x", "2,1", "--no-cache")
        assert code == EXIT_OK
        assert json.loads(out)["grk"]["display"] == "1+3v^-2+v^-4"

    def test_decompose(self, capsys):
        code, out = run_cli(capsys, "decompose", "--type", "A", "--rank", "2", "--word", "1,2,1", "--no-cache")
        assert code == EXIT_OK
        assert json.loads(out) == [{"z": "1,2,1", "r": 0, "mult": 1}, {"z": "1", "r": -2, "mult": 1}]

    def test_pretty_output_is_indented(self, capsys):
        _, out = run_cli(capsys, "kl", "--type", "A", "--rank", "1", "--word", "1", "--no-cache", "--pretty")
        assert out.startswith("{\n  ")

    def test_tree_as_dot(self, capsys):
        code, out = run_cli(capsys, "tree", "--type", "A", "--rank", "2", "--word", "1,2,1", "--x", "1", "--dot", "--no-cache")
        assert code == EXIT_OK
        assert "digraph" in out

    def test_graph_as_graphml(self, capsys):
        code, out = run_cli(capsys, "graph", "--type", "A", "--rank", "2", "--word", "1,2", "--format", "graphml", "--no-cache")
        assert code == EXIT_OK
        assert "<graphml" in out

    def test_affine_gkm_report(self, capsys):
        code, out = run_cli(capsys, "gkm", "--type", "A", "--rank", "1", "--affine", "--char", "3", "--word", "0,1,0,1", "--no-cache")
        assert code == EXIT_OK
        assert json.loads(out)["passed"] is False

    def test_census_rejects_affine(self, capsys):
        code, out = run_cli(capsys, "census", "--type", "A", "--rank", "1", "--affine", "--no-cache")
        assert code == EXIT_USAGE
        assert json.loads(out)["error"] == "ValueError"

    def test_unknown_command_name(self):
        with pytest.raises(ValueError):
            get_command_by_name("plot")


class TestExitCodes:
    def test_non_gkm_input(self, capsys):
        code, out = run_cli(capsys, "decompose", "--type", "A", "--rank", "2", "--word", "1,2,1", "--char", "3", "--no-cache")
        assert code == EXIT_NON_GKM
        assert json.loads(out)["error"] == "NonGKMInput"

    def test_missing_required_option(self, capsys):
        with pytest.raises(SystemExit) as e:
            main(["decompose", "--rank", "2"])
        assert e.value.code == EXIT_USAGE

    def test_invalid_word_index(self, capsys):
        code, out = run_cli(capsys, "decompose", "--type", "A", "--rank", "2", "--word", "1,5", "--no-cache")
        assert code == EXIT_USAGE
        assert json.loads(out)["error"] == "ValueError"

    def test_even_characteristic(self, capsys):
        code, _ = run_cli(capsys, "decompose", "--type", "A", "--rank", "2", "--word", "1", "--char", "4", "--no-cache")
        assert code == EXIT_USAGE

    def test_missing_word(self, capsys):
        code, out = run_cli(capsys, "tree", "--type", "A", "--rank", "2", "--x", "1", "--no-cache")
        assert code == EXIT_USAGE
        assert "--word" in json.loads(out)["message"]

    def test_usage_errors_are_not_internal(self, capsys):
        _, out = run_cli(capsys, "decompose", "--type", "A", "--rank", "2", "--word", "1,5", "--no-cache")
        assert json.loads(out)["internal"] is False

    def test_broken_invariant_is_flagged_and_logged(self, monkeypatch, tmp_path, caplog):
        def broken(self):
            raise InternalInvariant("Phi is not symmetric")

        monkeypatch.setattr(BottSamelsonRunner, "compute", broken)
        runner = BottSamelsonRunner(decompose_config(tmp_path), logging.getLogger("bottsamelson.tests"))
        with caplog.at_level(logging.ERROR):
            code, out = runner.run()
        assert code == EXIT_USAGE
        assert json.loads(out) == {"error": "InternalInvariant", "message": "Phi is not symmetric", "internal": True}
        assert "Internal invariant broken in decompose" in caplog.text

    def test_non_reduced_word_needs_flag(self, capsys):
        code, out = run_cli(capsys, "decompose", "--type", "A", "--rank", "1", "--word", "1,1", "--char", "5", "--no-cache")
        assert code == EXIT_USAGE
        assert json.loads(out)["error"] == "NotReduced"
        code, _ = run_cli(
            capsys, "decompose", "--type", "A", "--rank", "1", "--word", "1,1", "--char", "5", "--allow-nonreduced", "--no-cache"
        )
        assert code == EXIT_OK


class TestCache:
    def test_cold_miss_then_hit(self, tmp_path):
        config = decompose_config(tmp_path)
        runner = BottSamelsonRunner(config)
        key = cache_key(config.key_parts())
        assert runner.cache_get(key) is None
        first = runner.result()
        assert os.path.exists(tmp_path / f"{key}.json")
        assert runner.cache_get(key).value == first
        assert BottSamelsonRunner(config).result() == first

    def test_hit_is_served_without_recomputing(self, tmp_path):
        config = decompose_config(tmp_path)
        runner = BottSamelsonRunner(config)
        key = cache_key(config.key_parts())
        runner.cache_put(CacheEntry(key, TOOL_VERSION, ["stored"]))
        assert runner.result() == ["stored"]

    def test_version_mismatch_is_a_miss(self, tmp_path):
        config = decompose_config(tmp_path)
        runner = BottSamelsonRunner(config)
        key = cache_key(config.key_parts())
        runner.cache_put(CacheEntry(key, "0.0.1", ["old"]))
        assert runner.cache_get(key) is None
        assert runner.result() != ["old"]

    def test_corrupt_entry_is_a_miss(self, tmp_path):
        config = decompose_config(tmp_path)
        runner = BottSamelsonRunner(config)
        key = cache_key(config.key_parts())
        (tmp_path / f"{key}.json").write_text("{not json", encoding="utf-8")
        assert runner.cache_get(key) is None
        assert runner.result()[0]["z"] == "1,2,1"

    def test_verify_replaces_a_stale_entry(self, tmp_path):
        config = decompose_config(tmp_path, verify_cache=True)
        runner = BottSamelsonRunner(config)
        key = cache_key(config.key_parts())
        runner.cache_put(CacheEntry(key, TOOL_VERSION, ["stale"]))
        code, out = runner.run()
        assert code == EXIT_USAGE
        assert json.loads(out)["error"] == "CacheError"
        assert runner.cache_get(key).value[0]["z"] == "1,2,1"
        assert runner.run()[0] == EXIT_OK

    def test_keys_follow_semantic_inputs(self, tmp_path):
        base = decompose_config(tmp_path)
        assert cache_key(base.key_parts()) == cache_key(decompose_config(tmp_path / "other", pretty=True).key_parts())
        assert cache_key(base.key_parts()) != cache_key(decompose_config(tmp_path, characteristic=5).key_parts())
        assert cache_key(base.key_parts()) != cache_key(base.key_parts(), version="0.0.1")

    def test_cache_dir_resolution(self, monkeypatch, tmp_path):
        monkeypatch.setenv("CACHE_DIR", str(tmp_path / "env"))
        assert resolve_cache_dir(None) == str(tmp_path / "env")
        assert resolve_cache_dir(str(tmp_path / "flag")) == str(tmp_path / "flag")
        monkeypatch.delenv("CACHE_DIR")
        assert resolve_cache_dir(None).endswith(os.path.join(".cache", "bottsamelson"))

    def test_cli_writes_to_env_cache_dir(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("CACHE_DIR", str(tmp_path))
        code, _ = run_cli(capsys, "kl", "--type", "A", "--rank", "2", "--word", "1,2")
        assert code == EXIT_OK
        assert len(list(tmp_path.glob("*.json"))) == 1
