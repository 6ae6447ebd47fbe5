"""Tests for instance config loading and validation."""

import json
from pathlib import Path

import pytest

from symquandle.config import SymplecticInstance, TableInstance, load_instance, parse_instance
from symquandle.core.paths import example_config_path, get_schema_path, list_example_configs
from symquandle.errors import (
    ConfigError,
    NotAlternating,
    NotIdempotent,
    NotSelfDistributive,
    OddRankStandardForm,
    SizeCapExceeded,
)


class TestParseInstance:
    """Tests for parse_instance()."""

    def test_gram(self) -> None:
        inst = parse_instance({"ring": {"kind": "zmod", "n": 9}, "rank": 2, "gram": [[0, 3], [6, 0]]})
        assert isinstance(inst, SymplecticInstance)
        assert inst.form_kind == "gram"
        assert inst.size == 81
        assert inst.describe() == {
            "name": "instance",
            "ring": {"kind": "zmod", "n": 9},
            "rank": 2,
            "form": {"gram": [[0, 3], [6, 0]]},
        }

    def test_standard_shortcut(self) -> None:
        inst = parse_instance({"ring": {"kind": "zmod", "n": 3}, "rank": 4, "form": "standard"})
        assert inst.form_kind == "standard"
        assert inst.form.rank == 4

    def test_scaled_shortcut(self) -> None:
        inst = parse_instance({"ring": {"kind": "zmod", "n": 9}, "rank": 2, "form": "scaled", "c": 3})
        assert inst.form.gram == ((0, 3), (6, 0))

    def test_scaled_object_form(self) -> None:
        raw = {"ring": {"kind": "zmod", "n": 9}, "rank": 2, "form": {"form": "scaled", "c": 3}}
        assert parse_instance(raw).form.gram == ((0, 3), (6, 0))

    def test_scaled_needs_c(self) -> None:
        with pytest.raises(ConfigError):
            parse_instance({"ring": {"kind": "zmod", "n": 9}, "rank": 2, "form": "scaled"})

    def test_quotient_ring_scalar(self) -> None:
        raw = {
            "ring": {"kind": "quotient", "n": 3, "poly": [1, 0, 1]},
            "rank": 2,
            "form": "scaled",
            "c": [0, 1],
        }
        inst = parse_instance(raw)
        assert inst.ring.order == 9
        assert inst.form.gram[0][1] == inst.ring.coerce([0, 1])

    def test_zero(self) -> None:
        inst = parse_instance({"ring": {"kind": "zmod", "n": 2}, "rank": 2, "form": "zero"})
        assert inst.form.is_zero()

    def test_name_from_config(self) -> None:
        inst = parse_instance({"name": "mine", "ring": {"kind": "zmod", "n": 3}, "rank": 2, "form": "zero"})
        assert inst.name == "mine"

    def test_odd_rank_standard(self) -> None:
        with pytest.raises(OddRankStandardForm):
            parse_instance({"ring": {"kind": "zmod", "n": 3}, "rank": 3, "form": "standard"})

    def test_not_alternating(self) -> None:
        with pytest.raises(NotAlternating):
            parse_instance({"ring": {"kind": "zmod", "n": 3}, "rank": 2, "gram": [[0, 1], [1, 0]]})

    def test_rank_mismatch(self) -> None:
        with pytest.raises(ConfigError):
            parse_instance({"ring": {"kind": "zmod", "n": 3}, "rank": 4, "gram": [[0, 1], [2, 0]]})

    @pytest.mark.parametrize(
        "raw",
        [
            [],
            {"schema": 2, "ring": {"kind": "zmod", "n": 3}, "rank": 2, "form": "zero"},
            {"ring": {"kind": "zmod", "n": 3}, "rank": 0, "form": "zero"},
            {"ring": {"kind": "zmod", "n": 3}, "rank": "2", "form": "zero"},
            {"ring": {"kind": "zmod", "n": 3}, "rank": 2},
            {"ring": {"kind": "zmod", "n": 3}, "rank": 2, "form": "hermitian"},
            {"ring": {"kind": "zmod", "n": 3}, "rank": 2, "gram": "[[0,1],[2,0]]"},
        ],
    )
    def test_rejects_malformed(self, raw: object) -> None:
        with pytest.raises(ConfigError):
            parse_instance(raw)


class TestTableInstance:
    """Tests for ad-hoc operation tables."""

    def test_dihedral(self) -> None:
        inst = parse_instance({"size": 3, "op": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})
        assert isinstance(inst, TableInstance)
        assert inst.quandle().size == 3
        assert inst.describe() == {"name": "instance", "size": 3}

    def test_axioms_checked_on_build(self) -> None:
        inst = parse_instance({"size": 2, "op": [[0, 0], [0, 0]]})
        with pytest.raises(NotIdempotent):
            inst.quandle()

    def test_large_table_checked_for_self_distributivity(self) -> None:
        n = 1025
        op = [[x] * n for x in range(n)]
        op[0][n - 1], op[1][n - 1] = 1, 0
        op[1][n - 2], op[2][n - 2] = 2, 1
        inst = parse_instance({"size": n, "op": op})
        with pytest.raises(NotSelfDistributive):
            inst.quandle()

    def test_size_cap(self) -> None:
        inst = parse_instance({"size": 3, "op": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})
        with pytest.raises(SizeCapExceeded):
            inst.quandle(size_cap=2)

    @pytest.mark.parametrize(
        "op",
        [
            [[0, 2, 1], [2, 1, 0]],
            [[0, 2, 1], [2, 1], [1, 0, 2]],
            [[0, 2, 1], [2, 1, 0], [1, 0, True]],
        ],
    )
    def test_rejects_bad_rows(self, op: list) -> None:
        with pytest.raises(ConfigError):
            parse_instance({"size": 3, "op": op})


class TestLoadInstance:
    """Tests for load_instance()."""

    def test_name_from_file_stem(self, tmp_path: Path) -> None:
        path = tmp_path / "my_instance.json"
        path.write_text(json.dumps({"ring": {"kind": "zmod", "n": 5}, "rank": 2, "form": "standard"}))
        inst = load_instance(path)
        assert inst.name == "my_instance"
        assert inst.ring.order == 5

    def test_missing_file(self) -> None:
        with pytest.raises(FileNotFoundError):
            load_instance("/nonexistent/path/instance.json")

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("not valid json {{{")
        with pytest.raises(json.JSONDecodeError):
            load_instance(path)


class TestPackagedExamples:
    """The packaged examples and schema are reachable and load."""

    def test_all_examples_load(self) -> None:
        names = list_example_configs()
        assert "z9_example.json" in names
        for name in names:
            inst = load_instance(example_config_path(name))
            assert inst.quandle().size == inst.size

    def test_example_without_suffix(self) -> None:
        assert example_config_path("z9_example").endswith("z9_example.json")

    def test_unknown_example(self) -> None:
        with pytest.raises(FileNotFoundError):
            example_config_path("no_such_instance")

    def test_schema_is_json(self) -> None:
        schema = json.loads(Path(get_schema_path()).read_text(encoding="utf-8"))
        assert {"symplectic", "table"} <= set(schema["$defs"])
