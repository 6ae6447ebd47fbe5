from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

from symquandle.core.freemod import GramForm, make_form, scaled_form, standard_form, zero_form
from symquandle.core.quandle import FiniteQuandle, quandle_check
from symquandle.core.ring import Ring, RingDescriptor, ring_make
from symquandle.core.symplectic import DEFAULT_SIZE_CAP, symplectic_quandle
from symquandle.errors import ConfigError, SizeCapExceeded

FormKind = Literal["gram", "standard", "scaled", "zero"]


@dataclass(frozen=True)
class SymplecticInstance:
    name: str
    ring: Ring
    rank: int
    form: GramForm
    form_kind: FormKind

    @property
    def size(self) -> int:
        return self.ring.order**self.rank

    def quandle(self, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteQuandle:
        return symplectic_quandle(self.ring, self.rank, self.form, size_cap=size_cap)

    def describe(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "ring": self.ring.descriptor.to_json(),
            "rank": self.rank,
            "form": self.form.to_json(),
        }


@dataclass(frozen=True)
class TableInstance:
    """An ad-hoc quandle given by its operation table."""

    name: str
    table: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.table)

    def quandle(self, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteQuandle:
        if self.size > size_cap:
            raise SizeCapExceeded(f"table size {self.size} exceeds the size cap {size_cap}")
        return quandle_check(self.table)

    def describe(self) -> dict[str, Any]:
        return {"name": self.name, "size": self.size}


Instance = SymplecticInstance | TableInstance


def _int(raw: dict[str, Any], key: str) -> int:
    v = raw.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ConfigError(f"{key} must be an integer")
    return v


def _parse_form(ring: Ring, rank: int, data: dict[str, Any]) -> tuple[GramForm, FormKind]:
    if "gram" in data:
        gram = data["gram"]
        if not isinstance(gram, list) or not all(isinstance(row, list) for row in gram):
            raise ConfigError("gram must be a list of rows")
        form = make_form(ring, gram)
        if form.rank != rank:
            raise ConfigError(f"gram is {form.rank} x {form.rank} but rank is {rank}")
        return form, "gram"

    spec = data.get("form")
    if spec is None:
        raise ConfigError("instance needs 'gram' or 'form'")
    c = data.get("c")
    if isinstance(spec, dict):
        if "gram" in spec:
            return _parse_form(ring, rank, {"gram": spec["gram"]})
        c = spec.get("c", c)
        spec = spec.get("form")

    if spec == "standard":
        return standard_form(ring, rank), "standard"
    if spec == "scaled":
        if c is None:
            raise ConfigError("scaled form needs 'c'")
        return scaled_form(ring, rank, c), "scaled"
    if spec == "zero":
        return zero_form(ring, rank), "zero"
    raise ConfigError(f"unknown form {spec!r} (expected standard, scaled, zero or a gram matrix)")


def parse_instance(data: Any, *, name: str = "instance") -> Instance:
    if not isinstance(data, dict):
        raise ConfigError("instance config must be an object")
    if "schema" in data and data["schema"] != 1:
        raise ConfigError("Unsupported instance schema")
    name = str(data.get("name", name))

    if "op" in data:
        op = data["op"]
        size = _int(data, "size")
        if not isinstance(op, list) or len(op) != size:
            raise ConfigError(f"op must be a list of {size} rows")
        rows = []
        for row in op:
            if not isinstance(row, list) or len(row) != size:
                raise ConfigError(f"every op row must have {size} entries")
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
                raise ConfigError("op entries must be integers")
            rows.append(tuple(row))
        return TableInstance(name=name, table=tuple(rows))

    ring = ring_make(RingDescriptor.from_json(data.get("ring")))
    rank = _int(data, "rank")
    if rank < 1:
        raise ConfigError(f"rank must be >= 1, got {rank}")
    form, kind = _parse_form(ring, rank, data)
    return SymplecticInstance(name=name, ring=ring, rank=rank, form=form, form_kind=kind)


def load_instance(path: str | Path) -> Instance:
    p = Path(path)
    data = json.loads(p.read_text(encoding="utf-8"))
    return parse_instance(data, name=p.stem)
