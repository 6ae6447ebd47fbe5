"""Free modules R^k with alternating bilinear forms.

Vectors are indexed canonically: index = sum(coords[i] * |R|**i), coordinate 0
least significant. A form is its Gram matrix G and <x, y> = x^T G y.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from symquandle.core.ring import Ring, is_unit, units
from symquandle.errors import DimensionMismatch, NotAlternating, OddRankStandardForm

ModuleVector = tuple[int, ...]

_ROW_CHUNK = 256


@dataclass(frozen=True)
class GramForm:
    ring: Ring
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64).reshape(self.rank, self.rank)

    def negated(self) -> GramForm:
        return GramForm(self.ring, tuple(tuple(self.ring.neg(e) for e in row) for row in self.gram))

    def is_zero(self) -> bool:
        return all(e == self.ring.zero for row in self.gram for e in row)

    def to_json(self) -> dict[str, Any]:
        return {"gram": [[self.ring.to_json_value(e) for e in row] for row in self.gram]}


def make_form(ring: Ring, entries: Sequence[Sequence[Any]]) -> GramForm:
    """Build a Gram form, rejecting anything that is not alternating."""
    k = len(entries)
    if any(len(row) != k for row in entries):
        raise DimensionMismatch("gram matrix must be square")
    gram = tuple(tuple(ring.coerce(e) for e in row) for row in entries)
    for i in range(k):
        if gram[i][i] != ring.zero:
            raise NotAlternating(f"gram[{i}][{i}] must be 0")
        for j in range(i + 1, k):
            if gram[j][i] != ring.neg(gram[i][j]):
                raise NotAlternating(f"gram[{j}][{i}] must equal -gram[{i}][{j}]")
    return GramForm(ring, gram)


def standard_form(ring: Ring, rank: int) -> GramForm:
    if rank % 2:
        raise OddRankStandardForm(f"standard form needs an even rank, got {rank}")
    return scaled_form(ring, rank, 1)


def scaled_form(ring: Ring, rank: int, c: Any) -> GramForm:
    if rank % 2:
        raise OddRankStandardForm(f"scaled form needs an even rank, got {rank}")
    cc = ring.coerce(c)
    rows = [[ring.zero] * rank for _ in range(rank)]
    for b in range(0, rank, 2):
        rows[b][b + 1] = cc
        rows[b + 1][b] = ring.neg(cc)
    return GramForm(ring, tuple(tuple(r) for r in rows))


def zero_form(ring: Ring, rank: int) -> GramForm:
    return GramForm(ring, tuple((ring.zero,) * rank for _ in range(rank)))


class FreeModule:
    """The free module R^rank with canonical vector indexing."""

    def __init__(self, ring: Ring, rank: int) -> None:
        self.ring = ring
        self.rank = rank
        self.size = ring.order**rank
        self._weights = ring.order ** np.arange(rank, dtype=np.int64)

    @functools.cached_property
    def coords(self) -> np.ndarray:
        """(size, rank) array of ring indices, row i decoding vector i."""
        idx = np.arange(self.size, dtype=np.int64)
        return (idx[:, None] // self._weights) % self.ring.order

    def encode(self, coords: np.ndarray) -> np.ndarray:
        return (np.asarray(coords, dtype=np.int64) * self._weights).sum(axis=-1)

    def index(self, v: Sequence[Any]) -> int:
        return int(self.encode(np.array(self.vector(v))))

    def decode(self, idx: int) -> ModuleVector:
        return tuple(int(c) for c in self.coords[idx])

    def vector(self, values: Sequence[Any]) -> ModuleVector:
        if len(values) != self.rank:
            raise DimensionMismatch(f"vector needs {self.rank} coordinates, got {len(values)}")
        return tuple(self.ring.coerce(v) for v in values)

    def label(self, idx: int) -> str:
        return "(" + ",".join(self.ring.label(int(c)) for c in self.coords[idx]) + ")"

    def add_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        cx = self.coords[np.asarray(x)]
        cy = self.coords[np.asarray(y)]
        return self.encode(self.ring.add_arr(cx, cy))

    def scale_arr(self, r: np.ndarray, x: np.ndarray) -> np.ndarray:
        cx = self.coords[np.asarray(x)]
        return self.encode(self.ring.mul_arr(np.asarray(r)[..., None], cx))

    def apply_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Image index of every vector under x -> A x."""
        c = self.coords
        out = np.zeros_like(c)
        for i in range(self.rank):
            acc = np.zeros(self.size, dtype=np.int64)
            for j in range(self.rank):
                acc = self.ring.add_arr(acc, self.ring.mul_arr(np.int64(matrix[i][j]), c[:, j]))
            out[:, i] = acc
        return self.encode(out)


@functools.lru_cache(maxsize=32)
def free_module(ring: Ring, rank: int) -> FreeModule:
    return FreeModule(ring, rank)


def _check_dims(form: GramForm, *vectors: Sequence[Any]) -> None:
    for v in vectors:
        if len(v) != form.rank:
            raise DimensionMismatch(f"form has rank {form.rank}, vector has {len(v)} coordinates")


def form_eval(form: GramForm, x: Sequence[Any], y: Sequence[Any]) -> int:
    _check_dims(form, x, y)
    ring = form.ring
    xs = [ring.coerce(v) for v in x]
    ys = [ring.coerce(v) for v in y]
    acc = ring.zero
    for i, xi in enumerate(xs):
        for j, yj in enumerate(ys):
            acc = ring.add(acc, ring.mul(ring.mul(xi, form.gram[i][j]), yj))
    return acc


def pairing_rows(form: GramForm, rows: Iterable[int] | np.ndarray) -> np.ndarray:
    """<x, y> for x in ``rows`` (vector indices) and every y, shape (len(rows), size)."""
    ring = form.ring
    module = free_module(ring, form.rank)
    x = module.coords[np.asarray(list(rows) if not isinstance(rows, np.ndarray) else rows)]
    k = form.rank
    # w = x^T G, one row per x
    w = np.zeros((x.shape[0], k), dtype=np.int64)
    for j in range(k):
        acc = np.zeros(x.shape[0], dtype=np.int64)
        for i in range(k):
            acc = ring.add_arr(acc, ring.mul_arr(x[:, i], np.int64(form.gram[i][j])))
        w[:, j] = acc
    y = module.coords
    values = np.zeros((x.shape[0], module.size), dtype=np.int64)
    for j in range(k):
        values = ring.add_arr(values, ring.mul_arr(w[:, j][:, None], y[:, j][None, :]))
    return values


def pairing_matrix(form: GramForm) -> np.ndarray:
    module = free_module(form.ring, form.rank)
    return pairing_rows(form, np.arange(module.size))


def _chunks(size: int) -> Iterable[np.ndarray]:
    for start in range(0, size, _ROW_CHUNK):
        yield np.arange(start, min(start + _ROW_CHUNK, size))


def determinant(form: GramForm) -> int:
    ring = form.ring

    def det(m: list[list[int]]) -> int:
        if len(m) == 1:
            return m[0][0]
        acc = ring.zero
        for col, a in enumerate(m[0]):
            if a == ring.zero:
                continue
            minor = [row[:col] + row[col + 1 :] for row in m[1:]]
            term = ring.mul(a, det(minor))
            acc = ring.add(acc, term) if col % 2 == 0 else ring.sub(acc, term)
        return acc

    if form.rank == 0:
        return ring.one
    return det([list(row) for row in form.gram])


def radical(form: GramForm) -> list[int]:
    """Indices of vectors pairing to zero with every vector."""
    module = free_module(form.ring, form.rank)
    out: list[int] = []
    for rows in _chunks(module.size):
        zero_rows = (pairing_rows(form, rows) == form.ring.zero).all(axis=1)
        out.extend(rows[zero_rows].tolist())
    return out


def is_nondegenerate(form: GramForm) -> bool:
    if is_unit(form.ring, determinant(form)):
        return True
    return radical(form) == [0]


def is_unimodular(form: GramForm) -> bool:
    return is_unit(form.ring, determinant(form))


def form_values(form: GramForm) -> list[int]:
    module = free_module(form.ring, form.rank)
    seen: set[int] = set()
    for rows in _chunks(module.size):
        seen.update(np.unique(pairing_rows(form, rows)).tolist())
    return sorted(seen)


def find_hyperbolic_pair(form: GramForm) -> tuple[ModuleVector, ModuleVector] | None:
    """First (u^-1 x, y) in canonical order with <x, y> = u a unit."""
    ring = form.ring
    module = free_module(ring, form.rank)
    inverse = units(ring)
    unit_mask = np.zeros(ring.order, dtype=bool)
    unit_mask[list(inverse)] = True
    for rows in _chunks(module.size):
        values = pairing_rows(form, rows)
        hits = unit_mask[values]
        if not hits.any():
            continue
        r, y = np.argwhere(hits)[0]
        x = int(rows[r])
        u = int(values[r, y])
        e = module.scale_arr(np.int64(inverse[u]), np.int64(x))
        return module.decode(int(e)), module.decode(int(y))
    return None
