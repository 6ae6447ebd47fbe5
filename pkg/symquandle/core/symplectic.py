from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from symquandle.core.freemod import FreeModule, GramForm, free_module, pairing_rows
from symquandle.core.quandle import FiniteQuandle, Permutation, quandle_check
from symquandle.core.ring import Ring
from symquandle.errors import DimensionMismatch, SizeCapExceeded

log = logging.getLogger("symquandle.symplectic")

DEFAULT_SIZE_CAP = 10_000

_ROW_CHUNK = 256


@dataclass(frozen=True, eq=False)
class SymplecticQuandle(FiniteQuandle):
    form: GramForm | None = None

    @property
    def module(self) -> FreeModule:
        assert self.form is not None
        return free_module(self.form.ring, self.form.rank)


@dataclass(frozen=True)
class RightTranslation:
    """s_y : x -> x*y together with its checked linearity."""

    y: int
    permutation: Permutation
    additive: bool
    homogeneous: bool

    @property
    def linear(self) -> bool:
        return self.additive and self.homogeneous


def _check_instance(ring: Ring, k: int, form: GramForm) -> FreeModule:
    if form.rank != k:
        raise DimensionMismatch(f"form has rank {form.rank}, module rank is {k}")
    if form.ring != ring:
        raise DimensionMismatch("form is defined over a different ring")
    return free_module(ring, k)


def _translate(module: FreeModule, form: GramForm, rows: np.ndarray, sign: int) -> np.ndarray:
    """x + sign * <x, y> y for x in rows and every y."""
    ring = module.ring
    values = pairing_rows(form, rows)
    if sign < 0:
        values = ring.neg_arr(values)
    x = module.coords[rows]
    y = module.coords
    out = np.empty((len(rows), module.size, module.rank), dtype=np.int64)
    for i in range(module.rank):
        out[:, :, i] = ring.add_arr(x[:, i][:, None], ring.mul_arr(values, y[:, i][None, :]))
    return module.encode(out)


def symplectic_quandle(
    ring: Ring, k: int, form: GramForm, *, size_cap: int = DEFAULT_SIZE_CAP
) -> SymplecticQuandle:
    """The quandle x*y = x + <x,y> y on R^k."""
    module = _check_instance(ring, k, form)
    if module.size > size_cap:
        raise SizeCapExceeded(f"|R|^k = {module.size} exceeds the size cap {size_cap}")

    op = np.empty((module.size, module.size), dtype=np.int64)
    for start in range(0, module.size, _ROW_CHUNK):
        rows = np.arange(start, min(start + _ROW_CHUNK, module.size))
        op[rows] = _translate(module, form, rows, +1)

    labels = [module.label(i) for i in range(module.size)]
    # x + <x,y>y is self-distributive for any alternating form
    checked = quandle_check(op, labels, check_distributive=False)
    log.debug("symplectic quandle ring=%s rank=%d size=%d", ring.descriptor.to_json(), k, module.size)
    return SymplecticQuandle(op=checked.op, inv_op=checked.inv_op, labels=checked.labels, form=form)


def dual_operation_table(ring: Ring, k: int, form: GramForm) -> np.ndarray:
    """x - <x,y> y computed directly from the form."""
    module = _check_instance(ring, k, form)
    return _translate(module, form, np.arange(module.size), -1)


def is_trivial_symplectic(ring: Ring, k: int, form: GramForm) -> bool:
    """True iff <x,y> y = 0 for every pair."""
    module = _check_instance(ring, k, form)
    y = module.coords
    for start in range(0, module.size, _ROW_CHUNK):
        rows = np.arange(start, min(start + _ROW_CHUNK, module.size))
        values = pairing_rows(form, rows)
        for i in range(k):
            if (ring.mul_arr(values, y[:, i][None, :]) != ring.zero).any():
                return False
    return True


def right_translation(q: SymplecticQuandle, y: int) -> RightTranslation:
    module = q.module
    ring = module.ring
    col = q.op[:, y]

    additive = True
    everything = np.arange(module.size)
    for start in range(0, module.size, _ROW_CHUNK):
        rows = everything[start : start + _ROW_CHUNK]
        sums = module.add_arr(rows[:, None], everything[None, :])
        if not np.array_equal(col[sums], module.add_arr(col[rows][:, None], col[None, :])):
            additive = False
            break

    homogeneous = True
    for r in ring.elements():
        lhs = col[module.scale_arr(np.int64(r), everything)]
        if not np.array_equal(lhs, module.scale_arr(np.int64(r), col)):
            homogeneous = False
            break

    return RightTranslation(
        y=y,
        permutation=Permutation.from_array(col),
        additive=additive,
        homogeneous=homogeneous,
    )
