"""Good involutions of finite quandles.

A good involution rho satisfies rho(x*y) = rho(x)*y and x*rho(y) = x*^{-1}y.
The enumerator backtracks over the least unassigned element; every
assignment rho(x) = z forces rho(z) = x and, through the first condition,
rho(x*y) = z*y for all y. The second condition is equivalent to
s_{rho(y)} = s_y^{-1}, which restricts rho(y) to a candidate set.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from symquandle.core.freemod import GramForm, free_module, pairing_matrix
from symquandle.core.quandle import FiniteQuandle, Permutation
from symquandle.core.ring import Ring
from symquandle.core.symplectic import SymplecticQuandle, symplectic_quandle
from symquandle.errors import DimensionMismatch, SearchCapExceeded

log = logging.getLogger("symquandle.search")

UNASSIGNED = -1

DEFAULT_SEARCH_CAP = 1_000_000


def _conditions(q: FiniteQuandle, perm: np.ndarray) -> tuple[bool, bool]:
    # condition 1: rho(x*y) = rho(x)*y ; condition 2: x*rho(y) = x*^{-1}y
    c1 = bool(np.array_equal(perm[q.op], q.op[perm, :]))
    c2 = bool(np.array_equal(q.op[:, perm], q.inv_op))
    return c1, c2


def is_good_involution(q: FiniteQuandle, p: Permutation) -> bool:
    if p.size != q.size or not p.is_involution():
        return False
    c1, c2 = _conditions(q, p.as_array())
    return c1 and c2


def candidate_sets(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """C(y) = { z : column z of op equals column y of inv_op }."""
    by_column: dict[bytes, list[int]] = {}
    op_cols = np.ascontiguousarray(q.op.T)
    for z in range(q.size):
        by_column.setdefault(op_cols[z].tobytes(), []).append(z)
    inv_cols = np.ascontiguousarray(q.inv_op.T)
    return tuple(tuple(by_column.get(inv_cols[y].tobytes(), ())) for y in range(q.size))


@dataclass(frozen=True)
class EnumerationResult:
    involutions: tuple[Permutation, ...]
    complete: bool
    nodes: int

    @property
    def count(self) -> int:
        return len(self.involutions)


class _Search:
    def __init__(self, q: FiniteQuandle) -> None:
        self.size = q.size
        self.rows = q.op.tolist()
        self.cand_sorted = candidate_sets(q)
        self.cand = [frozenset(c) for c in self.cand_sorted]

    def extend(self, images: list[int], x: int, z: int) -> bool:
        """Assign rho(x) = z and close under symmetry and condition 1."""
        stack = [(x, z)]
        rows = self.rows
        while stack:
            a, b = stack.pop()
            cur = images[a]
            if cur == b:
                continue
            if cur != UNASSIGNED or b not in self.cand[a]:
                return False
            back = images[b]
            if back != UNASSIGNED and back != a:
                return False
            images[a] = b
            images[b] = a
            stack.extend(zip(rows[a], rows[b]))
        return True

    def children(self, images: list[int]) -> list[list[int]]:
        x = images.index(UNASSIGNED)
        out = []
        for z in self.cand_sorted[x]:
            child = images.copy()
            if self.extend(child, x, z):
                out.append(child)
        return out

    def run(self, root: list[int], limit: int | None) -> tuple[list[tuple[int, ...]], bool, int]:
        found: list[tuple[int, ...]] = []
        stack = [root]
        nodes = 0
        while stack:
            images = stack.pop()
            nodes += 1
            if UNASSIGNED not in images:
                found.append(tuple(images))
                if limit is not None and len(found) >= limit:
                    return found, not stack, nodes
                continue
            # reversed so the smallest candidate is explored first
            stack.extend(reversed(self.children(images)))
        return found, True, nodes


def enumerate_good_involutions(
    q: FiniteQuandle, limit: int | None = None, *, threads: int = 1
) -> EnumerationResult:
    """All good involutions (or the first ``limit``) in lexicographic order of image arrays."""
    if q.size == 0:
        return EnumerationResult(involutions=(Permutation(()),), complete=True, nodes=1)
    search = _Search(q)
    root = [UNASSIGNED] * q.size
    subtrees = search.children(root)

    if threads > 1 and len(subtrees) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda t: search.run(t, limit), subtrees))
    else:
        parts = [search.run(t, limit) for t in subtrees]

    found = sorted(img for part in parts for img in part[0])
    complete = all(part[1] for part in parts)
    if limit is not None and len(found) > limit:
        found = found[:limit]
        complete = False
    nodes = 1 + sum(part[2] for part in parts)
    log.info("enumerated size=%d found=%d complete=%s nodes=%d", q.size, len(found), complete, nodes)
    return EnumerationResult(
        involutions=tuple(Permutation(img) for img in found),
        complete=complete,
        nodes=nodes,
    )


# -- linear involutions -----------------------------------------------------


@dataclass(frozen=True)
class LinearMap:
    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, ring: Ring, k: int) -> LinearMap:
        return cls(tuple(tuple(ring.one if i == j else ring.zero for j in range(k)) for i in range(k)))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def to_json(self, ring: Ring) -> list[list[Any]]:
        return [[ring.to_json_value(e) for e in row] for row in self.matrix]


@dataclass(frozen=True)
class LinearClassification:
    involution: bool
    condition1: bool
    condition2: bool
    symplectic: bool
    anti_symplectic: bool
    isotropic: bool

    @property
    def good(self) -> bool:
        return self.involution and self.condition1 and self.condition2

    def to_json(self) -> dict[str, bool]:
        return {
            "involution": self.involution,
            "condition1": self.condition1,
            "condition2": self.condition2,
            "symplectic": self.symplectic,
            "anti_symplectic": self.anti_symplectic,
            "isotropic": self.isotropic,
            "good": self.good,
        }


class LinearContext:
    """Tables shared by every classification on one (ring, form) instance."""

    def __init__(self, ring: Ring, form: GramForm, quandle: SymplecticQuandle | None = None) -> None:
        if form.ring != ring:
            raise DimensionMismatch("form is defined over a different ring")
        self.ring = ring
        self.form = form
        self.module = free_module(ring, form.rank)
        self.quandle = quandle if quandle is not None else symplectic_quandle(ring, form.rank, form)
        self.values = pairing_matrix(form)
        self.neg_values = ring.neg_arr(self.values)
        self.elems = np.arange(self.module.size)

    def permutation(self, a: LinearMap) -> np.ndarray:
        if a.rank != self.form.rank or any(len(row) != a.rank for row in a.matrix):
            raise DimensionMismatch(f"linear map must be {self.form.rank} x {self.form.rank}")
        return self.module.apply_matrix(np.array(a.matrix, dtype=np.int64))

    def classify(self, a: LinearMap) -> LinearClassification:
        perm = self.permutation(a)
        c1, c2 = _conditions(self.quandle, perm)
        moved = self.values[np.ix_(perm, perm)]
        return LinearClassification(
            involution=bool(np.array_equal(perm[perm], self.elems)),
            condition1=c1,
            condition2=c2,
            symplectic=bool(np.array_equal(moved, self.values)),
            anti_symplectic=bool(np.array_equal(moved, self.neg_values)),
            isotropic=bool((self.values[perm, self.elems] == self.ring.zero).all()),
        )


def classify_linear_involution(
    ring: Ring, form: GramForm, a: LinearMap | Sequence[Sequence[Any]], *, context: LinearContext | None = None
) -> LinearClassification:
    if not isinstance(a, LinearMap):
        if len(a) != form.rank or any(len(row) != form.rank for row in a):
            raise DimensionMismatch(f"linear map must be {form.rank} x {form.rank}")
        a = LinearMap(tuple(tuple(ring.coerce(e) for e in row) for row in a))
    ctx = context if context is not None else LinearContext(ring, form)
    return ctx.classify(a)


def _all_matrices(ring: Ring, k: int, search_cap: int) -> np.ndarray:
    total = ring.order ** (k * k)
    if total > search_cap:
        raise SearchCapExceeded(f"{total} matrices exceed the search cap {search_cap}")
    idx = np.arange(total, dtype=np.int64)
    digits = (idx[:, None] // ring.order ** np.arange(k * k, dtype=np.int64)) % ring.order
    return digits.reshape(total, k, k)


def _involution_stack(ring: Ring, k: int, search_cap: int) -> np.ndarray:
    mats = _all_matrices(ring, k, search_cap)
    keep = np.ones(len(mats), dtype=bool)
    for i in range(k):
        for j in range(k):
            acc = np.zeros(len(mats), dtype=np.int64)
            for m in range(k):
                acc = ring.add_arr(acc, ring.mul_arr(mats[:, i, m], mats[:, m, j]))
            keep &= acc == (ring.one if i == j else ring.zero)
    return mats[keep]


def _as_maps(mats: np.ndarray) -> list[LinearMap]:
    return [LinearMap(tuple(tuple(int(e) for e in row) for row in mat)) for mat in mats]


def linear_involutions(ring: Ring, k: int, *, search_cap: int = DEFAULT_SEARCH_CAP) -> list[LinearMap]:
    """Every k x k matrix with A^2 = I, in canonical order."""
    return _as_maps(_involution_stack(ring, k, search_cap))


def classify_all_linear_involutions(
    ring: Ring, form: GramForm, *, search_cap: int = DEFAULT_SEARCH_CAP, context: LinearContext | None = None
) -> list[tuple[LinearMap, LinearClassification]]:
    ctx = context if context is not None else LinearContext(ring, form)
    return [(a, ctx.classify(a)) for a in linear_involutions(ring, form.rank, search_cap=search_cap)]


def enumerate_linear_good_involutions(
    ring: Ring, form: GramForm, *, search_cap: int = DEFAULT_SEARCH_CAP
) -> list[LinearMap]:
    return [a for a, c in classify_all_linear_involutions(ring, form, search_cap=search_cap) if c.good]


def enumerate_anti_symplectic_involutions(
    ring: Ring, form: GramForm, *, search_cap: int = DEFAULT_SEARCH_CAP
) -> list[LinearMap]:
    """Linear involutions negating the form; each is an antiautomorphism.

    Tested on the Gram matrix directly: A^T G A = -G.
    """
    k = form.rank
    mats = _involution_stack(ring, k, search_cap)
    g = form.matrix
    keep = np.ones(len(mats), dtype=bool)
    for i in range(k):
        for j in range(k):
            acc = np.zeros(len(mats), dtype=np.int64)
            for p in range(k):
                for q in range(k):
                    if g[p, q] == ring.zero:
                        continue
                    term = ring.mul_arr(ring.mul_arr(mats[:, p, i], np.int64(g[p, q])), mats[:, q, j])
                    acc = ring.add_arr(acc, term)
            keep &= acc == ring.neg(int(g[i, j]))
    return _as_maps(mats[keep])
