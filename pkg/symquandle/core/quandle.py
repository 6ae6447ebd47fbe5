"""Finite quandles as Cayley tables.

Elements are opaque indices 0..N-1; ``op[x, y]`` is x*y and ``inv_op[x, y]``
is x*^{-1}y. Labels are printable metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from symquandle.errors import (
    DimensionMismatch,
    NotIdempotent,
    NotRightInvertible,
    NotSelfDistributive,
)


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    op: np.ndarray
    inv_op: np.ndarray
    labels: tuple[str, ...] | None = None

    @property
    def size(self) -> int:
        return int(self.op.shape[0])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def same_tables(self, other: FiniteQuandle) -> bool:
        return np.array_equal(self.op, other.op) and np.array_equal(self.inv_op, other.inv_op)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_array(cls, arr: Sequence[int] | np.ndarray) -> Permutation:
        return cls(tuple(int(v) for v in arr))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def as_array(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64)

    def is_bijection(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def is_involution(self) -> bool:
        return all(self.images[v] == i for i, v in enumerate(self.images))

    def compose(self, other: Permutation) -> Permutation:
        """self after other."""
        return Permutation(tuple(self.images[v] for v in other.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self, labels: Sequence[str] | None = None) -> str:
        """Cycle notation such as "((1,0) (2,0))"; the identity is "()"."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        name = (lambda i: labels[i]) if labels is not None else str
        return "".join("(" + " ".join(name(i) for i in cyc) + ")" for cyc in cycles)


def quandle_check(
    op_table: Sequence[Sequence[int]] | np.ndarray,
    labels: Sequence[str] | None = None,
    *,
    check_distributive: bool = True,
) -> FiniteQuandle:
    """Verify the three quandle axioms and build the inverse table.

    Failures report the lexicographically first witness. Self-distributivity
    costs O(N^3); only callers whose table is correct by construction may
    pass ``check_distributive=False``.
    """
    op = np.asarray(op_table, dtype=np.int64)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionMismatch("operation table must be N x N")
    n = op.shape[0]
    if n and (op.min() < 0 or op.max() >= n):
        raise DimensionMismatch(f"table entries must lie in [0, {n})")
    if labels is not None and len(labels) != n:
        raise DimensionMismatch(f"{len(labels)} labels for {n} elements")

    elems = np.arange(n, dtype=np.int64)
    bad = np.flatnonzero(np.diagonal(op) != elems)
    if bad.size:
        raise NotIdempotent(int(bad[0]))

    inv_op = np.empty_like(op)
    for y in range(n):
        col = op[:, y]
        if not np.array_equal(np.sort(col), elems):
            raise NotRightInvertible(y)
        inv_op[col, y] = elems

    if check_distributive:
        for x in range(n):
            # lhs[y, z] = (x*y)*z ; rhs[y, z] = (x*z)*(y*z)
            lhs = op[op[x, :], :]
            rhs = op[op[x, :][None, :], op]
            diff = np.argwhere(lhs != rhs)
            if diff.size:
                y, z = diff[0]
                raise NotSelfDistributive(x, int(y), int(z))

    return FiniteQuandle(op=op, inv_op=inv_op, labels=tuple(labels) if labels is not None else None)


def trivial_quandle(n: int) -> FiniteQuandle:
    op = np.repeat(np.arange(n, dtype=np.int64)[:, None], n, axis=1)
    return FiniteQuandle(op=op, inv_op=op.copy())


def dual(q: FiniteQuandle) -> FiniteQuandle:
    return FiniteQuandle(op=q.inv_op, inv_op=q.op, labels=q.labels)


def is_kei(q: FiniteQuandle) -> bool:
    return bool(np.array_equal(q.op, q.inv_op))


def is_trivial(q: FiniteQuandle) -> bool:
    return bool((q.op == np.arange(q.size)[:, None]).all())


def is_automorphism(q: FiniteQuandle, p: Permutation) -> bool:
    perm = p.as_array()
    return bool(np.array_equal(perm[q.op], q.op[np.ix_(perm, perm)]))


def is_antiautomorphism(q: FiniteQuandle, p: Permutation) -> bool:
    perm = p.as_array()
    return bool(np.array_equal(perm[q.op], q.inv_op[np.ix_(perm, perm)]))
