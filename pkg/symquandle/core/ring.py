"""Exact arithmetic in finite commutative rings.

Two kinds are supported: residue rings Z/nZ and polynomial quotients
(Z/nZ)[X]/(f) with f monic. Elements are handled as canonical indices
(sum of c_i * n**i, constant term first) so equality is integer equality
and every table is a plain numpy array.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from symquandle.errors import ConfigError, EmptyPoly, InvalidModulus, NonMonic, SizeCapExceeded

log = logging.getLogger("symquandle.ring")

RingKind = Literal["zmod", "quotient"]

# Rings up to this order get precomputed add/mul tables.
TABLE_LIMIT = 256

# Products of two element indices must fit in int64.
MAX_RING_ORDER = 2**31

# Row chunk used by the brute-force scans over all products.
_SCAN_CHUNK = 512


@dataclass(frozen=True)
class RingDescriptor:
    kind: RingKind
    n: int
    poly: tuple[int, ...] | None = None  # constant term first

    @property
    def degree(self) -> int:
        if self.kind == "zmod" or self.poly is None:
            return 1
        return len(self.poly) - 1

    def to_json(self) -> dict[str, Any]:
        if self.kind == "zmod":
            return {"kind": "zmod", "n": self.n}
        return {"kind": "quotient", "n": self.n, "poly": list(self.poly or ())}

    @classmethod
    def from_json(cls, raw: Any) -> RingDescriptor:
        if not isinstance(raw, dict):
            raise ConfigError("ring must be an object")
        kind = raw.get("kind")
        n = raw.get("n")
        if kind not in ("zmod", "quotient"):
            raise ConfigError(f"ring.kind must be 'zmod' or 'quotient', got {kind!r}")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ConfigError("ring.n must be an integer")
        if kind == "zmod":
            return cls(kind="zmod", n=n)
        poly = raw.get("poly")
        if not isinstance(poly, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in poly
        ):
            raise ConfigError("ring.poly must be a list of integers")
        return cls(kind="quotient", n=n, poly=tuple(poly))


def zmod(n: int) -> RingDescriptor:
    return RingDescriptor(kind="zmod", n=n)


def quotient(n: int, poly: list[int] | tuple[int, ...]) -> RingDescriptor:
    return RingDescriptor(kind="quotient", n=n, poly=tuple(poly))


@dataclass(frozen=True)
class RingElement:
    coeffs: tuple[int, ...]


class Ring:
    """Immutable handle on a finite commutative ring with identity."""

    def __init__(self, descriptor: RingDescriptor) -> None:
        n = descriptor.n
        if n < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {n}")
        order = n**descriptor.degree
        if order > MAX_RING_ORDER:
            raise SizeCapExceeded(f"ring order {order} exceeds {MAX_RING_ORDER}")
        if descriptor.kind == "quotient":
            poly = descriptor.poly or ()
            if len(poly) < 2:
                raise EmptyPoly("quotient ring needs a polynomial of degree >= 1")
            if poly[-1] % n != 1:
                raise NonMonic(f"leading coefficient {poly[-1]} is not 1 mod {n}")
            self._reduction = np.array([c % n for c in poly[:-1]], dtype=np.int64)
        else:
            self._reduction = np.zeros(0, dtype=np.int64)

        self.descriptor = descriptor
        self.n = n
        self.degree = descriptor.degree
        self.order = order
        self._weights = n ** np.arange(self.degree, dtype=np.int64)

        self._add_table: np.ndarray | None = None
        self._mul_table: np.ndarray | None = None
        if self.order <= TABLE_LIMIT:
            a = np.arange(self.order, dtype=np.int64)
            self._add_table = self._add_raw(a[:, None], a[None, :])
            self._mul_table = self._mul_raw(a[:, None], a[None, :])
        log.debug("ring %s order=%d tables=%s", descriptor.to_json(), self.order, self.has_tables)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"Ring({self.descriptor.to_json()})"

    @property
    def has_tables(self) -> bool:
        return self._mul_table is not None

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.order)

    # -- encodings --------------------------------------------------------

    def digits(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._weights) % self.n

    def encode(self, coeffs: np.ndarray) -> np.ndarray:
        return (np.asarray(coeffs, dtype=np.int64) * self._weights).sum(axis=-1)

    def element(self, idx: int) -> RingElement:
        return RingElement(tuple(int(c) for c in self.digits(np.int64(idx))))

    def index(self, el: RingElement) -> int:
        if len(el.coeffs) != self.degree:
            raise ConfigError(f"element needs {self.degree} coefficients, got {len(el.coeffs)}")
        return int(self.encode(np.array([c % self.n for c in el.coeffs])))

    def from_int(self, m: int) -> int:
        # m * 1_R lives in the constant coefficient, whose weight is 1.
        return m % self.n

    def coerce(self, value: Any) -> int:
        """Map an integer, coefficient list or RingElement to its index."""
        if isinstance(value, RingElement):
            return self.index(value)
        if isinstance(value, bool):
            raise ConfigError(f"not a ring element: {value!r}")
        if isinstance(value, (int, np.integer)):
            return self.from_int(int(value))
        if isinstance(value, (list, tuple)) and all(
            isinstance(c, (int, np.integer)) and not isinstance(c, bool) for c in value
        ):
            if not value:
                raise ConfigError("empty coefficient array")
            if self.degree == 1:
                if len(value) > 1:
                    raise ConfigError("coefficient arrays need a quotient ring")
                return self.from_int(int(value[0]))
            # Longer arrays are reduced mod f through repeated multiplication by X.
            x = self.index(RingElement((0, 1) + (0,) * (self.degree - 2)))
            acc = self.zero
            x_power = self.one
            for c in value:
                acc = self.add(acc, self.mul(self.from_int(int(c)), x_power))
                x_power = self.mul(x_power, x)
            return acc
        raise ConfigError(f"not a ring element: {value!r}")

    def to_json_value(self, idx: int) -> int | list[int]:
        """Config encoding: an int for Z/n, a coefficient list for quotients."""
        coeffs = self.element(idx).coeffs
        return coeffs[0] if self.degree == 1 else list(coeffs)

    def label(self, idx: int) -> str:
        coeffs = self.element(idx).coeffs
        if self.degree == 1:
            return str(coeffs[0])
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "X" if i == 1 else f"X^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    # -- vectorized arithmetic -------------------------------------------

    def _add_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.n
        return self.encode((self.digits(a) + self.digits(b)) % self.n)

    def _neg_raw(self, a: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.n
        return self.encode((-self.digits(a)) % self.n)

    def _mul_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (np.asarray(a, dtype=np.int64) * b) % self.n
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        d = self.degree
        da = self.digits(a)
        db = self.digits(b)
        prod = np.zeros(a.shape + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            prod[..., i : i + d] += da[..., i : i + 1] * db
        prod %= self.n
        # X^d = -(f_0 + ... + f_{d-1} X^{d-1}) modulo f
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[..., k].copy()
            prod[..., k] = 0
            for j in range(d):
                prod[..., k - d + j] = (prod[..., k - d + j] - c * self._reduction[j]) % self.n
        return self.encode(prod[..., :d])

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._add_raw(a, b)

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_raw(a, b)

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        return self._neg_raw(a)

    def sub_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    # -- scalar arithmetic -----------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_arr(np.int64(a), np.int64(b)))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_arr(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        return int(self.neg_arr(np.int64(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul_rows(self, rows: range | np.ndarray) -> np.ndarray:
        """Products a*b for a in ``rows`` and every b, shape (len(rows), order)."""
        a = np.asarray(rows, dtype=np.int64)[:, None]
        b = np.arange(self.order, dtype=np.int64)[None, :]
        return self.mul_arr(a, b)


def ring_make(descriptor: RingDescriptor) -> Ring:
    return Ring(descriptor)


def characteristic(ring: Ring) -> int:
    m = 1
    acc = ring.one
    while acc != ring.zero:
        acc = ring.add(acc, ring.one)
        m += 1
    return m


def is_integral_domain(ring: Ring) -> bool:
    for start in range(1, ring.order, _SCAN_CHUNK):
        rows = np.arange(start, min(start + _SCAN_CHUNK, ring.order))
        products = ring.mul_rows(rows)[:, 1:]
        if (products == ring.zero).any():
            return False
    return True


def units(ring: Ring) -> dict[int, int]:
    """Map every unit to its inverse."""
    out: dict[int, int] = {}
    for start in range(0, ring.order, _SCAN_CHUNK):
        rows = np.arange(start, min(start + _SCAN_CHUNK, ring.order))
        hits = ring.mul_rows(rows) == ring.one
        for u, row in zip(rows.tolist(), hits):
            if row.any():
                out[u] = int(np.argmax(row))
    return out


def is_unit(ring: Ring, a: int) -> bool:
    return bool((ring.mul_arr(np.int64(a), np.arange(ring.order)) == ring.one).any())
