"""The non-linear good involution on (Z[i])^2 with <(a,b),(c,d)> = 3(ad - bc).

Every nonzero x factors as 3^v(x) * u with u not in 3M. The class of u in
M/3M = (F_9)^2 is the residue ``bar(x)``; the unit group {1, -1, i, -i} acts
freely on the 80 nonzero residues, giving 20 orbits of size 4. Fixing the
lexicographically smallest member s of each orbit, the sign map is
sigma(s) = sigma(-s) = i, sigma(is) = sigma(-is) = -i, and
rho(x) = sigma(bar(x)) x.

All arithmetic is on Python ints, so coefficients never overflow.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Literal

from symquandle.errors import ZeroVector

log = logging.getLogger("symquandle.gaussian")

SCALE = 3

Position = Literal["s", "-s", "is", "-is"]
ResidueVector = tuple[int, int, int, int]


@dataclass(frozen=True, slots=True)
class GaussInt:
    re: int
    im: int = 0

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussInt(0, 1)
MINUS_I = GaussInt(0, -1)
ZERO = GaussInt(0, 0)
UNITS = (GaussInt(1), GaussInt(-1), I, MINUS_I)


@dataclass(frozen=True, slots=True)
class GaussVector:
    a: GaussInt
    b: GaussInt

    @classmethod
    def of(cls, a_re: int, a_im: int, b_re: int, b_im: int) -> GaussVector:
        return cls(GaussInt(a_re, a_im), GaussInt(b_re, b_im))

    def __add__(self, other: GaussVector) -> GaussVector:
        return GaussVector(self.a + other.a, self.b + other.b)

    def __sub__(self, other: GaussVector) -> GaussVector:
        return GaussVector(self.a - other.a, self.b - other.b)

    def scale(self, r: GaussInt) -> GaussVector:
        return GaussVector(r * self.a, r * self.b)

    def parts(self) -> tuple[int, int, int, int]:
        return (self.a.re, self.a.im, self.b.re, self.b.im)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


ZERO_VECTOR = GaussVector(ZERO, ZERO)


def gauss_form(x: GaussVector, y: GaussVector) -> GaussInt:
    """<(a,b),(c,d)> = 3(ad - bc)."""
    return (x.a * y.b - x.b * y.a) * SCALE


def gauss_op(x: GaussVector, y: GaussVector) -> GaussVector:
    return x + y.scale(gauss_form(x, y))


def gauss_inv_op(x: GaussVector, y: GaussVector) -> GaussVector:
    return x - y.scale(gauss_form(x, y))


def v3(x: GaussVector) -> int:
    if x.is_zero():
        raise ZeroVector("v3 is undefined at 0")
    parts = [p for p in x.parts() if p != 0]
    n = 0
    while all(p % SCALE == 0 for p in parts):
        parts = [p // SCALE for p in parts]
        n += 1
    return n


def residue_bar(x: GaussVector) -> ResidueVector:
    n = v3(x)
    d = SCALE**n
    re_a, im_a, re_b, im_b = (p // d % SCALE for p in x.parts())
    return (re_a, im_a, re_b, im_b)


def _neg_residue(v: ResidueVector) -> ResidueVector:
    return tuple(-c % SCALE for c in v)  # type: ignore[return-value]


def _times_i(v: ResidueVector) -> ResidueVector:
    # i (p + q i) = -q + p i
    return (-v[1] % SCALE, v[0], -v[3] % SCALE, v[2])


def _orbit(s: ResidueVector) -> dict[Position, ResidueVector]:
    si = _times_i(s)
    return {"s": s, "-s": _neg_residue(s), "is": si, "-is": _neg_residue(si)}


def _build_orbit_table() -> dict[ResidueVector, tuple[ResidueVector, Position]]:
    table: dict[ResidueVector, tuple[ResidueVector, Position]] = {}
    for v in itertools.product(range(SCALE), repeat=4):
        if v in table or not any(v):
            continue
        # product() yields in lexicographic order, so the first unseen member is the minimum
        rep: ResidueVector = v  # type: ignore[assignment]
        for position, member in _orbit(rep).items():
            table[member] = (rep, position)
    return table


ORBIT_TABLE = _build_orbit_table()
ORBIT_REPS: tuple[ResidueVector, ...] = tuple(sorted({rep for rep, _ in ORBIT_TABLE.values()}))

# Multiplying by sigma must pair s <-> is and -s <-> -is, otherwise rho is
# not an involution. PRINTED_SIGN_TABLE is the variant with the signs at -s
# and -is swapped; it breaks sigma(sigma(v) v) = sigma(v)^-1 on 40 residues.
SIGN_TABLE: dict[Position, GaussInt] = {"s": I, "-s": I, "is": MINUS_I, "-is": MINUS_I}
PRINTED_SIGN_TABLE: dict[Position, GaussInt] = {"s": I, "-s": MINUS_I, "is": MINUS_I, "-is": I}


def orbit_rep(v: ResidueVector) -> tuple[ResidueVector, Position]:
    if not any(c % SCALE for c in v):
        raise ZeroVector("the zero residue has no orbit")
    return ORBIT_TABLE[tuple(c % SCALE for c in v)]  # type: ignore[index]


def orbit_members(v: ResidueVector) -> set[ResidueVector]:
    rep, _ = orbit_rep(v)
    return set(_orbit(rep).values())


def sigma(v: ResidueVector, table: dict[Position, GaussInt] = SIGN_TABLE) -> GaussInt:
    _, position = orbit_rep(v)
    return table[position]


def sign_table_failures(table: dict[Position, GaussInt]) -> list[ResidueVector]:
    """Nonzero residues where sigma(sigma(v) v) != sigma(v)^-1 under ``table``."""
    bad: list[ResidueVector] = []
    for v in itertools.product(range(SCALE), repeat=4):
        if not any(v):
            continue
        s = sigma(v, table)  # type: ignore[arg-type]
        if sigma(scale_residue(s, v), table) != -s:  # type: ignore[arg-type]
            bad.append(v)  # type: ignore[arg-type]
    return bad


def scale_residue(u: GaussInt, v: ResidueVector) -> ResidueVector:
    """Multiply a residue vector by a Gaussian unit."""
    if u == GaussInt(1):
        return v
    if u == GaussInt(-1):
        return _neg_residue(v)
    if u == I:
        return _times_i(v)
    if u == MINUS_I:
        return _neg_residue(_times_i(v))
    raise ValueError(f"{u} is not a unit of Z[i]")


def rho(x: GaussVector) -> GaussVector:
    if x.is_zero():
        return ZERO_VECTOR
    return x.scale(sigma(residue_bar(x)))


def gauss_form_properties() -> dict[str, object]:
    """Determinant of the Gram matrix [[0, 3], [-3, 0]] over Z[i] and what it implies."""
    g = ((ZERO, GaussInt(SCALE)), (GaussInt(-SCALE), ZERO))
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    return {
        "determinant": str(det),
        # Z[i] is a domain, so a nonzero determinant makes M -> M^dual injective.
        "nondegenerate": not det.is_zero(),
        "unimodular": det in UNITS,
    }


# -- property suites ---------------------------------------------------------


@dataclass
class SuiteFailure:
    check: str
    x: str
    y: str | None = None

    def to_json(self) -> dict[str, str | None]:
        return {"check": self.check, "x": self.x, "y": self.y}


@dataclass
class GaussianSuiteResult:
    samples: int
    coeff_bound: int
    seed: int
    failures: dict[str, int] = field(default_factory=dict)
    first_failures: list[SuiteFailure] = field(default_factory=list)
    residue_checks: dict[str, int] = field(default_factory=dict)

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    def record(self, check: str, ok: bool, x: GaussVector, y: GaussVector | None = None) -> None:
        self.failures.setdefault(check, 0)
        if ok:
            return
        self.failures[check] += 1
        if len(self.first_failures) < 10:
            self.first_failures.append(SuiteFailure(check, str(x), None if y is None else str(y)))

    def to_json(self) -> dict[str, object]:
        return {
            "samples": self.samples,
            "coeff_bound": self.coeff_bound,
            "seed": self.seed,
            "failures": dict(sorted(self.failures.items())),
            "first_failures": [f.to_json() for f in self.first_failures],
            "residue_checks": dict(sorted(self.residue_checks.items())),
        }


def _random_vector(rng: random.Random, bound: int) -> GaussVector:
    return GaussVector.of(*(rng.randint(-bound, bound) for _ in range(4)))


def residue_level_checks(result: GaussianSuiteResult) -> None:
    """Exhaustive checks over the 80 nonzero residue vectors."""
    minus_one = GaussInt(-1)
    nonzero = [v for v in itertools.product(range(SCALE), repeat=4) if any(v)]
    for v in nonzero:
        s = sigma(v)  # type: ignore[arg-type]
        x = GaussVector.of(*v)
        result.record("sigma_squared", s * s == minus_one, x)
        result.record("sigma_map", sigma(scale_residue(s, v)) == -s, x)  # type: ignore[arg-type]
        result.record("orbit_size", len(orbit_members(v)) == 4, x)  # type: ignore[arg-type]
    result.residue_checks = {
        "nonzero_residues": len(nonzero),
        "orbits": len(ORBIT_REPS),
        "printed_sign_table_failures": len(sign_table_failures(PRINTED_SIGN_TABLE)),
    }


def run_gaussian_suite(samples: int, coeff_bound: int, seed: int) -> GaussianSuiteResult:
    """Seeded random checks of the good-involution properties plus the residue-level checks."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if coeff_bound < 0:
        raise ValueError("coeff_bound must be >= 0")
    rng = random.Random(seed)
    result = GaussianSuiteResult(samples=samples, coeff_bound=coeff_bound, seed=seed)
    for _ in range(samples):
        x = _random_vector(rng, coeff_bound)
        y = _random_vector(rng, coeff_bound)
        xy = gauss_op(x, y)
        result.record("inverse_op", gauss_inv_op(xy, y) == x, x, y)
        result.record("involutive", rho(rho(x)) == x, x)
        result.record("condition1", rho(xy) == gauss_op(rho(x), y), x, y)
        result.record("condition2", gauss_op(x, rho(y)) == gauss_inv_op(x, y), x, y)
        if not x.is_zero():
            result.record("v3_stable", v3(xy) == v3(x), x, y)
            result.record("residue_stable", residue_bar(xy) == residue_bar(x), x, y)
            result.record("rho_preserves_v3", v3(rho(x)) == v3(x), x)
    residue_level_checks(result)
    log.info("gaussian suite samples=%d seed=%d failures=%d", samples, seed, result.total_failures)
    return result
