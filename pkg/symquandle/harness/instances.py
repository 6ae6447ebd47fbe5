"""Default rings and instances used by the verification checks."""

from __future__ import annotations

from symquandle.config import SymplecticInstance
from symquandle.core.freemod import make_form, scaled_form, standard_form, zero_form
from symquandle.core.ring import Ring, RingDescriptor, quotient, ring_make, zmod

# F_4 = F_2[X]/(X^2+X+1), F_9 = F_3[X]/(X^2+1)
F2 = zmod(2)
F3 = zmod(3)
F4 = quotient(2, [1, 1, 1])
F5 = zmod(5)
F9 = quotient(3, [1, 0, 1])
Z9 = zmod(9)
Z15 = zmod(15)

RING_NAMES: dict[RingDescriptor, str] = {
    F2: "F2",
    F3: "F3",
    F4: "F4",
    F5: "F5",
    F9: "F9",
    Z9: "Z9",
    Z15: "Z15",
}

DEFAULT_RINGS: tuple[RingDescriptor, ...] = (F2, F3, F4, F5, F9, Z9, Z15)


def _standard(desc: RingDescriptor, rank: int = 2) -> SymplecticInstance:
    ring = ring_make(desc)
    return SymplecticInstance(
        name=f"{RING_NAMES[desc]}^{rank} standard",
        ring=ring,
        rank=rank,
        form=standard_form(ring, rank),
        form_kind="standard",
    )


def _scaled(desc: RingDescriptor, c: int | list[int], rank: int = 2) -> SymplecticInstance:
    ring = ring_make(desc)
    form = scaled_form(ring, rank, c)
    return SymplecticInstance(
        name=f"{RING_NAMES[desc]}^{rank} scaled c={ring.label(ring.coerce(c))}",
        ring=ring,
        rank=rank,
        form=form,
        form_kind="scaled",
    )


def _zero(desc: RingDescriptor, rank: int = 2) -> SymplecticInstance:
    ring = ring_make(desc)
    return SymplecticInstance(
        name=f"{RING_NAMES[desc]}^{rank} zero",
        ring=ring,
        rank=rank,
        form=zero_form(ring, rank),
        form_kind="zero",
    )


def z9_example() -> SymplecticInstance:
    """(Z/9)^2 with <(a,b),(c,d)> = 3(ad - bc)."""
    ring = ring_make(Z9)
    return SymplecticInstance(
        name="Z9^2 gram [[0,3],[6,0]]",
        ring=ring,
        rank=2,
        form=make_form(ring, [[0, 3], [6, 0]]),
        form_kind="gram",
    )


def degenerate_f2_cubed() -> SymplecticInstance:
    """F_2^3 with the standard form on the first two coordinates and radical span(e3)."""
    ring = ring_make(F2)
    return SymplecticInstance(
        name="F2^3 degenerate rank-2 form",
        ring=ring,
        rank=3,
        form=make_form(ring, [[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
        form_kind="gram",
    )


def nonidentity_unit(ring: Ring) -> int | list[int] | None:
    """A fixed unit other than 1, as a config value, for scaled-form instances."""
    if ring.descriptor == F3 or ring.descriptor == F5:
        return 2
    if ring.degree == 2:
        return [0, 1]  # X
    return None


def theorem1_instances() -> list[SymplecticInstance]:
    out: list[SymplecticInstance] = []
    for desc in DEFAULT_RINGS:
        out.append(_standard(desc))
        c = nonidentity_unit(ring_make(desc))
        if c is not None:
            out.append(_scaled(desc, c))
    out.append(_scaled(Z9, 3))
    return out


def theorem2_instances() -> list[SymplecticInstance]:
    return [
        _standard(F2),
        _standard(F4),
        _standard(F2, rank=4),
        _standard(F3),
        _zero(F2),
        degenerate_f2_cubed(),
    ]


def theorem3_instances() -> list[SymplecticInstance]:
    return [
        _standard(F3),
        _standard(F5),
        _scaled(F5, 2),
        _standard(F9),
        _standard(F3, rank=4),
        _standard(Z15),
        _standard(F2),
        z9_example(),
    ]


def kei_dichotomy_instances() -> list[SymplecticInstance]:
    out: list[SymplecticInstance] = []
    for desc in DEFAULT_RINGS:
        out.append(_standard(desc))
        c = nonidentity_unit(ring_make(desc))
        if c is not None:
            out.append(_scaled(desc, c))
        out.append(_zero(desc))
    return out
