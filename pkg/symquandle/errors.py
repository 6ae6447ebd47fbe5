from __future__ import annotations


class SymquandleError(Exception):
    """Base class for every error raised by symquandle."""


class ConfigError(SymquandleError, ValueError):
    """Malformed instance description (ring, form, table or caps)."""


class InvalidModulus(ConfigError):
    pass


class NonMonic(ConfigError):
    pass


class EmptyPoly(ConfigError):
    pass


class NotAlternating(ConfigError):
    pass


class OddRankStandardForm(ConfigError):
    pass


class DimensionMismatch(ConfigError):
    pass


class SizeCapExceeded(ConfigError):
    pass


class SearchCapExceeded(ConfigError):
    pass


class QuandleAxiomError(SymquandleError, ValueError):
    """An operation table violates one of the quandle axioms."""


class NotIdempotent(QuandleAxiomError):
    def __init__(self, x: int) -> None:
        self.x = x
        super().__init__(f"not idempotent: {x}*{x} != {x}")


class NotRightInvertible(QuandleAxiomError):
    def __init__(self, y: int) -> None:
        self.y = y
        super().__init__(f"not right-invertible: column {y} is not a bijection")


class NotSelfDistributive(QuandleAxiomError):
    def __init__(self, x: int, y: int, z: int) -> None:
        self.x = x
        self.y = y
        self.z = z
        super().__init__(f"not self-distributive at (x, y, z) = ({x}, {y}, {z})")


class ZeroVector(SymquandleError, ValueError):
    pass
