"""Classification of the offset b into the three formula regimes."""

from dataclasses import dataclass
from enum import Enum

REGIME_TOL = 1e-9


class Regime(str, Enum):
    GENERIC = "generic"
    HALF_INTEGER = "half-integer"
    INTEGER = "integer"


@dataclass(frozen=True)
class BClass:
    regime: Regime
    b: complex

    @property
    def nearest_integer(self) -> int:
        return round(self.b.real)


def classify_b(b, tol: float = REGIME_TOL) -> BClass:
    """Classify ``b`` as integer, half-integer or generic.

    ``b`` is integer when it lies within ``tol`` of an integer, half-integer
    when ``2b`` lies within ``tol`` of an odd integer.
    """
    b = complex(b)
    if abs(b - round(b.real)) < tol:
        return BClass(Regime.INTEGER, b)
    two_b = 2 * b
    n = round(two_b.real)
    if n % 2 == 1 and abs(two_b - n) < tol:
        return BClass(Regime.HALF_INTEGER, b)
    return BClass(Regime.GENERIC, b)
