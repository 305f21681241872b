"""Exact angle bookkeeping in integer units of pi/30.

Every corner weight used by the metric is a multiple of pi/30, so angle sums
and comparisons stay in integer arithmetic.  A full turn is 60 units.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class AngleWeight:
    """A nonnegative angle measured in units of pi/30."""

    units: int

    def __post_init__(self):
        if not isinstance(self.units, int) or self.units < 0:
            raise ValueError(f"angle units must be a nonnegative int, got {self.units!r}")

    def __add__(self, other: "AngleWeight") -> "AngleWeight":
        return AngleWeight(self.units + other.units)

    def display(self) -> str:
        return f"{self.units}·π/30"

    def __repr__(self):
        return f"AngleWeight({self.units})"


# Corner weights of the flattened metric: equilateral triangle corner,
# pentagon interior corner, and the two corner types of a flattened
# pentagon wheel (apex sits at the center vertex, rim at the original five).
TRIANGLE_CORNER = AngleWeight(10)   # pi/3
PENTAGON_CORNER = AngleWeight(18)   # 3*pi/5
WHEEL_APEX_CORNER = AngleWeight(12)  # 2*pi/5
WHEEL_RIM_CORNER = AngleWeight(9)   # 3*pi/10

FULL_TURN = AngleWeight(60)         # 2*pi
