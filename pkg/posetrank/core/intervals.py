"""
Closed integer intervals and the orders defined on them.

Intervals are the codomain of interval rank functions, but negative endpoints are allowed so that differences of
rank intervals can be represented too. Keeping the rank range in check is the caller's job.

Midpoints are handled as doubled integers (lo + hi) so that equality tests stay exact. Rendering to a decimal only
happens through `format_midpoint`.
"""
from dataclasses import dataclass
from enum import Enum
from typing import List


class MalformedInterval(Exception):
    pass


@dataclass(frozen=True, order=True)
class IntInterval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise MalformedInterval("Lower endpoint {} exceeds upper endpoint {}".format(self.lo, self.hi))

    @property
    def width(self) -> int:
        return width(self)

    @property
    def midpoint_doubled(self) -> int:
        return midpoint_doubled(self)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __add__(self, other: "IntInterval") -> "IntInterval":
        return add(self, other)

    def __sub__(self, other: "IntInterval") -> "IntInterval":
        return subtract(self, other)

    def __abs__(self) -> "IntInterval":
        return abs_interval(self)

    def __str__(self) -> str:
        return "[{},{}]".format(self.lo, self.hi)


class RelationClass(Enum):
    """
    Which of the pairwise interval relations holds for an ordered pair (x, y).
    """

    EQUAL = "="
    STRONG_LT = "<_S"
    STRONG_GT = ">_S"
    SUBSET = "⊂"
    SUPERSET = "⊃"
    PROPER_LEFT = "∘≤"
    PROPER_RIGHT = "∘≥"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def dual(self) -> "RelationClass":
        return _DUALS[self]


_DUALS = {
    RelationClass.EQUAL: RelationClass.EQUAL,
    RelationClass.STRONG_LT: RelationClass.STRONG_GT,
    RelationClass.STRONG_GT: RelationClass.STRONG_LT,
    RelationClass.SUBSET: RelationClass.SUPERSET,
    RelationClass.SUPERSET: RelationClass.SUBSET,
    RelationClass.PROPER_LEFT: RelationClass.PROPER_RIGHT,
    RelationClass.PROPER_RIGHT: RelationClass.PROPER_LEFT,
}


def make_interval(lo: int, hi: int) -> IntInterval:
    return IntInterval(lo, hi)


def width(x: IntInterval) -> int:
    return x.hi - x.lo


def midpoint_doubled(x: IntInterval) -> int:
    return x.lo + x.hi


def format_midpoint(doubled: int) -> str:
    """
    Renders a doubled midpoint as an exact decimal, e.g. 3 -> "1.5" and 4 -> "2.0".
    """
    sign = "-" if doubled < 0 else ""
    magnitude = abs(doubled)
    return "{}{}.{}".format(sign, magnitude // 2, "5" if magnitude % 2 else "0")


def add(x: IntInterval, y: IntInterval) -> IntInterval:
    return IntInterval(x.lo + y.lo, x.hi + y.hi)


def subtract(x: IntInterval, y: IntInterval) -> IntInterval:
    return IntInterval(x.lo - y.hi, x.hi - y.lo)


def abs_interval(x: IntInterval) -> IntInterval:
    if x.lo * x.hi <= 0:
        lower = 0
    else:
        lower = min(abs(x.lo), abs(x.hi))
    return IntInterval(lower, max(abs(x.lo), abs(x.hi)))


def separation(x: IntInterval, y: IntInterval) -> IntInterval:
    return abs_interval(subtract(x, y))


def contains_point(x: IntInterval, z: int) -> bool:
    return x.lo <= z <= x.hi


def points(x: IntInterval) -> List[int]:
    return list(range(x.lo, x.hi + 1))


def leq_strong(x: IntInterval, y: IntInterval) -> bool:
    return x.hi < y.lo or x == y


def lt_strong(x: IntInterval, y: IntInterval) -> bool:
    return x.hi < y.lo


def leq_weak(x: IntInterval, y: IntInterval) -> bool:
    return x.lo <= y.lo and x.hi <= y.hi


def lt_weak(x: IntInterval, y: IntInterval) -> bool:
    return leq_weak(x, y) and x != y


def subset_of(x: IntInterval, y: IntInterval) -> bool:
    return x.lo >= y.lo and x.hi <= y.hi


def proper_subset(x: IntInterval, y: IntInterval) -> bool:
    return subset_of(x, y) and x != y


def classify(x: IntInterval, y: IntInterval) -> RelationClass:
    """
    Assigns exactly one RelationClass to the ordered pair (x, y).

    Shared endpoints are resolved with the precedence equality > strong > containment > proper intersection, so
    that [1,1] vs [1,2] is a SUBSET even though [1,1] is also weakly below [1,2].
    """
    if x == y:
        return RelationClass.EQUAL
    if lt_strong(x, y):
        return RelationClass.STRONG_LT
    if lt_strong(y, x):
        return RelationClass.STRONG_GT
    if subset_of(x, y):
        return RelationClass.SUBSET
    if subset_of(y, x):
        return RelationClass.SUPERSET
    if leq_weak(x, y):
        return RelationClass.PROPER_LEFT
    return RelationClass.PROPER_RIGHT
