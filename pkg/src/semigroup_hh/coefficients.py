"""Exact scalar arithmetic over the coefficient field k and case dispatch.

Characteristic 0 scalars are ``fractions.Fraction``; characteristic p scalars
are plain ints reduced to [0, p).  All operations go through a FieldSpec so the
rest of the package never branches on the representation.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .semigroup import SemigroupPair


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when characteristic == 0, GF(p) otherwise."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError("characteristic must be 0 or prime")

    def of_int(self, z):
        if self.characteristic == 0:
            return Fraction(z)
        return z % self.characteristic

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    def add(self, x, y):
        s = x + y
        return s if self.characteristic == 0 else s % self.characteristic

    def sub(self, x, y):
        s = x - y
        return s if self.characteristic == 0 else s % self.characteristic

    def mul(self, x, y):
        s = x * y
        return s if self.characteristic == 0 else s % self.characteristic

    def neg(self, x):
        return -x if self.characteristic == 0 else (-x) % self.characteristic

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(x, -1, self.characteristic)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x):
        return x == 0


class CaseTag(Enum):
    CASE_I = "case_i"
    CASE_II_DIVIDES_A = "case_ii_divides_a"
    CASE_II_DIVIDES_B = "case_ii_divides_b"


def classify_case(sp, field):
    """Which of the two structural cases (a, b, char k) falls into."""
    p = field.characteristic
    if p == 0:
        return CaseTag.CASE_I
    if sp.a % p == 0:
        return CaseTag.CASE_II_DIVIDES_A
    if sp.b % p == 0:
        return CaseTag.CASE_II_DIVIDES_B
    return CaseTag.CASE_I


@dataclass(frozen=True)
class Context:
    """Immutable bundle of the working semigroup pair, field and case tag.

    This is the single choke point for the "divides b" case: when char k
    divides b, the working pair is (b, a) so every downstream module only ever
    sees a characteristic dividing the first generator.  ``swapped`` records
    that relabeling for reports.
    """

    a_input: int
    b_input: int
    field: FieldSpec
    case: CaseTag
    sp: SemigroupPair
    swapped: bool

    @property
    def case_ii(self):
        return self.case is not CaseTag.CASE_I

    @property
    def char2_special(self):
        """Case II branch where the odd generator squares to a nonzero class:
        char k = 2 and 4 does not divide the (working) first generator."""
        return (
            self.case_ii
            and self.field.characteristic == 2
            and self.sp.a % 4 != 0
        )


def make_context(a, b, characteristic):
    field = FieldSpec(characteristic)
    sp = SemigroupPair(a, b)
    case = classify_case(sp, field)
    if case is CaseTag.CASE_II_DIVIDES_B:
        return Context(a, b, field, case, SemigroupPair(b, a), True)
    return Context(a, b, field, case, sp, False)
