"""Numerical semigroup S = <a, b> for coprime a, b: membership and decompositions."""

import math
from dataclasses import dataclass


class NotInSemigroup(ValueError):
    """The integer has no representation u*a + v*b with u, v >= 0."""


@dataclass(frozen=True)
class SemigroupPair:
    """The semigroup S = {u*a + v*b | u, v >= 0} with a, b >= 2 coprime.

    Derived constants:
      m1 = b(a-1), m2 = a(b-1): the weight shifts showing up in the coboundary.
      frobenius = ab - a - b: largest integer outside S.
      ab: the weight of the degree-2 resolution generator.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise ValueError("need a >= 2 and b >= 2 (embedding dimension two)")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("a and b must be coprime")

    @property
    def m1(self):
        return self.b * (self.a - 1)

    @property
    def m2(self):
        return self.a * (self.b - 1)

    @property
    def frobenius(self):
        return self.a * self.b - self.a - self.b

    @property
    def conductor(self):
        return self.frobenius + 1

    @property
    def ab(self):
        return self.a * self.b

    def contains(self, n):
        """Membership test in O(1): the least element of S congruent to n mod a
        is v*b with v*b = n (mod a), 0 <= v < a."""
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        v = (n * pow(self.b, -1, self.a)) % self.a
        return n >= v * self.b

    def monomial_exponents(self, n):
        """Unique (u, v) with n = u*b + v*a and 0 <= v < b, i.e. s^n = x1^u x2^v
        in the monomial basis of k[x1, x2]/(x1^a - x2^b) with x1 -> s^b, x2 -> s^a.

        Raises NotInSemigroup when n has no such representation.
        """
        if n < 0:
            raise NotInSemigroup(n)
        v = (n * pow(self.a, -1, self.b)) % self.b
        u = (n - v * self.a) // self.b
        if u < 0:
            raise NotInSemigroup(n)
        return u, v

    # spec name for monomial_exponents
    canonical_decomposition = monomial_exponents

    def generator_exponents(self, n):
        """Unique (u, v) with n = u*a + v*b and 0 <= v < a.

        This is the dual decomposition, used for writing weight-n classes as
        monomials in the degree-zero ring generators of weight a and b.
        """
        if n < 0:
            raise NotInSemigroup(n)
        v = (n * pow(self.b, -1, self.a)) % self.a
        u = (n - v * self.b) // self.a
        if u < 0:
            raise NotInSemigroup(n)
        return u, v

    def db_minus_a_in_s(self, d):
        """Whether d*b - a lies in S; equivalent to d >= a."""
        return self.contains(d * self.b - self.a)

    def shifted_membership(self, n, which):
        """Membership of n in the shifted sets S1 = m1 + S, S2 = m2 + S, or both."""
        if which == "S1":
            return self.contains(n - self.m1)
        if which == "S2":
            return self.contains(n - self.m2)
        if which == "both":
            return self.contains(n - self.m1) and self.contains(n - self.m2)
        raise ValueError("which must be 'S1', 'S2' or 'both'")

    def elements(self, lo, hi):
        """Elements of S in the closed interval [lo, hi]."""
        return [n for n in range(max(lo, 0), hi + 1) if self.contains(n)]

    def positive_elements(self, limit):
        """Nonzero elements of S up to and including limit."""
        return [n for n in range(1, limit + 1) if self.contains(n)]
