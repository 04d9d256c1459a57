"""Regression corpus of DRSeq values (orders 1-3, both fields) used by the checks."""

from fractions import Fraction

from .drs import DRSeq, embed_as_drs
from .field import QQ, QZ, RatFunc
from .ore import OrePoly


def pole_seq(a0=1, a1=0):
    """Y^2 - Y c + c^2 with c = 1/(z-1)."""
    z = RatFunc.z()
    c = 1 / (z - 1)
    return DRSeq(OrePoly([c * c, -c, 1], QZ), (QZ(a0), QZ(a1)))


def regression_corpus():
    z = RatFunc.z()
    return [
        # over Q
        DRSeq(OrePoly([-3, 1], QQ), (Fraction(1),)),                      # (3^n)
        DRSeq(OrePoly([-1, -1, 1], QQ), (Fraction(0), Fraction(1))),      # Fibonacci
        DRSeq(OrePoly([4, 0, 1], QQ), (Fraction(1), Fraction(0))),        # Y^2 + 4
        DRSeq(OrePoly([Fraction(1, 2), -2, Fraction(-1, 3), 1], QQ),
              (Fraction(1), Fraction(-2), Fraction(3, 5))),
        # over Q(z)
        embed_as_drs(1 / z, "target"),
        embed_as_drs(z * z + 1, "source"),
        DRSeq(OrePoly([-Fraction(1, 2) / z, 1], QZ), (QZ(1),)),            # o for a = 1/(2z)
        pole_seq(2, 3),
        DRSeq(OrePoly([-z, -1 / z, 1], QZ), (z, QZ(1))),
        DRSeq(OrePoly([1 / (z + 1), QZ(0), -z, 1], QZ), (QZ(1), z, QZ(Fraction(-1, 2)))),
        embed_as_drs(z ** 3, "target"),
    ]
