"""Acceptance criteria, one exact check each.

Run with pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from math import factorial, prod

import pytest
import sympy as sp

from diffrec.corpus import regression_corpus
from diffrec.drs import (DRSeq, act, divisibility_inclusion, find_linear_recurrence, from_initial,
                         fundamental_matrix, materialize, min_annihilator, product)
from diffrec.field import QQ, QZ, RatFunc, element_text
from diffrec.hopf import run_hopf_suite
from diffrec.hurwitz import Seq, hinv, hmul, source, target
from diffrec.linalg import Matrix, det
from diffrec.ore import OrePoly, ore_mul, ore_right_divrem, ore_text
from diffrec.parse import parse_field_expr, parse_ore_expr

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from strategies import Z, to_sympy  # noqa: E402

z = RatFunc.z()
RESULTS = {}


def criterion(n, title):
    def wrap(fn):
        fn.number, fn.title = n, title
        return fn
    return wrap


# --------------------------------------------------------------------------


@criterion(1, "fundamental matrix of Y^2 - Y*c + c^2, c = 1/(z-1)")
def c1():
    c = 1 / (z - 1)
    p = OrePoly([c * c, -c, 1], QZ)
    o0, o1 = fundamental_matrix(p, 8)
    row0 = [1, 0] + [(-1) ** (n + 1) * factorial(n - 2) * c ** n for n in range(2, 8)]
    row1 = [0, 1] + [(-1) ** n * factorial(n - 2) * c ** (n - 1) for n in range(2, 8)]
    if list(o0.terms) != row0 or list(o1.terms) != row1:
        return False, "fundamental matrix differs from the displayed rows"
    a0, a1 = QZ(2), QZ(3)
    closed = [a0, a1] + [(-1) ** (n - 1) * factorial(n - 2) * (a0 - a1 * (z - 1)) / (z - 1) ** n
                         for n in range(2, 8)]
    r = DRSeq(p, (a0, a1))
    if list(materialize(r, 8).terms) != closed or list(from_initial(p, (a0, a1), 8).terms) != closed:
        return False, "general solution (2, 3) differs from the closed form"
    return True, "8 columns and the (2,3) solution match"


@criterion(2, "basis solutions of Y^2 - Y*c1 - c0 for c0 = z, c1 = 1/z")
def c2():
    c0, c1 = z, 1 / z
    p = OrePoly([-c0, -c1, 1], QZ)
    a0 = materialize(DRSeq(p, (1, 0)), 6)
    a1 = materialize(DRSeq(p, (0, 1)), 6)
    d = RatFunc.derivative
    if a0.terms[:4] != (1, 0, c0, d(c0) + c0 * c1):
        return False, f"alpha0 head {a0}"
    if a1.terms[:4] != (0, 1, c1, c1 * c1 + c0 + d(c1)):
        return False, f"alpha1 head {a1}"
    # the displayed matrix recursion advances the vector (alpha0(n), alpha1(n)); run it in sympy
    v0, v1 = sp.Integer(1), sp.Integer(0)
    C0, C1 = Z, 1 / Z
    for n in range(1, 6):
        v0, v1 = sp.cancel(sp.diff(v0, Z) + C0 * v1), sp.cancel(sp.diff(v1, Z) + v0 + C1 * v1)
        if sp.cancel(to_sympy(a0[n]) - v0) != 0 or sp.cancel(to_sympy(a1[n]) - v1) != 0:
            return False, f"term {n} differs from the matrix recursion"
    return True, "6 terms of both sequences match"


@criterion(3, "product annihilators: order 1 x 1, order 1 x 2, Riccati drop")
def c3():
    notes, ok = [], True
    p, q = z, 1 / z
    got = product(DRSeq(OrePoly([-p, 1], QZ), (1,)), DRSeq(OrePoly([-q, 1], QZ), (1,))).annihilator
    want = OrePoly([-(p + q), 1], QZ)
    ok &= got == want
    notes.append(f"1x1 {'ok' if got == want else 'got ' + ore_text(got)}")

    # non-Riccati: beta(0), beta(1) = (0, 1) and (1, w) with w off the Riccati curve
    p, q1, q0 = z, 1 / z, z + 1
    dp = p.derivative()
    displayed = OrePoly([-(p * p + p * q1 - q0 - dp), 2 * p + q1, 1], QZ)
    alpha = DRSeq(OrePoly([-p, 1], QZ), (1,))
    for inits in [(0, 1), (1, z * z)]:
        beta = DRSeq(OrePoly([-q0, -q1, 1], QZ), inits)
        got = product(alpha, beta).annihilator
        match = got == displayed
        ok &= match
        notes.append(f"1x2 inits {','.join(map(element_text, beta.inits))}: {'ok' if match else 'got ' + ore_text(got) + ' vs displayed ' + ore_text(displayed)}")

    # Riccati: q0 = d(w) - w q1 + w^2 makes beta(1)/beta(0) = w a solution
    w, q1 = z, QZ(1)
    q0 = w.derivative() - w * q1 + w * w
    p = 1 / z
    beta = DRSeq(OrePoly([-q0, -q1, 1], QZ), (1, w))
    r = product(DRSeq(OrePoly([-p, 1], QZ), (1,)), beta)
    drop = r.order == 1 and r.annihilator == OrePoly([-(p + w), 1], QZ)
    ok &= drop
    notes.append(f"riccati order bound 2 -> {r.order} {'ok' if drop else ore_text(r.annihilator)}")
    return ok, "; ".join(notes)


@criterion(4, "t(1/z) is not linearly recursive; factorial Hankel determinant")
def c4():
    t = target(1 / z, 20)
    for bound in range(1, 6):
        if find_linear_recurrence(t, bound, 12) is not None:
            return False, f"t(1/z) has a linear recurrence of order <= {bound}"
    powers = Seq(QZ, tuple(z ** n for n in range(20)))
    for bound in range(1, 5):
        got = min_annihilator(powers, bound)
        if got is not None:
            return False, f"(z^n) annihilated by {ore_text(got)}"
    for d in range(7):
        m = Matrix.from_rows([[(-1) ** (i + j) * factorial(i + j) for j in range(d + 1)]
                              for i in range(d + 1)], QQ)
        if det(m) != prod(factorial(i) for i in range(d + 1)) ** 2:
            return False, f"determinant mismatch at d = {d}"
    return True, "no recurrence (bounds 1-5), no annihilator (1-4), det ok for d <= 6"


@criterion(5, "first-order a = c/z: closed forms and the binomial convolution")
def c5():
    def o(c, n=10):
        return materialize(DRSeq(OrePoly([-Fraction(c) / z, 1], QZ), (1,)), n)

    n = 10
    if o(3) != hmul(hinv(source(z ** 3, n)), target(z ** 3, n)):
        return False, "c = 3"
    if o(-2) != hmul(source(z ** 2, n), target(1 / z ** 2, n)):
        return False, "c = -2"
    c = Fraction(1, 2)
    sq = hmul(o(c), o(c))
    kpower = []
    fall = Fraction(1)
    for m in range(n):
        kpower.append(fall / z ** m)
        fall *= 2 * c - m
    if list(sq.terms) != kpower:
        return False, "c = 1/2 square differs from the k = 2 power formula"

    def binom(x, k):
        return prod((x - i for i in range(k)), start=Fraction(1)) / factorial(k)

    for m in range(n):
        if sum(binom(c, k) * binom(c, m - k) for k in range(m + 1)) != binom(2 * c, m):
            return False, f"binomial identity fails at n = {m}"
    return True, "c = 3, -2 closed forms; c = 1/2 square over 10 terms"


@criterion(6, "constant-coefficient examples over Q")
def c6():
    for x in (Fraction(3), Fraction(-2, 5)):
        got = materialize(DRSeq(OrePoly([-x, 1], QQ), (1,)), 10)
        if list(got.terms) != [x ** n for n in range(10)]:
            return False, f"Y - {x}"
    p = OrePoly([4, 0, 1], QQ)
    cos = [(-4) ** (n // 2) if n % 2 == 0 else 0 for n in range(10)]
    sin = [0 if n % 2 == 0 else (-4) ** (n // 2) for n in range(10)]
    if list(materialize(DRSeq(p, (1, 0)), 10).terms) != cos:
        return False, "Y^2 + 4 with (1, 0)"
    if list(materialize(DRSeq(p, (0, 1)), 10).terms) != sin:
        return False, "Y^2 + 4 with (0, 1)"
    return True, "(x^n) and the interleaved +-4^k patterns, 10 terms"


@criterion(7, "Hopf structure suite on the regression corpus")
def c7():
    corpus = regression_corpus()
    assert len(corpus) >= 10 and {r.order for r in corpus} == {1, 2, 3}
    reports = run_hopf_suite(corpus, length=10, max_total=8)
    bad = [r for r in reports if not r.passed]
    if bad:
        return False, "; ".join(r.line() for r in bad)
    return True, f"{len(reports)} checks x {len(corpus)} sequences"


@criterion(8, "oracle triangle on 100 random operators")
def c8():
    rng = random.Random(8)
    exact = 0
    for i in range(100):
        f = QZ if i % 2 else QQ
        d = rng.randint(1, 3)
        p = OrePoly([f.random(rng, max_deg=1, height=3) for _ in range(d)] + [1], f)
        r = DRSeq(p, tuple(f.random(rng, max_deg=1, height=3) for _ in range(d)))
        n = 2 * d + 4
        a = materialize(r, n)
        if a != from_initial(p, r.inits, n):
            return False, f"case {i}: materialize and from_initial differ"
        if any(x != 0 for x in act(a, p)):
            return False, f"case {i}: act(a, P) != 0"
        q = min_annihilator(a, d)
        if q == p:
            exact += 1
            continue
        # the sequence may have a smaller annihilator: then it must generate a
        # right ideal containing P (zero sequence: every operator kills it)
        zero = all(x == 0 for x in r.inits)
        if q is None or not (zero or ore_right_divrem(p, q)[1].is_zero()) or any(act(a, q)):
            return False, f"case {i}: min_annihilator returned {q} for {ore_text(p)}"
    return True, f"{exact}/100 exact round trips, the rest proper left factors"


@criterion(9, "divisibility inclusion on 20 factorizations")
def c9():
    rng = random.Random(9)
    for i in range(20):
        f = QZ if i % 2 else QQ
        a = OrePoly([f.random(rng, max_deg=1, height=3) for _ in range(rng.randint(1, 2))] + [1], f)
        c = OrePoly([f.random(rng, max_deg=1, height=3) for _ in range(rng.randint(1, 2))] + [1], f)
        b = ore_mul(a, c)
        rep = divisibility_inclusion(a, b, samples=3, rng=rng)
        if not rep or rep.quotient != c:
            return False, f"case {i}: {ore_text(a)} * {ore_text(c)}"
    return True, "20 of 20"


PARSE_CORPUS = [
    # field elements over Q(z)
    ("qz", "z"), ("qz", "1/(z-1)^2"), ("qz", "(z^2-1)/(z-1)"), ("qz", "z^-3"), ("qz", "-z/2"),
    ("qz", "3*z^2 - 4/z"), ("qz", "(z+1)/(z-1) - (z-1)/(z+1)"), ("qz", "1/(2*z+3)"),
    ("qz", "(z^3 - 1/2)/(7*z^2 + z)"), ("qz", "-(z+1)^3"), ("qz", "((z))"), ("qz", "5"),
    ("qz", "0"), ("qz", "z*z*z - z"), ("qz", "1/z + 1/z^2 + 1/z^3"), ("qz", "(1 - z)^-2"),
    ("qz", "-7/9"), ("qz", "(2*z-2)/(4*z^2-4)"), ("qz", "z^10/(z^5+1)"), ("qz", "(z/3 + 1/6)^2"),
    # rationals
    ("q", "3/4"), ("q", "-3/4"), ("q", "0"), ("q", "2^10"), ("q", "1/2 + 1/3"), ("q", "(5)^-2"),
    ("q", "-(-(1))"), ("q", "100/25"), ("q", "7 - 7/8"), ("q", "(1/2)^3 * 8"),
    # skew polynomials
    ("qz", "Y"), ("qz", "Y - z"), ("qz", "Y^2 - Y*(1/(z-1)) + 1/(z-1)^2"), ("qz", "z*Y"),
    ("qz", "z^2*Y^2"), ("qz", "Y*z - z*Y"), ("qz", "(Y - z)*(Y - 1/z)"), ("qz", "Y^3 + 1/(z+1)"),
    ("qz", "Y^2*(z^2/3) - Y*2 + z"), ("qz", "-Y*((z+1)/z) - (2*z-1)/(z+3)"), ("qz", "(Y+z)^2"),
    ("qz", "Y/z"), ("qz", "(1/z)*Y - Y*(1/z)"), ("qz", "Y^4 - z^4"), ("qz", "3"),
    ("q", "Y^2 - Y - 1"), ("q", "Y^2 + 4"), ("q", "(Y - 1/2)^3"), ("q", "2*Y*3"), ("q", "Y*(-5/7) + 1"),
]


@criterion(10, "parser round trip on 50 expressions and left-coefficient rewriting")
def c10():
    assert len(PARSE_CORPUS) == 50
    for field_name, text in PARSE_CORPUS:
        f = QQ if field_name == "q" else QZ
        ore = "Y" in text
        parse = parse_ore_expr if ore else parse_field_expr
        v = parse(text, f)
        printed = ore_text(v) if ore else element_text(v)
        if parse(printed, f) != v:
            return False, f"{text!r} printed as {printed!r} does not parse back"
    # x Y = Y x + d(x)
    zy = parse_ore_expr("z*Y")
    if list(zy.coeffs) != [1, z]:
        return False, f"z*Y parsed as {zy.coeffs}"
    for x in (z * z, 1 / (z - 1), RatFunc.const(3)):
        lhs = ore_mul(OrePoly([x], QZ), OrePoly.Y(QZ))
        if lhs != OrePoly([x.derivative(), x], QZ):
            return False, f"commutation rule fails for {x}"
    return True, "50 round trips; z*Y -> [1, z]"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]


def run_one(fn):
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failure, reported with its message
        ok, detail = False, f"{type(e).__name__}: {e}"
    RESULTS[fn.number] = (ok, fn.title, detail, time.perf_counter() - t)
    return ok, detail


def result_line(n):
    ok, title, detail, secs = RESULTS[n]
    return f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}] ({secs:.2f}s)"


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{f.number}" for f in CRITERIA])
def test_criterion(fn):
    ok, detail = run_one(fn)
    print(result_line(fn.number))
    assert ok, detail


if __name__ == "__main__":
    t = time.perf_counter()
    for fn in CRITERIA:
        run_one(fn)
        print(result_line(fn.number))
    print(f"total {time.perf_counter() - t:.2f}s")
    sys.exit(0 if all(r[0] for r in RESULTS.values()) else 1)
