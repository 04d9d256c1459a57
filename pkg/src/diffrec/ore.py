"""
Skew polynomials K[Y; d] with the commutation rule  x*Y = Y*x + d(x).

An :class:`OrePoly` stores its *right* coefficients: ``coeffs[i]`` is c_i in
sum_i Y^i c_i.  Division is on the left factor: ``ore_right_divrem(A, B)``
returns (Q, R) with A = B*Q + R, which is what membership in the right ideal
B*U needs.
"""

import re
from math import comb

from .errors import DivisionByZero, FieldMismatch, ZeroPolynomial
from .field import QQ, derivatives, element_text, field_of


class OrePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field=None):
        coeffs = list(coeffs)
        if field is None:
            field = next((field_of(c) for c in coeffs if not isinstance(c, int)), QQ)
        coeffs = [field(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def Y(cls, field, n=1):
        return cls([0] * n + [1], field)

    @classmethod
    def const(cls, x, field):
        return cls([x], field)

    # -- queries ---------------------------------------------------------

    @property
    def degree(self):
        """Degree in Y; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.name, self.coeffs))

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch(f"cannot combine {self.field!r} and {other.field!r} polynomials")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._promote(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly([self.coeff(i) + other.coeff(i) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return OrePoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._promote(other))

    def __rsub__(self, other):
        return self._promote(other) - self

    def __mul__(self, other):
        return ore_mul(self, self._promote(other))

    def __rmul__(self, other):
        return ore_mul(self._promote(other), self)

    def __pow__(self, n):
        out = OrePoly([1], self.field)
        for _ in range(n):
            out = ore_mul(out, self)
        return out

    def _promote(self, other):
        if isinstance(other, OrePoly):
            self._check(other)
            return other
        return OrePoly([other], self.field)

    def right_scale(self, u):
        """(sum Y^i c_i) * u = sum Y^i (c_i u)."""
        return OrePoly([c * u for c in self.coeffs], self.field)

    def __str__(self):
        return ore_text(self)

    def __repr__(self):
        return f"OrePoly({ore_text(self)!r}, {self.field!r})"


def ore_mul(a, b):
    """Product in K[Y; d]:  Y^i a_i * Y^j b_j = sum_k C(j,k) Y^(i+k) d^(j-k)(a_i) b_j."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return OrePoly([], a.field)
    zero = a.field.zero
    out = [zero] * (a.degree + b.degree + 1)
    db = b.degree
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        dai = derivatives(ai, db + 1)
        for j, bj in enumerate(b.coeffs):
            if bj == 0:
                continue
            for k in range(j + 1):
                d = dai[j - k]
                if d != 0:
                    out[i + k] = out[i + k] + comb(j, k) * d * bj
    return OrePoly(out, a.field)


def ore_right_divrem(a, b):
    """(Q, R) with a = b*Q + R and deg R < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZero("division by the zero skew polynomial")
    field = a.field
    q = [field.zero] * max(a.degree - b.degree + 1, 0)
    r = a
    inv_lc = 1 / b.lc
    while r.degree >= b.degree:
        m = r.degree - b.degree
        # b * Y^m c has leading term Y^(deg b + m) lc(b) c
        c = inv_lc * r.lc
        q[m] = q[m] + c
        term = OrePoly([0] * m + [c], field)
        r = r - ore_mul(b, term)
    return OrePoly(q, field), r


def ore_monic(p):
    """Right-multiply by the inverse leading coefficient."""
    if p.is_zero():
        raise ZeroPolynomial("cannot make the zero polynomial monic")
    return p.right_scale(1 / p.lc)


def left_coeff_poly(coeffs, field):
    """sum_i c_i Y^i (coefficients written on the left), rewritten to right form."""
    out = OrePoly([], field)
    for i, c in enumerate(coeffs):
        if c != 0:
            out = out + ore_mul(OrePoly([c], field), OrePoly.Y(field, i))
    return out


_SIMPLE = re.compile(r"^(\d+\*)?(z(\^\d+)?)?$|^\d+$")


def _coeff_text(t):
    return t if _SIMPLE.match(t) else f"({t})"


def _top_level_sum(t):
    depth = 0
    for i, ch in enumerate(t):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i > 0 and ch in "+-":
            return True
    return False


def ore_text(p):
    """Text form like ``Y^2 - Y*(1/(z-1)) + 1/(z^2-2*z+1)``; coefficients sit on the right."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        t = element_text(c)
        neg = t.startswith(("-", "(-"))
        if neg:
            t = element_text(-c)
        if i == 0:
            body = f"({t})" if _top_level_sum(t) else t
        else:
            mono = "Y" if i == 1 else f"Y^{i}"
            body = mono if t == "1" else f"{mono}*{_coeff_text(t)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
