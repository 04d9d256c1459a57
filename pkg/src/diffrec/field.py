"""
The two differential fields the engine works over.

* ``QQ``: the rationals (``fractions.Fraction``) with the zero derivation.
* ``QZ``: rational functions in ``z`` over the rationals with d/dz.

Elements of QZ are :class:`RatFunc` values kept in canonical form (reduced,
monic denominator) so that ``==`` is structural equality.  Plain ``int`` and
``Fraction`` values mix freely into QZ arithmetic as constants; mixing a QQ
*sequence or polynomial* with a QZ one is refused with :class:`FieldMismatch`
one level up, by the containers that carry a ``field`` tag.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

import flint

from .errors import DivisionByZero, FieldMismatch, ZeroDenominator

Poly = flint.fmpq_poly

_ZERO_POLY = Poly([])
_ONE_POLY = Poly([1])


def _frac(q):
    return Fraction(int(q.p), int(q.q))


def _poly(p):
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly([flint.fmpq(p.numerator, p.denominator)])
    return Poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in p])


def poly_coeffs(p):
    """Coefficients of ``p`` as Fractions, lowest degree first ([] for zero)."""
    return [_frac(c) for c in p.coeffs()]


class RatFunc:
    """A reduced fraction num/den of polynomials in z with monic den."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _reduced=False):
        num = _poly(num)
        den = _ONE_POLY if den is None else _poly(den)
        if not _reduced:
            if den == 0:
                raise ZeroDenominator("denominator is the zero polynomial")
            if num == 0:
                num, den = _ZERO_POLY, _ONE_POLY
            else:
                g = num.gcd(den)
                if g != 1:
                    num = num // g
                    den = den // g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls(Poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator)]), _ONE_POLY, _reduced=True)

    @classmethod
    def z(cls):
        return cls(Poly([0, 1]), _ONE_POLY, _reduced=True)

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, _RationalABC)):
            return RatFunc.const(x)
        return NotImplemented

    # -- queries ----------------------------------------------------------

    def is_zero(self):
        return self.num == 0

    def is_constant(self):
        return self.den == 1 and self.num.degree() <= 0

    def constant_value(self):
        """The Fraction value of a constant element."""
        if not self.is_constant():
            raise ValueError("not a constant")
        return _frac(self.num[0]) if self.num.degree() == 0 else Fraction(0)

    def __bool__(self):
        return self.num != 0

    def __eq__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((tuple(poly_coeffs(self.num)), tuple(poly_coeffs(self.den))))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return RatFunc(_ZERO_POLY, _ONE_POLY, _reduced=True)
            return RatFunc(self.num * other, self.den, _reduced=True)
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        # cross-cancel first; keeps the gcd inputs small
        g1 = self.num.gcd(other.den) if self.num != 0 and other.den != 1 else _ONE_POLY
        g2 = other.num.gcd(self.den) if other.num != 0 and self.den != 1 else _ONE_POLY
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        return RatFunc(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num == 0:
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = RatFunc._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def derivative(self):
        n, d = self.num, self.den
        if d == 1:
            return RatFunc(n.derivative(), _ONE_POLY, _reduced=True)
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    # -- text ------------------------------------------------------------

    def __str__(self):
        return ratfunc_text(self)

    def __repr__(self):
        return f"RatFunc({ratfunc_text(self)!r})"


def normalize_ratfunc(num, den):
    """Canonical RatFunc for num/den; num, den are coefficient lists (low first) or polys."""
    return RatFunc(num, den)


# --------------------------------------------------------------------------
# canonical text


def _int_poly_text(coeffs):
    """Integer coefficients, lowest first, as 3*z^2-z+1."""
    out = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = "z" if i == 1 else f"z^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not out:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(sign + body)
    return "".join(out) if out else "0"


def ratfunc_text(x):
    """Integer-coefficient text form, e.g. ``(z^2-1)/(2*z+3)``."""
    num = poly_coeffs(x.num)
    den = poly_coeffs(x.den)
    if not num:
        return "0"
    lcm = 1
    for c in num + den:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ni = [int(c * lcm) for c in num]
    di = [int(c * lcm) for c in den]
    g = 0
    for c in ni + di:
        g = _gcd(g, abs(c))
    ni = [c // g for c in ni]
    di = [c // g for c in di]
    nt = _int_poly_text(ni)
    if len(di) == 1:
        return nt if di[0] == 1 else _wrap_num(nt, ni) + "/" + str(di[0])
    dt = _int_poly_text(di)
    if _is_bare_monomial(di):
        return _wrap_num(nt, ni) + "/" + dt
    return _wrap_num(nt, ni) + "/(" + dt + ")"


def _is_bare_monomial(coeffs):
    return coeffs[-1] == 1 and all(c == 0 for c in coeffs[:-1])


def _wrap_num(text, coeffs):
    if sum(1 for c in coeffs if c) > 1:
        return "(" + text + ")"
    return text


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def fraction_text(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# fields


class Field:
    """A differential field tag: ``QQ`` (zero derivation) or ``QZ`` (d/dz)."""

    def __init__(self, name, description):
        self.name = name
        self.description = description

    def __repr__(self):
        return self.name.upper()

    def __reduce__(self):
        return (field_by_name, (self.name,))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        if self is QQ:
            if isinstance(x, RatFunc):
                if not x.is_constant():
                    raise FieldMismatch(f"{x} is not an element of Q")
                return x.constant_value()
            if isinstance(x, str):
                from .parse import parse_field_expr
                return parse_field_expr(x, self)
            return Fraction(x)
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, str):
            from .parse import parse_field_expr
            return parse_field_expr(x, self)
        return RatFunc.const(x)

    def contains(self, x):
        if self is QQ:
            return isinstance(x, (int, Fraction))
        return isinstance(x, RatFunc)

    def derive(self, x):
        return derive(x)

    def text(self, x):
        return element_text(x)

    def z(self):
        if self is QQ:
            raise FieldMismatch("z is not an element of Q")
        return RatFunc.z()

    def random(self, rng, max_deg=2, height=5):
        """A random element with small coefficients (reproducible from ``rng``)."""
        if self is QQ:
            return Fraction(rng.randint(-height, height), rng.randint(1, 4))
        while True:
            num = [Fraction(rng.randint(-height, height), rng.randint(1, 3))
                   for _ in range(rng.randint(0, max_deg) + 1)]
            den = [rng.randint(-height, height) for _ in range(rng.randint(0, max_deg) + 1)]
            if any(den):
                return RatFunc(num, den)

    def random_nonzero(self, rng, **kw):
        while True:
            x = self.random(rng, **kw)
            if x != 0:
                return x


QQ = Field("q", "rationals with the zero derivation")
QZ = Field("qz", "rational functions Q(z) with d/dz")

FIELDS = {"q": QQ, "qz": QZ}


def field_by_name(name):
    try:
        return FIELDS[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; expected one of {sorted(FIELDS)}") from None


def field_of(x):
    if isinstance(x, RatFunc):
        return QZ
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a field element: {x!r}")


def element_text(x):
    if isinstance(x, RatFunc):
        return ratfunc_text(x)
    return fraction_text(x)


def is_zero(x):
    return x == 0


# --------------------------------------------------------------------------
# derivation


def derive(x):
    """Formal derivative; identically zero on Q."""
    if isinstance(x, RatFunc):
        return x.derivative()
    return Fraction(0)


def derive_iter(x, n):
    """n-th derivative of x (``derive_iter(x, 0) == x``)."""
    for _ in range(n):
        if x == 0:
            return x
        x = derive(x)
    return x


def derivatives(x, n):
    """[x, x', ..., x^(n-1)], the length-n prefix of the Hurwitz expansion."""
    out = []
    for _ in range(n):
        out.append(x)
        x = derive(x)
    return out


# --------------------------------------------------------------------------
# tagged arithmetic


def check_same_field(*xs):
    fields = {field_of(x) for x in xs if not isinstance(x, int)}
    if len(fields) > 1:
        raise FieldMismatch("operands live in different fields: " + ", ".join(map(repr, xs)))


def field_arith(a, op, b=None):
    """Exact ``op`` in {add, sub, mul, div, neg, inv} on elements of one field."""
    if b is not None:
        check_same_field(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "div":
        if b == 0:
            raise DivisionByZero(f"division of {element_text(a)} by zero")
        return a / b
    if op == "inv":
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return a.inverse() if isinstance(a, RatFunc) else Fraction(1) / a
    raise ValueError(f"unknown operation {op!r}")
