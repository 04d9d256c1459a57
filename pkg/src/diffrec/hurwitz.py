"""
Truncated Hurwitz series: finite prefixes of sequences over K with the
binomial convolution product, the shift N, and the two embeddings of K.

Every operation returns the longest prefix it can certify from its inputs,
so lengths shrink under ``shift`` and friends and never grow.
"""

from dataclasses import dataclass
from math import comb

from .errors import EmptyPrefix, FieldMismatch, NotInvertible
from .field import QQ, derivatives, derive, element_text, field_of


@dataclass(frozen=True)
class Seq:
    field: object
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.field(t) for t in self.terms))

    @classmethod
    def of(cls, terms, field=None):
        terms = list(terms)
        if field is None:
            field = next((field_of(t) for t in terms if not isinstance(t, int)), QQ)
        return cls(field, tuple(terms))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return Seq(self.field, self.terms[n])
        return self.terms[n]

    def __iter__(self):
        return iter(self.terms)

    def truncate(self, n):
        return Seq(self.field, self.terms[:n])

    def __add__(self, other):
        return hadd(self, other)

    def __sub__(self, other):
        return hadd(self, hneg(other))

    def __neg__(self):
        return hneg(self)

    def __mul__(self, other):
        return hmul(self, other)

    def __str__(self):
        return "[" + ", ".join(element_text(t) for t in self.terms) + "]"

    def to_json(self):
        return {"field": self.field.name, "terms": [element_text(t) for t in self.terms]}


def _check(a, b):
    if a.field is not b.field:
        raise FieldMismatch(f"sequences over {a.field!r} and {b.field!r}")


def prefix_equal(a, b):
    """(equal?, compared length) on the common prefix."""
    n = min(len(a), len(b))
    return a.terms[:n] == b.terms[:n], n


def first_difference(a, b):
    """Index of the first differing entry on the common prefix, or None."""
    for i, (x, y) in enumerate(zip(a.terms, b.terms)):
        if x != y:
            return i
    return None


def zeros(field, length):
    return Seq(field, (field.zero,) * length)


def source(x, length, field=None):
    """s(x) = (x, 0, 0, ...)."""
    field = field or field_of(x)
    if length <= 0:
        return Seq(field, ())
    return Seq(field, (x,) + (field.zero,) * (length - 1))


def target(x, length, field=None):
    """t(x) = (x, d(x), d^2(x), ...), the Hurwitz expansion of x."""
    field = field or field_of(x)
    return Seq(field, tuple(derivatives(field(x), length)))


def hadd(a, b):
    _check(a, b)
    return Seq(a.field, tuple(x + y for x, y in zip(a.terms, b.terms)))


def hneg(a):
    return Seq(a.field, tuple(-x for x in a.terms))


def hmul(a, b):
    """(a b)(n) = sum_k C(n,k) a(k) b(n-k)."""
    _check(a, b)
    n = min(len(a), len(b))
    at, bt = a.terms, b.terms
    zero = a.field.zero
    out = []
    for m in range(n):
        acc = zero
        for k in range(m + 1):
            x, y = at[k], bt[m - k]
            if x != 0 and y != 0:
                acc = acc + comb(m, k) * (x * y)
        out.append(acc)
    return Seq(a.field, tuple(out))


def hscale_left(x, a):
    """Left K-action through s: entrywise multiplication."""
    if not isinstance(x, int) and field_of(x) is not a.field:
        raise FieldMismatch("scalar and sequence in different fields")
    return Seq(a.field, tuple(x * t for t in a.terms))


def hscale_right(a, x):
    """Right K-action through t: a * t(x)."""
    return hmul(a, target(a.field(x), len(a), a.field))


def shift(a):
    """N(a)(n) = a(n+1)."""
    if len(a) == 0:
        raise EmptyPrefix("shift of an empty prefix")
    return Seq(a.field, a.terms[1:])


def shift_n(a, i):
    for _ in range(i):
        a = shift(a)
    return a


def nabla(a):
    """Componentwise derivative."""
    return Seq(a.field, tuple(derive(t) for t in a.terms))


def ker_derivation(a):
    """nabla(a) - N(a), the derivation transported to solution spaces."""
    if len(a) == 0:
        raise EmptyPrefix("ker_derivation of an empty prefix")
    return Seq(a.field, tuple(derive(x) - y for x, y in zip(a.terms, a.terms[1:])))


def hinv(a):
    """Hurwitz inverse; needs a(0) != 0."""
    if len(a) == 0:
        raise EmptyPrefix("inverse of an empty prefix")
    if a.terms[0] == 0:
        raise NotInvertible("leading entry is zero")
    inv0 = 1 / a.field(a.terms[0])
    b = [inv0]
    for n in range(1, len(a)):
        acc = a.field.zero
        for k in range(1, n + 1):
            if a.terms[k] != 0:
                acc = acc + comb(n, k) * (a.terms[k] * b[n - k])
        b.append(-inv0 * acc)
    return Seq(a.field, tuple(b))


def hpow(a, k):
    """a^k for an integer k (negative powers through hinv)."""
    if k < 0:
        return hpow(hinv(a), -k)
    out = source(a.field.one, len(a), a.field)
    for _ in range(k):
        out = hmul(out, a)
    return out
