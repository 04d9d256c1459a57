"""
Differentially recursive sequences.

A :class:`DRSeq` is a monic skew polynomial P = Y^d - sum_{i<d} Y^i c_i of
degree d >= 1 together with d initial values.  It stands for the unique
sequence a with ``act(a, P) == 0``, i.e. the solution of

    a(n+d) = sum_{i<d} sum_{k<=n} C(n,k) d^k(c_i) a(n-k+i).

Generation goes two ways that are kept independent of each other: the scalar
recursion above (:func:`materialize`) and the companion-matrix recursion of the
fundamental solutions (:func:`fundamental_matrix`, :func:`from_initial`).
"""

from dataclasses import dataclass
from math import comb

from .errors import ArityMismatch, FieldMismatch, NoAnnihilator, NotMonic, PrefixTooShort
from .field import derivatives, element_text
from .hurwitz import Seq, hadd, hmul, hscale_left
from .linalg import Matrix, nullspace
from .ore import OrePoly, ore_right_divrem, ore_text

CERTIFIED_CAVEAT = "certified given order <= {bound}"


@dataclass(frozen=True)
class DRSeq:
    annihilator: OrePoly
    inits: tuple

    def __post_init__(self):
        p = self.annihilator
        if p.degree < 1:
            raise NotMonic("annihilator must have degree >= 1")
        if not p.is_monic():
            raise NotMonic(f"annihilator {ore_text(p)} is not monic")
        if len(self.inits) != p.degree:
            raise ArityMismatch(f"{len(self.inits)} initial values for an order-{p.degree} annihilator")
        object.__setattr__(self, "inits", tuple(p.field(x) for x in self.inits))

    @property
    def field(self):
        return self.annihilator.field

    @property
    def order(self):
        return self.annihilator.degree

    def materialize(self, length):
        return materialize(self, length)

    def to_json(self):
        return {
            "annihilator": ore_text(self.annihilator),
            "inits": [element_text(x) for x in self.inits],
            "field": self.field.name,
        }


@dataclass(frozen=True)
class FundMatrix:
    solutions: tuple  # of Seq, o_0 .. o_{d-1}

    @property
    def degree(self):
        return len(self.solutions)

    @property
    def length(self):
        return len(self.solutions[0]) if self.solutions else 0

    def __getitem__(self, i):
        return self.solutions[i]

    def __iter__(self):
        return iter(self.solutions)


def _recursion_coeffs(p):
    """c_i with P = Y^d - sum_{i<d} Y^i c_i."""
    return [-c for c in p.coeffs[:-1]]


def act(a, p):
    """Right action a <| P = sum_i t(c_i) N^i(a); returns len(a) - deg P entries."""
    if a.field is not p.field:
        raise FieldMismatch("sequence and operator over different fields")
    d = max(p.degree, 0)
    if len(a) <= d:
        raise PrefixTooShort(f"need more than {d} terms to apply a degree-{d} operator, have {len(a)}")
    m = len(a) - d
    zero = a.field.zero
    out = [zero] * m
    terms = a.terms
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        dc = derivatives(c, m)
        for n in range(m):
            acc = zero
            for k in range(n + 1):
                x = dc[k]
                y = terms[n - k + i]
                if x != 0 and y != 0:
                    acc = acc + comb(n, k) * (x * y)
            out[n] = out[n] + acc
    return Seq(a.field, tuple(out))


def materialize(r, length):
    """Prefix of the sequence by the scalar differential recursion."""
    d = r.order
    field = r.field
    if length <= d:
        return Seq(field, r.inits[:length])
    cs = _recursion_coeffs(r.annihilator)
    dcs = [derivatives(c, length - d) if c != 0 else None for c in cs]
    a = list(r.inits)
    zero = field.zero
    for n in range(length - d):
        acc = zero
        for i, dc in enumerate(dcs):
            if dc is None:
                continue
            for k in range(n + 1):
                x, y = dc[k], a[n - k + i]
                if x != 0 and y != 0:
                    acc = acc + comb(n, k) * (x * y)
        a.append(acc)
    return Seq(field, tuple(a))


def fundamental_matrix(p, length):
    """o_0..o_{d-1} from v(k+1) = d(v(k)) + A v(k) with the companion matrix A.

    o_i(k) is the coordinate of Y^k along Y^i in U / P U; the initial d x d block
    is the identity.
    """
    if p.degree < 1:
        raise NotMonic("need a polynomial of degree >= 1")
    if not p.is_monic():
        raise NotMonic(f"{ore_text(p)} is not monic")
    d = p.degree
    field = p.field
    zero, one = field.zero, field.one
    cs = _recursion_coeffs(p)
    v = [one if i == 0 else zero for i in range(d)]
    cols = [v]
    for _ in range(length - 1):
        last = v[d - 1]
        w = []
        for i in range(d):
            x = field.derive(v[i])
            if i > 0 and v[i - 1] != 0:
                x = x + v[i - 1]
            if last != 0 and cs[i] != 0:
                x = x + cs[i] * last
            w.append(x)
        v = w
        cols.append(v)
    cols = cols[:length]
    return FundMatrix(tuple(Seq(field, tuple(col[i] for col in cols)) for i in range(d)))


def from_initial(p, inits, length):
    """sum_i s(a_i) o_i: the solution with initial values ``inits``."""
    if len(inits) != p.degree:
        raise ArityMismatch(f"{len(inits)} initial values for a degree-{p.degree} operator")
    fm = fundamental_matrix(p, length)
    out = Seq(p.field, (p.field.zero,) * length)
    for a, o in zip(inits, fm):
        out = hadd(out, hscale_left(p.field(a), o))
    return out


def embed_as_drs(x, which, field=None):
    """s(x) or t(x) as a DRSeq."""
    from .field import field_of

    field = field or field_of(x)
    x = field(x)
    if which == "source":
        return DRSeq(OrePoly.Y(field), (x,))
    if which != "target":
        raise ValueError(f"which must be 'source' or 'target', not {which!r}")
    if x == 0:
        return DRSeq(OrePoly.Y(field), (x,))
    # monic form of d(x) - Y x
    return DRSeq(OrePoly([-(field.derive(x) / x), 1], field), (x,))


# --------------------------------------------------------------------------
# annihilator search


class _DerivTable:
    """Lazily cached d^k(a(m))."""

    def __init__(self, a):
        self.a = a
        self.rows = {}

    def get(self, m, k):
        row = self.rows.get(m)
        if row is None:
            row = self.rows[m] = [self.a.terms[m]]
        while len(row) <= k:
            row.append(self.a.field.derive(row[-1]))
        return row[k]


def annihilator_system(a, degree, equations, table=None):
    """Rows F_n, n < equations, of the linear system in x_0..x_degree.

    Entry (n, i) is sum_k C(n,k) (-1)^k d^k(a(n-k+i)); a solution x gives an
    operator sum_i t(x_i) N^i whose action on ``a`` vanishes at n < equations.
    """
    table = table or _DerivTable(a)
    rows = []
    zero = a.field.zero
    for n in range(equations):
        row = []
        for i in range(degree + 1):
            acc = zero
            for k in range(n + 1):
                v = table.get(n - k + i, k)
                if v != 0:
                    c = comb(n, k)
                    acc = acc + (c if k % 2 == 0 else -c) * v
            row.append(acc)
        rows.append(row)
    return Matrix.from_rows(rows, a.field, cols=degree + 1)


def min_annihilator(a, bound, window=None):
    """Least-degree monic P with deg P <= bound and a <| P = 0, or None.

    The linear system is posed with ``bound`` equations for every trial degree;
    a candidate is then checked on the first ``window`` entries of the prefix.
    When ``a`` is only known as a prefix the answer is certified given that its
    true order is at most ``bound``.
    """
    if window is None:
        window = 2 * bound + 4
    if window < bound:
        raise ValueError("verification window must be at least the bound")
    if len(a) < 2 * bound:
        raise PrefixTooShort(f"need {2 * bound} terms for bound {bound}, have {len(a)}")
    table = _DerivTable(a)
    checked = a.truncate(min(window, len(a)))
    for e in range(1, bound + 1):
        system = annihilator_system(a, e, bound, table)
        # x_e is a free column iff a monic solution exists; its basis vector is canonical
        monic = next((v for v in nullspace(system) if v[e] == 1), None)
        if monic is None:
            continue
        p = OrePoly(monic, a.field)
        if len(checked) <= e or all(x == 0 for x in act(checked, p)):
            return p
    return None


def find_linear_recurrence(a, bound, window):
    """Monic p_0..p_e (e <= bound, least such) with sum_j p_j a(n+j) = 0 for n < window.

    This is the classical constant-coefficient test (a linearly recursive
    sequence), with no derivation applied to the coefficients.
    """
    if len(a) < window + bound:
        raise PrefixTooShort(f"need {window + bound} terms, have {len(a)}")
    for e in range(1, bound + 1):
        rows = [[a.terms[n + j] for j in range(e + 1)] for n in range(window)]
        basis = nullspace(Matrix.from_rows(rows, a.field, cols=e + 1))
        for v in basis:
            if v[e] == 1:
                return v
    return None


# --------------------------------------------------------------------------
# closure


def _closure(seq, bound, length, window):
    window = window or 2 * bound + 4
    need = max(length, 2 * bound, window)
    p = min_annihilator(seq.truncate(need), bound, window)
    if p is None:
        raise NoAnnihilator(f"no annihilator of degree <= {bound} found")
    return DRSeq(p, seq.terms[:p.degree])


def product(x, y, length=0, window=None):
    """x * y as a DRSeq; the order bound is d_x d_y."""
    if x.field is not y.field:
        raise FieldMismatch("product of sequences over different fields")
    bound = x.order * y.order
    n = max(length, 2 * bound, window or 2 * bound + 4)
    return _closure(hmul(materialize(x, n), materialize(y, n)), bound, length, window)


def drs_sum(x, y, length=0, window=None):
    """x + y as a DRSeq; the order bound is d_x + d_y."""
    if x.field is not y.field:
        raise FieldMismatch("sum of sequences over different fields")
    bound = x.order + y.order
    n = max(length, 2 * bound, window or 2 * bound + 4)
    return _closure(hadd(materialize(x, n), materialize(y, n)), bound, length, window)


# --------------------------------------------------------------------------
# divisibility


@dataclass
class InclusionReport:
    divides: bool
    remainder: OrePoly
    quotient: OrePoly
    samples_checked: int
    failures: list

    def __bool__(self):
        return self.divides and not self.failures


def divisibility_inclusion(a, b, samples=5, rng=None, length=12):
    """Is B in A*U?  If so, solutions of A are checked to be killed by B.

    Returns an :class:`InclusionReport`, truthy iff B = A*Q exactly and every
    sampled solution of A satisfied act(., B) = 0 on its prefix.
    """
    import random

    rng = rng or random.Random(0)
    q, r = ore_right_divrem(b, a)
    if not r.is_zero():
        return InclusionReport(False, r, q, 0, [])
    failures = []
    length = max(length, b.degree + 4)
    for _ in range(samples):
        inits = [a.field.random(rng) for _ in range(a.degree)]
        sol = materialize(DRSeq(a, tuple(inits)), length)
        if any(v != 0 for v in act(sol, b)):
            failures.append([element_text(x) for x in inits])
    return InclusionReport(True, r, q, samples, failures)


def annihilates(p, a):
    return all(v == 0 for v in act(a, p))


def target_drs(x, field=None):
    return embed_as_drs(x, "target", field)


def source_drs(x, field=None):
    return embed_as_drs(x, "source", field)


__all__ = [
    "CERTIFIED_CAVEAT", "DRSeq", "FundMatrix", "InclusionReport", "act", "annihilates",
    "annihilator_system", "divisibility_inclusion", "drs_sum", "embed_as_drs",
    "find_linear_recurrence", "from_initial", "fundamental_matrix", "materialize",
    "min_annihilator", "product", "source_drs", "target_drs",
]
