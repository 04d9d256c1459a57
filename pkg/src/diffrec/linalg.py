"""Dense exact linear algebra over QQ or QZ (fraction-based Gaussian elimination)."""

from dataclasses import dataclass

from .errors import FieldMismatch
from .field import QQ, field_of


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major
    field: object = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        for x in self.entries:
            if not isinstance(x, int) and field_of(x) is not self.field:
                raise FieldMismatch(f"entry {x!r} is not in {self.field!r}")

    @classmethod
    def from_rows(cls, rows, field=QQ, cols=None):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        return cls(len(rows), ncols, tuple(field(x) for r in rows for x in r), field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_lists(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def apply(self, v):
        """M·v for a column vector v."""
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero
        out = []
        for r in self.row_lists():
            acc = zero
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(acc)
        return out


def _rref(rows, ncols):
    """Reduce in place; returns pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [x * inv if x != 0 else x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b if b != 0 else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def nullspace(m):
    """Basis of {v : M v = 0}.

    One vector per free column, with a 1 in that column and 0 in the other free
    columns; the leading nonzero entry of each vector is therefore 1.
    """
    if m.cols == 0:
        return []
    rows = m.row_lists()
    pivots = _rref(rows, m.cols)
    zero, one = m.field.zero, m.field.one
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            if rows[i][f] != 0:
                v[pc] = -rows[i][f]
        basis.append(v)
    return basis


def rank(m):
    return len(_rref(m.row_lists(), m.cols))


def det(m):
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    rows = m.row_lists()
    n = m.rows
    d = m.field.one
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return m.field.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d
