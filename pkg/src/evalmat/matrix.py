"""Dense exact matrices, structured builders, and the fraction-free
determinant oracle."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .poly import HomogeneousPoly, UnivariatePoly, binomial
from .scalar import (
    FpElement,
    PrimeField,
    Scalar,
    ScalarDomain,
    format_scalar,
    normalize_scalars,
    parse_scalar,
)


class DenseMatrix:
    """Immutable row-major matrix; every entry shares one scalar domain."""

    __slots__ = ("rows", "cols", "entries", "domain")

    def __init__(self, rows: Sequence[Sequence], domain: ScalarDomain | None = None):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("rows have unequal lengths")
        dom, flat = normalize_scalars([x for r in rows for x in r], domain)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(
            self,
            "entries",
            tuple(flat[i * ncols : (i + 1) * ncols] for i in range(len(rows))),
        )
        object.__setattr__(self, "domain", dom)

    def __setattr__(self, name, val):
        raise AttributeError("DenseMatrix is immutable")

    def __getitem__(self, r: int):
        return self.entries[r]

    def __eq__(self, other):
        return isinstance(other, DenseMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"

    def __mul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.domain.zero
        out = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = zero
                for t in range(self.cols):
                    acc = acc + self.entries[r][t] * other.entries[t][c]
                row.append(acc)
            out.append(row)
        return DenseMatrix(out, self.domain)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)],
            self.domain,
        )

    def column_submatrix(self, cols: Iterable[int]) -> "DenseMatrix":
        cols = list(cols)
        return DenseMatrix([[row[c] for c in cols] for row in self.entries], self.domain)

    @classmethod
    def diagonal(cls, values: Sequence, domain: ScalarDomain | None = None) -> "DenseMatrix":
        dom, vals = normalize_scalars(values, domain)
        n = len(vals)
        return cls(
            [[vals[i] if i == j else dom.zero for j in range(n)] for i in range(n)], dom
        )

    @classmethod
    def identity(cls, n: int, domain: ScalarDomain) -> "DenseMatrix":
        return cls.diagonal([domain.one] * n, domain)


class PointVectors:
    """The evaluation points a = (a_1..a_n), b = (b_1..b_n), one domain."""

    __slots__ = ("a", "b", "domain")

    def __init__(self, a: Sequence, b: Sequence, domain: ScalarDomain | None = None):
        a, b = list(a), list(b)
        if len(a) != len(b):
            raise ValueError("point vectors a and b must have equal length")
        dom, merged = normalize_scalars(a + b, domain)
        n = len(a)
        object.__setattr__(self, "a", merged[:n])
        object.__setattr__(self, "b", merged[n:])
        object.__setattr__(self, "domain", dom)

    def __setattr__(self, name, val):
        raise AttributeError("PointVectors is immutable")

    @property
    def n(self) -> int:
        return len(self.a)

    def __repr__(self):
        return f"PointVectors(a={self.a!r}, b={self.b!r})"


def evaluation_matrix(p: HomogeneousPoly | UnivariatePoly, pts: PointVectors) -> DenseMatrix:
    """The n x n matrix [p(a_r, b_s)], or [f(a_r + b_s)] for sum-form f."""
    if isinstance(pts.domain, PrimeField):
        return _evaluation_matrix_mod_p(p, pts)
    if isinstance(p, UnivariatePoly):
        rows = [[p.evaluate(ar + bs) for bs in pts.b] for ar in pts.a]
    else:
        rows = [[p.evaluate(ar, bs) for bs in pts.b] for ar in pts.a]
    return DenseMatrix(rows, pts.domain)


def _evaluation_matrix_mod_p(p, pts: PointVectors) -> DenseMatrix:
    # same entries as the generic path, computed on raw residues
    field = pts.domain
    q = field.p
    a = [x.value for x in pts.a]
    b = [x.value for x in pts.b]
    coeffs = [c.value for c in p.coeffs]
    rows = []
    if isinstance(p, UnivariatePoly):
        for ar in a:
            row = []
            for bs in b:
                t = (ar + bs) % q
                acc = 0
                for c in reversed(coeffs):
                    acc = (acc * t + c) % q
                row.append(acc)
            rows.append(row)
    else:
        k = p.degree
        for ar in a:
            # fold a_r into the coefficients, then Horner in b_s
            pw = 1
            folded = [0] * (k + 1)
            for i in range(k, -1, -1):
                folded[i] = coeffs[i] * pw % q
                pw = pw * ar % q
            row = []
            for bs in b:
                acc = 0
                for c in reversed(folded):
                    acc = (acc * bs + c) % q
                row.append(acc)
            rows.append(row)
    return DenseMatrix([[FpElement(v, field) for v in row] for row in rows], field)


def vandermonde_desc(a: Sequence, k: int, domain: ScalarDomain | None = None) -> DenseMatrix:
    """n x (k+1) matrix with row r = (a_r^k, a_r^(k-1), ..., a_r^0)."""
    dom, vals = normalize_scalars(a, domain)
    return DenseMatrix([_powers_desc(x, k, dom) for x in vals], dom)


def vandermonde_asc(b: Sequence, k: int, domain: ScalarDomain | None = None) -> DenseMatrix:
    """n x (k+1) matrix with row s = (b_s^0, b_s^1, ..., b_s^k)."""
    dom, vals = normalize_scalars(b, domain)
    return DenseMatrix([list(reversed(_powers_desc(x, k, dom))) for x in vals], dom)


def _powers_desc(x: Scalar, k: int, dom: ScalarDomain) -> list:
    powers = [dom.one]
    for _ in range(k):
        powers.append(powers[-1] * x)
    powers.reverse()
    return powers


def factorization_parts(p: HomogeneousPoly, pts: PointVectors):
    """The factors (V, D_alpha, W) with A = V * D_alpha * W^T."""
    k = p.degree
    v = vandermonde_desc(pts.a, k, pts.domain)
    w = vandermonde_asc(pts.b, k, pts.domain)
    d = DenseMatrix.diagonal(p.coeffs, p.domain)
    return v, d, w


def pascal_core(f: UnivariatePoly, n: int) -> DenseMatrix:
    """n x n coefficient grid of f(x+y): cell (i, j) = alpha_{i+j} * C(i+j, i)."""
    if n < 1:
        raise ValueError("grid dimension must be >= 1")
    rows = [
        [f.coefficient(i + j) * binomial(i + j, i) for j in range(n)] for i in range(n)
    ]
    return DenseMatrix(rows, f.domain)


def vandermonde_product(xs: Sequence) -> Scalar:
    """prod_{i<j} (x_j - x_i); 1 for fewer than two entries."""
    dom, vals = normalize_scalars(xs)
    if isinstance(dom, PrimeField):
        q = dom.p
        iv = [v.value for v in vals]
        acc = 1
        for j in range(1, len(iv)):
            xj = iv[j]
            for i in range(j):
                acc = acc * (xj - iv[i]) % q
        return dom.from_int(acc)
    acc = dom.one
    for j in range(1, len(vals)):
        xj = vals[j]
        for i in range(j):
            acc = acc * (xj - vals[i])
    return acc


def bareiss_det(m: DenseMatrix) -> Scalar:
    """Exact determinant: cofactor expansion for n <= 3, fraction-free
    (Bareiss) elimination on an integer lift over Q, ordinary elimination
    over F_p."""
    if m.rows != m.cols:
        raise ValueError(f"matrix is {m.rows}x{m.cols}, not square")
    n = m.rows
    if n == 0:
        return m.domain.one
    if n <= 3:
        return _cofactor_det(m)
    if isinstance(m.domain, PrimeField):
        rows = [[e.value for e in row] for row in m.entries]
        return m.domain.from_int(_det_mod_p(rows, m.domain.p))
    num, den = _integer_lift(m)
    return Fraction(_bareiss_int(num), den)


def _cofactor_det(m: DenseMatrix) -> Scalar:
    e = m.entries
    if m.rows == 1:
        return e[0][0]
    if m.rows == 2:
        return e[0][0] * e[1][1] - e[0][1] * e[1][0]
    return (
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
        - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
        + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    )


def _integer_lift(m: DenseMatrix):
    """Clear denominators row by row: returns (int rows, product of row scales)."""
    num = []
    den = 1
    for row in m.entries:
        scale = lcm(*(x.denominator for x in row))
        num.append([int(x * scale) for x in row])
        den *= scale
    return num, den


def _bareiss_int(a: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; divisions are exact by Sylvester's
    identity. Mutates its argument."""
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[c][c]
        for r in range(c + 1, n):
            arc = a[r][c]
            row_r = a[r]
            row_c = a[c]
            for j in range(c + 1, n):
                row_r[j] = (pivot * row_r[j] - arc * row_c[j]) // prev
            row_r[c] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_mod_p(a: list[list[int]], p: int) -> int:
    """Ordinary Gaussian elimination over F_p. Mutates its argument."""
    n = len(a)
    det = 1
    for c in range(n):
        pivot_row = None
        for r in range(c, n):
            if a[r][c] % p:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            det = -det
        pivot = a[c][c] % p
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                row_r = a[r]
                row_c = a[c]
                for j in range(c, n):
                    row_r[j] = (row_r[j] - f * row_c[j]) % p
    return det % p


def rank(m: DenseMatrix) -> int:
    """Exact rank via Gaussian elimination with exact pivoting."""
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][c]
        for i in range(r + 1, nrows):
            if work[i][c]:
                f = work[i][c] / pivot
                work[i] = [work[i][j] - f * work[r][j] for j in range(ncols)]
        r += 1
        if r == nrows:
            break
    return r


def minor_det(m: DenseMatrix, col_subset: Iterable[int]) -> Scalar:
    """Determinant of the square submatrix picking the given columns."""
    cols = sorted(col_subset)
    if len(cols) != m.rows:
        raise ValueError(
            f"column subset has size {len(cols)}, need {m.rows} for a square minor"
        )
    return bareiss_det(m.column_submatrix(cols))


def matrix_to_json(m: DenseMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_scalar(x) for x in row] for row in m.entries],
    }


def matrix_from_json(obj: dict, domain: ScalarDomain) -> DenseMatrix:
    entries = [[parse_scalar(s, domain) for s in row] for row in obj["entries"]]
    m = DenseMatrix(entries, domain)
    if m.rows != obj["rows"] or m.cols != obj["cols"]:
        raise ValueError("matrix entries do not match declared dimensions")
    return m
