"""Exact arithmetic over Q(i) and dense exact linear algebra.

The coefficient field for the whole package is the Gaussian rationals
Q(i) = {a + b*i : a, b rational}.  Rational components are ``gmpy2.mpq``
(arbitrary precision, always reduced, positive denominator), so every
operation here is exact and deterministic.

Scalars have a bit-exact text form used in all files and CLI output::

    sign? rat (sign rat? "i")?   |   sign? rat? "i"      rat = int ("/" posint)?

e.g. ``1/2+1/2i``, ``-i``, ``14``.  ``gauss_parse`` and ``str()`` round-trip.
"""

from __future__ import annotations

import re as _re
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    NotSquare,
    ParseError,
    Singular,
)

Rational = mpq  # reduced num/den pair; zero is 0/1


class GaussianRational:
    """An element a + b*i of Q(i), immutable and hashable.

    Components are always stored reduced; equality is component-wise.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return gauss_parse(value)
        return cls(value)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self * gauss_inverse(other)

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other * gauss_inverse(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return gauss_inverse(self) ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates and hashing -------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        return gauss_print(self)

    def __repr__(self):
        return f"GaussianRational({self})"


def _as_gauss(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, type(mpq(0)))):
        return GaussianRational(value)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
MINUS_ONE = GaussianRational(-1)


# -- scalar text form ----------------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_RE_REAL = _re.compile(rf"([+-]?)({_RAT})$")
_RE_IMAG = _re.compile(rf"([+-]?)({_RAT})?i$")
_RE_BOTH = _re.compile(rf"([+-]?)({_RAT})([+-])({_RAT})?i$")


def _parse_rat(sign: str, body: str | None) -> Rational:
    if body is None:
        body = "1"
    try:
        value = mpq(body)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {body!r}") from exc
    except ValueError as exc:
        raise ParseError(f"bad rational {body!r}") from exc
    return -value if sign == "-" else value


def gauss_parse(text: str) -> GaussianRational:
    """Parse the entry-text form of a Q(i) scalar.

    >>> gauss_parse("1/2+1/2i") == GaussianRational(mpq(1, 2), mpq(1, 2))
    True
    >>> gauss_parse("-i") == GaussianRational(0, -1)
    True
    """
    s = text.strip()
    m = _RE_BOTH.match(s)
    if m:
        re_part = _parse_rat(m.group(1), m.group(2))
        im_part = _parse_rat(m.group(3), m.group(4))
        return GaussianRational(re_part, im_part)
    m = _RE_IMAG.match(s)
    if m:
        return GaussianRational(0, _parse_rat(m.group(1), m.group(2)))
    m = _RE_REAL.match(s)
    if m:
        return GaussianRational(_parse_rat(m.group(1), m.group(2)), 0)
    raise ParseError(f"cannot parse scalar {text!r}")


def gauss_print(a: GaussianRational) -> str:
    """Canonical entry-text form; inverse of gauss_parse on its output."""
    if not a.im:
        return str(a.re)
    mag = abs(a.im)
    imag = "i" if mag == 1 else f"{mag}i"
    if not a.re:
        return f"-{imag}" if a.im < 0 else imag
    sign = "-" if a.im < 0 else "+"
    return f"{a.re}{sign}{imag}"


def gauss_inverse(a: GaussianRational) -> GaussianRational:
    """Multiplicative inverse; a * gauss_inverse(a) == 1 exactly."""
    norm = a.re * a.re + a.im * a.im
    if not norm:
        raise DivisionByZero("inverse of zero")
    return GaussianRational(a.re / norm, -a.im / norm)


# -- dense matrices over Q(i) ----------------------------------------------------


class QiMatrix:
    """A dense rows x cols matrix over Q(i), immutable after construction."""

    __slots__ = ("rows", "cols", "entries", "_key")

    def __init__(self, rows: int, cols: int, entries: Sequence[GaussianRational]):
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("QiMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QiMatrix":
        data = [[GaussianRational.coerce(v) for v in row] for row in rows]
        n_rows = len(data)
        n_cols = len(data[0]) if data else 0
        if any(len(row) != n_cols for row in data):
            raise DimensionMismatch("ragged rows")
        return cls(n_rows, n_cols, [v for row in data for v in row])

    @classmethod
    def identity(cls, n: int) -> "QiMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values: Iterable) -> "QiMatrix":
        vals = [GaussianRational.coerce(v) for v in values]
        n = len(vals)
        return cls(n, n, [vals[i] if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def key(self):
        """Hashable exact key (used for element lookup in group closures)."""
        k = self._key
        if k is None:
            k = (self.rows, self.cols, tuple((z.re, z.im) for z in self.entries))
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        if not isinstance(other, QiMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        return f"QiMatrix[{body}]"

    def is_diagonal(self) -> bool:
        return self.rows == self.cols and all(
            not self.entries[i * self.cols + j]
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            (self.entries[i * self.cols + j].is_one() if i == j
             else not self.entries[i * self.cols + j])
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise NotSquare("trace needs a square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self.entries[i * self.cols + i]
        return total

    def __mul__(self, other):
        if isinstance(other, QiMatrix):
            return mat_mul(self, other)
        return NotImplemented

    def scaled(self, scalar) -> "QiMatrix":
        s = GaussianRational.coerce(scalar)
        return QiMatrix(self.rows, self.cols, [s * v for v in self.entries])

    def apply(self, vector: Sequence[GaussianRational]) -> list[GaussianRational]:
        """Matrix-vector product over Q(i)."""
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length does not match matrix columns")
        out = []
        ent = self.entries
        n = self.cols
        for i in range(self.rows):
            base = i * n
            acc = ZERO
            for j in range(n):
                a = ent[base + j]
                if a:
                    acc = acc + a * vector[j]
            out.append(acc)
        return out


def mat_mul(a: QiMatrix, b: QiMatrix) -> QiMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out = []
    for i in range(n):
        arow = ae[i * k : (i + 1) * k]
        for j in range(m):
            s_re = mpq(0)
            s_im = mpq(0)
            for t in range(k):
                x = arow[t]
                if x.re or x.im:
                    y = be[t * m + j]
                    s_re += x.re * y.re - x.im * y.im
                    s_im += x.re * y.im + x.im * y.re
            out.append(GaussianRational(s_re, s_im))
    return QiMatrix(n, m, out)


def mat_det(a: QiMatrix) -> GaussianRational:
    """Determinant by ordinary Gaussian elimination over Q(i)."""
    if a.rows != a.cols:
        raise NotSquare("determinant needs a square matrix")
    n = a.rows
    m = a.to_rows()
    det = ONE
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det = det * pivot
        inv_p = gauss_inverse(pivot)
        for r in range(col + 1, n):
            factor = m[r][col]
            if not factor:
                continue
            factor = factor * inv_p
            row_r = m[r]
            row_p = m[col]
            for c in range(col, n):
                if row_p[c]:
                    row_r[c] = row_r[c] - factor * row_p[c]
    return det


def rref(a: QiMatrix) -> tuple[QiMatrix, list[int]]:
    """Reduced row-echelon form and its pivot columns.

    Deterministic: pivots are found scanning columns left to right and rows
    top-down, so the result depends only on the input matrix.
    """
    m = a.to_rows()
    reduced, pivots = _rref_rows(m, a.cols)
    flat = [v for row in reduced for v in row]
    return QiMatrix(a.rows, a.cols, flat), pivots


def _rref_rows(m: list[list[GaussianRational]], n_cols: int) -> tuple[list, list[int]]:
    """In-place RREF on a list of rows; returns (rows, pivot columns)."""
    n_rows = len(m)
    pivots: list[int] = []
    pr = 0
    for pc in range(n_cols):
        pivot_row = None
        for r in range(pr, n_rows):
            if m[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        prow = m[pr]
        pivot = prow[pc]
        if not pivot.is_one():
            inv_p = gauss_inverse(pivot)
            for c in range(pc, n_cols):
                if prow[c]:
                    prow[c] = inv_p * prow[c]
        # Eliminate above and below; iterate only the pivot row's nonzero
        # columns so sparse pivot rows cost O(#nonzeros) per target row.
        nz = [c for c in range(pc, n_cols) if prow[c]]
        for r in range(n_rows):
            if r == pr:
                continue
            row_r = m[r]
            factor = row_r[pc]
            if not factor:
                continue
            for c in nz:
                row_r[c] = row_r[c] - factor * prow[c]
        pivots.append(pc)
        pr += 1
        if pr == n_rows:
            break
    return m, pivots


def rank(a: QiMatrix) -> int:
    return len(rref(a)[1])


def mat_inverse(a: QiMatrix) -> QiMatrix:
    """Exact inverse via elimination on the augmented matrix."""
    if a.rows != a.cols:
        raise NotSquare("inverse needs a square matrix")
    n = a.rows
    aug = [list(a.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    reduced, pivots = _rref_rows(aug, 2 * n)
    # rank([A|I]) is always n; A is invertible iff all pivots fall in the A block
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return QiMatrix(n, n, [reduced[i][n + j] for i in range(n) for j in range(n)])


def rank_of_rows(rows: list[list[GaussianRational]]) -> int:
    """Rank of a list of equal-length coefficient rows."""
    if not rows:
        return 0
    _, pivots = _rref_rows([list(r) for r in rows], len(rows[0]))
    return len(pivots)


def row_in_span(rows: list[list[GaussianRational]], candidate: list[GaussianRational]) -> bool:
    """True iff the candidate row lies in the span of the given rows."""
    base = rank_of_rows(rows)
    return rank_of_rows(rows + [candidate]) == base


def kernel_basis(a: QiMatrix) -> list[list[GaussianRational]]:
    """Basis of the right null space, one vector per free column.

    Standard RREF parameterization: each vector carries a 1 in its free
    coordinate; vectors are ordered by free column index.
    """
    reduced, pivots = rref(a)
    pivot_set = set(pivots)
    free_cols = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [ZERO] * a.cols
        vec[f] = ONE
        for r, p in enumerate(pivots):
            entry = reduced[r, f]
            if entry:
                vec[p] = -entry
        basis.append(vec)
    return basis
