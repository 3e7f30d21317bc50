"""Truncated power series in t and dimension series of equivariant spaces.

The computational backbone is exact truncated series arithmetic; closed
forms with a product-of-(1 - t^d) denominator are recovered afterwards by
numerator extraction, with the zero tail of the product serving as explicit
termination evidence (nothing is assumed about the denominator).

The central operation averages tr rho(g^-1) / det(I - t g) over the group,
which yields the exact dimension of the degree-d space of vector-valued
invariants as the t^d coefficient.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import (
    NonIntegralCoefficient,
    NonTerminatingNumerator,
    NonUnitConstantTerm,
    NotSquare,
)
from .exactmath import (
    GaussianRational,
    ONE,
    QiMatrix,
    ZERO,
    gauss_inverse,
    mat_det,
)
from .group import MatrixGroup
from .rep import Representation, character


class TruncatedSeries:
    """An exact power series in t through t^N (coeffs has length N + 1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(GaussianRational.coerce(c) for c in coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        vals = list(coeffs)[: order + 1]
        vals += [ZERO] * (order + 1 - len(vals))
        return cls(vals)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([ONE], order)

    @classmethod
    def one_minus_t_power(cls, d: int, order: int) -> "TruncatedSeries":
        coeffs = [ZERO] * (order + 1)
        coeffs[0] = ONE
        if d <= order:
            coeffs[d] = GaussianRational(-1)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)]
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [ZERO] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(out)
        return self.scaled(other)

    __rmul__ = __mul__

    def scaled(self, scalar) -> "TruncatedSeries":
        s = GaussianRational.coerce(scalar)
        return TruncatedSeries([s * c for c in self.coeffs])

    def truncated(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, order)

    def integer_coefficients(self) -> list[int]:
        """Coefficients as Python ints; raises if any is not a real integer."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c.im or c.re.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient of t^{k} is {c}")
            out.append(int(c.re))
        return out

    def __str__(self):
        return series_text(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self}, order {self.order})"


def series_text(coeffs: Sequence[GaussianRational]) -> str:
    """Canonical display: nonzero terms like 1 + t^8 + 2*t^13."""
    pieces = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        t_part = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if c.im:
            sign, body = "+", f"({c})"
        else:
            sign = "-" if c.re < 0 else "+"
            mag = abs(c.re)
            body = "" if mag == 1 and t_part else str(mag)
        if t_part:
            body = f"{body}*{t_part}" if body else t_part
        pieces.append((sign, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def series_inverse(p: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; p * result == 1 through t^N exactly."""
    a0 = p.coeffs[0]
    if not a0:
        raise NonUnitConstantTerm("series has no constant term")
    inv0 = gauss_inverse(a0)
    n = p.order
    out = [ZERO] * (n + 1)
    out[0] = inv0
    a = p.coeffs
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, k + 1):
            if a[j] and out[k - j]:
                acc = acc + a[j] * out[k - j]
        out[k] = -inv0 * acc if acc else ZERO
    return TruncatedSeries(out)


def char_poly_reciprocal(g: QiMatrix) -> list[GaussianRational]:
    """Coefficients of det(I - t*g) as a degree-<=n polynomial in t.

    The t^k coefficient is (-1)^k times the sum of the principal k-minors
    of g, computed exactly (group dimensions here are tiny).
    """
    if g.rows != g.cols:
        raise NotSquare("need a square matrix")
    n = g.rows
    coeffs = [ONE]
    for k in range(1, n + 1):
        total = ZERO
        for subset in combinations(range(n), k):
            sub = QiMatrix(
                k, k, [g[i, j] for i in subset for j in subset]
            )
            total = total + mat_det(sub)
        if k % 2:
            total = -total
        coeffs.append(total)
    return coeffs


def denominator_expansion(degrees: Sequence[int], order: int) -> list[int]:
    """Integer coefficients of 1 / prod(1 - t^d) through t^order."""
    counts = [0] * (order + 1)
    counts[0] = 1
    for d in degrees:
        for k in range(d, order + 1):
            counts[k] += counts[k - d]
    return counts


def _element_denominator_series(g: MatrixGroup, i: int, order: int) -> TruncatedSeries:
    """Cached expansion of 1 / det(I - t*elements[i]) through t^order."""
    poly = char_poly_reciprocal(g.elements[i])
    key = (order, tuple((c.re, c.im) for c in poly))
    cached = g._series_cache.get(key)
    if cached is None:
        cached = series_inverse(TruncatedSeries.from_coeffs(poly, order))
        g._series_cache[key] = cached
    return cached


def molien_equivariant(g: MatrixGroup, rep: Representation, order: int) -> TruncatedSeries:
    """Dimension series of the vector-valued invariants of rep, through t^order.

    Averages tr rho(s^-1) / det(I - t s) over all group elements s.  Every
    coefficient must come out a non-negative rational integer; anything else
    signals an inconsistent representation/group pair and raises.
    """
    if rep.images is None or rep.group is not g:
        raise NonIntegralCoefficient("representation must be extended over this group")
    chi = character(rep)
    inv = g.inverse_of
    n = order
    total = [ZERO] * (n + 1)
    for i in range(len(g)):
        weight = chi.values[inv[i]]
        if not weight:
            continue
        series = _element_denominator_series(g, i, n)
        for k in range(n + 1):
            c = series.coeffs[k]
            if c:
                total[k] = total[k] + weight * c
    scale = gauss_inverse(GaussianRational(len(g)))
    result = [scale * c for c in total]
    for k, c in enumerate(result):
        if c.im or c.re.denominator != 1 or c.re < 0:
            raise NonIntegralCoefficient(
                f"coefficient of t^{k} is {c}, not a non-negative integer"
            )
    return TruncatedSeries(result)


def molien_scalar(g: MatrixGroup, order: int) -> TruncatedSeries:
    """Classical Molien series (the trivial-representation special case)."""
    from .rep import trivial_representation

    return molien_equivariant(g, trivial_representation(g), order)


class HilbertData:
    """A series rewritten as numerator / prod(1 - t^d_i), verified to t^N."""

    __slots__ = ("numerator", "denominator_degrees", "verified_to")

    def __init__(
        self,
        numerator: Sequence[int],
        denominator_degrees: Sequence[int],
        verified_to: int,
    ):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        self.numerator = tuple(num)
        self.denominator_degrees = tuple(denominator_degrees)
        self.verified_to = verified_to

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator) - 1 if self.numerator else -1

    @property
    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.numerator)

    def generator_count(self) -> int:
        """Sum of numerator coefficients (free-module generator count)."""
        return sum(self.numerator)

    def generator_degrees(self) -> list[int]:
        """Degrees with multiplicity read off the numerator coefficients."""
        out = []
        for d, c in enumerate(self.numerator):
            out.extend([d] * c)
        return out

    def series(self, order: int) -> TruncatedSeries:
        """Re-expand to a truncated series (round-trip check support)."""
        expansion = denominator_expansion(self.denominator_degrees, order)
        coeffs = [0] * (order + 1)
        for d, c in enumerate(self.numerator):
            if c == 0 or d > order:
                continue
            for k in range(d, order + 1):
                coeffs[k] += c * expansion[k - d]
        return TruncatedSeries([GaussianRational(c) for c in coeffs])

    def numerator_text(self) -> str:
        return series_text([GaussianRational(c) for c in self.numerator])

    def __eq__(self, other):
        if not isinstance(other, HilbertData):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator_degrees == other.denominator_degrees
        )

    def __str__(self):
        denom = "*".join(f"(1 - t^{d})" for d in self.denominator_degrees)
        return f"({self.numerator_text()})/({denom})"

    def __repr__(self):
        return f"HilbertData({self})"


def numerator_wrt(s: TruncatedSeries, degrees: Sequence[int]) -> HilbertData:
    """Extract the numerator of s against the denominator prod(1 - t^d).

    Multiplies out the denominator and requires the product to terminate
    with a zero tail of at least max(degrees) coefficients below the
    truncation bound; a persistent tail means the denominator degrees are
    wrong for this series and raises NonTerminatingNumerator.
    """
    degrees = list(degrees)
    if not degrees or any(d <= 0 for d in degrees):
        raise ValueError("denominator degrees must be positive")
    n = s.order
    coeffs = list(s.coeffs)
    for d in degrees:
        coeffs = [
            coeffs[k] - coeffs[k - d] if k >= d else coeffs[k]
            for k in range(n + 1)
        ]
    last_nonzero = -1
    for k in range(n, -1, -1):
        if coeffs[k]:
            last_nonzero = k
            break
    guard = n - max(degrees)
    if last_nonzero > guard:
        raise NonTerminatingNumerator(
            f"nonzero numerator coefficient at t^{last_nonzero} persists past "
            f"t^{guard}; denominator degrees {degrees} do not terminate this series"
        )
    numerator = []
    for k in range(last_nonzero + 1):
        c = coeffs[k]
        if c.im or c.re.denominator != 1:
            raise NonIntegralCoefficient(f"numerator coefficient of t^{k} is {c}")
        numerator.append(int(c.re))
    return HilbertData(numerator, degrees, n)
