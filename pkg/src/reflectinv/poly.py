"""Exact multivariate polynomials over Q(i) and the substitution action.

Monomials are exponent tuples.  The single canonical term order everywhere
(storage, printing, leading-term selection) is graded lexicographic with
variable 0 > variable 1 > ..., listed in descending order, e.g. for two
variables and degree 3: x^3, x^2*y, x*y^2, y^3.

A matrix g acts on a polynomial by linear substitution of the variables,
f |-> f(g x).  Substitution expands powers of the rows' linear forms with
multinomial coefficients, which keeps high-degree work exact and fast.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ZeroVector
from .exactmath import GaussianRational, ONE, QiMatrix, ZERO, gauss_inverse

Monomial = tuple  # exponent tuple, one non-negative int per variable


def mono_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    """Sort key; use with reverse=True for the canonical descending order."""
    return (sum(m), m)


def monomials_of_degree(n_vars: int, d: int) -> list[Monomial]:
    """All monomials of total degree d, in graded-lex descending order."""
    if d < 0:
        raise ValueError("degree must be non-negative")

    def gen(k: int, rest: int):
        if k == 1:
            yield (rest,)
            return
        for e in range(rest, -1, -1):
            for tail in gen(k - 1, rest - e):
                yield (e,) + tail

    return list(gen(n_vars, d))


def _default_names(n_vars: int) -> tuple[str, ...]:
    if n_vars <= 2:
        return ("x", "y")[:n_vars]
    return tuple(f"x{i + 1}" for i in range(n_vars))


class Poly:
    """Sparse exact polynomial; terms map exponent tuples to Q(i) scalars."""

    __slots__ = ("terms", "n_vars")

    def __init__(self, terms: dict | None = None, n_vars: int = 2):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = GaussianRational.coerce(coeff)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean
        self.n_vars = n_vars

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int = 2) -> "Poly":
        return cls({}, n_vars)

    @classmethod
    def constant(cls, value, n_vars: int = 2) -> "Poly":
        return cls({(0,) * n_vars: GaussianRational.coerce(value)}, n_vars)

    @classmethod
    def variable(cls, index: int, n_vars: int = 2) -> "Poly":
        mono = tuple(1 if j == index else 0 for j in range(n_vars))
        return cls({mono: ONE}, n_vars)

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1, n_vars: int | None = None) -> "Poly":
        return cls({tuple(mono): GaussianRational.coerce(coeff)}, n_vars or len(mono))

    # -- ring operations ---------------------------------------------------------

    def _check_compatible(self, other: "Poly"):
        if self.n_vars != other.n_vars:
            raise DimensionMismatch("polynomials over different variable counts")

    def __add__(self, other):
        other = _as_poly(other, self.n_vars)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        result = Poly.__new__(Poly)
        result.terms = out
        result.n_vars = self.n_vars
        return result

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other, self.n_vars)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        result = Poly.__new__(Poly)
        result.terms = {m: -c for m, c in self.terms.items()}
        result.n_vars = self.n_vars
        return result

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_compatible(other)
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    acc = out.get(mono)
                    acc = c if acc is None else acc + c
                    if acc:
                        out[mono] = acc
                    else:
                        out.pop(mono, None)
            result = Poly.__new__(Poly)
            result.terms = out
            result.n_vars = self.n_vars
            return result
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, scalar) -> "Poly":
        s = GaussianRational.coerce(scalar)
        if not s:
            return Poly.zero(self.n_vars)
        result = Poly.__new__(Poly)
        result.terms = {m: s * c for m, c in self.terms.items()}
        result.n_vars = self.n_vars
        return result

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1, self.n_vars)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _as_poly(other, self.n_vars)
        if other is NotImplemented:
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def coefficient(self, mono: Monomial) -> GaussianRational:
        return self.terms.get(tuple(mono), ZERO)

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading(self) -> tuple[Monomial, GaussianRational] | None:
        if not self.terms:
            return None
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    def diff(self, var: int) -> "Poly":
        """Partial derivative with respect to one variable."""
        out = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e:
                lowered = mono[:var] + (e - 1,) + mono[var + 1 :]
                out[lowered] = coeff * e
        return Poly(out, self.n_vars)

    # -- text --------------------------------------------------------------------

    def text(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = tuple(names) if names else _default_names(self.n_vars)
        pieces = []
        for mono, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            mono_text = "*".join(factors)
            if coeff.im and coeff.re:
                sign, body = "+", f"({coeff})"
            elif coeff.im:
                sign = "-" if coeff.im < 0 else "+"
                mag = abs(coeff.im)
                body = "i" if mag == 1 else f"{mag}i"
            else:
                sign = "-" if coeff.re < 0 else "+"
                mag = abs(coeff.re)
                body = "" if mag == 1 and mono_text else str(mag)
            if mono_text:
                body = f"{body}*{mono_text}" if body else mono_text
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Poly({self.text()})"


def _as_poly(value, n_vars: int):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, GaussianRational)):
        return Poly.constant(value, n_vars)
    return NotImplemented


def variables(n_vars: int = 2) -> tuple[Poly, ...]:
    """The variable polynomials, e.g. x, y for n_vars = 2."""
    return tuple(Poly.variable(i, n_vars) for i in range(n_vars))


# -- the substitution action -----------------------------------------------------


class Substitution:
    """f |-> f(g x) for one fixed matrix g.

    Row-power expansions and whole monomial images are memoized, so a
    Substitution reused across calls (e.g. one per group element) does the
    multinomial work once per monomial.
    """

    def __init__(self, g: QiMatrix):
        if g.rows != g.cols:
            raise DimensionMismatch("action matrix must be square")
        self.n = g.rows
        self.rows = [g.row(i) for i in range(g.rows)]
        self._powers: dict[tuple[int, int], dict] = {}
        self._images: dict[Monomial, dict] = {}

    def _row_power(self, i: int, k: int) -> dict:
        """Term dict of (sum_j g[i][j] x_j)**k via the multinomial theorem."""
        cached = self._powers.get((i, k))
        if cached is not None:
            return cached
        n = self.n
        coeffs = self.rows[i]
        support = [j for j in range(n) if coeffs[j]]
        out: dict = {}
        if k == 0:
            out[(0,) * n] = ONE
        elif support:
            k_fact = factorial(k)
            def rec(pos: int, remaining: int, expo: list[int], scalar: GaussianRational):
                j = support[pos]
                if pos == len(support) - 1:
                    expo[j] = remaining
                    weight = k_fact
                    for e in expo:
                        if e > 1:
                            weight //= factorial(e)
                    mono = tuple(expo)
                    contrib = scalar * coeffs[j] ** remaining * weight
                    acc = out.get(mono)
                    out[mono] = contrib if acc is None else acc + contrib
                    expo[j] = 0
                    return
                for e in range(remaining + 1):
                    expo[j] = e
                    rec(pos + 1, remaining - e, expo, scalar * coeffs[j] ** e)
                    expo[j] = 0
            rec(0, k, [0] * n, ONE)
        self._powers[(i, k)] = out
        return out

    def mono_image(self, mono: Monomial) -> dict:
        """Term dict of the image of one monomial (memoized)."""
        cached = self._images.get(mono)
        if cached is not None:
            return cached
        prod: dict | None = None
        for i, e in enumerate(mono):
            if not e:
                continue
            factor = self._row_power(i, e)
            if prod is None:
                prod = factor
                continue
            nxt: dict = {}
            for m1, c1 in prod.items():
                for m2, c2 in factor.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                    acc = nxt.get(m)
                    acc = c if acc is None else acc + c
                    if acc:
                        nxt[m] = acc
                    else:
                        nxt.pop(m, None)
            prod = nxt
        if prod is None:
            prod = {(0,) * self.n: ONE}
        self._images[mono] = prod
        return prod

    def poly_image(self, f: Poly) -> Poly:
        out: dict = {}
        for mono, coeff in f.terms.items():
            for m, c in self.mono_image(mono).items():
                contrib = coeff * c
                acc = out.get(m)
                acc = contrib if acc is None else acc + contrib
                if acc:
                    out[m] = acc
                else:
                    out.pop(m, None)
        result = Poly.__new__(Poly)
        result.terms = out
        result.n_vars = f.n_vars
        return result


def act(g: QiMatrix, f: Poly) -> Poly:
    """The substitution action g.f with f evaluated at g times the variables.

    Degree and homogeneity are preserved; composition follows
    act(h, act(g, f)) == act(g*h, f).
    """
    if g.rows != g.cols or g.cols != f.n_vars:
        raise DimensionMismatch("matrix size must equal the variable count")
    return Substitution(g).poly_image(f)


def action_matrix(
    g: QiMatrix,
    d: int,
    monos: Sequence[Monomial] | None = None,
    sub: "Substitution | None" = None,
):
    """Matrix of the substitution action on the degree-d monomial basis.

    Returns dense rows A with A[mu][nu] = coefficient of monos[mu] in the
    image of monos[nu]; the basis is monomials_of_degree in canonical order.
    A memoized Substitution for g may be passed to share expansion work.
    """
    if g.rows != g.cols:
        raise DimensionMismatch("action matrix must be square")
    if monos is None:
        monos = monomials_of_degree(g.rows, d)
    pos = {m: i for i, m in enumerate(monos)}
    M = len(monos)
    if sub is None:
        sub = Substitution(g)
    A = [[ZERO] * M for _ in range(M)]
    for nu, mono in enumerate(monos):
        for m, c in sub.mono_image(mono).items():
            A[pos[m]][nu] = c
    return A


# -- vectors of polynomials --------------------------------------------------------


class PolyVec:
    """A fixed-length vector of polynomials, homogeneous of one common degree.

    Zero components are allowed; the all-zero vector has degree None.
    """

    __slots__ = ("components", "n_vars")

    def __init__(self, components: Iterable[Poly]):
        comps = tuple(components)
        if not comps:
            raise DimensionMismatch("empty polynomial vector")
        n_vars = comps[0].n_vars
        degrees = set()
        for p in comps:
            if p.n_vars != n_vars:
                raise DimensionMismatch("components over different variable counts")
            if p:
                if not p.is_homogeneous():
                    raise DimensionMismatch("components must be homogeneous")
                degrees.add(p.degree())
        if len(degrees) > 1:
            raise DimensionMismatch("components must share one degree")
        self.components = comps
        self.n_vars = n_vars

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i: int) -> Poly:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def degree(self) -> int | None:
        for p in self.components:
            if p:
                return p.degree()
        return None

    def __bool__(self):
        return any(self.components)

    def __add__(self, other: "PolyVec") -> "PolyVec":
        if len(other) != len(self):
            raise DimensionMismatch("vector lengths differ")
        return PolyVec(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other: "PolyVec") -> "PolyVec":
        if len(other) != len(self):
            raise DimensionMismatch("vector lengths differ")
        return PolyVec(a - b for a, b in zip(self.components, other.components))

    def __neg__(self):
        return PolyVec(-p for p in self.components)

    def scaled(self, scalar) -> "PolyVec":
        return PolyVec(p.scaled(scalar) for p in self.components)

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __eq__(self, other):
        if not isinstance(other, PolyVec):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def coefficients(self, monos: Sequence[Monomial]) -> list[GaussianRational]:
        """Component-major coefficient vector on the given monomial basis."""
        out = []
        for p in self.components:
            row = [ZERO] * len(monos)
            for i, m in enumerate(monos):
                c = p.terms.get(m)
                if c is not None:
                    row[i] = c
            out.extend(row)
        return out

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Sequence[GaussianRational],
        monos: Sequence[Monomial],
        m: int,
        n_vars: int,
    ) -> "PolyVec":
        M = len(monos)
        comps = []
        for i in range(m):
            terms = {}
            for k in range(M):
                c = coeffs[i * M + k]
                if c:
                    terms[monos[k]] = c
            comps.append(Poly(terms, n_vars))
        return cls(comps)

    def text(self, names: Sequence[str] | None = None) -> str:
        return "(" + ", ".join(p.text(names) for p in self.components) + ")"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"PolyVec{self.text()}"


def act_vec(g: QiMatrix, F: PolyVec) -> PolyVec:
    """Component-wise substitution action on a polynomial vector."""
    sub = Substitution(g)
    if g.cols != F.n_vars:
        raise DimensionMismatch("matrix size must equal the variable count")
    return PolyVec(sub.poly_image(p) for p in F.components)


def normalize(F: PolyVec) -> PolyVec:
    """Scale so the leading coefficient is 1.

    Leading means the first nonzero coefficient scanning components in order
    and each component's terms in graded-lex descending order.
    """
    for p in F.components:
        lead = p.leading()
        if lead is not None:
            return F.scaled(gauss_inverse(lead[1]))
    raise ZeroVector("cannot normalize the zero vector")
