"""Vector-valued invariants: projection, degree-slice bases, module structure.

A vector F of homogeneous polynomials is equivariant for a representation
rho when F(g x) = rho(g) F(x) for every group element g; it suffices to
check the group's generators.  Two independent routes compute the space of
such vectors in a fixed degree:

* ``nullspace``   -- write the generator conditions as an exact linear
  system over the unknown coefficients and take its kernel;
* ``reynolds``    -- average rho(g)^-1 F(g x) over the group (a projector
  onto the space) applied to every monomial-times-unit-component vector.

``crosscheck`` runs both and insists the spans agree, treating disagreement
as an internal error rather than something to resolve silently.

On top of the bases sit the primary invariants (two algebraically
independent invariant polynomials for two variables) and the extraction of
free-module generators degree by degree against those invariants.
"""

from __future__ import annotations

from math import isqrt
from typing import Literal, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    FreenessViolation,
    MethodDisagreement,
    NoSuchDegrees,
    NotOneDimensional,
    ReflectinvError,
)
from .exactmath import (
    GaussianRational,
    ONE,
    QiMatrix,
    ZERO,
    gauss_inverse,
    _rref_rows,
)
from .group import MatrixGroup, cyclic_subgroup_indices, right_coset_transversal
from .molien import denominator_expansion, molien_equivariant, HilbertData
from .poly import (
    Monomial,
    Poly,
    PolyVec,
    Substitution,
    action_matrix,
    monomials_of_degree,
)
from .rep import Representation, trivial_representation

BasisMethod = Literal["nullspace", "reynolds", "crosscheck"]


class EquivariantSpace:
    """Echelonized basis of the degree-d equivariants of one representation."""

    def __init__(
        self,
        degree: int,
        rep_label: str,
        basis: Sequence[PolyVec],
        monos: Sequence[Monomial],
    ):
        self.degree = degree
        self.rep_label = rep_label
        self.basis = list(basis)
        self.monos = list(monos)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coefficient_rows(self) -> list[list[GaussianRational]]:
        return [F.coefficients(self.monos) for F in self.basis]

    def __repr__(self):
        return (
            f"EquivariantSpace({self.rep_label}, degree {self.degree}, "
            f"dim {self.dim})"
        )


def _substitution_for(g: MatrixGroup, mat: QiMatrix) -> Substitution:
    """Memoized substitution action for a matrix, shared across all callers."""
    key = mat.key()
    sub = g._subst_cache.get(key)
    if sub is None:
        sub = Substitution(mat)
        g._subst_cache[key] = sub
    return sub


def is_equivariant(
    g: MatrixGroup, rep: Representation, F: PolyVec, all_elements: bool = False
) -> bool:
    """Check F(s x) == rho(s) F(x), on generators or on every element."""
    if len(F) != rep.degree:
        raise DimensionMismatch("vector length must equal the representation degree")
    if all_elements:
        if rep.images is None:
            raise ReflectinvError("extend the representation to check all elements")
        pairs = zip(g.elements, rep.images)
    else:
        pairs = zip(g.generators, rep.gen_images)
    for mat, image in pairs:
        sub = _substitution_for(g, mat)
        acted = [sub.poly_image(p) for p in F.components]
        predicted = [
            _scalar_combination(image.row(i), F.components) for i in range(rep.degree)
        ]
        if acted != predicted:
            return False
    return True


def _scalar_combination(scalars, polys) -> Poly:
    total = Poly.zero(polys[0].n_vars)
    for s, p in zip(scalars, polys):
        if s and p:
            total = total + p.scaled(s)
    return total


def reynolds(
    g: MatrixGroup, rep: Representation, F: PolyVec, check: bool = True
) -> PolyVec:
    """Group-average projection onto the equivariants of rep.

    Returns (1/|G|) times the sum over elements s of rho(s)^-1 F(s x).
    The result is equivariant and the map is idempotent; with check=True the
    generator conditions are re-verified on the way out.
    """
    m = rep.degree
    if len(F) != m:
        raise DimensionMismatch("vector length must equal the representation degree")
    if rep.images is None or rep.group is not g:
        raise ReflectinvError("representation must be extended over this group")
    n_vars = F.n_vars
    total: list[dict] = [{} for _ in range(m)]
    for i in range(len(g)):
        sub = _substitution_for(g, g.elements[i])
        acted = [sub.poly_image(p) for p in F.components]
        rho_inv = rep.images[g.inverse_of[i]]
        for r in range(m):
            acc = total[r]
            for j in range(m):
                rij = rho_inv[r, j]
                if not rij:
                    continue
                for mono, c in acted[j].terms.items():
                    contrib = rij * c
                    prev = acc.get(mono)
                    acc[mono] = contrib if prev is None else prev + contrib
    scale = gauss_inverse(GaussianRational(len(g)))
    result = PolyVec(
        Poly({mono: scale * c for mono, c in acc.items()}, n_vars) for acc in total
    )
    if check and not is_equivariant(g, rep, result):
        raise ReflectinvError("projection failed the generator conditions")
    return result


# -- degree-slice bases ------------------------------------------------------------


def _nullspace_rows(
    g: MatrixGroup, rep: Representation, monos: Sequence[Monomial]
) -> list[list[GaussianRational]]:
    """Canonical (RREF) basis rows of the equivariant space, kernel route."""
    m = rep.degree
    M = len(monos)
    d = sum(monos[0]) if monos else 0
    rows: list[list[GaussianRational]] = []
    for gen_idx, gmat in enumerate(g.generators):
        A = action_matrix(gmat, d, monos, sub=_substitution_for(g, gmat))
        R = rep.gen_images[gen_idx]
        for i in range(m):
            base = i * M
            for mu in range(M):
                row = [ZERO] * (m * M)
                arow = A[mu]
                for nu in range(M):
                    if arow[nu]:
                        row[base + nu] = arow[nu]
                for j in range(m):
                    rij = R[i, j]
                    if rij:
                        col = j * M + mu
                        row[col] = row[col] - rij
                if any(row):
                    rows.append(row)
    # Cheap rows first: singleton constraints (diagonal generators) eliminate
    # most unknowns before the dense rows enter elimination.
    rows.sort(key=lambda r: sum(1 for v in r if v))
    kernel = _kernel_of_rows(rows, m * M)
    reduced, _ = _rref_rows(kernel, m * M)
    return [row for row in reduced if any(row)]


def _kernel_of_rows(rows: list[list[GaussianRational]], n_cols: int):
    if not rows:
        return [[ONE if c == f else ZERO for c in range(n_cols)] for f in range(n_cols)]
    reduced, pivots = _rref_rows([list(r) for r in rows], n_cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        vec = [ZERO] * n_cols
        vec[f] = ONE
        for r, p in enumerate(pivots):
            entry = reduced[r][f]
            if entry:
                vec[p] = -entry
        basis.append(vec)
    return basis


def _diagonal_factor_generator(g: MatrixGroup, rep: Representation) -> int | None:
    """Index of a generator whose natural and rep images are both diagonal."""
    for gi, gen in enumerate(g.generators):
        if gen.is_diagonal() and rep.gen_images[gi].is_diagonal():
            return gi
    return None


def _diagonal_action_scalar(diag: Sequence[GaussianRational], mono: Monomial):
    out = ONE
    for lam, e in zip(diag, mono):
        if e:
            out = out * lam**e
    return out


def _projection_rows(
    g: MatrixGroup, rep: Representation, monos: Sequence[Monomial]
) -> list[list[GaussianRational]]:
    """Canonical (RREF) basis rows of the equivariant space, averaging route.

    Projects every monomial-times-unit-component vector and row-reduces the
    results.  When some generator acts diagonally in both the natural and
    the given representation, the average factors exactly through its cyclic
    subgroup: the subgroup average is a diagonal 0/1 matrix, so only the
    surviving columns need the expensive coset sum.  The output is
    bit-identical to the plain full-group average.
    """
    m = rep.degree
    M = len(monos)
    d = sum(monos[0]) if monos else 0
    size = m * M
    if rep.images is None or rep.group is not g:
        raise ReflectinvError("representation must be extended over this group")

    diag_gen = _diagonal_factor_generator(g, rep)
    if diag_gen is None:
        subgroup = [0]
    else:
        subgroup = cyclic_subgroup_indices(g, g.index[g.generators[diag_gen].key()])
    transversal = right_coset_transversal(g, subgroup)

    # Diagonal subgroup average Q: one scalar per column (j, nu).
    inv = g.inverse_of
    sub_scale = gauss_inverse(GaussianRational(len(subgroup)))
    q_diag = []
    for j in range(m):
        for nu in range(M):
            acc = ZERO
            for c in subgroup:
                rho_c_inv = rep.images[inv[c]]
                nat = g.elements[c]
                acc = acc + rho_c_inv[j, j] * _diagonal_action_scalar(
                    [nat[t, t] for t in range(nat.rows)], monos[nu]
                )
            q_diag.append(sub_scale * acc)

    # Coset average, only at surviving columns: column (j, nu) of the kron
    # sum is rho(h^-1)[:, j] outer A(h)[:, nu].
    survivors = [c for c in range(size) if q_diag[c]]
    columns = {c: [ZERO] * size for c in survivors}
    for h in transversal:
        A = action_matrix(
            g.elements[h], d, monos, sub=_substitution_for(g, g.elements[h])
        )
        rho_inv = rep.images[inv[h]]
        for c in survivors:
            j, nu = divmod(c, M)
            col = columns[c]
            for i in range(m):
                rij = rho_inv[i, j]
                if not rij:
                    continue
                base = i * M
                for mu in range(M):
                    a = A[mu][nu]
                    if a:
                        col[base + mu] = col[base + mu] + rij * a
    scale = gauss_inverse(GaussianRational(len(transversal)))
    rows = []
    for c in survivors:
        q = scale * q_diag[c]
        row = [q * v for v in columns[c]]
        if any(row):
            rows.append(row)
    reduced, _ = _rref_rows(rows, size)
    return [row for row in reduced if any(row)]


def equivariant_basis(
    g: MatrixGroup,
    rep: Representation,
    d: int,
    method: BasisMethod = "nullspace",
) -> EquivariantSpace:
    """Basis of the degree-d equivariants, echelonized and normalized.

    The coefficient layout scans components first, then monomials in the
    canonical graded-lex descending order, so RREF rows are exactly the
    normalized basis.  ``crosscheck`` computes both routes and raises
    MethodDisagreement if their canonical forms differ.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    monos = monomials_of_degree(g.dim, d)
    if method == "nullspace":
        rows = _nullspace_rows(g, rep, monos)
    elif method == "reynolds":
        rows = _projection_rows(g, rep, monos)
    elif method == "crosscheck":
        rows = _nullspace_rows(g, rep, monos)
        other = _projection_rows(g, rep, monos)
        if rows != other:
            raise MethodDisagreement(
                f"kernel and averaging bases differ at degree {d} for "
                f"{rep.label or 'representation'}"
            )
    else:
        raise ValueError(f"unknown method {method!r}")
    basis = [
        PolyVec.from_coefficients(row, monos, rep.degree, g.dim) for row in rows
    ]
    return EquivariantSpace(d, rep.label, basis, monos)


# -- primary invariants --------------------------------------------------------------


class PrimaryInvariants:
    """Two algebraically independent invariant polynomials and their degrees."""

    def __init__(self, theta: Poly, phi: Poly, degrees: tuple[int, int]):
        self.theta = theta
        self.phi = phi
        self.degrees = degrees

    def __repr__(self):
        d1, d2 = self.degrees
        return f"PrimaryInvariants(deg {d1}: {self.theta}, deg {d2}: {self.phi})"


def primary_invariants(
    g: MatrixGroup, degrees: tuple[int, int] | None = None
) -> PrimaryInvariants:
    """Find invariant polynomials theta, phi of degrees (d1, d2).

    Without explicit degrees, scans divisor pairs d1 <= d2 with
    d1 * d2 = |G| (the two-variable reflection-group identity) for the
    smallest pair where both invariant spaces are nonzero.  theta must be
    unique at d1; phi is the echelon complement of the powers of theta at
    d2, and the Jacobian of (theta, phi) is required to be nonzero.
    """
    if g.dim != 2:
        raise NoSuchDegrees("primary invariant search supports two variables only")
    triv = trivial_representation(g)

    def invariant_space(d: int) -> EquivariantSpace:
        return equivariant_basis(g, triv, d, "nullspace")

    if degrees is None:
        order = len(g)
        chosen = None
        for d1 in range(1, isqrt(order) + 1):
            if order % d1:
                continue
            d2 = order // d1
            if invariant_space(d1).dim and invariant_space(d2).dim:
                chosen = (d1, d2)
                break
        if chosen is None:
            raise NoSuchDegrees(
                f"no divisor pair d1*d2 = {order} has nonzero invariant spaces"
            )
        degrees = chosen
    d1, d2 = degrees

    space1 = invariant_space(d1)
    if space1.dim != 1:
        raise NotOneDimensional(
            f"degree-{d1} invariant space has dimension {space1.dim}, not 1"
        )
    theta = space1.basis[0].components[0]

    space2 = invariant_space(d2)
    if space2.dim == 0:
        raise NoSuchDegrees(f"degree-{d2} invariant space is zero")
    monos2 = space2.monos
    sub_rows = []
    if d2 % d1 == 0:
        power = theta ** (d2 // d1)
        sub_rows.append(PolyVec([power]).coefficients(monos2))
    complement = _echelon_complement(sub_rows, space2.coefficient_rows(), len(monos2))
    if len(complement) != 1:
        raise NotOneDimensional(
            f"degree-{d2} invariant space leaves a complement of dimension "
            f"{len(complement)} after removing powers of the first invariant"
        )
    phi = PolyVec.from_coefficients(complement[0], monos2, 1, 2).components[0]

    jacobian = theta.diff(0) * phi.diff(1) - theta.diff(1) * phi.diff(0)
    if not jacobian:
        raise NoSuchDegrees(
            "candidate invariants are algebraically dependent (zero Jacobian)"
        )
    return PrimaryInvariants(theta, phi, (d1, d2))


def _echelon_complement(
    sub_rows: list[list[GaussianRational]],
    space_rref_rows: list[list[GaussianRational]],
    n_cols: int,
) -> list[list[GaussianRational]]:
    """Rows of the space's RREF whose pivots the sub-span does not reach.

    Requires the sub-span to lie inside the space (verified by a rank
    check); the returned rows are a canonical direct complement.
    """
    if not sub_rows:
        return [list(r) for r in space_rref_rows]
    sub_reduced, sub_pivots = _rref_rows([list(r) for r in sub_rows], n_cols)
    stacked = [list(r) for r in space_rref_rows] + [
        list(r) for r in sub_reduced if any(r)
    ]
    _, stacked_pivots = _rref_rows(stacked, n_cols)
    if len(stacked_pivots) != len(space_rref_rows):
        raise ReflectinvError("sub-span escapes the ambient space")
    pivot_set = set(sub_pivots)
    out = []
    for row in space_rref_rows:
        lead = next(c for c in range(n_cols) if row[c])
        if lead not in pivot_set:
            out.append(list(row))
    if len(out) != len(space_rref_rows) - len(sub_pivots):
        raise ReflectinvError("echelon complement has inconsistent dimension")
    return out


# -- free-module generators ------------------------------------------------------------


class ModuleGenerators:
    """Free-module generators of the equivariants over the invariant ring."""

    def __init__(
        self,
        rep_label: str,
        gens: Sequence[tuple[int, PolyVec]],
        verified_to: int,
    ):
        self.rep_label = rep_label
        self.gens = list(gens)
        self.verified_to = verified_to

    def degrees(self) -> list[int]:
        return [d for d, _ in self.gens]

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"ModuleGenerators({self.rep_label}, degrees {self.degrees()})"


def module_generators(
    g: MatrixGroup,
    rep: Representation,
    prim: PrimaryInvariants,
    max_degree: int,
    method: BasisMethod = "nullspace",
    bases: Mapping[int, EquivariantSpace] | None = None,
) -> ModuleGenerators:
    """Extract free-module generators degree by degree.

    At each degree the submodule slice (products of invariant monomials
    theta^a phi^b with the generators already found) is compared with the
    full equivariant space; new generators are the echelon complement.  A
    linear dependence among the products would contradict freeness and
    raises FreenessViolation with the offending degree.  The scan stops
    once the expected rank (the representation degree) is reached.

    ``bases`` optionally supplies precomputed degree slices.
    """
    d1, d2 = prim.degrees
    m = rep.degree
    found: list[tuple[int, PolyVec]] = []
    power_cache: dict[tuple[int, int], Poly] = {}

    def invariant_monomial(a: int, b: int) -> Poly:
        key = (a, b)
        p = power_cache.get(key)
        if p is None:
            p = prim.theta**a * prim.phi**b
            power_cache[key] = p
        return p

    last = -1
    for d in range(max_degree + 1):
        if bases is not None and d in bases:
            space = bases[d]
        else:
            space = equivariant_basis(g, rep, d, method)
        monos = space.monos
        slice_rows = []
        expected = 0
        for e, gen_vec in found:
            remaining = d - e
            if remaining < 0:
                continue
            for a in range(remaining // d1 + 1):
                rest = remaining - a * d1
                if rest % d2:
                    continue
                b = rest // d2
                expected += 1
                factor = invariant_monomial(a, b)
                product = PolyVec(factor * comp for comp in gen_vec.components)
                slice_rows.append(product.coefficients(monos))
        if slice_rows:
            reduced, pivots = _rref_rows([list(r) for r in slice_rows], len(monos) * m)
            slice_rank = len(pivots)
            slice_reduced = [row for row in reduced if any(row)]
        else:
            slice_rank = 0
            slice_reduced = []
        if slice_rank < expected:
            raise FreenessViolation(
                f"invariant multiples of earlier generators are dependent at "
                f"degree {d} (rank {slice_rank} < {expected})",
                degree=d,
            )
        new_rows = _echelon_complement(
            slice_reduced, space.coefficient_rows(), len(monos) * m
        )
        for row in new_rows:
            found.append((d, PolyVec.from_coefficients(row, monos, m, g.dim)))
        last = d
        if len(found) == m:
            break
    return ModuleGenerators(rep.label, found, last)


# -- freeness verification ---------------------------------------------------------------


class DegreeCheck:
    """One row of a freeness report."""

    __slots__ = ("degree", "expected", "computed", "basis_dim")

    def __init__(self, degree: int, expected: int, computed: int, basis_dim: int | None):
        self.degree = degree
        self.expected = expected
        self.computed = computed
        self.basis_dim = basis_dim

    @property
    def ok(self) -> bool:
        if self.expected != self.computed:
            return False
        return self.basis_dim is None or self.basis_dim == self.expected

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return f"{self.degree}: expected={self.expected} computed={self.computed} {status}"

    def to_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "expected": self.expected,
            "computed": self.computed,
            "ok": self.ok,
        }
        if self.basis_dim is not None:
            out["basis_dim"] = self.basis_dim
        return out


class FreeResolutionReport:
    """Per-degree comparison of dimensions against the free-module count."""

    def __init__(
        self,
        rep_label: str,
        rows: Sequence[DegreeCheck],
        numerator_matches: bool,
    ):
        self.rep_label = rep_label
        self.rows = list(rows)
        self.numerator_matches = numerator_matches

    @property
    def ok(self) -> bool:
        return self.numerator_matches and all(r.ok for r in self.rows)

    def lines(self) -> list[str]:
        return [r.line() for r in self.rows]

    def text(self) -> str:
        return "\n".join(self.lines())

    def to_dict(self) -> dict:
        return {
            "rep": self.rep_label,
            "ok": self.ok,
            "numerator_matches_generators": self.numerator_matches,
            "degrees": [r.to_dict() for r in self.rows],
        }


def verify_free_resolution(
    gens: ModuleGenerators,
    hd: HilbertData,
    rep: Representation,
    g: MatrixGroup,
    prim: PrimaryInvariants,
    max_degree: int | None = None,
    basis_dims: Mapping[int, int] | None = None,
) -> FreeResolutionReport:
    """Check that the module is free on ``gens`` up to a degree bound.

    For each degree the expected dimension is the number of products
    theta^a phi^b G with a matching total degree; the computed dimension is
    the exact coefficient of the dimension series.  ``basis_dims`` may add
    independently computed degree-slice dimensions, which must agree too.
    The numerator's coefficients must also count the generators by degree.
    """
    n = hd.verified_to if max_degree is None else max_degree
    series = molien_equivariant(g, rep, n)
    computed = series.integer_coefficients()
    lattice = denominator_expansion(prim.degrees, n)
    expected = [0] * (n + 1)
    for e, _ in gens:
        for d in range(e, n + 1):
            expected[d] += lattice[d - e]
    rows = []
    for d in range(n + 1):
        dim = None if basis_dims is None else basis_dims.get(d)
        rows.append(DegreeCheck(d, expected[d], computed[d], dim))
    numerator_matches = hd.generator_degrees() == sorted(gens.degrees())
    return FreeResolutionReport(gens.rep_label, rows, numerator_matches)
