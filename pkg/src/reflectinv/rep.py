"""Representations by generator images, characters, and tensor products.

A representation is seeded by one image matrix per group generator and
extended to every element along the stored generator words.  Extension
trusts nothing silently: by default it checks the homomorphism property
over all element pairs, turning inconsistent generator images into a
diagnosable NotAHomomorphism instead of corrupt downstream math.

Conjugation never leaves Q(i): the inner product evaluates the second
character at inverse elements, which equals complex conjugation for these
finite matrix groups.
"""

from __future__ import annotations

from typing import Literal, Sequence

from .errors import (
    DimensionMismatch,
    GeneratorCountMismatch,
    NotAHomomorphism,
)
from .exactmath import GaussianRational, QiMatrix, ZERO, gauss_inverse, mat_det, mat_mul
from .group import MatrixGroup

CheckMode = Literal["full", "generators", "none"]


class Representation:
    """A degree-m representation, optionally extended over a group."""

    def __init__(
        self,
        gen_images: Sequence[QiMatrix],
        label: str = "",
        images: list[QiMatrix] | None = None,
        group: MatrixGroup | None = None,
    ):
        gen_images = list(gen_images)
        if not gen_images:
            raise GeneratorCountMismatch("need at least one generator image")
        m = gen_images[0].rows
        for img in gen_images:
            if img.rows != img.cols or img.rows != m:
                raise DimensionMismatch("generator images must be square of equal size")
            if not mat_det(img):
                raise NotAHomomorphism("generator image is singular")
        self.degree = m
        self.gen_images = gen_images
        self.label = label
        self.images = images  # per-element image table, None until extended
        self.group = group

    @property
    def extended(self) -> bool:
        return self.images is not None

    def image(self, i: int) -> QiMatrix:
        if self.images is None:
            raise NotAHomomorphism("representation not extended over a group")
        return self.images[i]

    def image_of_inverse(self, i: int) -> QiMatrix:
        """rho(g^-1) via the group's inverse table; no matrix inversion."""
        if self.images is None or self.group is None:
            raise NotAHomomorphism("representation not extended over a group")
        return self.images[self.group.inverse_of[i]]

    def __repr__(self):
        state = "extended" if self.extended else "seed"
        return f"Representation({self.label or 'unnamed'}, degree {self.degree}, {state})"


def trivial_representation(g: MatrixGroup) -> Representation:
    one = QiMatrix.identity(1)
    rep = Representation([one] * len(g.generators), label="trivial")
    return rep_extend(rep, g, check="generators")


def natural_representation(g: MatrixGroup) -> Representation:
    """The representation sending each element to itself."""
    return Representation(list(g.generators), label="natural")


def rep_extend(
    rep: Representation, g: MatrixGroup, check: CheckMode = "full"
) -> Representation:
    """Fill the per-element image table along the group's generator words.

    check="full" verifies the homomorphism property on every element pair
    (exact, |G|^2 products); "generators" only on pairs (element, generator);
    "none" trusts the seed.  Inconsistent images raise NotAHomomorphism.
    """
    if len(rep.gen_images) != len(g.generators):
        raise GeneratorCountMismatch(
            f"{len(rep.gen_images)} generator images for {len(g.generators)} generators"
        )
    m = rep.degree
    images: list[QiMatrix] = [QiMatrix.identity(m)] * len(g)
    for i in range(1, len(g)):
        parent, gi = g.parents[i]
        images[i] = mat_mul(images[parent], rep.gen_images[gi])

    if check != "none":
        cayley = g.cayley()
        if check == "full":
            pairs = ((i, j) for i in range(len(g)) for j in range(len(g)))
        else:
            gen_indices = [g.index[gen.key()] for gen in g.generators]
            pairs = ((i, j) for i in range(len(g)) for j in gen_indices)
        for i, j in pairs:
            if mat_mul(images[i], images[j]) != images[cayley[i][j]]:
                raise NotAHomomorphism(
                    f"images disagree on element pair ({i}, {j}); "
                    "generator images do not satisfy the group's relations"
                )

    return Representation(rep.gen_images, rep.label, images, g)


class Character:
    """Trace values of an extended representation, one per group element."""

    def __init__(self, values: Sequence[GaussianRational], label: str = ""):
        self.values = tuple(values)
        self.label = label

    @property
    def degree(self) -> GaussianRational:
        return self.values[0]

    def __getitem__(self, i: int) -> GaussianRational:
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Character({self.label or 'unnamed'}, degree {self.degree})"


def character(rep: Representation) -> Character:
    if rep.images is None:
        raise NotAHomomorphism("extend the representation before taking its character")
    return Character([img.trace() for img in rep.images], rep.label)


def tensor(a: Representation, b: Representation, label: str = "") -> Representation:
    """Tensor product via Kronecker products of the generator images.

    Block convention: block (i, j) of the product image is a_entry(i, j)
    times b's image.  The result is a seed; extend it to use it.
    """
    if len(a.gen_images) != len(b.gen_images):
        raise GeneratorCountMismatch("representations over different generator lists")
    images = [
        _kronecker(x, y) for x, y in zip(a.gen_images, b.gen_images)
    ]
    return Representation(images, label or f"{a.label}*{b.label}")


def _kronecker(a: QiMatrix, b: QiMatrix) -> QiMatrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    entries = [ZERO] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            s = a[i, j]
            if not s:
                continue
            for k in range(b.rows):
                base = (i * b.rows + k) * cols + j * b.cols
                for t in range(b.cols):
                    entries[base + t] = s * b[k, t]
    return QiMatrix(rows, cols, entries)


def char_inner(a: Character, b: Character, g: MatrixGroup) -> GaussianRational:
    """Hermitian character inner product (1/|G|) sum a(g) conj(b(g)).

    The conjugate is realized exactly as b evaluated at the inverse element.
    """
    if len(a) != len(g) or len(b) != len(g):
        raise DimensionMismatch("characters not over this group")
    total = ZERO
    inv = g.inverse_of
    for i in range(len(g)):
        total = total + a.values[i] * b.values[inv[i]]
    return total * gauss_inverse(GaussianRational(len(g)))


def is_irreducible(rep: Representation, g: MatrixGroup) -> bool:
    """True iff the character's self inner product is exactly 1."""
    chi = character(rep)
    return char_inner(chi, chi, g) == GaussianRational(1)
