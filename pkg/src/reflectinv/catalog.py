"""Built-in exact data for Shephard-Todd group No. 8.

The group of order 96 is generated by

    T = (1+i)/2 * [[1, 1], [1, -1]]      D = diag(1, i)

and its invariant ring is generated by one polynomial of degree 8 and one
of degree 12.  Six fundamental representations are stored by their images
of T and D; the remaining ten irreducibles arise as tensor products per
the relation table.  Expected orders, dimension-series numerators, and the
published free-module generator vectors are bundled as the ground truth
for the verification suite.
"""

from __future__ import annotations

from .errors import UnknownCatalogName, UnknownRepresentation
from .exactmath import QiMatrix
from .poly import Poly, PolyVec, variables
from .rep import Representation, tensor


class CatalogEntry:
    """An immutable bundle of group generators, representation seeds, and
    the expected values the verification suite checks against."""

    def __init__(
        self,
        name: str,
        generators: list[QiMatrix],
        generator_names: tuple[str, ...],
        reps: dict[str, list[QiMatrix]],
        expected_order: int,
        expected_image_orders: dict[str, int],
        primary_degrees: tuple[int, int],
        theta: Poly,
        phi: Poly,
        generator_degrees: dict[str, tuple[int, ...]],
        module_gens: dict[str, list[PolyVec]],
    ):
        self.name = name
        self.generators = generators
        self.generator_names = generator_names
        self.reps = reps
        self.expected_order = expected_order
        self.expected_image_orders = expected_image_orders
        self.primary_degrees = primary_degrees
        self.theta = theta
        self.phi = phi
        self.generator_degrees = generator_degrees
        self.module_gens = module_gens

    @property
    def rep_names(self) -> list[str]:
        return list(self.reps)

    def representation_seed(self, name: str) -> Representation:
        """A named fundamental representation (unextended seed)."""
        if name not in self.reps:
            raise UnknownRepresentation(name)
        return Representation(self.reps[name], label=name)

    def resolve_representation(self, expr: str) -> Representation:
        """Resolve a representation name or tensor expression.

        Accepts fundamental names (rho1, rho3, ...), derived names from the
        relation table (rho2, rho4, ...), and '*'-joined tensor expressions
        such as rho3*rho13.
        """
        factors = [f.strip() for f in expr.split("*")]
        if not all(factors):
            raise UnknownRepresentation(expr)
        reps = [self._resolve_single(f) for f in factors]
        out = reps[0]
        for other in reps[1:]:
            out = tensor(out, other)
        if len(reps) > 1:
            out.label = expr.replace(" ", "")
        return out

    def _resolve_single(self, name: str) -> Representation:
        if name in self.reps:
            return self.representation_seed(name)
        for label, (left, right) in relation_table():
            if label == name:
                out = tensor(
                    self._resolve_single(left), self._resolve_single(right), label=name
                )
                return out
        raise UnknownRepresentation(name)


def relation_table() -> list[tuple[str, tuple[str, str]]]:
    """The ten derived irreducibles as tensor products of fundamentals."""
    return [
        ("rho2", ("rho3", "rho3")),
        ("rho4", ("rho2", "rho3")),
        ("rho6", ("rho3", "rho5")),
        ("rho7", ("rho3", "rho10")),
        ("rho8", ("rho2", "rho10")),
        ("rho9", ("rho4", "rho10")),
        ("rho11", ("rho3", "rho13")),
        ("rho12", ("rho2", "rho13")),
        ("rho14", ("rho4", "rho13")),
        ("rho16", ("rho3", "rho15")),
    ]


def all_representation_names() -> list[str]:
    """rho1..rho16 in numeric order."""
    return [f"rho{i}" for i in range(1, 17)]


def _build_st8() -> CatalogEntry:
    M = QiMatrix.from_rows
    T = M([["1/2+1/2i", "1/2+1/2i"], ["1/2+1/2i", "-1/2-1/2i"]])
    D = M([["1", "0"], ["0", "i"]])

    reps = {
        "rho1": [M([["1"]]), M([["1"]])],
        "rho3": [M([["-i"]]), M([["i"]])],
        "rho5": [
            M([["-1/2", "-1/2"], ["-3/2", "1/2"]]),
            M([["1", "0"], ["0", "-1"]]),
        ],
        "rho10": [T, D],
        "rho13": [
            M([["1/2i", "i", "1/2i"], ["1/2i", "0", "-1/2i"], ["1/2i", "-i", "1/2i"]]),
            M([["1", "0", "0"], ["0", "i", "0"], ["0", "0", "-1"]]),
        ],
        "rho15": [
            M(
                [
                    ["-1/4+1/4i", "-3/4+3/4i", "-3/4+3/4i", "-1/4+1/4i"],
                    ["-1/4+1/4i", "-1/4+1/4i", "1/4-1/4i", "1/4-1/4i"],
                    ["-1/4+1/4i", "1/4-1/4i", "1/4-1/4i", "-1/4+1/4i"],
                    ["-1/4+1/4i", "3/4-3/4i", "-3/4+3/4i", "1/4-1/4i"],
                ]
            ),
            M(
                [
                    ["1", "0", "0", "0"],
                    ["0", "i", "0", "0"],
                    ["0", "0", "-1", "0"],
                    ["0", "0", "0", "-i"],
                ]
            ),
        ],
    }

    x, y = variables(2)
    theta = x**8 + 14 * x**4 * y**4 + y**8
    phi = x**12 - 33 * x**8 * y**4 - 33 * x**4 * y**8 + y**12

    module_gens = {
        "rho1": [PolyVec([Poly.constant(1, 2)])],
        "rho3": [PolyVec([-(x**5) * y + x * y**5])],
        "rho5": [
            PolyVec([x**4 + y**4, 6 * x**2 * y**2]),
            PolyVec(
                [
                    -(x**8) + 10 * x**4 * y**4 - y**8,
                    12 * x**6 * y**2 + 12 * x**2 * y**6,
                ]
            ),
        ],
        "rho10": [
            PolyVec([x, y]),
            PolyVec([-(x**5) + 5 * x * y**4, 5 * x**4 * y - y**5]),
        ],
        "rho13": [
            PolyVec([x**2, x * y, y**2]),
            PolyVec(
                [
                    -(x**6) + 5 * x**2 * y**4,
                    2 * x**5 * y + 2 * x * y**5,
                    5 * x**4 * y**2 - y**6,
                ]
            ),
            PolyVec(
                [
                    -(x**2) * (x**4 - 5 * y**4) ** 2,
                    x * y * (5 * x**4 - y**4) * (x**4 - 5 * y**4),
                    -(y**2) * (5 * x**4 - y**4) ** 2,
                ]
            ),
        ],
        "rho15": [
            PolyVec([x**3, x**2 * y, x * y**2, y**3]),
            PolyVec(
                [
                    -(x**7) + 5 * x**3 * y**4,
                    x**6 * y + 3 * x**2 * y**5,
                    3 * x**5 * y**2 + x * y**6,
                    5 * x**4 * y**3 - y**7,
                ]
            ),
            PolyVec(
                [
                    -6 * x**7 * y**4 + 6 * x**3 * y**8,
                    -(x**10) * y + x**2 * y**9,
                    x**9 * y**2 - x * y**10,
                    6 * x**8 * y**3 - 6 * x**4 * y**7,
                ]
            ),
            PolyVec(
                [
                    -24 * x**11 * y**4 + 24 * x**7 * y**8,
                    x**14 * y - 7 * x**10 * y**5 + 3 * x**6 * y**9 + 3 * x**2 * y**13,
                    3 * x**13 * y**2 + 3 * x**9 * y**6 - 7 * x**5 * y**10 + x * y**14,
                    24 * x**8 * y**7 - 24 * x**4 * y**11,
                ]
            ),
        ],
    }

    return CatalogEntry(
        name="st8",
        generators=[T, D],
        generator_names=("T", "D"),
        reps=reps,
        expected_order=96,
        expected_image_orders={
            "rho1": 1,
            "rho3": 4,
            "rho5": 6,
            "rho10": 96,
            "rho13": 48,
            "rho15": 96,
        },
        primary_degrees=(8, 12),
        theta=theta,
        phi=phi,
        generator_degrees={
            "rho1": (0,),
            "rho3": (6,),
            "rho5": (4, 8),
            "rho10": (1, 5),
            "rho13": (2, 6, 10),
            "rho15": (3, 7, 11, 15),
        },
        module_gens=module_gens,
    )


_ENTRIES: dict[str, CatalogEntry] = {}


def catalog_get(name: str) -> CatalogEntry:
    """Look up a built-in entry; only "st8" is bundled."""
    if name not in ("st8",):
        raise UnknownCatalogName(name)
    entry = _ENTRIES.get(name)
    if entry is None:
        entry = _build_st8()
        _ENTRIES[name] = entry
    return entry


def catalog_names() -> list[str]:
    return ["st8"]
