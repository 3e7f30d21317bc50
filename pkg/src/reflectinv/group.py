"""Finite matrix groups built by breadth-first closure of generators.

Every element keeps the generator word that produced it (product read left
to right), so representations given by generator images can be extended to
the whole group without re-deriving factorizations.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CapExceeded, SingularGenerator
from .exactmath import QiMatrix, mat_det, mat_inverse, mat_mul

DEFAULT_CAP = 200_000


class MatrixGroup:
    """A finite group of exact matrices over Q(i).

    elements[0] is the identity; the element order is BFS discovery order
    (layer by layer, generators tried in the given order), which makes all
    downstream bases reproducible.
    """

    def __init__(
        self,
        dim: int,
        generators: list[QiMatrix],
        elements: list[QiMatrix],
        words: list[tuple[int, ...]],
        parents: list[tuple[int, int]],
        index: dict,
        inverse_of: list[int],
    ):
        self.dim = dim
        self.generators = generators
        self.elements = elements
        self.words = words
        self.parents = parents  # (element index, generator index) per non-identity element
        self.index = index
        self.inverse_of = inverse_of
        self._cayley: list[list[int]] | None = None
        self._series_cache: dict = {}
        self._subst_cache: dict = {}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_index(self, m: QiMatrix) -> int | None:
        return self.index.get(m.key())

    def cayley(self) -> list[list[int]]:
        """Full multiplication table: cayley()[i][j] = index of elements[i]*elements[j].

        Built lazily; at catalog scale (96 elements of size 2) this is cheap
        and it is shared by every representation check.
        """
        if self._cayley is None:
            els = self.elements
            idx = self.index
            table = []
            for a in els:
                row = [idx[mat_mul(a, b).key()] for b in els]
                table.append(row)
            self._cayley = table
        return self._cayley

    def word_text(self, i: int, names: Sequence[str] | None = None) -> str:
        """Human-readable generator word for elements[i] ('e' for the identity)."""
        if not self.words[i]:
            return "e"
        if names is None:
            names = [f"g{k}" for k in range(len(self.generators))]
        return "*".join(names[k] for k in self.words[i])


def close(generators: Sequence[QiMatrix], cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Breadth-first closure of the given generator matrices.

    Raises SingularGenerator if a generator is not invertible and CapExceeded
    once more than ``cap`` distinct elements appear (the closure of an
    infinite-order generator would otherwise never terminate).
    """
    gens = list(generators)
    if not gens:
        raise SingularGenerator("need at least one generator")
    n = gens[0].rows
    for g in gens:
        if g.rows != g.cols or g.rows != n:
            raise SingularGenerator("generators must be square and of equal size")
        if not mat_det(g):
            raise SingularGenerator("generator has determinant zero")

    identity = QiMatrix.identity(n)
    elements = [identity]
    words: list[tuple[int, ...]] = [()]
    parents: list[tuple[int, int]] = [(-1, -1)]
    index = {identity.key(): 0}

    frontier = [0]
    while frontier:
        next_frontier = []
        for ei in frontier:
            e = elements[ei]
            for gi, g in enumerate(gens):
                product = mat_mul(e, g)
                key = product.key()
                if key in index:
                    continue
                if len(elements) >= cap:
                    raise CapExceeded(f"closure exceeded cap of {cap} elements")
                index[key] = len(elements)
                elements.append(product)
                words.append(words[ei] + (gi,))
                parents.append((ei, gi))
                next_frontier.append(len(elements) - 1)
        frontier = next_frontier

    inverse_of = [index[mat_inverse(e).key()] for e in elements]
    return MatrixGroup(n, gens, elements, words, parents, index, inverse_of)


def element_order(g: MatrixGroup, i: int) -> int:
    """Least k >= 1 with elements[i]**k equal to the identity."""
    e = g.elements[i]
    power = e
    k = 1
    while not power.is_identity():
        power = mat_mul(power, e)
        k += 1
    return k


def evaluate_word(g: MatrixGroup, word: Sequence[int]) -> QiMatrix:
    """Product of generators along a word (empty word gives the identity)."""
    result = QiMatrix.identity(g.dim)
    for gi in word:
        result = mat_mul(result, g.generators[gi])
    return result


def cyclic_subgroup_indices(g: MatrixGroup, element_index: int) -> list[int]:
    """Indices of the cyclic subgroup generated by one element."""
    cayley = g.cayley()
    out = [0]
    current = element_index
    while current != 0:
        out.append(current)
        current = cayley[current][element_index]
    return out


def right_coset_transversal(g: MatrixGroup, subgroup: Sequence[int]) -> list[int]:
    """One representative per right coset subgroup*h, in element order."""
    cayley = g.cayley()
    covered = [False] * len(g)
    transversal = []
    for h in range(len(g)):
        if covered[h]:
            continue
        transversal.append(h)
        for c in subgroup:
            covered[cayley[c][h]] = True
    return transversal
