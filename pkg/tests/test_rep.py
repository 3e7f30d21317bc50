import pytest

from reflectinv.errors import GeneratorCountMismatch, NotAHomomorphism
from reflectinv.exactmath import GaussianRational, QiMatrix
from reflectinv.rep import (
    Representation,
    char_inner,
    character,
    is_irreducible,
    rep_extend,
    tensor,
    trivial_representation,
)

G = GaussianRational
ONE = G(1)


def test_trivial_extension(group):
    rep = trivial_representation(group)
    assert all(img == QiMatrix.identity(1) for img in rep.images)


def test_rho3_image_set(group, fundamentals):
    values = {img[0, 0] for img in fundamentals["rho3"].images}
    assert values == {G(1), G(0, 1), G(-1), G(0, -1)}


def test_rho10_is_the_identity_map(group, fundamentals):
    rep = fundamentals["rho10"]
    assert all(rep.images[i] == group.elements[i] for i in range(len(group)))


def test_full_homomorphism_table(group, entry):
    rep = rep_extend(entry.representation_seed("rho13"), group, check="full")
    cayley = group.cayley()
    # spot-check beyond the builtin verification
    from reflectinv.exactmath import mat_mul

    for i, j in [(5, 9), (20, 41), (95, 3)]:
        assert mat_mul(rep.images[i], rep.images[j]) == rep.images[cayley[i][j]]


def test_inconsistent_images_raise(group):
    bad = Representation(
        [QiMatrix.from_rows([[1]]), QiMatrix.from_rows([[-1]])], label="bad"
    )
    with pytest.raises(NotAHomomorphism):
        rep_extend(bad, group, check="full")


def test_character_values(group, fundamentals, entry):
    chi1 = character(fundamentals["rho1"])
    assert all(v == ONE for v in chi1.values)

    chi10 = character(fundamentals["rho10"])
    assert chi10.values[0] == G(2)

    chi13 = character(fundamentals["rho13"])
    d_index = group.element_index(entry.generators[1])
    assert chi13.values[d_index] == G(0, 1)  # trace of diag(1, i, -1)


def test_character_conjugate_via_inverse(group, fundamentals):
    for rep in fundamentals.values():
        chi = character(rep)
        for i in range(len(group)):
            assert chi.values[group.inverse_of[i]] == chi.values[i].conjugate()


def test_tensor_scalar_cases(entry, group, fundamentals):
    t33 = tensor(fundamentals["rho3"], fundamentals["rho3"])
    assert t33.gen_images[0][0, 0] == G(-1)  # (-i)(-i)

    t310 = tensor(fundamentals["rho3"], fundamentals["rho10"])
    assert t310.degree == 2
    minus_i_T = entry.generators[0].scaled(G(0, -1))
    assert t310.gen_images[0] == minus_i_T


def test_tensor_character_is_product(group, fundamentals):
    t = rep_extend(
        tensor(fundamentals["rho3"], fundamentals["rho5"]), group, check="generators"
    )
    chi = character(t)
    chi3 = character(fundamentals["rho3"])
    chi5 = character(fundamentals["rho5"])
    assert all(
        chi.values[i] == chi3.values[i] * chi5.values[i] for i in range(len(group))
    )


def test_tensor_needs_matching_generators(fundamentals):
    solo = Representation([QiMatrix.identity(1)], label="half")
    with pytest.raises(GeneratorCountMismatch):
        tensor(fundamentals["rho1"], solo)


def test_inner_products(group, fundamentals):
    chi1 = character(fundamentals["rho1"])
    chi3 = character(fundamentals["rho3"])
    chi10 = character(fundamentals["rho10"])
    assert char_inner(chi1, chi1, group) == ONE
    assert char_inner(chi10, chi10, group) == ONE
    assert char_inner(chi1, chi3, group) == G(0)


def test_irreducibility(group, fundamentals):
    assert is_irreducible(fundamentals["rho1"], group)
    assert is_irreducible(fundamentals["rho15"], group)
    square = rep_extend(
        tensor(fundamentals["rho10"], fundamentals["rho10"]), group, check="generators"
    )
    assert not is_irreducible(square, group)
    chi = character(square)
    assert char_inner(chi, chi, group) == G(2)
