import pytest

from reflectinv.errors import CapExceeded, SingularGenerator
from reflectinv.exactmath import QiMatrix, mat_mul
from reflectinv.group import (
    close,
    cyclic_subgroup_indices,
    element_order,
    evaluate_word,
    right_coset_transversal,
)


def test_closure_order_96(group):
    assert len(group) == 96
    assert group.elements[0].is_identity()
    assert group.words[0] == ()


def test_single_generator_closure(entry):
    d_only = close([entry.generators[1]])
    assert len(d_only) == 4


def test_image_group_orders(entry):
    assert len(close(entry.reps["rho5"])) == 6
    assert len(close(entry.reps["rho13"])) == 48


def test_words_reproduce_elements(group):
    for i in range(len(group)):
        assert evaluate_word(group, group.words[i]) == group.elements[i]


def test_inverse_table(group):
    eye = QiMatrix.identity(2)
    for i in range(len(group)):
        j = group.inverse_of[i]
        assert mat_mul(group.elements[i], group.elements[j]) == eye
        assert group.inverse_of[j] == i  # involution


def test_closed_under_generators(group):
    for e in group.elements:
        for gen in group.generators:
            assert mat_mul(e, gen).key() in group.index


def test_generator_order_independence(entry):
    forward = close(entry.generators)
    backward = close(list(reversed(entry.generators)))
    assert len(forward) == len(backward)
    assert set(m.key() for m in forward.elements) == set(
        m.key() for m in backward.elements
    )


def test_element_orders(group, entry):
    T, D = entry.generators
    assert element_order(group, 0) == 1
    assert element_order(group, group.element_index(D)) == 4
    assert element_order(group, group.element_index(T)) == 8


def test_cap_exceeded():
    # an infinite-order generator: shear by 1
    shear = QiMatrix.from_rows([[1, 1], [0, 1]])
    with pytest.raises(CapExceeded):
        close([shear], cap=50)


def test_singular_generator_rejected():
    with pytest.raises(SingularGenerator):
        close([QiMatrix.from_rows([[1, 1], [1, 1]])])


def test_cayley_table(group):
    cayley = group.cayley()
    prod = mat_mul(group.elements[3], group.elements[7])
    assert group.elements[cayley[3][7]] == prod


def test_cosets_partition(group, entry):
    D = entry.generators[1]
    sub = cyclic_subgroup_indices(group, group.element_index(D))
    assert len(sub) == 4
    transversal = right_coset_transversal(group, sub)
    assert len(sub) * len(transversal) == len(group)
    cayley = group.cayley()
    covered = {cayley[c][h] for h in transversal for c in sub}
    assert len(covered) == len(group)
