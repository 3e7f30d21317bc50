import pytest

from reflectinv.catalog import (
    all_representation_names,
    catalog_get,
    catalog_names,
    relation_table,
)
from reflectinv.errors import UnknownCatalogName, UnknownRepresentation
from reflectinv.exactmath import QiMatrix, gauss_parse
from reflectinv.poly import variables

x, y = variables(2)


def test_lookup():
    entry = catalog_get("st8")
    assert entry.name == "st8"
    assert len(entry.generators) == 2
    assert len(entry.reps) == 6
    with pytest.raises(UnknownCatalogName):
        catalog_get("nosuch")
    assert catalog_names() == ["st8"]


def test_generator_matrices(entry):
    T, D = entry.generators
    h = gauss_parse("1/2+1/2i")
    assert T == QiMatrix.from_rows([[h, h], [h, -h]])
    assert D == QiMatrix.diagonal([1, "i"])


def test_rep_seed_images(entry):
    assert entry.reps["rho13"][1] == QiMatrix.diagonal([1, "i", -1])
    assert entry.reps["rho3"][0][0, 0] == gauss_parse("-i")
    assert entry.reps["rho5"][1] == QiMatrix.diagonal([1, -1])
    assert entry.reps["rho15"][1] == QiMatrix.diagonal([1, "i", -1, "-i"])
    degrees = {name: mats[0].rows for name, mats in entry.reps.items()}
    assert degrees == {"rho1": 1, "rho3": 1, "rho5": 2, "rho10": 2, "rho13": 3, "rho15": 4}


def test_invariant_polynomials(entry):
    assert entry.theta == x**8 + 14 * x**4 * y**4 + y**8
    assert entry.phi == x**12 - 33 * x**8 * y**4 - 33 * x**4 * y**8 + y**12
    assert entry.primary_degrees == (8, 12)


def test_relation_table():
    table = relation_table()
    assert len(table) == 10
    as_dict = dict(table)
    assert as_dict["rho7"] == ("rho3", "rho10")
    assert as_dict["rho16"] == ("rho3", "rho15")
    assert as_dict["rho2"] == ("rho3", "rho3")
    assert all_representation_names()[0] == "rho1"
    assert len(all_representation_names()) == 16


def test_expected_tables(entry):
    assert entry.expected_image_orders == {
        "rho1": 1,
        "rho3": 4,
        "rho5": 6,
        "rho10": 96,
        "rho13": 48,
        "rho15": 96,
    }
    assert entry.generator_degrees["rho15"] == (3, 7, 11, 15)


def test_module_generator_vectors_shape(entry):
    for name, vectors in entry.module_gens.items():
        degrees = tuple(v.degree() or 0 for v in vectors)
        assert degrees == entry.generator_degrees[name]
        m = entry.reps[name][0].rows
        assert all(len(v) == m for v in vectors)
    third = entry.module_gens["rho13"][2]
    assert third.components[0] == -(x**2) * (x**4 - 5 * y**4) ** 2


def test_resolve_representation(entry):
    rep = entry.resolve_representation("rho2")
    assert rep.degree == 1
    assert rep.gen_images[0][0, 0] == gauss_parse("-1")

    rep = entry.resolve_representation("rho3*rho13")
    assert rep.degree == 3
    assert rep.label == "rho3*rho13"

    with pytest.raises(UnknownRepresentation):
        entry.resolve_representation("rho99")
    with pytest.raises(UnknownRepresentation):
        entry.resolve_representation("rho1**rho3")
