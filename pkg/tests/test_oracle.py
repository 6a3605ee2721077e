import pytest
from hypothesis import given, strategies as st

from burnside import oracle
from burnside.bisets import biset_basis, is_right_free as free_class
from burnside.burnside_ring import BurnsideElement, augmentation
from burnside.catalog import catalog_group
from burnside.errors import InvalidAction, TooLarge
from burnside.groups import Subgroup, classify_subgroups, direct_product

from conftest import SMALL_GROUPS


def test_regular_set_is_one_free_orbit():
    G = catalog_group("S3")
    assert oracle.orbit_decompose(oracle.regular_set(G)) == BurnsideElement.basis(G, 0)


def test_broken_action_is_caught():
    G = catalog_group("C2")
    X = oracle.ConcreteGSet(G, 2, ((0, 1), (0, 0)))
    with pytest.raises(InvalidAction):
        X.validate()


def test_non_homomorphic_action_is_caught():
    G = catalog_group("C3")
    X = oracle.ConcreteGSet(G, 2, ((0, 1), (1, 0), (1, 0)))
    with pytest.raises(InvalidAction):
        X.validate()


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_orbit_counting_lemma(name, data):
    G = catalog_group(name)
    C = classify_subgroups(G)
    a = data.draw(st.sampled_from(C.classes)).representative
    b = data.draw(st.sampled_from(C.classes)).representative
    X = oracle.product(oracle.coset_set(G, a), oracle.coset_set(G, b))
    X.validate()
    assert oracle.orbit_count_by_averaging(X) == len(X.orbits())
    assert augmentation(oracle.orbit_decompose(X)) == X.size


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_stabilizers_of_cosets(name, data):
    G = catalog_group(name)
    c = data.draw(st.sampled_from(classify_subgroups(G).classes))
    X = oracle.coset_set(G, c.representative)
    assert X.size == G.order // c.order
    assert X.stabilizer(0).elements == c.representative.elements


def test_disjoint_union_adds():
    G = catalog_group("V4")
    C = classify_subgroups(G)
    X = oracle.coset_set(G, C[1].representative)
    Y = oracle.coset_set(G, C[2].representative)
    total = oracle.orbit_decompose(oracle.disjoint_union(X, Y))
    assert total == BurnsideElement.basis(G, 1) + BurnsideElement.basis(G, 2)


def test_product_size_cap(monkeypatch):
    monkeypatch.setattr(oracle, "MAX_POINTS", 10)
    G = catalog_group("S3")
    X = oracle.regular_set(G)
    with pytest.raises(TooLarge):
        oracle.product(X, X)


@pytest.mark.parametrize("names", [("C2", "C2"), ("S3", "C2"), ("V4", "C3")])
def test_realized_basis_bisets_are_right_free(names):
    G, H = (catalog_group(n) for n in names)
    basis = biset_basis(G, H)
    for c in basis.classes:
        X = oracle.realize_biset(basis.product, c.representative)
        assert oracle.is_right_free(X, basis.product)


def test_non_free_biset_is_detected():
    C2 = catalog_group("C2")
    P = direct_product(C2, C2)
    U = Subgroup(P.group, (P.pair(0, 0), P.pair(0, 1)))
    assert not free_class(P, U.mask)
    assert not oracle.is_right_free(oracle.realize_biset(P, U), P)


def test_concrete_set_json():
    G = catalog_group("C2")
    data = oracle.regular_set(G).to_json()
    assert data == {"group": "C2", "size": 2, "action": [[0, 1], [1, 0]]}
