import csv
import io

import pytest
from hypothesis import given, strategies as st

from burnside import oracle
from burnside.burnside_ring import (
    BurnsideElement,
    MarkVector,
    augmentation,
    classes_of_order,
    from_marks,
    induce,
    marks_of,
    multiply,
    restrict_along,
    table_of_marks,
)
from burnside.catalog import catalog_group
from burnside.errors import GroupMismatch, NotInImage
from burnside.groups import classify_subgroups, homomorphisms, identity_hom, subgroup_as_group

from conftest import SMALL_GROUPS


def elements(G, bound=4):
    n = len(classify_subgroups(G))
    return st.lists(st.integers(-bound, bound), min_size=n, max_size=n).map(
        lambda c: BurnsideElement(G, tuple(c))
    )


def group_and(k):
    """A small group with ``k`` random elements of its Burnside ring."""
    return st.sampled_from(SMALL_GROUPS).map(catalog_group).flatmap(
        lambda G: st.tuples(st.just(G), *[elements(G)] * k)
    )


def test_marks_of_c2():
    assert table_of_marks(catalog_group("C2")).marks == ((2, 0), (1, 1))


def test_marks_of_trivial_group():
    assert table_of_marks(catalog_group("trivial")).marks == ((1,),)


def test_marks_of_klein():
    assert table_of_marks(catalog_group("V4")).marks == (
        (4, 0, 0, 0, 0),
        (2, 2, 0, 0, 0),
        (2, 0, 2, 0, 0),
        (2, 0, 0, 2, 0),
        (1, 1, 1, 1, 1),
    )


def test_a4_mod_klein_is_fixed_by_every_involution():
    A = catalog_group("A4")
    tom = table_of_marks(A).marks
    (v4,) = classes_of_order(A, 4)
    (c2,) = classes_of_order(A, 2)
    assert tom[v4][c2] == 3


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "S4", "C2×Q8"])
def test_marks_are_lower_triangular_with_weyl_diagonal(name):
    G = catalog_group(name)
    tom = table_of_marks(G)
    for i, row in enumerate(tom.marks):
        assert all(v == 0 for v in row[i + 1:])
        assert row[i] == tom.classes[i].weyl_order
        assert row[0] == G.order // tom.classes[i].order


@pytest.mark.parametrize("name", ["S3", "Q8", "A4", "D12"])
def test_marks_match_fixed_point_counts(name):
    G = catalog_group(name)
    tom = table_of_marks(G)
    for i, c in enumerate(tom.classes):
        X = oracle.coset_set(G, c.representative)
        assert [oracle.fixed_points(X, K.representative) for K in tom.classes] == list(tom.marks[i])


def test_fractional_marks_name_the_first_bad_class():
    C2 = catalog_group("C2")
    with pytest.raises(NotInImage) as info:
        from_marks(MarkVector(C2, (1, 0)))
    assert info.value.class_index == 0


def test_csv_headers():
    rows = list(csv.reader(io.StringIO(table_of_marks(catalog_group("C2")).to_csv())))
    assert rows[0][1:] == ["H(order=1,idx=0)", "H(order=2,idx=1)"]
    assert rows[1][1:] == ["2", "0"] and rows[2][1:] == ["1", "1"]


@given(group_and(1))
def test_marks_round_trip(case):
    _, x = case
    assert from_marks(marks_of(x)) == x


@given(group_and(2))
def test_marks_are_multiplicative(case):
    _, x, y = case
    mx, my, mxy = marks_of(x).values, marks_of(y).values, marks_of(x * y).values
    assert mxy == tuple(a * b for a, b in zip(mx, my))


@given(group_and(3))
def test_ring_axioms(case):
    G, x, y, z = case
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * BurnsideElement.one(G) == x
    assert x - x == BurnsideElement.zero(G)


@given(group_and(2))
def test_augmentation_is_a_ring_map(case):
    _, x, y = case
    assert augmentation(x * y) == augmentation(x) * augmentation(y)
    assert augmentation(x + y) == augmentation(x) + augmentation(y)


@pytest.mark.parametrize("name", ["V4", "S3", "D8"])
def test_products_of_cosets_match_concrete_products(name):
    G = catalog_group(name)
    classes = classify_subgroups(G)
    sets = [oracle.coset_set(G, c.representative) for c in classes]
    for i in range(len(classes)):
        for j in range(len(classes)):
            formal = multiply(BurnsideElement.basis(G, i), BurnsideElement.basis(G, j))
            assert formal == oracle.orbit_decompose(oracle.product(sets[i], sets[j]))


def test_int_arithmetic_uses_the_point():
    V = catalog_group("V4")
    x = BurnsideElement.basis(V, 0)
    assert (x + 2).coeffs == (1, 0, 0, 0, 2)
    assert (2 - x).coeffs == (-1, 0, 0, 0, 2)
    assert (3 * x).coeffs == (3, 0, 0, 0, 0)


def test_mixing_groups_is_an_error():
    with pytest.raises(GroupMismatch):
        BurnsideElement.one(catalog_group("C2")) + BurnsideElement.one(catalog_group("C3"))


@given(group_and(2))
def test_restriction_along_identity_and_ring_map(case):
    G, x, y = case
    e = identity_hom(G)
    assert restrict_along(e, x) == x
    assert restrict_along(e, x * y) == restrict_along(e, x) * restrict_along(e, y)


@pytest.mark.parametrize("source, target", [("C2", "V4"), ("V4", "S3"), ("C4", "D8"), ("Q8", "C2"), ("S3", "C2")])
def test_restriction_matches_concrete_sets(source, target):
    F, G = catalog_group(source), catalog_group(target)
    for phi in homomorphisms(F, G):
        for c in classify_subgroups(G):
            X = oracle.coset_set(G, c.representative)
            expected = oracle.orbit_decompose(oracle.restricted_set(phi, X))
            assert restrict_along(phi, BurnsideElement.basis(G, c.index)) == expected


@pytest.mark.parametrize("name", ["S3", "D8", "A4"])
def test_induction_matches_concrete_sets(name):
    G = catalog_group(name)
    for c in classify_subgroups(G):
        U, inc = subgroup_as_group(c.representative)
        for d in classify_subgroups(U):
            X = oracle.coset_set(U, d.representative)
            expected = oracle.orbit_decompose(oracle.induced_set(inc, X))
            assert induce(inc, BurnsideElement.basis(U, d.index)) == expected


@given(st.sampled_from(["S3", "D8", "A4", "Q8"]), st.data())
def test_frobenius_reciprocity(name, data):
    G = catalog_group(name)
    c = data.draw(st.sampled_from(classify_subgroups(G).classes))
    U, inc = subgroup_as_group(c.representative)
    x, y = data.draw(elements(U)), data.draw(elements(G))
    assert induce(inc, x * restrict_along(inc, y)) == induce(inc, x) * y
