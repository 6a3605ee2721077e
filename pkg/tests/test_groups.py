import itertools

import pytest
from hypothesis import given, strategies as st

from burnside.catalog import ACCEPTANCE_CATALOG, catalog_group
from burnside.errors import NotAGroup, NotAHomomorphism, TooLarge, UnknownName
from burnside.groups import (
    GroupHom,
    Subgroup,
    classify_subgroups,
    conjugacy_classes_of_elements,
    direct_product,
    group_from_cayley,
    group_from_permutations,
    homomorphisms,
    min_generator_count,
    quotient_group,
    subgroup_generated,
)

from conftest import SMALL_GROUPS


def brute_force_subgroups(G):
    """Every subset closed under multiplication, by exhaustive search."""
    found = []
    for bits in range(1, 1 << G.order):
        if not bits >> G.identity & 1:
            continue
        elems = [x for x in range(G.order) if bits >> x & 1]
        if all(bits >> G.mul[a][b] & 1 for a in elems for b in elems):
            found.append(bits)
    return found


def test_cayley_table_of_c2():
    G = group_from_cayley([[0, 1], [1, 0]])
    assert G.order == 2 and G.identity == 0 and G.inv == (0, 1)


def test_non_associative_latin_square_is_rejected_with_witness():
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup) as info:
        group_from_cayley(table)
    a, b, c = info.value.witness
    mul = table
    assert mul[mul[a][b]][c] != mul[a][mul[b][c]]


def test_missing_identity_is_rejected():
    with pytest.raises(NotAGroup):
        group_from_cayley([[0, 0], [1, 1]])


def test_permutation_closure_gives_dihedral_of_order_8():
    G = group_from_permutations(4, [(1, 2, 3, 0), (2, 1, 0, 3)])
    assert G.order == 8
    assert sorted(G.element_orders) == sorted(catalog_group("D8").element_orders)


def test_permutation_cap():
    with pytest.raises(TooLarge):
        group_from_permutations(5, [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], cap=100)


@pytest.mark.parametrize("name, order", [
    ("trivial", 1), ("C7", 7), ("D8", 8), ("D10", 10), ("S4", 24), ("A4", 12),
    ("Q8", 8), ("E(2,3)", 8), ("E{3,2}", 9), ("V4×C2", 8), ("C2*C3", 6), ("C2xC2", 4),
])
def test_catalog_orders(name, order):
    assert catalog_group(name).order == order


def test_catalog_is_memoised():
    assert catalog_group("S3") is catalog_group("S3")


def test_klein_times_c2_has_exponent_two():
    assert max(catalog_group("V4×C2").element_orders) == 2


@pytest.mark.parametrize("name", ["Z5", "D7", "E(4,2)", "", "C0"])
def test_unknown_names(name):
    with pytest.raises(UnknownName):
        catalog_group(name)


def test_catalog_cap():
    with pytest.raises(TooLarge):
        catalog_group("S5", cap=100)


@pytest.mark.parametrize("name, count, classes", [
    ("trivial", 1, 1), ("C2", 2, 2), ("V4", 5, 5), ("S3", 6, 4), ("D8", 10, 8),
    ("Q8", 6, 6), ("A4", 10, 5), ("S4", 30, 11), ("C2×C4", 8, 8), ("D12", 16, 10),
])
def test_subgroup_counts(name, count, classes):
    C = classify_subgroups(catalog_group(name))
    assert len(C.all_subgroups()) == count
    assert len(C) == classes


@pytest.mark.parametrize("name", ["S3", "D8", "Q8", "A4", "C2×C6", "D10", "C3×C3"])
def test_subgroup_enumeration_matches_exhaustive_search(name):
    G = catalog_group(name)
    expected = sorted(brute_force_subgroups(G))
    assert sorted(U.mask for U in classify_subgroups(G).all_subgroups()) == expected


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_min_generators_matches_combinations(name):
    G = catalog_group(name)
    for c in classify_subgroups(G):
        U = c.representative
        k = next(
            k for k in range(U.order + 1)
            if any(subgroup_generated(G, t).mask == U.mask
                   for t in itertools.combinations(U.elements, k))
        )
        assert c.min_generators == k == min_generator_count(G, U)


@pytest.mark.parametrize("name", list(ACCEPTANCE_CATALOG))
def test_classification_invariants(name):
    G = catalog_group(name)
    C = classify_subgroups(G)
    assert C[0].order == 1 and C[len(C) - 1].order == G.order
    keys = [(c.order, c.representative.elements) for c in C]
    assert keys == sorted(keys)
    for c in C:
        assert c.weyl_order * c.order * len(c.conjugates) == G.order
        assert c.representative.elements == min(U.elements for U in c.conjugates)


@pytest.mark.parametrize("name, count", [("D8", 5), ("A4", 4), ("S4", 5), ("Q8", 5), ("V4", 4)])
def test_element_conjugacy_classes(name, count):
    G = catalog_group(name)
    classes = conjugacy_classes_of_elements(G)
    assert len(classes) == count
    assert sorted(x for c in classes for x in c) == list(range(G.order))


@pytest.mark.parametrize("source, target, count", [
    ("C2", "V4", 4), ("V4", "C2", 4), ("S3", "C2", 2), ("C3", "S3", 3), ("C4", "Q8", 8),
    ("trivial", "S3", 1), ("S3", "trivial", 1),
])
def test_homomorphism_counts(source, target, count):
    assert len(list(homomorphisms(catalog_group(source), catalog_group(target)))) == count


def test_bad_homomorphism_is_rejected():
    C2, C3 = catalog_group("C2"), catalog_group("C3")
    with pytest.raises(NotAHomomorphism):
        GroupHom(C2, C3, (0, 1))


def test_dihedral_mod_centre_is_klein():
    D = catalog_group("D8")
    (Z,) = [c.representative for c in classify_subgroups(D) if c.order == 2 and c.representative.is_normal()]
    Q, q = quotient_group(D, Z)
    assert Q.order == 4 and max(Q.element_orders) == 2
    assert q.kernel().elements == Z.elements


def test_product_coordinates():
    P = direct_product(catalog_group("C3"), catalog_group("C2"))
    assert P.group.order == 6
    assert all(P.split(P.pair(g, h)) == (g, h) for g in range(3) for h in range(2))
    assert P.inclusions[0].then(P.projections[0]).images == tuple(range(3))
    assert P.inclusions[1].then(P.projections[0]).images == (0, 0)


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_generated_subgroup_is_closed(name, data):
    G = catalog_group(name)
    seeds = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    U = subgroup_generated(G, seeds)
    assert all(G.mul[a][b] in U for a in U.elements for b in U.elements)
    assert all(s in U for s in seeds)


@given(st.sampled_from(SMALL_GROUPS), st.data())
def test_conjugates_lie_in_the_same_class(name, data):
    G = catalog_group(name)
    C = classify_subgroups(G)
    c = data.draw(st.sampled_from(C.classes))
    g = data.draw(st.integers(0, G.order - 1))
    mask = G.conjugate_mask(c.representative.mask, g)
    assert C.index_of(mask) == c.index
    assert Subgroup.from_mask(G, mask).order == c.order
