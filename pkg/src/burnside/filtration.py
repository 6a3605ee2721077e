"""The filtration J_n(G) of the Burnside ring by generator count, and related characters.

``J_n(G)`` is the set of virtual G-sets whose marks vanish at every subgroup
generated by at most ``n`` elements.  Inside the coefficient space of A(G)
it is the integer left kernel of the corresponding columns of the table of
marks, which is how it is computed here.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .burnside_ring import BurnsideElement, marks_of, table_of_marks
from .groups import (
    FiniteGroup,
    classify_subgroups,
    conjugacy_classes_of_elements,
    mask_of,
    subgroup_generated,
)
from .lattice import IntegerLattice, left_kernel
from .oracle import coset_set, fixed_points_of_element


def level_columns(G: FiniteGroup, n: int) -> list[int]:
    """Subgroup classes generated by at most ``n`` elements."""
    return [c.index for c in classify_subgroups(G) if c.min_generators <= n]


@lru_cache(maxsize=1024)
def jn_ideal(G: FiniteGroup, n: int) -> IntegerLattice:
    if n < 0:
        raise ValueError("level must be non-negative")
    tom = table_of_marks(G).marks
    cols = level_columns(G, n)
    return left_kernel([[row[j] for j in cols] for row in tom])


def jn_membership(x: BurnsideElement, n: int) -> bool:
    values = marks_of(x).values
    return all(values[j] == 0 for j in level_columns(x.group, n))


def max_nontrivial_level(G: FiniteGroup) -> int:
    """Least ``n`` with ``J_n(G) = 0``."""
    top = max(c.min_generators for c in classify_subgroups(G))
    for n in range(top + 1):
        if jn_ideal(G, n).is_zero():
            return n
    raise AssertionError("J_n does not vanish at the top level")  # pragma: no cover


def augmentation_kernel(G: FiniteGroup) -> IntegerLattice:
    tom = table_of_marks(G).marks
    return left_kernel([[row[0]] for row in tom])


# ---------------------------------------------------------------------------
# linearization


@dataclass(frozen=True)
class CharacterVector:
    """Class function on the element classes of :func:`conjugacy_classes_of_elements`."""

    group: FiniteGroup
    values: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.values)

    @property
    def degree(self) -> int:
        return self.values[0]


def permutation_character(x: BurnsideElement) -> CharacterVector:
    """Value at ``g`` is the mark of ``x`` at the cyclic subgroup ``<g>``."""
    G = x.group
    classes = classify_subgroups(G)
    m = marks_of(x).values
    values = []
    for cls in conjugacy_classes_of_elements(G):
        values.append(m[classes.index_of(subgroup_generated(G, cls[:1]).mask)])
    return CharacterVector(G, tuple(values))


@lru_cache(maxsize=256)
def permutation_character_matrix(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Characters of the transitive sets, counted point by point on cosets.

    Row ``i`` is the character of ``G/H_i``; this deliberately avoids the
    table of marks.
    """
    reps = [cls[0] for cls in conjugacy_classes_of_elements(G)]
    rows = []
    for c in classify_subgroups(G):
        X = coset_set(G, c.representative)
        rows.append(tuple(fixed_points_of_element(X, g) for g in reps))
    return tuple(rows)


@lru_cache(maxsize=256)
def linearization_kernel(G: FiniteGroup) -> IntegerLattice:
    return left_kernel(permutation_character_matrix(G))


# ---------------------------------------------------------------------------
# generalized characters


@dataclass(frozen=True)
class GeneralizedCharacter:
    group: FiniteGroup
    prime: int
    level: int
    tuples: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.values)

    def value_at(self, tup) -> int:
        return self.values[self.tuples.index(canonical_tuple(self.group, tuple(tup)))]

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "prime": self.prime,
            "level": self.level,
            "values": {",".join(map(str, t)): v for t, v in zip(self.tuples, self.values)},
        }


def canonical_tuple(G: FiniteGroup, tup: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least simultaneous conjugate."""
    return min(tuple(G.conj[g][x] for x in tup) for g in range(G.order))


@lru_cache(maxsize=256)
def commuting_tuples(G: FiniteGroup, p: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Pairwise commuting n-tuples of p-power-order elements, one per conjugacy class."""
    orders = G.element_orders
    p_elems = [x for x in range(G.order) if _is_power_of(orders[x], p)]
    reps = set()
    for tup in itertools.product(p_elems, repeat=n):
        if all(G.commute(a, b) for a, b in itertools.combinations(tup, 2)):
            reps.add(canonical_tuple(G, tup))
    return tuple(sorted(reps))


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def generalized_character(x: BurnsideElement, p: int, n: int) -> GeneralizedCharacter:
    """Fixed-point counts of ``x`` under the subgroups generated by commuting p-tuples."""
    if n < 1:
        raise ValueError("level must be positive")
    G = x.group
    classes = classify_subgroups(G)
    m = marks_of(x).values
    tuples = commuting_tuples(G, p, n)
    values = tuple(
        m[classes.index_of(_generated_mask(G, t))] for t in tuples
    )
    return GeneralizedCharacter(G, p, n, tuples, values)


def _generated_mask(G: FiniteGroup, t) -> int:
    return mask_of(subgroup_generated(G, t).elements)
