"""The Burnside ring A(G) in the basis of transitive G-sets [G/H].

Coefficient vectors are indexed by the canonical subgroup classes of
:func:`burnside.groups.classify_subgroups`.  Products, restrictions and the
like are all computed in mark ("ghost") coordinates, where they are
pointwise, and brought back by a triangular solve against the table of marks.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import GroupMismatch, InternalDefect, NotInImage
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    SubgroupClassification,
    classify_subgroups,
)


@dataclass(frozen=True, eq=False)
class TableOfMarks:
    """``marks[i][j]`` is the number of points of ``G/H_i`` fixed by ``K_j``."""

    group: FiniteGroup
    classes: SubgroupClassification
    marks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.marks)

    def headers(self) -> list[str]:
        return [c.label for c in self.classes]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["G/H \\ K"] + self.headers())
        for label, row in zip(self.headers(), self.marks):
            w.writerow([label] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "classes": [
                {"label": c.label, "order": c.order, "representative": list(c.representative.elements),
                 "min_generators": c.min_generators, "weyl_order": c.weyl_order}
                for c in self.classes
            ],
            "marks": [list(r) for r in self.marks],
        }


@lru_cache(maxsize=512)
def table_of_marks(G: FiniteGroup) -> TableOfMarks:
    classes = classify_subgroups(G)
    n = len(classes)
    marks = [[0] * n for _ in range(n)]
    for j, K in enumerate(classes):
        normalizer = K.weyl_order * K.order
        conj_masks = [U.mask for U in K.conjugates]
        for i in range(j, n):
            H = classes[i].representative
            if H.order % K.order:
                continue
            hm = H.mask
            inside = sum(1 for m in conj_masks if m & hm == m)
            marks[i][j] = inside * normalizer // H.order
    return TableOfMarks(G, classes, tuple(tuple(r) for r in marks))


@dataclass(frozen=True)
class MarkVector:
    group: FiniteGroup
    values: tuple[int, ...]


@dataclass(frozen=True)
class BurnsideElement:
    """An element of A(G): ``coeffs[i]`` is the coefficient of ``[G/H_i]``.

    Supports ``+``, ``-`` and ``*`` (ring product, or scaling by an int).
    Adding an int ``n`` adds ``n`` copies of the one-point set ``[G/G]``.
    """

    group: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != len(classify_subgroups(self.group)):
            raise ValueError("coefficient vector length does not match the number of subgroup classes")

    @classmethod
    def zero(cls, G: FiniteGroup) -> "BurnsideElement":
        return cls(G, (0,) * len(classify_subgroups(G)))

    @classmethod
    def one(cls, G: FiniteGroup) -> "BurnsideElement":
        n = len(classify_subgroups(G))
        return cls(G, (0,) * (n - 1) + (1,))

    @classmethod
    def basis(cls, G: FiniteGroup, i: int) -> "BurnsideElement":
        n = len(classify_subgroups(G))
        return cls(G, tuple(int(k == i) for k in range(n)))

    @classmethod
    def transitive(cls, G: FiniteGroup, H: Subgroup) -> "BurnsideElement":
        """The class ``[G/H]``."""
        return cls.basis(G, classify_subgroups(G).index_of(H))

    def _coerce(self, other) -> "BurnsideElement":
        if isinstance(other, int):
            return other * BurnsideElement.one(self.group)
        if isinstance(other, BurnsideElement):
            if other.group is not self.group:
                raise GroupMismatch("elements live in Burnside rings of different groups")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.group, tuple(other * a for a in self.coeffs))
        if isinstance(other, BurnsideElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {"group": self.group.name, "coeffs": list(self.coeffs)}


def marks_of(x: BurnsideElement) -> MarkVector:
    tom = table_of_marks(x.group).marks
    n = len(tom)
    values = [0] * n
    for i, c in enumerate(x.coeffs):
        if c:
            row = tom[i]
            for j in range(i + 1):
                values[j] += c * row[j]
    return MarkVector(x.group, tuple(values))


def from_marks(v: MarkVector | tuple[FiniteGroup, Sequence[int]]) -> BurnsideElement:
    """The unique element of A(G) with the given marks.

    Raises NotInImage naming the first class (in canonical order) whose
    coefficient comes out fractional.
    """
    if not isinstance(v, MarkVector):
        v = MarkVector(v[0], tuple(v[1]))
    tom = table_of_marks(v.group).marks
    n = len(tom)
    if len(v.values) != n:
        raise ValueError("mark vector length does not match the number of subgroup classes")
    coeffs: list[Fraction] = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        rest = v.values[j] - sum(coeffs[i] * tom[i][j] for i in range(j + 1, n) if tom[i][j])
        coeffs[j] = Fraction(rest, tom[j][j])
    for j, c in enumerate(coeffs):
        if c.denominator != 1:
            label = table_of_marks(v.group).classes[j].label
            raise NotInImage(f"mark vector is not integral at class {label} (coefficient {c})", j)
    return BurnsideElement(v.group, tuple(int(c) for c in coeffs))


def multiply(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    if x.group is not y.group:
        raise GroupMismatch("elements live in Burnside rings of different groups")
    mx, my = marks_of(x).values, marks_of(y).values
    try:
        return from_marks(MarkVector(x.group, tuple(a * b for a, b in zip(mx, my))))
    except NotInImage as exc:  # pragma: no cover - products of marks are always marks
        raise InternalDefect(str(exc)) from exc


def augmentation(x: BurnsideElement) -> int:
    """Virtual cardinality: the mark at the trivial subgroup."""
    tom = table_of_marks(x.group).marks
    return sum(c * tom[i][0] for i, c in enumerate(x.coeffs))


def restrict_along(phi: GroupHom, y: BurnsideElement) -> BurnsideElement:
    """Pull ``y ∈ A(F)`` back along ``φ: G → F``.

    The mark of the restriction at ``U ≤ G`` is the mark of ``y`` at ``φ(U)``.
    """
    if y.group is not phi.target:
        raise GroupMismatch("element does not live over the target of the homomorphism")
    G, F = phi.source, phi.target
    F_classes = classify_subgroups(F)
    my = marks_of(y).values
    values = tuple(
        my[F_classes.index_of(phi.image_mask(c.representative.mask))]
        for c in classify_subgroups(G)
    )
    try:
        return from_marks(MarkVector(G, values))
    except NotInImage as exc:  # pragma: no cover
        raise InternalDefect(f"restriction left the image of the mark map: {exc}") from exc


def induce(iota: GroupHom, x: BurnsideElement) -> BurnsideElement:
    """Induce ``x ∈ A(G)`` along an injective ``ι: G → F``: ``[G/H] ↦ [F/ι(H)]``."""
    if x.group is not iota.source:
        raise GroupMismatch("element does not live over the source of the inclusion")
    if not iota.is_injective():
        raise ValueError("induction needs an injective homomorphism")
    F = iota.target
    F_classes = classify_subgroups(F)
    out = [0] * len(F_classes)
    for c, cls in zip(x.coeffs, classify_subgroups(iota.source)):
        if c:
            out[F_classes.index_of(iota.image_mask(cls.representative.mask))] += c
    return BurnsideElement(F, tuple(out))


def classes_of_order(G: FiniteGroup, order: int) -> list[int]:
    """Indices of the subgroup classes of the given order."""
    return [c.index for c in classify_subgroups(G) if c.order == order]
