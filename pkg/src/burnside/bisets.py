"""Morphism groups A(G, H) of the Burnside category.

A (G, H)-biset is a (G×H)-set via ``(g, h)s = g s h^-1``.  A(G, H) is free on
the classes of transitive H-free bisets ``(G×H)/U``, i.e. on the conjugacy
classes of subgroups ``U ≤ G×H`` meeting ``{e}×H`` trivially.  Each such ``U``
is the graph of a homomorphism from ``p1(U) ≤ G`` to ``H``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import oracle
from .burnside_ring import BurnsideElement
from .errors import GroupMismatch, InternalDefect, NotInjective
from .groups import (
    DirectProduct,
    FiniteGroup,
    GroupHom,
    Subgroup,
    SubgroupClass,
    classify_subgroups,
    direct_product,
    elements_of,
    mask_of,
)
from .filtration import jn_ideal, level_columns
from .burnside_ring import table_of_marks
from .lattice import IntegerLattice, left_kernel, preimage


@dataclass(frozen=True, eq=False)
class BisetBasis:
    source: FiniteGroup
    target: FiniteGroup
    product: DirectProduct
    classes: tuple[SubgroupClass, ...]
    position: dict  # class index in G×H -> basis position

    def __len__(self) -> int:
        return len(self.classes)

    def index_of(self, U) -> int:
        mask = U.mask if isinstance(U, Subgroup) else U
        full = classify_subgroups(self.product.group).index_of(mask)
        try:
            return self.position[full]
        except KeyError:
            raise ValueError("subgroup is not H-free; its class is not part of A(G, H)") from None

    def graph(self, i: int) -> dict[int, int]:
        """The homomorphism ``p1(U) → H`` whose graph is basis class ``i``."""
        P = self.product
        return dict(P.split(x) for x in self.classes[i].representative.elements)

    def label(self, i: int) -> str:
        G, H = self.source, self.target
        phi = self.graph(i)
        K = sorted(phi)
        maps = ", ".join(f"{G.label(g)}↦{H.label(phi[g])}" for g in K)
        return f"(K={{{', '.join(G.label(g) for g in K)}}} ≤ G, φ: K→H {{{maps}}})"


def is_right_free(P: DirectProduct, mask: int) -> bool:
    e = P.left.identity
    return all(P.split(x)[0] != e or P.split(x)[1] == P.right.identity for x in elements_of(mask))


@lru_cache(maxsize=512)
def biset_basis(G: FiniteGroup, H: FiniteGroup, cap=None) -> BisetBasis:
    P = direct_product(G, H, cap)
    classes = classify_subgroups(P.group, cap)
    kept = [c for c in classes if is_right_free(P, c.representative.mask)]
    return BisetBasis(G, H, P, tuple(kept), {c.index: k for k, c in enumerate(kept)})


@dataclass(frozen=True)
class BisetElement:
    """An element of A(G, H) as coefficients over :func:`biset_basis`."""

    source: FiniteGroup
    target: FiniteGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != len(self.basis):
            raise ValueError("coefficient vector length does not match the biset basis")

    @property
    def basis(self) -> BisetBasis:
        return biset_basis(self.source, self.target)

    @classmethod
    def zero(cls, G, H) -> "BisetElement":
        return cls(G, H, (0,) * len(biset_basis(G, H)))

    @classmethod
    def basis_element(cls, G, H, i: int) -> "BisetElement":
        n = len(biset_basis(G, H))
        return cls(G, H, tuple(int(k == i) for k in range(n)))

    @classmethod
    def transitive(cls, G, H, U: Subgroup) -> "BisetElement":
        """The class of ``(G×H)/U``; ``U`` must be H-free."""
        return cls.basis_element(G, H, biset_basis(G, H).index_of(U))

    def _check(self, other):
        if not isinstance(other, BisetElement):
            return NotImplemented
        if other.source is not self.source or other.target is not self.target:
            raise GroupMismatch("bisets between different pairs of groups")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return BisetElement(self.source, self.target, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BisetElement(self.source, self.target, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return BisetElement(self.source, self.target, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        basis = self.basis
        return {
            "source": self.source.name,
            "target": self.target.name,
            "coeffs": list(self.coeffs),
            "basis": [basis.label(i) for i in range(len(basis))],
        }


# ---------------------------------------------------------------------------
# generating morphisms


def _graph_element(G, H, pairs) -> BisetElement:
    P = direct_product(G, H)
    U = Subgroup(P.group, tuple(sorted(P.pair(g, h) for g, h in pairs)))
    return BisetElement.transitive(G, H, U)


def hom_biset(phi: GroupHom) -> BisetElement:
    """``H`` as a (G, H)-biset with ``G`` acting through ``φ``; stabiliser ``{(g, φ(g))}``."""
    G = phi.source
    return _graph_element(G, phi.target, ((g, phi.images[g]) for g in range(G.order)))


def transfer_biset(theta: GroupHom) -> BisetElement:
    """``G`` as a (G, H)-biset with ``H`` acting through an injective ``θ: H → G``."""
    if not theta.is_injective():
        raise NotInjective("transfer needs an injective homomorphism")
    H = theta.source
    return _graph_element(theta.target, H, ((theta.images[h], h) for h in range(H.order)))


def identity_biset(G: FiniteGroup) -> BisetElement:
    return _graph_element(G, G, ((g, g) for g in range(G.order)))


# ---------------------------------------------------------------------------
# quotient to A(G)


@lru_cache(maxsize=512)
def quotient_matrix(G: FiniteGroup, H: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Row ``i``: the A(G)-coefficients of ``S_i/H``, which is ``[G/p1(U_i)]``."""
    basis = biset_basis(G, H)
    G_classes = classify_subgroups(G)
    n = len(G_classes)
    rows = []
    for i in range(len(basis)):
        k = G_classes.index_of(mask_of(basis.graph(i)))
        rows.append(tuple(int(j == k) for j in range(n)))
    return tuple(rows)


def quotient_to_burnside(S: BisetElement) -> BurnsideElement:
    Q = quotient_matrix(S.source, S.target)
    n = len(Q[0])
    out = [0] * n
    for c, row in zip(S.coeffs, Q):
        if c:
            for j in range(n):
                out[j] += c * row[j]
    return BurnsideElement(S.source, tuple(out))


# ---------------------------------------------------------------------------
# composition


def _middle(S: BisetElement, T: BisetElement) -> None:
    if not S.target.same_table(T.source):
        raise GroupMismatch(
            f"cannot compose: middle groups {S.target.name} and {T.source.name} differ")


@lru_cache(maxsize=None)
def _compose_basis_sets(G, H, I, i, j) -> tuple[int, ...]:
    bs, bt = biset_basis(G, H), biset_basis(H, I)
    P_gi = direct_product(G, I)
    S = oracle.realize_biset(bs.product, bs.classes[i].representative)
    T = oracle.realize_biset(bt.product, bt.classes[j].representative)
    X = oracle.twisted_product(S, bs.product, T, bt.product, P_gi)
    full = oracle.orbit_decompose(X, check=False).coeffs
    return _restrict_to_free(G, I, full)


def _restrict_to_free(G, I, full) -> tuple[int, ...]:
    basis = biset_basis(G, I)
    out = [0] * len(basis)
    for k, c in enumerate(full):
        if c:
            if k not in basis.position:
                raise InternalDefect("composite of free bisets has a non-free orbit")
            out[basis.position[k]] += c
    return tuple(out)


@lru_cache(maxsize=None)
def _compose_basis_mackey(G, H, I, i, j) -> tuple[int, ...]:
    bs, bt = biset_basis(G, H), biset_basis(H, I)
    P_gh, P_hi, P_gi = bs.product, bt.product, direct_product(G, I)
    U = [P_gh.split(x) for x in bs.classes[i].representative.elements]
    V = [P_hi.split(x) for x in bt.classes[j].representative.elements]
    p2U = sorted({h for _, h in U})
    p1V = sorted({h for h, _ in V})
    # double cosets p2(U) t p1(V)
    seen = set()
    reps = []
    for t in range(H.order):
        if t in seen:
            continue
        reps.append(t)
        for a in p2U:
            at = H.mul[a][t]
            for b in p1V:
                seen.add(H.mul[at][b])
    g_over = {}
    for g, h in U:
        g_over.setdefault(h, []).append(g)
    classes = classify_subgroups(P_gi.group)
    full = [0] * len(classes)
    for t in reps:
        c = H.conj[t]
        W = 0
        for h, k in V:
            for g in g_over.get(c[h], ()):
                W |= 1 << P_gi.pair(g, k)
        full[classes.index_of(W)] += 1
    return _restrict_to_free(G, I, full)


def compose(S: BisetElement, T: BisetElement, method: str = "sets") -> BisetElement:
    """``S ×_H T`` for ``S ∈ A(G, H)``, ``T ∈ A(H, I)``.

    ``method="sets"`` realises each pair of basis bisets concretely and
    decomposes the quotient into orbits; ``method="mackey"`` uses the
    double-coset formula.  Both give the same answer.
    """
    _middle(S, T)
    G, H, I = S.source, S.target, T.target
    basis_fn = {"sets": _compose_basis_sets, "mackey": _compose_basis_mackey}[method]
    out = [0] * len(biset_basis(G, I))
    for i, a in enumerate(S.coeffs):
        if not a:
            continue
        for j, b in enumerate(T.coeffs):
            if not b:
                continue
            for k, c in enumerate(basis_fn(G, H, I, i, j)):
                if c:
                    out[k] += a * b * c
    return BisetElement(G, I, tuple(out))


# ---------------------------------------------------------------------------
# bivariant filtration


@lru_cache(maxsize=512)
def jn_bivariant(G: FiniteGroup, H: FiniteGroup, n: int) -> IntegerLattice:
    """``J_n(G, H)``: the bisets whose H-quotient lies in ``J_n(G)``.

    Computed both as the preimage of ``J_n(G)`` and as the kernel of the
    marks of ``S/H``; the two must agree.
    """
    Q = quotient_matrix(G, H)
    via_preimage = preimage(Q, jn_ideal(G, n))
    tom = table_of_marks(G).marks
    cols = level_columns(G, n)
    # marks of S_i/H at the level-n classes
    direct = [
        [sum(q * tom[k][j] for k, q in enumerate(row) if q) for j in cols] for row in Q
    ]
    via_marks = left_kernel(direct)
    if via_preimage != via_marks:
        raise InternalDefect("bivariant J_n: preimage and direct mark kernel disagree")
    return via_marks


def jn_bivariant_membership(S: BisetElement, n: int) -> bool:
    return S.coeffs in jn_bivariant(S.source, S.target, n)


def random_lattice_element(L: IntegerLattice, rng: random.Random, bound: int = 3) -> tuple[int, ...]:
    out = [0] * L.ambient_rank
    for b in L.basis:
        k = rng.randint(-bound, bound)
        for j, v in enumerate(b):
            out[j] += k * v
    return tuple(out)
