"""Brute-force ground truth on explicit finite group actions.

Everything here works point by point on concrete sets, with no use of the
table of marks.  It is slow on purpose; its job is to be obviously right so
the formula-based code elsewhere can be checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .burnside_ring import BurnsideElement
from .errors import InvalidAction, TooLarge
from .groups import (
    DirectProduct,
    FiniteGroup,
    GroupHom,
    Subgroup,
    classify_subgroups,

)

MAX_POINTS = 10**6


@dataclass(frozen=True, eq=False)
class ConcreteGSet:
    """A finite G-set; ``action[g][x]`` is the image of point ``x`` under ``g``."""

    group: FiniteGroup
    size: int
    action: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        G = self.group
        if len(self.action) != G.order or any(len(r) != self.size for r in self.action):
            raise InvalidAction("action table has the wrong shape")
        if any(self.action[G.identity][x] != x for x in range(self.size)):
            raise InvalidAction("identity does not act trivially")
        for g in range(G.order):
            ag = self.action[g]
            for h in range(G.order):
                ah, agh = self.action[h], self.action[G.mul[g][h]]
                for x in range(self.size):
                    if agh[x] != ag[ah[x]]:
                        raise InvalidAction(f"(g h)x != g(h x) for g={g}, h={h}, x={x}")

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.size
        out = []
        for x in range(self.size):
            if seen[x]:
                continue
            orb = {self.action[g][x] for g in range(self.group.order)}
            for y in orb:
                seen[y] = True
            out.append(sorted(orb))
        return out

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in range(self.group.order) if self.action[g][x] == x))

    def to_json(self) -> dict:
        return {"group": self.group.name, "size": self.size, "action": [list(r) for r in self.action]}


def _checked_size(n: int) -> int:
    if n > MAX_POINTS:
        raise TooLarge(f"concrete set of {n} points exceeds {MAX_POINTS}")
    return n


def coset_set(G: FiniteGroup, H: Subgroup) -> ConcreteGSet:
    """Left cosets ``gH`` with ``G`` acting by left multiplication."""
    coset_index: dict[int, int] = {}
    reps = []
    for g in range(G.order):
        if g in coset_index:
            continue
        for h in H.elements:
            coset_index[G.mul[g][h]] = len(reps)
        reps.append(g)
    action = tuple(tuple(coset_index[G.mul[g][r]] for r in reps) for g in range(G.order))
    return ConcreteGSet(G, len(reps), action)


def regular_set(G: FiniteGroup) -> ConcreteGSet:
    return ConcreteGSet(G, G.order, G.mul)


def orbit_decompose(X: ConcreteGSet, check: bool = True) -> BurnsideElement:
    """Count orbits by the conjugacy class of their point stabilisers."""
    if check:
        X.validate()
    classes = classify_subgroups(X.group)
    coeffs = [0] * len(classes)
    for orb in X.orbits():
        coeffs[classes.index_of(X.stabilizer(orb[0]).mask)] += 1
    return BurnsideElement(X.group, tuple(coeffs))


def fixed_points(X: ConcreteGSet, U: Subgroup) -> int:
    return sum(1 for x in range(X.size) if all(X.action[u][x] == x for u in U.elements))


def fixed_points_of_element(X: ConcreteGSet, g: int) -> int:
    return sum(1 for x in range(X.size) if X.action[g][x] == x)


def orbit_count_by_averaging(X: ConcreteGSet) -> int:
    total = sum(fixed_points_of_element(X, g) for g in range(X.group.order))
    q, r = divmod(total, X.group.order)
    assert r == 0
    return q


def product(X: ConcreteGSet, Y: ConcreteGSet) -> ConcreteGSet:
    """Cartesian product with the diagonal action; point ``(x, y)`` is ``x*|Y| + y``."""
    if X.group is not Y.group:
        raise ValueError("sets over different groups")
    m = Y.size
    size = _checked_size(X.size * m)
    action = tuple(
        tuple(ax[x] * m + ay[y] for x in range(X.size) for y in range(m))
        for ax, ay in zip(X.action, Y.action)
    )
    return ConcreteGSet(X.group, size, action)


def disjoint_union(X: ConcreteGSet, Y: ConcreteGSet) -> ConcreteGSet:
    n = X.size
    action = tuple(tuple(ax) + tuple(n + v for v in ay) for ax, ay in zip(X.action, Y.action))
    return ConcreteGSet(X.group, n + Y.size, action)


def restricted_set(phi: GroupHom, X: ConcreteGSet) -> ConcreteGSet:
    """View an F-set as a G-set through ``φ: G → F``."""
    return ConcreteGSet(phi.source, X.size, tuple(X.action[phi.images[g]] for g in range(phi.source.order)))


def _quotient_by_orbits(point_count: int, moves) -> tuple[list[int], list[int]]:
    """Partition points into classes under the given generating moves."""
    cls = [-1] * point_count
    reps = []
    for p in range(point_count):
        if cls[p] >= 0:
            continue
        k = len(reps)
        reps.append(p)
        stack = [p]
        cls[p] = k
        while stack:
            q = stack.pop()
            for move in moves:
                r = move(q)
                if cls[r] < 0:
                    cls[r] = k
                    stack.append(r)
    return cls, reps


def induced_set(iota: GroupHom, X: ConcreteGSet) -> ConcreteGSet:
    """``F ×_G X`` for an injective ``ι: G → F``: pairs ``(f, x)`` modulo ``(f ι(g), x) ~ (f, g x)``."""
    G, F = iota.source, iota.target
    n = X.size
    size = _checked_size(F.order * n)

    def move(g):
        ig_inv = iota.images[G.inv[g]]
        ag = X.action[g]
        return lambda p: F.mul[p // n][ig_inv] * n + ag[p % n]

    cls, reps = _quotient_by_orbits(size, [move(g) for g in range(G.order)])
    action = tuple(
        tuple(cls[F.mul[f][p // n] * n + p % n] for p in reps) for f in range(F.order)
    )
    return ConcreteGSet(F, len(reps), action)


# ---------------------------------------------------------------------------
# bisets, realised as sets over product groups with (g, h)s = g s h^-1


def realize_biset(P: DirectProduct, U: Subgroup) -> ConcreteGSet:
    """The transitive ``(G×H)``-set ``(G×H)/U``."""
    if U.parent is not P.group:
        raise ValueError("subgroup does not live in the product group")
    return coset_set(P.group, U)


def h_quotient(X: ConcreteGSet, P: DirectProduct) -> ConcreteGSet:
    """The G-set ``X/H`` of orbits of the right factor ``{e} × H``."""
    G, H = P.left, P.right
    right = [X.action[P.pair(G.identity, h)] for h in range(H.order)]
    cls, reps = _quotient_by_orbits(X.size, [r.__getitem__ for r in right])
    action = tuple(
        tuple(cls[X.action[P.pair(g, H.identity)][p]] for p in reps) for g in range(G.order)
    )
    return ConcreteGSet(G, len(reps), action)


def twisted_product(
    S: ConcreteGSet, P_gh: DirectProduct, T: ConcreteGSet, P_hi: DirectProduct, P_gi: DirectProduct
) -> ConcreteGSet:
    """``S ×_H T`` as a ``(G×I)``-set.

    Points of ``S × T`` are identified along ``(s·h, t) ~ (s, h·t)``; in
    product-group terms the generating moves are ``(s, t) ↦ ((1,h)s, (h,1)t)``.
    """
    G, H, I = P_gh.left, P_gh.right, P_hi.right
    if not (P_hi.left.same_table(H) and P_gi.left is G and P_gi.right is I):
        raise ValueError("product groups do not line up")
    m = T.size
    size = _checked_size(S.size * m)

    def move(h):
        a_s = S.action[P_gh.pair(G.identity, h)]
        a_t = T.action[P_hi.pair(h, I.identity)]
        return lambda p: a_s[p // m] * m + a_t[p % m]

    cls, reps = _quotient_by_orbits(size, [move(h) for h in range(H.order)])
    action = []
    for x in range(P_gi.group.order):
        g, i = P_gi.split(x)
        a_s = S.action[P_gh.pair(g, H.identity)]
        a_t = T.action[P_hi.pair(H.identity, i)]
        action.append(tuple(cls[a_s[p // m] * m + a_t[p % m]] for p in reps))
    return ConcreteGSet(P_gi.group, len(reps), tuple(action))


def is_right_free(X: ConcreteGSet, P: DirectProduct) -> bool:
    """Whether ``{e} × H`` acts freely on ``X``."""
    G, H = P.left, P.right
    for h in range(H.order):
        if h == H.identity:
            continue
        a = X.action[P.pair(G.identity, h)]
        if any(a[x] == x for x in range(X.size)):
            return False
    return True





__all__ = [
    "ConcreteGSet", "coset_set", "regular_set", "orbit_decompose", "fixed_points",
    "fixed_points_of_element", "orbit_count_by_averaging", "product", "disjoint_union",
    "restricted_set", "induced_set", "realize_biset", "h_quotient", "twisted_product",
    "is_right_free",
]
