"""Finite groups stored as full Cayley tables.

Elements are the integers ``0 .. order-1``.  Subsets of a group are handled
internally as Python-int bitmasks (bit ``x`` set iff element ``x`` belongs to
the subset), which keeps subset and membership tests cheap during subgroup
enumeration.
"""
from __future__ import annotations

import itertools
import os
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import NotAGroup, NotAHomomorphism, TooLarge

DEFAULT_CAP = 1024
EXHAUSTIVE_AXIOM_LIMIT = 64
RANDOM_AXIOM_SAMPLES = 10_000


def order_cap(cap: int | None = None) -> int:
    """Resolve the order cap: explicit argument, then ``BURNSIDE_CAP``, then the default."""
    if cap is not None:
        return cap
    env = os.environ.get("BURNSIDE_CAP")
    return int(env) if env else DEFAULT_CAP


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    Equality is identity; use :meth:`same_table` to compare structure.
    """

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    element_labels: tuple[str, ...] | None = None
    name: str | None = field(default=None)

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self) -> int:
        return len(self.mul)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def same_table(self, other: "FiniteGroup") -> bool:
        return self is other or self.mul == other.mul

    def label(self, x: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[x]
        return str(x)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.order):
            k, y = 1, x
            while y != self.identity:
                y = self.mul[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def conj(self) -> tuple[tuple[int, ...], ...]:
        """``conj[g][x] = g x g^-1``."""
        mul, inv = self.mul, self.inv
        return tuple(
            tuple(mul[mul[g][x]][inv[g]] for x in range(self.order)) for g in range(self.order)
        )

    @cached_property
    def cyclic_masks(self) -> dict[int, int]:
        """Distinct cyclic subgroups, as ``{mask: a generating element}``."""
        seen: dict[int, int] = {}
        for x in range(self.order):
            m, y = 1 << self.identity, x
            while y != self.identity:
                m |= 1 << y
                y = self.mul[y][x]
            seen.setdefault(m, x)
        return seen

    def power(self, x: int, k: int) -> int:
        y = self.identity
        for _ in range(k % self.element_orders[x]):
            y = self.mul[y][x]
        return y

    def commute(self, x: int, y: int) -> bool:
        return self.mul[x][y] == self.mul[y][x]

    def conjugate_mask(self, mask: int, g: int) -> int:
        c = self.conj[g]
        return mask_of(c[x] for x in elements_of(mask))


def _check_axioms(table: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    for row in table:
        if len(row) != n:
            raise NotAGroup("table is not square")
        for v in row:
            if not (isinstance(v, int) and 0 <= v < n):
                raise NotAGroup(f"entry {v!r} out of range 0..{n - 1}")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity")
    inv = []
    for x in range(n):
        row = table[x]
        try:
            y = list(row).index(identity)
        except ValueError:
            raise NotAGroup(f"element {x} has no inverse", witness=(x,)) from None
        if table[y][x] != identity:
            raise NotAGroup(f"element {x} has no two-sided inverse", witness=(x, y))
        inv.append(y)

    def assoc(a, b, c):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAGroup(f"associativity fails on ({a}, {b}, {c})", witness=(a, b, c))

    if n <= EXHAUSTIVE_AXIOM_LIMIT:
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        assoc(a, b, c)
    else:
        rng = random.Random(0)
        for _ in range(RANDOM_AXIOM_SAMPLES):
            assoc(rng.randrange(n), rng.randrange(n), rng.randrange(n))
    return identity, tuple(inv)


def group_from_cayley(table, name=None, labels=None, cap=None) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a group.

    Raises NotAGroup with the witnessing elements when an axiom fails.
    """
    table = tuple(tuple(int(v) for v in row) for row in table)
    if len(table) > order_cap(cap):
        raise TooLarge(f"order {len(table)} exceeds cap {order_cap(cap)}")
    identity, inv = _check_axioms(table)
    return FiniteGroup(table, identity, inv, tuple(labels) if labels else None, name)


def cycle_notation(perm: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def group_from_permutations(degree: int, generators, name=None, cap=None) -> FiniteGroup:
    """Enumerate the permutation group generated by ``generators`` breadth-first.

    Element 0 is the identity.  The product ``a*b`` is the composite "apply b,
    then a".
    """
    cap = order_cap(cap)
    gens = [tuple(int(v) for v in g) for g in generators]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError(f"{list(g)} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    perms = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(g[p[i]] for i in range(degree))
            if q not in index:
                if len(perms) >= cap:
                    raise TooLarge(f"permutation group exceeds cap {cap}")
                index[q] = len(perms)
                perms.append(q)
                queue.append(q)
    return _group_from_perm_list(perms, index, name)


def _group_from_perm_list(perms, index, name) -> FiniteGroup:
    n = len(perms)
    degree = len(perms[0])
    mul = tuple(
        tuple(index[tuple(a[b[i]] for i in range(degree))] for b in perms) for a in perms
    )
    inv = []
    for p in perms:
        q = [0] * degree
        for i, v in enumerate(p):
            q[v] = i
        inv.append(index[tuple(q)])
    ident = index[tuple(range(degree))]
    return FiniteGroup(mul, ident, tuple(inv), tuple(cycle_notation(p) for p in perms), name)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]

    @classmethod
    def from_mask(cls, parent: FiniteGroup, mask: int) -> "Subgroup":
        return cls(parent, elements_of(mask))

    @cached_property
    def mask(self) -> int:
        return mask_of(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conjugate_mask(self.mask, g) == self.mask for g in range(G.order))

    def normalizer_order(self) -> int:
        G = self.parent
        return sum(1 for g in range(G.order) if G.conjugate_mask(self.mask, g) == self.mask)


def extend_mask(G: FiniteGroup, sub_mask: int, sub_elems: Sequence[int], x: int) -> int:
    """Mask of the subgroup generated by a subgroup and one further element.

    Grows the result one left coset of the subgroup at a time.
    """
    if sub_mask >> x & 1:
        return sub_mask
    mul = G.mul
    result = sub_mask
    reps = [G.identity]
    i = 0
    while i < len(reps):
        y = reps[i]
        i += 1
        row_y = mul[y]
        for s in sub_elems:
            z = mul[row_y[s]][x]
            if not result >> z & 1:
                row_z = mul[z]
                for t in sub_elems:
                    result |= 1 << row_z[t]
                reps.append(z)
    return result


def subgroup_generated(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    mask = 1 << G.identity
    elems: tuple[int, ...] = (G.identity,)
    for x in seeds:
        if not mask >> x & 1:
            mask = extend_mask(G, mask, elems, x)
            elems = elements_of(mask)
    return Subgroup(G, elems)


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if not self.check:
            return
        G, H, f = self.source, self.target, self.images
        if len(f) != G.order:
            raise NotAHomomorphism("image table has the wrong length")
        if f[G.identity] != H.identity:
            raise NotAHomomorphism("identity is not mapped to identity")
        for x in range(G.order):
            for y in range(G.order):
                if f[G.mul[x][y]] != H.mul[f[x]][f[y]]:
                    raise NotAHomomorphism(f"f({x}*{y}) != f({x})*f({y})")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.images[x] for x in elements_of(mask))

    def image(self, U: Subgroup) -> Subgroup:
        return Subgroup.from_mask(self.target, self.image_mask(U.mask))

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def kernel(self) -> Subgroup:
        e = self.target.identity
        return Subgroup(self.source, tuple(x for x, y in enumerate(self.images) if y == e))

    def then(self, other: "GroupHom") -> "GroupHom":
        """Composite ``other ∘ self``."""
        return GroupHom(self.source, other.target, tuple(other.images[y] for y in self.images),
                        check=False)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)), check=False)


@dataclass(frozen=True, eq=False)
class DirectProduct:
    """``G × H`` with element ``(g, h)`` stored at index ``g*|H| + h``."""

    group: FiniteGroup
    left: FiniteGroup
    right: FiniteGroup
    inclusions: tuple[GroupHom, GroupHom]
    projections: tuple[GroupHom, GroupHom]

    def pair(self, g: int, h: int) -> int:
        return g * self.right.order + h

    def split(self, x: int) -> tuple[int, int]:
        return divmod(x, self.right.order)


@lru_cache(maxsize=256)
def direct_product(G: FiniteGroup, H: FiniteGroup, cap=None) -> DirectProduct:
    n, m = G.order, H.order
    if n * m > order_cap(cap):
        raise TooLarge(f"|G×H| = {n * m} exceeds cap {order_cap(cap)}")
    mul = tuple(
        tuple(G.mul[a][c] * m + H.mul[b][d] for c in range(n) for d in range(m))
        for a in range(n)
        for b in range(m)
    )
    inv = tuple(G.inv[a] * m + H.inv[b] for a in range(n) for b in range(m))
    labels = None
    if G.element_labels or H.element_labels:
        labels = tuple(f"({G.label(a)},{H.label(b)})" for a in range(n) for b in range(m))
    name = f"{G.name or '?'}×{H.name or '?'}"
    P = FiniteGroup(mul, G.identity * m + H.identity, inv, labels, name)
    inc = (
        GroupHom(G, P, tuple(a * m + H.identity for a in range(n)), check=False),
        GroupHom(H, P, tuple(G.identity * m + b for b in range(m)), check=False),
    )
    proj = (
        GroupHom(P, G, tuple(x // m for x in range(n * m)), check=False),
        GroupHom(P, H, tuple(x % m for x in range(n * m)), check=False),
    )
    return DirectProduct(P, G, H, inc, proj)


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True)
class SubgroupClass:
    index: int
    representative: Subgroup
    conjugates: tuple[Subgroup, ...]
    min_generators: int
    weyl_order: int

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def label(self) -> str:
        return f"H(order={self.order},idx={self.index})"


@dataclass(frozen=True, eq=False)
class SubgroupClassification:
    group: FiniteGroup
    classes: tuple[SubgroupClass, ...]
    _lookup: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[SubgroupClass]:
        return iter(self.classes)

    def __getitem__(self, i: int) -> SubgroupClass:
        return self.classes[i]

    def index_of(self, sub) -> int:
        """Class index of a Subgroup or subgroup mask."""
        mask = sub.mask if isinstance(sub, Subgroup) else sub
        return self._lookup[mask]

    def all_subgroups(self) -> list[Subgroup]:
        return [U for c in self.classes for U in c.conjugates]

    def trivial_index(self) -> int:
        return 0

    def full_index(self) -> int:
        return len(self.classes) - 1


def _conjugate_masks(G: FiniteGroup, elems: Sequence[int]) -> set[int]:
    out = set()
    for c in G.conj:
        m = 0
        for x in elems:
            m |= 1 << c[x]
        out.add(m)
    return out


def _enumerate_subgroup_classes(G: FiniteGroup) -> list[tuple[set[int], int]]:
    """Conjugacy classes of subgroups (as mask sets) with their generator counts.

    Layer k holds the classes first reached by adjoining one element to a
    representative of a layer k-1 class, so the layer index is the minimal
    number of generators.  Extending one representative per class suffices
    because conjugation commutes with generation.
    """
    trivial = 1 << G.identity
    known = {trivial}
    found = [({trivial}, 0)]
    cyclic = sorted(G.cyclic_masks.items())
    frontier = [(trivial, (G.identity,))]
    k = 0
    while frontier:
        k += 1
        nxt = []
        for S, S_elems in frontier:
            for C, x in cyclic:
                if C & S == C:
                    continue
                T = extend_mask(G, S, S_elems, x)
                if T not in known:
                    T_elems = elements_of(T)
                    conj = _conjugate_masks(G, T_elems)
                    known |= conj
                    found.append((conj, k))
                    nxt.append((T, T_elems))
        frontier = nxt
    return found


@lru_cache(maxsize=512)
def classify_subgroups(G: FiniteGroup, cap=None) -> SubgroupClassification:
    """Conjugacy classes of subgroups of ``G`` in canonical order.

    Classes are sorted by subgroup order, ties broken by the lexicographically
    least element tuple among the conjugates; that conjugate is the
    representative.
    """
    if G.order > order_cap(cap):
        raise TooLarge(f"order {G.order} exceeds cap {order_cap(cap)}")
    raw = []
    for conj_masks, k in _enumerate_subgroup_classes(G):
        conjugates = sorted(elements_of(m) for m in conj_masks)
        size = len(conjugates[0])
        weyl = G.order // len(conjugates) // size
        raw.append((size, conjugates, k, weyl))
    raw.sort(key=lambda r: (r[0], r[1][0]))
    classes = []
    lookup = {}
    for i, (_, conjugates, k, weyl) in enumerate(raw):
        subs = tuple(Subgroup(G, e) for e in conjugates)
        for U in subs:
            lookup[U.mask] = i
        classes.append(SubgroupClass(i, subs[0], subs, k, weyl))
    return SubgroupClassification(G, tuple(classes), lookup)


def min_generator_count(G: FiniteGroup, U: Subgroup) -> int:
    """Smallest number of elements of ``U`` that generate ``U``.

    Searches generating tuples of increasing length, pruning tuples that
    generate the same subgroup.
    """
    target = U.mask
    reached = {1 << G.identity}
    if target in reached:
        return 0
    cyclic = sorted({m: x for m, x in G.cyclic_masks.items() if m & target == m}.items())
    frontier = list(reached)
    k = 0
    while frontier:
        k += 1
        nxt = []
        for S in frontier:
            S_elems = elements_of(S)
            for C, x in cyclic:
                if C & S == C:
                    continue
                T = extend_mask(G, S, S_elems, x)
                if T == target:
                    return k
                if T not in reached:
                    reached.add(T)
                    nxt.append(T)
        frontier = nxt
    raise AssertionError("subgroup not reached")  # pragma: no cover


@lru_cache(maxsize=256)
def conjugacy_classes_of_elements(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Element conjugacy classes, ordered by (element order, least member)."""
    seen = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = sorted({G.conj[g][x] for g in range(G.order)})
        seen.update(cls)
        classes.append(tuple(cls))
    classes.sort(key=lambda c: (G.element_orders[c[0]], c[0]))
    return tuple(classes)


@lru_cache(maxsize=1024)
def subgroup_as_group(U: Subgroup, name=None) -> tuple[FiniteGroup, GroupHom]:
    """Re-index ``U`` as a group in its own right, with its inclusion into the parent.

    Memoised, so the same subgroup always yields the same group object.
    """
    G = U.parent
    pos = {x: i for i, x in enumerate(U.elements)}
    mul = tuple(tuple(pos[G.mul[a][b]] for b in U.elements) for a in U.elements)
    inv = tuple(pos[G.inv[a]] for a in U.elements)
    labels = tuple(G.label(a) for a in U.elements) if G.element_labels else None
    H = FiniteGroup(mul, pos[G.identity], inv, labels, name)
    return H, GroupHom(H, G, U.elements, check=False)


@lru_cache(maxsize=256)
def quotient_group(G: FiniteGroup, N: Subgroup, name=None) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` for a normal subgroup ``N``, with the projection."""
    if not N.is_normal():
        raise ValueError("subgroup is not normal")
    coset_of = {}
    reps = []
    for g in range(G.order):
        if g in coset_of:
            continue
        i = len(reps)
        reps.append(g)
        for n in N.elements:
            coset_of[G.mul[g][n]] = i
    mul = tuple(tuple(coset_of[G.mul[a][b]] for b in reps) for a in reps)
    inv = tuple(coset_of[G.inv[a]] for a in reps)
    Q = FiniteGroup(mul, coset_of[G.identity], inv, None, name)
    return Q, GroupHom(G, Q, tuple(coset_of[g] for g in range(G.order)), check=False)


def generating_tuple(G: FiniteGroup) -> tuple[int, ...]:
    """A minimal generating tuple of ``G``."""
    k = min_generator_count(G, Subgroup(G, tuple(range(G.order))))
    if k == 0:
        return ()
    for tup in itertools.combinations(range(G.order), k):
        if subgroup_generated(G, tup).order == G.order:
            return tup
    raise AssertionError("no generating tuple")  # pragma: no cover


def homomorphisms(G: FiniteGroup, H: FiniteGroup) -> Iterator[GroupHom]:
    """All homomorphisms ``G → H``, by extending images of a generating tuple."""
    gens = generating_tuple(G)
    candidates = [
        [y for y in range(H.order) if G.element_orders[x] % H.element_orders[y] == 0]
        for x in gens
    ]
    for imgs in itertools.product(*candidates):
        f = _extend(G, H, gens, imgs)
        if f is not None:
            yield GroupHom(G, H, f, check=False)


def _extend(G, H, gens, imgs):
    f = [None] * G.order
    f[G.identity] = H.identity
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, imgs):
            y = G.mul[x][s]
            v = H.mul[f[x]][t]
            if f[y] is None:
                f[y] = v
                queue.append(y)
            elif f[y] != v:
                return None
    return tuple(f)
