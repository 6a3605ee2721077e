"""Named small groups.

Grammar::

    trivial | C<n> | D<2n> | S<n> | A<n> | V4 | Q8 | E(<p>,<k>)
    <name> × <name> × ...        ("x" and "*" also accepted)

``D8`` is the dihedral group of order 8.  ``E(p,k)`` is elementary abelian of
order ``p**k`` (``E{p,k}`` and ``Ep,k`` are accepted too).  Constructions are
deterministic and the resulting groups are memoised, so equal names give the
very same object.
"""
from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import TooLarge, UnknownName
from .groups import FiniteGroup, _group_from_perm_list, direct_product, order_cap

_PRODUCT_SPLIT = re.compile(r"\s*(?:×|\*|(?<=[0-9)}a-z])x(?=[A-Za-z]))\s*")
_E_PATTERN = re.compile(r"E[({]?(\d+),(\d+)[)}]?$")


def _cyclic(n: int) -> FiniteGroup:
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inv = tuple((-a) % n for a in range(n))
    return FiniteGroup(mul, 0, inv, tuple(f"r^{a}" for a in range(n)), f"C{n}")


def _dihedral(n: int) -> FiniteGroup:
    # element r^a s^b lives at index a + n*b
    def mult(x, y):
        a, b = x % n, x // n
        c, d = y % n, y // n
        return (a + (c if b == 0 else -c)) % n + n * ((b + d) % 2)

    size = 2 * n
    mul = tuple(tuple(mult(x, y) for y in range(size)) for x in range(size))
    inv = tuple(next(y for y in range(size) if mul[x][y] == 0) for x in range(size))
    labels = tuple(f"r^{x % n}" + ("s" if x >= n else "") for x in range(size))
    return FiniteGroup(mul, 0, inv, labels, f"D{size}")


def _symmetric(n: int, even_only: bool) -> FiniteGroup:
    perms = []
    for p in itertools.permutations(range(n)):
        if even_only and _parity(p):
            continue
        perms.append(p)
    index = {p: i for i, p in enumerate(perms)}
    return _group_from_perm_list(perms, index, f"{'A' if even_only else 'S'}{n}")


def _parity(p) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _quaternion() -> FiniteGroup:
    units = ["1", "i", "j", "k"]
    # unit products: table[u][v] = (sign, unit)
    table = {
        ("1", u): (1, u) for u in units
    }
    table.update({(u, "1"): (1, u) for u in units})
    for u in "ijk":
        table[(u, u)] = (-1, "1")
    table.update({
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: i for i, e in enumerate(elems)}
    mul = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = table[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        mul.append(tuple(row))
    mul = tuple(mul)
    inv = tuple(next(y for y in range(8) if mul[x][y] == 0) for x in range(8))
    labels = tuple(("" if s == 1 else "-") + u for s, u in elems)
    return FiniteGroup(mul, 0, inv, labels, "Q8")


def _elementary(p: int, k: int) -> FiniteGroup:
    size = p**k
    digits = [tuple((x // p**i) % p for i in range(k)) for x in range(size)]

    def enc(v):
        return sum(c * p**i for i, c in enumerate(v))

    mul = tuple(
        tuple(enc([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(size))
        for x in range(size)
    )
    inv = tuple(enc([(-a) % p for a in digits[x]]) for x in range(size))
    return FiniteGroup(mul, 0, inv, None, f"E({p},{k})")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _atom(name: str, cap: int) -> FiniteGroup:
    if name in ("trivial", "e", "1", "C1"):
        G = _cyclic(1)
        return FiniteGroup(G.mul, G.identity, G.inv, G.element_labels, "trivial")
    if name == "V4":
        G = _elementary(2, 2)
        return FiniteGroup(G.mul, G.identity, G.inv, None, "V4")
    if name == "Q8":
        return _quaternion()
    m = _E_PATTERN.match(name)
    if m:
        p, k = int(m.group(1)), int(m.group(2))
        if not _is_prime(p):
            raise UnknownName(f"{name}: {p} is not prime")
        _guard(p**k, cap)
        return _elementary(p, k)
    m = re.fullmatch(r"([CDSA])(\d+)", name)
    if not m:
        raise UnknownName(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise UnknownName(f"{name}: index must be positive")
    if kind == "C":
        _guard(n, cap)
        return _cyclic(n)
    if kind == "D":
        if n % 2:
            raise UnknownName(f"{name}: dihedral groups are named by their (even) order")
        _guard(n, cap)
        return _dihedral(n // 2)
    size = 1
    for i in range(2, n + 1):
        size *= i
    if kind == "A" and n >= 2:
        size //= 2
    _guard(size, cap)
    return _symmetric(n, even_only=(kind == "A"))


def _guard(size: int, cap: int) -> None:
    if size > cap:
        raise TooLarge(f"order {size} exceeds cap {cap}")


def catalog_group(name: str, cap: int | None = None) -> FiniteGroup:
    """Build (or fetch the memoised) group for a catalog name."""
    return _catalog(name.strip(), order_cap(cap))


@lru_cache(maxsize=None)
def _catalog(name: str, cap: int) -> FiniteGroup:
    parts = [p for p in _PRODUCT_SPLIT.split(name) if p]
    if not parts:
        raise UnknownName("empty group name")
    if len(parts) == 1:
        return _atom(parts[0], cap)
    G = _catalog(parts[0], cap)
    for part in parts[1:]:
        H = _catalog(part, cap)
        G = direct_product(G, H, cap).group
    # re-wrap so the name is the product expression
    return FiniteGroup(G.mul, G.identity, G.inv, G.element_labels, "×".join(parts))


ACCEPTANCE_CATALOG = (
    [f"C{n}" for n in range(1, 13)]
    + ["V4", "S3", "D8", "Q8", "C2×C4", "E(2,3)", "D10", "A4", "D12", "C3×C3",
       "C2×C6", "C4×C4", "D16", "C2×D8", "C2×Q8", "S4", "C2×A4", "C2×C2×C6"]
)
"""Catalog names of order at most 24 used by the verification suite."""
