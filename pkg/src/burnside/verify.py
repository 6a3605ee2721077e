"""End-to-end checks of the worked examples and the structural properties of J_n.

Each check returns ``(ok, expected, actual)``; :func:`run_all` times them,
applies each check's time limit, and collects a :class:`VerificationReport`.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import oracle
from .bisets import (
    BisetElement,
    biset_basis,
    compose,
    hom_biset,
    identity_biset,
    jn_bivariant,
    quotient_to_burnside,
    random_lattice_element,
    transfer_biset,
)
from .burnside_ring import (
    BurnsideElement,
    augmentation,
    classes_of_order,
    induce,
    marks_of,
    multiply,
    restrict_along,
    table_of_marks,
)
from .catalog import ACCEPTANCE_CATALOG, catalog_group
from .filtration import (
    augmentation_kernel,
    generalized_character,
    jn_ideal,
    jn_membership,
    linearization_kernel,
    max_nontrivial_level,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    classify_subgroups,
    direct_product,
    homomorphisms,
    quotient_group,
    subgroup_as_group,
)
from .lattice import IntegerLattice

# ---------------------------------------------------------------------------
# named elements


def klein_generator(V: FiniteGroup, fault: str | None = None) -> BurnsideElement:
    """``Σ_C [V/C] − [V/e] − 2`` over the three order-2 subgroups of a Klein group."""
    g = -BurnsideElement.basis(V, 0) - 2
    for i in classes_of_order(V, 2):
        g = g + BurnsideElement.basis(V, i)
    if fault == "g-sign":
        g = -g
    return g


def _class_by_order(G, order) -> BurnsideElement:
    (i,) = classes_of_order(G, order)
    return BurnsideElement.basis(G, i)


def a4_kernel_generators(A: FiniteGroup) -> tuple[BurnsideElement, BurnsideElement]:
    """The two rank-one-marks-vanishing elements of A(A4) built from orders e, C2, C3, V4."""
    e, c2, c3, v4 = (_class_by_order(A, k) for k in (1, 2, 3, 4))
    first = e - 3 * c3 - v4 + 3
    second = c2 - c3 - v4 + 1
    return first, second


def klein_in_a4(A: FiniteGroup) -> tuple[FiniteGroup, GroupHom]:
    (i,) = classes_of_order(A, 4)
    return subgroup_as_group(classify_subgroups(A)[i].representative, name="V4")


def dihedral_to_klein(D: FiniteGroup) -> tuple[FiniteGroup, GroupHom]:
    """Quotient of D8 by its centre, which is a Klein group."""
    center = [
        c.representative for c in classify_subgroups(D)
        if c.order == 2 and c.representative.is_normal()
    ]
    (Z,) = center
    return quotient_group(D, Z, name="V4")


def d8_pullback_expected(D: FiniteGroup) -> BurnsideElement:
    """``[D/W4] + [D/W4'] + [D/C4] − [D/C2] − 2`` with ``C2`` the central subgroup."""
    classes = classify_subgroups(D)
    out = -2 * BurnsideElement.one(D)
    for i in classes_of_order(D, 4):
        out = out + BurnsideElement.basis(D, i)
    (z,) = [i for i in classes_of_order(D, 2) if classes[i].representative.is_normal()]
    return out - BurnsideElement.basis(D, z)


# ---------------------------------------------------------------------------
# report


@dataclass
class CheckResult:
    number: int
    name: str
    status: str
    expected: object
    actual: object
    reference: str
    seconds: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def line(self, timings: bool = False) -> str:
        clock = f"{self.seconds:.2f}s / " if timings else ""
        return f"{self.status.upper():4} [{self.number:2}] {self.name} ({clock}limit {self.limit:g}s)"

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "number": self.number, "name": self.name, "status": self.status,
            "expected": _jsonable(self.expected), "actual": _jsonable(self.actual),
            "reference": self.reference, "limit": self.limit,
        }
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _jsonable(v):
    if isinstance(v, (BurnsideElement, BisetElement)):
        return list(v.coeffs)
    if isinstance(v, IntegerLattice):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        return {"passed": self.passed, "checks": [c.to_json(timings) for c in self.checks]}

    def render(self, timings: bool = False) -> str:
        """One line per check; wall-clock times are left out unless asked for, so output is reproducible."""
        lines = [c.line(timings) for c in self.checks]
        ok = sum(c.passed for c in self.checks)
        lines.append(f"{ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    reference: str
    limit: float
    run: Callable[..., tuple[bool, object, object]]


# ---------------------------------------------------------------------------
# criteria


def check_klein_j1(fault=None):
    V = catalog_group("V4")
    L = jn_ideal(V, 1)
    g = klein_generator(V, fault)
    expected = [list(g.coeffs), [-c for c in g.coeffs]]
    ok = L.rank == 1 and list(L.basis[0]) in expected
    return ok, expected, L.to_json()


def check_klein_factorization(fault=None):
    V = catalog_group("V4")
    g = klein_generator(V, fault)
    factors = [BurnsideElement.basis(V, i) - 1 for i in classes_of_order(V, 2)]
    prod = BurnsideElement.one(V)
    for f in factors:
        prod = multiply(prod, f)
    # oracle: expand ∏(X_C − pt) over subsets and multiply genuine sets concretely
    sets = [oracle.coset_set(V, classify_subgroups(V)[i].representative)
            for i in classes_of_order(V, 2)]
    point = oracle.coset_set(V, Subgroup(V, tuple(range(V.order))))
    concrete = BurnsideElement.zero(V)
    for chosen in itertools.product((0, 1), repeat=len(sets)):
        X = point
        for pick, S in zip(chosen, sets):
            if pick:
                X = oracle.product(X, S)
        sign = (-1) ** (len(sets) - sum(chosen))
        concrete = concrete + sign * oracle.orbit_decompose(X)
    expected = 1 + g
    ok = prod == expected and concrete == expected and augmentation(expected) == 1
    return ok, expected, {"marks_route": prod, "oracle_route": concrete}


def check_a4_j1(fault=None):
    A = catalog_group("A4")
    L = jn_ideal(A, 1)
    gens = a4_kernel_generators(A)
    span = IntegerLattice.from_generators([x.coeffs for x in gens], L.ambient_rank)
    return L.rank == 2 and L == span, span.to_json(), L.to_json()


def check_a4_restriction(fault=None):
    A = catalog_group("A4")
    V, inc = klein_in_a4(A)
    _, second = a4_kernel_generators(A)
    res = restrict_along(inc, second)
    g = klein_generator(V, fault)
    return res == g, g, res


def check_d8_pullback(fault=None):
    D = catalog_group("D8")
    V, q = dihedral_to_klein(D)
    is_klein = V.order == 4 and all(o <= 2 for o in V.element_orders)
    res = restrict_along(q, klein_generator(V, fault))
    expected = d8_pullback_expected(D)
    return is_klein and res == expected, expected, res


def _catalog_groups(max_order=24):
    return [catalog_group(n) for n in ACCEPTANCE_CATALOG if catalog_group(n).order <= max_order]


def check_linearization_kernel(fault=None):
    bad = [G.name for G in _catalog_groups() if linearization_kernel(G) != jn_ideal(G, 1)]
    return not bad, [], bad


def check_j0_augmentation(fault=None):
    bad = [G.name for G in _catalog_groups() if jn_ideal(G, 0) != augmentation_kernel(G)]
    return not bad, [], bad


def _random_element(G, rng, bound=3) -> BurnsideElement:
    n = len(classify_subgroups(G))
    return BurnsideElement(G, tuple(rng.randint(-bound, bound) for _ in range(n)))


def _random_j(G, n, rng) -> BurnsideElement:
    return BurnsideElement(G, random_lattice_element(jn_ideal(G, n), rng))


_SMALL = ("trivial", "C2", "C3", "C4", "V4", "S3")


def _homs(G, H):
    return _hom_cache.setdefault((id(G), id(H)), list(homomorphisms(G, H)))


_hom_cache: dict = {}


def ideal_instance_failures(G: FiniteGroup, rng: random.Random, instances: int) -> list[str]:
    """Randomised closure of J_n(G) and J_n(G, H) under the Burnside-category operations."""
    failures = []
    top = max_nontrivial_level(G)
    classes = classify_subgroups(G)
    for k in range(instances):
        n = rng.randint(0, max(top, 1))
        x = _random_element(G, rng)
        y = _random_j(G, n, rng)
        if not jn_membership(multiply(x, y), n):
            failures.append(f"{G.name}#{k}: product")
        # restriction along a homomorphism F -> G
        F = catalog_group(rng.choice(_SMALL))
        phi = rng.choice(_homs(F, G))
        if not jn_membership(restrict_along(phi, y), n):
            failures.append(f"{G.name}#{k}: restriction from {F.name}")
        # induction from a subgroup U <= G
        U, inc = subgroup_as_group(rng.choice(classes.classes).representative)
        z = _random_j(U, n, rng)
        if not jn_membership(induce(inc, z), n):
            failures.append(f"{G.name}#{k}: induction")
        # bivariant closure
        H = catalog_group(rng.choice(("trivial", "C2")))
        S = BisetElement(G, H, random_lattice_element(jn_bivariant(G, H, n), rng))
        # a transfer out of G lives in A(F, G) with |F| >= |G|, so it needs
        # subgroups of a group of order >= |G|^2; keep that below 128
        if G.order > 8 or rng.random() < 0.5:
            Fs = catalog_group(rng.choice(_SMALL[:4]))
            R = hom_biset(rng.choice(_homs(Fs, G)))
        else:
            if 2 * G.order * G.order <= 64:
                theta = direct_product(G, catalog_group("C2")).inclusions[0]
            else:
                theta = rng.choice([f for f in _homs(G, G) if f.is_injective()])
            R = transfer_biset(theta)
        RS = compose(R, S, method="mackey")
        if RS.coeffs not in jn_bivariant(RS.source, RS.target, n):
            failures.append(f"{G.name}#{k}: left composition")
        if rng.random() < 0.5:
            I = catalog_group(rng.choice(("trivial", "C2", "C3")))
            T = hom_biset(rng.choice(_homs(H, I)))
        else:
            sub = rng.choice(classify_subgroups(H).classes).representative
            _, theta = subgroup_as_group(sub)
            T = transfer_biset(theta)
        ST = compose(S, T, method="mackey")
        if ST.coeffs not in jn_bivariant(ST.source, ST.target, n):
            failures.append(f"{G.name}#{k}: right composition")
    return failures


def right_transfer_witness() -> dict:
    """Smallest failure of right composition: ``Δ − [(C2×C2)/(C2×e)]`` then transfer from ``e``.

    The biset has zero H-quotient, so it lies in every bivariant J_n, but its
    composite with the transfer ``e → C2`` is ``[C2/e] − 2``, which has a
    nonzero mark at ``C2``.
    """
    C2, E = catalog_group("C2"), catalog_group("trivial")
    basis = biset_basis(C2, C2)
    P = basis.product
    left_factor = Subgroup(P.group, tuple(sorted(P.pair(g, 0) for g in range(2))))
    S = identity_biset(C2) - BisetElement.transitive(C2, C2, left_factor)
    T = transfer_biset(GroupHom(E, C2, (0,)))
    ST = compose(S, T)
    return {
        "S": list(S.coeffs),
        "S_in_J_n_for_all_n": all(S.coeffs in jn_bivariant(C2, C2, n) for n in range(3)),
        "S_circ_transfer": list(ST.coeffs),
        "marks": list(_marks(ST)),
        "in_J_1": ST.coeffs in jn_bivariant(C2, E, 1),
    }


def _marks(S: BisetElement) -> tuple[int, ...]:
    return marks_of(quotient_to_burnside(S)).values


def check_ideal_suite(fault=None, instances=200):
    failures = []
    for G in _catalog_groups(16):
        rng = random.Random(f"ideal-{G.name}")
        failures += ideal_instance_failures(G, rng, instances)
    by_case: dict[str, int] = {}
    for f in failures:
        case = f.split(": ", 1)[1].split(" from ")[0]
        by_case[case] = by_case.get(case, 0) + 1
    actual = {"failures_by_case": by_case, "first_failures": failures[:10]}
    if failures:
        actual["witness"] = right_transfer_witness()
    return not failures, {"failures_by_case": {}}, actual


ORACLE_COMPOSE_TRIPLES = (
    ("C2", "C2", "C2"), ("V4", "C2", "trivial"), ("S3", "C3", "C2"), ("C4", "V4", "C2"),
    ("D8", "C2", "C2"), ("Q8", "C4", "C2"), ("S3", "S3", "S3"), ("trivial", "C3", "S3"),
    ("C2", "D8", "C4"), ("V4", "V4", "V4"), ("D8", "V4", "C2"),
)


def oracle_mismatches(G: FiniteGroup) -> list[str]:
    out = []
    tom = table_of_marks(G)
    classes = tom.classes
    cosets = [oracle.coset_set(G, c.representative) for c in classes]
    for i, X in enumerate(cosets):
        for j, K in enumerate(classes):
            if oracle.fixed_points(X, K.representative) != tom.marks[i][j]:
                out.append(f"{G.name}: mark ({i},{j})")
    for i, j in itertools.combinations_with_replacement(range(len(classes)), 2):
        formal = multiply(BurnsideElement.basis(G, i), BurnsideElement.basis(G, j))
        concrete = oracle.orbit_decompose(oracle.product(cosets[i], cosets[j]), check=False)
        if formal != concrete:
            out.append(f"{G.name}: product ({i},{j})")
    return out


def compose_mismatches(G, H, I) -> list[str]:
    out = []
    bs, bt = biset_basis(G, H), biset_basis(H, I)
    P_gi = direct_product(G, I)
    for i in range(len(bs)):
        S = oracle.realize_biset(bs.product, bs.classes[i].representative)
        for j in range(len(bt)):
            T = oracle.realize_biset(bt.product, bt.classes[j].representative)
            X = oracle.twisted_product(S, bs.product, T, bt.product, P_gi)
            truth = BisetElement(G, I, _free_coeffs(G, I, oracle.orbit_decompose(X).coeffs))
            a = BisetElement.basis_element(G, H, i)
            b = BisetElement.basis_element(H, I, j)
            for method in ("sets", "mackey"):
                if compose(a, b, method=method) != truth:
                    out.append(f"{G.name},{H.name},{I.name}: basis ({i},{j}) via {method}")
    return out


def _free_coeffs(G, I, full):
    basis = biset_basis(G, I)
    coeffs = [0] * len(basis)
    for k, c in enumerate(full):
        if c:
            coeffs[basis.position[k]] += c
    return coeffs


def check_oracle(fault=None):
    bad = []
    for G in _catalog_groups(24):
        bad += oracle_mismatches(G)
    for names in ORACLE_COMPOSE_TRIPLES:
        bad += compose_mismatches(*(catalog_group(n) for n in names))
    return not bad, [], bad[:20]


def _prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]


def check_generalized_characters(fault=None):
    bad = []
    for G in _catalog_groups():
        for p in _prime_divisors(G.order):
            for n in (1, 2, 3):
                for b in jn_ideal(G, n).basis:
                    if not generalized_character(BurnsideElement(G, b), p, n).is_zero():
                        bad.append(f"{G.name}: p={p} n={n}")
    return not bad, [], bad


def check_hausdorff(fault=None):
    bad = []
    for G in _catalog_groups():
        top = max_nontrivial_level(G)
        bound = int(math.log2(G.order))
        if not (top <= bound <= G.order - 1):
            bad.append(f"{G.name}: level {top}, log bound {bound}")
        if not jn_ideal(G, bound).is_zero():
            bad.append(f"{G.name}: J_{bound} nonzero")
        for n in range(top + 1):
            if not jn_ideal(G, n + 1).issubset(jn_ideal(G, n)):
                bad.append(f"{G.name}: J_{n + 1} not inside J_{n}")
    return not bad, [], bad


CRITERIA = (
    Criterion(1, "J_1(V4) is generated by the Klein element g", "Klein four-group example", 1, check_klein_j1),
    Criterion(2, "1 + g factors as the product of ([V4/C] - 1)", "Klein four-group factorisation", 1, check_klein_factorization),
    Criterion(3, "J_1(A4) is free of rank 2 on the two stated generators", "A4 example", 1, check_a4_j1),
    Criterion(4, "restriction of the second A4 generator to V4 is g", "A4 example", 1, check_a4_restriction),
    Criterion(5, "pullback of g along D8 -> V4", "D8 example", 1, check_d8_pullback),
    Criterion(6, "J_1 equals the kernel of linearization", "J_1 against linearization", 60, check_linearization_kernel),
    Criterion(7, "J_0 equals the augmentation ideal", "J_0 and augmentation", 5, check_j0_augmentation),
    Criterion(8, "J_n is a two-sided ideal of the Burnside category", "ideal property", 60, check_ideal_suite),
    Criterion(9, "formula routes agree with brute-force actions", "marks and composition", 120, check_oracle),
    Criterion(10, "generalized characters vanish on J_n", "generalized characters", 30, check_generalized_characters),
    Criterion(11, "J_n vanishes by the log bound and the chain decreases", "filtration bounds", 5, check_hausdorff),
)


def run_criterion(c: Criterion, fault: str | None = None) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, expected, actual = c.run(fault=fault)
    except Exception as exc:  # report, don't crash the whole run
        ok, expected, actual = False, None, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    status = "pass" if ok and dt < c.limit else "fail"
    if ok and dt >= c.limit:
        actual = f"exceeded time limit: {dt:.2f}s"
    return CheckResult(c.number, c.name, status, expected, actual, c.reference, dt, c.limit)


def run_all(fault: str | None = None) -> VerificationReport:
    return VerificationReport([run_criterion(c, fault) for c in CRITERIA])
