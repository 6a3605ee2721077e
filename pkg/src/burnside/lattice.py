"""Sublattices of Z^r in row-style Hermite normal form.

All arithmetic is on Python ints, so it is exact and never overflows.

A basis is in HNF when its rows are nonzero, the pivot (first nonzero entry)
of each row is positive and strictly to the right of the previous row's
pivot, and every entry above a pivot lies in ``[0, pivot)``.  The HNF of a
lattice is unique, so two lattices are equal iff their HNF bases are.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def _echelon(rows: list[list[int]], ncols: int) -> int:
    """Integer row echelon form in place on the first ``ncols`` columns.

    Only unimodular row operations are used, so extra trailing columns are
    carried along faithfully.  Returns the number of pivot rows.
    """
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            pivot_row = rows[r]
            a = pivot_row[c]
            leftover = False
            for i in range(r + 1, len(rows)):
                row = rows[i]
                if row[c]:
                    q = row[c] // a
                    for j in range(c, len(row)):
                        row[j] -= q * pivot_row[j]
                    leftover = leftover or row[c] != 0
            if not leftover:
                if a < 0:
                    rows[r] = [-v for v in pivot_row]
                r += 1
                break
    return r


def hermite_normal_form(vectors: Iterable[Sequence[int]], ncols: int) -> tuple[Vector, ...]:
    rows = [list(v) for v in vectors]
    for v in rows:
        if len(v) != ncols:
            raise ValueError(f"vector of length {len(v)} in ambient rank {ncols}")
    rank = _echelon(rows, ncols)
    rows = rows[:rank]
    for k, row in enumerate(rows):
        c = next(j for j, v in enumerate(row) if v)
        a = row[c]
        for i in range(k):
            q = rows[i][c] // a
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], row)]
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class IntegerLattice:
    ambient_rank: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence[int]], ambient_rank: int):
        return cls(ambient_rank, hermite_normal_form(vectors, ambient_rank))

    @classmethod
    def zero(cls, ambient_rank: int):
        return cls(ambient_rank, ())

    @classmethod
    def full(cls, ambient_rank: int):
        return cls(ambient_rank, tuple(
            tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __contains__(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        if len(v) != self.ambient_rank:
            raise ValueError("vector length does not match ambient rank")
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            if any(v[:c]):
                return False
            q, r = divmod(v[c], row[c])
            if r:
                return False
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return not any(v)

    def issubset(self, other: "IntegerLattice") -> bool:
        return all(b in other for b in self.basis)

    def __le__(self, other: "IntegerLattice") -> bool:
        return self.issubset(other)

    def to_json(self) -> dict:
        return {"ambient_rank": self.ambient_rank, "hnf_basis": [list(b) for b in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> "IntegerLattice":
        return cls.from_generators(data["hnf_basis"], data["ambient_rank"])


def left_kernel(matrix: Sequence[Sequence[int]], nrows: int | None = None) -> IntegerLattice:
    """All integer row vectors ``x`` with ``x · matrix = 0``.

    Reduces ``[matrix | I]``; the identity block of the rows whose matrix part
    vanishes is a basis of the (saturated) kernel.
    """
    m = len(matrix) if nrows is None else nrows
    ncols = len(matrix[0]) if m else 0
    rows = [list(matrix[i]) + [int(i == j) for j in range(m)] for i in range(m)]
    rank = _echelon(rows, ncols)
    return IntegerLattice.from_generators((row[ncols:] for row in rows[rank:]), m)


def preimage(matrix: Sequence[Sequence[int]], target: IntegerLattice) -> IntegerLattice:
    """``{x : x · matrix ∈ target}`` for an integer ``m × r`` matrix.

    Solves ``x · matrix - c · B = 0`` for the target basis ``B`` and keeps the
    ``x`` part.
    """
    m = len(matrix)
    stacked = [list(row) for row in matrix] + [[-v for v in b] for b in target.basis]
    if not stacked or target.ambient_rank == 0:
        return IntegerLattice.full(m)
    ker = left_kernel(stacked)
    return IntegerLattice.from_generators((b[:m] for b in ker.basis), m)
