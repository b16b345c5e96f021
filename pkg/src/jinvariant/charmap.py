"""Degree-one characteristic map modulo p.

A weight ``sum a_i omega_i`` of the character lattice maps to
``sum a_i h_i`` in ``Ch^1`` of the split flag variety; the image is the
``F_p``-span of those vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cocenter import LatticeChoice, cocenter, lattice_subgroup, lattice_weights, quotient_rank_mod_p
from .liealg import RootSystem, simple_root_as_weight


def rref_mod_p(rows: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon basis of the span of ``rows`` over ``F_p``."""
    m = [[x % p for x in r] for r in rows]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        piv = next((r for r in m if r[col]), None)
        if piv is None:
            continue
        m.remove(piv)
        inv = pow(piv[col], -1, p)
        piv = [(x * inv) % p for x in piv]
        m = [[(x - r[col] * y) % p for x, y in zip(r, piv)] for r in m]
        basis = [[(x - b[col] * y) % p for x, y in zip(b, piv)] for b in basis]
        basis.append(piv)
        pivots.append(col)
    return tuple(tuple(b) for b in basis)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``F_p^n`` (coordinates on ``h_1 .. h_n``), stored in RREF."""

    n: int
    p: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], n: int, p: int) -> Subspace:
        return cls(n, p, rref_mod_p(vectors, p, n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        return Subspace.span(list(self.basis) + [list(v)], self.n, self.p).dim == self.dim

    def issubspace(self, other: Subspace) -> bool:
        return all(b in other for b in self.basis)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(b) if x) for b in self.basis]

    def format(self) -> str:
        parts = []
        for b in self.basis:
            terms = []
            for i, x in enumerate(b):
                if x:
                    terms.append(f"h{i + 1}" if x == 1 else f"{x}h{i + 1}")
            parts.append("+".join(terms))
        return "span{" + ", ".join(parts) + "}"


def charmap_image(rs: RootSystem, choice: LatticeChoice, p: int = 2) -> Subspace:
    """Image of the character lattice of ``choice`` in ``Ch^1`` mod ``p``."""
    gens = [simple_root_as_weight(rs, i).coords for i in range(1, rs.rank + 1)]
    for i in lattice_weights(rs, choice):
        gens.append(tuple(int(j == i - 1) for j in range(rs.rank)))
    return Subspace.span(gens, rs.rank, p)


def degree_one_generator_count(rs: RootSystem, choice: LatticeChoice, p: int = 2) -> int:
    """Number ``s`` of degree-one generators of ``Ch^*(G_0)``."""
    return rs.rank - charmap_image(rs, choice, p).dim


def cocenter_rank(rs: RootSystem, choice: LatticeChoice, p: int = 2) -> int:
    """``dim_Fp (Lambda_w / T) (x) F_p`` computed from the cocenter alone."""
    cg = cocenter(rs)
    return quotient_rank_mod_p(cg, lattice_subgroup(cg, choice), p)
