"""Cocenter ``Lambda_w / Lambda_r`` and intermediate character lattices.

An intermediate lattice ``Lambda_r <= T <= Lambda_w`` is stored only through
the subgroup ``T / Lambda_r`` of the cocenter.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, log

from .errors import InvalidLatticeChoice
from .liealg import RootSystem, WeightVec, fundamental_weight

Element = tuple[int, ...]


def smith_normal_form(m):
    """Smith normal form ``U @ m @ V = D`` of an integer matrix.

    Returns ``(U, D, V)`` as lists of lists, with ``U`` and ``V`` unimodular
    and ``D`` diagonal with non-negative entries, each dividing the next.
    The pivot is always the smallest non-zero absolute value, first in
    row-major order, so the output is deterministic.
    """
    rows, cols = len(m), len(m[0])
    d = [list(map(int, r)) for r in m]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(a, i, j):
        a[i], a[j] = a[j], a[i]

    def swap_cols(a, i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]

    def add_row(a, src, dst, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]

    def add_col(a, src, dst, k):
        for r in a:
            r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(d, t, pi)
            swap_rows(u, t, pi)
            swap_cols(d, t, pj)
            swap_cols(v, t, pj)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = d[i][t] // p
                if q:
                    add_row(d, t, i, -q)
                    add_row(u, t, i, -q)
                dirty |= d[i][t] != 0
            for j in range(t + 1, cols):
                q = d[t][j] // p
                if q:
                    add_col(d, t, j, -q)
                    add_col(v, t, j, -q)
                dirty |= d[t][j] != 0
            if dirty:
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(d, bad[0], t, 1)
            add_row(u, bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


@dataclass(frozen=True)
class CocenterGroup:
    """``Lambda_w / Lambda_r`` as a product of cyclic groups.

    ``factors`` are the invariant factors greater than one; ``generators[i]``
    is the class of ``omega_{i+1}``.
    """

    rs: RootSystem
    factors: tuple[int, ...]
    generators: tuple[Element, ...]
    _projection: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out

    @property
    def zero(self) -> Element:
        return tuple(0 for _ in self.factors)

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def scale(self, k: int, a: Element) -> Element:
        return tuple((k * x) % f for x, f in zip(a, self.factors))

    def elements(self) -> list[Element]:
        return [tuple(e) for e in itertools.product(*(range(f) for f in self.factors))]

    def element_order(self, a: Element) -> int:
        out = 1
        for x, f in zip(a, self.factors):
            k = f // gcd(x, f)
            out = out * k // gcd(out, k)
        return out

    def omega_class(self, i: int) -> Element:
        return self.generators[i - 1]

    def span(self, gens) -> frozenset[Element]:
        """Subgroup generated by ``gens``."""
        out = {self.zero}
        frontier = [self.zero]
        gens = list(gens)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = self.add(a, g)
                    if b not in out:
                        out.add(b)
                        new.append(b)
            frontier = new
        return frozenset(out)


@lru_cache(maxsize=None)
def cocenter(rs: RootSystem) -> CocenterGroup:
    n = rs.rank
    u, d, _ = smith_normal_form(rs.cartan)
    keep = [i for i in range(n) if d[i][i] != 1]
    if any(d[i][i] == 0 for i in keep):
        raise ArithmeticError("Cartan matrix is singular")
    factors = tuple(d[i][i] for i in keep)
    proj = tuple(tuple(u[i]) for i in keep)
    gens = tuple(
        tuple(proj[a][j] % factors[a] for a in range(len(keep))) for j in range(n)
    )
    return CocenterGroup(rs, factors, gens, proj)


def weight_class(cg: CocenterGroup, v: WeightVec) -> Element:
    if len(v) != cg.rs.rank:
        raise ValueError("dimension mismatch")
    return tuple(
        sum(p * x for p, x in zip(row, v.coords)) % f for row, f in zip(cg._projection, cg.factors)
    )


class LatticeChoice(str, enum.Enum):
    ADJOINT = "adjoint"
    SIMPLY_CONNECTED = "simply_connected"
    SPECIAL_ORTHOGONAL = "special_orthogonal"
    HALF_SPIN_PLUS = "half_spin_plus"
    HALF_SPIN_MINUS = "half_spin_minus"


def lattice_weights(rs: RootSystem, choice: LatticeChoice) -> list[int]:
    """Indices ``i`` of the fundamental weights adjoined to the root lattice."""
    choice = LatticeChoice(choice)
    n = rs.rank
    if choice is LatticeChoice.ADJOINT:
        return []
    if choice is LatticeChoice.SIMPLY_CONNECTED:
        return list(range(1, n + 1))
    if choice is LatticeChoice.SPECIAL_ORTHOGONAL:
        if rs.family not in ("B", "D"):
            raise InvalidLatticeChoice(f"special_orthogonal is not defined for {rs}")
        return [1]
    if rs.family != "D":
        raise InvalidLatticeChoice(f"{choice.value} requires type D, got {rs}")
    i = n - 1 if choice is LatticeChoice.HALF_SPIN_PLUS else n
    cg = cocenter(rs)
    if cg.element_order(cg.omega_class(i)) != 2:
        raise InvalidLatticeChoice(
            f"{choice.value} needs the class of omega_{i} to have order 2; it has order "
            f"{cg.element_order(cg.omega_class(i))} in {rs}"
        )
    return [i]


def lattice_subgroup(cg: CocenterGroup, choice: LatticeChoice) -> frozenset[Element]:
    """The subgroup ``T / Lambda_r`` for the given lattice choice."""
    return cg.span(cg.omega_class(i) for i in lattice_weights(cg.rs, choice))


def quotient_rank_mod_p(cg: CocenterGroup, subgroup, p: int, classes=None) -> int:
    """``dim_Fp`` of the span of ``classes`` in ``(cocenter / subgroup) (x) F_p``.

    With ``classes=None`` the whole quotient is measured.
    """
    base = cg.span(list(subgroup) + [cg.scale(p, g) for g in cg.generators])
    gens = list(cg.generators) if classes is None else list(classes)
    total = cg.span(list(base) + gens)
    ratio = len(total) // len(base)
    k = round(log(ratio, p)) if ratio > 1 else 0
    if p**k != ratio:
        raise ArithmeticError("quotient is not elementary abelian")
    return k


def degree_one_generators(cg: CocenterGroup, subgroup, p: int = 2) -> list[int]:
    """Fundamental weights whose classes form a basis of ``(Lambda_w/T) (x) F_p``.

    Candidates are tried in the order ``1, n, n-1, 2, ..., n-2`` so that type
    ``D_{2m}`` adjoint picks ``omega_1, omega_{2m}`` and ``D_{2m+1}`` picks
    ``omega_{2m+1}``.
    """
    n = cg.rs.rank
    order = [1, n, n - 1] + list(range(2, n - 1))
    seen = []
    for i in dict.fromkeys(k for k in order if 1 <= k <= n):
        trial = seen + [i]
        if quotient_rank_mod_p(cg, subgroup, p, [cg.omega_class(k) for k in trial]) == len(trial):
            seen = trial
    return seen
