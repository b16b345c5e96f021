"""Index valuations of Tits algebras on the cocenter and bounds on degree-one J entries.

Brauer classes are modelled only by their cocenter class and the 2-adic
valuation of their index.  For a group of type ``D_n`` the three non-trivial
Tits algebras are ``A`` (class of ``omega_1``) and the Clifford components
``C_+`` (``omega_{n-1}``) and ``C_-`` (``omega_n``).
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Sequence

from .chow import KacSignature
from .cocenter import (
    Element,
    LatticeChoice,
    cocenter,
    degree_one_generators,
    lattice_subgroup,
)
from .errors import InconsistentProfile
from .liealg import RootSystem
from .steinberg import SteinbergEntry

_GROUP_LATTICE = {
    "PGO": LatticeChoice.ADJOINT,
    "SO": LatticeChoice.SPECIAL_ORTHOGONAL,
    "SpinHalf": LatticeChoice.HALF_SPIN_PLUS,
    "Spin": LatticeChoice.SIMPLY_CONNECTED,
}


@dataclass(frozen=True)
class IndexProfile:
    rank: int
    ii_A: int
    ii_plus: int
    ii_minus: int
    validate: bool = True

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise InconsistentProfile("rank", f"type D needs rank >= 2, got {self.rank}")
        if min(self.ii_A, self.ii_plus, self.ii_minus) < 0:
            raise InconsistentProfile("non-negative valuations")
        if self.rank % 2 and self.ii_plus != self.ii_minus:
            raise InconsistentProfile(
                "equal Clifford components",
                f"rank {self.rank} is odd, so ii_plus must equal ii_minus",
            )
        if self.validate:
            self._check_brauer_relations()
        self._check_degree_caps()

    def _check_brauer_relations(self) -> None:
        a, b, c = self.ii_A, self.ii_plus, self.ii_minus
        if self.rank % 2 == 0:
            # [A] + [C+] + [C-] = 0 and ind(x + y) | ind(x) ind(y)
            if a > b + c or b > a + c or c > a + b:
                raise InconsistentProfile(
                    "triangle inequality", f"(ii_A, ii_+, ii_-) = ({a}, {b}, {c})"
                )
        else:
            # [A] = 2[C+]: ind(A) | ind(C+), and A splits once C+ has exponent 2
            if a > b:
                raise InconsistentProfile("ii_A <= ii_plus for odd rank", f"{a} > {b}")
            if b <= 1 and a > 0:
                raise InconsistentProfile(
                    "A split when ii_plus <= 1 for odd rank", f"ii_A = {a}, ii_plus = {b}"
                )

    def _check_degree_caps(self) -> None:
        deg = 2 * self.rank
        if deg % 2**self.ii_A:
            warnings.warn(f"index 2^{self.ii_A} of A does not divide its degree {deg}", stacklevel=3)
        if max(self.ii_plus, self.ii_minus) > self.rank - 1:
            warnings.warn(
                f"Clifford components have degree 2^{self.rank - 1}; valuation "
                f"{max(self.ii_plus, self.ii_minus)} exceeds it",
                stacklevel=3,
            )

    @property
    def rs(self) -> RootSystem:
        if self.rank < 3:
            raise InconsistentProfile("rank", "cocenter data needs rank >= 3")
        return RootSystem("D", self.rank)

    @property
    def split(self) -> bool:
        return self.ii_A == 0

    @property
    def half_spin(self) -> bool:
        return self.rank % 2 == 0 and min(self.ii_plus, self.ii_minus) == 0

    def valuation_map(self) -> dict[Element, int]:
        cg = cocenter(self.rs)
        n = self.rs.rank
        out = {cg.zero: 0}
        for i, v in ((1, self.ii_A), (n - 1, self.ii_plus), (n, self.ii_minus)):
            out[cg.omega_class(i)] = v
        if len(out) != cg.order:
            raise ArithmeticError("valuation map does not cover the cocenter")
        return out

    def valuation(self, cls: Element) -> int:
        return self.valuation_map()[tuple(cls)]


def common_index(profile: IndexProfile, choice: LatticeChoice = LatticeChoice.ADJOINT, p: int = 2) -> int:
    """Minimal valuation of ``sum a_l [A_{omega_{i_l}}]`` with some ``a_l`` prime to p."""
    choice = LatticeChoice(choice)
    if profile.rank == 2:
        return _common_index_rank2(profile, choice)
    cg = cocenter(profile.rs)
    gens = degree_one_generators(cg, lattice_subgroup(cg, choice), p)
    if not gens:
        raise InconsistentProfile("degree-one generators", f"{choice.value} has none")
    vals = profile.valuation_map()
    exponent = max(cg.element_order(g) for g in cg.generators)
    best = None
    for coeffs in itertools.product(range(exponent), repeat=len(gens)):
        if all(a % p == 0 for a in coeffs):
            continue
        cls = cg.zero
        for a, i in zip(coeffs, gens):
            cls = cg.add(cls, cg.scale(a, cg.omega_class(i)))
        v = vals[cls]
        best = v if best is None else min(best, v)
    return best


def _common_index_rank2(profile: IndexProfile, choice: LatticeChoice) -> int:
    # D_2 = A_1 x A_1: cocenter (Z/2)^2 with classes omega_1 ~ A and the two components
    if choice is LatticeChoice.ADJOINT:
        return min(profile.ii_A, profile.ii_plus, profile.ii_minus)
    if choice is LatticeChoice.SPECIAL_ORTHOGONAL:
        return profile.ii_minus
    return profile.ii_A


def rho_index_valuation(profile: IndexProfile, entry: SteinbergEntry) -> int:
    if entry.w.rs != profile.rs:
        raise InconsistentProfile("root system", f"entry is for {entry.w.rs}, profile for {profile.rs}")
    return profile.valuation(entry.cls)


def rational_cycle_exponents(profile: IndexProfile, table: Sequence[SteinbergEntry], p: int = 2):
    """``(w, p^{ii_w})``: that power of ``c_1(L(rho_w))`` is rational mod p."""
    return [(e.w, p ** rho_index_valuation(profile, e)) for e in table]


@dataclass(frozen=True)
class BoundsResult:
    """Closed intervals for the degree-one entries, at ``positions`` (0-based)."""

    positions: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]
    caps: tuple[int, ...]
    common_index: int

    def contains(self, j: Sequence[int]) -> bool:
        return all(lo <= j[pos] <= hi for pos, (lo, hi) in zip(self.positions, self.intervals))


def degree_one_bounds(profile: IndexProfile, sig: KacSignature) -> BoundsResult:
    """Intervals for ``j_1`` (and ``j_2`` when there are two degree-one generators).

    Upper bounds: ``j_1 <= ii`` of the first generator's Tits algebra and
    ``j_2 <= min(ii_+, ii_-)``.  Lower bounds from the common index: ``> 0``
    when it is positive, ``> 1`` when it exceeds 1 and ``k > 1``.  Half-spin
    profiles use the half-spin common index ``ii_A`` for ``j_1``.
    """
    if sig.group not in _GROUP_LATTICE:
        raise InconsistentProfile("signature", f"unknown group {sig.group}")
    rank = sig.n // 2 if sig.group in ("SO", "Spin") else sig.n
    if sig.group in ("SO", "Spin") and sig.n % 2:
        raise InconsistentProfile("type D", f"{sig.label} is of type B")
    if rank != profile.rank:
        raise InconsistentProfile("rank", f"profile rank {profile.rank} vs {sig.label}")
    choice = _GROUP_LATTICE[sig.group]
    if choice is LatticeChoice.SIMPLY_CONNECTED:
        return BoundsResult((), (), (), 0)
    if choice is LatticeChoice.SPECIAL_ORTHOGONAL and not profile.split:
        raise InconsistentProfile("split algebra", "a quadratic form profile needs ii_A = 0")
    if choice is LatticeChoice.HALF_SPIN_PLUS and profile.ii_plus != 0:
        raise InconsistentProfile("half-spin", "SpinHalf needs ii_plus = 0")

    positions = [i for i, d in enumerate(sig.d) if d == 1]
    if sig.group == "PGO" and profile.rank % 2 and len(positions) == 2:
        # table-form signature: leading placeholder with k = 0
        positions = positions[1:]
    ii_j = common_index(profile, choice)

    if choice is LatticeChoice.ADJOINT and profile.rank % 2 == 0:
        uppers = [profile.ii_A, min(profile.ii_plus, profile.ii_minus)]
        lower_index = [ii_j, ii_j]
        if profile.half_spin:
            lower_index[0] = max(lower_index[0], profile.ii_A)
    elif choice is LatticeChoice.HALF_SPIN_PLUS:
        uppers = [profile.ii_A]
        lower_index = [ii_j]
    else:
        # one generator: omega_n (odd adjoint, or SO)
        uppers = [profile.ii_minus]
        lower_index = [ii_j]
    if len(positions) != len(uppers):
        raise InconsistentProfile(
            "degree-one generators", f"{sig.label} has {len(positions)}, expected {len(uppers)}"
        )

    intervals, caps = [], []
    for pos, up, li in zip(positions, uppers, lower_index):
        k = sig.k[pos]
        lo = 0
        if li > 0 and k >= 1:
            lo = 1
        if li > 1 and k > 1:
            lo = 2
        hi = min(up, k)
        if lo > hi:
            raise InconsistentProfile(
                "bounds", f"lower bound {lo} exceeds upper bound {hi} at position {pos + 1}"
            )
        intervals.append((lo, hi))
        caps.append(k)
    return BoundsResult(tuple(positions), tuple(intervals), tuple(caps), ii_j)
