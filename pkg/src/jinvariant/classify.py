"""J-invariants of quadratic forms, of algebras with involution in small degree,
and of trialitarian triples of degree 8.

Isotropy is an input: statuses the theory rules out for a given index
profile raise :class:`InconsistentProfile` naming the violated rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .chow import JTuple, KacSignature, admissible_tuples, involution_signature, is_admissible, kac_signature
from .errors import InconsistentProfile, InvalidSignature, UndocumentedCase
from .titsbounds import IndexProfile


class Status(str, enum.Enum):
    HYPERBOLIC = "hyperbolic"
    ISOTROPIC_NONHYPERBOLIC = "isotropic_nonhyperbolic"
    ANISOTROPIC = "anisotropic"

    @property
    def isotropic(self) -> bool:
        return self is not Status.ANISOTROPIC


@dataclass(frozen=True)
class ClassificationRow:
    J: JTuple
    vishik_J: Optional[tuple[int, ...]] = None
    description: Optional[str] = None
    splitting_pattern: Optional[tuple[int, ...]] = None
    ii_S: Optional[int] = None
    ii: Optional[int] = None


# --- quadratic forms -----------------------------------------------------------

# 8-dimensional forms with trivial discriminant; J and splitting pattern
# determine each other, ii_S separates the two (2,1) rows.
DIM8_TABLE: tuple[ClassificationRow, ...] = (
    ClassificationRow((0, 0), (), "hyperbolic", (4,), 0, 0),
    ClassificationRow((1, 0), (1,), "Pf_2 ⊥ 2H", (2, 4), 1, 1),
    ClassificationRow((2, 0), (1, 2), "Al_6 ⊥ H", (1, 2, 4), 2, 2),
    ClassificationRow((0, 1), (3,), "Pf_3", (0, 4), 0, 1),
    ClassificationRow((1, 1), (1, 3), "q = <1,-a> ⊗ q'", (0, 2, 4), 1, 1),
    ClassificationRow((2, 1), (1, 2, 3), "Pf_2 ⊥ Pf_2 or s_{l/k}(Pf_2)", (0, 1, 2, 4), 2, 2),
    ClassificationRow((2, 1), (1, 2, 3), "generic", (0, 1, 2, 4), 3, 3),
)

# the two documented 10-dimensional cases: pattern -> (J, ii_S, description)
DIM10_CASES: dict[tuple[int, ...], tuple[JTuple, int, str]] = {
    (0, 2, 3, 5): ((2, 0), 2, "anisotropic Pfister neighbor"),
    (2, 3, 5): ((2, 0), 2, "Al_6 ⊥ 2H"),
}


def dim8_pattern_for_J(j: Sequence[int]) -> tuple[int, ...]:
    for row in DIM8_TABLE:
        if row.J == tuple(j):
            return row.splitting_pattern
    raise InconsistentProfile("dim-8 table", f"no row with J = {tuple(j)}")


def dim8_J_for_pattern(pattern: Sequence[int]) -> JTuple:
    for row in DIM8_TABLE:
        if row.splitting_pattern == tuple(pattern):
            return row.J
    raise InconsistentProfile("dim-8 table", f"no row with splitting pattern {tuple(pattern)}")


def _status_from_pattern(pattern: Sequence[int], dim: int) -> Status:
    if pattern[0] == dim // 2:
        return Status.HYPERBOLIC
    return Status.ANISOTROPIC if pattern[0] == 0 else Status.ISOTROPIC_NONHYPERBOLIC


@dataclass(frozen=True)
class QFormProfile:
    """Even-dimensional form with trivial discriminant, seen through ``ii_S``."""

    dim: int
    ii_S: int
    status: Status
    splitting_pattern: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "status", Status(self.status))
        if self.dim < 4 or self.dim % 2:
            raise InconsistentProfile("even dimension >= 4", f"dim = {self.dim}")
        if not 0 <= self.ii_S <= self.dim // 2 - 1:
            raise InconsistentProfile("ii_S <= dim/2 - 1", f"ii_S = {self.ii_S}, dim = {self.dim}")
        if self.status is Status.HYPERBOLIC and self.ii_S:
            raise InconsistentProfile("hyperbolic forms have split Clifford algebra", f"ii_S = {self.ii_S}")
        if self.splitting_pattern is not None:
            pat = tuple(self.splitting_pattern)
            object.__setattr__(self, "splitting_pattern", pat)
            if not pat or list(pat) != sorted(set(pat)) or pat[-1] != self.dim // 2:
                raise InconsistentProfile("splitting pattern", f"{pat} is not a valid pattern in dim {self.dim}")
            if _status_from_pattern(pat, self.dim) is not self.status:
                raise InconsistentProfile(
                    "splitting pattern matches status", f"{pat} contradicts {self.status.value}"
                )


def classify_qform(q: QFormProfile) -> ClassificationRow:
    if q.dim == 4:
        return _qform_dim4(q)
    if q.dim == 6:
        return _qform_dim6(q)
    if q.dim == 8:
        return _qform_dim8(q)
    if q.dim == 10 and q.splitting_pattern in DIM10_CASES:
        j, ii_s, desc = DIM10_CASES[q.splitting_pattern]
        if q.ii_S != ii_s:
            raise InconsistentProfile("documented dim-10 case", f"pattern {q.splitting_pattern} has ii_S = {ii_s}")
        return _checked(ClassificationRow(j, None, desc, q.splitting_pattern, ii_s), kac_signature("SO", 10))
    raise UndocumentedCase(
        f"no documented classification for dim {q.dim}"
        + (f" with splitting pattern {q.splitting_pattern}" if q.splitting_pattern else "")
    )


def _checked(row: ClassificationRow, sig: KacSignature) -> ClassificationRow:
    if not is_admissible(sig, row.J):
        raise AssertionError(f"classification produced non-admissible {row.J} for {sig.label}")
    return row


def _qform_dim4(q: QFormProfile) -> ClassificationRow:
    # similar to the norm form of the Clifford quaternion algebra
    if q.status is Status.ISOTROPIC_NONHYPERBOLIC:
        raise InconsistentProfile("4-dim forms are hyperbolic or anisotropic")
    if (q.ii_S == 0) != (q.status is Status.HYPERBOLIC):
        raise InconsistentProfile("dim 4: hyperbolic iff ii_S = 0", f"ii_S = {q.ii_S}, {q.status.value}")
    desc = "hyperbolic" if q.ii_S == 0 else "Pf_2"
    return _checked(ClassificationRow((q.ii_S,), description=desc, ii_S=q.ii_S), kac_signature("SO", 4))


_DIM6 = {
    0: (Status.HYPERBOLIC, "hyperbolic"),
    1: (Status.ISOTROPIC_NONHYPERBOLIC, "Pf_2 ⊥ H"),
    2: (Status.ANISOTROPIC, "Al_6"),
}


def _qform_dim6(q: QFormProfile) -> ClassificationRow:
    status, desc = _DIM6[q.ii_S]
    if status is not q.status:
        raise InconsistentProfile(
            f"dim 6: J = ({q.ii_S}) iff {status.value}", f"got {q.status.value}"
        )
    return _checked(ClassificationRow((q.ii_S,), description=desc, ii_S=q.ii_S), kac_signature("SO", 6))


def _qform_dim8(q: QFormProfile) -> ClassificationRow:
    if q.ii_S == 3 and q.status.isotropic:
        raise InconsistentProfile("dim 8: ii_S = 3 forces anisotropy")
    if q.ii_S == 0 and q.status is Status.ISOTROPIC_NONHYPERBOLIC:
        raise InconsistentProfile(
            "dim 8: isotropic forms with split Clifford algebra are hyperbolic"
        )
    j = (min(q.ii_S, 2), 0 if q.status.isotropic else 1)
    row = next(r for r in DIM8_TABLE if r.J == j and r.ii_S == q.ii_S)
    if q.splitting_pattern is not None and q.splitting_pattern != row.splitting_pattern:
        raise InconsistentProfile(
            "dim 8: J determines the splitting pattern",
            f"J = {j} has pattern {row.splitting_pattern}, got {q.splitting_pattern}",
        )
    return _checked(row, kac_signature("SO", 8))


# --- algebras with involution --------------------------------------------------

TRIPLE_LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class InvolutionProfile:
    """Degree ``2n`` algebra with orthogonal involution of trivial discriminant.

    In degree 8 the three valuations are those of a trialitarian triple
    ordered by indices, ``ii_A <= ii_plus (= ii_B) <= ii_minus (= ii_C)``, and
    ``designated`` says which member the caller's algebra is; ``status``
    refers to that member.  ``status=None`` asks for it to be derived
    (degrees 4 and 6 only).
    """

    degree: int
    ii_A: int
    ii_plus: int
    ii_minus: int
    status: Optional[Status] = None
    designated: str = "A"
    validate: bool = True

    def __post_init__(self) -> None:
        if self.status is not None:
            object.__setattr__(self, "status", Status(self.status))
        if self.degree < 4 or self.degree % 2:
            raise InconsistentProfile("even degree >= 4", f"degree = {self.degree}")
        if self.designated not in TRIPLE_LABELS:
            raise InconsistentProfile("designated algebra", f"expected A, B or C, got {self.designated!r}")
        if self.designated != "A" and self.degree != 8:
            raise InconsistentProfile("designated algebra", "only degree 8 has a trialitarian triple")
        self.index_profile()
        if self.degree == 8:
            self._check_triple()

    def index_profile(self) -> IndexProfile:
        return IndexProfile(self.degree // 2, self.ii_A, self.ii_plus, self.ii_minus, self.validate)

    @property
    def ii(self) -> tuple[int, int, int]:
        return (self.ii_A, self.ii_plus, self.ii_minus)

    def _check_triple(self) -> None:
        a, b, c = self.ii
        if not a <= b <= c:
            raise InconsistentProfile("triple ordered by indices", f"({a}, {b}, {c}) is not sorted")
        if c > 3:
            raise InconsistentProfile("degree 8 index bound", f"ii = {c} > 3")
        if self.status is None:
            raise InconsistentProfile("degree 8 status", "isotropy must be given in degree 8")
        if not self.status.isotropic:
            return
        if c >= 2 and a > 0:
            raise InconsistentProfile(
                "isotropic triple with ii_C >= 2 is split", f"ii_A = {a} but ii_C = {c}"
            )
        if c == 3:
            raise InconsistentProfile("isotropic triple with ii_C = 3", "a split form with ii_S = 3 is anisotropic")
        own = dict(zip(TRIPLE_LABELS, self.ii))[self.designated]
        others = [v for k, v in zip(TRIPLE_LABELS, self.ii) if k != self.designated]
        if self.status is Status.HYPERBOLIC and min(others) != 0:
            raise InconsistentProfile(
                "hyperbolic iff a Clifford component splits", f"components have ii = {tuple(others)}"
            )
        if self.status is Status.ISOTROPIC_NONHYPERBOLIC:
            if own >= 2:
                raise InconsistentProfile(
                    "isotropic involution on an algebra of index >= 4 is hyperbolic", f"ii = {own}"
                )
            if max(self.ii) == 0:
                raise InconsistentProfile(
                    "isotropic form with split Clifford algebra is hyperbolic"
                )


def classify_involution(p: InvolutionProfile) -> ClassificationRow:
    if p.degree == 4:
        return _involution_deg4(p)
    if p.degree == 6:
        return _involution_deg6(p)
    if p.degree == 8:
        return ClassificationRow(classify_triple(p).designated_J)
    raise UndocumentedCase(f"no documented classification in degree {p.degree}")


def _involution_deg4(p: InvolutionProfile) -> ClassificationRow:
    # (A, sigma) = (Q1, bar) (x) (Q2, bar) with Q1, Q2 the Clifford components
    if p.ii_A > 2 or max(p.ii_plus, p.ii_minus) > 1:
        raise InconsistentProfile("degree 4 index bounds", f"ii = {p.ii}")
    hyperbolic = min(p.ii_plus, p.ii_minus) == 0
    derived = Status.HYPERBOLIC if hyperbolic else Status.ANISOTROPIC
    if p.status is not None and p.status is not derived:
        raise InconsistentProfile(
            "degree 4: hyperbolic iff a Clifford component splits", f"expected {derived.value}"
        )
    split = p.ii_A == 0
    j = (0 if split else 1, 0 if hyperbolic else 1)
    desc = {
        (0, 0): "split, hyperbolic",
        (0, 1): "split, anisotropic 2-fold Pfister norm form",
        (1, 0): "M_2(Q), hyperbolic",
        (1, 1): "non-split, anisotropic",
    }[j]
    return _checked(ClassificationRow(j, description=desc), involution_signature(2))


def _involution_deg6(p: InvolutionProfile) -> ClassificationRow:
    ii_s = p.ii_plus
    if ii_s > 2 or p.ii_A > 1:
        raise InconsistentProfile("degree 6 index bounds", f"ii = {p.ii}")
    if ii_s <= 1 and p.ii_A:
        raise InconsistentProfile("degree 6: ii_S <= 1 forces A split", f"ii_A = {p.ii_A}")
    derived, _ = _DIM6[ii_s]
    if p.status is not None:
        if p.ii_A and p.status.isotropic:
            raise InconsistentProfile("degree 6: non-split algebras carry anisotropic involutions")
        if p.status is not derived:
            raise InconsistentProfile(f"degree 6: J = ({ii_s}) iff {derived.value}", f"got {p.status.value}")
    desc = {0: "split, hyperbolic", 1: "split, isotropic non-hyperbolic", 2: "anisotropic"}[ii_s]
    return _checked(ClassificationRow((ii_s,), description=desc, ii_S=ii_s), involution_signature(3))


@dataclass(frozen=True)
class TripleClassification:
    """J-invariants of the three members of a trialitarian triple."""

    ii: tuple[int, int, int]
    status: Status
    designated: str
    A: JTuple
    B: JTuple
    C: JTuple

    def by_label(self) -> dict[str, JTuple]:
        return {"A": self.A, "B": self.B, "C": self.C}

    @property
    def designated_J(self) -> JTuple:
        return self.by_label()[self.designated]


def classify_triple(p: InvolutionProfile) -> TripleClassification:
    if p.degree != 8:
        raise InconsistentProfile("trialitarian triple", f"degree {p.degree} is not 8")
    a, b, _ = p.ii
    j = min(a, 2)
    j2 = min(b, 2)
    j3 = 0 if p.status.isotropic else 1
    out = TripleClassification(p.ii, p.status, p.designated, (j, j2, j3), (j2, j, j3), (j2, j, j3))
    excluded = excluded_values()
    for jj in (out.A, out.B, out.C):
        if jj in excluded:
            raise AssertionError(f"excluded value {jj} emitted for {p}")
    return out


def excluded_values(degree: int = 8) -> frozenset[JTuple]:
    if degree != 8:
        raise UndocumentedCase(f"excluded values are documented in degree 8 only, not {degree}")
    return frozenset({(1, 2, 0), (2, 1, 0), (2, 2, 0)})


def occurs(j: Sequence[int]) -> bool:
    """Whether ``j`` is the J-invariant of some degree 8 algebra with involution."""
    return is_admissible(involution_signature(4), j) and tuple(j) not in excluded_values()


def occurring_values() -> list[JTuple]:
    return [j for j in admissible_tuples(involution_signature(4)) if occurs(j)]


# --- patterns ------------------------------------------------------------------


def is_pattern_Is(j: Sequence[int], sig: KacSignature, s: int) -> bool:
    """Whether ``j`` has the shape ``(j_1, 0, ..., 0, *, ...)`` with ``2^{s-2} - 1`` zeros."""
    if sig.group != "PGO":
        raise InvalidSignature(f"the I^s pattern is defined for PGO signatures, not {sig.label}")
    if s <= 2 or 2 ** (s - 2) > sig.r:
        raise InvalidSignature(f"s = {s} out of range for {sig.label} (r = {sig.r})")
    if len(j) != sig.r:
        raise InvalidSignature(f"J has {len(j)} entries, {sig.label} needs {sig.r}")
    return all(x == 0 for x in j[1 : 2 ** (s - 2)])


def witt_consistency(j1: Sequence[int], j2: Sequence[int]) -> bool:
    """Zero-deleted sequences agree, as for Witt-equivalent objects."""
    return [x for x in j1 if x] == [x for x in j2 if x]
