"""Kac signatures of orthogonal groups, admissible J-tuples, Poincare polynomials.

A J-tuple is a plain tuple of non-negative integers ``(j_1, ..., j_r)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import GuardExceeded, InvalidSignature

GROUPS = ("SO", "Spin", "SpinHalf", "PGO")
MAX_ADMISSIBLE_RANK = 8

JTuple = tuple[int, ...]


@dataclass(frozen=True)
class KacSignature:
    """Presentation data ``Ch^*(G_0) = F_p[x_1..x_r] / (x_i^{p^{k_i}})``.

    ``constraint_start`` is the 0-based position from which the admissibility
    restrictions apply (1 for the PGO table row, 0 otherwise).
    """

    group: str
    n: int
    d: tuple[int, ...]
    k: tuple[int, ...]
    p: int = 2
    constraint_start: int = 0

    def __post_init__(self) -> None:
        if len(self.d) != len(self.k):
            raise InvalidSignature("d and k must have the same length")
        if list(self.d) != sorted(self.d):
            raise InvalidSignature("degrees must be non-decreasing")

    @property
    def r(self) -> int:
        return len(self.d)

    @property
    def label(self) -> str:
        if self.group in ("SpinHalf", "PGO"):
            return f"{self.group}_{2 * self.n}"
        return f"{self.group}_{self.n}"


def _floor_log(num: int, den: int, p: int = 2) -> int:
    """Largest ``k >= 0`` with ``den * p^k <= num``."""
    if num < den:
        raise InvalidSignature(f"log of {num}/{den} is negative")
    k = 0
    while den * p ** (k + 1) <= num:
        k += 1
    return k


def two_adic_valuation(x: int) -> int:
    if x <= 0:
        raise ValueError("valuation of a non-positive integer")
    return (x & -x).bit_length() - 1


def kac_signature(group: str, n: int) -> KacSignature:
    """Row of the p = 2 table for ``SO_n``, ``Spin_n``, ``SpinHalf_2n``, ``PGO_2n``.

    ``n`` is the subscript parameter of the table row: the matrix size for
    ``SO``/``Spin`` and half the matrix size for ``SpinHalf``/``PGO``.
    """
    if group not in GROUPS:
        raise InvalidSignature(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")
    if group == "SO":
        if n < 3:
            raise InvalidSignature("SO_n needs n >= 3")
        r = (n + 1) // 4
        d = [2 * i - 1 for i in range(1, r + 1)]
        k = [_floor_log(n - 1, di) for di in d]
        return KacSignature(group, n, tuple(d), tuple(k))
    if group == "Spin":
        if n < 3:
            raise InvalidSignature("Spin_n needs n >= 3")
        r = max((n - 3) // 4, 0)
        d = [2 * i + 1 for i in range(1, r + 1)]
        k = [_floor_log(n - 1, di) for di in d]
        return KacSignature(group, n, tuple(d), tuple(k))
    if group == "SpinHalf":
        if n < 4 or n % 2:
            raise InvalidSignature("SpinHalf_2n needs n even and n >= 4")
        r = n // 2
        d = [1] + [2 * i - 1 for i in range(2, r + 1)]
        k = [two_adic_valuation(n)] + [_floor_log(2 * n - 1, di) for di in d[1:]]
        return KacSignature(group, n, tuple(d), tuple(k))
    if n < 2:
        raise InvalidSignature("PGO_2n needs n >= 2")
    r = (n + 2) // 2
    d = [1] + [2 * i - 3 for i in range(2, r + 1)]
    k = [two_adic_valuation(n)] + [_floor_log(2 * n - 1, di) for di in d[1:]]
    return KacSignature(group, n, tuple(d), tuple(k), constraint_start=1)


def involution_signature(n: int) -> KacSignature:
    """``PGO_2n`` indexed as for ``J(A, sigma)``.

    For odd ``n`` the table row carries a leading degree-one generator with
    ``k_1 = 0``; it is dropped, so ``j_1`` is the unique degree-one entry.
    """
    sig = kac_signature("PGO", n)
    if n % 2 == 0:
        return sig
    return KacSignature("PGO", n, sig.d[1:], sig.k[1:], constraint_start=0)


def parse_group_label(label: str) -> KacSignature:
    """Parse ``SO_8``, ``Spin_7``, ``SpinHalf_8`` or ``PGO_8`` (matrix size)."""
    try:
        group, size = label.split("_")
        size = int(size)
    except ValueError:
        raise InvalidSignature(f"cannot parse group label {label!r}") from None
    if group in ("SpinHalf", "PGO"):
        if size % 2:
            raise InvalidSignature(f"{group} needs an even matrix size")
        return kac_signature(group, size // 2)
    return kac_signature(group, size)


# --- binomial parity -----------------------------------------------------------


def binom_odd(a: int, b: int) -> bool:
    """Whether ``C(a, b)`` is odd (Lucas' theorem at p = 2)."""
    if a < 0 or b < 0:
        raise ValueError("binom_odd needs non-negative arguments")
    return b <= a and (b & (a - b)) == 0


def binom_nonzero_mod_p(a: int, b: int, p: int) -> bool:
    """Whether ``p`` does not divide ``C(a, b)``: every base-p digit of b is at most a's."""
    if a < 0 or b < 0:
        raise ValueError("needs non-negative arguments")
    if b > a:
        return False
    while b:
        if b % p > a % p:
            return False
        a //= p
        b //= p
    return True


# --- admissibility -------------------------------------------------------------


def restriction_instances(sig: KacSignature) -> list[tuple[int, int, int, int]]:
    """All ``(i, l, s, m)`` (1-based) with ``d_i + l = p^s d_m`` and ``p`` not
    dividing ``C(d_i, l)``; each forces ``j_m <= j_i + s``."""
    out = []
    idx = range(sig.constraint_start, sig.r)
    for i in idx:
        di = sig.d[i]
        for l in range(di + 1):
            if not binom_nonzero_mod_p(di, l, sig.p):
                continue
            for m in idx:
                q, rem = divmod(di + l, sig.d[m])
                s = None if rem else _exact_log(q, sig.p)
                if s is not None:
                    out.append((i + 1, l, s, m + 1))
    return out


def _exact_log(q: int, p: int) -> int | None:
    s = 0
    while q % p == 0:
        q //= p
        s += 1
    return s if q == 1 else None


def check_bounds(sig: KacSignature, j: Sequence[int]) -> None:
    if len(j) != sig.r:
        raise InvalidSignature(f"J has {len(j)} entries, {sig.label} needs {sig.r}")
    for x, kk in zip(j, sig.k):
        if not 0 <= x <= kk:
            raise InvalidSignature(f"J={tuple(j)} is outside 0 <= j_i <= k_i = {sig.k}")


def is_admissible(sig: KacSignature, j: Sequence[int]) -> bool:
    if len(j) != sig.r or any(not 0 <= x <= kk for x, kk in zip(j, sig.k)):
        return False
    return all(j[m - 1] <= j[i - 1] + s for i, _, s, m in restriction_instances(sig))


def admissible_tuples(sig: KacSignature) -> list[JTuple]:
    """All admissible J-tuples, in lexicographic order."""
    if sig.r > MAX_ADMISSIBLE_RANK:
        raise GuardExceeded(f"r = {sig.r} exceeds the enumeration guard of {MAX_ADMISSIBLE_RANK}")
    cons = restriction_instances(sig)
    out = []
    for j in itertools.product(*(range(kk + 1) for kk in sig.k)):
        if all(j[m - 1] <= j[i - 1] + s for i, _, s, m in cons):
            out.append(tuple(j))
    return out


# --- Poincare polynomials ------------------------------------------------------


def poincare_polynomial(sig: KacSignature, j: Sequence[int]) -> list[int]:
    """Coefficients (constant term first) of ``prod (1 - t^{d p^j}) / (1 - t^d)``."""
    check_bounds(sig, j)
    poly = [1]
    for d, jj in zip(sig.d, j):
        terms = sig.p**jj
        out = [0] * (len(poly) + d * (terms - 1))
        for a, c in enumerate(poly):
            if c:
                for t in range(terms):
                    out[a + d * t] += c
        poly = out
    return poly


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"
