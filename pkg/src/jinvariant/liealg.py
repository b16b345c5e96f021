"""Exact root-system arithmetic for types A, B, D and Weyl-group enumeration.

Conventions follow Bourbaki numbering.  Weights are written in the basis of
fundamental weights, roots in the basis of simple roots.  The Cartan matrix
entry ``c[i][j]`` is the pairing of the coroot of ``alpha_i`` with
``alpha_j``, so the simple root ``alpha_j`` has fundamental-weight
coordinates given by column ``j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import CapExceeded, UnsupportedRootSystem

DEFAULT_CAP = 6_000_000

Matrix = tuple[tuple[int, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "D": 3}


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_RANK:
            raise UnsupportedRootSystem(
                f"type {self.family!r} is not supported (only A, B, D are)"
            )
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise UnsupportedRootSystem(
                f"type {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def cartan(self) -> Matrix:
        return cartan_matrix(self)

    @cached_property
    def gram(self) -> Matrix:
        return gram_matrix(self)

    @cached_property
    def _cartan_inverse(self) -> tuple[np.ndarray, int]:
        return _adjugate_det(self.cartan)

    @cached_property
    def _gram_inverse(self) -> tuple[np.ndarray, int]:
        return _adjugate_det(self.gram)


def parse_root_system(label: str) -> RootSystem:
    """Parse labels such as ``"D4"`` or ``"A1"``."""
    label = label.strip().upper()
    if len(label) < 2 or not label[1:].isdigit():
        raise UnsupportedRootSystem(f"cannot parse root system label {label!r}")
    return RootSystem(label[0], int(label[1:]))


def _dynkin_edges(rs: RootSystem) -> list[tuple[int, int]]:
    n = rs.rank
    edges = [(i, i + 1) for i in range(n - 1)]
    if rs.family == "D":
        edges[-1] = (n - 3, n - 1)
    return edges


def cartan_matrix(rs: RootSystem) -> Matrix:
    """Bourbaki Cartan matrix ``c[i][j] = <alpha_i^vee, alpha_j>``."""
    n = rs.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(rs):
        c[i][j] = c[j][i] = -1
    if rs.family == "B":
        # alpha_n is short: <alpha_n^vee, alpha_{n-1}> = -2
        c[n - 1][n - 2] = -2
    return tuple(tuple(row) for row in c)


def gram_matrix(rs: RootSystem) -> Matrix:
    """Euclidean inner products of simple roots (long roots have length^2 = 2)."""
    n = rs.rank
    c = cartan_matrix(rs)
    lengths = [2] * n
    if rs.family == "B":
        lengths[-1] = 1
    return tuple(tuple(c[i][j] * lengths[i] // 2 for j in range(n)) for i in range(n))


def weyl_order(rs: RootSystem) -> int:
    n = rs.rank
    if rs.family == "A":
        return math.factorial(n + 1)
    if rs.family == "B":
        return 2**n * math.factorial(n)
    return 2 ** (n - 1) * math.factorial(n)


def _adjugate_det(m: Matrix) -> tuple[np.ndarray, int]:
    """Exact adjugate and determinant of a small integer matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    d = int(det)
    adj = np.array([[int(x * d) for x in row[n:]] for row in a], dtype=np.int64)
    return adj, d


# --- vectors -----------------------------------------------------------------


@dataclass(frozen=True)
class _Vec:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    def __add__(self, other):
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __rmul__(self, k: int):
        return type(self)(tuple(k * a for a in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def _check(self, other) -> None:
        if type(other) is not type(self) or len(other) != len(self):
            raise ValueError(f"cannot combine {self!r} with {other!r}")


class WeightVec(_Vec):
    """Coordinates in the fundamental-weight basis."""


class RootVec(_Vec):
    """Coordinates in the simple-root basis."""


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"index {i} out of range 1..{rs.rank} for {rs}")


def fundamental_weight(rs: RootSystem, i: int) -> WeightVec:
    _check_index(rs, i)
    return WeightVec(tuple(int(j == i - 1) for j in range(rs.rank)))


def simple_root(rs: RootSystem, i: int) -> RootVec:
    _check_index(rs, i)
    return RootVec(tuple(int(j == i - 1) for j in range(rs.rank)))


def simple_root_as_weight(rs: RootSystem, i: int) -> WeightVec:
    _check_index(rs, i)
    return WeightVec(tuple(row[i - 1] for row in rs.cartan))


def root_to_weight(rs: RootSystem, v: RootVec) -> WeightVec:
    c = rs.cartan
    return WeightVec(tuple(sum(c[i][j] * v[j] for j in range(rs.rank)) for i in range(rs.rank)))


def reflect(rs: RootSystem, i: int, v: WeightVec) -> WeightVec:
    """Simple reflection ``s_i(v) = v - v_i * alpha_i`` on a weight."""
    _check_index(rs, i)
    if len(v) != rs.rank:
        raise ValueError("dimension mismatch")
    vi = v[i - 1]
    if vi == 0:
        return v
    col = [row[i - 1] for row in rs.cartan]
    return WeightVec(tuple(x - vi * c for x, c in zip(v.coords, col)))


def reflect_root(rs: RootSystem, i: int, v: RootVec) -> RootVec:
    """Simple reflection on a vector in root coordinates."""
    _check_index(rs, i)
    row = rs.cartan[i - 1]
    pairing = sum(c * x for c, x in zip(row, v.coords))
    out = list(v.coords)
    out[i - 1] -= pairing
    return RootVec(tuple(out))


def is_negative_root(rs: RootSystem, v: RootVec) -> bool:
    if len(v) != rs.rank:
        raise ValueError("dimension mismatch")
    return all(x <= 0 for x in v.coords) and any(v.coords)


# --- Weyl group ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element given by its matrix on the simple-root basis.

    Column ``j`` of ``matrix`` holds the root coordinates of ``w(alpha_j)``.
    Equality and hashing use the matrix only.
    """

    rs: RootSystem
    matrix: Matrix
    word: tuple[int, ...] | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.rs == other.rs and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.rs, self.matrix))

    def __mul__(self, other: WeylElement) -> WeylElement:
        if other.rs != self.rs:
            raise ValueError("elements of different Weyl groups")
        m = np.array(self.matrix) @ np.array(other.matrix)
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.rs, _to_matrix(m), word)

    @property
    def length(self) -> int | None:
        return None if self.word is None else len(self.word)

    def inverse(self) -> WeylElement:
        # w preserves the Gram form: R^T B R = B, hence R^-1 = B^-1 R^T B
        adj, det = self.rs._gram_inverse
        b = np.array(self.rs.gram, dtype=np.int64)
        r = np.array(self.matrix, dtype=np.int64)
        inv = _exact_div(adj @ r.T @ b, det)
        word = None if self.word is None else tuple(reversed(self.word))
        return WeylElement(self.rs, _to_matrix(inv), word)

    @cached_property
    def weight_matrix(self) -> Matrix:
        """Matrix of the action on fundamental-weight coordinates."""
        adj, det = self.rs._cartan_inverse
        c = np.array(self.rs.cartan, dtype=np.int64)
        return _to_matrix(_exact_div(c @ np.array(self.matrix, dtype=np.int64) @ adj, det))

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j) for i in range(self.rs.rank) for j in range(self.rs.rank))


Vector = Union[RootVec, WeightVec]


def act(w: WeylElement, v: Vector) -> Vector:
    if len(v) != w.rs.rank:
        raise ValueError(f"dimension mismatch: {len(v)} vs rank {w.rs.rank}")
    if isinstance(v, RootVec):
        m = w.matrix
    elif isinstance(v, WeightVec):
        m = w.weight_matrix
    else:
        raise TypeError(f"cannot act on {type(v).__name__}")
    return type(v)(tuple(sum(a * x for a, x in zip(row, v.coords)) for row in m))


def identity(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(rs, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    _check_index(rs, i)
    n = rs.rank
    m = [[int(a == b) for b in range(n)] for a in range(n)]
    for j in range(n):
        m[i - 1][j] -= rs.cartan[i - 1][j]
    return WeylElement(rs, tuple(tuple(r) for r in m), (i,))


def word_to_element(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    out = identity(rs)
    for i in word:
        out = out * simple_reflection(rs, i)
    return WeylElement(rs, out.matrix, tuple(word))


def _to_matrix(m: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def _exact_div(m: np.ndarray, d: int) -> np.ndarray:
    q, r = np.divmod(m, d)
    if np.any(r):
        raise ArithmeticError("non-integral result in exact division")
    return q


@dataclass(frozen=True)
class WeylTable:
    """Array form of an enumerated Weyl group.

    ``matrices[k]`` is the root-basis matrix of element ``k``; element ``k``
    equals ``s_{gens[k]} * element[parents[k]]`` (identity has parent -1).
    """

    rs: RootSystem
    matrices: np.ndarray
    parents: np.ndarray
    gens: np.ndarray
    lengths: np.ndarray

    def __len__(self) -> int:
        return len(self.matrices)

    def word(self, k: int) -> tuple[int, ...]:
        out = []
        while self.parents[k] >= 0:
            out.append(int(self.gens[k]))
            k = int(self.parents[k])
        return tuple(out)

    def element(self, k: int) -> WeylElement:
        return WeylElement(self.rs, _to_matrix(self.matrices[k]), self.word(k))

    def elements(self) -> list[WeylElement]:
        return [self.element(k) for k in range(len(self))]


def weyl_table(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylTable:
    order = weyl_order(rs)
    if order > cap:
        raise CapExceeded(order, cap)
    return _weyl_table(rs)


@lru_cache(maxsize=8)
def _weyl_table(rs: RootSystem) -> WeylTable:
    # BFS by word length.  Left multiplication by s_i only rewrites row i.
    # For a Coxeter group s_i*w lies one layer up or one layer down, so only
    # the previous layer has to be excluded when collecting the next one.
    n = rs.rank
    c = np.array(rs.cartan, dtype=np.int8)
    layer = np.eye(n, dtype=np.int8)[None]
    layers = [layer]
    parents = [np.array([-1])]
    gens = [np.array([0])]
    offset = 0
    prev_keys: set[bytes] = set()
    while True:
        m = len(layer)
        cands = np.repeat(layer[None], n, axis=0)  # (n, m, n, n)
        for i in range(n):
            cands[i, :, i, :] = layer[:, i, :] - np.einsum("j,mjk->mk", c[i], layer)
        flat = cands.reshape(n * m, n * n)
        uniq, first = np.unique(flat, axis=0, return_index=True)
        keep = [k for k in range(len(uniq)) if uniq[k].tobytes() not in prev_keys]
        if not keep:
            break
        uniq = uniq[keep]
        first = first[keep]
        prev_keys = {row.tobytes() for row in layer.reshape(m, n * n)}
        gens.append(first // m + 1)
        parents.append(offset + first % m)
        offset += m
        layer = uniq.reshape(-1, n, n)
        layers.append(layer)
    matrices = np.concatenate(layers)
    lengths = np.concatenate([np.full(len(l), k) for k, l in enumerate(layers)])
    return WeylTable(
        rs,
        matrices,
        np.concatenate(parents),
        np.concatenate(gens),
        lengths,
    )


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """All Weyl group elements, identity first, breadth-first by length.

    Within a length layer elements are sorted lexicographically by their
    row-major matrix entries.  Raises ``CapExceeded`` if ``|W| > cap``.
    """
    return weyl_table(rs, cap).elements()


def longest_element(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylElement:
    t = weyl_table(rs, cap)
    return t.element(len(t) - 1)


def fundamental_weights(rs: RootSystem) -> list[WeightVec]:
    return [fundamental_weight(rs, i) for i in range(1, rs.rank + 1)]


def simple_roots(rs: RootSystem) -> list[RootVec]:
    return [simple_root(rs, i) for i in range(1, rs.rank + 1)]


def as_weight(rs: RootSystem, coords: Iterable[int]) -> WeightVec:
    v = WeightVec(tuple(coords))
    if len(v) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(v)}")
    return v
