"""Steinberg weights ``rho_w`` and their cocenter classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cocenter import Element, cocenter, weight_class
from .liealg import (
    DEFAULT_CAP,
    RootSystem,
    WeightVec,
    WeylElement,
    _exact_div,
    _weyl_table,
    act,
    fundamental_weight,
    is_negative_root,
    simple_reflection,
    simple_root,
    weyl_table,
)


@dataclass(frozen=True)
class SteinbergEntry:
    """``rho_w`` is the sum of ``w^{-1}(omega_k)`` over the descent set, i.e.
    over those ``k`` with ``w^{-1}(alpha_k)`` negative."""

    w: WeylElement
    rho: WeightVec
    descent_set: tuple[int, ...]
    cls: Element


@dataclass(frozen=True)
class _SteinbergArrays:
    rho: np.ndarray  # (N, n)
    descents: np.ndarray  # (N, n) bool
    cls: np.ndarray  # (N, #factors)


@lru_cache(maxsize=8)
def _steinberg_arrays(rs: RootSystem) -> _SteinbergArrays:
    r = _weyl_table(rs).matrices.astype(np.int64)
    gadj, gdet = rs._gram_inverse
    gram = np.array(rs.gram, dtype=np.int64)
    rinv = _exact_div(gadj @ np.transpose(r, (0, 2, 1)) @ gram, gdet)
    # column k of rinv is w^{-1}(alpha_k); roots are sign-coherent
    descents = rinv.sum(axis=1) < 0
    cadj, cdet = rs._cartan_inverse
    cartan = np.array(rs.cartan, dtype=np.int64)
    winv = _exact_div(cartan @ rinv @ cadj, cdet)
    rho = np.einsum("nik,nk->ni", winv, descents.astype(np.int64))
    cg = cocenter(rs)
    proj = np.array(cg._projection, dtype=np.int64).reshape(len(cg.factors), rs.rank)
    cls = np.mod(rho @ proj.T, np.array(cg.factors, dtype=np.int64))
    return _SteinbergArrays(rho, descents, cls)


def steinberg_table(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[SteinbergEntry]:
    """One entry per Weyl group element, in Weyl enumeration order."""
    table = weyl_table(rs, cap)
    arr = _steinberg_arrays(rs)
    out = []
    for k in range(len(table)):
        out.append(
            SteinbergEntry(
                w=table.element(k),
                rho=WeightVec(tuple(arr.rho[k])),
                descent_set=tuple(int(i) + 1 for i in np.flatnonzero(arr.descents[k])),
                cls=tuple(int(x) for x in arr.cls[k]),
            )
        )
    return out


def steinberg_entry(rs: RootSystem, w: WeylElement) -> SteinbergEntry:
    """Entry for a single element, computed directly from its matrix."""
    winv = w.inverse()
    descents = tuple(
        k for k in range(1, rs.rank + 1) if is_negative_root(rs, act(winv, simple_root(rs, k)))
    )
    rho = WeightVec((0,) * rs.rank)
    for k in descents:
        rho = rho + act(winv, fundamental_weight(rs, k))
    return SteinbergEntry(w, rho, descents, weight_class(cocenter(rs), rho))


def special_elements(rs: RootSystem) -> list[SteinbergEntry]:
    """Entries for the simple reflections ``s_1 .. s_n``."""
    return [steinberg_entry(rs, simple_reflection(rs, i)) for i in range(1, rs.rank + 1)]
