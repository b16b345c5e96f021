"""JSON encoding of result types.

``to_dict`` produces plain JSON-compatible data; ``from_dict(cls, data)``
inverts it, so ``from_dict(type(x), json.loads(dumps(x))) == x``.
Output is compact and deterministic (insertion-ordered keys).
"""

from __future__ import annotations

import json
from typing import Any, Callable

from .charmap import Subspace
from .chow import KacSignature
from .classify import ClassificationRow, InvolutionProfile, QFormProfile, Status, TripleClassification
from .cocenter import CocenterGroup, cocenter
from .liealg import RootSystem, WeightVec, WeylElement
from .steinberg import SteinbergEntry
from .titsbounds import BoundsResult, IndexProfile

SCHEMA_VERSION = 1


def _tup(x):
    return None if x is None else tuple(x)


def _rs(rs: RootSystem) -> dict:
    return {"family": rs.family, "rank": rs.rank}


def _rs_from(d: dict) -> RootSystem:
    return RootSystem(d["family"], d["rank"])


def _weyl(w: WeylElement) -> dict:
    return {
        "root_system": _rs(w.rs),
        "matrix": [list(r) for r in w.matrix],
        "word": None if w.word is None else list(w.word),
    }


def _weyl_from(d: dict) -> WeylElement:
    return WeylElement(_rs_from(d["root_system"]), tuple(tuple(r) for r in d["matrix"]), _tup(d["word"]))


def kac_payload(sig: KacSignature) -> dict:
    """Short form used by ``kac --json``."""
    return {"r": sig.r, "d": list(sig.d), "k": list(sig.k)}


_ENCODE: dict[type, Callable[[Any], dict]] = {
    RootSystem: _rs,
    WeylElement: _weyl,
    KacSignature: lambda s: {
        "group": s.group,
        "n": s.n,
        "p": s.p,
        "r": s.r,
        "d": list(s.d),
        "k": list(s.k),
        "constraint_start": s.constraint_start,
    },
    Subspace: lambda s: {"n": s.n, "p": s.p, "basis": [list(b) for b in s.basis]},
    CocenterGroup: lambda c: {
        "root_system": _rs(c.rs),
        "factors": list(c.factors),
        "generators": [list(g) for g in c.generators],
    },
    SteinbergEntry: lambda e: {
        "w": _weyl(e.w),
        "descent_set": list(e.descent_set),
        "rho": list(e.rho.coords),
        "cls": list(e.cls),
    },
    IndexProfile: lambda p: {
        "rank": p.rank,
        "ii_A": p.ii_A,
        "ii_plus": p.ii_plus,
        "ii_minus": p.ii_minus,
        "validate": p.validate,
    },
    BoundsResult: lambda b: {
        "positions": [x + 1 for x in b.positions],
        "intervals": [list(iv) for iv in b.intervals],
        "caps": list(b.caps),
        "common_index": b.common_index,
    },
    QFormProfile: lambda q: {
        "dim": q.dim,
        "ii_S": q.ii_S,
        "status": q.status.value,
        "splitting_pattern": None if q.splitting_pattern is None else list(q.splitting_pattern),
    },
    InvolutionProfile: lambda p: {
        "degree": p.degree,
        "ii_A": p.ii_A,
        "ii_plus": p.ii_plus,
        "ii_minus": p.ii_minus,
        "status": None if p.status is None else p.status.value,
        "designated": p.designated,
        "validate": p.validate,
    },
    ClassificationRow: lambda r: {
        "J": list(r.J),
        "vishik_J": None if r.vishik_J is None else list(r.vishik_J),
        "description": r.description,
        "splitting_pattern": None if r.splitting_pattern is None else list(r.splitting_pattern),
        "ii_S": r.ii_S,
        "ii": r.ii,
    },
    TripleClassification: lambda t: {
        "ii": list(t.ii),
        "status": t.status.value,
        "designated": t.designated,
        "J": {k: list(v) for k, v in t.by_label().items()},
    },
}

_DECODE: dict[type, Callable[[dict], Any]] = {
    RootSystem: _rs_from,
    WeylElement: _weyl_from,
    KacSignature: lambda d: KacSignature(
        d["group"], d["n"], tuple(d["d"]), tuple(d["k"]), d["p"], d["constraint_start"]
    ),
    Subspace: lambda d: Subspace(d["n"], d["p"], tuple(tuple(b) for b in d["basis"])),
    CocenterGroup: lambda d: _cocenter_from(d),
    SteinbergEntry: lambda d: SteinbergEntry(
        _weyl_from(d["w"]), WeightVec(tuple(d["rho"])), tuple(d["descent_set"]), tuple(d["cls"])
    ),
    IndexProfile: lambda d: IndexProfile(d["rank"], d["ii_A"], d["ii_plus"], d["ii_minus"], d["validate"]),
    BoundsResult: lambda d: BoundsResult(
        tuple(x - 1 for x in d["positions"]),
        tuple(tuple(iv) for iv in d["intervals"]),
        tuple(d["caps"]),
        d["common_index"],
    ),
    QFormProfile: lambda d: QFormProfile(d["dim"], d["ii_S"], Status(d["status"]), _tup(d["splitting_pattern"])),
    InvolutionProfile: lambda d: InvolutionProfile(
        d["degree"],
        d["ii_A"],
        d["ii_plus"],
        d["ii_minus"],
        None if d["status"] is None else Status(d["status"]),
        d["designated"],
        d["validate"],
    ),
    ClassificationRow: lambda d: ClassificationRow(
        tuple(d["J"]), _tup(d["vishik_J"]), d["description"], _tup(d["splitting_pattern"]), d["ii_S"], d["ii"]
    ),
    TripleClassification: lambda d: TripleClassification(
        tuple(d["ii"]),
        Status(d["status"]),
        d["designated"],
        tuple(d["J"]["A"]),
        tuple(d["J"]["B"]),
        tuple(d["J"]["C"]),
    ),
}


def _cocenter_from(d: dict) -> CocenterGroup:
    cg = cocenter(_rs_from(d["root_system"]))
    if list(cg.factors) != d["factors"] or [list(g) for g in cg.generators] != d["generators"]:
        raise ValueError("cocenter data does not match its root system")
    return cg


def to_dict(obj) -> dict:
    try:
        enc = _ENCODE[type(obj)]
    except KeyError:
        raise TypeError(f"no JSON encoding for {type(obj).__name__}") from None
    return enc(obj)


def from_dict(cls: type, data: dict):
    try:
        dec = _DECODE[cls]
    except KeyError:
        raise TypeError(f"no JSON decoding for {cls.__name__}") from None
    return dec(data)


def dumps(data) -> str:
    """Compact deterministic JSON; result objects are encoded first."""
    if type(data) in _ENCODE:
        data = to_dict(data)
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)
