"""Command-line interface: ``jinvariant <command> [options]``.

Exit status is 0 on success, 2 on usage errors and 1 when the input violates
a domain invariant (the invariant is named on stderr).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Callable, Sequence

from . import __version__
from .charmap import charmap_image, degree_one_generator_count
from .chow import (
    KacSignature,
    admissible_tuples,
    format_polynomial,
    involution_signature,
    kac_signature,
    poincare_polynomial,
)
from .classify import (
    TRIPLE_LABELS,
    InvolutionProfile,
    QFormProfile,
    Status,
    classify_involution,
    classify_qform,
    classify_triple,
    excluded_values,
)
from .cocenter import LatticeChoice, cocenter
from .errors import InconsistentProfile, JInvariantError
from .liealg import DEFAULT_CAP, RootSystem
from .serialize import SCHEMA_VERSION, dumps, kac_payload, to_dict
from .steinberg import steinberg_table
from .titsbounds import IndexProfile, degree_one_bounds


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _int_triple(text: str) -> tuple[int, int, int]:
    vals = _int_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return vals


def _fmt(t: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _word(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) or "e"


def _status_args(p: argparse.ArgumentParser, required: bool) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--anisotropic", dest="status", action="store_const", const=Status.ANISOTROPIC)
    g.add_argument("--isotropic", dest="status", action="store_const", const=Status.ISOTROPIC_NONHYPERBOLIC,
                   help="isotropic and not hyperbolic")
    g.add_argument("--hyperbolic", dest="status", action="store_const", const=Status.HYPERBOLIC)


def _group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", required=True, choices=["SO", "Spin", "SpinHalf", "PGO"])
    p.add_argument("--n", type=int, required=True,
                   help="table parameter: matrix size for SO/Spin, half of it for SpinHalf/PGO")


def _rs_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int, required=True)


def _rs(args) -> RootSystem:
    return RootSystem(args.family.upper(), args.rank)


# --- commands ------------------------------------------------------------------


def cmd_kac(args, out: Callable[[str], None]) -> None:
    sig = kac_signature(args.group, args.n)
    if args.json:
        out(dumps(kac_payload(sig)))
    else:
        out(f"{sig.label}  r={sig.r}  d={_fmt(sig.d)}  k={_fmt(sig.k)}")


def _signature_with_p(args) -> KacSignature:
    sig = kac_signature(args.group, args.n)
    if args.p != 2:
        print(f"warning: the signature table is for p = 2; using p = {args.p} experimentally", file=sys.stderr)
        sig = replace(sig, p=args.p)
    return sig


def cmd_admissible(args, out) -> None:
    sig = _signature_with_p(args)
    tuples = admissible_tuples(sig)
    if args.json:
        out(dumps({"group": sig.label, "tuples": [list(t) for t in tuples]}))
    else:
        out(f"# {sig.label}: {len(tuples)} admissible tuples")
        for t in tuples:
            out(_fmt(t))


def cmd_atlas(args, out) -> None:
    sig = kac_signature(args.group, args.n)
    tuples = admissible_tuples(sig)
    annotate = sig.group == "PGO" and sig.n == 4
    excluded = excluded_values() if annotate else frozenset()
    rows = []
    for t in tuples:
        row = {"J": list(t)}
        if annotate:
            row["occurs"] = t not in excluded
        rows.append(row)
    if args.json:
        out(dumps({"group": sig.label, "signature": kac_payload(sig), "rows": rows}))
        return
    out(f"# {sig.label}  r={sig.r}  d={_fmt(sig.d)}  k={_fmt(sig.k)}")
    for row in rows:
        tag = ""
        if annotate:
            tag = "  occurs" if row["occurs"] else "  excluded"
        out(_fmt(row["J"]) + tag)


def cmd_steinberg(args, out) -> None:
    rs = _rs(args)
    table = steinberg_table(rs, args.cap)
    if args.json:
        out(dumps({"root_system": str(rs), "entries": [to_dict(e) for e in table]}))
        return
    out("# word\tdescents\trho\tclass")
    for e in table:
        desc = "{" + ",".join(str(k) for k in e.descent_set) + "}"
        out(f"{_word(e.w.word)}\t{desc}\t{_fmt(e.rho.coords)}\t{_fmt(e.cls)}")


def cmd_charmap(args, out) -> None:
    rs = _rs(args)
    image = charmap_image(rs, LatticeChoice(args.lattice), args.p)
    s = degree_one_generator_count(rs, LatticeChoice(args.lattice), args.p)
    if args.json:
        out(dumps({"image": to_dict(image), "s": s}))
    else:
        out(f"{rs} {args.lattice} p={args.p}: image {image.format()}  s={s}")


def cmd_cocenter(args, out) -> None:
    cg = cocenter(_rs(args))
    if args.json:
        out(dumps(to_dict(cg)))
        return
    group = " x ".join(f"Z/{f}" for f in cg.factors) or "trivial"
    out(f"{cg.rs}: {group}")
    for i, g in enumerate(cg.generators, 1):
        out(f"omega_{i}\t{_fmt(g)}")


def _bounds_signature(group: str, rank: int) -> KacSignature:
    if group == "PGO":
        return involution_signature(rank)
    if group == "SO":
        return kac_signature("SO", 2 * rank)
    return kac_signature("SpinHalf", rank)


def cmd_bounds(args, out) -> None:
    profile = IndexProfile(args.rank, *args.ii, validate=not args.no_validate)
    sig = _bounds_signature(args.group, args.rank)
    res = degree_one_bounds(profile, sig)
    if args.json:
        out(dumps({"signature": sig.label, "bounds": to_dict(res)}))
        return
    out(f"# {sig.label}  profile ii=(A:{profile.ii_A}, +:{profile.ii_plus}, -:{profile.ii_minus})"
        f"  common index {res.common_index}")
    for pos, (lo, hi), k in zip(res.positions, res.intervals, res.caps):
        out(f"j_{pos + 1} in [{lo},{hi}]  (k={k})")


def cmd_poincare(args, out) -> None:
    sig = kac_signature(args.group, args.n)
    coeffs = poincare_polynomial(sig, args.J)
    if args.json:
        out(dumps({"group": sig.label, "J": list(args.J), "coefficients": coeffs}))
    else:
        out(format_polynomial(coeffs))


def cmd_classify_qf(args, out) -> None:
    q = QFormProfile(args.dim, args.ii_s, args.status, args.pattern)
    row = classify_qform(q)
    if args.json:
        out(dumps(to_dict(row)))
        return
    cols = [f"J={_fmt(row.J)}"]
    if row.vishik_J is not None:
        cols.append("J_v={" + ",".join(map(str, row.vishik_J)) + "}")
    if row.ii is not None:
        cols.append(f"ii_S={row.ii_S} ii={row.ii}")
    if row.splitting_pattern is not None:
        cols.append(f"pattern={_fmt(row.splitting_pattern)}")
    if row.description:
        cols.append(row.description)
    out("  ".join(cols))


def cmd_classify_inv(args, out) -> None:
    p = InvolutionProfile(args.degree, *args.ii, status=args.status, validate=not args.no_validate)
    row = classify_involution(p)
    if args.json:
        out(dumps(to_dict(row)))
    else:
        out(f"J={_fmt(row.J)}" + (f"  {row.description}" if row.description else ""))


def relabel_triple(ii: Sequence[int], designate: str) -> tuple[tuple[int, int, int], str, dict[str, str]]:
    """Sort a triple by index; returns sorted valuations, the designated label
    in sorted position, and the map input label -> sorted label."""
    order = sorted(range(3), key=lambda i: (ii[i], i))
    sorted_ii = tuple(ii[i] for i in order)
    mapping = {TRIPLE_LABELS[src]: TRIPLE_LABELS[dst] for dst, src in enumerate(order)}
    return sorted_ii, mapping[designate], mapping


def cmd_triple(args, out) -> None:
    sorted_ii, designated, mapping = relabel_triple(args.ii, args.designate)
    p = InvolutionProfile(8, *sorted_ii, status=args.status, designated=designated)
    res = classify_triple(p)
    by_sorted = res.by_label()
    rows = [
        {"label": lab, "ii": args.ii[i], "J": list(by_sorted[mapping[lab]]), "designated": lab == args.designate}
        for i, lab in enumerate(TRIPLE_LABELS)
    ]
    if args.json:
        out(dumps({"status": res.status.value, "rows": rows}))
        return
    for r in rows:
        mark = " *" if r["designated"] else ""
        out(f"{r['label']}  ii={r['ii']}  J={_fmt(r['J'])}{mark}")


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jinvariant", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"jinvariant {__version__} (JSON schema {SCHEMA_VERSION})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("kac", cmd_kac, "Kac signature (r, d, k) at p = 2")
    _group_args(p)

    p = add("admissible", cmd_admissible, "admissible J-tuples")
    _group_args(p)
    p.add_argument("--p", type=int, default=2, help="prime (experimental; the table is for 2)")

    p = add("atlas", cmd_atlas, "admissible tuples, annotated with occurrence for PGO_8")
    _group_args(p)

    p = add("steinberg", cmd_steinberg, "Steinberg weights for every Weyl group element")
    _rs_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximal Weyl group order")

    p = add("charmap", cmd_charmap, "image of the degree-one characteristic map")
    _rs_args(p)
    p.add_argument("--lattice", default="adjoint", choices=[c.value for c in LatticeChoice])
    p.add_argument("--p", type=int, default=2)

    p = add("cocenter", cmd_cocenter, "weight lattice modulo root lattice")
    _rs_args(p)

    p = add("bounds", cmd_bounds, "bounds on the degree-one entries of J")
    p.add_argument("--rank", type=int, required=True, help="rank n of type D_n")
    p.add_argument("--ii", type=_int_triple, required=True, help="ii_A,ii_plus,ii_minus")
    p.add_argument("--group", default="PGO", choices=["PGO", "SO", "SpinHalf"])
    p.add_argument("--no-validate", action="store_true", help="skip the Brauer-group relations")

    p = add("poincare", cmd_poincare, "Poincare polynomial of the upper motive")
    _group_args(p)
    p.add_argument("--J", type=_int_list, required=True)

    p = add("classify-qf", cmd_classify_qf, "J-invariant of a quadratic form")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--ii-s", type=int, required=True, help="2-adic valuation of the Clifford index")
    p.add_argument("--pattern", type=_int_list, default=None, help="splitting pattern")
    _status_args(p, required=True)

    p = add("classify-inv", cmd_classify_inv, "J-invariant of an algebra with involution (degree 4, 6)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ii", type=_int_triple, required=True, help="ii_A,ii_plus,ii_minus")
    p.add_argument("--no-validate", action="store_true")
    _status_args(p, required=False)

    p = add("triple", cmd_triple, "J-invariants of a trialitarian triple")
    p.add_argument("--ii", type=_int_triple, required=True, help="indices of A,B,C (any order)")
    p.add_argument("--designate", default="A", choices=list(TRIPLE_LABELS))
    _status_args(p, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    lines: list[str] = []
    try:
        args.func(args, lines.append)
    except InconsistentProfile as exc:
        print(f"error: inconsistent profile: {exc}", file=sys.stderr)
        return 1
    except JInvariantError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
