from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jinvariant.charmap import Subspace, charmap_image, cocenter_rank, degree_one_generator_count, rref_mod_p
from jinvariant.cocenter import LatticeChoice
from jinvariant.liealg import RootSystem


def brute_span(vectors, p, n):
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % p for i in range(n)))
    return out


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 4),
    st.lists(st.lists(st.integers(-7, 7), min_size=4, max_size=4), min_size=0, max_size=4),
)
def test_rref_spans_the_same_space(p, n, rows):
    rows = [r[:n] for r in rows]
    basis = rref_mod_p(rows, p, n)
    assert brute_span([list(b) for b in basis], p, n) == brute_span(rows, p, n)
    pivots = [next(i for i, x in enumerate(b) if x) for b in basis]
    assert pivots == sorted(set(pivots))
    for b, piv in zip(basis, pivots):
        assert b[piv] == 1
        assert all(other[piv] == 0 for other in basis if other is not b)


def test_d4_examples():
    d4 = RootSystem("D", 4)
    adj = charmap_image(d4, LatticeChoice.ADJOINT)
    assert adj == Subspace.span([(0, 1, 0, 0), (1, 0, 1, 1)], 4, 2)
    assert adj.format() == "span{h1+h3+h4, h2}"
    hs = charmap_image(d4, LatticeChoice.HALF_SPIN_PLUS)
    assert hs == Subspace.span([(0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 1)], 4, 2)
    assert degree_one_generator_count(d4, LatticeChoice.ADJOINT) == 2
    assert degree_one_generator_count(RootSystem("D", 5), LatticeChoice.ADJOINT) == 1


@pytest.mark.parametrize("family,n", [("A", 1), ("A", 4), ("B", 3), ("D", 4), ("D", 6)])
def test_simply_connected_is_everything(family, n):
    rs = RootSystem(family, n)
    assert charmap_image(rs, LatticeChoice.SIMPLY_CONNECTED).dim == n
    assert degree_one_generator_count(rs, LatticeChoice.SIMPLY_CONNECTED) == 0


def _choices(rs):
    out = [LatticeChoice.ADJOINT, LatticeChoice.SIMPLY_CONNECTED]
    if rs.family in "BD":
        out.append(LatticeChoice.SPECIAL_ORTHOGONAL)
    if rs.family == "D" and rs.rank % 2 == 0:
        out += [LatticeChoice.HALF_SPIN_PLUS, LatticeChoice.HALF_SPIN_MINUS]
    return out


SYSTEMS = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + [("D", n) for n in range(3, 7)]


@pytest.mark.parametrize("family,n", SYSTEMS)
@pytest.mark.parametrize("p", [2, 3])
def test_rank_nullity_and_monotonicity(family, n, p):
    rs = RootSystem(family, n)
    adj = charmap_image(rs, LatticeChoice.ADJOINT, p)
    sc = charmap_image(rs, LatticeChoice.SIMPLY_CONNECTED, p)
    for choice in _choices(rs):
        img = charmap_image(rs, choice, p)
        assert img.dim + cocenter_rank(rs, choice, p) == n
        assert adj.issubspace(img) and img.issubspace(sc)
