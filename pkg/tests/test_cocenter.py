from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jinvariant.cocenter import (
    LatticeChoice,
    cocenter,
    degree_one_generators,
    lattice_subgroup,
    quotient_rank_mod_p,
    smith_normal_form,
    weight_class,
)
from jinvariant.errors import InvalidLatticeChoice
from jinvariant.liealg import RootSystem, WeightVec, act, enumerate_weyl, fundamental_weight, simple_root_as_weight

TYPES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + [("D", n) for n in range(3, 8)]


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


def _det(m):
    return int(sympy.Matrix(m).det())


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False))
def test_snf_against_sympy(rows, cols, rnd):
    m = [[rnd.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
    u, d, v = smith_normal_form(m)
    assert _matmul(_matmul(u, m), v) == d
    assert abs(_det(u)) == 1 and abs(_det(v)) == 1
    diag = [d[i][i] for i in range(min(rows, cols))]
    assert all(d[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    nonzero = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    ref = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    ref_diag = sorted(abs(int(ref[i, i])) for i in range(min(rows, cols)))
    assert sorted(diag) == ref_diag


@pytest.mark.parametrize("family,n", TYPES)
def test_order_is_cartan_determinant(family, n):
    rs = RootSystem(family, n)
    cg = cocenter(rs)
    assert cg.order == abs(_det(rs.cartan))
    expected = {"A": n + 1, "B": 2, "D": 4}[family]
    assert cg.order == expected
    for i in range(1, n + 1):
        assert weight_class(cg, simple_root_as_weight(rs, i)) == cg.zero


def test_examples():
    assert cocenter(RootSystem("A", 1)).factors == (2,)
    d4 = cocenter(RootSystem("D", 4))
    assert d4.factors == (2, 2)
    nontrivial = {d4.omega_class(i) for i in (1, 3, 4)}
    assert len(nontrivial) == 3 and d4.zero not in nontrivial
    assert d4.omega_class(2) == d4.zero
    assert weight_class(d4, WeightVec((1, 0, 1, 1))) == d4.zero
    d5 = cocenter(RootSystem("D", 5))
    assert d5.factors == (4,)
    assert d5.element_order(d5.omega_class(1)) == 2
    assert d5.element_order(d5.omega_class(4)) == 4 and d5.element_order(d5.omega_class(5)) == 4


@pytest.mark.parametrize("m", [2, 3])
def test_d_even_odd_structure(m):
    even = cocenter(RootSystem("D", 2 * m))
    assert even.factors == (2, 2)
    odd = cocenter(RootSystem("D", 2 * m + 1))
    assert odd.factors == (4,)
    n = 2 * m + 1
    assert odd.add(odd.omega_class(n), odd.omega_class(n)) == odd.omega_class(1)


def test_lattice_subgroups():
    d4 = cocenter(RootSystem("D", 4))
    assert lattice_subgroup(d4, LatticeChoice.ADJOINT) == {d4.zero}
    assert lattice_subgroup(d4, LatticeChoice.HALF_SPIN_PLUS) == {d4.zero, d4.omega_class(3)}
    assert len(lattice_subgroup(d4, LatticeChoice.SIMPLY_CONNECTED)) == 4
    d5 = cocenter(RootSystem("D", 5))
    assert lattice_subgroup(d5, LatticeChoice.SPECIAL_ORTHOGONAL) == {d5.zero, d5.omega_class(1)}
    with pytest.raises(InvalidLatticeChoice):
        lattice_subgroup(d5, LatticeChoice.HALF_SPIN_PLUS)
    with pytest.raises(InvalidLatticeChoice):
        lattice_subgroup(cocenter(RootSystem("A", 3)), LatticeChoice.HALF_SPIN_MINUS)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_quotient_ranks(n):
    cg = cocenter(RootSystem("D", n))
    assert quotient_rank_mod_p(cg, lattice_subgroup(cg, "adjoint"), 2) == (2 if n % 2 == 0 else 1)
    assert quotient_rank_mod_p(cg, lattice_subgroup(cg, "special_orthogonal"), 2) == 1
    assert quotient_rank_mod_p(cg, lattice_subgroup(cg, "simply_connected"), 2) == 0
    if n % 2 == 0:
        assert quotient_rank_mod_p(cg, lattice_subgroup(cg, "half_spin_plus"), 2) == 1
        assert degree_one_generators(cg, lattice_subgroup(cg, "adjoint")) == [1, n]
    else:
        assert degree_one_generators(cg, lattice_subgroup(cg, "adjoint")) == [n]


@pytest.mark.parametrize("family,n", [("D", 4), ("B", 3), ("A", 3), ("D", 5)])
def test_weight_class_weyl_invariant(family, n):
    rs = RootSystem(family, n)
    cg = cocenter(rs)
    rnd = random.Random(7)
    samples = [fundamental_weight(rs, i) for i in range(1, n + 1)]
    samples += [WeightVec(tuple(rnd.randint(-5, 5) for _ in range(n))) for _ in range(5)]
    for w in enumerate_weyl(rs):
        for v in samples:
            assert weight_class(cg, act(w, v)) == weight_class(cg, v)
