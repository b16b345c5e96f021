from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jinvariant.errors import CapExceeded, UnsupportedRootSystem
from jinvariant.liealg import (
    RootSystem,
    RootVec,
    WeightVec,
    act,
    cartan_matrix,
    enumerate_weyl,
    fundamental_weight,
    identity,
    is_negative_root,
    longest_element,
    parse_root_system,
    reflect,
    simple_reflection,
    simple_root,
    simple_root_as_weight,
    weyl_table,
    word_to_element,
)


def euclidean_simple_roots(family: str, n: int) -> list[list[Fraction]]:
    """Standard models: A_n in R^{n+1}, B_n and D_n in R^n."""
    dim = n + 1 if family == "A" else n

    def e(i):
        return [Fraction(int(k == i)) for k in range(dim)]

    def sub(u, v):
        return [a - b for a, b in zip(u, v)]

    def add(u, v):
        return [a + b for a, b in zip(u, v)]

    if family == "A":
        return [sub(e(i), e(i + 1)) for i in range(n)]
    roots = [sub(e(i), e(i + 1)) for i in range(n - 1)]
    roots.append(e(n - 1) if family == "B" else add(e(n - 2), e(n - 1)))
    return roots


def euclidean_cartan(family: str, n: int):
    r = euclidean_simple_roots(family, n)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    return tuple(tuple(int(2 * dot(r[i], r[j]) / dot(r[i], r[i])) for j in range(n)) for i in range(n))


ALL_SMALL = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 7)] + [("D", n) for n in range(3, 7)]


@pytest.mark.parametrize("family,n", ALL_SMALL)
def test_cartan_matches_euclidean_model(family, n):
    assert cartan_matrix(RootSystem(family, n)) == euclidean_cartan(family, n)


def test_cartan_a1():
    assert cartan_matrix(RootSystem("A", 1)) == ((2,),)


def test_cartan_d4_mod_2():
    c = cartan_matrix(RootSystem("D", 4))
    assert [[x % 2 for x in row] for row in c] == [[0, 1, 0, 0], [1, 0, 1, 1], [0, 1, 0, 0], [0, 1, 0, 0]]


def test_cartan_d5_symmetric_with_row_sums():
    c = np.array(cartan_matrix(RootSystem("D", 5)))
    assert (c == c.T).all()
    assert list(c.sum(axis=1)) == [1, 0, -1, 1, 1]
    assert (np.diag(c) == 2).all() and (c[~np.eye(5, dtype=bool)] <= 0).all()


@pytest.mark.parametrize("label", ["C3", "E6", "F4", "G2", "D2", "B1", "A0", "x"])
def test_unsupported(label):
    with pytest.raises(UnsupportedRootSystem):
        parse_root_system(label)


def test_simple_root_as_weight():
    assert simple_root_as_weight(RootSystem("A", 1), 1) == WeightVec((2,))
    d4 = RootSystem("D", 4)
    assert simple_root_as_weight(d4, 2) == WeightVec((-1, 2, -1, -1))
    assert simple_root_as_weight(d4, 1) == WeightVec((2, -1, 0, 0))
    with pytest.raises(IndexError):
        simple_root_as_weight(d4, 5)


def test_reflect_examples():
    d4 = RootSystem("D", 4)
    for i in range(1, 5):
        w = fundamental_weight(d4, i)
        assert reflect(d4, i, w) == w - simple_root_as_weight(d4, i)
        for j in range(1, 5):
            if j != i:
                assert reflect(d4, i, fundamental_weight(d4, j)) == fundamental_weight(d4, j)
    assert reflect(d4, 2, fundamental_weight(d4, 2)) == WeightVec((1, -1, 1, 1))


@pytest.mark.parametrize("family,n,order", [("A", 1, 2), ("D", 4, 192), ("B", 3, 48), ("A", 3, 24), ("D", 3, 24)])
def test_enumeration_sizes(family, n, order):
    els = enumerate_weyl(RootSystem(family, n))
    assert len(els) == order
    assert len(set(els)) == order
    assert els[0].is_identity()


def test_enumeration_order_is_bfs_then_lexicographic():
    rs = RootSystem("B", 3)
    table = weyl_table(rs)
    assert list(table.lengths) == sorted(table.lengths)
    flat = [tuple(int(x) for x in m.reshape(-1)) for m in table.matrices]
    for length in set(table.lengths.tolist()):
        rows = [flat[k] for k in range(len(flat)) if table.lengths[k] == length]
        assert rows == sorted(rows)


def test_words_reproduce_matrices_and_are_reduced():
    rs = RootSystem("D", 4)
    table = weyl_table(rs)
    for k in range(len(table)):
        w = table.element(k)
        assert word_to_element(rs, w.word).matrix == w.matrix
        assert len(w.word) == table.lengths[k]
        # length = number of positive roots sent negative by w^{-1}, via inversions
        assert len(w.word) == _inversions(w)


def _inversions(w):
    rs = w.rs
    # positive roots from the table: images of simple roots under W, kept if positive
    roots = set()
    for el in enumerate_weyl(rs):
        for i in range(1, rs.rank + 1):
            v = act(el, simple_root(rs, i))
            if not is_negative_root(rs, v):
                roots.add(v)
    return sum(is_negative_root(rs, act(w, r)) for r in roots)


def test_cap_exceeded_reports_order():
    with pytest.raises(CapExceeded) as exc:
        enumerate_weyl(RootSystem("D", 4), cap=100)
    assert exc.value.order == 192


def test_act_examples():
    d4 = RootSystem("D", 4)
    v = WeightVec((3, -1, 2, 0))
    assert act(identity(d4), v) == v
    assert act(simple_reflection(d4, 1), simple_root(d4, 1)) == RootVec((-1, 0, 0, 0))
    w0 = longest_element(d4)
    for k in range(1, 5):
        assert act(w0, fundamental_weight(d4, k)) == -fundamental_weight(d4, k)
    with pytest.raises(ValueError):
        act(w0, WeightVec((1, 2)))


def test_negative_root_examples():
    d4 = RootSystem("D", 4)
    assert is_negative_root(d4, -simple_root(d4, 1))
    assert not is_negative_root(d4, RootVec((1, 1, 0, 0)))
    assert act(simple_reflection(d4, 2), simple_root(d4, 1)) == RootVec((1, 1, 0, 0))


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("D", 4), ("D", 5)])
def test_action_is_a_homomorphism_and_inverse(family, n):
    rs = RootSystem(family, n)
    els = enumerate_weyl(rs)[:: max(1, len(enumerate_weyl(rs)) // 40)]
    v = WeightVec(tuple(range(1, n + 1)))
    for a in els:
        assert (a * a.inverse()).is_identity()
        for b in els[:8]:
            assert act(a * b, v) == act(a, act(b, v))


@pytest.mark.parametrize("family,n", [("A", 4), ("B", 4), ("D", 5)])
def test_simple_reflections_have_order_two(family, n):
    rs = RootSystem(family, n)
    for i in range(1, n + 1):
        s = simple_reflection(rs, i)
        assert not s.is_identity() and (s * s).is_identity()


def test_roots_are_sign_coherent():
    rs = RootSystem("B", 4)
    for w in enumerate_weyl(rs):
        for i in range(1, 5):
            c = act(w, simple_root(rs, i)).coords
            assert all(x >= 0 for x in c) or all(x <= 0 for x in c)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(ALL_SMALL),
    st.integers(min_value=1, max_value=6),
    st.lists(st.integers(-20, 20), min_size=7, max_size=7),
)
def test_reflection_involutive(fam_rank, i, coords):
    family, n = fam_rank
    rs = RootSystem(family, n)
    i = (i - 1) % n + 1
    v = WeightVec(tuple(coords[:n]))
    assert reflect(rs, i, reflect(rs, i, v)) == v
    if v[i - 1] == 0:
        assert reflect(rs, i, v) == v


@pytest.mark.parametrize("family,n", [("A", n) for n in range(1, 6)] + [("B", n) for n in range(2, 5)] + [("D", n) for n in range(3, 6)])
def test_weyl_order_formulas(family, n):
    expected = {"A": math.factorial(n + 1), "B": 2**n * math.factorial(n), "D": 2 ** (n - 1) * math.factorial(n)}
    assert len(weyl_table(RootSystem(family, n))) == expected[family]
