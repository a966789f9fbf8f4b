import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Poly, symbols

from asai_gamma.field_tower import (
    TowerError,
    build_tower,
    is_primitive,
    smallest_primitive_poly,
)

x = symbols("x")


def _brute_order(modulus, p):
    """Multiplicative order of x by repeated multiplication (independent of the library)."""
    d = len(modulus) - 1
    cur = [0, 1] + [0] * (d - 2) if d > 1 else [(-modulus[0]) % p]
    one = [1] + [0] * (d - 1)
    k = 1
    while cur != one:
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [(v - top * m) % p for v, m in zip(nxt, modulus[:-1])]
        cur = nxt
        k += 1
        if k > p**d:
            return None
    return k


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 4), (2, 6), (5, 2)])
def test_smallest_primitive_is_lex_first(p, d):
    mod = smallest_primitive_poly(p, d)
    assert mod[-1] == 1 and len(mod) == d + 1
    assert _brute_order(list(mod), p) == p**d - 1
    # nothing lexicographically smaller is primitive
    for lower in itertools.product(range(p), repeat=d):
        cand = tuple(lower) + (1,)
        if cand >= mod:
            break
        if cand[0] == 0:
            continue
        assert _brute_order(list(cand), p) != p**d - 1


def test_frozen_moduli():
    assert build_tower(2, 1, 2).modulus == (1, 0, 0, 1, 1)
    assert build_tower(2, 1, 3).degree == 6
    assert Poly(list(reversed(build_tower(3, 1, 2).modulus)), x, domain=GF(3)).is_irreducible


def test_is_primitive_rejects_reducible():
    assert not is_primitive((1, 0, 1), 2)  # x^2 + 1 = (x + 1)^2 over F_2
    assert is_primitive((1, 1, 1), 2)


@pytest.mark.parametrize("args", [(4, 1, 2), (2, 0, 2), (2, 1, 4), (2, 1, 1)])
def test_bad_parameters(args):
    with pytest.raises(TowerError):
        build_tower(*args)


def test_budget_guard():
    with pytest.raises(TowerError):
        build_tower(3, 1, 3, budget=500)


def test_z_override_must_avoid_F(t22):
    with pytest.raises(TowerError):
        build_tower(2, 1, 2, z_log=0)
    assert build_tower(2, 1, 2, z_log=10).z_log == 10


def test_defaults(t22, t32, t23):
    assert (t22.q, t22.Q, t22.size) == (2, 4, 16)
    assert (t22.z_log, t32.z_log, t23.z_log) == (5, 10, 21)


def test_frobenius_of_generator(t22):
    g = t22.gen
    assert t22.frob(g, 1) == t22.pow(g, 2)
    assert t22.frob(g, 2) == t22.pow(g, 4)
    assert t22.frob(g, 4) == g


def _sympy_mul(tw, a, b):
    pa = Poly(list(reversed(tw.to_vector(a))), x, domain=GF(tw.p))
    pb = Poly(list(reversed(tw.to_vector(b))), x, domain=GF(tw.p))
    m = Poly(list(reversed(tw.modulus)), x, domain=GF(tw.p))
    r = (pa * pb).rem(m)
    coeffs = [int(c) % tw.p for c in reversed(r.all_coeffs())]
    return tw.from_vector(coeffs)


TOWERS = [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(TOWERS), st.data())
def test_mul_matches_polynomial_arithmetic(args, data):
    tw = build_tower(*args)
    a = data.draw(st.integers(0, tw.order))
    b = data.draw(st.integers(0, tw.order))
    assert tw.mul(a, b) == _sympy_mul(tw, a, b)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(TOWERS), st.data())
def test_add_matches_vector_addition(args, data):
    tw = build_tower(*args)
    a = data.draw(st.integers(0, tw.order))
    b = data.draw(st.integers(0, tw.order))
    va, vb = tw.to_vector(a), tw.to_vector(b)
    assert tw.to_vector(tw.add(a, b)) == [(u + v) % tw.p for u, v in zip(va, vb)]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(TOWERS), st.data())
def test_frobenius_is_additive_and_multiplicative(args, data):
    tw = build_tower(*args)
    a = data.draw(st.integers(0, tw.order))
    b = data.draw(st.integers(0, tw.order))
    assert tw.frob(tw.add(a, b)) == tw.add(tw.frob(a), tw.frob(b))
    assert tw.frob(tw.mul(a, b)) == tw.mul(tw.frob(a), tw.frob(b))
    assert tw.frob(a, 2 * tw.n) == a


def test_subfield_membership(t32):
    E = t32.elements("E")
    F = t32.elements("F")
    assert len(E) == 9 and len(F) == 3
    assert all(t32.pow(e, 9) == e for e in E)
    assert all(t32.pow(c, 3) == c for c in F)


@pytest.mark.parametrize("args", TOWERS)
def test_additive_characters(args):
    tw = build_tower(*args)
    E, F = tw.elements("E"), tw.elements("F")
    assert abs(sum(tw.psi_E(e) for e in E)) < 1e-10
    assert abs(sum(tw.psi_F(c) for c in F)) < 1e-10
    for e in E:
        assert abs(tw.psi_E(tw.frob(e)) * tw.psi_E(e) - 1) < 1e-12
        assert abs(tw.psi_E(e, -1) - tw.psi_E(e).conjugate()) < 1e-12
    for c in F:
        assert abs(tw.psi_E(c) - 1) < 1e-12
    # psi_E is nontrivial
    assert any(abs(tw.psi_E(e) - 1) > 1e-6 for e in E)


def test_psi_F_over_F4_uses_absolute_trace():
    tw = build_tower(2, 2, 2)
    F = tw.elements("F")
    values = sorted(round(tw.psi_F(c).real) for c in F)
    assert values == [-1, -1, 1, 1]


def test_level_tables_consistent(t32):
    for lvl in ("F", "E"):
        tab = t32.tables[lvl]
        for a in range(tab.size):
            for b in range(tab.size):
                ta, tb = tab.to_tower[a], tab.to_tower[b]
                assert tab.to_tower[tab.add[a, b]] == t32.add(ta, tb)
                assert tab.to_tower[tab.mul[a, b]] == t32.mul(ta, tb)


def test_regular_characters(t22):
    regular = [k for k in range(t22.order) if t22.is_regular(k)]
    # k is regular iff k(Q - 1) != 0 mod Q^2 - 1, i.e. 5 does not divide k
    assert regular == [k for k in range(15) if k % 5]
    assert t22.theta_orbit(1) == [1, 4]
