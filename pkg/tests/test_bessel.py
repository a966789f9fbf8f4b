import numpy as np
import pytest

from asai_gamma import bessel as bs
from asai_gamma import cuspidal as cu
from asai_gamma.matgroup import identity


def test_exhaustive_suite_q2_n2(ctx22):
    for rep in cu.list_cuspidal(ctx22.tower):
        r = bs.verify_bessel_suite(rep, sample_size=None, ctx=ctx22)
        assert r["ok"], r
        assert r["triples"] == 4 * 180 * 4


@pytest.mark.parametrize("name", ["ctx32", "ctx23"])
def test_sampled_suite(request, name):
    ctx = request.getfixturevalue(name)
    for rep in cu.list_cuspidal(ctx.tower)[:6]:
        r = bs.verify_bessel_suite(rep, sample_size=1000, seed=7, ctx=ctx)
        assert r["ok"], r
        assert r["triples"] >= 1000


def test_scalar_matches_table(ctx32):
    rep = cu.list_cuspidal(ctx32.tower)[2]
    assert bs.check_scalar_against_table(rep, range(0, 5760, 577), ctx32) < 1e-10


def test_bessel_fn_memo(ctx22):
    rep = cu.list_cuspidal(ctx22.tower)[0]
    B = bs.BesselFn(rep)
    one = identity(2)
    assert abs(B(one) - 1) < 1e-12
    assert one in B.cache


def test_inverse_identity_scalar(t22, ctx22):
    rep = cu.list_cuspidal(t22)[1]
    for i in (3, 50, 177):
        b_inv, b_conj, b_tilde = bs.bessel_inverse_identity(rep, ctx22.mat(i))
        assert abs(b_inv - b_conj) < 1e-10
        assert abs(b_tilde - b_conj) < 1e-10


def test_sign_flip_is_conjugate_of_contragredient(ctx32):
    rep = cu.list_cuspidal(ctx32.tower)[4]
    a = bs.bessel_table(rep, ctx32, sign=-1)
    b = bs.bessel_table(cu.contragredient(rep), ctx32, sign=1).conj()
    assert np.allclose(a, b, atol=1e-10)


def test_normalisation_oracle(ctx22):
    # sum over G of |B|^2 = |G| / dim  (Schur orthogonality for a matrix coefficient)
    for rep in cu.list_cuspidal(ctx22.tower):
        B = bs.bessel_table(rep, ctx22)
        assert abs(np.sum(np.abs(B) ** 2) - len(B) / rep.dim) < 1e-8
