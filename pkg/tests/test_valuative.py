from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valdim import (DimCertificate, IndicatorPoly, LatticeTerm, RingPresentation, V, ValCert, build_chain,
                    check_chain, decompose_witness, leq, lex_desc, search_val_cert, subring_presentation,
                    val_oracle, vdim_to_Vdim, verify_val_cert)
from valdim.valuative import VPRIME, VR, r_is_minimal

from conftest import COLLAPSE_FACTOR, collapse_cert


def fr(R, num, den="1"):
    return R.frac(R.element(num), R.element(den))


def test_verify_zero_left(qt):
    zero = fr(qt, "0")
    c = ValCert(VPRIME, [zero], [1], [qt.frac(qt.var("t"))], [IndicatorPoly(qt, 2)])
    assert verify_val_cert(c, qt).ok


def test_verify_t_and_inverse(qt):
    t, inv = fr(qt, "t"), fr(qt, "1", "t")
    # 1 = t * 0 + (1/t) * t
    c = ValCert(VPRIME, [], [], [t, inv], [IndicatorPoly(qt, 2), IndicatorPoly.var(qt, 2, 0)])
    assert verify_val_cert(c, qt).ok
    bad = ValCert(VPRIME, [], [], [t], [IndicatorPoly(qt, 1)])
    v = verify_val_cert(bad, qt)
    assert not v.ok and "identity fails" in v.reason


def test_verify_shape_errors(qt):
    t = fr(qt, "t")
    over = ValCert(VPRIME, [t], [1], [t], [IndicatorPoly.var(qt, 2, 1) ** 2])
    assert "exceeds" in verify_val_cert(over, qt).reason
    assert not verify_val_cert(ValCert(VPRIME, [], [], [t], []), qt).ok
    with pytest.raises(ValueError):
        verify_val_cert(ValCert(VPRIME, [t], [-1], [t], [IndicatorPoly(qt, 2)]), qt)
    with pytest.raises(ValueError):
        verify_val_cert(ValCert(VPRIME, [], [], [], []), RingPresentation(["x", "y"], ["x*y"]))


def test_vr_form(qt):
    t, t2 = fr(qt, "t"), fr(qt, "t^2")
    # t^2 = X with no Y on the right
    good = ValCert(VR, [t], [2], [t2], [IndicatorPoly.var(qt, 2, 0)])
    assert verify_val_cert(good, qt).ok
    # Y^2 itself is not strictly below 2 even though the identity holds
    same = ValCert(VR, [t], [2], [t2], [IndicatorPoly.var(qt, 2, 1) ** 2])
    assert "strictly below" in verify_val_cert(same, qt).reason
    # lower in one coordinate is enough
    a, b = fr(qt, "t"), fr(qt, "t")
    mixed = ValCert(VR, [a, b], [1, 1], [t2], [IndicatorPoly.var(qt, 3, 0)])
    assert verify_val_cert(mixed, qt).ok


def test_search_examples(qt):
    t, inv = fr(qt, "t"), fr(qt, "1", "t")
    c = search_val_cert(qt, [t], [inv])
    assert c is not None and c.exps == (1,)
    assert verify_val_cert(c, qt).ok
    assert search_val_cert(qt, [], [t], 3, 3) is None
    c = search_val_cert(qt, [fr(qt, "0")], [t])
    assert c.exps == (1,) and all(P.is_zero() for P in c.polys)


def test_search_trivial(trivial):
    # 1 = 0 here, so even the empty sequent has a certificate
    c = search_val_cert(trivial, [], [])
    assert c is not None and verify_val_cert(c, trivial).ok


def test_oracle_axioms(qt):
    o = val_oracle(qt, 2, 2)
    t, s = fr(qt, "t"), fr(qt, "t+1")
    assert leq(LatticeTerm.top(), V(qt, 1), o).proved
    assert leq(LatticeTerm.top(), V(qt, -1), o).proved
    assert leq(V(qt, t) & V(qt, s), V(qt, t * s), o).proved
    assert leq(V(qt, t + s), V(qt, t) | V(qt, s), o).proved
    assert leq(LatticeTerm.top(), V(qt, t) | V(qt, 1 / t), o).proved
    assert leq(V(qt, 0), LatticeTerm.bottom(), o).proved
    assert not leq(LatticeTerm.top(), V(qt, t), o).proved


def test_decompose_collapse():
    c = collapse_cert(COLLAPSE_FACTOR, integral=True)
    d = decompose_witness(c)
    R = c.ring
    assert d.trailing == (1, 2, 2)
    assert d.f0 == IndicatorPoly.const(R, 3, 2)
    assert d.r == [1, 2]
    g1 = IndicatorPoly(R, 3, {(0, 2, 0): 1, (-2, 1, 0): 3})
    g2 = IndicatorPoly(R, 3, {(-2, 0, 0): 3, (-2, 1, 0): 2, (0, 3, 1): 1})
    assert d.g[1] == g1 and d.g[2] == g2
    assert d.reconstruct() == d.divided
    assert r_is_minimal(d)
    x0, x1, x2 = (R.frac(R.var(v)) for v in ("x0", "x1", "x2"))
    assert d.ys() == [(2 * x0 + 1) / x0, x2 / (x1 * x1)]


def test_decompose_rejects_bad_r():
    d = decompose_witness(collapse_cert(COLLAPSE_FACTOR, integral=True))
    with pytest.raises(ValueError):
        decompose_witness(d.certificate, r=[0, 2])
    # larger r also meets the constraints but is not minimal
    d2 = decompose_witness(d.certificate, r=[1, 3])
    assert d2.reconstruct() == d2.divided and not r_is_minimal(d2)


def test_decompose_needs_lex(qt):
    from valdim import grlex
    c = DimCertificate(qt, [qt.var("t")], grlex(1), IndicatorPoly.const(qt, 1))
    with pytest.raises(ValueError):
        decompose_witness(c)


def test_decompose_t_inverse(qt):
    t, inv = fr(qt, "t"), fr(qt, "1", "t")
    sub = subring_presentation(qt, [t, inv])
    S = sub.ring
    W = IndicatorPoly(S, 2, {(0, 0): 1, (1, 1): -1})
    d = decompose_witness(DimCertificate(S, sub.points, lex_desc(2), W), sub)
    assert d.f[0].is_zero()
    assert d.layers[0].is_zero()
    assert d.f[1] == IndicatorPoly(qt, 2, {(1, 0): -1})
    assert d.r == [0]


def test_decompose_layer_zero_only():
    Q = RingPresentation([], assume_integral=True)
    three = Q.element(3)
    W = IndicatorPoly(Q, 2, {(0, 0): 1, (1, 0): Q.element(Fraction(-1, 3))})
    d = decompose_witness(DimCertificate(Q, [three, three], lex_desc(2), W))
    assert d.g[1].is_zero() and d.r == [0]
    assert check_chain(build_chain(d)).proved


def chain_ok(R, xs):
    res = vdim_to_Vdim(R, xs, 4)
    assert res.found, res.reason
    assert res.verdict.proved
    assert check_chain(res.chain).proved
    return res


def test_chain_t_inverse(qt):
    t, inv = fr(qt, "t"), fr(qt, "1", "t")
    res = chain_ok(qt, [t, inv])
    ch = res.chain
    assert len(ch.us) == 2 and ch.us[-1].is_bottom()
    assert len(ch.inequalities()) == 3


def test_chain_three_points(qt):
    res = chain_ok(qt, [fr(qt, "t"), fr(qt, "t+1"), fr(qt, "t^2")])
    assert len(res.chain.us) == 3


def test_chain_with_zero(qt):
    t = fr(qt, "t")
    res = chain_ok(qt, [t, fr(qt, "0")])
    assert res.chain.us == [LatticeTerm.top(), V(qt, t)]
    assert res.certificate is None
    res = chain_ok(qt, [fr(qt, "0"), t])
    assert res.chain.us[0].is_top() and res.chain.us[1].is_bottom()
    res = chain_ok(qt, [t, fr(qt, "0"), t * t, fr(qt, "0")])
    assert [u.is_bottom() for u in res.chain.us] == [False, False, True, True]


def test_chain_trivial(trivial):
    res = vdim_to_Vdim(trivial, [])
    assert res.found and res.verdict.proved and res.chain.us == []


def test_chain_collapse():
    c = collapse_cert(COLLAPSE_FACTOR, integral=True)
    ch = build_chain(decompose_witness(c))
    assert check_chain(ch).proved
    assert len(ch.us) == 3
    assert ch.steps[-1].kind == "syntactic"


def test_chain_not_found(qt):
    res = vdim_to_Vdim(qt, [fr(qt, "t")], 4)
    assert not res.found


@given(st.integers(-3, 3), st.integers(1, 3))
def test_chain_linear_points(a, k):
    R = RingPresentation(["t"], assume_integral=True)
    t = fr(R, "t")
    xs = [t, t ** k + R.frac(R.element(a))]
    res = vdim_to_Vdim(R, xs, 4)
    assert res.found
    assert check_chain(res.chain).proved
