"""
From a collapse certificate to a valuative chain
================================================

Atoms V'(x), for x in the fraction field, say that x is invertible in a
valuation ring.  An entailment between them holds when a
Valuativstellensatz identity exists.  A lex collapse certificate for
x_0..x_n is decomposed into layers, and the layers give elements y_k and
a complementary chain whose every step carries an identity.
"""
from valdim import (IndicatorPoly, LatticeTerm, RingPresentation, V, ValCert, build_chain, check_chain,
                    decompose_witness, leq, lex_desc, search_val_cert, val_oracle, vdim_to_Vdim, verify_val_cert)
from valdim.dimcerts import DimCertificate
from valdim.valuative import VPRIME

R = RingPresentation(["t"], assume_integral=True)
t = R.frac(R.var("t"))

# |- V'(t) v V'(1/t): 1 = t * 0 + (1/t) * t
c = ValCert(VPRIME, [], [], [t, 1 / t], [IndicatorPoly(R, 2), IndicatorPoly.var(R, 2, 0)])
print("identity for t, 1/t:", verify_val_cert(c, R))
print("searched V'(t) |- V'(1/t):", search_val_cert(R, [t], [1 / t]) is not None)
print("|- V'(t) at default bounds:", leq(LatticeTerm.top(), V(R, t), val_oracle(R)).status.name.lower())

# the whole pipeline for (t, 1/t) and for three points
for xs in ([t, 1 / t], [t, t + 1, t * t]):
    res = vdim_to_Vdim(R, xs)
    print([str(x) for x in xs], "->", res.chain.us, check_chain(res.chain).status.name.lower())

# the three-point identity over Q[x0, x1, x2]/<P'> with P' irreducible
S = RingPresentation(["x0", "x1", "x2"],
                     ["x0*x1^2 + 2*x0^2*x1^2 + 3*x1^4 + x0^2*x1^5 + 3*x2 + 2*x1*x2 + x0^2*x1^3*x2^2"],
                     assume_integral=True)
W = IndicatorPoly(S, 3, {(1, 2, 2): 1, (2, 2, 2): 2, (0, 4, 2): 3, (2, 5, 2): 1,
                         (0, 0, 3): 3, (0, 1, 3): 2, (2, 3, 4): 1})
d = decompose_witness(DimCertificate(S, [S.var(v) for v in S.vars], lex_desc(3), W))
print("f0 =", d.f0, " r =", d.r)
print("g1 =", d.g[1])
print("g2 =", d.g[2])
print("y =", [str(y) for y in d.ys()])
ch = build_chain(d)
for k, s in enumerate(ch.steps):
    print("step", k, s.kind, verify_val_cert(s.cert, S).ok if s.cert else "")
print("chain:", check_chain(ch).status.name.lower())
