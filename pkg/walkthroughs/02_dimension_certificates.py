"""
Collapse certificates for Krull dimension
=========================================

Kdim R <= n means every x_0..x_n satisfies an identity
X^q (1 + ...) = 0, i.e. a polynomial whose trailing term, for a monomial
order on the indicators X_i, has coefficient 1.  Certificates are searched
by linear algebra over the field and verified independently.
"""
from valdim import (IndicatorPoly, RingPresentation, grlex, lex_desc, matrix_order, order_independence,
                    search_dim_cert, verify_dim_cert)
from valdim.dimcerts import DimCertificate

R = RingPresentation(["t"])
t = R.var("t")

# two elements of Q[t] always collapse
c = search_dim_cert(R, [t, t * t + 1], grlex(2), 3)
print("witness:", c.witness, " trailing", c.trailing)
print("verified:", verify_dim_cert(c))

# one element never does: Kdim Q[t] = 1
print("single point:", search_dim_cert(R, [t], grlex(1), 6))

# a hand-written witness is checked, not trusted
bad = DimCertificate(R, [t], grlex(1), IndicatorPoly(R, 1, {(0,): 1, (1,): 1}))
print("bad witness:", verify_dim_cert(bad).reason)

# existence does not depend on the graded order chosen
other = matrix_order([[1, 1], [0, 1]])
rep = order_independence(c, other, 3)
print("other graded order agrees:", rep["agree"])

# a three-point identity in Q[x0, x1, x2]/<P> under lex with X2 most significant
S = RingPresentation(["x0", "x1", "x2"], ["x0*x1^2 + 2*x0^2*x1^2 + 3*x1^4 + x0^2*x1^5 + 3*x2 + 2*x1*x2 + x0^2*x1^3*x2^2"])
W = IndicatorPoly(S, 3, {(1, 2, 2): 1, (2, 2, 2): 2, (0, 4, 2): 3, (2, 5, 2): 1,
                         (0, 0, 3): 3, (0, 1, 3): 2, (2, 3, 4): 1})
c3 = DimCertificate(S, [S.var(v) for v in S.vars], lex_desc(3), W)
print("three points:", verify_dim_cert(c3), " trailing", c3.trailing)
