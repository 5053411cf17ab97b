"""
Splitting a reduced ring and gluing certificates
================================================

A reduced ring embeds in R/Ann(a) x R/Ann(Ann(a)): a is regular in the
first factor and zero in the second.  Certificates found on each factor
glue back to one over R.
"""
from valdim import (ComponentWitness, IndicatorPoly, RingPresentation, glue_components, lex_desc, machinery_no1_dimcert,
                    split_at, split_sequence, verify_dim_cert)
from valdim.ppring import classify, injective, iterated_split, same_components

R = RingPresentation(["x", "y"], ["x*y"], assume_reduced=True)
x, y = R.var("x"), R.var("y")

s = split_at(R, x)
for C, I in s.components:
    print("component", sorted(I), [g.to_str(R.vars) for g in C.ideal_gens], "x is", classify(C, x))
print("injective:", injective(s))

# two splitting elements give four components, in either order
seq = split_sequence(R, [x, y])
print(len(seq.components), "components;", same_components(seq, iterated_split(R, [y, x])))

# certificates for (x + 1, y^2) glued along the split at x
pts = [x + 1, y * y]
c = machinery_no1_dimcert(R, pts, lex_desc(2), 3, split_on=[x])
print("glued witness:", c.witness)
print("trailing coefficient", c.witness.terms[c.trailing], verify_dim_cert(c))

# the gluing step by hand: X_1 on the first factor (y = 0 there) and X_0 on the second (x = 0)
P1, P2 = IndicatorPoly.var(R, 2, 1), IndicatorPoly.var(R, 2, 0)
g = glue_components(R, [x, y], lex_desc(2), ComponentWitness(P1, R.zero, y), ComponentWitness(P2, R.zero, x))
print("by hand:", g.witness, verify_dim_cert(g).ok)
