"""
Ideals, normal forms and radicals
=================================

Quotient rings are presented by generators over Q or F_p.  Elements are
kept as normal forms modulo a Groebner basis, so equality is syntactic.
"""
from valdim import GF, Ideal, RingPresentation, grlex, lex, radical_member
from valdim.groebner import radical_exponent

# Q[x, y] / <x^2 - y, x y>
R = RingPresentation(["x", "y"], ["x^2 - y", "x*y"])
x, y = R.var("x"), R.var("y")
print("x^3 =", x ** 3)          # x * y, which is zero
print("y^2 =", y * y)

# the reduced basis depends on the order
J = Ideal(2, (R.poly("x^2 - y^3"), R.poly("x*y - 1")))
for o in (grlex(2), lex(2)):
    print(o, [g.to_str(R.vars) for g in J.groebner(o).gens])

# radical membership uses a fresh variable; the exponent search confirms it
I = Ideal(2, (R.poly("x^3"), R.poly("y^2")))
f = R.poly("x*y + x")
print("x y + x in sqrt(I):", radical_member(f, I), "exponent", radical_exponent(f, I))

# F_5[x]/<x^2 + 2> is the field with 25 elements: a^25 = a, but Frobenius moves x
F = RingPresentation(["x"], ["x^2 + 2"], GF(5))
a = F.var("x") + 3
print("a^25 == a:", a ** 25 == a, " a^5 =", a ** 5)
