"""
Entailment relations and the Zariski lattice
============================================

A finite table of sequents A |- B generates a distributive lattice.  The
engine decides s <= t by the cut rule and is checked here against
two-valued models.  The Zariski lattice of a ring uses radical membership
as its oracle, and complementary chains bound Krull dimension.
"""
from valdim import EntailmentTable, LatticeTerm, RingPresentation, ZariskiAtom, ZariskiOracle, leq, table_oracle
from valdim.lattices import ComplementaryChain, brute_force_leq, check_complementary
from valdim.zariski import D

T = EntailmentTable(("a", "b", "c"), [({"a"}, {"b", "c"}), ({"b", "c"}, set())])
o = table_oracle(T)
a, b, c = (LatticeTerm.atom(v) for v in "abc")
for s, u in [(a, b | c), (a & b, c), (b & c, LatticeTerm.bottom()), (a, b)]:
    v = leq(s, u, o)
    print(f"{s} <= {u}: {v.status.name.lower():8s} models agree: {v.proved == brute_force_leq(T, s, u)}")

# D(x y) = D(x) ^ D(y) and D(x + y) <= D(x) v D(y) in Q[x, y]
R = RingPresentation(["x", "y"])
x, y = R.var("x"), R.var("y")
Z = ZariskiOracle(R)
print("D(xy) <= D(x) ^ D(y):", leq(D(x * y), D(x) & D(y), Z).proved)
print("D(x+y) <= D(x) v D(y):", leq(D(x + y), D(x) | D(y), Z).proved)
print("D(x) <= D(y):", leq(D(x), D(y), Z).status.name.lower())

# a complementary chain for x over Q[x]/<x^2>: x is nilpotent, so u_0 = 1 and x ^ 1 <= 0
N = RingPresentation(["x"], ["x^2"])
ch = ComplementaryChain([ZariskiAtom(N.var("x"))], [LatticeTerm.top()])
print("chain for a nilpotent:", check_complementary(ch, ZariskiOracle(N)).status.name.lower())
