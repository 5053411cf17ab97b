"""
A bounded prover for divisibility atoms
=======================================

Atoms a | b read "b/a lies in the valuation ring".  Horn rules are
saturated at each node; the rules "a | b or b | a" and
"ax | bx gives a | b or 0 | x" open branches, and every branch has to end
on a goal or on 0 | 1.  Proofs are replayed by a separate checker.
"""
import json

from valdim import RingPresentation, div, dyn_entails, replay_proof
from valdim.serialize import dump_proof

R = RingPresentation(["a", "b", "c", "d"])
a, b, c, d = (R.var(v) for v in "abcd")
r = dyn_entails(R, [div(R, a, b), div(R, b, c), div(R, c, d)], [div(R, a, d)], depth=2)
tree = r.evidence
for s in tree.root.steps:
    print(f"{s.rule:4s} {s.fact}   from", [str(p) for p in s.premises])
print("replays:", replay_proof(tree))

Q = RingPresentation(["t"])
t = Q.var("t")
# |- t | 1 or 1 | t needs one branching step
r = dyn_entails(Q, [], [div(Q, t, 1), div(Q, 1, t)], depth=1)
print("branching on", r.evidence.root.close[1], [str(x) for x in r.evidence.root.close[2]])
# |- t | 1 alone is out of reach
print("t | 1:", dyn_entails(Q, [], [div(Q, t, 1)], depth=3).status.name.lower())
# seeding 1 | t restricts to valuation rings that contain t
print("seeded 1 | t:", dyn_entails(Q, [], [div(Q, 1, t)], depth=0, seeds=[t]).status.name.lower())

print(json.dumps(dump_proof(dyn_entails(Q, [], [div(Q, 1, -1)], depth=0).evidence)["root"], indent=1))
