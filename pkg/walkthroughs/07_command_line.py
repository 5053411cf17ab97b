"""
The batch command line
======================

``valdim COMMAND`` reads one JSON document and writes one, with exit code
0 (proved / found), 1 (refuted), 2 (unknown within the bounds) or 3
(input error).  This script drives it through ``python3 -m valdim``.
"""
import json
import subprocess
import sys


def valdim(command, doc, *args):
    r = subprocess.run([sys.executable, "-m", "valdim", command, *args], input=json.dumps(doc),
                       capture_output=True, text=True)
    return r.returncode, json.loads(r.stdout)


qt = {"vars": ["t"], "assume_integral": True}

print(valdim("member", {"ring": {"vars": ["x"], "ideal": ["x^2"]}, "poly": "x"}))
print(valdim("split", {"ring": {"vars": ["x", "y"], "ideal": ["x*y"], "assume_reduced": True}, "element": "x"}))

# search, then feed the certificate back to the verifier
code, found = valdim("kdim-search", {"ring": qt, "points": ["t", "t^2 + 1"]}, "--degree", "3")
print("kdim-search", code, found["certificate"]["witness"])
print("cert-verify", valdim("cert-verify", found))

code, out = valdim("vdim-to-Vdim", {"ring": qt, "xs": ["t", {"num": "1", "den": "t"}]})
print("vdim-to-Vdim", code, out["chain"]["us"])

print(valdim("val-entail", {"ring": qt, "right": ["t"]}))
print(valdim("member", {"ring": {"vars": ["x"]}, "poly": "x +* 2"}))
