"""Which fractions close to the same knot?

Run:  python demos/03_classification.py [P]
"""

import math
import sys

from tanglekit import Fraction
from tanglekit.classify import is_achiral, normalize_oriented, normalize_unoriented

P = int(sys.argv[1]) if len(sys.argv) > 1 else 30
classes: dict = {}
for q in range(1, P):
    if math.gcd(P, q) == 1:
        classes.setdefault(normalize_unoriented(Fraction(P, q)), []).append(q)

print(f"N({P}/q) for q coprime to {P}: {sum(map(len, classes.values()))} fractions, {len(classes)} links")
for k, qs in sorted(classes.items(), key=lambda kv: kv[0].qclass):
    flag = "achiral" if is_achiral(Fraction(P, qs[0])) else ""
    oriented = sorted({str(normalize_oriented(Fraction(P, q))) for q in qs})
    print(f"  {k}: q in {qs} {flag}")
    if len(oriented) > 1:
        print(f"    splits with orientation into {oriented}")
