"""A rational tangle's fraction, computed three independent ways.

Run:  python demos/01_three_fractions.py
"""

from tanglekit import ContinuedFraction, Fraction, eval_contfrac, expand_canonical
from tanglekit.bracket import bracket_tangle_oracle, fraction_from_pair
from tanglekit.coloring import color_standard, coloring_fraction
from tanglekit.diagram import build_standard, to_pd

cf = ContinuedFraction((2, 3, 4))
d = build_standard(cf)
print(f"tangle {cf}: {d.n_crossings} crossings")
print(to_pd(d))

# 1. arithmetic of the twists
print("continued fraction :", eval_contfrac(cf))

# 2. every one of the 2^9 smoothings, evaluated at A = sqrt(i)
pair = bracket_tangle_oracle(d)
print("bracket pair       :", pair)
print("bracket at sqrt(i) :", fraction_from_pair(pair))

# 3. integer colorings of the edges
ct = color_standard(cf)
print("color matrix       :", ct.matrix, "diagonal rule", ct.matrix.diagonal_sum_rule)
print("coloring           :", coloring_fraction(ct.matrix))

# the other direction: Euclid back to a canonical form
for f in [Fraction(30, 13), Fraction(23, 14), Fraction(-11, 7), Fraction(1, 2)]:
    print(f"{f!s:>7} -> {expand_canonical(f)}")
