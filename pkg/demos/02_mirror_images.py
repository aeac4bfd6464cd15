"""Telling a knot from its mirror image with the normalized bracket.

Run:  python demos/02_mirror_images.py
"""

from tanglekit import ContinuedFraction, Fraction, expand_canonical
from tanglekit.bracket import bracket_knot, determinant, normalized_f
from tanglekit.classify import achiral_form, is_achiral
from tanglekit.diagram import build_standard, numerator, writhe

for name, f in [("trefoil", Fraction(3)), ("figure-eight", Fraction(5, 2)), ("5_2", Fraction(7, 2))]:
    K = numerator(build_standard(expand_canonical(f)))
    poly = normalized_f(K)
    mirror_same = poly == poly.substitute_inverse()
    print(f"{name}: N({f}), writhe {writhe(K)}, det {determinant(K)}")
    print(f"  <K>      = {bracket_knot(K)}")
    print(f"  f(A)     = {poly}")
    print(f"  f(A) == f(1/A): {mirror_same}; q^2 = -1 mod p: {is_achiral(f)}")
    if is_achiral(f):
        print(f"  palindromic form {achiral_form(f)}")

# a larger achiral example: the closure of [2,1,1,2]
cf = ContinuedFraction((2, 1, 1, 2))
K = numerator(build_standard(cf))
print(cf, "symmetric bracket:", normalized_f(K) == normalized_f(K).substitute_inverse())
