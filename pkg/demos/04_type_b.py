"""Type B3 and B4: triangular recursion, closed forms and coefficient sequences."""

from monoweight import ONE, Variant, apply_word, b4_coefficients, build_datum, wt_affine
from monoweight.delta import b3_closed, bn_recursion, d_b3

b3 = build_datum("B3")
m = apply_word(b3, Variant.INFINITY, ONE, (0, 1, 2, 3))
print(bn_recursion(b3, m))
print([b3_closed(m, 0, k) for k in range(m.max_level() + 1)], d_b3(m))
print(wt_affine(b3, m))

a, b = b4_coefficients(21)
print("a_k", a)
print("b_k", b)
