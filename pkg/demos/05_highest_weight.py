"""Highest weight crystals: the delta part comes from the embedding into M(infinity)."""

from monoweight import Variant, apply_word, build_datum, embed_lambda, format_monomial, h_lambda, wt_lambda
from monoweight.delta import an_algorithm

a2 = build_datum("A2")
lam = (0, 2, 0)

m = apply_word(a2, Variant.HIGHEST, h_lambda(lam), (2, 0, 1))
print(format_monomial(m))
print(wt_lambda(a2, m, lam))
print(an_algorithm(a2, embed_lambda(m, lam)))

# f_0 kills the highest weight vector of 2 Lambda_1
print(apply_word(a2, Variant.HIGHEST, h_lambda(lam), (0,)))
