"""Walk down the A1 crystal from the empty monomial and read off weights."""

from monoweight import ONE, Variant, apply_word, build_datum, format_monomial, wt_affine
from monoweight.delta import a1_closed, a1_recursion

a1 = build_datum("A1")

# words act right to left, so (1, 0) means f_1 f_0 1
m = apply_word(a1, Variant.INFINITY, ONE, (1, 0))
print(format_monomial(m))
print("weight:", wt_affine(a1, m))  # classical part cancels, only -delta is left

# the A-variable table behind the weight
print(a1_recursion(a1, m))

# a longer word: five operators, four of them f_0
m = apply_word(a1, Variant.INFINITY, ONE, (0, 1, 0, 0, 0))
print(format_monomial(m), "->", wt_affine(a1, m))

# closed form against the recursion, column by column
table = a1_recursion(a1, m)
for k in range(m.max_level() + 1):
    print(k, a1_closed(m, 0, k), table.get((0, k), 0), a1_closed(m, 1, k), table.get((1, k), 0))
