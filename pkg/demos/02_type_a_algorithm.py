"""Column-by-column solve for type A_n, n >= 2, on a monomial of A4."""

from monoweight import D, an_algorithm, build_datum, parse_monomial
from monoweight.delta import solve_cyclic_differences
from monoweight.monomial import expand_a_product

a4 = build_datum("A4")
m = parse_monomial("Y(0,0)^-3 Y(0,1)^-1 Y(1,0)^2 Y(1,1)^-1 Y(2,0) Y(2,3) Y(3,3)^-1 Y(4,1)^2")

# each column is a cyclic difference system, solved up to a constant shift
print(solve_cyclic_differences(a4, (0, 0, 0, -1, 1)))
print(solve_cyclic_differences(a4, (-3, 2, 1, 0, 0), top_zero=True))

table = an_algorithm(a4, m)
for (i, k), a in table.items():
    print(f"A[{i},{k}]^{a}")
print("D =", D(a4, m))

# adding a full column changes nothing: prod_i A_{i,k} = 1 in type A
bumped = dict(table)
for i in a4.indices:
    bumped[(i, 5)] = -1
print(expand_a_product(a4, bumped) == m)
