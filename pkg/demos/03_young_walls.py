"""Young walls for A2 and their monomial images."""

from monoweight import ONE, Variant, apply_word, build_datum, format_monomial
from monoweight.youngwall import YoungWall, apply_f, psi, reduce, render, wall_weight

w = YoungWall((2, 2, 2, 1, 1), n=2)
print(render(w))

# a full delta sits in column 2; removing it leaves a reduced wall
r = reduce(w)
print(render(r))
print("rows:", r)

print(format_monomial(psi(r)))
print(psi(r) == apply_word(build_datum("A2"), Variant.INFINITY, ONE, (1, 0)))
print("weight:", wall_weight(r))

# grow a wall by lowering operators
w = YoungWall.empty(2)
for i in (0, 2, 1, 0):
    w = reduce(apply_f(w, i))
    print(i, w, wall_weight(w))
