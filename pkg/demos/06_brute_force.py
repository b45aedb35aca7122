"""Brute-force verification: BFS balls, zero-arrow counting, axioms."""

from monoweight import build_datum, verify_D, verify_wall_iso
from monoweight.monomial import ONE, Variant
from monoweight.oracle import bfs_expand

g = bfs_expand(build_datum("A2"), Variant.INFINITY, ONE, 4)
print(g.depth_counts())
print(g.to_dot()[:300])

for t, depth in [("A1", 8), ("A3", 5), ("B3", 5)]:
    print(verify_D(build_datum(t), depth).table())

print(verify_wall_iso(2, 5).table())

# n = 1 is the odd one out: psi does not follow f_i there
r = verify_wall_iso(1, 4)
print(r.ok, len(r.mismatches), r.mismatches[0]["check"])
