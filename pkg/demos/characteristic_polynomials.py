"""Exact characteristic polynomials and the identities that connect them.

Everything here runs in integer arithmetic: determinants are fraction free,
polynomials carry int coefficients, and the structural identities hold as
exact equalities rather than to a tolerance.

Run with:  python3 demos/characteristic_polynomials.py
"""

from pstwalk import (
    IntPoly,
    bridge_charpoly_p2,
    build_complete,
    build_cycle,
    build_path,
    build_star,
    charpoly,
    charpoly_deleted,
    iter_ab_paths,
    one_sum,
    one_sum_charpoly,
    path_sum_poly,
    walk_equivalent,
    walk_gf,
)


def banner(text):
    print()
    print(text)
    print("-" * len(text))


banner("Characteristic polynomials of small graphs")
for name, g in [
    ("P4 path", build_path(4)),
    ("C5 cycle", build_cycle(5)),
    ("K4 complete", build_complete(4)),
    ("K1,3 star", build_star(3)),
]:
    print(f"  {name:12s} phi = {charpoly(g)}")

banner("Vertex deletion and the derivative identity")
p4 = build_path(4)
phi = charpoly(p4)
print(f"  phi(P4)        = {phi}")
for v in range(4):
    print(f"  phi(P4 - {v})    = {charpoly_deleted(p4, {v})}")
total = IntPoly((0,))
for v in range(4):
    total = total + charpoly_deleted(p4, {v})
print(f"  sum of deleted = {total}")
print(f"  phi'(P4)       = {phi.derivative()}  (equal: {total == phi.derivative()})")

banner("The 1-sum recurrence")
# Glue a triangle and a path at one vertex; the charpoly of the glued
# graph is determined by the four pieces of the recurrence.
tri = build_cycle(3)
p3 = build_path(3)
glued, root = one_sum(tri, 0, p3, 0)
direct = charpoly(glued)
recurred = one_sum_charpoly(
    charpoly(tri), charpoly_deleted(tri, {0}),
    charpoly(p3), charpoly_deleted(p3, {0}),
)
print(f"  triangle + P3 glued at a vertex, n = {glued.n}")
print(f"  direct    : {direct}")
print(f"  recurrence: {recurred}")
print(f"  equal     : {direct == recurred}")

banner("Path sums through a graph")
k4 = build_complete(4)
paths = list(iter_ab_paths(k4, 0, 1))
print(f"  K4 has {len(paths)} simple paths from 0 to 1:")
for verts in paths:
    print(f"    {' -> '.join(map(str, verts))}")
ps = path_sum_poly(k4, 0, 1)
print(f"  weighted sum of charpolys off each path: {ps}")
print("  (this polynomial squared gives phi(G-a) phi(G-b) - phi(G) phi(G-ab))")

banner("Bridge factorization at walk-equivalent roots")
# Two copies of the same star are walk equivalent at their centres, and
# the charpoly of the bridged composition factors over the two halves.
s = build_star(2)
phi_s = charpoly(s)
phi_s_del = charpoly_deleted(s, {0})
print(f"  centres walk equivalent: "
      f"{walk_equivalent(phi_s_del, phi_s, phi_s_del, phi_s)}")
bridged = bridge_charpoly_p2(phi_s, phi_s_del, phi_s, phi_s_del)
print(f"  phi of star-P2-star bridge: {bridged}")
print(f"  as a difference of products: phi(Y)^2 - phi(Y-a)^2 factors "
      f"over the halves")

banner("Walk generating functions")
g = build_path(3)
for v in range(3):
    gf = walk_gf(g, v)
    print(f"  P3 vertex {v}: phi(G-v)/phi(G) = {gf}")
print("  (the two end vertices share one function; the middle differs)")
