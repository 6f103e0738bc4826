"""Directed graphs: palettes, tournaments, and the directed triangle results.

Pairs of a digraph carry one of four states (no arc, both arcs, one arc
either way) and a palette restricts which states editing may use.  For
tournaments the whole theory collapses to one density point (0, 1/2) and the
distance is 1/(2(chi - 1)) with chi the fewest transitive parts of a
forbidden tournament.
"""

from fractions import Fraction

from edk import (
    DirDensity,
    chromatic_number,
    dist_max_upper,
    dist_upper,
    is_trivial,
)
from edk.catalog import (
    cyclic_triangle_family,
    qr7_family,
    transitive_triangle_family,
)

F = Fraction
print(__doc__)

point = DirDensity.of(0, F(1, 2), "tourn")

fam = cyclic_triangle_family("tourn")
print("Forbidding the cyclic triangle among tournaments:")
print(f"  chi = {chromatic_number(fam, 'weak')}, distance = "
      f"{dist_upper(fam, point, 1).value}")

fam = qr7_family()
chi = chromatic_number(fam, "weak")
print("Forbidding the 7-vertex quadratic-residue tournament (no transitive "
      "4-subtournament):")
print(f"  chi = {chi}, distance = {dist_upper(fam, point, 2).value} "
      f"= 1/(2({chi}-1))")

fam = transitive_triangle_family("tourn")
print("Forbidding the transitive triangle among tournaments:")
print(f"  trivial property (every large tournament contains it): {is_trivial(fam)}")
print()

print("The directed triangle costs 1/2 under every palette with arcs:")
for pal in ("full", "compl", "orien", "tourn"):
    bound, argmax = dist_max_upper(cyclic_triangle_family(pal), 1)
    print(f"  {pal:<6} max {bound.value} at (p, q) = ({argmax.p}, {argmax.q})")
