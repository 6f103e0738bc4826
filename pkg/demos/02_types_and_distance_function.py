"""Types, penalty matrices, and the edit distance function.

A type is a complete graph with color sets on vertices and edges; editing a
graph toward an admissible type always lands inside the property.  The
penalty matrix at given densities prices the editing, f averages it, g
minimizes it exactly over the simplex, and the least g over enumerated types
bounds the distance function from above.
"""

from fractions import Fraction

from edk import (
    DensityVector,
    dist_lower_turan,
    dist_max_upper,
    dist_upper,
    distfn_grid,
    enumerate_types,
    f_value,
    g_value,
    m_matrix,
)
from edk.catalog import bichromatic_triangles_family, mono_triangle_family, rainbow_triangle_family

F = Fraction
print(__doc__)

fam = mono_triangle_family()
types = list(enumerate_types(fam, 2))
print(f"Admissible types with at most 2 vertices for the monochromatic "
      f"triangle family: {len(types)}")

p = DensityVector.of(1, 0, 0)
best = dist_upper(fam, p, 2, types)
cert = best.certificate
print(f"At densities (1,0,0) the best bound is {best.value}, witnessed by a "
      f"{cert.crg_type.k}-vertex type with weights {cert.weights}")
m = m_matrix(cert.crg_type, p)
print(f"  its penalty matrix: {m}")
print(f"  f (uniform) = {f_value(m)},  g (optimal) = {g_value(m)[0]}")
print()

fam = bichromatic_triangles_family()
bound, argmax = dist_max_upper(fam, 2)
print(f"Six bichromatic triangles: the distance function peaks at {bound.value} "
      f"for densities ({', '.join(str(x) for x in argmax.entries)})")
print(f"  Turan-style lower bound: {dist_lower_turan(fam).value}")
print("  a slice of the function (step 1/4):")
for dens, value in distfn_grid(fam, 1, F(1, 4)):
    print(f"    p = {tuple(str(x) for x in dens.entries)}  ->  {value}")
print()

fam = rainbow_triangle_family()
bound, argmax = dist_max_upper(fam, 1)
print(f"Rainbow triangle: maximum {bound.value} at "
      f"({', '.join(str(x) for x in argmax.entries)}); the whole "
      f"function is min(p1, p2, p3):")
for dens, value in distfn_grid(fam, 1, F(1, 4)):
    assert value == min(dens.entries)
print("  verified on the step-1/4 grid")
