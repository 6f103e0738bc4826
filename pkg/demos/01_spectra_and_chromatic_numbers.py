"""Clique spectra and chromatic numbers for three classic families.

A tuple (a_1, ..., a_r) is good when some forbidden graph splits into parts
that dodge (weak) or force (strong) the colors the tuple assigns; the
spectrum collects the tuples that are NOT good, and the chromatic number is
one more than the largest sum in it.
"""

from edk import chromatic_number, clique_spectrum, is_weakly_good
from edk.catalog import k5_family, triangle_112_family, two_triangle_family


def show(name, family):
    weak = clique_spectrum(family, "weak")
    strong = clique_spectrum(family, "strong")
    print(f"{name}")
    print(f"  weak spectrum   : {sorted(weak.tuples)}")
    print(f"  strong spectrum : {sorted(strong.tuples)}")
    print(f"  chromatic numbers: weak {chromatic_number(family, 'weak')}, "
          f"strong {chromatic_number(family, 'strong')}")
    print()


print(__doc__)

show("Forbidding triangles colored 1,1,2 and 2,2,3 (three colors):", two_triangle_family())
show("Forbidding only the 1,1,2 triangle:", triangle_112_family())
show("Forbidding the K5 whose color classes are two 5-cycles (two colors):", k5_family())

fam = two_triangle_family()
print("Why (0,1,0) sits in the first weak spectrum: both forbidden triangles")
print("carry color 2, so one part can never avoid it:",
      is_weakly_good((0, 1, 0), fam))
print("Two parts suffice for the 1,1,2 triangle:",
      is_weakly_good((0, 2, 0), fam))
