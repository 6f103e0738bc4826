"""Randomized editing toward a type, with its exact expectation.

Vertices land in parts independently by the weight vector; pairs whose color
the type forbids get recolored.  The expected number of changes is exactly
w' M w binom(n, 2), and any admissible target type guarantees membership.
"""

import statistics
from fractions import Fraction

from edk import (
    DensityVector,
    RType,
    color_density,
    edit_by_type,
    expected_changes,
    is_member,
    simple_edit,
)
from edk.catalog import mono_triangle_family, two_triangle_family
from edk.oracle import sample_rgraph

F = Fraction
print(__doc__)

fam = mono_triangle_family()
target = RType(3, (6, 6), (7,))  # both parts avoid color 1, the edge allows all
weights = (F(1, 2), F(1, 2))

n = 24
graph = sample_rgraph(n, DensityVector.of(F(3, 5), F(1, 5), F(1, 5)), seed=1)
expect = expected_changes(target, weights, color_density(graph), n)
print(f"Editing a random {n}-vertex graph toward a 2-part type:")
print(f"  expected changes = {expect} = {float(expect):.2f}")

runs = [edit_by_type(graph, target, weights, seed=s) for s in range(300)]
mean = statistics.mean(changes for _, changes in runs)
print(f"  empirical mean over 300 seeds = {mean:.2f}")
print(f"  every run a member of the property: "
      f"{all(is_member(g, fam) for g, _ in runs)}")
print()

fam = two_triangle_family()
graph = sample_rgraph(18, DensityVector.uniform(3), seed=7)
edited, changes = simple_edit(graph, fam, (0, 1, 0))
print("The part-based simple edit with spectrum tuple (0,1,0) on the "
      "two-triangle family:")
print(f"  recolored {changes} of {18 * 17 // 2} pairs; member: {is_member(edited, fam)}")
