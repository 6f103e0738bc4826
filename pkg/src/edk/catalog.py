"""Ready-made graphs and forbidden families used throughout the project:
the classic triangle families, the self-complementary K5 coloring, and small
tournaments including the quadratic-residue tournament on 7 vertices.
"""

from __future__ import annotations

import itertools

from .graphs import (
    ColoredGraph,
    DiGraph,
    PropertyFamily,
    palette,
)


def triangle(r, c01, c02, c12) -> ColoredGraph:
    return ColoredGraph(3, r, (c01, c02, c12))


def mono_triangle(r=3, color=1) -> ColoredGraph:
    return ColoredGraph.complete(3, r, color)


def mono_triangle_family(r=3, color=1) -> PropertyFamily:
    return PropertyFamily.multicolor(r, [mono_triangle(r, color)])


def triangle_112_family() -> PropertyFamily:
    """One triangle with edge colors 1, 1, 2 forbidden (r = 3)."""
    return PropertyFamily.multicolor(3, [triangle(3, 1, 1, 2)])


def two_triangle_family() -> PropertyFamily:
    """Triangles 1,1,2 and 2,2,3 forbidden (r = 3)."""
    return PropertyFamily.multicolor(3, [triangle(3, 1, 1, 2), triangle(3, 2, 2, 3)])


def two_mono_triangles_family() -> PropertyFamily:
    """Monochromatic triangles of colors 1 and 2 forbidden (r = 3)."""
    return PropertyFamily.multicolor(3, [mono_triangle(3, 1), mono_triangle(3, 2)])


def bichromatic_triangles_family() -> PropertyFamily:
    """All six triangles on exactly two of the three colors forbidden."""
    graphs = []
    for a, b in itertools.permutations(range(1, 4), 2):
        graphs.append(triangle(3, a, a, b))
    return PropertyFamily.multicolor(3, graphs)


def rainbow_triangle_family() -> PropertyFamily:
    return PropertyFamily.multicolor(3, [triangle(3, 1, 2, 3)])


def k5_two_cycles() -> ColoredGraph:
    """K5 whose color classes are two 5-cycles (a self-complementary coloring)."""
    cycle = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    mapping = {}
    for i, j in itertools.combinations(range(5), 2):
        mapping[(i, j)] = 1 if (i, j) in cycle else 2
    return ColoredGraph.from_color_map(5, 2, mapping)


def k5_family() -> PropertyFamily:
    return PropertyFamily.multicolor(2, [k5_two_cycles()])


def cyclic_triangle() -> DiGraph:
    return DiGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def transitive_tournament(n) -> DiGraph:
    return DiGraph.from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cyclic_triangle_family(pal="tourn") -> PropertyFamily:
    return PropertyFamily.directed(palette(pal), [cyclic_triangle()])


def transitive_triangle_family(pal="tourn") -> PropertyFamily:
    return PropertyFamily.directed(palette(pal), [transitive_tournament(3)])


def both_triangles_family(pal) -> PropertyFamily:
    return PropertyFamily.directed(palette(pal), [transitive_tournament(3), cyclic_triangle()])


def quadratic_residue_tournament() -> DiGraph:
    """The Paley tournament on 7 vertices: i beats i+1, i+2 and i+4 mod 7.

    It has no transitive subtournament on 4 vertices, so it cannot be split
    into two transitive parts.
    """
    arcs = [(i, (i + d) % 7) for i in range(7) for d in (1, 2, 4)]
    return DiGraph.from_arcs(7, arcs)


def qr7_family() -> PropertyFamily:
    return PropertyFamily.directed(palette("tourn"), [quadratic_residue_tournament()])
