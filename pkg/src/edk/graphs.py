"""Core data model: colored complete graphs, digraphs, palettes, densities,
forbidden families, and the induced-subgraph / membership / Hamming primitives.

A multicolor graph is a complete graph on ``n`` labeled vertices whose
unordered pairs carry a color in ``1..r``.  A digraph is a complete graph
whose unordered pairs carry one of four states: no arc, arcs both ways, or a
single arc in either direction.  Both kinds store one color code per pair
``{i, j}`` with ``i < j``; for digraphs the single-arc codes are read relative
to that order, which makes the required symmetries hold by construction.

All values are immutable and hashable, so they are safe to share across
concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

# Digraph pair codes, relative to the pair (i, j) with i < j.
NONEDGE = 0   # no arc either way
BIEDGE = 1    # arcs both ways
FWD = 2       # single arc i -> j
BWD = 3       # single arc j -> i

DIR_CODES = (NONEDGE, BIEDGE, FWD, BWD)
DIR_SYMBOL = {NONEDGE: "o", BIEDGE: "-", FWD: ">", BWD: "<"}
DIR_CODE_OF = {v: k for k, v in DIR_SYMBOL.items()}

ARROW_MASK = (1 << FWD) | (1 << BWD)


def mirror(code: int) -> int:
    """Pair code as seen from the opposite vertex order."""
    if code == FWD:
        return BWD
    if code == BWD:
        return FWD
    return code


def mirror_mask(mask: int) -> int:
    """Color-set bitmask as seen from the opposite vertex order."""
    fixed = mask & ~ARROW_MASK
    if mask & (1 << FWD):
        fixed |= 1 << BWD
    if mask & (1 << BWD):
        fixed |= 1 << FWD
    return fixed


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Index of pair {i, j}, i < j, in row-major upper-triangle order."""
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def pairs(n: int):
    return itertools.combinations(range(n), 2)


@dataclass(frozen=True)
class Palette:
    """Allowed pair states for digraphs.

    The five palettes: ``full`` (all four states), ``compl`` (at least one
    arc per pair), ``orien`` (oriented graphs), ``undir`` (plain graphs) and
    ``tourn`` (tournaments).  Single arcs occur in pairs: a palette contains
    both arc directions or neither.
    """

    kind: str
    codes: frozenset

    def __post_init__(self):
        if (FWD in self.codes) != (BWD in self.codes):
            raise ValueError("palette must contain both arc directions or neither")
        if _PALETTE_CODES.get(self.kind) != self.codes:
            raise ValueError(f"unknown palette kind {self.kind!r} for codes {sorted(self.codes)}")

    @property
    def mask(self) -> int:
        m = 0
        for c in self.codes:
            m |= 1 << c
        return m

    @property
    def size(self) -> int:
        return len(self.codes)

    def __contains__(self, code: int) -> bool:
        return code in self.codes

    def sorted_codes(self):
        return tuple(sorted(self.codes))


_PALETTE_CODES = {
    "full": frozenset({NONEDGE, BIEDGE, FWD, BWD}),
    "compl": frozenset({BIEDGE, FWD, BWD}),
    "orien": frozenset({NONEDGE, FWD, BWD}),
    "undir": frozenset({NONEDGE, BIEDGE}),
    "tourn": frozenset({FWD, BWD}),
}

PALETTES = {kind: Palette(kind, codes) for kind, codes in _PALETTE_CODES.items()}

ARROW_PALETTES = ("full", "compl", "orien", "tourn")


def palette(kind: str) -> Palette:
    try:
        return PALETTES[kind]
    except KeyError:
        raise ValueError(f"unknown palette {kind!r}; expected one of {sorted(PALETTES)}") from None


@dataclass(frozen=True)
class ColoredGraph:
    """An r-edge-coloring of the complete graph on n labeled vertices."""

    n: int
    r: int
    colors: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.r < 2:
            raise ValueError("need at least 2 colors")
        if len(self.colors) != pair_count(self.n):
            raise ValueError("wrong number of pair colors")
        for c in self.colors:
            if not 1 <= c <= self.r:
                raise ValueError(f"color {c} out of range 1..{self.r}")

    @classmethod
    def from_color_map(cls, n, r, mapping):
        """Build from a map of pairs (i, j) with i < j to colors."""
        colors = [0] * pair_count(n)
        for (i, j), c in mapping.items():
            colors[pair_index(n, i, j)] = c
        return cls(n, r, tuple(colors))

    @classmethod
    def complete(cls, n, r, color):
        return cls(n, r, (color,) * pair_count(n))

    def color(self, i, j):
        return self.colors[pair_index(self.n, i, j)]

    def induced(self, subset) -> ColoredGraph:
        sub = sorted(subset)
        colors = tuple(self.color(sub[a], sub[b]) for a, b in pairs(len(sub)))
        return ColoredGraph(len(sub), self.r, colors)

    def recolored(self, i, j, color) -> ColoredGraph:
        colors = list(self.colors)
        colors[pair_index(self.n, i, j)] = color
        return ColoredGraph(self.n, self.r, tuple(colors))

    def permuted(self, perm) -> ColoredGraph:
        """Relabel vertices: new vertex v is old vertex perm[v]."""
        colors = tuple(self.color(perm[a], perm[b]) for a, b in pairs(self.n))
        return ColoredGraph(self.n, self.r, colors)


@dataclass(frozen=True)
class DiGraph:
    """A complete labeled graph whose pairs carry one of the four arc states."""

    n: int
    colors: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.colors) != pair_count(self.n):
            raise ValueError("wrong number of pair colors")
        for c in self.colors:
            if c not in DIR_CODES:
                raise ValueError(f"bad digraph pair code {c!r}")

    @classmethod
    def from_color_map(cls, n, mapping, default=NONEDGE):
        colors = [default] * pair_count(n)
        for (i, j), c in mapping.items():
            if i > j:
                i, j = j, i
                c = mirror(c)
            colors[pair_index(n, i, j)] = c
        return cls(n, tuple(colors))

    @classmethod
    def from_arcs(cls, n, arcs, absent=NONEDGE):
        """Build from a set of ordered arcs; opposite arcs merge into BIEDGE."""
        arcset = set(arcs)
        mapping = {}
        for i, j in pairs(n):
            fwd = (i, j) in arcset
            bwd = (j, i) in arcset
            if fwd and bwd:
                mapping[(i, j)] = BIEDGE
            elif fwd:
                mapping[(i, j)] = FWD
            elif bwd:
                mapping[(i, j)] = BWD
            else:
                mapping[(i, j)] = absent
        return cls.from_color_map(n, mapping)

    def color(self, i, j):
        """Pair state as seen from the ordered pair (i, j)."""
        if i < j:
            return self.colors[pair_index(self.n, i, j)]
        return mirror(self.colors[pair_index(self.n, j, i)])

    def arcs(self):
        """Ordered arcs of the digraph (a BIEDGE pair contributes both)."""
        out = []
        for i, j in pairs(self.n):
            c = self.colors[pair_index(self.n, i, j)]
            if c in (FWD, BIEDGE):
                out.append((i, j))
            if c in (BWD, BIEDGE):
                out.append((j, i))
        return out

    def induced(self, subset) -> DiGraph:
        sub = sorted(subset)
        colors = tuple(self.color(sub[a], sub[b]) for a, b in pairs(len(sub)))
        return DiGraph(len(sub), colors)

    def recolored(self, i, j, code) -> DiGraph:
        if i > j:
            i, j = j, i
            code = mirror(code)
        colors = list(self.colors)
        colors[pair_index(self.n, i, j)] = code
        return DiGraph(self.n, tuple(colors))

    def permuted(self, perm) -> DiGraph:
        colors = tuple(self.color(perm[a], perm[b]) for a, b in pairs(self.n))
        return DiGraph(self.n, colors)

    def fits_palette(self, pal: Palette) -> bool:
        return all(c in pal.codes for c in self.colors)


@dataclass(frozen=True)
class DensityVector:
    """Exact color densities p_1..p_r, nonnegative and summing to one."""

    entries: tuple

    def __post_init__(self):
        total = Fraction(0)
        for p in self.entries:
            if not isinstance(p, Fraction):
                raise ValueError("density entries must be Fractions")
            if p < 0:
                raise ValueError("density entries must be nonnegative")
            total += p
        if total != 1:
            raise ValueError(f"densities sum to {total}, expected 1")

    @classmethod
    def of(cls, *values):
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def uniform(cls, r):
        return cls((Fraction(1, r),) * r)

    @classmethod
    def parse(cls, text):
        return cls.of(*(part.strip() for part in text.split(",")))

    @property
    def r(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class DirDensity:
    """Directed densities: p for both-way pairs, q shared by each arc direction.

    The remaining mass 1 - p - 2q is the no-arc density.  Each palette
    constrains the pair: ``compl`` forces p + 2q = 1, ``orien`` forces p = 0,
    ``undir`` forces q = 0 and ``tourn`` pins (p, q) = (0, 1/2).
    """

    p: Fraction
    q: Fraction
    palette: Palette

    def __post_init__(self):
        p, q = self.p, self.q
        if not (isinstance(p, Fraction) and isinstance(q, Fraction)):
            raise ValueError("densities must be Fractions")
        if p < 0 or q < 0 or p + 2 * q > 1:
            raise ValueError("need p >= 0, q >= 0 and p + 2q <= 1")
        kind = self.palette.kind
        if kind == "compl" and p + 2 * q != 1:
            raise ValueError("compl palette needs p + 2q = 1")
        if kind in ("orien", "tourn") and p != 0:
            raise ValueError(f"{kind} palette needs p = 0")
        if kind == "undir" and q != 0:
            raise ValueError("undir palette needs q = 0")
        if kind == "tourn" and q != Fraction(1, 2):
            raise ValueError("tourn palette needs q = 1/2")

    @classmethod
    def of(cls, p, q, pal):
        if isinstance(pal, str):
            pal = palette(pal)
        return cls(Fraction(p), Fraction(q), pal)

    @property
    def nonedge(self):
        return 1 - self.p - 2 * self.q

    def by_code(self):
        """Densities indexed by pair code."""
        return {NONEDGE: self.nonedge, BIEDGE: self.p, FWD: self.q, BWD: self.q}


@dataclass(frozen=True)
class PropertyFamily:
    """A finite forbidden family defining a hereditary property.

    Either multicolor (``r`` set, palette None) or directed (palette set).
    The property is the set of graphs containing no induced copy of any
    forbidden graph.
    """

    forbidden: tuple
    r: int = 0
    palette: Palette = None

    def __post_init__(self):
        if not self.forbidden:
            raise ValueError("forbidden family must be nonempty")
        if (self.r == 0) == (self.palette is None):
            raise ValueError("family is either multicolor (r) or directed (palette)")
        for h in self.forbidden:
            if h.n < 1:
                raise ValueError("forbidden graphs need at least one vertex")
            if self.palette is None:
                if not isinstance(h, ColoredGraph) or h.r != self.r:
                    raise ValueError("multicolor family needs ColoredGraphs with matching r")
            else:
                if not isinstance(h, DiGraph):
                    raise ValueError("directed family needs DiGraphs")
                if not h.fits_palette(self.palette):
                    raise ValueError(f"forbidden graph uses colors outside palette {self.palette.kind}")

    @classmethod
    def multicolor(cls, r, graphs):
        return cls(tuple(graphs), r=r)

    @classmethod
    def directed(cls, pal, graphs):
        if isinstance(pal, str):
            pal = palette(pal)
        return cls(tuple(graphs), palette=pal)

    @property
    def is_directed(self):
        return self.palette is not None

    @property
    def min_forbidden_order(self):
        return min(h.n for h in self.forbidden)

    def matches(self, graph) -> bool:
        """Whether a graph has this family's arity."""
        if self.is_directed:
            return isinstance(graph, DiGraph)
        return isinstance(graph, ColoredGraph) and graph.r == self.r


def _check_same_arity(g, h):
    if isinstance(g, ColoredGraph) and isinstance(h, ColoredGraph):
        if g.r != h.r:
            raise ValueError("color counts differ")
        return False
    if isinstance(g, DiGraph) and isinstance(h, DiGraph):
        return True
    raise ValueError("graphs are of different kinds")


def induced(graph, subset):
    """Restriction to a vertex subset, relabeled 0..len(subset)-1 in order."""
    return graph.induced(subset)


def contains_induced(big, small) -> bool:
    """Whether some injective vertex map carries ``small`` into ``big``
    preserving every pair color exactly (arc orientation included).

    Backtracking over partial injections with per-pair pruning; forbidden
    graphs are tiny, so no heavier isomorphism machinery is needed.
    """
    _check_same_arity(big, small)
    h, n = small.n, big.n
    if h > n:
        return False
    if h <= 1:
        return h == 0 or n >= 1

    image = [0] * h
    used = [False] * n

    def extend(v):
        if v == h:
            return True
        for x in range(n):
            if used[x]:
                continue
            ok = True
            for u in range(v):
                if small.color(u, v) != big.color(image[u], x):
                    ok = False
                    break
            if ok:
                image[v] = x
                used[x] = True
                if extend(v + 1):
                    return True
                used[x] = False
        return False

    return extend(0)


def is_member(graph, family: PropertyFamily) -> bool:
    """Membership in the hereditary property: no forbidden graph occurs induced."""
    if not family.matches(graph):
        raise ValueError("graph arity does not match the family")
    return not any(contains_induced(graph, h) for h in family.forbidden)


def hamming(g, g2) -> int:
    """Number of pairs on which the colors differ."""
    _check_same_arity(g, g2)
    if g.n != g2.n:
        raise ValueError("vertex counts differ")
    return sum(1 for a, b in zip(g.colors, g2.colors) if a != b)


def hamming_normalized(g, g2) -> Fraction:
    if g.n < 2:
        raise ValueError("need at least 2 vertices to normalize")
    return Fraction(hamming(g, g2), pair_count(g.n))


def color_density(graph):
    """Exact per-color pair densities.

    Multicolor graphs give a DensityVector; digraphs give the 4-tuple of
    densities in pair-code order (no-arc, both-ways, forward, backward).
    """
    m = pair_count(graph.n)
    if graph.n < 2:
        raise ValueError("density needs at least 2 vertices")
    if isinstance(graph, ColoredGraph):
        counts = [0] * graph.r
        for c in graph.colors:
            counts[c - 1] += 1
        return DensityVector(tuple(Fraction(k, m) for k in counts))
    counts = [0, 0, 0, 0]
    for c in graph.colors:
        counts[c] += 1
    return tuple(Fraction(k, m) for k in counts)


def dir_density(graph: DiGraph, pal) -> DirDensity:
    """Collapse a digraph's pair densities to the (p, q) parameterization,
    averaging the two arc directions."""
    if isinstance(pal, str):
        pal = palette(pal)
    dens = color_density(graph)
    return DirDensity(dens[BIEDGE], (dens[FWD] + dens[BWD]) / 2, pal)
