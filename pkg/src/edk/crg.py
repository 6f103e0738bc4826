"""Types (colored regularity graphs): representation, embedding tests,
admissibility against a forbidden family, and bounded enumeration.

A type is a complete graph whose vertices and edges carry nonempty color
sets; vertex sets are proper subsets.  A graph embeds in a type when some
(not necessarily injective) vertex map keeps every pair color inside the set
carried by the image vertex or edge.  The admissible types of a family are
those into which no forbidden graph embeds; editing toward one of them always
produces a member.

Color sets are stored as bitmasks.  Multicolor: bit c-1 for color c in 1..r.
Directed: one bit per pair code, with single-arc bits read relative to the
stored vertex order, mirrored when the pair is viewed the other way round.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EnumerationGuardError
from .graphs import (
    ARROW_MASK,
    BIEDGE,
    BWD,
    FWD,
    NONEDGE,
    ColoredGraph,
    DiGraph,
    Palette,
    PropertyFamily,
    mirror_mask,
    pair_count,
    pair_index,
    pairs,
)
from .spectrum import _arcs_acyclic

DEFAULT_CANDIDATE_CEILING = 5_000_000


def color_set_mask(colors, r=None) -> int:
    """Bitmask for a set of multicolor colors (1..r)."""
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def mask_colors(mask: int):
    """Multicolor colors present in a bitmask, ascending."""
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


def dir_set_mask(codes) -> int:
    m = 0
    for c in codes:
        m |= 1 << c
    return m


def dir_mask_codes(mask: int):
    return tuple(c for c in (NONEDGE, BIEDGE, FWD, BWD) if mask & (1 << c))


@dataclass(frozen=True)
class RType:
    """A multicolor type on k vertices."""

    r: int
    vertex_sets: tuple
    edge_sets: tuple

    def __post_init__(self):
        full = (1 << self.r) - 1
        if len(self.edge_sets) != pair_count(self.k):
            raise ValueError("wrong number of edge sets")
        for m in self.vertex_sets:
            if not 0 < m < full:
                raise ValueError("vertex sets must be nonempty proper color subsets")
        for m in self.edge_sets:
            if not 0 < m <= full:
                raise ValueError("edge sets must be nonempty")

    @property
    def k(self) -> int:
        return len(self.vertex_sets)

    def phi(self, x, y) -> int:
        """Color-set mask at a vertex (x == y) or edge."""
        if x == y:
            return self.vertex_sets[x]
        return self.edge_sets[pair_index(self.k, x, y)]

    def encoding(self):
        return (self.vertex_sets, self.edge_sets)

    def permuted(self, perm) -> RType:
        k = self.k
        vsets = tuple(self.vertex_sets[perm[x]] for x in range(k))
        esets = tuple(self.phi(perm[a], perm[b]) for a, b in pairs(k))
        return RType(self.r, vsets, esets)

    def sub_type(self, subset) -> RType:
        sub = sorted(subset)
        if not sub:
            raise ValueError("sub-type needs at least one vertex")
        vsets = tuple(self.vertex_sets[x] for x in sub)
        esets = tuple(self.phi(sub[a], sub[b]) for a, b in pairs(len(sub)))
        return RType(self.r, vsets, esets)


@dataclass(frozen=True)
class DirType:
    """A directed type on k vertices over a palette.

    Edge masks are stored for the pair (x, y) with x < y; ``phi(y, x)`` is
    the mirrored mask, so the arc symmetries cannot be violated.  A vertex
    set may contain one arrow (its class must then stay acyclic), or both.
    """

    palette: Palette
    vertex_sets: tuple
    edge_sets: tuple

    def __post_init__(self):
        full = self.palette.mask
        if len(self.edge_sets) != pair_count(self.k):
            raise ValueError("wrong number of edge sets")
        for m in self.vertex_sets:
            if not 0 < m < full or m & ~full:
                raise ValueError("vertex sets must be nonempty proper palette subsets")
        for m in self.edge_sets:
            if not 0 < m <= full or m & ~full:
                raise ValueError("edge sets must be nonempty palette subsets")

    @property
    def k(self) -> int:
        return len(self.vertex_sets)

    def phi(self, x, y) -> int:
        """Mask at a vertex or at the ordered pair (x, y)."""
        if x == y:
            return self.vertex_sets[x]
        m = self.edge_sets[pair_index(self.k, x, y)]
        return m if x < y else mirror_mask(m)

    def encoding(self):
        return (self.vertex_sets, self.edge_sets)

    def permuted(self, perm) -> DirType:
        k = self.k
        vsets = tuple(self.vertex_sets[perm[x]] for x in range(k))
        esets = []
        for a, b in pairs(k):
            m = self.phi(perm[a], perm[b])  # oriented as (new a, new b)
            esets.append(m)
        return DirType(self.palette, vsets, tuple(esets))

    def sub_type(self, subset) -> DirType:
        sub = sorted(subset)
        if not sub:
            raise ValueError("sub-type needs at least one vertex")
        vsets = tuple(self.vertex_sets[x] for x in sub)
        esets = tuple(self.phi(sub[a], sub[b]) for a, b in pairs(len(sub)))
        return DirType(self.palette, vsets, tuple(esets))


def sub_type(k_type, subset):
    return k_type.sub_type(subset)


def canonical_key(k_type):
    """Lexicographically minimal encoding over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(k_type.k)):
        enc = k_type.permuted(perm).encoding()
        if best is None or enc < best:
            best = enc
    return best


def canonicalize(k_type):
    key = canonical_key(k_type)
    if isinstance(k_type, RType):
        return RType(k_type.r, key[0], key[1])
    return DirType(k_type.palette, key[0], key[1])


def embeds(h: ColoredGraph, k_type: RType) -> bool:
    """Whether some vertex map carries every pair color of ``h`` into the
    color set of its image vertex or edge."""
    if h.r != k_type.r:
        raise ValueError("color counts differ")
    if h.n == 0:
        return True
    k = k_type.k
    bits = [1 << (c - 1) for c in h.colors]
    image = [0] * h.n

    def place(v):
        if v == h.n:
            return True
        for x in range(k):
            ok = True
            for u in range(v):
                if not bits[pair_index(h.n, u, v)] & k_type.phi(image[u], x):
                    ok = False
                    break
            if ok:
                image[v] = x
                if place(v + 1):
                    return True
        return False

    return place(0)


def embeds_dir(h: DiGraph, k_type: DirType) -> bool:
    """Directed embedding test.

    Cross pairs must carry a color allowed on the image edge (orientation
    matters).  Inside one class, pair states missing from the vertex set are
    forbidden, except that a class whose set holds exactly one arrow accepts
    any single arcs that form an acyclic digraph.
    """
    if h.n == 0:
        return True
    k = k_type.k
    image = [0] * h.n
    members = [[] for _ in range(k)]
    arrow_count = [bin(vs & ARROW_MASK).count("1") for vs in k_type.vertex_sets]

    def class_ok(v, x):
        vs = k_type.vertex_sets[x]
        arcs = []
        for u in members[x]:
            c = h.color(u, v)
            if c == NONEDGE:
                if not vs & (1 << NONEDGE):
                    return False
            elif c == BIEDGE:
                if not vs & (1 << BIEDGE):
                    return False
            elif arrow_count[x] == 0:
                return False
        if arrow_count[x] == 1:
            group = members[x] + [v]
            for a, b in itertools.combinations(group, 2):
                c = h.color(a, b)
                if c == FWD:
                    arcs.append((a, b))
                elif c == BWD:
                    arcs.append((b, a))
            if not _arcs_acyclic(h.n, arcs):
                return False
        return True

    def place(v):
        if v == h.n:
            return True
        for x in range(k):
            ok = True
            for u in range(v):
                y = image[u]
                if y == x:
                    continue
                if not (1 << h.color(u, v)) & k_type.phi(y, x):
                    ok = False
                    break
            if ok and class_ok(v, x):
                image[v] = x
                members[x].append(v)
                if place(v + 1):
                    return True
                members[x].pop()
        return False

    return place(0)


def in_admissible_set(k_type, family: PropertyFamily) -> bool:
    """Whether no forbidden graph embeds in the type."""
    if family.is_directed:
        if not isinstance(k_type, DirType) or k_type.palette != family.palette:
            raise ValueError("type palette does not match the family")
        return not any(embeds_dir(h, k_type) for h in family.forbidden)
    if not isinstance(k_type, RType) or k_type.r != family.r:
        raise ValueError("type arity does not match the family")
    return not any(embeds(h, k_type) for h in family.forbidden)


def _choices(family: PropertyFamily):
    if family.is_directed:
        full = family.palette.mask
        vertex = [m for m in range(1, full + 1) if m != full and not m & ~full]
        edge = [m for m in range(1, full + 1) if not m & ~full]
    else:
        full = (1 << family.r) - 1
        vertex = list(range(1, full))
        edge = list(range(1, full + 1))
    return vertex, edge


def _make(family, vsets, esets):
    if family.is_directed:
        return DirType(family.palette, vsets, esets)
    return RType(family.r, vsets, esets)


def _extend_edges(parent_esets, row, k):
    """Edge layout for k vertices from a (k-1)-type plus the new vertex's row."""
    esets = []
    for a, b in pairs(k):
        if b == k - 1:
            esets.append(row[a])
        else:
            esets.append(parent_esets[pair_index(k - 1, a, b)])
    return tuple(esets)


def enumerate_types(family: PropertyFamily, kmax: int,
                    candidate_ceiling: int = DEFAULT_CANDIDATE_CEILING):
    """Yield every admissible type with at most ``kmax`` vertices, once per
    isomorphism class, in canonical labeling, ordered by vertex count and
    then by canonical encoding.

    Types on k vertices are built by extending the admissible types on k-1
    vertices (every restriction of an admissible type is admissible, so this
    loses nothing).  Refuses with :class:`EnumerationGuardError` when the raw
    candidate count would pass ``candidate_ceiling``.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    vertex_choices, edge_choices = _choices(family)

    level = []
    for vs in vertex_choices:
        t = _make(family, (vs,), ())
        if in_admissible_set(t, family):
            level.append(t)
    level.sort(key=lambda t: t.encoding())
    yield from level

    examined = len(vertex_choices)
    for k in range(2, kmax + 1):
        examined += len(level) * len(vertex_choices) * len(edge_choices) ** (k - 1)
        if examined > candidate_ceiling:
            raise EnumerationGuardError(examined, candidate_ceiling)
        seen = {}
        for parent in level:
            for vs in vertex_choices:
                vsets = parent.vertex_sets + (vs,)
                for row in itertools.product(edge_choices, repeat=k - 1):
                    cand = _make(family, vsets, _extend_edges(parent.edge_sets, row, k))
                    if not in_admissible_set(cand, family):
                        continue
                    key = canonical_key(cand)
                    if key not in seen:
                        seen[key] = _make(family, key[0], key[1])
        level = sorted(seen.values(), key=lambda t: t.encoding())
        yield from level
