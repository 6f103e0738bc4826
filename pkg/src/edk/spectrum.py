"""Clique spectra and chromatic numbers.

A tuple (a_1, ..., a_r) is *weakly good* for a family when some forbidden
graph splits into sum(a) labeled parts, a_i of them tagged with color i, such
that no part tagged i induces an edge of color i.  *Strongly good* instead
requires each tagged part to be a monochromatic clique of its color.  For
digraphs the tuple is (a_0, a_1, a_2) over the no-arc, oriented and both-ways
states: weak asks the no-arc parts to induce no empty pair, the oriented parts
to induce an acyclic set of arcs and the both-ways parts to induce no two-way
pair; strong asks for all-empty parts, transitive tournaments and all-two-way
parts respectively.

The (weak or strong) clique spectrum is the finite set of tuples that are NOT
good, and the chromatic number is one more than the largest tuple sum in it.
Parts tagged with a color whose count a_i is zero do not exist, and refined
parts may be empty, so any tuple whose sum reaches the smallest forbidden
order is good via singleton parts; that bounds the enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import BIEDGE, BWD, FWD, NONEDGE, DiGraph, PropertyFamily

WEAK = "weak"
STRONG = "strong"


@dataclass(frozen=True)
class CliqueSpectrum:
    mode: str
    tuples: frozenset

    @property
    def max_sum(self) -> int:
        return max(sum(t) for t in self.tuples)

    def sorted_tuples(self):
        return tuple(sorted(self.tuples))


def is_acyclic(d: DiGraph) -> bool:
    """Whether the single-arc pairs contain no directed cycle.

    Both-ways and no-arc pairs are ignored.
    """
    arcs = []
    for i in range(d.n):
        for j in range(i + 1, d.n):
            c = d.color(i, j)
            if c == FWD:
                arcs.append((i, j))
            elif c == BWD:
                arcs.append((j, i))
    return _arcs_acyclic(d.n, arcs)


def _arcs_acyclic(n, arcs) -> bool:
    succ = [[] for _ in range(n)]
    for i, j in arcs:
        succ[i].append(j)
    state = [0] * n  # 0 new, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, 0)]
        state[start] = 1
        while stack:
            v, k = stack[-1]
            if k < len(succ[v]):
                stack[-1] = (v, k + 1)
                w = succ[v][k]
                if state[w] == 1:
                    return False
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, 0))
            else:
                state[v] = 2
                stack.pop()
    return True


def is_transitive_tournament(d: DiGraph) -> bool:
    """Every pair a single arc and the arc relation a strict total order."""
    if any(c in (NONEDGE, BIEDGE) for c in d.colors):
        return False
    return is_acyclic(d)


def _validate_tuple(t, family: PropertyFamily):
    t = tuple(t)
    if any(a < 0 for a in t):
        raise ValueError("tuple entries must be nonnegative")
    if family.is_directed:
        if len(t) != 3:
            raise ValueError("directed tuples have three entries")
        pal = family.palette
        if t[0] and NONEDGE not in pal.codes:
            raise ValueError("a_0 must be 0 when the palette has no empty pairs")
        if t[1] and FWD not in pal.codes:
            raise ValueError("a_1 must be 0 when the palette has no arcs")
        if t[2] and BIEDGE not in pal.codes:
            raise ValueError("a_2 must be 0 when the palette has no two-way pairs")
    elif len(t) != family.r:
        raise ValueError(f"tuple length {len(t)} does not match r={family.r}")
    return t


def _part_labels(t):
    labels = []
    for idx, a in enumerate(t):
        labels.extend([idx] * a)
    return labels


def _multicolor_good(h, labels, strong) -> bool:
    # labels[part] = color index (0-based); weak forbids that color inside the
    # part, strong demands it on every inside pair.
    members = [[] for _ in labels]

    def fits(v, part):
        want = labels[part] + 1
        for u in members[part]:
            c = h.color(u, v)
            if strong:
                if c != want:
                    return False
            elif c == want:
                return False
        return True

    def place(v):
        if v == h.n:
            return True
        for part, lab in enumerate(labels):
            # identical parts fill left to right
            if part > 0 and labels[part - 1] == lab and not members[part - 1]:
                continue
            if fits(v, part):
                members[part].append(v)
                if place(v + 1):
                    return True
                members[part].pop()
        return False

    return place(0)


def _directed_good(h, labels, strong) -> bool:
    members = [[] for _ in labels]

    def fits(v, part):
        lab = labels[part]
        for u in members[part]:
            c = h.color(u, v)
            if lab == 0:
                if strong:
                    if c != NONEDGE:
                        return False
                elif c == NONEDGE:
                    return False
            elif lab == 2:
                if strong:
                    if c != BIEDGE:
                        return False
                elif c == BIEDGE:
                    return False
            else:
                if strong and c in (NONEDGE, BIEDGE):
                    return False
        if lab == 1:
            group = members[part] + [v]
            arcs = []
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
        for part, lab in enumerate(labels):
            if part > 0 and labels[part - 1] == lab and not members[part - 1]:
                continue
            if fits(v, part):
                members[part].append(v)
                if place(v + 1):
                    return True
                members[part].pop()
        return False

    return place(0)


def _good_for_family(t, family, strong) -> bool:
    labels = _part_labels(t)
    if not labels:
        return False  # zero parts cover no vertex
    for h in family.forbidden:
        if family.is_directed:
            if _directed_good(h, labels, strong):
                return True
        elif _multicolor_good(h, labels, strong):
            return True
    return False


def is_weakly_good(t, family: PropertyFamily) -> bool:
    return _good_for_family(_validate_tuple(t, family), family, strong=False)


def is_strongly_good(t, family: PropertyFamily) -> bool:
    return _good_for_family(_validate_tuple(t, family), family, strong=True)


def _candidate_tuples(family: PropertyFamily):
    bound = family.min_forbidden_order  # sums at or above it are always good
    if family.is_directed:
        pal = family.palette
        caps = (
            bound if NONEDGE in pal.codes else 1,
            bound if FWD in pal.codes else 1,
            bound if BIEDGE in pal.codes else 1,
        )
        for t in itertools.product(*(range(c) for c in caps)):
            if sum(t) < bound:
                yield t
    else:
        for t in itertools.product(range(bound), repeat=family.r):
            if sum(t) < bound:
                yield t


def clique_spectrum(family: PropertyFamily, mode: str = WEAK) -> CliqueSpectrum:
    """The exact set of not-good tuples under palette zero-constraints."""
    if mode not in (WEAK, STRONG):
        raise ValueError(f"mode must be weak or strong, got {mode!r}")
    strong = mode == STRONG
    bad = frozenset(
        t for t in _candidate_tuples(family) if not _good_for_family(t, family, strong)
    )
    return CliqueSpectrum(mode, bad)


def chromatic_number(family: PropertyFamily, mode: str = WEAK) -> int:
    """One more than the largest tuple sum in the clique spectrum.

    A value of 1 means every single-part tuple is already good; no editing
    bound exists then.  Under the tournament palette this happens exactly
    when some forbidden tournament is transitive, which makes the property
    finite (trivial).
    """
    return 1 + clique_spectrum(family, mode).max_sum


def is_trivial(family: PropertyFamily) -> bool:
    """Whether the editing bounds degenerate (weak chromatic number 1)."""
    return chromatic_number(family, WEAK) == 1
