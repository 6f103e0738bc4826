"""Ground truth at desk scale: exact edit distance by branch and bound,
seeded random graph samplers, and Monte Carlo estimation.

The exact search finds one induced forbidden copy, then branches on giving
each of its pairs each different allowed color; some pair of any copy must
change in every solution, so the search is complete.  Branched pairs freeze
along a branch, which removes overlap between sibling subtrees, and a greedy
packing of pair-disjoint forbidden copies gives an admissible lower bound for
pruning.
"""

from __future__ import annotations

import os
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .distance import dist_upper
from .editing import edit_by_dirtype, edit_by_type
from .errors import SizeGuardError
from .graphs import (
    ColoredGraph,
    DensityVector,
    DiGraph,
    DirDensity,
    PropertyFamily,
    pair_count,
    pair_index,
)

DEFAULT_GUARD_MULTICOLOR = 9
DEFAULT_GUARD_DIRECTED = 8

GUARD_ENV = "EDK_GUARD_N"


def size_guard(family: PropertyFamily) -> int:
    env = os.environ.get(GUARD_ENV)
    if env:
        return int(env)
    return DEFAULT_GUARD_DIRECTED if family.is_directed else DEFAULT_GUARD_MULTICOLOR


def _copy_pairs(graph, colors, h, banned=frozenset()):
    """Pair indices of one induced copy of ``h`` under the working colors, or
    None.  Copies touching a pair in ``banned`` are skipped."""
    n, hn = graph.n, h.n
    if hn > n:
        return None

    if isinstance(graph, DiGraph):
        def pair_color(i, j):
            if i < j:
                return colors[pair_index(n, i, j)]
            c = colors[pair_index(n, j, i)]
            return c ^ 1 if c >= 2 else c  # mirror single arcs
    else:
        def pair_color(i, j):
            return colors[pair_index(n, min(i, j), max(i, j))]

    image = [0] * hn
    used = [False] * n

    def extend(v):
        if v == hn:
            return True
        for x in range(n):
            if used[x]:
                continue
            ok = True
            for u in range(v):
                y = image[u]
                if banned and pair_index(n, min(x, y), max(x, y)) in banned:
                    ok = False
                    break
                if h.color(u, v) != pair_color(y, x):
                    ok = False
                    break
            if ok:
                image[v] = x
                used[x] = True
                if extend(v + 1):
                    return True
                used[x] = False
        return False

    if not extend(0):
        return None
    verts = sorted(image)
    return [pair_index(n, verts[a], verts[b]) for a in range(hn) for b in range(a + 1, hn)]


def _find_copy(graph, family, colors, banned=frozenset()):
    for h in family.forbidden:
        found = _copy_pairs(graph, colors, h, banned)
        if found is not None:
            return found
    return None


def _greedy_disjoint_bound(graph, family, colors):
    """Number of pairwise pair-disjoint forbidden copies; each needs a change."""
    banned = set()
    count = 0
    while True:
        found = _find_copy(graph, family, colors, frozenset(banned))
        if found is None:
            return count
        count += 1
        banned.update(found)


def exact_dist(graph, family: PropertyFamily, max_n=None):
    """Exact minimum number of pair recolorings into the property, with a
    witness member on the same vertices.

    Guarded by default at small n (override with ``max_n`` or the
    EDK_GUARD_N environment variable).
    """
    if not family.matches(graph):
        raise ValueError("graph arity does not match the family")
    limit = max_n if max_n is not None else size_guard(family)
    if graph.n > limit:
        raise SizeGuardError(
            f"exact search guarded at n <= {limit}; pass max_n or set {GUARD_ENV} to override"
        )
    if family.is_directed:
        alphabet = family.palette.sorted_codes()
    else:
        alphabet = tuple(range(1, family.r + 1))

    colors = list(graph.colors)
    frozen = [False] * len(colors)
    best = {"cost": None, "colors": None}

    def search(cost):
        if best["cost"] is not None and cost >= best["cost"]:
            return
        copy = _find_copy(graph, family, colors)
        if copy is None:
            best["cost"] = cost
            best["colors"] = tuple(colors)
            return
        if best["cost"] is not None:
            bound = _greedy_disjoint_bound(graph, family, colors)
            if cost + bound >= best["cost"]:
                return
        newly = []
        for e in copy:
            if frozen[e]:
                continue
            frozen[e] = True
            newly.append(e)
            orig = colors[e]
            for c in alphabet:
                if c == orig:
                    continue
                colors[e] = c
                search(cost + 1)
            colors[e] = orig
        for e in newly:
            frozen[e] = False

    search(0)
    if best["cost"] is None:
        raise ValueError("no member exists on this vertex count")
    if family.is_directed:
        witness = DiGraph(graph.n, best["colors"])
    else:
        witness = ColoredGraph(graph.n, graph.r, best["colors"])
    return best["cost"], witness


def sample_rgraph(n, p: DensityVector, seed) -> ColoredGraph:
    """Each pair colored independently by the density vector; seeded."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    cumulative = []
    run = Fraction(0)
    for w in p.entries:
        run += w
        cumulative.append(float(run))
    colors = []
    for _ in range(pair_count(n)):
        u = rng.random()
        colors.append(next((i + 1 for i, c in enumerate(cumulative) if u < c), p.r))
    return ColoredGraph(n, p.r, tuple(colors))


def sample_digraph(n, d: DirDensity, seed) -> DiGraph:
    """Pairs drawn independently: no-arc, two-way, forward, backward with
    probabilities (1-p-2q, p, q, q)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    weights = (d.nonedge, d.p, d.q, d.q)
    cumulative = []
    run = Fraction(0)
    for w in weights:
        run += w
        cumulative.append(float(run))
    colors = []
    for _ in range(pair_count(n)):
        u = rng.random()
        colors.append(next((i for i, c in enumerate(cumulative) if u < c), 3))
    return DiGraph(n, tuple(colors))


def derive_seed(seed, index) -> int:
    return seed * 1_000_003 + index


@dataclass(frozen=True)
class EstimateStats:
    n: int
    trials: int
    mode: str
    values: tuple  # normalized distances, one per trial
    mean: Fraction
    std: float
    min: Fraction
    max: Fraction


def _one_estimate(args):
    n, dens, family, mode, kmax, max_n, certificate, seed = args
    if family.is_directed:
        g = sample_digraph(n, dens, seed)
    else:
        g = sample_rgraph(n, dens, seed)
    if mode == "exact":
        edits, _ = exact_dist(g, family, max_n=max_n)
        return Fraction(edits, pair_count(n))
    k_type, weights = certificate
    if family.is_directed:
        _, changes = edit_by_dirtype(g, k_type, weights, seed)
    else:
        _, changes = edit_by_type(g, k_type, weights, seed)
    return Fraction(changes, pair_count(n))


def estimate_dist(n, dens, family: PropertyFamily, trials, seed,
                  kmax=2, mode="auto", max_n=None, map_fn=map) -> EstimateStats:
    """Monte Carlo estimate of the normalized distance of random graphs.

    "exact" mode runs the branch-and-bound oracle per sample; "algorithmic"
    edits by the dist_upper certificate type, so its values upper-bound the
    exact ones sample by sample under shared seeds.  ``map_fn`` lets callers
    fan trials out to a worker pool; results do not depend on scheduling.
    """
    if mode == "auto":
        mode = "exact" if n <= (max_n if max_n is not None else size_guard(family)) else "algorithmic"
    if mode not in ("exact", "algorithmic"):
        raise ValueError("mode must be exact, algorithmic or auto")
    certificate = None
    if mode == "algorithmic":
        bound = dist_upper(family, dens, kmax)
        certificate = (bound.certificate.crg_type, bound.certificate.weights)
    jobs = [
        (n, dens, family, mode, kmax, max_n, certificate, derive_seed(seed, i))
        for i in range(trials)
    ]
    values = tuple(map_fn(_one_estimate, jobs))
    mean = sum(values, Fraction(0)) / trials
    std = statistics.pstdev(float(v) for v in values) if trials > 1 else 0.0
    return EstimateStats(n, trials, mode, values, mean, std, min(values), max(values))
