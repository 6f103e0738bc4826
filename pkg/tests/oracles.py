"""Independent reference implementations used only by the tests.

These deliberately avoid the package's algorithms: containment by exhaustive
injection, membership by a double loop, minima by dense search, distances by
full enumeration of colorings, partitions by full assignment enumeration.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy.optimize import minimize

from edk.graphs import FWD, ColoredGraph, DiGraph, pair_count


def brute_contains_induced(big, small) -> bool:
    """Try every injection explicitly."""
    if small.n > big.n:
        return False
    if small.n == 0:
        return True
    for verts in itertools.permutations(range(big.n), small.n):
        if all(
            small.color(u, v) == big.color(verts[u], verts[v])
            for u, v in itertools.combinations(range(small.n), 2)
        ):
            return True
    return False


def brute_is_member(graph, family) -> bool:
    return not any(brute_contains_induced(graph, h) for h in family.forbidden)


def brute_embeds(h, k_type) -> bool:
    """Every map from h's vertices to the type's, checked in full.

    Multicolor only: a pair must land on a vertex or edge set holding its
    color."""
    if h.n == 0:
        return True
    for image in itertools.product(range(k_type.k), repeat=h.n):
        if all(
            (1 << (h.color(u, v) - 1)) & k_type.phi(image[u], image[v])
            for u, v in itertools.combinations(range(h.n), 2)
        ):
            return True
    return False


def brute_embeds_dir(h, k_type) -> bool:
    """Every map checked in full against the directed embedding rules,
    with an independent mirror computation for oriented pair sets."""
    from edk.graphs import BIEDGE, BWD, NONEDGE, mirror_mask

    if h.n == 0:
        return True
    k = k_type.k
    for image in itertools.product(range(k), repeat=h.n):
        ok = True
        for u, v in itertools.combinations(range(h.n), 2):
            x, y = image[u], image[v]
            if x == y:
                continue
            mask = k_type.edge_sets[_tri_index(k, min(x, y), max(x, y))]
            if x > y:
                mask = mirror_mask(mask)
            if not (1 << h.color(u, v)) & mask:
                ok = False
                break
        if not ok:
            continue
        for cls in range(k):
            group = [v for v in range(h.n) if image[v] == cls]
            vs = k_type.vertex_sets[cls]
            arrows = bin(vs & 12).count("1")
            for a, b in itertools.combinations(group, 2):
                c = h.color(a, b)
                if c == NONEDGE and not vs & (1 << NONEDGE):
                    ok = False
                elif c == BIEDGE and not vs & (1 << BIEDGE):
                    ok = False
                elif c in (FWD, BWD) and arrows == 0:
                    ok = False
            if ok and arrows == 1 and brute_has_directed_cycle(h.induced(group)):
                ok = False
            if not ok:
                break
        if ok:
            return True
    return False


def _tri_index(k, i, j):
    return i * (2 * k - i - 1) // 2 + (j - i - 1)


def brute_has_directed_cycle(d: DiGraph) -> bool:
    """Enumerate all vertex sequences of every length as candidate cycles."""
    for length in range(2, d.n + 1):
        for seq in itertools.permutations(range(d.n), length):
            closed = seq + (seq[0],)
            if all(d.color(closed[i], closed[i + 1]) == FWD for i in range(length)):
                return True
    return False


def brute_exact_dist(graph, family, alphabet) -> int:
    """Minimum Hamming distance to a member by enumerating every coloring."""
    m = pair_count(graph.n)
    best = None
    for colors in itertools.product(alphabet, repeat=m):
        if isinstance(graph, DiGraph):
            cand = DiGraph(graph.n, colors)
        else:
            cand = ColoredGraph(graph.n, graph.r, colors)
        if not brute_is_member(cand, family):
            continue
        dist = sum(1 for a, b in zip(graph.colors, colors) if a != b)
        if best is None or dist < best:
            best = dist
    return best


def min_transitive_partition(t: DiGraph) -> int:
    """Fewest parts of a tournament with every part transitive, by trying
    every assignment."""

    def part_ok(members):
        for a, b, c in itertools.permutations(members, 3):
            if t.color(a, b) == FWD and t.color(b, c) == FWD and t.color(c, a) == FWD:
                return False
        return True

    for count in range(1, t.n + 1):
        for assign in itertools.product(range(count), repeat=t.n):
            groups = [[v for v in range(t.n) if assign[v] == g] for g in range(count)]
            if all(part_ok(g) for g in groups):
                return count
    return t.n


def _simplex_grid(k, steps):
    """All nonnegative integer combinations summing to ``steps``, normalized."""
    combos = itertools.combinations(range(steps + k - 1), k - 1)
    pts = []
    for combo in combos:
        cuts = (-1,) + combo + (steps + k - 1,)
        pts.append([cuts[i + 1] - cuts[i] - 1 for i in range(k)])
    return np.array(pts, dtype=float) / steps


def _quad(m, w):
    return float(w @ m @ w)


def grid_quadratic_min(matrix, step=1e-3):
    """Numeric minimum of w' M w over the simplex.

    Dense grid at the requested step for k <= 3; for larger k a coarse grid
    followed by repeated local zooming, then a constrained local polish from
    the best points found.  Tuned for the random matrices of the tests.
    """
    m = np.asarray(matrix, dtype=float)
    k = m.shape[0]
    if k == 1:
        return float(m[0, 0])

    if k == 2:
        t = np.arange(0.0, 1.0 + step, step)
        w = np.stack([t, 1.0 - t], axis=1)
        vals = np.einsum("ij,jk,ik->i", w, m, w)
        best_w = w[int(np.argmin(vals))]
        best = float(np.min(vals))
    elif k == 3:
        steps = int(round(1.0 / step))
        i, j = np.meshgrid(np.arange(steps + 1), np.arange(steps + 1), indexing="ij")
        keep = (i + j) <= steps
        w = np.stack([i[keep], j[keep], steps - i[keep] - j[keep]], axis=1) / steps
        vals = np.einsum("ij,jk,ik->i", w, m, w)
        best_w = w[int(np.argmin(vals))]
        best = float(np.min(vals))
    else:
        coarse = 24
        w = _simplex_grid(k, coarse)
        vals = np.einsum("ij,jk,ik->i", w, m, w)
        order = np.argsort(vals)
        candidates = w[order[:60]]
        h = 1.0 / coarse
        offsets = np.array(list(itertools.product((-2, -1, 0, 1, 2), repeat=k - 1)))
        while h > step / 4:
            h /= 4.0
            pool = []
            for c in candidates:
                pts = np.tile(c[:-1], (len(offsets), 1)) + offsets * h
                last = 1.0 - pts.sum(axis=1)
                full = np.concatenate([pts, last[:, None]], axis=1)
                ok = (full >= -1e-12).all(axis=1)
                pool.append(np.clip(full[ok], 0.0, 1.0))
            pool = np.concatenate(pool)
            pool /= pool.sum(axis=1, keepdims=True)
            vals = np.einsum("ij,jk,ik->i", pool, m, pool)
            order = np.argsort(vals)
            candidates = pool[order[:25]]
        best_w = candidates[0]
        best = float(vals[order[0]])

    starts = [best_w, np.full(k, 1.0 / k)]
    starts.extend(np.eye(k))
    constraints = [{"type": "eq", "fun": lambda w: w.sum() - 1.0}]
    bounds = [(0.0, 1.0)] * k
    for w0 in starts:
        res = minimize(
            lambda w: _quad(m, w),
            w0,
            method="SLSQP",
            bounds=bounds,
            constraints=constraints,
            options={"maxiter": 300, "ftol": 1e-14},
        )
        if res.success or res.fun is not None:
            best = min(best, float(res.fun))
    return best
