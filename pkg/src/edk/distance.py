"""The edit distance function machinery.

For a type K and densities, the penalty matrix M has one entry per ordered
vertex pair of K: the probability mass of colors NOT allowed there.  f is the
average entry (uniform weights), g the exact minimum of the quadratic form
w' M w over the probability simplex.  Minimizing g over admissible types
bounds the edit distance function from above; Turan-style counting bounds it
from below.

g is computed by support enumeration: on the support of a minimizer the
gradient is constant, so solving the stationarity system for every support
and keeping the nonnegative candidates is exact even though M is usually
indefinite.  Supports whose system is singular are skipped; their minima
reappear on smaller supports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .crg import DirType, RType, enumerate_types, mask_colors
from .errors import AsymmetricFamilyError, TrivialPropertyError
from .graphs import (
    ARROW_MASK,
    BIEDGE,
    NONEDGE,
    DensityVector,
    DirDensity,
    PropertyFamily,
    pairs,
)
from .ratlin import simplex_max_lex, solve_linear
from .spectrum import STRONG, WEAK, clique_spectrum

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class UpperCertificate:
    """A type and simplex weights witnessing an upper bound at a density."""

    crg_type: object
    weights: tuple
    density: object

    def recompute(self) -> Fraction:
        m = m_matrix_for(self.crg_type, self.density)
        return quad_form(m, self.weights)


@dataclass(frozen=True)
class DistBound:
    value: Fraction
    kind: str  # upper | lower
    kmax: int = None
    certificate: object = None


def m_matrix(k_type: RType, p: DensityVector):
    """Entry (i, j) is one minus the density mass allowed on that pair."""
    if k_type.r != p.r:
        raise ValueError("density length does not match the type")
    k = k_type.k

    def entry(x, y):
        return ONE - sum((p[c - 1] for c in mask_colors(k_type.phi(x, y))), ZERO)

    return tuple(tuple(entry(x, y) for y in range(k)) for x in range(k))


def m_matrix_dir(k_type: DirType, d: DirDensity):
    """Directed penalty matrix; each arc direction carries weight q."""
    if k_type.palette != d.palette:
        raise ValueError("density palette does not match the type")
    k = k_type.k
    p_none = d.nonedge

    def entry(x, y):
        mask = k_type.phi(x, y)
        val = ONE
        if mask & (1 << NONEDGE):
            val -= p_none
        if mask & (1 << BIEDGE):
            val -= d.p
        val -= d.q * bin(mask & ARROW_MASK).count("1")
        return val

    return tuple(tuple(entry(x, y) for y in range(k)) for x in range(k))


def m_matrix_for(k_type, dens):
    if isinstance(k_type, RType):
        return m_matrix(k_type, dens)
    return m_matrix_dir(k_type, dens)


def quad_form(m, w) -> Fraction:
    k = len(m)
    total = ZERO
    for i in range(k):
        if w[i] == 0:
            continue
        row = m[i]
        total += w[i] * sum((w[j] * row[j] for j in range(k) if w[j] != 0), ZERO)
    return total


def f_value(m) -> Fraction:
    """Average entry: the quadratic form at uniform weights."""
    k = len(m)
    return sum((e for row in m for e in row), ZERO) / (k * k)


def g_value(m):
    """Exact global minimum of w' M w over the simplex and a minimizing w.

    Returns (value, weights).  On the returned support, (M w) is constant and
    equal to the value.
    """
    k = len(m)
    best_val = None
    best_w = None
    for mask in range(1, 1 << k):
        support = [i for i in range(k) if mask >> i & 1]
        s = len(support)
        rows = [[m[i][j] for j in support] + [Fraction(-1)] for i in support]
        rows.append([ONE] * s + [ZERO])
        sol = solve_linear(rows, [ZERO] * s + [ONE])
        if sol is None:
            continue
        if any(v < 0 for v in sol[:s]):
            continue
        w = [ZERO] * k
        for i, v in zip(support, sol):
            w[i] = v
        val = quad_form(m, w)
        if best_val is None or val < best_val:
            best_val = val
            best_w = tuple(w)
    return best_val, best_w


def _min_entry(m):
    return min(e for row in m for e in row)


def _check_density(family, dens):
    if family.is_directed:
        if not isinstance(dens, DirDensity) or dens.palette != family.palette:
            raise ValueError("expected a DirDensity for this palette")
    else:
        if not isinstance(dens, DensityVector) or dens.r != family.r:
            raise ValueError(f"expected a DensityVector with r={family.r}")


def _type_list(family, kmax, types, **kwargs):
    if types is None:
        types = list(enumerate_types(family, kmax, **kwargs))
    if not types:
        raise TrivialPropertyError(
            "no admissible single-vertex type exists; the property has no large members"
        )
    return types


def dist_upper(family: PropertyFamily, dens, kmax: int, types=None, **kwargs) -> DistBound:
    """Certified upper bound: the least g over admissible types of at most
    kmax vertices, with the witnessing type and weights."""
    _check_density(family, dens)
    types = _type_list(family, kmax, types, **kwargs)
    best_val = None
    best = None
    cache = {}
    for t in types:
        m = m_matrix_for(t, dens)
        if m in cache:
            val, w = cache[m]
        else:
            if best_val is not None and _min_entry(m) >= best_val:
                continue
            val, w = g_value(m)
            cache[m] = (val, w)
        if best_val is None or val < best_val:
            best_val = val
            best = UpperCertificate(t, w, dens)
    return DistBound(best_val, "upper", kmax, best)


def dist_lower_turan(family: PropertyFamily) -> DistBound:
    """Turan-counting lower bound on the maximum of the distance function.

    Multicolor gives 1/(r (chi_strong - 1)) at uniform densities; a palette
    gives 1/(|P| (chi_strong - 1)).
    """
    chi = 1 + clique_spectrum(family, STRONG).max_sum
    if chi < 2:
        raise TrivialPropertyError("trivial property: strong chromatic number is 1")
    classes = family.palette.size if family.is_directed else family.r
    value = Fraction(1, classes * (chi - 1))
    return DistBound(value, "lower", None, {"chi_strong": chi, "color_classes": classes})


def _affine_forms(family, types):
    """Deduped affine descriptions of f per type, as (constant, coefficients)
    over the reduced density variables of the arity."""
    forms = {}
    for t in types:
        k = t.k
        kk = Fraction(k * k)
        if isinstance(t, RType):
            counts = [ZERO] * t.r
            for x in range(k):
                for c in mask_colors(t.vertex_sets[x]):
                    counts[c - 1] += 1
            for x, y in pairs(k):
                for c in mask_colors(t.phi(x, y)):
                    counts[c - 1] += 2
            # over p_1..p_{r-1}; p_r substituted
            const = ONE - counts[-1] / kk
            coefs = tuple((counts[-1] - counts[i]) / kk for i in range(t.r - 1))
        else:
            s_none = s_bi = s_arrow = ZERO
            for x in range(k):
                vs = t.vertex_sets[x]
                s_none += 1 if vs & (1 << NONEDGE) else 0
                s_bi += 1 if vs & (1 << BIEDGE) else 0
                s_arrow += bin(vs & ARROW_MASK).count("1")
            for x, y in pairs(k):
                es = t.phi(x, y)
                s_none += 2 if es & (1 << NONEDGE) else 0
                s_bi += 2 if es & (1 << BIEDGE) else 0
                s_arrow += 2 * bin(es & ARROW_MASK).count("1")
            # f = c0 + cp * p + cq * q
            c0 = ONE - s_none / kk
            cp = (s_none - s_bi) / kk
            cq = (2 * s_none - s_arrow) / kk
            kind = family.palette.kind
            if kind == "full":
                const, coefs = c0, (cp, cq)
            elif kind == "compl":
                const, coefs = c0 + cp, (cq - 2 * cp,)
            elif kind == "orien":
                const, coefs = c0, (cq,)
            elif kind == "undir":
                const, coefs = c0, (cp,)
            else:  # tourn: no free variables
                const, coefs = c0 + cq / 2, ()
        forms[(const, coefs)] = None
    out = list(forms)
    # drop forms implied by a pointwise smaller one over the nonnegative domain
    kept = []
    for i, (c0, cf) in enumerate(out):
        dominated = any(
            j != i and d0 <= c0 and all(a <= b for a, b in zip(df, cf))
            for j, (d0, df) in enumerate(out)
        )
        if not dominated:
            kept.append((c0, cf))
    return kept


def _lp_setup(family):
    """Reduced variables, domain rows and tie-break signs for the arity.

    Tie-break signs encode lexicographic minimization of the full density
    vector through the reduction.
    """
    if not family.is_directed:
        nvars = family.r - 1
        domain = [([ONE] * nvars, ONE)] if nvars else []
        signs = [-1] * nvars
        return nvars, domain, signs
    kind = family.palette.kind
    if kind == "full":
        return 2, [([ONE, Fraction(2)], ONE)], [-1, -1]
    if kind == "compl":
        return 1, [([Fraction(2)], ONE)], [1]  # p = 1 - 2q; min p means max q
    if kind in ("orien", "undir"):
        return 1, [([Fraction(2 if kind == "orien" else 1)], ONE)], [-1]
    return 0, [], []  # tourn


def _density_from_vars(family, x):
    if not family.is_directed:
        rest = ONE - sum(x, ZERO)
        return DensityVector(tuple(x) + (rest,))
    kind = family.palette.kind
    if kind == "full":
        return DirDensity(x[0], x[1], family.palette)
    if kind == "compl":
        return DirDensity(ONE - 2 * x[0], x[0], family.palette)
    if kind == "orien":
        return DirDensity(ZERO, x[0], family.palette)
    if kind == "undir":
        return DirDensity(x[0], ZERO, family.palette)
    return DirDensity(ZERO, Fraction(1, 2), family.palette)


def dist_max_upper(family: PropertyFamily, kmax: int, types=None, **kwargs):
    """Maximize min-over-types f over the density domain.

    f is affine in the densities, so this is an exact linear program; the
    result upper-bounds the maximum of the edit distance function.  Ties are
    broken toward the lexicographically smallest density vector.  Returns
    (bound, maximizing density).
    """
    types = _type_list(family, kmax, types, **kwargs)
    forms = _affine_forms(family, types)
    nvars, domain, signs = _lp_setup(family)

    if nvars == 0:
        dens = _density_from_vars(family, ())
        bound = dist_upper_f(family, dens, kmax, types)
        return bound, dens

    rows = []
    rhs = []
    for const, coefs in forms:
        rows.append([-c for c in coefs] + [ONE])  # t - f(y) <= const
        rhs.append(const)
    for drow, dval in domain:
        rows.append(list(drow) + [ZERO])
        rhs.append(dval)

    depth = nvars + 1
    objectives = []
    for i in range(nvars):
        vec = [ZERO] * depth
        vec[i + 1] = Fraction(signs[i])
        objectives.append(tuple(vec))
    objectives.append((ONE,) + (ZERO,) * nvars)  # t comes last

    x, value = simplex_max_lex(rows, rhs, objectives)
    dens = _density_from_vars(family, x[:nvars])
    bound = dist_upper_f(family, dens, kmax, types)
    if bound.value != value[0]:
        raise AssertionError("linear program value does not recompute")
    return bound, dens


def dist_upper_f(family: PropertyFamily, dens, kmax: int, types=None, **kwargs) -> DistBound:
    """Upper bound via f (uniform weights) rather than g; used by the outer
    maximization because f is affine in the densities."""
    _check_density(family, dens)
    types = _type_list(family, kmax, types, **kwargs)
    best_val = None
    best = None
    for t in types:
        m = m_matrix_for(t, dens)
        val = f_value(m)
        if best_val is None or val < best_val:
            best_val = val
            uniform = (Fraction(1, t.k),) * t.k
            best = UpperCertificate(t, uniform, dens)
    return DistBound(best_val, "upper", kmax, best)


def symmetric_bound(family: PropertyFamily) -> Fraction:
    """Bound 1/(r * max tuple sum) for color-permutation symmetric families.

    Symmetry is verified on the computed weak spectrum, not assumed.
    """
    if family.is_directed:
        raise ValueError("symmetric bound applies to multicolor families")
    spectrum = clique_spectrum(family, WEAK)
    for perm in itertools.permutations(range(family.r)):
        for t in spectrum.tuples:
            if tuple(t[perm[i]] for i in range(family.r)) not in spectrum.tuples:
                raise AsymmetricFamilyError(
                    f"weak spectrum is not invariant under color permutation {perm}"
                )
    ell = spectrum.max_sum
    if ell == 0:
        raise TrivialPropertyError("trivial property: weak chromatic number is 1")
    return Fraction(1, family.r * ell)


def _grid_points(family, step: Fraction):
    n = Fraction(1) / step
    if n.denominator != 1:
        raise ValueError("grid step must divide 1")
    n = n.numerator
    if not family.is_directed:
        r = family.r
        for combo in itertools.combinations(range(n + r - 1), r - 1):
            cuts = (-1,) + combo + (n + r - 1,)
            parts = tuple(cuts[i + 1] - cuts[i] - 1 for i in range(r))
            yield DensityVector(tuple(Fraction(a, n) for a in parts))
        return
    kind = family.palette.kind
    if kind == "tourn":
        yield DirDensity(ZERO, Fraction(1, 2), family.palette)
    elif kind == "compl":
        for j in range(n // 2 + 1):
            yield DirDensity(Fraction(n - 2 * j, n), Fraction(j, n), family.palette)
    elif kind == "orien":
        for j in range(n // 2 + 1):
            yield DirDensity(ZERO, Fraction(j, n), family.palette)
    elif kind == "undir":
        for i in range(n + 1):
            yield DirDensity(Fraction(i, n), ZERO, family.palette)
    else:
        for i in range(n + 1):
            for j in range((n - i) // 2 + 1):
                yield DirDensity(Fraction(i, n), Fraction(j, n), family.palette)


def distfn_grid(family: PropertyFamily, kmax: int, step, types=None, **kwargs):
    """Tabulate dist_upper over a rational grid; returns (density, value) rows."""
    step = Fraction(step)
    types = _type_list(family, kmax, types, **kwargs)
    rows = []
    for dens in _grid_points(family, step):
        bound = dist_upper(family, dens, kmax, types)
        rows.append((dens, bound.value))
    return rows
