"""Spectra, chromatic numbers, and the directed part checks."""

import itertools
import random

import pytest

import edk
from edk import ColoredGraph, DiGraph, PropertyFamily
from edk.catalog import (
    cyclic_triangle,
    cyclic_triangle_family,
    k5_family,
    transitive_tournament,
    transitive_triangle_family,
    triangle_112_family,
    two_triangle_family,
)
from oracles import brute_has_directed_cycle


def random_family(rng, r, max_order=4, count=1):
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_order)
        graphs.append(
            ColoredGraph(n, r, tuple(rng.randint(1, r) for _ in range(n * (n - 1) // 2)))
        )
    return PropertyFamily.multicolor(r, graphs)


def random_dir_family(rng, pal, max_order=4):
    codes = edk.palette(pal).sorted_codes()
    n = rng.randint(2, max_order)
    g = DiGraph(n, tuple(rng.choice(codes) for _ in range(n * (n - 1) // 2)))
    return PropertyFamily.directed(pal, [g])


class TestGoodTuples:
    def test_two_triangle_family_sharp_cases(self):
        fam = two_triangle_family()
        assert not edk.is_weakly_good((0, 1, 0), fam)
        assert edk.is_weakly_good((0, 2, 0), fam)
        assert edk.is_weakly_good((1, 0, 0), fam)
        assert edk.is_weakly_good((0, 0, 1), fam)

    def test_sum_reaching_min_order_is_good(self):
        rng = random.Random(0)
        for _ in range(20):
            fam = random_family(rng, 3)
            order = fam.min_forbidden_order
            t = [0, 0, 0]
            for _ in range(order):
                t[rng.randrange(3)] += 1
            assert edk.is_weakly_good(tuple(t), fam)
            assert edk.is_strongly_good(tuple(t), fam)

    def test_strong_cases_112(self):
        fam = triangle_112_family()
        assert not edk.is_strongly_good((0, 0, 2), fam)
        for t in itertools.product(range(4), repeat=3):
            if sum(t) >= 3:
                assert edk.is_strongly_good(t, fam)

    def test_all_zeros_never_good(self):
        assert not edk.is_weakly_good((0, 0, 0), two_triangle_family())
        assert not edk.is_strongly_good((0, 0), k5_family())

    def test_weak_goodness_is_monotone(self):
        rng = random.Random(1)
        for _ in range(30):
            fam = random_family(rng, 2, max_order=4)
            t = (rng.randint(0, 2), rng.randint(0, 2))
            if edk.is_weakly_good(t, fam):
                up = (t[0] + rng.randint(0, 1), t[1] + rng.randint(0, 1))
                assert edk.is_weakly_good(up, fam)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            edk.is_weakly_good((1, 0), two_triangle_family())

    def test_directed_zero_constraints(self):
        fam = cyclic_triangle_family("tourn")
        with pytest.raises(ValueError):
            edk.is_weakly_good((1, 0, 0), fam)
        with pytest.raises(ValueError):
            edk.is_weakly_good((0, 0, 1), fam)


class TestSpectra:
    def test_example_families(self):
        fam = two_triangle_family()
        assert edk.clique_spectrum(fam, "weak").sorted_tuples() == ((0, 0, 0), (0, 1, 0))
        assert edk.clique_spectrum(fam, "strong").sorted_tuples() == (
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0),
        )
        fam = triangle_112_family()
        assert edk.clique_spectrum(fam, "weak").sorted_tuples() == (
            (0, 0, 0), (0, 1, 0), (1, 0, 0),
        )
        fam = k5_family()
        assert edk.clique_spectrum(fam, "weak").sorted_tuples() == (
            (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0),
        )

    def test_chromatic_numbers(self):
        assert edk.chromatic_number(two_triangle_family(), "weak") == 2
        assert edk.chromatic_number(two_triangle_family(), "strong") == 2
        assert edk.chromatic_number(triangle_112_family(), "weak") == 2
        assert edk.chromatic_number(triangle_112_family(), "strong") == 3
        assert edk.chromatic_number(k5_family(), "weak") == 3

    def test_downset(self):
        rng = random.Random(2)
        for _ in range(15):
            fam = random_family(rng, rng.choice((2, 3)))
            for mode in ("weak", "strong"):
                spec = edk.clique_spectrum(fam, mode).tuples
                for t in spec:
                    for i in range(len(t)):
                        if t[i] > 0:
                            lower = t[:i] + (t[i] - 1,) + t[i + 1:]
                            assert lower in spec

    def test_weak_chi_at_most_strong_chi(self):
        rng = random.Random(3)
        for _ in range(15):
            fam = random_family(rng, rng.choice((2, 3)), count=rng.choice((1, 2)))
            assert edk.chromatic_number(fam, "weak") <= edk.chromatic_number(fam, "strong")

    def test_two_color_spectra_swap(self):
        # with two colors, a part without color 1 is exactly a color-2 clique,
        # so the weak spectrum is the strong spectrum with coordinates swapped
        rng = random.Random(4)
        for _ in range(15):
            fam = random_family(rng, 2, count=rng.choice((1, 2)))
            weak = edk.clique_spectrum(fam, "weak").tuples
            strong = edk.clique_spectrum(fam, "strong").tuples
            assert weak == frozenset((b, a) for a, b in strong)

    def test_undir_and_tourn_modes_agree(self):
        rng = random.Random(5)
        for pal in ("undir", "tourn"):
            for _ in range(10):
                fam = random_dir_family(rng, pal)
                assert edk.chromatic_number(fam, "weak") == edk.chromatic_number(fam, "strong")


class TestDirected:
    def test_cyclic_triangle_spectrum(self):
        fam = cyclic_triangle_family("tourn")
        assert edk.clique_spectrum(fam, "weak").sorted_tuples() == ((0, 0, 0), (0, 1, 0))
        assert edk.chromatic_number(fam, "weak") == 2

    def test_transitive_triangle_trivial(self):
        fam = transitive_triangle_family("tourn")
        assert edk.chromatic_number(fam, "weak") == 1
        assert edk.is_trivial(fam)
        assert not edk.is_trivial(cyclic_triangle_family("tourn"))

    def test_acyclic_against_exhaustive(self):
        rng = random.Random(6)
        for _ in range(40):
            d = DiGraph(6, tuple(rng.choice((0, 1, 2, 3)) for _ in range(15)))
            assert edk.is_acyclic(d) == (not brute_has_directed_cycle(d))

    def test_transitive_tournament_checks(self):
        assert edk.is_transitive_tournament(DiGraph(1, ()))
        assert edk.is_transitive_tournament(transitive_tournament(4))
        assert not edk.is_transitive_tournament(cyclic_triangle())
        mixed = cyclic_triangle().recolored(0, 1, edk.BIEDGE)
        assert not edk.is_transitive_tournament(mixed)

    def test_full_palette_spectrum_uses_all_axes(self):
        # forbidding an all-biedge triangle: only two-way pairs constrain it,
        # and it needs three no-biedge parts
        fam = PropertyFamily.directed("full", [DiGraph(3, (1, 1, 1))])
        spec = edk.clique_spectrum(fam, "weak").tuples
        assert spec == frozenset({(0, 0, 0), (0, 0, 1), (0, 0, 2)})
        assert edk.chromatic_number(fam, "weak") == edk.chromatic_number(fam, "strong") == 3


class TestSimpleEditCompat:
    def test_spectrum_drives_simple_edit_validity(self):
        fam = cyclic_triangle_family("tourn")
        with pytest.raises(ValueError):
            edk.simple_edit(transitive_tournament(4), fam, (0, 2, 0))
