"""Planar networks: weight matrices, the path oracle, chips."""

import random
from fractions import Fraction
from math import comb

import pytest

from totpos.exact import LaurentPoly
from totpos.matrices import Matrix, MinorSpec, all_minor_specs, minor
from totpos.networks import (NetworkError, PlanarNetwork, chip, chips_of_word,
                             concatenate, disjoint_path_minor,
                             is_totally_connected, standard_network,
                             weight_matrix, weight_matrix_raw)
from totpos.positivity import is_tnn_bruteforce, is_tp_bruteforce
from totpos.words import (Letter, lower, parse_word, product_map,
                          staircase_scheme, upper, diag)

from util import enumerate_paths, rand_network, rand_positive

NAMES = tuple("abcdefghi")


def symbolic_standard_3():
    weights = [LaurentPoly.variable(NAMES, v) for v in NAMES]
    return standard_network(3, weights), {v: LaurentPoly.variable(NAMES, v)
                                          for v in NAMES}


class TestWeightMatrix:
    def test_standard_3_symbolic_display(self):
        net, v = symbolic_standard_3()
        a, b, c, d, e, f, g, h, i = (v[x] for x in NAMES)
        expected = [
            [d, d * h, d * h * i],
            [b * d, b * d * h + e, b * d * h * i + e * g + e * i],
            [a * b * d, a * b * d * h + a * e + c * e,
             a * b * d * h * i + (a + c) * e * (g + i) + f],
        ]
        assert weight_matrix_raw(net) == expected

    def test_pascal_staircase(self):
        n = 5
        vertices = [(x, level) for x in range(n) for level in range(1, n + 1)]
        index = {v: k for k, v in enumerate(vertices)}
        edges = []
        for x in range(n - 1):
            for level in range(1, n + 1):
                edges.append((index[(x, level)], index[(x + 1, level)], 1))
            for level in range(2, n + 1):
                if x + level >= n:
                    edges.append((index[(x, level)],
                                  index[(x + 1, level - 1)], 1))
        net = PlanarNetwork(n, tuple(vertices), tuple(edges))
        wm = weight_matrix(net)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert wm.entry(i, j) == comb(i - 1, j - 1)
        assert is_tnn_bruteforce(wm)
        assert not is_tp_bruteforce(wm)

    def test_no_slants_gives_identity(self):
        n = 3
        vertices = [(x, level) for x in range(3) for level in range(1, n + 1)]
        index = {v: k for k, v in enumerate(vertices)}
        edges = [(index[(x, level)], index[(x + 1, level)], 1)
                 for x in range(2) for level in range(1, n + 1)]
        net = PlanarNetwork(n, tuple(vertices), tuple(edges))
        assert weight_matrix(net) == Matrix.identity(n)

    def test_json_round_trip(self):
        net = standard_network(2, [Fraction(1, 2), 3, 4, 5])
        again = PlanarNetwork.from_json(net.to_json())
        assert weight_matrix(again) == weight_matrix(net)


class TestDisjointPathOracle:
    def test_symbolic_23_23(self):
        net, v = symbolic_standard_3()
        got = disjoint_path_minor(net, MinorSpec((2, 3), (2, 3)))
        b, c, d, e, f, g, h = (v[x] for x in "bcdefgh")
        assert got == b * c * d * e * g * h + b * d * f * h + f * e

    def test_single_path_count(self):
        net = standard_network(3)
        assert disjoint_path_minor(net, MinorSpec((1,), (3,))) == 1
        # independent enumeration of source-1 -> sink-3 paths
        paths = enumerate_paths(net, net.sources[0], net.sinks[2])
        assert len(paths) == 1 and paths[0][1] == 1

    def test_lindstrom_on_random_networks(self):
        rng = random.Random(2024)
        for _ in range(40):
            n = rng.choice([2, 3])
            cols = rng.randint(1, 3)
            net = rand_network(rng, n, cols)
            wm = weight_matrix(net)
            for spec in all_minor_specs(n):
                assert minor(wm, spec) == disjoint_path_minor(net, spec)

    def test_signed_path_collections_give_determinant(self):
        # Independent check of the cancellation behind the path oracle: the
        # full signed sum over path collections equals the determinant.
        import itertools
        rng = random.Random(9)
        for _ in range(10):
            n = rng.choice([2, 3])
            net = rand_network(rng, n, rng.randint(1, 2))
            paths = [[enumerate_paths(net, net.sources[i], net.sinks[j])
                      for j in range(n)] for i in range(n)]
            total = Fraction(0)
            for perm in itertools.permutations(range(n)):
                inversions = sum(1 for a, b in itertools.combinations(
                    range(n), 2) if perm[a] > perm[b])
                sign = -1 if inversions % 2 else 1
                for chosen in itertools.product(
                        *(paths[i][perm[i]] for i in range(n))):
                    weight = Fraction(1)
                    for _, w in chosen:
                        weight *= w
                    total += sign * weight
            assert total == weight_matrix(net).det()


class TestTotalConnectivity:
    def test_standard_network(self):
        for n in (1, 2, 3):
            assert is_totally_connected(standard_network(n))

    def test_diagonal_network_is_not(self):
        n = 2
        vertices = [(x, level) for x in range(2) for level in range(1, n + 1)]
        index = {v: k for k, v in enumerate(vertices)}
        edges = [(index[(0, level)], index[(1, level)], 1)
                 for level in range(1, n + 1)]
        net = PlanarNetwork(n, tuple(vertices), tuple(edges))
        assert not is_totally_connected(net)

    def test_positive_weights_totally_connected_is_tp(self):
        rng = random.Random(31)
        for n in (2, 3):
            net = standard_network(
                n, [rand_positive(rng) for _ in range(n * n)])
            assert is_totally_connected(net)
            assert is_tp_bruteforce(weight_matrix(net))

    def test_nonnegative_weights_give_tnn(self):
        rng = random.Random(32)
        for _ in range(10):
            n = rng.choice([2, 3])
            weights = [rng.choice([Fraction(0), rand_positive(rng)])
                       for _ in range(n * n - n)]
            weights2 = [rand_positive(rng) for _ in range(n)]
            # slant weights may vanish; the diagonal chip weights must not
            word = staircase_scheme(n)
            params = []
            k = 0
            for letter in word:
                if letter.kind == "diag":
                    params.append(weights2[letter.index - 1])
                else:
                    params.append(weights[k])
                    k += 1
            net = chips_of_word(word, params, n)
            assert is_tnn_bruteforce(weight_matrix(net))


class TestChips:
    def test_chip_matrices(self):
        assert weight_matrix(chip(upper(1), Fraction(7), 2)) \
            == Matrix([[1, 7], [0, 1]])
        assert weight_matrix(chip(lower(1), Fraction(7), 2)) \
            == Matrix([[1, 0], [7, 1]])
        assert weight_matrix(chip(diag(2), Fraction(7), 2)) \
            == Matrix([[1, 0], [0, 7]])

    def test_diag_chip_rejects_zero(self):
        with pytest.raises(NetworkError):
            chip(diag(1), 0, 2)

    def test_mismatched_sizes_cannot_concatenate(self):
        with pytest.raises(NetworkError):
            concatenate(chip(upper(1), 1, 2), chip(upper(1), 1, 3))

    def test_four_chip_worked_example(self):
        word = parse_word("@1 1~ @2 1")
        t = [Fraction(2), Fraction(3), Fraction(5), Fraction(7)]
        net = chips_of_word(word, t, 2)
        assert weight_matrix(net) == Matrix([[2, 2 * 7], [3, 3 * 7 + 5]])

    def test_concatenation_multiplies_weight_matrices(self):
        rng = random.Random(8)
        for _ in range(25):
            n = rng.choice([2, 3, 4])
            letters = []
            for _ in range(rng.randint(1, 8)):
                kind = rng.choice(["upper", "lower", "diag"])
                top = n if kind == "diag" else n - 1
                letters.append(Letter(kind, rng.randint(1, top)))
            params = [rand_positive(rng) for _ in letters]
            net = chips_of_word(tuple(letters), params, n)
            assert weight_matrix(net) == product_map(tuple(letters), params, n)


class TestStandardNetwork:
    def test_essential_edge_count(self):
        for n in (1, 2, 3, 4):
            assert len(standard_network(n).essential) == n * n

    def test_single_edge_for_n1(self):
        net = standard_network(1, [Fraction(5)])
        assert weight_matrix(net) == Matrix([[5]])
        assert len(net.essential) == 1

    def test_validation_rejects_crossing_slants(self):
        vertices = ((0, 1), (0, 2), (1, 1), (1, 2))
        edges = ((0, 3, Fraction(1)), (1, 2, Fraction(1)))
        with pytest.raises(NetworkError):
            PlanarNetwork(2, vertices, edges)

    def test_validation_rejects_vertex_on_edge(self):
        vertices = ((0, 1), (1, 1), (2, 1))
        edges = ((0, 2, Fraction(1)),)
        with pytest.raises(NetworkError):
            PlanarNetwork(1, vertices, edges)
