"""Factorization inverse problems and the twist map."""

import random
from fractions import Fraction

import pytest

from totpos.factorization import (NotTotallyPositiveError,
                                  ReconstructionError, factor_scheme,
                                  factor_staircase, initial_minors,
                                  parameter_sum_formula,
                                  reconstruct_from_initial_minors,
                                  staircase_edge_for_minor, twist,
                                  verify_twist_monomial)
from totpos.matrices import Matrix, MinorSpec, minor
from totpos.networks import standard_network
from totpos.positivity import is_tp_bruteforce
from totpos.words import parse_word, product_map, staircase_scheme

from util import rand_positive, rand_tp

UNIT3 = Matrix([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
MIXED_SCHEME = parse_word("2~ 1 @3 2 1~ @1 2~ 1 @2")


class TestReconstruction:
    def test_unit_weight_matrix(self):
        values = initial_minors(UNIT3)
        assert reconstruct_from_initial_minors(values, 3) == UNIT3

    def test_one_by_one(self):
        values = {MinorSpec((1,), (1,)): Fraction(5)}
        assert reconstruct_from_initial_minors(values, 1) == Matrix([[5]])

    def test_monomial_table_at_unit_weights(self):
        # all staircase parameters 1: every initial minor equals 1, and the
        # reconstruction is the unit-weight matrix
        values = {spec: Fraction(1)
                  for spec in initial_minors(UNIT3)}
        assert reconstruct_from_initial_minors(values, 3) == UNIT3

    def test_round_trip_on_random_matrices(self):
        rng = random.Random(81)
        done = 0
        while done < 40:
            n = rng.randint(1, 5)
            x = rand_tp(rng, n) if done % 2 else None
            if x is None:
                from util import rand_matrix
                x = rand_matrix(rng, n)
                if any(v == 0 for v in initial_minors(x).values()):
                    continue
            assert reconstruct_from_initial_minors(initial_minors(x), n) == x
            done += 1

    def test_zero_minor_rejected(self):
        values = initial_minors(Matrix.identity(2))
        with pytest.raises(ReconstructionError):
            reconstruct_from_initial_minors(values, 2)


class TestFactorStaircase:
    def test_monomial_relations_n3(self):
        rng = random.Random(82)
        t = [rand_positive(rng) for _ in range(9)]
        a, b, c, d, e, f, g, h, i = t
        x = product_map(staircase_scheme(3), t, 3)
        im = initial_minors(x)

        def val(rows, cols):
            return im[MinorSpec.of(rows, cols)]

        assert val((1,), (1,)) == d
        assert val((1,), (2,)) == d * h
        assert val((1,), (3,)) == d * h * i
        assert val((2,), (1,)) == b * d
        assert val((1, 2), (1, 2)) == d * e
        assert val((1, 2), (2, 3)) == d * e * g * h
        assert val((3,), (1,)) == a * b * d
        assert val((2, 3), (1, 2)) == b * c * d * e
        assert val((1, 2, 3), (1, 2, 3)) == d * e * f
        # and the recovered parameters solve those relations
        got = factor_staircase(x)
        assert got == tuple(t)

    def test_round_trip(self):
        rng = random.Random(83)
        for n in (2, 3, 4, 5):
            for _ in range(6):
                t = tuple(rand_positive(rng) for _ in range(n * n))
                x = product_map(staircase_scheme(n), t, n)
                assert factor_staircase(x) == t

    def test_rejects_identity(self):
        with pytest.raises(NotTotallyPositiveError) as info:
            factor_staircase(Matrix.identity(3))
        assert info.value.spec in set(initial_minors(Matrix.identity(3)))

    def test_edge_bijection_n3(self):
        mapping = staircase_edge_for_minor(3)
        order = {
            ((1,), (1,)): 3, ((1,), (2,)): 7, ((1,), (3,)): 8,
            ((2,), (1,)): 1, ((1, 2), (1, 2)): 4, ((1, 2), (2, 3)): 6,
            ((3,), (1,)): 0, ((2, 3), (1, 2)): 2,
            ((1, 2, 3), (1, 2, 3)): 5,
        }
        assert {(s.rows, s.cols): k for s, k in mapping.items()} == order
        # the edge ids address real edges of the standard network
        net = standard_network(3)
        assert len(net.essential) == 9
        assert all(0 <= net.essential[k] < len(net.edges)
                   for k in mapping.values())

    def test_parameter_sum_formula(self):
        rng = random.Random(84)
        for n in (2, 3, 4):
            for _ in range(5):
                t = tuple(rand_positive(rng) for _ in range(n * n))
                x = product_map(staircase_scheme(n), t, n)
                assert parameter_sum_formula(x) == sum(t)


class TestFactorScheme:
    def test_staircase_is_factor_staircase(self):
        rng = random.Random(85)
        x = rand_tp(rng, 3)
        assert factor_scheme(x, staircase_scheme(3)) == factor_staircase(x)

    def test_mixed_scheme_round_trip(self):
        rng = random.Random(86)
        for _ in range(10):
            x = rand_tp(rng, 3)
            params = factor_scheme(x, MIXED_SCHEME)
            assert all(t > 0 for t in params)
            assert product_map(MIXED_SCHEME, params, 3) == x

    def test_random_schemes(self):
        from util import rand_full_scheme
        rng = random.Random(87)
        for _ in range(15):
            n = rng.choice([2, 3, 4])
            scheme = rand_full_scheme(rng, n)
            t = tuple(rand_positive(rng) for _ in scheme)
            x = product_map(scheme, t, n)
            assert factor_scheme(x, scheme) == t


class TestTwist:
    def test_closed_form_two_by_two(self):
        rng = random.Random(88)
        for _ in range(25):
            x = rand_tp(rng, 2)
            a, b = x.entry(1, 1), x.entry(1, 2)
            c, d = x.entry(2, 1), x.entry(2, 2)
            expected = Matrix([[a / (b * c), 1 / c],
                               [1 / b, d / x.det()]])
            assert twist(x) == expected

    def test_closed_form_three_by_three(self):
        rng = random.Random(89)

        def mv(x, rows, cols):
            return minor(x, MinorSpec.of(rows, cols))

        for _ in range(25):
            x = rand_tp(rng, 3)
            det = x.det()
            expected = Matrix([
                [x.entry(1, 1) / (x.entry(3, 1) * x.entry(1, 3)),
                 mv(x, (1, 2), (1, 3)) / (x.entry(3, 1) * mv(x, (1, 2), (2, 3))),
                 1 / x.entry(3, 1)],
                [mv(x, (1, 3), (1, 2)) / (x.entry(1, 3) * mv(x, (2, 3), (1, 2))),
                 (x.entry(3, 3) * mv(x, (1, 2), (1, 2)) - det)
                 / (mv(x, (2, 3), (1, 2)) * mv(x, (1, 2), (2, 3))),
                 x.entry(3, 2) / mv(x, (2, 3), (1, 2))],
                [1 / x.entry(1, 3),
                 x.entry(2, 3) / mv(x, (1, 2), (2, 3)),
                 mv(x, (2, 3), (2, 3)) / det],
            ])
            assert twist(x) == expected

    def test_fixed_point(self):
        x = Matrix([[1, 1], [1, 2]])
        assert twist(x) == x

    def test_twist_preserves_total_positivity(self):
        rng = random.Random(90)
        for _ in range(50):
            n = rng.choice([2, 3, 4])
            assert is_tp_bruteforce(twist(rand_tp(rng, n)))


class TestTwistMonomial:
    def test_staircase_small_sizes(self):
        assert verify_twist_monomial(staircase_scheme(2), 2)
        assert verify_twist_monomial(staircase_scheme(3), 3)

    def test_mixed_scheme(self):
        assert verify_twist_monomial(MIXED_SCHEME, 3)

    def test_random_scheme(self):
        from util import rand_full_scheme
        rng = random.Random(91)
        scheme = rand_full_scheme(rng, 3)
        assert verify_twist_monomial(scheme, 3)
