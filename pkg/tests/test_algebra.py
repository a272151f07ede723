"""Permutations, partitions, Catalan numbers, exact polynomial arithmetic."""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensormoments.algebra import (
    LaurentPoly,
    Partition,
    Permutation,
    RationalFunc,
    catalan,
    compose,
    cycle_type,
    partitions_of,
    symmetric_group,
)


class TestPermutation:
    def test_compose_identity(self):
        q = Permutation([3, 1, 2])
        assert compose(Permutation.identity(3), q) == q
        assert compose(q, Permutation.identity(3)) == q

    def test_compose_inverse(self):
        q = Permutation([3, 1, 4, 2])
        assert compose(q, q.inverse()) == Permutation.identity(4)
        assert compose(q.inverse(), q) == Permutation.identity(4)

    def test_compose_involution(self):
        swap = Permutation([2, 1])
        assert compose(swap, swap) == Permutation.identity(2)

    def test_compose_applies_right_first(self):
        p = Permutation([2, 3, 1])
        q = Permutation([1, 3, 2])
        # (p o q)(1) = p(q(1)) = p(1) = 2
        assert compose(p, q)(1) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            compose(Permutation.identity(2), Permutation.identity(3))

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])

    def test_cycle_type_examples(self):
        assert cycle_type(Permutation.identity(3)) == Partition([1, 1, 1])
        assert cycle_type(Permutation([2, 1])) == Partition([2])
        assert cycle_type(Permutation([2, 3, 1])) == Partition([3])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_cycle_type_conjugation_invariant_exhaustive(self, n):
        perms = list(symmetric_group(n))
        for p in perms:
            pinv = p.inverse()
            for q in perms:
                assert cycle_type(compose(compose(p, q), pinv)) == cycle_type(q)

    def test_cycle_type_conjugation_invariant_n6_sampled(self):
        rng = random.Random(7)
        perms = list(symmetric_group(6))
        for _ in range(2000):
            p, q = rng.choice(perms), rng.choice(perms)
            assert cycle_type(compose(compose(p, q), p.inverse())) == cycle_type(q)

    def test_associativity_sampled(self):
        rng = random.Random(11)
        perms = list(symmetric_group(5))
        for _ in range(500):
            p, q, r = (rng.choice(perms) for _ in range(3))
            assert compose(compose(p, q), r) == compose(p, compose(q, r))

    def test_from_cycles(self):
        p = Permutation.from_cycles(4, [(1, 2, 3)])
        assert p.images == (2, 3, 1, 4)
        assert p.cycles() == [(1, 2, 3), (4,)]


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([2, 0])

    def test_partitions_of(self):
        parts = [p.parts for p in partitions_of(4)]
        assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        counts = [len(list(partitions_of(n))) for n in range(1, 9)]
        assert counts == [1, 2, 3, 5, 7, 11, 15, 22]

    def test_multiplicities(self):
        assert Partition([3, 2, 2, 1]).multiplicities() == {3: 1, 2: 2, 1: 1}


class TestCatalan:
    def test_small_values(self):
        assert catalan(0) == 1
        assert catalan(3) == 5

    def test_convolution_recurrence(self):
        # independent oracle: Cat_{n+1} = sum_i Cat_i Cat_{n-i}
        cats = [1]
        for n in range(20):
            cats.append(sum(cats[i] * cats[n - i] for i in range(n + 1)))
        assert cats[10] == 16796
        for l in range(21):
            assert catalan(l) == cats[l]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            catalan(-1)


laurent_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.fractions(min_value=-50, max_value=50, max_denominator=12),
    max_size=6,
).map(LaurentPoly)

nonzero_laurent_polys = laurent_polys.filter(bool)


class TestLaurentPoly:
    def test_leading_term_examples(self):
        assert LaurentPoly({7: 1, 5: 1}).leading_term() == (7, 1)
        assert LaurentPoly({3: 2, 1: -1}).leading_term() == (3, 2)
        assert LaurentPoly.constant(5).leading_term() == (0, 5)

    def test_leading_term_of_zero(self):
        with pytest.raises(ValueError):
            LaurentPoly.zero().leading_term()

    def test_no_zero_terms_stored(self):
        p = LaurentPoly({3: 1, 2: 0})
        assert 2 not in p.terms
        assert (p - p).terms == {}

    @given(laurent_polys, laurent_polys, laurent_polys)
    @settings(max_examples=200)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * LaurentPoly.one() == a
        assert a + LaurentPoly.zero() == a

    @given(laurent_polys, laurent_polys)
    @settings(max_examples=100)
    def test_no_zero_coefficients_after_arithmetic(self, a, b):
        for poly in (a + b, a - b, a * b):
            assert all(c != 0 for c in poly.terms.values())

    @given(laurent_polys)
    def test_evaluation_matches_terms(self, p):
        x = Fraction(3, 2)
        expected = sum((c * x**e for e, c in p.terms.items()), Fraction(0))
        assert p.evaluate(x) == expected

    def test_negative_exponents(self):
        p = LaurentPoly({-2: 1, 1: 3})
        assert p.evaluate(2) == Fraction(1, 4) + 6
        assert p.shift(2) == LaurentPoly({0: 1, 3: 3})

    def test_substitute_power(self):
        p = LaurentPoly({2: 1, -1: 3})
        assert p.substitute_power(2) == LaurentPoly({4: 1, -2: 3})

    def test_str(self):
        assert str(LaurentPoly({3: 1, 1: 1})) == "N^3 + N^1"
        assert str(LaurentPoly({3: 2, 1: -1})) == "2*N^3 - N^1"
        assert str(LaurentPoly.zero()) == "0"

    def test_records_round_trip(self):
        p = LaurentPoly({4: Fraction(2, 3), -1: -5})
        recs = p.to_records()
        assert recs[0] == {"exp": 4, "coeff": "2/3"}
        assert LaurentPoly.from_records(recs) == p


class TestRationalFunc:
    def test_common_factor_removed(self):
        num = LaurentPoly({1: 1})
        den = LaurentPoly({2: 1, 0: -1})
        g = LaurentPoly({1: 1, 0: 2})
        assert RationalFunc(num * g, den * g) == RationalFunc(num, den)

    def test_denominator_monic(self):
        r = RationalFunc(LaurentPoly.constant(1), LaurentPoly({1: 3, 0: 3}))
        assert r.den.leading_term()[1] == 1

    @given(nonzero_laurent_polys, nonzero_laurent_polys)
    @settings(max_examples=100)
    def test_canonicalization_idempotent(self, num, den):
        r = RationalFunc(num, den)
        again = RationalFunc(r.num, r.den)
        assert again.num == r.num and again.den == r.den

    @given(nonzero_laurent_polys, nonzero_laurent_polys)
    @settings(max_examples=60)
    def test_canonicalization_preserves_value(self, num, den):
        r = RationalFunc(num, den)
        rng = random.Random(3)
        checked = 0
        while checked < 10:
            x = Fraction(rng.randint(2, 60), rng.randint(1, 7))
            try:
                expected = num.evaluate(x) / den.evaluate(x)
            except ZeroDivisionError:
                continue
            assert r.evaluate(x) == expected
            checked += 1

    def test_arithmetic(self):
        n = LaurentPoly.monomial(1)
        a = RationalFunc(1, n)  # 1/N
        b = RationalFunc(n)  # N
        assert a * b == RationalFunc.one()
        assert a + a == RationalFunc(2, n)
        assert (b - b).is_zero()
        assert b / a == RationalFunc(n * n)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunc(1, 0)

    def test_as_poly(self):
        n = LaurentPoly.monomial(1)
        assert RationalFunc(n * n + 1).as_poly() == n * n + 1
        with pytest.raises(ValueError):
            RationalFunc(1, n + 1).as_poly()

    def test_substitute_power(self):
        n = LaurentPoly.monomial(1)
        r = RationalFunc(1, n * n - 1)
        assert r.substitute_power(2) == RationalFunc(1, LaurentPoly({4: 1, 0: -1}))

    def test_records_round_trip(self):
        n = LaurentPoly.monomial(1)
        r = RationalFunc(n, n * n + 1)
        assert RationalFunc.from_records(r.to_records()) == r
