import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bellgen.core import (
    BellFunctional,
    FormatError,
    OrbitTooLarge,
    Scenario,
    Transform,
    apply_transform,
    canonical_form,
    evaluate,
    group_size,
    parse,
    parse_transform,
    render,
    strategies as all_strategies,
    transform_group,
    zero,
)
from bellgen.iterate import chsh, sliwa

S222 = Scenario((2, 2))
S3222 = Scenario((2, 2, 2))


def rand_functional(rng, scenario, density=0.5, denom=2):
    terms = {}
    for mono in scenario.monomials():
        if rng.random() < density:
            num = rng.randrange(-4, 5)
            if num:
                terms[mono] = Fraction(num, denom)
    return BellFunctional(scenario, terms)


def rand_transform(rng, scenario, allow_neg=True):
    perms = []
    group = list(transform_group(scenario, cap=10**7))
    t = group[rng.randrange(len(group))]
    if not allow_neg and t.global_sign == -1:
        t = Transform(t.party_perm, t.setting_perms, t.sign_flips, 1)
    return t


class TestScenario:
    def test_counts(self):
        s = Scenario((2, 3, 2))
        assert s.n == 3
        assert s.vertex_count == 2**7
        assert s.correlation_dimension == 3 * 4 * 3 - 1

    def test_validation(self):
        with pytest.raises(ValueError):
            Scenario(())
        with pytest.raises(ValueError):
            Scenario((2, 0))


class TestFunctional:
    def test_zero_coefficients_dropped(self):
        f = BellFunctional(S222, {(1, 1): 0, (1, 2): Fraction(1, 2)})
        assert (1, 1) not in f.terms
        assert f.coefficient((1, 2)) == Fraction(1, 2)

    def test_monomial_validation(self):
        with pytest.raises(ValueError):
            BellFunctional(S222, {(3, 1): 1})
        with pytest.raises(ValueError):
            BellFunctional(S222, {(1, 1, 1): 1})

    def test_equality_is_termwise(self):
        f = chsh()
        g = BellFunctional(S222, dict(f.terms))
        assert f == g and hash(f) == hash(g)

    def test_algebra(self):
        f = chsh()
        assert (f - f).is_zero()
        assert (f + f) == f.scale(2)
        assert (-f).coefficient((1, 1)) == Fraction(-1, 2)

    def test_immutability(self):
        f = chsh()
        with pytest.raises(AttributeError):
            f.terms = {}


class TestEvaluate:
    def test_chsh_all_plus(self):
        # direct substitution: (1/2)(1+1+1-1) = 1
        assert evaluate(chsh(), ((1, 1), (1, 1))) == 1

    def test_all_plus_is_coefficient_sum(self):
        rng = __import__("random").Random(7)
        for _ in range(20):
            f = rand_functional(rng, S3222)
            total = sum(f.terms.values(), Fraction(0))
            assert evaluate(f, ((1, 1), (1, 1), (1, 1))) == total

    def test_catalog_entry_one_at_all_plus(self):
        assert evaluate(sliwa(1), ((1, 1), (1, 1), (1, 1))) == 1

    def test_scenario_mismatch(self):
        with pytest.raises(ValueError):
            evaluate(chsh(), ((1, 1),))

    def test_linearity(self):
        rng = __import__("random").Random(3)
        for _ in range(20):
            f = rand_functional(rng, S222)
            g = rand_functional(rng, S222)
            sigma = ((1, -1), (-1, 1))
            lhs = evaluate(f.scale(3) + g.scale(Fraction(-1, 2)), sigma)
            assert lhs == 3 * evaluate(f, sigma) - Fraction(1, 2) * evaluate(g, sigma)


class TestTransforms:
    def test_identity(self):
        f = chsh()
        assert apply_transform(f, Transform.identity(S222)) == f

    def test_chsh_setting_swap_partner(self):
        # swapping both parties' settings sends CHSH to its recursion partner
        t = parse_transform(S222, "perm A 2 1; perm B 2 1")
        g = apply_transform(chsh(), t)
        want = BellFunctional(
            S222,
            {(2, 2): Fraction(1, 2), (2, 1): Fraction(1, 2),
             (1, 2): Fraction(1, 2), (1, 1): Fraction(-1, 2)},
        )
        assert g == want

    def test_catalog_sign_flip(self):
        base = sliwa(1)
        got = apply_transform(base, parse_transform(base.scenario, "flip C1"))
        # C1 -> -C1 negates exactly the four terms containing C1
        for mono, coeff in base.terms.items():
            want = -coeff if mono[2] == 1 else coeff
            assert got.coefficient(mono) == want

    def test_group_laws(self):
        rng = __import__("random").Random(11)
        f = rand_functional(rng, S3222)
        for _ in range(30):
            t1 = rand_transform(rng, S3222)
            t2 = rand_transform(rng, S3222)
            lhs = apply_transform(apply_transform(f, t1), t2)
            rhs = apply_transform(f, t2.compose(t1))
            assert lhs == rhs
            inv = t1.inverse()
            assert apply_transform(apply_transform(f, t1), inv) == f

    def test_party_perm_requires_equal_settings(self):
        s = Scenario((2, 3))
        t = Transform((1, 0), ((1, 2), (1, 2, 3)), ((1, 1), (1, 1, 1)))
        with pytest.raises(ValueError):
            t.validate(s)

    @given(st.integers(0, 10**6))
    @settings(max_examples=50, deadline=None)
    def test_compose_inverse_is_identity(self, seed):
        rng = __import__("random").Random(seed)
        t = rand_transform(rng, S222)
        composed = t.compose(t.inverse())
        f = rand_functional(rng, S222)
        assert apply_transform(f, composed) == f


class TestCanonicalForm:
    def test_group_size(self):
        assert group_size(S222) == 2 * 2 * (2 * 4) ** 2
        assert group_size(S3222) == 6 * (2 * 4) ** 3 * 2

    def test_chsh_variants_share_representative(self):
        # all eight sign patterns with an odd number of minus signs
        h = Fraction(1, 2)
        variants = []
        for signs in itertools.product((1, -1), repeat=4):
            if signs.count(-1) % 2 == 0:
                continue
            variants.append(BellFunctional(
                S222,
                {(1, 1): signs[0] * h, (1, 2): signs[1] * h,
                 (2, 1): signs[2] * h, (2, 2): signs[3] * h}))
        assert len(variants) == 8
        reps = {canonical_form(v) for v in variants}
        assert len(reps) == 1

    def test_orbit_invariance_and_idempotence(self):
        rng = __import__("random").Random(5)
        f = rand_functional(rng, S222)
        c = canonical_form(f)
        for _ in range(10):
            t = rand_transform(rng, S222)
            assert canonical_form(apply_transform(f, t)) == c
        assert canonical_form(c) == c

    def test_orbit_cap(self):
        f = zero(Scenario((3, 3, 3, 3, 3)))
        with pytest.raises(OrbitTooLarge):
            canonical_form(f, cap=1000)


class TestTextFormat:
    def test_round_trip(self):
        rng = __import__("random").Random(23)
        for _ in range(50):
            f = rand_functional(rng, S3222, denom=6)
            assert parse(render(f)) == f

    def test_whitespace_and_order_insensitive(self):
        text = "scenario n=2 m=2,2\n+1/2   B1 A1\n-1/2 A2 B2\n"
        f = parse(text)
        assert f.coefficient((1, 1)) == Fraction(1, 2)
        assert f.coefficient((2, 2)) == Fraction(-1, 2)

    def test_constant_term(self):
        f = parse("scenario n=1 m=2\n+1/3 1\n-1 A2\n")
        assert f.coefficient((0,)) == Fraction(1, 3)
        assert f.coefficient((2,)) == -1

    def test_duplicate_terms_accumulate(self):
        f = parse("scenario n=1 m=1\n+1/2 A1\n+1/2 A1\n")
        assert f.coefficient((1,)) == 1

    def test_errors_carry_line_numbers(self):
        with pytest.raises(FormatError) as err:
            parse("scenario n=2 m=2,2\n+1/2 A3\n")
        assert err.value.line == 2
        with pytest.raises(FormatError) as err:
            parse("scenario n=2 m=2,2\nbogus A1\n")
        assert err.value.line == 2
        with pytest.raises(FormatError):
            parse("+1 A1\n")


class TestStrategies:
    def test_enumeration_order(self):
        strategies = list(all_strategies(S222))
        assert len(strategies) == 16
        assert strategies[0] == ((1, 1), (1, 1))
        # the last party's last setting varies fastest
        assert strategies[1] == ((1, 1), (1, -1))
        assert strategies[-1] == ((-1, -1), (-1, -1))
