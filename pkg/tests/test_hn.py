"""Ideal construction, multiplier identities, the exponent solver, and verdicts."""

from __future__ import annotations

from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hnlab import (
    BadMultiplicity,
    Binomial,
    DomainError,
    ExponentPair,
    HNIdeal,
    InvalidGenerator,
    NotImplementedRange,
    TheoremOutcome,
    build,
    normalize,
    solve_exponents,
    theorem_verdict,
    vanishing_check,
)

# The four reference matrices: exponents, generators as (plus, minus) vectors
# over (x, y, z), multiplier triple, and value semigroup generators.
REFERENCE = [
    (
        (1, 1, 1), (2, 1, 1),
        (((3, 0, 0), (0, 1, 1)), ((0, 2, 0), (1, 0, 1)), ((0, 0, 2), (2, 1, 0))),
        (3, 4, 5),
    ),
    (
        (1, 1, 1), (3, 1, 1),
        (((4, 0, 0), (0, 1, 1)), ((0, 2, 0), (1, 0, 1)), ((0, 0, 2), (3, 1, 0))),
        (3, 5, 7),
    ),
    (
        (2, 2, 1), (1, 1, 1),
        (((3, 0, 0), (0, 1, 1)), ((0, 3, 0), (2, 0, 1)), ((0, 0, 2), (1, 2, 0))),
        (4, 5, 7),
    ),
    (
        (3, 2, 1), (1, 1, 1),
        (((4, 0, 0), (0, 1, 1)), ((0, 3, 0), (3, 0, 1)), ((0, 0, 2), (1, 2, 0))),
        (4, 7, 9),
    ),
]


def exponent_pairs(limit: int):
    for a in product(range(1, limit + 1), repeat=3):
        for b in product(range(1, limit + 1), repeat=3):
            yield ExponentPair(a, b)


# ── construction ─────────────────────────────────────────────────────────────


@pytest.mark.parametrize("a, b, gens, m", REFERENCE)
def test_reference_matrices(a, b, gens, m):
    h = build(ExponentPair(a, b))
    assert h.m == m
    assert tuple((g.plus, g.minus) for g in h.generators) == gens
    assert h.coprime
    assert h.value_semigroup.minimal_gens == m
    assert vanishing_check(h)


def test_reference_generator_rendering():
    h = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    assert [g.render(("x", "y", "z")) for g in h.generators] == [
        "x^3 - y*z",
        "y^2 - x*z",
        "z^2 - x^2*y",
    ]


def test_non_coprime_multipliers_have_no_value_semigroup():
    h = build(ExponentPair((1, 1, 1), (1, 1, 1)))
    assert h.m == (3, 3, 3)
    assert not h.coprime and h.value_semigroup is None
    assert vanishing_check(h)


def test_exponent_pair_validation():
    with pytest.raises(InvalidGenerator):
        ExponentPair((1, 1), (1, 1, 1))
    with pytest.raises(InvalidGenerator):
        ExponentPair((1, 0, 1), (1, 1, 1))


def test_multiplier_formulas_agree_exhaustively():
    # entries <= 4 here; the acceptance suite sweeps entries <= 6
    for pair in exponent_pairs(4):
        h = build(pair)
        (a1, a2, a3), (b1, b2, b3) = pair.a, pair.b
        c1, c2, c3 = pair.c
        assert h.m == (c2 * c3 - a2 * b3, c1 * c3 - a3 * b1, c1 * c2 - a1 * b2)
        assert min(h.m) >= 3
        assert vanishing_check(h)


# ── weight homogeneity ───────────────────────────────────────────────────────


def test_vanishing_check_known_dot_products():
    h = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    # v1 = x^3 - y*z: 3*3 = 4 + 5
    assert 3 * h.m[0] == h.m[1] + h.m[2]
    h4 = build(ExponentPair((3, 2, 1), (1, 1, 1)))
    # D = z^2 - x*y^2 under (4, 7, 9): 18 = 4 + 14
    assert 2 * h4.m[2] == 18 == h4.m[0] + 2 * h4.m[1]


def test_vanishing_check_rejects_corrupted_generator():
    good = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    corrupted = HNIdeal(
        good.exponents,
        (Binomial((3, 0, 0), (0, 2, 1)), good.generators[1], good.generators[2]),
        good.m,
        good.value_semigroup,
    )
    # x^3 against y^2*z under (3,4,5): 9 != 13
    assert not vanishing_check(corrupted)


# ── normalization ────────────────────────────────────────────────────────────


def test_normalize_fixed_point():
    pair = ExponentPair((1, 1, 1), (2, 1, 1))
    assert normalize(pair) == pair


def test_normalize_recovers_sorted_reference():
    # the (m2, m1, m3)-swapped image of the first reference matrix
    swapped = ExponentPair((1, 2, 1), (1, 1, 1))
    assert build(swapped).m == (4, 3, 5)
    assert normalize(swapped) == ExponentPair((1, 1, 1), (2, 1, 1))
    assert build(normalize(swapped)).m == (3, 4, 5)


@settings(max_examples=300, deadline=None)
@given(st.tuples(*[st.integers(1, 6)] * 6))
def test_normalize_sorts_and_is_idempotent(entries):
    pair = ExponentPair(entries[:3], entries[3:])
    out = normalize(pair)
    m = build(out).m
    assert m[0] <= m[1] <= m[2]
    assert sorted(m) == sorted(build(pair).m)
    assert normalize(out) == out


# ── the exponent solver ──────────────────────────────────────────────────────


@pytest.mark.parametrize(
    "m, a, b",
    [
        ((3, 4, 5), (1, 1, 1), (2, 1, 1)),
        ((3, 5, 7), (1, 1, 1), (3, 1, 1)),
        ((4, 5, 7), (2, 2, 1), (1, 1, 1)),
        ((4, 7, 9), (3, 2, 1), (1, 1, 1)),
    ],
)
def test_solver_on_the_four_triples(m, a, b):
    solutions = solve_exponents(m)
    assert solutions == [ExponentPair(a, b)]
    assert build(solutions[0]).m == m


def test_solver_rejects_negative_branch():
    # for m1 = 4 the b3 = 2 branch gives a1 = (m2 - m3)/2 < 0, never a solution
    solutions = solve_exponents((4, 7, 9))
    assert len(solutions) == 1
    assert solutions[0].a[1] == 2  # only the a2 = 2 branch survives


def test_solver_unsolvable_triple_returns_empty():
    assert solve_exponents((3, 5, 8)) == []  # 2*m2 - m3 = 2 not divisible by 3


def test_solver_range_and_preconditions():
    with pytest.raises(NotImplementedRange):
        solve_exponents((5, 6, 7))
    with pytest.raises(DomainError):
        solve_exponents((3, 5, 5))
    with pytest.raises(DomainError):
        solve_exponents((4, 6, 8))  # gcd 2


def test_solver_round_trips_all_buildable_small_triples():
    seen = set()
    for pair in exponent_pairs(6):
        m = build(pair).m
        if m[0] not in (3, 4) or not m[0] < m[1] < m[2] or gcd(*m) != 1:
            continue
        solutions = solve_exponents(m)
        assert pair in solutions, (pair, m)
        for sol in solutions:
            assert build(sol).m == m
        seen.add(m)
    assert set(m for m in seen if m in {(3, 4, 5), (3, 5, 7), (4, 5, 7), (4, 7, 9)})


# ── classification verdicts ──────────────────────────────────────────────────


def test_verdict_prime_for_e1():
    h = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    v = theorem_verdict(h, 1)
    assert v.hypothesis_ok
    assert v.outcome is TheoremOutcome.PRIME
    assert v.possible_cases == ("(a)",)


def test_verdict_open_for_e3():
    h = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    v = theorem_verdict(h, 3)
    assert v.outcome is TheoremOutcome.PRIME_OR_NON_CI
    assert v.possible_cases == ("(c.1)", "(c.2)", "(c.3)", "(c.4)", "(c.5)")


def test_verdict_on_all_four_reference_ideals():
    for a, b, _, m in REFERENCE:
        h = build(ExponentPair(a, b))
        for e in (1, 2, 3):
            v = theorem_verdict(h, e)
            assert v.hypothesis_ok, m
            assert v.outcome is (
                TheoremOutcome.PRIME if e == 1 else TheoremOutcome.PRIME_OR_NON_CI
            )


def test_verdict_hypothesis_fails_when_covered():
    # <3,7,8> is contained in the symmetric <3,4>
    h = build(solve_exponents((3, 7, 8))[0])
    assert h.value_semigroup.minimal_gens == (3, 7, 8)
    v = theorem_verdict(h, 2)
    assert not v.hypothesis_ok
    assert v.outcome is TheoremOutcome.HYPOTHESIS_NOT_SATISFIED


def test_verdict_hypothesis_fails_without_value_semigroup():
    h = build(ExponentPair((1, 1, 1), (1, 1, 1)))  # m = (3,3,3), gcd 3
    v = theorem_verdict(h, 1)
    assert not v.hypothesis_ok
    assert v.outcome is TheoremOutcome.HYPOTHESIS_NOT_SATISFIED


def test_no_small_pair_yields_embedding_dimension_below_three():
    # for coprime m the redundancy patterns force a common divisor, so every
    # buildable value semigroup with entries <= 5 has embedding dimension 3
    for pair in exponent_pairs(5):
        h = build(pair)
        if h.coprime:
            assert h.value_semigroup.embedding_dimension == 3


def test_verdict_hypothesis_fails_on_embedding_dimension_two():
    # the branch is unreachable through build() at small entries, so drive it
    # with a directly assembled ideal whose semigroup is <3,4> (symmetric)
    good = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    from hnlab import from_generators

    synthetic = HNIdeal(good.exponents, good.generators, (3, 4, 8), from_generators([3, 4, 8]))
    assert synthetic.value_semigroup.embedding_dimension == 2
    v = theorem_verdict(synthetic, 2)
    assert not v.hypothesis_ok
    assert v.outcome is TheoremOutcome.HYPOTHESIS_NOT_SATISFIED


def test_verdict_multiplicity_range():
    h = build(ExponentPair((1, 1, 1), (2, 1, 1)))
    with pytest.raises(BadMultiplicity):
        theorem_verdict(h, 0)
    with pytest.raises(BadMultiplicity):
        theorem_verdict(h, 4)
