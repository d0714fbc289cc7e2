from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antidote_codes.model import (
    CASES,
    InvalidParameters,
    ProblemSpec,
    antidotes_for_case,
    antidotes_general,
    capacity_general,
    capacity_one_sided,
    make_case,
    valid_cases,
)


class TestAntidotesGeneral:
    def test_two_sided(self):
        assert antidotes_general(5, 1, 2, 1) == {5, 2, 3}

    def test_everything_else(self):
        assert antidotes_general(5, 0, 4, 3) == {4, 5, 1, 2}

    def test_wraps_past_K(self):
        assert antidotes_general(20, 0, 4, 17) == {18, 19, 20, 1}

    def test_window_too_wide(self):
        with pytest.raises(InvalidParameters):
            antidotes_general(5, 2, 3, 1)


class TestAntidotesForCase:
    def test_case_VIII_zigzag(self):
        # p = 24/(5+1) = 4: offsets 1, then (1+5, 2+5), (2+10, 3+10), (3+15, 4+15)
        p = make_case("VIII", 24, 19, 1)
        assert antidotes_for_case(p, 1) == {2, 7, 8, 13, 14, 19, 20}

    def test_case_V_tail_receiver(self):
        assert antidotes_for_case(make_case("V", 21, 4, 1), 18) == {19, 20, 21, 1}

    def test_case_V_head_receiver(self):
        assert antidotes_for_case(make_case("V", 21, 4, 1), 16) == {20}

    def test_case_I(self):
        assert antidotes_for_case(make_case("I", 6, 2), 5) == {1}

    def test_case_III(self):
        assert antidotes_for_case(make_case("III", 20, 12), 1) == {11, 3, 13}

    def test_case_IX_switch_point(self):
        p = make_case("IX", 19, 5, 1)
        # receivers up to K-2D+lambda = 10 hold a single antidote
        assert antidotes_for_case(p, 10) == {15}
        assert antidotes_for_case(p, 11) == {12, 13, 14, 15, 16}
        assert antidotes_for_case(p, 16) == {17, 18, 19, 1, 2}


class TestCapacity:
    def test_general(self):
        assert capacity_general(5, 1, 1) == Fraction(2, 5)

    def test_general_full_side_information(self):
        assert capacity_general(5, 2, 2) == 1

    def test_example_1(self):
        assert capacity_general(20, 0, 4) == Fraction(1, 16)

    @pytest.mark.parametrize("K,D,expected", [(20, 16, Fraction(1, 4)), (4, 3, Fraction(1)), (19, 5, Fraction(1, 14))])
    def test_one_sided(self, K, D, expected):
        assert capacity_one_sided(K, D) == expected

    def test_one_sided_rejects_D_ge_K(self):
        with pytest.raises(InvalidParameters):
            capacity_one_sided(4, 4)

    def test_general_rejects_overfull(self):
        with pytest.raises(InvalidParameters):
            capacity_general(5, 2, 3)

    def test_one_sided_agrees_with_general(self):
        for K in range(2, 101):
            for D in range(1, K):
                assert capacity_one_sided(K, D) == capacity_general(K, 0, D)

    @given(st.integers(2, 60).flatmap(lambda K: st.tuples(st.just(K), st.integers(0, K - 1)).flatmap(
        lambda kd: st.tuples(st.just(kd[0]), st.just(kd[1]), st.integers(0, kd[0] - 1 - kd[1])))))
    def test_symmetric_in_U_and_D(self, kud):
        K, U, D = kud
        c = capacity_general(K, U, D)
        assert c == capacity_general(K, D, U)
        assert 0 < c <= 1


class TestValidation:
    @pytest.mark.parametrize(
        "case,K,D,lam,message",
        [
            ("I", 6, 4, None, "D must divide K"),
            ("I", 4, 4, None, "1 <= D <= K-1"),
            ("II", 5, 2, None, "K-D must divide K"),
            ("III", 20, 13, None, "D-K/2 must divide K/2"),
            ("III", 20, 10, None, "D-K/2 must be at least 1"),
            ("IV", 20, 7, None, "K/2-D must divide D"),
            ("V", 21, 4, 3, "lambda must divide D"),
            ("VI", 21, 15, 1, "K-D must divide K-lambda"),
            ("VII", 18, 5, 2, "lambda must divide D"),
            ("VIII", 24, 19, 2, "lambda must divide K-D"),
            ("IX", 19, 5, 2, "lambda must divide D"),
            ("X", 28, 18, 3, "lambda must divide K-D"),
            ("X", 6, 4, 2, "lambda must be at most (K-D)/2"),
            ("V", 21, 4, None, "needs lambda"),
            ("I", 20, 4, 1, "takes no lambda"),
        ],
    )
    def test_rejections_name_the_condition(self, case, K, D, lam, message):
        with pytest.raises(InvalidParameters, match=message.replace("(", r"\(").replace(")", r"\)")):
            make_case(case, K, D, lam)

    def test_case_VI_boundary_is_valid(self):
        assert make_case("VI", 21, 16, 1).q == 4

    def test_derived_values(self):
        assert make_case("IV", 20, 8).derived() == {"m": 2, "n": 10, "p": 4}
        assert make_case("X", 28, 18, 2).derived() == {"m": 10, "p": 8, "q": 3, "s": 5}
        assert make_case("VIII", 24, 19, 1).derived() == {"m": 5, "p": 4, "s": 5}
        assert make_case("IX", 19, 5, 1).derived() == {"n": 4, "p": 4}

    def test_case_IV_has_n_equal_2p_plus_2(self):
        for p in valid_cases(60):
            if p.case == "IV":
                assert p.n == 2 * p.p + 2


EXPECTED_SIZE = {
    "I": lambda p: 1,
    "II": lambda p: p.n - 1,
    "III": lambda p: 3,
    "IV": lambda p: p.p,
    "VII": lambda p: p.p,
    "VIII": lambda p: 2 * p.p - 1,
    "VI": lambda p: p.D,
    "X": lambda p: p.D,
}


def test_case_patterns_sit_inside_the_one_sided_window():
    for params in valid_cases(40):
        for k in range(1, params.K + 1):
            side = antidotes_for_case(params, k)
            window = antidotes_general(params.K, 0, params.D, k)
            assert k not in side
            assert side <= window
            if params.case in ("VI", "X"):
                assert side == window
            if params.case in EXPECTED_SIZE:
                assert len(side) == EXPECTED_SIZE[params.case](params), (params, k)


def test_problem_spec_rejects_self_antidote():
    with pytest.raises(InvalidParameters):
        ProblemSpec.from_sets(3, [{1}, set(), set()])


def test_problem_spec_edges_and_removal():
    g = ProblemSpec.from_case(make_case("I", 6, 2))
    assert g.edges() == [(1, 3), (2, 4), (3, 5), (4, 6), (5, 1), (6, 2)]
    h = g.without_edge(5, 1)
    assert h.num_edges == 5 and h.antidotes_of(5) == frozenset()
    with pytest.raises(KeyError):
        g.without_edge(1, 2)


def test_every_case_has_instances():
    found = {p.case for p in valid_cases(30)}
    assert found == set(CASES)
