from fractions import Fraction as F

import pytest
from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st
from rest_framework.test import APIClient

from triples.domain import TripleType
from triples.exceptions import DomainError
from triples.invariants import alpha_range

from .bridge import (
    coprime_smooth,
    expected_dim,
    higgs_profile,
    minima_triple_type,
    mw_relations,
    rigidity,
    toledo,
    vanishing_pattern,
)
from .domain import HiggsType, HodgeChain
from .morse import analyse_chain, dim_h1_weight, is_local_minimum, morse_index, uk_profile

ranks = st.integers(min_value=1, max_value=5)
degrees = st.integers(min_value=-12, max_value=12)
genera = st.integers(min_value=2, max_value=6)
higgs_types = st.builds(HiggsType, ranks, ranks, degrees, degrees, genera)
chains = st.integers(min_value=1, max_value=5).flatmap(
    lambda m: st.builds(
        HodgeChain,
        st.tuples(*[st.integers(1, 3)] * m),
        st.tuples(*[st.integers(-6, 6)] * m),
    )
)


def test_higgs_type_validation():
    with pytest.raises(DomainError):
        HiggsType(0, 1, 0, 0, 2)
    with pytest.raises(DomainError):
        HiggsType(1, 1, 0, 0, 1)


def test_toledo():
    tol = toledo(HiggsType(2, 3, 1, 1, 2))
    assert (tol.tau, tol.tau_M) == (F(2, 5), 4)
    assert tol.within_bound and not tol.saturated
    assert toledo(HiggsType(3, 4, 0, 0, 3)).tau == 0
    tol = toledo(HiggsType(1, 2, 2, 1, 2))
    assert tol.tau == tol.tau_M == 2
    assert tol.saturated


@given(higgs_types, st.integers(-5, 5))
def test_toledo_invariant_under_shift(h, shift):
    moved = HiggsType(h.p, h.q, h.a + shift * h.p, h.b + shift * h.q, h.g)
    assert toledo(moved).tau == toledo(h).tau


def test_minima_triple_type():
    minima = minima_triple_type(HiggsType(1, 1, 0, 1, 2))
    assert minima.case_tag == 'gamma_zero'
    assert minima.triple == TripleType(1, 1, 2, 1)
    assert minima.alpha == 2

    minima = minima_triple_type(HiggsType(1, 2, 2, 1, 2))
    assert minima.case_tag == 'beta_zero'
    assert minima.triple == TripleType(2, 1, 5, 2)

    minima = minima_triple_type(HiggsType(1, 1, 0, 0, 2))
    assert minima.case_tag == 'both_zero'
    assert [(f.kind, f.rank, f.degree) for f in minima.product] == [
        ('semistable_bundles', 1, 0),
        ('semistable_bundles', 1, 0),
    ]


@given(ranks, ranks, st.integers(-4, 4), genera)
def test_tie_descriptions_agree(p, q, s, g):
    h = HiggsType(p, q, p * s, q * s, g)
    minima = minima_triple_type(h)
    two_g = 2 * h.g - 2
    assert alpha_range(minima.triple).lo == two_g
    assert alpha_range(minima.alternate_triple).lo == two_g


def test_mw_relations_examples():
    mw = mw_relations(HiggsType(1, 2, 2, 1, 2))
    assert mw.alpha_M == 2
    assert mw.alpha_M_vs_2g2 == '='

    mw = mw_relations(HiggsType(1, 1, 0, 0, 2))
    assert mw.triple == TripleType(1, 1, 2, 0)
    assert mw.alpha_m_vs_2g2 == '='
    assert mw.alpha_M is None

    mw = mw_relations(HiggsType(2, 3, 1, 1, 2))
    assert (mw.alpha_m_vs_2g2, mw.alpha_M_vs_2g2) == ('<', '>')


@given(higgs_types)
def test_mw_relations_hold(h):
    mw = mw_relations(h)
    assert all(fact.holds for fact in mw.facts), [fact.statement for fact in mw.facts if not fact.holds]
    assert mw.alpha_m <= mw.two_g_minus_two


@pytest.mark.parametrize('p, q, g', [
    (p, q, g) for p in range(1, 6) for q in range(1, 7 - p) for g in (2, 3)
])
def test_mw_relations_hold_exhaustively(p, q, g):
    for a in range(-10, 11):
        for b in range(-10, 11):
            h = HiggsType(p, q, a, b, g)
            broken = [fact.statement for fact in mw_relations(h).facts if not fact.holds]
            assert not broken, (h, broken)


def test_expected_dim():
    assert expected_dim(HiggsType(1, 1, 0, 0, 2)) == 5
    assert expected_dim(HiggsType(2, 3, 0, 0, 2)) == 26
    assert expected_dim(HiggsType(2, 3, 0, 0, 4)) == expected_dim(HiggsType(3, 2, 0, 0, 4))


def test_vanishing_pattern():
    assert vanishing_pattern(HiggsType(1, 1, 1, 0, 2)) == 'beta_zero'
    assert vanishing_pattern(HiggsType(1, 1, 0, 1, 2)) == 'gamma_zero'
    assert vanishing_pattern(HiggsType(2, 2, 3, 3, 2)) == 'both_zero'


def test_coprime_smooth():
    assert coprime_smooth(HiggsType(2, 3, 1, 1, 2))
    assert not coprime_smooth(HiggsType(1, 1, 2, 0, 2))
    for p in range(1, 5):
        for q in range(1, 5):
            assert coprime_smooth(HiggsType(p, q, p, q - 1, 2))


# rigidity

def test_rigidity_example():
    result = rigidity(HiggsType(1, 2, 2, 1, 2))
    assert result.applies
    assert result.factor1 == HiggsType(1, 1, 2, 0, 2)
    assert (result.factor2.rank, result.factor2.degree) == (1, 1)
    assert result.factor2_summand == 'W'
    assert result.dim_sum == result.closed_form == 7
    assert result.transposed_form == 19
    assert result.expected_dim == 10
    assert result.below_expected
    assert (result.twisted_pairs.rank, result.twisted_pairs.degree) == (1, 2)


def test_rigidity_larger_ranks():
    result = rigidity(HiggsType(2, 3, 2, -2, 2))
    assert result.factor1 == HiggsType(2, 2, 2, -2, 2)
    assert (result.factor2.rank, result.factor2.degree) == (1, 0)


def test_rigidity_p_greater_than_q_negative_tau():
    result = rigidity(HiggsType(2, 1, 1, 2, 2))
    assert result.factor1 == HiggsType(1, 1, 0, 2, 2)
    assert (result.factor2.rank, result.factor2.degree) == (1, 1)
    assert result.factor2_summand == 'V'


def test_rigidity_not_applicable():
    assert not rigidity(HiggsType(2, 2, 4, 0, 2)).applies
    assert not rigidity(HiggsType(2, 3, 1, 1, 2)).applies
    assert rigidity(HiggsType(2, 3, 1, 1, 2)).factor1 is None


@st.composite
def maximal_toledo(draw):
    p, q = draw(ranks), draw(ranks)
    assume(p != q)
    g, s, sign = draw(genera), draw(st.integers(-3, 3)), draw(st.sampled_from([1, -1]))
    if p < q:
        return HiggsType(p, q, p * s, q * s - sign * (g - 1) * (p + q), g)
    return HiggsType(p, q, p * s + sign * (g - 1) * (p + q), q * s, g)


@settings(max_examples=1000, deadline=None)
@given(maximal_toledo())
def test_rigidity_decomposition_properties(h):
    assert toledo(h).saturated
    result = rigidity(h)
    assert result.applies
    assert result.dim_sum == result.closed_form
    assert result.below_expected
    assert result.factor1.a + result.factor1.b + result.factor2.degree == h.a + h.b
    assert toledo(result.factor1).saturated
    assert result.factor2.rank == abs(h.q - h.p)


def test_profile_twisted_pairs_at_equal_rank_maximal_toledo():
    profile = higgs_profile(HiggsType(2, 2, 4, 0, 2))
    assert profile.toledo.saturated
    assert (profile.twisted_pairs.rank, profile.twisted_pairs.degree) == (2, 4)
    assert higgs_profile(HiggsType(2, 2, 3, 1, 2)).twisted_pairs is None


# Morse bookkeeping

def test_uk_profile():
    chain = HodgeChain((1, 1, 1), (2, 1, 0))
    space = uk_profile(chain, 2)
    assert (space.rank, space.degree) == (1, -2)
    assert uk_profile(chain, 0).degree == 0
    assert (uk_profile(chain, 3).rank, uk_profile(chain, 3).degree) == (0, 0)


@given(chains)
def test_uk_profile_identities(chain):
    spaces = [uk_profile(chain, k) for k in range(-(chain.m - 1), chain.m)]
    assert sum(space.rank for space in spaces) == sum(chain.ranks) ** 2
    assert sum(space.degree for space in spaces) == 0
    for k in range(chain.m):
        assert uk_profile(chain, -k).rank == uk_profile(chain, k).rank
        assert uk_profile(chain, -k).degree == -uk_profile(chain, k).degree


def test_dim_h1_weight():
    assert dim_h1_weight(HodgeChain((1, 1), (0, 0)), 0, 2) == 4
    assert dim_h1_weight(HodgeChain((1, 1, 1), (2, 1, 0)), 1, 2) == 3
    assert dim_h1_weight(HodgeChain((1, 1), (3, 0)), 1, 3) == 0


def test_morse_index():
    assert morse_index(HodgeChain((2, 3), (5, -1)), 4) == 0
    assert morse_index(HodgeChain((1, 1, 1), (2, 1, 0)), 2) == 3
    assert morse_index(HodgeChain((1, 1, 1), (0, 1, 2)), 2) == -1


def test_analyse_chain_advisory():
    report = analyse_chain(HodgeChain((1, 1, 1), (0, 1, 2)), 2)
    assert report.index == -1
    assert report.real_index == -2
    assert 'not realizable' in report.advisory
    assert len(report.profile) == 5
    assert [item.k for item in report.h1] == [0, 1]

    report = analyse_chain(HodgeChain((1, 1, 1), (2, 1, 0)), 2)
    assert report.advisory is None
    assert not report.local_minimum


@given(st.integers(1, 4), st.integers(1, 4), degrees, degrees, genera)
def test_length_two_chains_are_minima(r1, r2, e1, e2, g):
    chain = HodgeChain((r1, r2), (e1, e2))
    assert morse_index(chain, g) == 0
    assert is_local_minimum(chain, g)


def test_hodge_chain_validation():
    with pytest.raises(DomainError):
        HodgeChain((), ())
    with pytest.raises(DomainError):
        HodgeChain((1, 2), (0,))
    with pytest.raises(DomainError):
        HodgeChain((1, 0), (0, 0))


class HiggsApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_rigidity(self):
        response = self.client.get('/api/higgs/bundles/rigidity/', {'p': 1, 'q': 2, 'a': 2, 'b': 1, 'g': 2})
        self.assertEqual(response.status_code, 200)
        body = response.json()
        self.assertEqual(body['outputs']['dim_sum'], 7)
        self.assertEqual(body['outputs']['factor1'], {'p': 1, 'q': 1, 'a': 2, 'b': 0, 'g': 2})
        self.assertEqual(len(body['warnings']), 1)

    def test_summary_uses_default_genus(self):
        response = self.client.get('/api/higgs/bundles/summary/', {'p': 2, 'q': 3, 'a': 1, 'b': 1})
        self.assertEqual(response.status_code, 200)
        outputs = response.json()['outputs']
        self.assertEqual(outputs['higgs']['g'], 2)
        self.assertEqual(outputs['toledo']['tau'], '2/5')
        self.assertEqual(outputs['expected_dim'], 26)

    def test_morse_by_query_list(self):
        response = self.client.get('/api/higgs/chains/morse/', {'ranks': [1, 1, 1], 'degrees': [0, 1, 2], 'g': 2})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['outputs']['index'], -1)
        self.assertEqual(len(response.json()['warnings']), 1)

    def test_morse_mismatched_lengths(self):
        response = self.client.post('/api/higgs/chains/morse/', {'ranks': [1, 1], 'degrees': [0]}, format='json')
        self.assertEqual(response.status_code, 400)
        self.assertIn('degrees', response.json())
