from dataclasses import replace
from math import gcd

from django.test import SimpleTestCase
from hypothesis import given, strategies as st
from rest_framework.test import APIClient

from higgs.bridge import expected_dim, toledo
from higgs.domain import HiggsType

from .domain import NO, UNKNOWN, YES
from .verdicts import classify, classify_all

TRISTATE_FIELDS = (
    'stable_nonempty',
    'closure_of_stable_connected',
    'full_space_nonempty',
    'full_space_connected',
)

ranks = st.integers(min_value=1, max_value=5)
higgs_types = st.builds(
    HiggsType, ranks, ranks, st.integers(-15, 15), st.integers(-15, 15), st.integers(2, 5)
)


def test_generic_coprime_class():
    verdict = classify(HiggsType(2, 3, 1, 1, 2))
    assert verdict.in_range
    assert verdict.stable_smooth_dim == 26
    assert all(getattr(verdict, name) == YES for name in TRISTATE_FIELDS)
    assert not verdict.rigid
    assert 'coprime-smoothness' in verdict.citations['full_space_connected']


def test_rigid_class():
    verdict = classify(HiggsType(1, 2, 2, 1, 2))
    assert verdict.rigid
    assert verdict.stable_nonempty == NO
    assert verdict.stable_smooth_dim is None
    assert verdict.full_space_connected == YES
    assert verdict.rigidity_data.dim_sum == 7


def test_equal_rank_maximal_toledo():
    verdict = classify(HiggsType(1, 1, 2, 0, 2))
    assert not verdict.rigid
    assert verdict.stable_smooth_dim == 5
    assert all(getattr(verdict, name) == YES for name in TRISTATE_FIELDS)


def test_tau_zero():
    verdict = classify(HiggsType(3, 4, 0, 0, 3))
    assert verdict.stable_nonempty == UNKNOWN
    assert verdict.closure_of_stable_connected == UNKNOWN
    assert verdict.full_space_nonempty == verdict.full_space_connected == YES


def test_out_of_range():
    verdict = classify(HiggsType(1, 1, 3, 0, 2))
    assert not verdict.in_range
    assert all(getattr(verdict, name) == NO for name in TRISTATE_FIELDS)
    assert verdict.stable_smooth_dim is None


def test_non_coprime_connectedness():
    verdict = classify(HiggsType(2, 2, 2, 0, 2))
    assert verdict.stable_nonempty == YES
    assert verdict.full_space_connected == UNKNOWN

    verdict = classify(HiggsType(3, 3, 4, -1, 2))
    assert toledo(HiggsType(3, 3, 4, -1, 2)).tau == 5
    assert verdict.full_space_connected == YES
    assert verdict.citations['full_space_connected'] == ('equal-rank-high-toledo-connectedness',)


def test_projective_representations_drop_smoothness():
    result = classify_all(HiggsType(2, 3, 1, 1, 2))
    assert result.representations.stable_smooth_dim == 26
    assert result.projective_representations.stable_smooth_dim is None
    assert 'stable_smooth_dim' not in result.projective_representations.citations
    assert result.projective_representations.full_space_connected == YES
    assert 'jacobian-principal-fibration' in result.projective_representations.citations['full_space_connected']
    assert 'higgs-representation-homeomorphism' in result.projective_representations.citations['full_space_connected']


@given(higgs_types)
def test_every_yes_is_cited(h):
    result = classify_all(h)
    for verdict in (result.moduli, result.representations, result.projective_representations):
        for name in TRISTATE_FIELDS:
            if getattr(verdict, name) == YES:
                assert verdict.citations.get(name), name
        if verdict.stable_smooth_dim is not None:
            assert verdict.citations.get('stable_smooth_dim')
        if verdict.rigid:
            assert verdict.citations.get('rigid')


@given(higgs_types)
def test_coprime_in_range_has_no_unknowns(h):
    verdict = classify(h)
    if verdict.in_range and gcd(h.p + h.q, h.a + h.b) == 1:
        assert UNKNOWN not in [getattr(verdict, name) for name in TRISTATE_FIELDS]


@given(higgs_types)
def test_smooth_dim_is_expected_dim(h):
    verdict = classify(h)
    if verdict.stable_smooth_dim is not None:
        assert verdict.stable_smooth_dim == expected_dim(h)


@given(higgs_types)
def test_rigid_exactly_at_unequal_rank_maximal_toledo(h):
    assert classify(h).rigid == (h.p != h.q and toledo(h).saturated)


@given(higgs_types, st.integers(-4, 4))
def test_verdict_is_orbit_invariant(h, shift):
    moved = HiggsType(h.p, h.q, h.a + shift * h.p, h.b + shift * h.q, h.g)
    assert replace(classify(moved), rigidity_data=None) == replace(classify(h), rigidity_data=None)


class ClassifierApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_classify(self):
        response = self.client.get('/api/classifier/verdicts/classify/', {'p': 2, 'q': 3, 'a': 1, 'b': 1, 'g': 2})
        self.assertEqual(response.status_code, 200)
        body = response.json()
        self.assertEqual(body['command'], 'classify')
        self.assertEqual(body['outputs']['moduli']['stable_smooth_dim'], 26)
        self.assertEqual(body['outputs']['moduli']['full_space_connected'], 'yes')
        self.assertIsNone(body['outputs']['projective_representations']['stable_smooth_dim'])
        self.assertIn('full_space_connected', body['citations'])

    def test_classify_rigid_carries_decomposition(self):
        response = self.client.post('/api/classifier/verdicts/classify/', {'p': 1, 'q': 2, 'a': 2, 'b': 1}, format='json')
        self.assertEqual(response.status_code, 200)
        moduli = response.json()['outputs']['moduli']
        self.assertTrue(moduli['rigid'])
        self.assertEqual(moduli['rigidity_data']['dim_sum'], 7)

    def test_classify_tau_zero_warns(self):
        response = self.client.get('/api/classifier/verdicts/classify/', {'p': 3, 'q': 4, 'a': 0, 'b': 0, 'g': 3})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(len(response.json()['warnings']), 1)

    def test_classify_rejects_rank_zero(self):
        response = self.client.get('/api/classifier/verdicts/classify/', {'p': 0, 'q': 3, 'a': 1, 'b': 1})
        self.assertEqual(response.status_code, 400)
