from dataclasses import replace
from fractions import Fraction as F

import pytest
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st
from rest_framework.test import APIClient

from .domain import NO, UNKNOWN, YES, SubtripleWitness, TripleData, TripleType
from .exceptions import DomainError
from .invariants import (
    alpha_range,
    alpha_slope,
    chi,
    delta_alpha,
    dim_stable_moduli,
    dual,
    fibration_dims,
    slope,
    thresholds,
    witness_check,
)
from .moduli import moduli_verdict
from .rationals import format_rational, parse_rational
from .walls import (
    admissible_rank_pairs,
    chambers,
    default_cutoff,
    enumerate_walls,
    flip_dims,
    integer_genericity,
    is_critical,
    wall_alpha,
)

ranks = st.integers(min_value=1, max_value=4)
degrees = st.integers(min_value=-8, max_value=8)
genera = st.integers(min_value=2, max_value=6)
triple_types = st.builds(TripleType, ranks, ranks, degrees, degrees)

acceptance_scale = settings(max_examples=10_000, deadline=None)


# rationals

def test_parse_and_format_rational():
    assert parse_rational('6/4') == F(3, 2)
    assert parse_rational('-3') == -3
    assert format_rational(F(-6, 4)) == '-3/2'
    assert format_rational(F(8, 4)) == '2'


@pytest.mark.parametrize('text', ['1.5', '1/0', 'a/b', '', '1/-2'])
def test_parse_rational_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_rational(text)


# slopes and witnesses

def test_slope():
    assert slope(3, 5) == F(5, 3)
    assert slope(2, 0) == 0
    assert slope(4, -6) == F(-3, 2)
    with pytest.raises(DomainError):
        slope(0, 1)


def test_alpha_slope():
    assert alpha_slope(TripleType(2, 1, 3, 1), 1) == F(5, 3)
    assert alpha_slope(TripleType(1, 1, 0, 0), 0) == 0
    assert alpha_slope(TripleType(3, 2, 5, 2), F(2, 3)) == F(5, 3)


def test_delta_alpha():
    t = TripleType(2, 1, 3, 1)
    assert delta_alpha(t, SubtripleWitness(1, 1, 1, 1), 1) == F(-1, 6)
    assert delta_alpha(t, SubtripleWitness(2, 1, 3, 1), F(7, 3)) == 0
    assert delta_alpha(TripleType(2, 1, 4, 1), SubtripleWitness(0, 1, 0, 0), F(5, 2)) == 0


def test_witness_check_strict_and_lax():
    report = witness_check(TripleType(2, 1, 3, 1), [(1, 1, 1, 1)], 1, strict=True)
    assert report.passed
    assert report.verdicts[0].delta == F(-1, 6)

    wall = TripleType(2, 1, 4, 1)
    assert not witness_check(wall, [(0, 1, 0, 0)], F(5, 2), strict=True).passed
    assert witness_check(wall, [(0, 1, 0, 0)], F(5, 2), strict=False).passed

    for strict in (True, False):
        report = witness_check(TripleType(1, 1, 1, 0), [(1, 0, 1, 0)], F(1, 2), strict=strict)
        assert report.verdicts[0].delta == F(1, 4)
        assert not report.passed


def test_witness_check_reports_improper_witness_and_continues():
    t = TripleType(2, 1, 3, 1)
    report = witness_check(t, [(3, 0, 0, 0), (0, 0, 1, 1), (2, 1, 3, 1), (1, 1, 1, 1)], 1)
    errors = [verdict.error for verdict in report.verdicts]
    assert all(errors[:3])
    assert errors[3] is None
    assert report.verdicts[3].passed
    assert not report.passed


# alpha-range and thresholds

def test_alpha_range():
    rng = alpha_range(TripleType(3, 2, 5, 2))
    assert (rng.lo, rng.hi) == (F(2, 3), 4)
    rng = alpha_range(TripleType(2, 1, 2, 1))
    assert (rng.lo, rng.hi) == (0, 0)
    rng = alpha_range(TripleType(2, 2, 3, 1))
    assert rng.lo == 1 and rng.hi_infinite
    assert alpha_range(TripleType(1, 1, 0, 1)).empty


def test_thresholds_unequal_ranks():
    bounds = thresholds(TripleType(3, 2, 5, 2))
    assert bounds.alpha_j == (F(8, 7), F(2, 3))
    assert bounds.alpha_0 == F(8, 7)
    assert bounds.alpha_t == F(3, 2)
    assert bounds.alpha_e == F(3, 2)
    assert bounds.alpha_m <= bounds.alpha_L < bounds.alpha_M
    assert not bounds.via_duality


def test_thresholds_equal_ranks():
    bounds = thresholds(TripleType(2, 2, 3, 1))
    assert bounds.alpha_0 == 2
    assert bounds.alpha_L == 2
    assert bounds.alpha_M is None
    assert bounds.alpha_t is None


def test_thresholds_rank_one_second_bundle():
    bounds = thresholds(TripleType(3, 1, 4, 1))
    assert bounds.alpha_0 == bounds.alpha_m


def test_thresholds_through_duality():
    t = TripleType(3, 2, 5, 2)
    bounds = thresholds(dual(t))
    assert bounds.via_duality
    assert bounds.alpha_0 == thresholds(t).alpha_0


def test_thresholds_empty_range():
    with pytest.raises(DomainError) as exc:
        thresholds(TripleType(1, 1, 0, 1))
    assert exc.value.code == 'empty_range'


@pytest.mark.parametrize('t, zeros', [(TripleType(2, 1, 2, 1), 1), (TripleType(3, 2, 3, 2), 2)])
def test_thresholds_equal_slopes_collapse_to_zero(t, zeros):
    bounds = thresholds(t)
    assert bounds.alpha_j == (0,) * zeros
    assert bounds.alpha_m == bounds.alpha_M == bounds.alpha_0 == 0
    assert bounds.alpha_L == 0


@settings(max_examples=1000, deadline=None)
@given(triple_types)
def test_alpha_j_strictly_decreasing(t):
    if t.n1 < t.n2 or t.mu1 <= t.mu2:
        return
    bounds = thresholds(t)
    assert all(a > b for a, b in zip(bounds.alpha_j, bounds.alpha_j[1:]))
    assert bounds.alpha_e >= bounds.alpha_m
    if t.n2 > 1:
        assert bounds.alpha_m < bounds.alpha_0
    else:
        assert bounds.alpha_m == bounds.alpha_0
    if t.n1 > t.n2:
        assert bounds.alpha_t < bounds.alpha_M


# duality, chi, dimensions

def test_dual():
    t = TripleType(3, 2, 5, 2)
    assert dual(t) == TripleType(2, 3, -2, -5)
    assert alpha_range(dual(t)) == alpha_range(t)


@given(triple_types)
def test_dual_is_involution_and_preserves_range(t):
    assert dual(dual(t)) == t
    assert alpha_range(dual(t)) == alpha_range(t)


def test_chi_examples():
    assert chi(TripleData(1, 1, 1, 0), TripleData(1, 0, 2, 0), 2) == -1
    t = TripleType(2, 1, 4, 1)
    assert chi(t, t, 2) == -5


def test_dim_stable_moduli():
    assert dim_stable_moduli(TripleType(2, 1, 4, 1), 2) == 6
    assert dim_stable_moduli(TripleType(1, 1, 2, 0), 2) == 4
    with pytest.raises(DomainError):
        dim_stable_moduli(TripleType(1, 1, 2, 0), 1)


@acceptance_scale
@given(triple_types, genera)
def test_dimension_is_one_minus_chi(t, g):
    assert dim_stable_moduli(t, g) == 1 - chi(t, t, g)


@acceptance_scale
@given(triple_types, genera, st.data())
def test_chi_additive_over_splits(t, g, data):
    n1p = data.draw(st.integers(0, t.n1))
    n2p = data.draw(st.integers(0, t.n2))
    if (n1p, n2p) in ((0, 0), (t.n1, t.n2)):
        return
    tp = TripleData(n1p, n2p, data.draw(degrees), data.draw(degrees))
    tpp = t - tp
    assert chi(t, t, g) == chi(tp, tp, g) + chi(tpp, tpp, g) + chi(tpp, tp, g) + chi(tp, tpp, g)


@given(triple_types, st.tuples(ranks, ranks, degrees, degrees), degrees)
def test_delta_alpha_is_affine(t, raw, shift):
    if raw[0] > t.n1 or raw[1] > t.n2:
        return
    w = SubtripleWitness(*raw)
    points = [F(shift + k, 3) for k in range(3)]
    values = [delta_alpha(t, w, alpha) for alpha in points]
    assert values[1] - values[0] == values[2] - values[1]
    assert (values[1] - values[0]) * 3 == F(w.n2, w.rank) - F(t.n2, t.rank)


def test_fibration_dims():
    fibration = fibration_dims(TripleType(3, 2, 5, 2), 2)
    assert fibration.fiber_dim == 6
    assert [factor.kind for factor in fibration.base] == ['stable_bundles', 'stable_bundles']
    assert (fibration.base[0].rank, fibration.base[0].degree) == (1, 3)

    fibration = fibration_dims(TripleType(2, 2, 3, 1), 5)
    assert fibration.fiber_dim == 3
    assert fibration.base[1].kind == 'divisors'
    assert fibration.alpha_M_moduli is None

    fibration = fibration_dims(TripleType(2, 2, 1, 1), 2)
    assert fibration.fiber_dim == -1
    assert fibration.empty_fiber


def test_fibration_dims_through_duality():
    t = TripleType(3, 2, 5, 2)
    assert fibration_dims(dual(t), 2).fiber_dim == fibration_dims(t, 2).fiber_dim
    assert fibration_dims(dual(t), 2).via_duality


# walls

def test_enumerate_walls_single_wall():
    walls = enumerate_walls(TripleType(2, 1, 4, 1), 1, 4)
    assert [wall.alpha for wall in walls] == [F(5, 2)]
    assert [(w.n1p, w.n2p, w.dsum) for w in walls[0].witnesses] == [(0, 1, 0), (2, 0, 5)]


def test_enumerate_walls_empty_and_closed_end():
    assert enumerate_walls(TripleType(2, 1, 3, 1), F(1, 2), 2) == []
    walls = enumerate_walls(TripleType(1, 1, 1, 0), 1, 5, include_hi=True)
    assert [wall.alpha for wall in walls] == [3, 5]
    assert all(wall.stabilized for wall in walls)


def test_enumerate_walls_rejects_bad_interval():
    t = TripleType(2, 1, 4, 1)
    with pytest.raises(DomainError):
        enumerate_walls(t, 1, None)
    with pytest.raises(DomainError):
        enumerate_walls(t, 4, 1)


@settings(max_examples=40)
@given(triple_types)
def test_enumerate_walls_matches_brute_force(t):
    lo, hi = F(-3), F(6)
    expected = set()
    for n1p, n2p in admissible_rank_pairs(t):
        for dsum in range(-300, 301):
            alpha = wall_alpha(t, n1p, n2p, dsum)
            if lo < alpha < hi:
                expected.add(alpha)
    walls = enumerate_walls(t, lo, hi)
    assert [wall.alpha for wall in walls] == sorted(expected)
    assert all(is_critical(t, wall.alpha).critical for wall in walls)


@pytest.mark.parametrize('n1, n2', [(n1, n2) for n1 in range(1, 7) for n2 in range(1, 8 - n1)])
def test_walls_of_dual_coincide(n1, n2):
    for d1 in range(-10, 11):
        for d2 in range(-10, 11):
            t = TripleType(n1, n2, d1, d2)
            rng = alpha_range(t)
            if rng.empty:
                continue
            hi = default_cutoff(t, 2)
            if hi <= rng.lo:
                continue
            walls = [wall.alpha for wall in enumerate_walls(t, rng.lo, hi)]
            assert walls == [wall.alpha for wall in enumerate_walls(dual(t), rng.lo, hi)], t


def test_is_critical():
    t = TripleType(2, 1, 4, 1)
    assert is_critical(t, F(5, 2)).critical
    assert not is_critical(t, 2).critical
    witnesses = is_critical(TripleType(2, 1, 3, 1), F(1, 2)).witnesses
    assert (0, 1, 1) in [(w.n1p, w.n2p, w.dsum) for w in witnesses]


def test_integer_genericity():
    t = TripleType(2, 1, 4, 1)
    assert integer_genericity(t, 0).guaranteed_noncritical
    assert not integer_genericity(t, 1).guaranteed_noncritical
    assert integer_genericity(t, 1).no_alpha_independent


@acceptance_scale
@given(triple_types, st.integers(-10, 10))
def test_genericity_guarantee_is_sound(t, m):
    if integer_genericity(t, m).guaranteed_noncritical:
        assert not is_critical(t, m).critical


# chambers

def test_chambers_unequal_ranks():
    report = chambers(TripleType(2, 1, 4, 1), 2)
    assert [(c.lo, c.hi) for c in report.chambers] == [(1, F(5, 2)), (F(5, 2), 4)]
    assert report.chambers[0].contains_2g_minus_2
    assert [c.is_large_chamber for c in report.chambers] == [False, True]
    assert report.flips_to_large == 1
    assert report.position == 'interior'
    assert report.cutoff is None


def test_chambers_equal_ranks_with_cutoff():
    report = chambers(TripleType(1, 1, 1, 0), 2, cutoff=5)
    assert [(c.lo, c.hi) for c in report.chambers] == [(1, 3), (3, 5)]
    assert all(c.is_large_chamber for c in report.chambers)
    assert report.flips_to_large == 0
    assert report.cutoff == 5


def test_chambers_two_g_minus_two_at_alpha_M():
    report = chambers(TripleType(2, 1, 3, 1), 2)
    assert [(c.lo, c.hi) for c in report.chambers] == [(F(1, 2), 2)]
    assert report.position == 'at_alpha_M'
    assert report.flips_to_large is None
    assert not report.chambers[0].birational_to_large


def test_chambers_two_g_minus_two_on_a_wall():
    report = chambers(TripleType(2, 1, 0, -4), 6)
    assert report.position == 'on_wall'
    assert report.wall_at_2g_minus_2.alpha == 10
    assert len(report.chambers) == 8
    assert not any(c.contains_2g_minus_2 for c in report.chambers)
    assert report.flips_to_large == 3


def test_chambers_degenerate_and_empty():
    report = chambers(TripleType(2, 1, 2, 1), 2)
    assert report.chambers == ()
    assert report.position == 'above_range'
    with pytest.raises(DomainError):
        chambers(TripleType(1, 1, 0, 1), 2)
    with pytest.raises(DomainError):
        chambers(TripleType(1, 1, 1, 0), 2, cutoff=1)


# flip loci

def test_flip_dims():
    flip = flip_dims(TripleType(2, 1, 4, 1), (0, 1, 0, 0), 2)
    assert flip.alpha_c == F(5, 2)
    assert flip.stilde_dim == 5
    assert flip.minus_chi_cross == 1
    assert flip.minus_chi_reverse == 1
    assert flip.total_dim == 6
    assert flip.side == 'minus'
    assert flip.guaranteed_codim == 1
    assert flip.codim_bound_applies
    assert flip.fiber_dim == 0


@pytest.mark.parametrize('split, code', [
    ((3, 0, 0, 0), 'split'),
    ((2, 1, 4, 1), 'split'),
    ((1, 0, 10, 0), 'equal_slope'),
])
def test_flip_dims_rejects(split, code):
    with pytest.raises(DomainError) as exc:
        flip_dims(TripleType(2, 1, 4, 1), split, 2)
    assert exc.value.code == code


def test_flip_dims_rejects_proportional_ranks():
    with pytest.raises(DomainError) as exc:
        flip_dims(TripleType(2, 2, 3, 1), (1, 1, 1, 0), 2)
    assert exc.value.code == 'equal_slope'


@settings(max_examples=60)
@given(triple_types, genera, st.data())
def test_flip_dimension_identity(t, g, data):
    rng = alpha_range(t)
    if rng.empty or rng.lo >= 6:
        return
    walls = enumerate_walls(t, rng.lo, 6)
    if not walls:
        return
    wall = data.draw(st.sampled_from(walls))
    w = wall.witnesses[0]
    d1p = data.draw(degrees)
    tp = TripleData(w.n1p, w.n2p, d1p, w.dsum - d1p)
    try:
        flip = flip_dims(t, tp, g)
    except DomainError:
        return
    assert flip.alpha_c == wall.alpha
    assert flip.total_dim == flip.stilde_dim + flip.minus_chi_reverse


# moduli verdicts

@pytest.mark.parametrize('alpha, stable, smooth, full, dim', [
    (3, YES, YES, YES, 6),
    (2, YES, YES, YES, 6),
    (F(5, 2), YES, YES, UNKNOWN, 6),
    (F(3, 2), UNKNOWN, UNKNOWN, UNKNOWN, None),
    (5, NO, NO, NO, None),
])
def test_moduli_verdict_unequal_ranks(alpha, stable, smooth, full, dim):
    verdict = moduli_verdict(TripleType(2, 1, 4, 1), alpha, 2)
    assert verdict.stable_nonempty == verdict.stable_irreducible == verdict.stable_birational_to_large == stable
    assert verdict.stable_smooth == smooth
    assert verdict.full_irreducible == verdict.full_birational_to_large == full
    assert verdict.stable_dim == dim


def test_moduli_verdict_records_hypotheses():
    verdict = moduli_verdict(TripleType(2, 1, 4, 1), F(5, 2), 2)
    assert verdict.critical
    assert '2g-2 <= alpha < alpha_M' in verdict.hypotheses
    assert verdict.citations['stable_irreducible'] == ('triple-moduli-irreducibility',)
    assert 'full_irreducible' not in verdict.citations

    verdict = moduli_verdict(TripleType(2, 1, 4, 1), 5, 2)
    assert not verdict.in_range
    assert verdict.hypotheses == ('alpha outside [alpha_m, alpha_M]',)


def test_moduli_verdict_on_the_wall_at_2g_minus_2():
    verdict = moduli_verdict(TripleType(2, 1, 0, -4), 10, 6)
    assert verdict.critical
    assert verdict.stable_irreducible == YES
    assert verdict.full_irreducible == UNKNOWN


def test_moduli_verdict_equal_ranks():
    verdict = moduli_verdict(TripleType(1, 1, 1, 0), 2, 2)
    assert {verdict.stable_nonempty, verdict.stable_smooth, verdict.full_irreducible} == {YES}
    assert verdict.stable_dim == 3

    verdict = moduli_verdict(TripleType(2, 2, 2, 2), 1, 2)
    assert verdict.full_birational_to_large == YES
    assert verdict.citations['stable_nonempty'] == ('equal-rank-equal-degree-isomorphism',)
    assert verdict.stable_dim == 5
    assert moduli_verdict(TripleType(2, 2, 2, 2), 0, 2).stable_nonempty == UNKNOWN


def test_moduli_verdict_equal_ranks_below_2g_minus_2():
    t = TripleType(2, 2, 3, 1)
    assert moduli_verdict(t, F(3, 2), 3).full_irreducible == UNKNOWN

    verdict = moduli_verdict(t, F(5, 2), 3)
    assert verdict.stable_irreducible == YES
    assert verdict.full_irreducible == YES
    assert verdict.stable_smooth == UNKNOWN
    assert verdict.stable_dim is None

    verdict = moduli_verdict(t, 5, 3)
    assert verdict.stable_smooth == YES
    assert verdict.stable_dim == dim_stable_moduli(t, 3)


@settings(max_examples=300, deadline=None)
@given(triple_types, genera, st.integers(-4, 40), st.integers(1, 4))
def test_moduli_verdict_properties(t, g, num, den):
    alpha = F(num, den)
    verdict = moduli_verdict(t, alpha, g)
    assert replace(moduli_verdict(dual(t), alpha, g), via_duality=False) == replace(verdict, via_duality=False)
    for name in ('stable_nonempty', 'stable_irreducible', 'stable_smooth', 'full_irreducible'):
        if getattr(verdict, name) == YES:
            assert verdict.citations[name]
            assert verdict.in_range
    if verdict.stable_dim is not None:
        assert verdict.stable_dim == dim_stable_moduli(t, g)
    if not verdict.in_range:
        assert verdict.stable_nonempty == NO


# HTTP surface

class TripleApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_walls_by_query_parameters(self):
        response = self.client.get('/api/triples/types/walls/', {'n1': 2, 'n2': 1, 'd1': 4, 'd2': 1})
        self.assertEqual(response.status_code, 200)
        walls = response.json()['outputs']['walls']
        self.assertEqual([wall['alpha'] for wall in walls], ['5/2'])
        self.assertEqual(walls[0]['witnesses'][1], {'n1p': 2, 'n2p': 0, 'dsum': 5})

    def test_summary_by_json_body(self):
        body = {'n1': 2, 'n2': 1, 'd1': 4, 'd2': 1, 'g': 2, 'split': [0, 1, 0, 0], 'alpha': '5/2'}
        response = self.client.post('/api/triples/types/summary/', body, format='json')
        self.assertEqual(response.status_code, 200)
        outputs = response.json()['outputs']
        self.assertEqual(outputs['dim_stable_moduli'], 6)
        self.assertEqual(outputs['flip']['stilde_dim'], 5)
        self.assertTrue(outputs['criticality']['critical'])
        self.assertEqual(response.json()['inputs']['alpha'], '5/2')

    def test_summary_moduli_verdict(self):
        body = {'n1': 2, 'n2': 1, 'd1': 4, 'd2': 1, 'g': 2, 'alpha': '5/2'}
        response = self.client.post('/api/triples/types/summary/', body, format='json')
        moduli = response.json()['outputs']['moduli']
        self.assertEqual(moduli['alpha'], '5/2')
        self.assertEqual(moduli['stable_irreducible'], 'yes')
        self.assertEqual(moduli['full_irreducible'], 'unknown')
        self.assertEqual(moduli['stable_dim'], 6)
        self.assertIn('triple-moduli-irreducibility', response.json()['citations']['moduli'])

    def test_summary_without_alpha_has_no_moduli_verdict(self):
        response = self.client.get('/api/triples/types/summary/', {'n1': 2, 'n2': 1, 'd1': 4, 'd2': 1})
        self.assertIsNone(response.json()['outputs']['moduli'])

    def test_chambers_with_2g_minus_2_on_a_wall(self):
        response = self.client.get('/api/triples/types/chambers/', {'n1': 2, 'n2': 1, 'd1': 0, 'd2': -4, 'g': 6})
        outputs = response.json()['outputs']
        self.assertEqual(outputs['position'], 'on_wall')
        self.assertEqual(outputs['wall_at_2g_minus_2']['alpha'], '10')
        self.assertEqual(outputs['flips_to_large'], 3)
        self.assertTrue(any('critical value' in w for w in response.json()['warnings']))

    def test_malformed_input_is_400(self):
        response = self.client.get('/api/triples/types/walls/', {'n1': 0, 'n2': 1, 'd1': 4, 'd2': 1})
        self.assertEqual(response.status_code, 400)
        self.assertIn('n1', response.json())

    def test_domain_error_is_422(self):
        response = self.client.get('/api/triples/types/chambers/', {'n1': 1, 'n2': 1, 'd1': 0, 'd2': 1})
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.json()['code'], 'empty_range')
