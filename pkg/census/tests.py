from fractions import Fraction as F
from math import gcd

import pytest
from django.test import SimpleTestCase, override_settings
from hypothesis import given, strategies as st
from rest_framework.test import APIClient

from triples.exceptions import DomainError

from .region import (
    canonicalize,
    coprime_partition,
    enumerate_region,
    expected_count,
    omega_membership,
    strip_bound,
    tau_quotient_facts,
)

SMALL_CASES = [(p, q, g) for p in range(1, 8) for q in range(1, 9 - p) for g in range(2, 5)]


def points_of(report):
    return {(point.a, point.b) for point in report.points}


def brute_force_region(p, q, g):
    bound = strip_bound(p, q, g)
    return {
        (a, b)
        for a in range(-bound // q - 1, p)
        for b in range(-bound // p - 1, q)
        if omega_membership(p, q, g, a, b)
    }


def test_omega_membership():
    assert omega_membership(1, 1, 2, 0, 0)
    assert not omega_membership(1, 1, 2, 1, 0)
    assert omega_membership(1, 1, 2, 0, -2)
    assert not omega_membership(1, 1, 2, -1, -1)
    assert omega_membership(2, 4, 2, 1, 2)
    assert not omega_membership(1, 1, 2, 0, -3)


def test_canonicalize():
    assert canonicalize(1, 1, 2, 3, 1) == canonicalize(1, 1, 2, 0, -2)
    point = canonicalize(1, 1, 2, 3, 1)
    assert (point.a, point.b) == (0, -2)
    point = canonicalize(1, 1, 2, 0, 0)
    assert (point.a, point.b) == (0, 0)


def test_canonicalize_rejects_out_of_bound_class():
    with pytest.raises(DomainError) as exc:
        canonicalize(1, 1, 2, 3, 0)
    assert exc.value.code == 'toledo_bound'


@given(st.integers(1, 5), st.integers(1, 5), st.integers(2, 4), st.data())
def test_canonicalize_is_orbit_invariant(p, q, g, data):
    point = data.draw(st.sampled_from(enumerate_region(p, q, g).points))
    shift = data.draw(st.integers(-20, 20))
    moved = canonicalize(p, q, g, point.a + shift * p, point.b + shift * q)
    assert (moved.a, moved.b) == (point.a, point.b)
    assert omega_membership(p, q, g, moved.a, moved.b)


def test_enumerate_region_examples():
    report = enumerate_region(1, 1, 2)
    assert report.count == 5
    assert points_of(report) == {(0, 0), (0, -1), (0, -2), (-1, 0), (-2, 0)}
    assert enumerate_region(2, 2, 2).count == 18
    report = enumerate_region(2, 4, 2)
    assert report.count == 26
    assert len(report.lines) == 13
    assert all(len(line.points) == 2 for line in report.lines)


@pytest.mark.parametrize('p, q, g', SMALL_CASES)
def test_census_count_and_lines(p, q, g):
    report = enumerate_region(p, q, g)
    k = gcd(p, q)
    assert report.count == expected_count(p, q, g) == 2 * (p + q) * min(p, q) * (g - 1) + k
    assert len(points_of(report)) == report.count
    assert points_of(report) == brute_force_region(p, q, g)
    for line in report.lines:
        assert len(line.points) == k
        assert all(point.a * q - point.b * p == line.t * k for point in line.points)
        assert line.tau == F(2 * k * line.t, p + q)
        assert len({gcd(point.a + point.b, (p + q) // k) for point in line.points}) == 1


@pytest.mark.parametrize('p, q, g', [(1, 2, 2), (2, 2, 2), (2, 3, 2), (3, 3, 3)])
def test_region_points_lie_in_distinct_orbits(p, q, g):
    points = sorted(points_of(enumerate_region(p, q, g)))
    for i, (a, b) in enumerate(points):
        for c, d in points[i + 1:]:
            same_orbit = (c - a) * q == (d - b) * p and (c - a) % p == 0
            assert not same_orbit


def test_equal_gcd_on_a_line_does_not_force_coprimality():
    line = next(line for line in enumerate_region(2, 4, 2).lines if line.t == -2)
    assert {(point.a, point.b) for point in line.points} == {(-1, 0), (0, 2)}
    assert {gcd(point.a + point.b, 6) for point in line.points} == {1, 2}
    assert {gcd(point.a + point.b, 3) for point in line.points} == {1}


def test_tau_quotient_facts():
    facts = tau_quotient_facts(2, 3)
    assert (facts.k, facts.image_step, facts.kernel_size) == (1, F(2, 5), 1)
    facts = tau_quotient_facts(2, 4)
    assert (facts.k, facts.image_step, facts.kernel_size, facts.kernel_generator) == (2, F(2, 3), 2, (1, 2))
    facts = tau_quotient_facts(3, 3)
    assert (facts.image_step, facts.kernel_size) == (1, 3)


def test_coprime_partition_example():
    partition = coprime_partition(1, 1, 2)
    assert {(point.a, point.b) for point in partition.coprime} == {(0, -1), (-1, 0)}
    assert {(point.a, point.b) for point in partition.non_coprime} == {(0, 0), (0, -2), (-2, 0)}
    assert partition.both_nonempty


@pytest.mark.parametrize('p, q, g', SMALL_CASES)
def test_coprime_partition_witnesses(p, q, g):
    partition = coprime_partition(p, q, g)
    assert partition.both_nonempty
    good = canonicalize(p, q, g, p, q - 1)
    assert good in partition.coprime
    assert canonicalize(p, q, g, 0, 0) in partition.non_coprime


class CensusApiTests(SimpleTestCase):

    def setUp(self):
        self.client = APIClient()

    def test_census_with_class(self):
        response = self.client.get('/api/census/regions/summary/', {'p': 1, 'q': 1, 'g': 2, 'a': 3, 'b': 1})
        self.assertEqual(response.status_code, 200)
        outputs = response.json()['outputs']
        self.assertEqual(outputs['census']['count'], 5)
        self.assertEqual(outputs['canonical'], {'a': 0, 'b': -2, 'canonical': True})
        self.assertFalse(outputs['input_in_region'])

    def test_census_half_a_class_is_malformed(self):
        response = self.client.get('/api/census/regions/summary/', {'p': 1, 'q': 1, 'a': 3})
        self.assertEqual(response.status_code, 400)
        self.assertIn('b', response.json())

    @override_settings(MODSPACE={'DEFAULT_GENUS': 2, 'MAX_CENSUS_POINTS': 10})
    def test_census_size_limit(self):
        response = self.client.get('/api/census/regions/summary/', {'p': 2, 'q': 2, 'g': 2})
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.json()['code'], 'census_size')
