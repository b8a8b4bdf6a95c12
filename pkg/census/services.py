import logging

from django.conf import settings

from reports.domain import Report
from triples.exceptions import DomainError
from triples.services import genus_from

from .region import canonicalize, coprime_partition, enumerate_region, expected_count, omega_membership, tau_quotient_facts
from .serializers import CensusSummarySerializer

logger = logging.getLogger(__name__)


def census_report(data):
    p, q, g = data['p'], data['q'], genus_from(data)
    limit = settings.MODSPACE['MAX_CENSUS_POINTS']
    size = expected_count(p, q, g)
    if size > limit:
        raise DomainError(f"census of {size} classes exceeds MODSPACE['MAX_CENSUS_POINTS'] = {limit}", code='census_size')

    census = enumerate_region(p, q, g)
    summary = {
        'census': census,
        'quotient': tau_quotient_facts(p, q),
        'partition': coprime_partition(p, q, g, census=census),
        'canonical': None,
        'input_in_region': None,
    }
    warnings = []
    if 'a' in data:
        summary['canonical'] = canonicalize(p, q, g, data['a'], data['b'])
        summary['input_in_region'] = omega_membership(p, q, g, data['a'], data['b'])

    citations = {
        'count': ['census-cardinality'],
        'lines': ['tau-quotient-exact-sequence'],
        'quotient': ['tau-quotient-exact-sequence'],
        'partition': ['coprime-smoothness', 'non-coprime-classes-exist'],
    }
    if summary['canonical'] is not None:
        citations['canonical'] = ['fundamental-region-bijection']
    logger.info(f"Census of ({p}, {q}, g={g}): {census.count} classes")
    return Report('census', outputs=CensusSummarySerializer(summary).data, citations=citations, warnings=tuple(warnings))
