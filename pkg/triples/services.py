"""
Report builders for the triple commands. Each takes validated query data and
returns a ``Report`` whose outputs are already serialized.
"""
import logging

from django.conf import settings

from reports.domain import Report

from .exceptions import DomainError
from .invariants import (
    alpha_range,
    alpha_slope,
    chi,
    dim_stable_moduli,
    dual,
    fibration_dims,
    thresholds,
    witness_check,
)
from .moduli import moduli_verdict
from .rationals import format_rational
from .serializers import (
    ChamberReportSerializer,
    TripleQuerySerializer,
    TripleSummarySerializer,
    WallListSerializer,
)
from .walls import chambers, default_cutoff, enumerate_walls, flip_dims, integer_genericity, is_critical

logger = logging.getLogger(__name__)


def genus_from(data):
    """Genus of the request, falling back to ``MODSPACE['DEFAULT_GENUS']``."""
    g = data.get('g')
    return g if g is not None else settings.MODSPACE['DEFAULT_GENUS']


def _stabilized_warning(walls):
    stabilized = [wall for wall in walls if wall.stabilized]
    if not stabilized:
        return []
    values = ', '.join(format_rational(wall.alpha) for wall in stabilized)
    return [f"walls {values} lie above alpha_L: arithmetic critical values only, the moduli do not change there"]


def triple_report(data):
    t = TripleQuerySerializer.triple(data)
    g = genus_from(data)
    warnings = []
    citations = {
        'alpha_range': ['alpha-range-necessary-condition'],
        'dim_stable_moduli': ['triple-moduli-dimension'],
        'chi_self': ['triple-euler-characteristic'],
        'fibration': ['large-alpha-fibration', 'alpha-m-moduli'],
    }

    rng = alpha_range(t)
    try:
        bounds = thresholds(t)
    except DomainError as exc:
        bounds = None
        warnings.append(str(exc))
    else:
        citations['thresholds'] = ['subobject-rank-thresholds', 'torsion-free-threshold', 'stabilization-threshold']
        if bounds.via_duality:
            warnings.append("thresholds computed on the dual type (n2, n1, -d2, -d1)")

    fibration = fibration_dims(t, g)
    if fibration.empty_fiber:
        warnings.append(f"large-alpha fibre dimension N = {fibration.fiber_dim} < 0: the fibration is empty")
    if fibration.via_duality:
        warnings.append("large-alpha fibration computed on the dual type")

    alpha = data.get('alpha')
    summary = {
        'type': t,
        'g': g,
        'slopes': {'mu1': t.mu1, 'mu2': t.mu2, 'gap': t.mu1 - t.mu2},
        'alpha_range': rng,
        'thresholds': bounds,
        'dual': dual(t),
        'chi_self': chi(t, t, g),
        'dim_stable_moduli': dim_stable_moduli(t, g),
        'fibration': fibration,
        'alpha_slope': alpha_slope(t, alpha) if alpha is not None else None,
        'criticality': is_critical(t, alpha) if alpha is not None else None,
        'witness_report': None,
        'genericity': None,
        'flip': None,
        'moduli': None,
    }
    if alpha is not None and not rng.contains(alpha):
        warnings.append(f"alpha = {format_rational(alpha)} lies outside the alpha-range: no alpha-stable triples of this type")
    if alpha is not None:
        summary['moduli'] = moduli_verdict(t, alpha, g)
        citations['moduli'] = sorted({tag for tags in summary['moduli'].citations.values() for tag in tags})
    if data.get('witness'):
        summary['witness_report'] = witness_check(t, data['witness'], alpha, strict=data.get('strict', False))
        citations['witness_report'] = ['alpha-stability-definition']
    if data.get('m') is not None:
        summary['genericity'] = integer_genericity(t, data['m'])
        citations['genericity'] = ['gcd-genericity', 'alpha-independent-semistability']
    if data.get('split') is not None:
        summary['flip'] = flip_dims(t, data['split'], g)
        citations['flip'] = ['flip-locus-dimension', 'flip-codimension-bound']

    logger.info(f"Triple report for {t.as_tuple()}, g={g}")
    return Report('triple', outputs=TripleSummarySerializer(summary).data, citations=citations, warnings=tuple(warnings))


def walls_report(data):
    t = TripleQuerySerializer.triple(data)
    g = genus_from(data)
    warnings = []
    if data.get('interval'):
        lo, hi = data['interval']
        include_lo = include_hi = data.get('include_endpoints', False)
    else:
        rng = alpha_range(t)
        if rng.empty:
            raise DomainError(f"mu1 < mu2 for {t.as_tuple()}: the alpha-range is empty; pass an interval explicitly", code='empty_range')
        lo, include_lo = rng.lo, False
        if rng.hi_infinite:
            hi, include_hi = default_cutoff(t, g), True
            warnings.append(f"alpha_M is infinite for n1 == n2; walls listed up to the cutoff {format_rational(hi)}")
        else:
            hi, include_hi = rng.hi, False

    walls = enumerate_walls(t, lo, hi, include_lo=include_lo, include_hi=include_hi)
    warnings.extend(_stabilized_warning(walls))
    alpha = data.get('alpha')
    listing = {
        'type': t,
        'lo': lo,
        'hi': hi,
        'include_lo': include_lo,
        'include_hi': include_hi,
        'walls': walls,
        'criticality': is_critical(t, alpha) if alpha is not None else None,
        'genericity': integer_genericity(t, data['m']) if data.get('m') is not None else None,
    }
    citations = {'walls': ['critical-value-formula']}
    if listing['genericity'] is not None:
        citations['genericity'] = ['gcd-genericity', 'alpha-independent-semistability']

    logger.info(f"{len(walls)} walls for {t.as_tuple()} on [{lo}, {hi}]")
    return Report('walls', outputs=WallListSerializer(listing).data, citations=citations, warnings=tuple(warnings))


def chambers_report(data):
    t = TripleQuerySerializer.triple(data)
    g = genus_from(data)
    decomposition = chambers(t, g, data.get('cutoff'))
    warnings = []
    if decomposition.position == 'on_wall':
        warnings.append(f"2g-2 = {decomposition.two_g_minus_two} is a critical value: it lies on a wall, not inside a chamber")
    elif decomposition.position != 'interior':
        warnings.append(f"2g-2 = {decomposition.two_g_minus_two} is not interior to the alpha-range ({decomposition.position})")
    if not decomposition.chambers:
        warnings.append("alpha_m == alpha_M: the alpha-range is a single point and has no chambers")
    warnings.extend(_stabilized_warning(decomposition.walls))
    citations = {
        'chambers': ['critical-value-formula', 'chamber-constancy'],
        'birational_to_large': ['flip-codimension-bound'],
        'is_large_chamber': ['large-alpha-fibration', 'stabilization-threshold'],
    }
    logger.info(f"{len(decomposition.chambers)} chambers for {t.as_tuple()}, g={g}")
    return Report('chambers', outputs=ChamberReportSerializer(decomposition).data, citations=citations, warnings=tuple(warnings))
