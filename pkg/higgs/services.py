import logging

from reports.domain import Report
from triples.services import genus_from

from .bridge import higgs_profile, rigidity
from .morse import analyse_chain
from .serializers import HiggsProfileSerializer, HiggsQuerySerializer, MorseQuerySerializer, MorseReportSerializer, RigiditySerializer

logger = logging.getLogger(__name__)


def higgs_report(data):
    h = HiggsQuerySerializer.higgs(data, genus_from(data))
    profile = higgs_profile(h)
    warnings = []
    if not profile.toledo.within_bound:
        warnings.append(f"|tau| = {abs(profile.toledo.tau)} exceeds tau_M = {profile.toledo.tau_M}: M(a,b) is empty")
    if profile.minima_alpha_critical:
        warnings.append("2g-2 is a critical value for the minima triple type")
    citations = {
        'toledo': ['toledo-definition', 'milnor-wood-bound'],
        'vanishing_pattern': ['higgs-field-vanishing-at-minima'],
        'minima': ['minima-triple-correspondence'],
        'mw': ['milnor-wood-alpha-range'],
        'expected_dim': ['higgs-moduli-dimension'],
        'coprime': ['coprime-smoothness'],
        'minima_triple_dim': ['triple-moduli-dimension'],
    }
    if profile.twisted_pairs is not None:
        citations['twisted_pairs'] = ['equal-rank-maximal-toledo']
    logger.info(f"Higgs report for {h.as_tuple()}")
    return Report('higgs', outputs=HiggsProfileSerializer(profile).data, citations=citations, warnings=tuple(warnings))


def rigidity_report(data):
    h = HiggsQuerySerializer.higgs(data, genus_from(data))
    result = rigidity(h)
    warnings = []
    citations = {'expected_dim': ['higgs-moduli-dimension']}
    if result.applies:
        citations.update({
            'factor1': ['maximal-toledo-rigidity'],
            'factor2': ['maximal-toledo-rigidity'],
            'dim_sum': ['maximal-toledo-rigidity', 'higgs-moduli-dimension'],
            'twisted_pairs': ['equal-rank-maximal-toledo'],
        })
        if result.transposed_form != result.dim_sum:
            warnings.append(
                f"the variant 2+(m^2+5M^2-2mM)(g-1) = {result.transposed_form} disagrees with the component sum "
                f"{result.dim_sum}; the component sum 2+(5m^2+M^2-2mM)(g-1) is reported"
            )
    elif h.p == h.q:
        warnings.append("p == q: no rigidity at maximal Toledo invariant")
    else:
        warnings.append("|tau| < tau_M or out of range: the decomposition only applies at |tau| == tau_M")
    return Report('rigidity', outputs=RigiditySerializer(result).data, citations=citations, warnings=tuple(warnings))


def morse_report(data):
    chain = MorseQuerySerializer.chain(data)
    g = genus_from(data)
    result = analyse_chain(chain, g)
    warnings = (result.advisory,) if result.advisory else ()
    citations = {
        'profile': ['endomorphism-weight-decomposition'],
        'h1': ['weight-complex-cohomology'],
        'index': ['morse-index-formula'],
    }
    return Report('morse', outputs=MorseReportSerializer(result).data, citations=citations, warnings=warnings)
