"""
Bridge between U(p,q)-Higgs bundles and holomorphic triples.

The local minima of the Hitchin functional on M(a,b) are moduli of
(2g-2)-stable triples; the Milnor-Wood inequality for the Toledo invariant
is equivalent to 2g-2 lying in the triple's alpha-range.
"""
import logging
from fractions import Fraction
from math import gcd

from triples.domain import ModuliFactor, TripleType
from triples.invariants import alpha_range, dim_stable_moduli
from triples.rationals import compare
from triples.walls import is_critical

from .domain import HiggsProfile, HiggsType, MinimaRealization, MWFact, MWRelations, Rigidity, Toledo

logger = logging.getLogger(__name__)


def toledo(h):
    """tau = 2(qa - pb)/(p + q) and the Milnor-Wood bound tau_M = min(p, q)(2g - 2)."""
    tau = Fraction(2 * (h.q * h.a - h.p * h.b), h.rank)
    tau_M = min(h.p, h.q) * (2 * h.g - 2)
    return Toledo(tau=tau, tau_M=tau_M, within_bound=abs(tau) <= tau_M, saturated=abs(tau) == tau_M)


def vanishing_pattern(h):
    """Which Higgs field component vanishes at the minima: gamma when a/p < b/q, beta when a/p > b/q."""
    gap = h.slope_gap
    if gap < 0:
        return 'gamma_zero'
    if gap > 0:
        return 'beta_zero'
    return 'both_zero'


def _gamma_zero_triple(h):
    return TripleType(h.p, h.q, h.a + h.p * (2 * h.g - 2), h.b)


def _beta_zero_triple(h):
    return TripleType(h.q, h.p, h.b + h.q * (2 * h.g - 2), h.a)


def minima_triple_type(h):
    """
    Triple type whose (2g-2)-stable moduli is the locus of local minima.

    On the tie a/p = b/q both triple descriptions apply and the minima are
    M(p, a) x M(q, b); the gamma-zero triple is reported first.
    """
    pattern = vanishing_pattern(h)
    alpha = 2 * h.g - 2
    if pattern == 'gamma_zero':
        return MinimaRealization(case_tag=pattern, triple=_gamma_zero_triple(h), alpha=alpha)
    if pattern == 'beta_zero':
        return MinimaRealization(case_tag=pattern, triple=_beta_zero_triple(h), alpha=alpha)
    return MinimaRealization(
        case_tag=pattern,
        triple=_gamma_zero_triple(h),
        alpha=alpha,
        alternate_triple=_beta_zero_triple(h),
        product=(ModuliFactor('semistable_bundles', h.p, h.a), ModuliFactor('semistable_bundles', h.q, h.b)),
    )


def mw_relations(h):
    """
    Evaluate both sides of each equivalence between the Toledo bound and the
    position of 2g-2 in the minima triple's alpha-range.
    """
    tol = toledo(h)
    triple = minima_triple_type(h).triple
    rng = alpha_range(triple)
    two_g = 2 * h.g - 2
    facts = [
        MWFact('2g-2 >= alpha_m', two_g >= rng.lo),
        MWFact('alpha_m == 2g-2 iff tau == 0', (rng.lo == two_g) == (tol.tau == 0)),
    ]
    if h.p != h.q:
        facts += [
            MWFact('|tau| <= tau_M iff 2g-2 <= alpha_M', tol.within_bound == (two_g <= rng.hi)),
            MWFact('|tau| == tau_M iff 2g-2 == alpha_M', tol.saturated == (two_g == rng.hi)),
        ]
    else:
        facts += [
            MWFact('|tau| <= tau_M iff alpha_m >= 0', tol.within_bound == (rng.lo >= 0)),
            MWFact('alpha_m == 0 iff |tau| == p(2g-2)', (rng.lo == 0) == (abs(tol.tau) == h.p * two_g)),
        ]
    return MWRelations(
        triple=triple,
        alpha_m=rng.lo,
        alpha_M=rng.hi,
        two_g_minus_two=two_g,
        alpha_m_vs_2g2=compare(rng.lo, two_g),
        alpha_M_vs_2g2=compare(rng.hi, two_g) if rng.hi is not None else None,
        facts=tuple(facts),
    )


def expected_dim(h):
    return 1 + h.rank ** 2 * (h.g - 1)


def coprime_smooth(h):
    """GCD(p + q, a + b) = 1 rules out strictly semistable objects, so M(a,b) is smooth."""
    return gcd(h.rank, h.degree) == 1


def rigidity(h):
    """
    Decomposition at maximal Toledo invariant for p != q.

    ``dim_sum`` adds the expected dimensions of the two factors; it always
    equals ``closed_form``. ``transposed_form`` swaps the roles of min and
    max and is reported for comparison only.
    """
    tol = toledo(h)
    expected = expected_dim(h)
    if h.p == h.q or not tol.saturated:
        return Rigidity(applies=False, expected_dim=expected)

    g, shift = h.g, 2 * h.g - 2
    m, big = min(h.p, h.q), max(h.p, h.q)
    positive = tol.tau > 0
    if h.p < h.q:
        b1 = h.a - h.p * shift if positive else h.a + h.p * shift
        factor1 = HiggsType(h.p, h.p, h.a, b1, g)
        factor2 = ModuliFactor('semistable_bundles', h.q - h.p, h.b - b1)
        summand = 'W'
    else:
        a1 = h.b + h.q * shift if positive else h.b - h.q * shift
        factor1 = HiggsType(h.q, h.q, a1, h.b, g)
        factor2 = ModuliFactor('semistable_bundles', h.p - h.q, h.a - a1)
        summand = 'V'

    dim_sum = (1 + (2 * m) ** 2 * (g - 1)) + (1 + (big - m) ** 2 * (g - 1))
    closed_form = 2 + (5 * m ** 2 + big ** 2 - 2 * m * big) * (g - 1)
    transposed_form = 2 + (m ** 2 + 5 * big ** 2 - 2 * m * big) * (g - 1)
    return Rigidity(
        applies=True,
        expected_dim=expected,
        factor1=factor1,
        factor2=factor2,
        factor2_summand=summand,
        dim_sum=dim_sum,
        closed_form=closed_form,
        transposed_form=transposed_form,
        below_expected=dim_sum < expected,
        twisted_pairs=ModuliFactor('twisted_pairs', m, factor1.a),
    )


def higgs_profile(h):
    tol = toledo(h)
    minima = minima_triple_type(h)
    profile = HiggsProfile(
        higgs=h,
        toledo=tol,
        vanishing_pattern=vanishing_pattern(h),
        minima=minima,
        mw=mw_relations(h),
        expected_dim=expected_dim(h),
        coprime=coprime_smooth(h),
        minima_triple_dim=dim_stable_moduli(minima.triple, h.g),
        minima_alpha_critical=is_critical(minima.triple, minima.alpha).critical,
        twisted_pairs=ModuliFactor('twisted_pairs', h.p, h.a) if h.p == h.q and tol.saturated else None,
    )
    logger.debug(f"Higgs profile for {h.as_tuple()}: tau={tol.tau}, pattern={profile.vanishing_pattern}")
    return profile
