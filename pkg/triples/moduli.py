"""
Non-emptiness, irreducibility and smoothness of the moduli of alpha-stable
triples N^s_alpha, and irreducibility of the full moduli N_alpha, at one alpha.

Every ``yes`` comes from a sufficient condition that was checked; ``unknown``
means none applied. Types with n1 < n2 are handled on the dual type, which has
the same moduli at every alpha.
"""
import logging
from math import gcd

from .domain import NO, UNKNOWN, YES, ModuliVerdict
from .exceptions import check_genus
from .invariants import alpha_range, dim_stable_moduli, dual, thresholds
from .rationals import as_rational
from .walls import is_critical

logger = logging.getLogger(__name__)

STABLE_FIELDS = ('stable_nonempty', 'stable_irreducible', 'stable_birational_to_large')
FULL_FIELDS = ('full_irreducible', 'full_birational_to_large')
ALL_FIELDS = STABLE_FIELDS + ('stable_smooth',) + FULL_FIELDS


class _Findings:

    def __init__(self):
        self.values = dict.fromkeys(ALL_FIELDS, UNKNOWN)
        self.citations = {}
        self.hypotheses = []

    def settle(self, fields, value, tag, hypothesis):
        for name in fields:
            self.values[name] = value
            tags = self.citations.setdefault(name, [])
            if tag not in tags:
                tags.append(tag)
        if hypothesis not in self.hypotheses:
            self.hypotheses.append(hypothesis)


def _unequal_ranks(base, alpha, two_g, critical, findings):
    rng = alpha_range(base)
    if rng.lo == 0:
        return
    alpha_L = thresholds(base).alpha_L
    if alpha_L < alpha < rng.hi:
        findings.settle(
            STABLE_FIELDS + ('stable_smooth',) + FULL_FIELDS,
            YES, 'large-alpha-fibration', 'alpha_L < alpha < alpha_M',
        )
    if rng.lo < alpha < rng.hi and alpha >= two_g:
        findings.settle(STABLE_FIELDS, YES, 'triple-moduli-irreducibility', '2g-2 <= alpha < alpha_M')
        if gcd(base.n2, base.rank, base.degree) == 1 and not critical:
            findings.settle(
                FULL_FIELDS, YES, 'gcd-genericity-irreducibility',
                'GCD(n2, n1+n2, d1+d2) = 1 and alpha is not critical',
            )


def _equal_ranks(base, alpha, two_g, critical, findings):
    rng = alpha_range(base)
    if base.d1 == base.d2:
        if alpha > 0:
            findings.settle(
                STABLE_FIELDS + ('stable_smooth',) + FULL_FIELDS,
                YES, 'equal-rank-equal-degree-isomorphism', 'd1 = d2 and alpha > 0',
            )
        return

    bounds = thresholds(base)
    if alpha > bounds.alpha_0:
        findings.settle(('full_irreducible',), YES, 'torsion-quotient-irreducibility', 'alpha > alpha_0 = d1-d2')
    if alpha > max(bounds.alpha_L, rng.lo):
        findings.settle(
            STABLE_FIELDS + FULL_FIELDS, YES, 'equal-rank-large-alpha-moduli', 'alpha > alpha_L',
        )
    if alpha > rng.lo and alpha >= two_g:
        findings.settle(STABLE_FIELDS, YES, 'equal-rank-irreducibility', 'alpha >= 2g-2')
        if gcd(base.n1, base.degree) == 1 and not critical:
            findings.settle(
                FULL_FIELDS, YES, 'equal-rank-irreducibility',
                'GCD(n, 2n, d1+d2) = 1 and alpha is not critical',
            )
        if alpha > bounds.alpha_0:
            findings.settle(FULL_FIELDS, YES, 'equal-rank-irreducibility', 'alpha >= 2g-2 and alpha > d1-d2')


def moduli_verdict(t, alpha, g):
    check_genus(g)
    alpha = as_rational(alpha)
    via_duality = t.n1 < t.n2
    base = dual(t) if via_duality else t
    rng = alpha_range(base)
    two_g = 2 * g - 2
    in_range = rng.contains(alpha)
    critical = is_critical(base, alpha).critical

    findings = _Findings()
    findings.citations['in_range'] = ['alpha-range-necessary-condition']
    findings.citations['critical'] = ['critical-value-formula']
    if not in_range:
        findings.settle(ALL_FIELDS, NO, 'alpha-range-necessary-condition', 'alpha outside [alpha_m, alpha_M]')
    else:
        if alpha >= two_g:
            findings.settle(('stable_smooth',), YES, 'triple-smoothness-above-2g-2', 'alpha >= 2g-2')
        if base.n1 == base.n2:
            _equal_ranks(base, alpha, two_g, critical, findings)
        else:
            _unequal_ranks(base, alpha, two_g, critical, findings)

    values = findings.values
    stable_dim = None
    if values['stable_nonempty'] == YES and values['stable_smooth'] == YES:
        stable_dim = dim_stable_moduli(t, g)
        findings.citations['stable_dim'] = ['triple-moduli-dimension']
    logger.debug(f"Moduli verdict for {t.as_tuple()} at alpha={alpha}: {values}")
    return ModuliVerdict(
        alpha=alpha,
        in_range=in_range,
        critical=critical,
        stable_dim=stable_dim,
        via_duality=via_duality,
        hypotheses=tuple(findings.hypotheses),
        citations={name: tuple(tags) for name, tags in findings.citations.items()},
        **values,
    )
