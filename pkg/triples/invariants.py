"""
Exact arithmetic of triple invariants: slopes, alpha-slopes, witness checks,
the alpha-range, parameter thresholds, Euler characteristics, dimensions and
duality.
"""
import logging
from fractions import Fraction
from math import gcd

from .domain import (
    AlphaInterval,
    Fibration,
    ModuliFactor,
    SubtripleWitness,
    TripleData,
    TripleType,
    Thresholds,
    WitnessReport,
    WitnessVerdict,
)
from .exceptions import DomainError, check_genus
from .rationals import as_rational

logger = logging.getLogger(__name__)


def slope(n, d):
    if n < 1:
        raise DomainError(f"slope needs a positive rank, got {n}", code='rank')
    return Fraction(d, n)


def alpha_slope(t, alpha):
    """mu_alpha(T) = (d1 + d2)/(n1 + n2) + alpha * n2/(n1 + n2)."""
    alpha = as_rational(alpha)
    return Fraction(t.degree, t.rank) + alpha * Fraction(t.n2, t.rank)


def delta_alpha(t, witness, alpha):
    """
    mu_alpha(T') - mu_alpha(T).

    Negative means the witness is on the stable side, zero means alpha is a
    wall for this witness, positive means the witness destabilizes.
    """
    if witness.n1 + witness.n2 == 0:
        raise DomainError("witness has total rank zero", code='rank')
    return alpha_slope(witness, alpha) - alpha_slope(t, alpha)


def witness_check(t, witnesses, alpha, strict=True):
    """
    Evaluate numeric subtriple witnesses against T at alpha.

    This certifies or refutes the given witnesses only; alpha-stability of an
    actual triple cannot be decided from discrete invariants. A malformed or
    improper witness yields an error verdict and the remaining ones are still
    evaluated.
    """
    alpha = as_rational(alpha)
    verdicts = []
    for raw in witnesses:
        values = tuple(raw.as_tuple() if isinstance(raw, TripleData) else raw)
        try:
            witness = SubtripleWitness(*values)
            if witness.n1 > t.n1 or witness.n2 > t.n2:
                raise DomainError(f"witness ranks {witness.n1, witness.n2} exceed ({t.n1}, {t.n2})")
            if witness.as_tuple() == t.as_tuple():
                raise DomainError("witness equals the triple itself, not a proper subtriple")
        except DomainError as exc:
            verdicts.append(WitnessVerdict(witness=values, delta=None, passed=False, error=str(exc)))
            continue
        delta = delta_alpha(t, witness, alpha)
        passed = delta < 0 if strict else delta <= 0
        verdicts.append(WitnessVerdict(witness=values, delta=delta, passed=passed))
    report = WitnessReport(alpha=alpha, strict=strict, verdicts=tuple(verdicts), passed=all(v.passed for v in verdicts))
    logger.debug(f"Witness check on {t.as_tuple()} at alpha={alpha}: {len(verdicts)} witnesses, passed={report.passed}")
    return report


def alpha_range(t):
    """
    Necessary range [alpha_m, alpha_M] for alpha-stable triples of type T.

    alpha_M is unbounded when n1 == n2. The range is empty when mu1 < mu2.
    """
    lo = t.mu1 - t.mu2
    if t.n1 == t.n2:
        hi = None
    else:
        hi = (1 + Fraction(t.rank, abs(t.n1 - t.n2))) * lo
    return AlphaInterval(lo=lo, hi=hi, empty=lo < 0)


def dual(t):
    """T* = (n2, n1, -d2, -d1); alpha-stability of T and T* coincide."""
    return type(t)(t.n2, t.n1, -t.d2, -t.d1)


def thresholds(t):
    """
    Parameter thresholds of T.

    Types with n1 < n2 are computed on the dual type, which has the same
    alpha-range and walls; ``via_duality`` records it.

    The alpha_j strictly decrease only when mu1 > mu2. When mu1 = mu2 every
    alpha_j is 0 and alpha_m = alpha_M = 0.
    """
    via_duality = t.n1 < t.n2
    base = dual(t) if via_duality else t
    gap = base.mu1 - base.mu2
    if gap < 0:
        raise DomainError(
            f"mu1 < mu2 for {t.as_tuple()}: the alpha-range is empty and dualizing preserves mu1 - mu2",
            code='empty_range',
        )
    n1, n2 = base.n1, base.n2
    rng = alpha_range(base)
    alpha_j = tuple(
        Fraction(2 * n1 * n2, n2 * (n1 - n2) + (j + 1) * (n1 + n2)) * gap
        for j in range(n2)
    )
    alpha_0 = alpha_j[0]
    if n1 > n2:
        alpha_t = rng.hi - Fraction(n1 + n2, n2 * (n1 - n2))
        alpha_e = max(rng.lo, alpha_0, alpha_t)
        from .walls import largest_wall_below
        alpha_L = largest_wall_below(base, rng.hi)
        if alpha_L is None:
            alpha_L = rng.lo
    else:
        alpha_t = None
        alpha_e = max(rng.lo, alpha_0)
        alpha_L = stabilization_threshold(base)
    return Thresholds(
        alpha_m=rng.lo,
        alpha_M=rng.hi,
        alpha_j=alpha_j,
        alpha_0=alpha_0,
        alpha_t=alpha_t,
        alpha_e=alpha_e,
        alpha_L=alpha_L,
        via_duality=via_duality,
    )


def stabilization_threshold(t):
    """alpha_L = n(n - 1)(mu1 - mu2) for equal ranks; above it the moduli no longer change."""
    if t.n1 != t.n2:
        raise DomainError("the closed-form stabilization threshold needs n1 == n2", code='rank')
    return t.n1 * (t.n1 - 1) * (t.mu1 - t.mu2)


def chi(tpp, tp, g):
    """
    chi(T'', T') = dim Hom(T'', T') - dim Ext^1(T'', T') + dim Ext^2(T'', T')
    computed by Riemann-Roch from the types alone.
    """
    return (
        (1 - g) * (tpp.n1 * tp.n1 + tpp.n2 * tp.n2 - tpp.n2 * tp.n1)
        + tpp.n1 * tp.d1 - tp.n1 * tpp.d1
        + tpp.n2 * tp.d2 - tp.n2 * tpp.d2
        - tpp.n2 * tp.d1 + tp.n1 * tpp.d2
    )


def dim_stable_moduli(t, g):
    """Dimension of the moduli of alpha-stable triples at a smooth point; equals 1 - chi(T, T)."""
    check_genus(g)
    return (g - 1) * (t.n1 ** 2 + t.n2 ** 2 - t.n1 * t.n2) - t.n1 * t.d2 + t.n2 * t.d1 + 1


def fibration_dims(t, g):
    """
    Large-alpha description of the moduli of T.

    For n1 > n2 the large chamber is birational to a P^N-fibration over
    M^s(n1 - n2, d1 - d2) x M^s(n2, d2); for n1 == n2 = n it is a P^N-fibration
    over M^s(n, d2) x Div^(d1 - d2)(X). A negative N is reported as an empty
    fibre rather than raised.
    """
    check_genus(g)
    via_duality = t.n1 < t.n2
    base = dual(t) if via_duality else t
    n1, n2, d1, d2 = base.as_tuple()
    alpha_m_moduli = (
        ModuliFactor('semistable_bundles', n1, d1),
        ModuliFactor('semistable_bundles', n2, d2),
    )
    if n1 > n2:
        fiber_dim = n2 * d1 - n1 * d2 + n1 * (n1 - n2) * (g - 1) - 1
        fiber_base = (
            ModuliFactor('stable_bundles', n1 - n2, d1 - d2),
            ModuliFactor('stable_bundles', n2, d2),
        )
        isomorphism = gcd(n1 - n2, d1 - d2) == 1 and gcd(n2, d2) == 1
        slope_condition_met = base.mu1 > base.mu2
        alpha_M_moduli = (
            ModuliFactor('semistable_bundles', n2, d2),
            ModuliFactor('semistable_bundles', n1 - n2, d1 - d2),
        )
    else:
        fiber_dim = n1 * (d1 - d2) - 1
        fiber_base = (
            ModuliFactor('stable_bundles', n1, d2),
            ModuliFactor('divisors', 0, d1 - d2),
        )
        isomorphism = False
        slope_condition_met = d1 > d2
        alpha_M_moduli = None
    if fiber_dim < 0:
        logger.warning(f"Empty large-alpha fibre for {t.as_tuple()}: N = {fiber_dim}")
    return Fibration(
        fiber_dim=fiber_dim,
        empty_fiber=fiber_dim < 0,
        base=fiber_base,
        isomorphism=isomorphism,
        slope_condition_met=slope_condition_met,
        alpha_m_moduli=alpha_m_moduli,
        alpha_M_moduli=alpha_M_moduli,
        via_duality=via_duality,
    )
