"""
Critical values of the stability parameter.

A wall for T is an alpha at which some numerically admissible proper
subtriple (n1', n2', d') has the same alpha-slope as T. The wall equation
depends on the subtriple degrees only through d' = d1' + d2'. The set
computed here is the arithmetic superset of the geometric critical values.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from math import ceil, floor, gcd

from .domain import (
    Chamber,
    ChamberReport,
    Criticality,
    FlipDims,
    Genericity,
    SubtripleWitness,
    TripleData,
    Wall,
    WallWitness,
)
from .exceptions import DomainError, check_genus
from .invariants import alpha_range, chi, dim_stable_moduli, stabilization_threshold
from .rationals import as_rational

logger = logging.getLogger(__name__)


def admissible_rank_pairs(t):
    """Rank pairs (n1', n2') whose alpha-slope actually depends on alpha relative to T."""
    for n1p in range(t.n1 + 1):
        for n2p in range(t.n2 + 1):
            if (n1p, n2p) == (0, 0):
                continue
            if n1p * t.n2 == t.n1 * n2p:
                continue
            yield n1p, n2p


def wall_alpha(t, n1p, n2p, dsum):
    """alpha = ((n1 + n2) d' - (n1' + n2')(d1 + d2)) / (n1' n2 - n1 n2')."""
    den = n1p * t.n2 - t.n1 * n2p
    if den == 0:
        raise DomainError(f"rank pair ({n1p}, {n2p}) is proportional to ({t.n1}, {t.n2}) and has no wall", code='rank')
    return Fraction(t.rank * dsum - (n1p + n2p) * t.degree, den)


def _degree_sums(t, n1p, n2p, lo, hi):
    # alpha is affine in d', so [lo, hi] pulls back to an integer interval of d'
    den = n1p * t.n2 - t.n1 * n2p
    ends = [(bound * den + (n1p + n2p) * t.degree) / t.rank for bound in (lo, hi)]
    return range(ceil(min(ends)), floor(max(ends)) + 1)


def enumerate_walls(t, lo, hi, include_lo=False, include_hi=False):
    """
    Sorted walls of T in the interval from lo to hi.

    Endpoints are excluded unless requested. For n1 == n2 walls above the
    stabilization threshold are tagged ``stabilized``: they are arithmetic
    only and no flip happens there.
    """
    if hi is None:
        raise DomainError("wall enumeration needs a finite upper end; supply a cutoff when n1 == n2", code='unbounded')
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise DomainError(f"empty interval: {lo} > {hi}", code='interval')
    alpha_L = stabilization_threshold(t) if t.n1 == t.n2 else None

    found = defaultdict(list)
    for n1p, n2p in admissible_rank_pairs(t):
        for dsum in _degree_sums(t, n1p, n2p, lo, hi):
            alpha = wall_alpha(t, n1p, n2p, dsum)
            if alpha == lo and not include_lo:
                continue
            if alpha == hi and not include_hi:
                continue
            if lo <= alpha <= hi:
                found[alpha].append(WallWitness(n1p, n2p, dsum))

    walls = [
        Wall(
            alpha=alpha,
            witnesses=tuple(sorted(found[alpha], key=lambda w: (w.n1p, w.n2p, w.dsum))),
            stabilized=alpha_L is not None and alpha > alpha_L,
        )
        for alpha in sorted(found)
    ]
    logger.debug(f"{len(walls)} walls for {t.as_tuple()} between {lo} and {hi}")
    return walls


def largest_wall_below(t, hi):
    """Largest wall in [alpha_m, hi), or None."""
    walls = enumerate_walls(t, alpha_range(t).lo, hi, include_lo=True)
    return walls[-1].alpha if walls else None


def is_critical(t, alpha):
    alpha = as_rational(alpha)
    witnesses = []
    for n1p, n2p in admissible_rank_pairs(t):
        den = n1p * t.n2 - t.n1 * n2p
        dsum = (alpha * den + (n1p + n2p) * t.degree) / t.rank
        if dsum.denominator == 1:
            witnesses.append(WallWitness(n1p, n2p, dsum.numerator))
    return Criticality(alpha=alpha, critical=bool(witnesses), witnesses=tuple(witnesses))


def integer_genericity(t, m):
    """
    Sufficient arithmetic conditions only: ``False`` means no guarantee,
    not that m is critical.
    """
    return Genericity(
        m=m,
        guaranteed_noncritical=gcd(t.rank, t.degree - m * t.n1) == 1,
        no_alpha_independent=gcd(t.n2, t.rank, t.degree) == 1,
    )


def default_cutoff(t, g):
    """Upper end used for n1 == n2, where the alpha-range is unbounded."""
    if t.n1 != t.n2:
        return alpha_range(t).hi
    return max(stabilization_threshold(t), Fraction(2 * g - 2)) + 1


def _position(value, rng):
    if value < rng.lo:
        return 'below_range'
    if value == rng.lo:
        return 'at_alpha_m'
    if rng.hi is None or value < rng.hi:
        return 'interior'
    if value == rng.hi:
        return 'at_alpha_M'
    return 'above_range'


def chambers(t, g, cutoff=None):
    """
    Chamber decomposition of (alpha_m, alpha_M), or of (alpha_m, cutoff] when
    n1 == n2. The moduli spaces are constant on each chamber.
    """
    check_genus(g)
    rng = alpha_range(t)
    if rng.empty:
        raise DomainError(f"mu1 < mu2 for {t.as_tuple()}: there are no alpha-stable triples and no chambers", code='empty_range')
    two_g = 2 * g - 2

    if rng.hi is None:
        hi = as_rational(cutoff) if cutoff is not None else default_cutoff(t, g)
        if hi <= rng.lo:
            raise DomainError(f"cutoff {hi} must exceed alpha_m = {rng.lo}", code='cutoff')
        large_from = stabilization_threshold(t)
    else:
        if cutoff is not None:
            logger.info(f"Ignoring cutoff {cutoff}: alpha_M = {rng.hi} is finite for {t.as_tuple()}")
        hi = rng.hi
        large_from = None

    position = _position(two_g, rng)
    walls = tuple(enumerate_walls(t, rng.lo, hi)) if hi > rng.lo else ()
    on_wall = next((wall for wall in walls if wall.alpha == two_g), None)
    if on_wall is not None:
        position = 'on_wall'
    if position not in ('interior', 'on_wall'):
        logger.warning(f"2g-2 = {two_g} is {position.replace('_', ' ')} for {t.as_tuple()}")

    points = [rng.lo, *(wall.alpha for wall in walls), hi] if hi > rng.lo else []
    result = []
    for lo_end, hi_end in zip(points, points[1:]):
        large = lo_end >= large_from if large_from is not None else hi_end == hi
        result.append(Chamber(
            lo=lo_end,
            hi=hi_end,
            contains_2g_minus_2=lo_end < two_g < hi_end,
            is_large_chamber=large,
            birational_to_large=hi_end > two_g,
        ))

    # flips: walls crossed from 2g-2 up to the lower end of the large chamber
    large_chamber = next((c for c in result if c.is_large_chamber), None)
    flips = None
    if position in ('interior', 'on_wall') and large_chamber is not None:
        flips = sum(1 for wall in walls if two_g < wall.alpha <= large_chamber.lo)
    return ChamberReport(
        chambers=tuple(result),
        walls=walls,
        cutoff=hi if rng.hi is None else None,
        two_g_minus_two=two_g,
        position=position,
        flips_to_large=flips,
        wall_at_2g_minus_2=on_wall,
    )


def flip_dims(t, tp, g):
    """
    Dimensions attached to the flip locus of extensions 0 -> T' -> T -> T'' -> 0
    at the wall where T' and T'' have equal alpha-slope.
    """
    check_genus(g)
    if not isinstance(tp, TripleData):
        tp = SubtripleWitness(*tp)
    try:
        tpp = t - tp
    except DomainError as exc:
        raise DomainError(
            f"{tp.as_tuple()} is not a componentwise split of {t.as_tuple()}: {exc}",
            code='split',
        ) from exc
    if tp.n1 * t.n2 == t.n1 * tp.n2:
        raise DomainError(
            f"{tp.as_tuple()} has ranks proportional to {t.as_tuple()}: subtriple and quotient never have equal alpha-slope",
            code='equal_slope',
        )
    alpha_c = wall_alpha(t, tp.n1, tp.n2, tp.degree)
    rng = alpha_range(t)
    if not rng.contains(alpha_c, closed=False):
        raise DomainError(
            f"subtriple and quotient have equal alpha-slope only at alpha = {alpha_c}, outside (alpha_m, alpha_M)",
            code='equal_slope',
        )

    side = 'plus' if Fraction(tp.n2, tp.rank) < Fraction(tpp.n2, tpp.rank) else 'minus'
    cross = chi(tpp, tp, g)
    reverse = chi(tp, tpp, g)
    stilde_dim = 1 - chi(tp, tp, g) - chi(tpp, tpp, g) - cross
    total_dim = dim_stable_moduli(t, g)
    two_g = 2 * g - 2
    return FlipDims(
        alpha_c=alpha_c,
        side=side,
        stilde_dim=stilde_dim,
        minus_chi_cross=-cross,
        minus_chi_reverse=-reverse,
        fiber_dim=-cross - 1,
        fiber_nonnegative=-cross - 1 >= 0,
        guaranteed_codim=g - 1,
        codim_bound_applies=alpha_c > two_g or (alpha_c == two_g and side == 'plus'),
        total_dim=total_dim,
    )
