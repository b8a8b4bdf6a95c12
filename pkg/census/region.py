"""
Fundamental region for the action of (p, q)Z on integer pairs (a, b), and the
census of classes with |tau| <= tau_M.

The region is the half-open L-shape {a < p, b < q, a >= 0 or b >= 0} cut by
the Milnor-Wood strip |aq - bp| <= (p + q) min(p, q)(g - 1). It is symmetric
under (p, a) <-> (q, b), so p > q needs no separate treatment.
"""
import logging
from fractions import Fraction
from math import gcd

from triples.exceptions import DomainError, check_genus

from .domain import CensusLine, CensusReport, ClassPair, CoprimePartition, QuotientFacts

logger = logging.getLogger(__name__)


def _check_ranks(p, q):
    if p < 1 or q < 1:
        raise DomainError(f"ranks p, q must be at least 1, got ({p}, {q})", code='rank')


def strip_bound(p, q, g):
    """(p + q) min(p, q)(g - 1): the bound on |aq - bp| equivalent to |tau| <= tau_M."""
    return (p + q) * min(p, q) * (g - 1)


def omega_membership(p, q, g, a, b):
    _check_ranks(p, q)
    check_genus(g)
    if abs(a * q - b * p) > strip_bound(p, q, g):
        return False
    return a < p and b < q and (a >= 0 or b >= 0)


def canonicalize(p, q, g, a, b):
    """
    The representative of [a, b] in the region.

    Along the orbit (a + lp, b + lq) the region conditions pin l to
    min(-floor(a/p), -floor(b/q)).
    """
    _check_ranks(p, q)
    check_genus(g)
    if abs(a * q - b * p) > strip_bound(p, q, g):
        tau = Fraction(2 * (q * a - p * b), p + q)
        raise DomainError(
            f"class [{a}, {b}] has |tau| = {abs(tau)} > tau_M = {min(p, q) * (2 * g - 2)}: not a component",
            code='toledo_bound',
        )
    shift = min(-(a // p), -(b // q))
    return ClassPair(a=a + shift * p, b=b + shift * q, canonical=True)


def expected_count(p, q, g):
    return 2 * strip_bound(p, q, g) + gcd(p, q)


def is_coprime(p, q, point):
    return gcd(p + q, point.a + point.b) == 1


def census_lines(p, q, g):
    """Lines aq - bp = tk, |t| <= (p + q) min(p, q)(g - 1)/k, each with its k canonical points."""
    _check_ranks(p, q)
    check_genus(g)
    k = gcd(p, q)
    pp, qq = p // k, q // k
    inverse = pow(qq, -1, pp)
    bound = strip_bound(p, q, g) // k
    lines = []
    for t in range(-bound, bound + 1):
        a0 = (t * inverse) % pp
        b0 = (a0 * qq - t) // pp
        points = sorted(
            (canonicalize(p, q, g, a0 + s * pp, b0 + s * qq) for s in range(k)),
            key=lambda point: (point.a, point.b),
        )
        lines.append(CensusLine(t=t, tau=Fraction(2 * k * t, p + q), points=tuple(points)))
    return tuple(lines)


def enumerate_region(p, q, g):
    lines = census_lines(p, q, g)
    points = tuple(point for line in lines for point in line.points)
    expected = expected_count(p, q, g)
    logger.debug(f"Census of ({p}, {q}, g={g}): {len(points)} classes on {len(lines)} lines")
    return CensusReport(
        p=p,
        q=q,
        g=g,
        k=gcd(p, q),
        count=len(points),
        expected_count=expected,
        points=points,
        coprime_points=tuple(point for point in points if is_coprime(p, q, point)),
        lines=lines,
    )


def tau_quotient_facts(p, q):
    """
    tau on (Z + Z)/(p, q)Z has image (2k/(p + q))Z and a kernel of order
    k = GCD(p, q), generated by [p/k, q/k].
    """
    _check_ranks(p, q)
    k = gcd(p, q)
    return QuotientFacts(k=k, image_step=Fraction(2 * k, p + q), kernel_size=k, kernel_generator=(p // k, q // k))


def coprime_partition(p, q, g, census=None):
    """Split the census by GCD(p + q, a + b) = 1; an already computed census can be passed in."""
    points = (census or enumerate_region(p, q, g)).points
    coprime = tuple(point for point in points if is_coprime(p, q, point))
    non_coprime = tuple(point for point in points if not is_coprime(p, q, point))
    return CoprimePartition(coprime=coprime, non_coprime=non_coprime, both_nonempty=bool(coprime) and bool(non_coprime))
