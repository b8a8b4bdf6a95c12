"""
Morse bookkeeping at Hodge fixed points E = F1 + ... + Fm.

End(E) splits into weight spaces U_k = sum over i - j = k of Hom(F_j, F_i).
These are formula evaluators: whether the chain is realizable as a stable
critical point is not checked.
"""
import logging
from math import ceil

from triples.exceptions import check_genus

from .domain import MorseReport, WeightCohomology, WeightSpace

logger = logging.getLogger(__name__)


def uk_profile(chain, k):
    """Rank and degree of U_k; (0, 0) when |k| > m - 1."""
    rank = degree = 0
    for j in range(chain.m):
        i = j + k
        if 0 <= i < chain.m:
            rj, ri = chain.ranks[j], chain.ranks[i]
            rank += rj * ri
            degree += rj * chain.degrees[i] - ri * chain.degrees[j]
    return WeightSpace(k=k, rank=rank, degree=degree)


def dim_h1_weight(chain, k, g):
    """dim H^1 of the weight-2k deformation complex U_2k -> U_(2k+1) (x) K."""
    check_genus(g)
    even, odd = uk_profile(chain, 2 * k), uk_profile(chain, 2 * k + 1)
    value = (g - 1) * (odd.rank + even.rank) + odd.degree - even.degree
    return value + 1 if k == 0 else value


def morse_index(chain, g):
    """Complex Morse index; the real index is twice this."""
    check_genus(g)
    total = 0
    for k in range(2, chain.m):
        space = uk_profile(chain, k)
        total += (g - 1) * space.rank + (-1) ** (k + 1) * space.degree
    return total


def h1_dimensions(chain, g):
    return tuple(WeightCohomology(k=k, dim_h1=dim_h1_weight(chain, k, g)) for k in range(ceil((chain.m - 1) / 2) + 1))


def is_local_minimum(chain, g):
    """True when every positive-weight H^1 vanishes."""
    return all(item.dim_h1 == 0 for item in h1_dimensions(chain, g) if item.k >= 1)


def analyse_chain(chain, g):
    index = morse_index(chain, g)
    advisory = None
    if index < 0:
        advisory = f"negative Morse index {index}: this chain is not realizable as a stable critical point"
        logger.warning(f"Chain ranks={chain.ranks} degrees={chain.degrees}: {advisory}")
    return MorseReport(
        chain=chain,
        g=g,
        profile=tuple(uk_profile(chain, k) for k in range(-(chain.m - 1), chain.m)),
        h1=h1_dimensions(chain, g),
        index=index,
        real_index=2 * index,
        local_minimum=is_local_minimum(chain, g),
        advisory=advisory,
    )
