"""
Existence, connectedness and smoothness verdicts for M(a,b), R_Gamma(a,b) and
R[a,b].

Cases are checked in order: outside the Milnor-Wood bound, tau = 0, the
generic range 0 < |tau| < tau_M, and maximal Toledo invariant with p = q or
p != q. Where only the closure of the stable locus is known to be connected
the full-space answer is ``unknown``.
"""
import logging
from dataclasses import replace

from higgs.bridge import coprime_smooth, expected_dim, rigidity, toledo

from .domain import NO, UNKNOWN, YES, Classification, Verdict

logger = logging.getLogger(__name__)

MILNOR_WOOD = 'milnor-wood-bound'


def _cite(**fields):
    return {name: tuple(tags) for name, tags in fields.items()}


def classify(h):
    tol = toledo(h)
    tau = abs(tol.tau)

    if not tol.within_bound:
        return Verdict(
            in_range=False,
            stable_nonempty=NO,
            stable_smooth_dim=None,
            closure_of_stable_connected=NO,
            full_space_nonempty=NO,
            full_space_connected=NO,
            rigid=False,
            citations=_cite(
                in_range=[MILNOR_WOOD],
                stable_nonempty=[MILNOR_WOOD],
                closure_of_stable_connected=[MILNOR_WOOD],
                full_space_nonempty=[MILNOR_WOOD],
                full_space_connected=[MILNOR_WOOD],
            ),
        )

    if tau == 0:
        return Verdict(
            in_range=True,
            stable_nonempty=UNKNOWN,
            stable_smooth_dim=None,
            closure_of_stable_connected=UNKNOWN,
            full_space_nonempty=YES,
            full_space_connected=YES,
            rigid=False,
            citations=_cite(
                in_range=[MILNOR_WOOD],
                stable_nonempty=['tau-zero-stable-locus-open'],
                closure_of_stable_connected=['tau-zero-stable-locus-open'],
                full_space_nonempty=['tau-zero-connectedness'],
                full_space_connected=['tau-zero-connectedness'],
            ),
        )

    if not tol.saturated:
        if coprime_smooth(h):
            connected, connected_tags = YES, ['coprime-smoothness', 'generic-toledo-stable-locus']
        elif h.p == h.q and (h.p - 1) * (2 * h.g - 2) < tau:
            connected, connected_tags = YES, ['equal-rank-high-toledo-connectedness']
        else:
            connected, connected_tags = UNKNOWN, ['non-coprime-connectedness-open']
        return Verdict(
            in_range=True,
            stable_nonempty=YES,
            stable_smooth_dim=expected_dim(h),
            closure_of_stable_connected=YES,
            full_space_nonempty=YES,
            full_space_connected=connected,
            rigid=False,
            citations=_cite(
                in_range=[MILNOR_WOOD],
                stable_nonempty=['generic-toledo-stable-locus'],
                stable_smooth_dim=['generic-toledo-stable-locus'],
                closure_of_stable_connected=['generic-toledo-stable-locus'],
                full_space_nonempty=['generic-toledo-stable-locus'],
                full_space_connected=connected_tags,
            ),
        )

    if h.p == h.q:
        return Verdict(
            in_range=True,
            stable_nonempty=YES,
            stable_smooth_dim=expected_dim(h),
            closure_of_stable_connected=YES,
            full_space_nonempty=YES,
            full_space_connected=YES,
            rigid=False,
            citations=_cite(
                in_range=[MILNOR_WOOD],
                stable_nonempty=['equal-rank-maximal-toledo'],
                stable_smooth_dim=['equal-rank-maximal-toledo'],
                closure_of_stable_connected=['equal-rank-maximal-toledo', 'maximal-toledo-connectedness'],
                full_space_nonempty=['equal-rank-maximal-toledo', 'maximal-toledo-connectedness'],
                full_space_connected=['maximal-toledo-connectedness'],
            ),
        )

    return Verdict(
        in_range=True,
        stable_nonempty=NO,
        stable_smooth_dim=None,
        closure_of_stable_connected=NO,
        full_space_nonempty=YES,
        full_space_connected=YES,
        rigid=True,
        rigidity_data=rigidity(h),
        citations=_cite(
            in_range=[MILNOR_WOOD],
            stable_nonempty=['maximal-toledo-rigidity'],
            closure_of_stable_connected=['maximal-toledo-rigidity'],
            full_space_nonempty=['maximal-toledo-connectedness'],
            full_space_connected=['maximal-toledo-connectedness'],
            rigid=['maximal-toledo-rigidity'],
        ),
    )


def _derived(verdict, tag, smooth=True):
    citations = {name: tags + (tag,) for name, tags in verdict.citations.items()}
    if not smooth:
        citations.pop('stable_smooth_dim', None)
        return replace(verdict, stable_smooth_dim=None, citations=citations)
    return replace(verdict, citations=citations)


def classify_all(h):
    """
    Verdicts for M(a,b) and, through the Higgs/representation homeomorphism
    and the U(1)^(2g) principal fibration, for R_Gamma(a,b) and R[a,b].
    No smoothness is claimed for R[a,b].
    """
    moduli = classify(h)
    representations = _derived(moduli, 'higgs-representation-homeomorphism')
    logger.debug(f"Classified {h.as_tuple()}: stable={moduli.stable_nonempty}, connected={moduli.full_space_connected}")
    return Classification(
        higgs=h,
        toledo=toledo(h),
        moduli=moduli,
        representations=representations,
        projective_representations=_derived(representations, 'jacobian-principal-fibration', smooth=False),
    )
