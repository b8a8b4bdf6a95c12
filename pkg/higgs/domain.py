"""
Value types for U(p,q)-Higgs bundles and their Hodge fixed points.

A U(p,q)-Higgs bundle (V, W, beta, gamma) is represented by its numerical
data: ranks p = rk V, q = rk W, degrees a = deg V, b = deg W, and the genus g
of the base curve.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from triples.domain import ModuliFactor, TripleType
from triples.exceptions import DomainError, check_genus


@dataclass(frozen=True)
class HiggsType:
    p: int
    q: int
    a: int
    b: int
    g: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise DomainError(f"ranks p, q must be at least 1, got ({self.p}, {self.q})", code='rank')
        check_genus(self.g)

    @property
    def rank(self):
        return self.p + self.q

    @property
    def degree(self):
        return self.a + self.b

    @property
    def slope_gap(self):
        """a/p - b/q; its sign decides which Higgs field component vanishes at the minima."""
        return Fraction(self.a, self.p) - Fraction(self.b, self.q)

    def as_tuple(self):
        return (self.p, self.q, self.a, self.b, self.g)


@dataclass(frozen=True)
class Toledo:
    tau: Fraction
    tau_M: int
    within_bound: bool
    saturated: bool


@dataclass(frozen=True)
class MinimaRealization:
    case_tag: str
    triple: TripleType
    alpha: int
    alternate_triple: Optional[TripleType] = None
    product: Optional[tuple] = None


@dataclass(frozen=True)
class MWFact:
    statement: str
    holds: bool


@dataclass(frozen=True)
class MWRelations:
    triple: TripleType
    alpha_m: Fraction
    alpha_M: Optional[Fraction]
    two_g_minus_two: int
    alpha_m_vs_2g2: str
    alpha_M_vs_2g2: Optional[str]
    facts: tuple


@dataclass(frozen=True)
class Rigidity:
    """
    Maximal-Toledo decomposition for p != q: every polystable object splits
    as a U(m,m)-Higgs bundle of maximal Toledo invariant plus a polystable
    bundle of rank |q - p| in the larger summand.
    """
    applies: bool
    expected_dim: int
    factor1: Optional[HiggsType] = None
    factor2: Optional[ModuliFactor] = None
    factor2_summand: Optional[str] = None
    dim_sum: Optional[int] = None
    closed_form: Optional[int] = None
    transposed_form: Optional[int] = None
    below_expected: Optional[bool] = None
    twisted_pairs: Optional[ModuliFactor] = None


@dataclass(frozen=True)
class HiggsProfile:
    higgs: HiggsType
    toledo: Toledo
    vanishing_pattern: str
    minima: MinimaRealization
    mw: MWRelations
    expected_dim: int
    coprime: bool
    minima_triple_dim: int
    minima_alpha_critical: bool
    twisted_pairs: Optional[ModuliFactor] = None


@dataclass(frozen=True)
class HodgeChain:
    """Ranks r1..rm and degrees e1..em of E = F1 + ... + Fm at a Hodge fixed point."""
    ranks: tuple
    degrees: tuple

    def __post_init__(self):
        if not self.ranks:
            raise DomainError("a Hodge chain needs at least one piece", code='chain')
        if len(self.ranks) != len(self.degrees):
            raise DomainError(f"{len(self.ranks)} ranks but {len(self.degrees)} degrees", code='chain')
        if any(r < 1 for r in self.ranks):
            raise DomainError(f"chain ranks must be at least 1, got {self.ranks}", code='rank')

    @property
    def m(self):
        return len(self.ranks)


@dataclass(frozen=True)
class WeightSpace:
    k: int
    rank: int
    degree: int


@dataclass(frozen=True)
class WeightCohomology:
    k: int
    dim_h1: int


@dataclass(frozen=True)
class MorseReport:
    chain: HodgeChain
    g: int
    profile: tuple
    h1: tuple
    index: int
    real_index: int
    local_minimum: bool
    advisory: Optional[str] = None
