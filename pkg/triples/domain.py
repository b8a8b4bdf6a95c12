"""
Value types for holomorphic triple invariants.

A triple T = (E1, E2, phi: E2 -> E1) is represented only by its type
(n1, n2, d1, d2): the ranks and degrees of E1 and E2.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exceptions import DomainError

YES = 'yes'
NO = 'no'
UNKNOWN = 'unknown'

TRISTATE_CHOICES = (
    (YES, 'Yes'),
    (NO, 'No'),
    (UNKNOWN, 'Unknown'),
)


@dataclass(frozen=True)
class TripleData:
    """Ranks and degrees of a triple, subtriple or quotient triple."""
    n1: int
    n2: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise DomainError(f"ranks must be non-negative, got ({self.n1}, {self.n2})", code='rank')
        if self.n1 == 0 and self.n2 == 0:
            raise DomainError("ranks (n1, n2) must not both be zero", code='rank')

    @property
    def rank(self):
        return self.n1 + self.n2

    @property
    def degree(self):
        return self.d1 + self.d2

    def as_tuple(self):
        return (self.n1, self.n2, self.d1, self.d2)

    def __sub__(self, other):
        return TripleData(self.n1 - other.n1, self.n2 - other.n2, self.d1 - other.d1, self.d2 - other.d2)


@dataclass(frozen=True)
class TripleType(TripleData):
    """Type of a holomorphic triple; both bundles have positive rank."""

    def __post_init__(self):
        super().__post_init__()
        if self.n1 < 1 or self.n2 < 1:
            raise DomainError(f"triple ranks must be at least 1, got ({self.n1}, {self.n2})", code='rank')

    @property
    def mu1(self):
        return Fraction(self.d1, self.n1)

    @property
    def mu2(self):
        return Fraction(self.d2, self.n2)


@dataclass(frozen=True)
class SubtripleWitness(TripleData):
    """Numeric data (n1', n2', d1', d2') offered as a destabilizing subtriple."""


@dataclass(frozen=True)
class AlphaInterval:
    lo: Fraction
    hi: Optional[Fraction]  # None when n1 == n2 (unbounded above)
    empty: bool

    @property
    def hi_infinite(self):
        return self.hi is None

    def contains(self, alpha, closed=True):
        if self.empty:
            return False
        if closed:
            return alpha >= self.lo and (self.hi is None or alpha <= self.hi)
        return alpha > self.lo and (self.hi is None or alpha < self.hi)


@dataclass(frozen=True)
class Thresholds:
    alpha_m: Fraction
    alpha_M: Optional[Fraction]
    alpha_j: tuple
    alpha_0: Fraction
    alpha_t: Optional[Fraction]
    alpha_e: Fraction
    alpha_L: Fraction
    via_duality: bool


@dataclass(frozen=True)
class WitnessVerdict:
    witness: tuple
    delta: Optional[Fraction]
    passed: bool
    error: Optional[str] = None


@dataclass(frozen=True)
class WitnessReport:
    alpha: Fraction
    strict: bool
    verdicts: tuple
    passed: bool


@dataclass(frozen=True)
class ModuliFactor:
    """
    Symbolic moduli factor.

    kind is one of ``stable_bundles`` (M^s(n,d)), ``semistable_bundles``
    (M(n,d)), ``divisors`` (Div^d(X), rank unused) or ``twisted_pairs``
    (K^2-twisted Higgs pairs of rank n and degree d).
    """
    kind: str
    rank: int
    degree: int


@dataclass(frozen=True)
class Fibration:
    fiber_dim: int
    empty_fiber: bool
    base: tuple
    isomorphism: bool
    slope_condition_met: bool
    alpha_m_moduli: tuple
    alpha_M_moduli: Optional[tuple]
    via_duality: bool


@dataclass(frozen=True)
class WallWitness:
    n1p: int
    n2p: int
    dsum: int


@dataclass(frozen=True)
class Wall:
    alpha: Fraction
    witnesses: tuple
    stabilized: bool = False


@dataclass(frozen=True)
class Criticality:
    alpha: Fraction
    critical: bool
    witnesses: tuple


@dataclass(frozen=True)
class Genericity:
    m: int
    guaranteed_noncritical: bool
    no_alpha_independent: bool


@dataclass(frozen=True)
class Chamber:
    lo: Fraction
    hi: Fraction
    contains_2g_minus_2: bool
    is_large_chamber: bool
    birational_to_large: bool


@dataclass(frozen=True)
class ChamberReport:
    chambers: tuple
    walls: tuple
    cutoff: Optional[Fraction]
    two_g_minus_two: int
    position: str
    flips_to_large: Optional[int]
    wall_at_2g_minus_2: Optional[Wall] = None


@dataclass(frozen=True)
class FlipDims:
    alpha_c: Fraction
    side: str
    stilde_dim: int
    minus_chi_cross: int
    minus_chi_reverse: int
    fiber_dim: int
    fiber_nonnegative: bool
    guaranteed_codim: int
    codim_bound_applies: bool
    total_dim: int


@dataclass(frozen=True)
class ModuliVerdict:
    """
    What is known about the alpha-stable moduli N^s_alpha and the full moduli
    N_alpha of a triple type at one alpha. ``hypotheses`` lists the
    conditions that were checked to reach each ``yes``.
    """
    alpha: Fraction
    in_range: bool
    critical: bool
    stable_nonempty: str
    stable_irreducible: str
    stable_smooth: str
    stable_dim: Optional[int]
    stable_birational_to_large: str
    full_irreducible: str
    full_birational_to_large: str
    via_duality: bool
    hypotheses: tuple = ()
    citations: dict = field(default_factory=dict)
