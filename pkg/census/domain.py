"""
Value types for the component census of PU(p,q) representation varieties.

Components are indexed by classes [a, b] in (Z + Z)/(p, q)Z with Toledo
invariant inside the Milnor-Wood bound.
"""
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ClassPair:
    a: int
    b: int
    canonical: bool


@dataclass(frozen=True)
class CensusLine:
    """Canonical points on the line aq - bp = t * GCD(p, q)."""
    t: int
    tau: Fraction
    points: tuple


@dataclass(frozen=True)
class CensusReport:
    p: int
    q: int
    g: int
    k: int
    count: int
    expected_count: int
    points: tuple
    coprime_points: tuple
    lines: tuple


@dataclass(frozen=True)
class QuotientFacts:
    k: int
    image_step: Fraction
    kernel_size: int
    kernel_generator: tuple


@dataclass(frozen=True)
class CoprimePartition:
    coprime: tuple
    non_coprime: tuple
    both_nonempty: bool
