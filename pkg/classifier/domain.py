from dataclasses import dataclass, field
from typing import Optional

from higgs.domain import HiggsType, Rigidity, Toledo
from triples.domain import NO, TRISTATE_CHOICES, UNKNOWN, YES  # noqa: F401


@dataclass(frozen=True)
class Verdict:
    """
    Structured answer for one moduli or representation space. Every field
    except ``rigidity_data`` is backed by the result tags in ``citations``.
    """
    in_range: bool
    stable_nonempty: str
    stable_smooth_dim: Optional[int]
    closure_of_stable_connected: str
    full_space_nonempty: str
    full_space_connected: str
    rigid: bool
    rigidity_data: Optional[Rigidity] = None
    citations: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Classification:
    higgs: HiggsType
    toledo: Toledo
    moduli: Verdict
    representations: Verdict
    projective_representations: Verdict
