from dataclasses import dataclass, field


@dataclass(frozen=True)
class Report:
    """
    Envelope shared by every command: the echoed inputs, the serialized
    outputs, result tags backing the outputs, and advisories.
    """
    command: str
    outputs: dict
    citations: dict = field(default_factory=dict)
    warnings: tuple = ()
    inputs: dict = field(default_factory=dict)
