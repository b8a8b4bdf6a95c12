import logging

from reports.domain import Report
from triples.services import genus_from

from .serializers import ClassificationSerializer, ClassifyQuerySerializer
from .verdicts import classify_all

logger = logging.getLogger(__name__)


def classify_report(data):
    h = ClassifyQuerySerializer.higgs(data, genus_from(data))
    result = classify_all(h)
    warnings = []
    if result.moduli.full_space_connected == 'unknown':
        warnings.append("connectedness of the full space is open here: only the closure of the stable locus is known to be connected")
    if result.moduli.stable_nonempty == 'unknown':
        warnings.append("tau = 0: non-emptiness of the stable locus is open")
    logger.info(f"Classification of {h.as_tuple()}")
    return Report(
        'classify',
        outputs=ClassificationSerializer(result).data,
        citations={name: list(tags) for name, tags in result.moduli.citations.items()},
        warnings=tuple(warnings),
    )
