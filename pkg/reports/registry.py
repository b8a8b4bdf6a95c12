"""
Command table shared by the ``invariants`` management command and the API
views: command name -> (query serializer, report builder).
"""
from dataclasses import replace

from census.serializers import CensusQuerySerializer
from census.services import census_report
from classifier.serializers import ClassifyQuerySerializer
from classifier.services import classify_report
from higgs.serializers import HiggsQuerySerializer, MorseQuerySerializer
from higgs.services import higgs_report, morse_report, rigidity_report
from triples.serializers import ChamberQuerySerializer, TripleReportQuerySerializer, WallQuerySerializer
from triples.services import chambers_report, triple_report, walls_report

COMMANDS = {
    'triple': (TripleReportQuerySerializer, triple_report),
    'walls': (WallQuerySerializer, walls_report),
    'chambers': (ChamberQuerySerializer, chambers_report),
    'higgs': (HiggsQuerySerializer, higgs_report),
    'rigidity': (HiggsQuerySerializer, rigidity_report),
    'morse': (MorseQuerySerializer, morse_report),
    'census': (CensusQuerySerializer, census_report),
    'classify': (ClassifyQuerySerializer, classify_report),
}


def query_serializer(command, data):
    query_class, _ = COMMANDS[command]
    return query_class(data=data)


def build_report(command, data):
    """
    Validate ``data`` for ``command`` and build its report.

    Raises ``rest_framework.exceptions.ValidationError`` on malformed input
    and ``DomainError`` when a mathematical precondition fails.
    """
    _, builder = COMMANDS[command]
    query = query_serializer(command, data)
    query.is_valid(raise_exception=True)
    report = builder(query.validated_data)
    return replace(report, command=command, inputs=dict(query.data))
