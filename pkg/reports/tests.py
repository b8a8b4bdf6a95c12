import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from rest_framework.exceptions import ValidationError

from triples.exceptions import DomainError

from .management.commands.invariants import Command, describe_errors
from .registry import COMMANDS, build_report
from .rendering import render_text


def invariants(*args):
    out = StringIO()
    call_command('invariants', *[str(arg) for arg in args], stdout=out)
    return out.getvalue()


def invariants_json(*args):
    return json.loads(invariants(*args, '--json'))


def assert_no_floats(value):
    if isinstance(value, dict):
        for item in value.values():
            assert_no_floats(item)
    elif isinstance(value, list):
        for item in value:
            assert_no_floats(item)
    else:
        assert not isinstance(value, float), value


def test_walls_json():
    report = invariants_json('walls', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1, '--g', 2)
    assert report['command'] == 'walls'
    assert [wall['alpha'] for wall in report['outputs']['walls']] == ['5/2']
    assert report['outputs']['lo'] == '1'
    assert report['outputs']['hi'] == '4'
    assert report['citations']['walls'] == ['critical-value-formula']
    assert_no_floats(report)


def test_walls_on_interval_with_endpoints():
    report = invariants_json(
        'walls', '--n1', 1, '--n2', 1, '--d1', 1, '--d2', 0,
        '--interval', 2, 5, '--include-endpoints',
    )
    assert [wall['alpha'] for wall in report['outputs']['walls']] == ['3', '5']
    assert all(wall['stabilized'] for wall in report['outputs']['walls'])
    assert report['inputs']['interval'] == ['2', '5']
    assert report['inputs']['include_endpoints'] is True
    assert report['warnings']


def test_walls_accepts_negative_rationals():
    report = invariants_json(
        'walls', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1,
        '--alpha', '-1/2', '--interval', '-1/2', 3,
    )
    assert report['outputs']['criticality']['alpha'] == '-1/2'
    assert report['outputs']['criticality']['critical']
    assert report['inputs']['interval'] == ['-1/2', '3']
    assert [wall['alpha'] for wall in report['outputs']['walls']] == ['1', '5/2']


def test_triple_moduli_verdict():
    report = invariants_json('triple', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1, '--g', 2, '--alpha', 3)
    moduli = report['outputs']['moduli']
    assert moduli['stable_nonempty'] == moduli['full_irreducible'] == 'yes'
    assert moduli['stable_dim'] == 6
    assert 'large-alpha-fibration' in report['citations']['moduli']
    assert 'moduli' in invariants('triple', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1, '--alpha', 3)


def test_triple_help_describes_genericity():
    parser = Command().create_parser('manage.py', 'invariants')
    subcommands = next(action for action in parser._actions if action.dest == 'subcommand')
    assert 'genericity' in subcommands.choices['triple'].format_help()


def test_classify_json():
    report = invariants_json('classify', '--p', 2, '--q', 3, '--a', 1, '--b', 1, '--g', 2)
    moduli = report['outputs']['moduli']
    assert moduli['stable_smooth_dim'] == 26
    assert moduli['stable_nonempty'] == moduli['full_space_connected'] == 'yes'
    assert report['outputs']['toledo']['tau'] == '2/5'
    assert_no_floats(report)


def test_census_json():
    report = invariants_json('census', '--p', 1, '--q', 1, '--g', 2)
    assert report['outputs']['census']['count'] == 5
    assert len(report['outputs']['census']['points']) == 5


def test_triple_with_witnesses():
    report = invariants_json(
        'triple', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1,
        '--alpha', '3', '--witness', 0, 1, 0, 2, '--witness', 2, 0, 5, 0,
    )
    assert report['inputs']['witness'] == [[0, 1, 0, 2], [2, 0, 5, 0]]
    assert report['outputs']['witness_report'] is not None
    assert_no_floats(report)


def test_morse_warns_on_negative_index():
    report = invariants_json('morse', '--ranks', 1, 1, 1, '--degrees', 0, 1, 2)
    assert report['outputs']['index'] == -1
    assert len(report['warnings']) == 1


def test_json_is_byte_stable():
    args = ('rigidity', '--p', 1, '--q', 2, '--a', 2, '--b', 1, '--json')
    assert invariants(*args) == invariants(*args)


def test_text_report():
    text = invariants('walls', '--n1', 2, '--n2', 1, '--d1', 4, '--d2', 1)
    assert text.startswith('walls')
    assert 'alpha: 5/2' in text
    assert 'citations:' in text


def test_missing_flag_is_malformed():
    with pytest.raises(CommandError) as exc:
        invariants('walls', '--n2', 1, '--d1', 4, '--d2', 1)
    assert exc.value.returncode == 2
    assert '--n1' in str(exc.value)


def test_bad_genus_is_malformed():
    with pytest.raises(CommandError) as exc:
        invariants('higgs', '--p', 1, '--q', 1, '--a', 0, '--b', 0, '--g', 1)
    assert exc.value.returncode == 2
    assert '--g' in str(exc.value)


def test_bad_rational_names_flag():
    with pytest.raises(CommandError) as exc:
        invariants('chambers', '--n1', 1, '--n2', 1, '--d1', 1, '--d2', 0, '--cutoff', '1/0')
    assert exc.value.returncode == 2
    assert '--cutoff' in str(exc.value)


def test_domain_error_exit_code():
    with pytest.raises(CommandError) as exc:
        invariants('walls', '--n1', 1, '--n2', 1, '--d1', 0, '--d2', 1)
    assert exc.value.returncode == 1
    assert 'empty_range' in str(exc.value)


def test_describe_errors_flattens_nested_detail():
    detail = {'witness': {1: ['Expected four integers.']}, 'include_endpoints': ['Must be a valid boolean.']}
    message = describe_errors(detail)
    assert '--witness: Expected four integers.' in message
    assert '--include-endpoints: Must be a valid boolean.' in message


def test_registry_covers_every_subcommand():
    assert set(COMMANDS) == {'triple', 'walls', 'chambers', 'higgs', 'rigidity', 'morse', 'census', 'classify'}


def test_build_report_raises_by_kind():
    with pytest.raises(ValidationError):
        build_report('census', {'p': 'x', 'q': 1})
    with pytest.raises(DomainError):
        build_report('census', {'p': 1, 'q': 1, 'g': 2, 'a': 3, 'b': 0})


def test_render_text_lists_warnings():
    text = render_text({
        'command': 'higgs',
        'inputs': {'p': 1},
        'outputs': {'toledo': {'tau': '2/5', 'saturated': False}, 'facts': [{'statement': 's', 'holds': True}]},
        'citations': {},
        'warnings': ['careful'],
    })
    assert '  toledo:' in text
    assert '    tau: 2/5' in text
    assert '    saturated: no' in text
    assert '  - statement: s' in text
    assert '  ! careful' in text
