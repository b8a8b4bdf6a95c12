"""
Report rendering for the ``invariants`` command: JSON through DRF's
JSONRenderer (same bytes as the API) or an indented plain-text listing.
"""
from rest_framework.renderers import JSONRenderer

INDENT = '  '


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


def _scalar(value):
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    return str(value)


def _is_scalar(value):
    return not isinstance(value, (dict, list))


def _lines(value, depth):
    pad = INDENT * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if _is_scalar(item):
                yield f"{pad}{key}: {_scalar(item)}"
            elif isinstance(item, list) and all(_is_scalar(entry) for entry in item):
                yield f"{pad}{key}: {', '.join(_scalar(entry) for entry in item) or '-'}"
            else:
                yield f"{pad}{key}:"
                yield from _lines(item, depth + 1)
    elif isinstance(value, list):
        for item in value:
            if _is_scalar(item):
                yield f"{pad}- {_scalar(item)}"
            elif isinstance(item, list):
                yield f"{pad}- {', '.join(_scalar(entry) for entry in item)}"
            else:
                nested = list(_lines(item, depth + 1))
                yield f"{pad}- {nested[0].strip()}" if nested else f"{pad}- -"
                yield from nested[1:]
    else:
        yield f"{pad}{_scalar(value)}"


def render_text(data):
    lines = [data['command']]
    for section in ('inputs', 'outputs', 'citations'):
        lines.append(f"{section}:")
        lines.extend(_lines(data[section], 1))
    if data['warnings']:
        lines.append('warnings:')
        lines.extend(f"{INDENT}! {warning}" for warning in data['warnings'])
    return '\n'.join(lines)
