"""
Rendering of command reports.

Reports are built from dataclasses, tuples, dicts and numbers and are
rendered deterministically: dict keys are sorted and words print as strings.
"""
import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from .words import Alphabet

TEXT = 'text'
JSON = 'json'


def is_word(value) -> bool:
    return isinstance(value, tuple) and all(isinstance(s, str) for s in value)


def render_word(word) -> str:
    if not word:
        return 'ε'
    return ''.join(word) if all(len(s) == 1 for s in word) else ' '.join(word)


def to_primitive(value: Any) -> Any:
    """JSON-compatible form of a report value."""
    if isinstance(value, Alphabet):
        return list(value.symbols)
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_primitive(getattr(value, f.name)) for f in dataclasses.fields(value)
                if not f.name.startswith('_')}
    if isinstance(value, enum.Enum):
        return to_primitive(value.value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return [to_primitive(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {_key(k): to_primitive(v) for k, v in value.items()}
    if is_word(value) and value:
        return render_word(value)
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_primitive(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    return value


def _key(key) -> str:
    if is_word(key):
        return render_word(key)
    return str(key)


def envelope(
    command: str, result: Any, horizon: Optional[int] = None, notes: List[str] = ()
) -> Dict[str, Any]:
    report: Dict[str, Any] = {'command': command, 'result': to_primitive(result)}
    if horizon is not None:
        report['horizon'] = horizon
        report['evidence'] = f'evidence at horizon {horizon}'
    if notes:
        report['notes'] = list(notes)
    return report


def _text_lines(value: Any, indent: int = 0) -> List[str]:
    pad = '  ' * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value, key=_sort_key):
            item = value[key]
            container = isinstance(item, (dict, list)) and bool(item)
            if container and any(isinstance(v, (dict, list)) for v in _values(item)):
                lines.append(f'{pad}{key}:')
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f'{pad}{key}: {_inline(item)}')
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f'{pad}-')
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f'{pad}- {_inline(item)}')
    else:
        lines.append(f'{pad}{_inline(value)}')
    return lines


def _values(item):
    return item.values() if isinstance(item, dict) else item


def _sort_key(key: str):
    return (0, int(key), '') if key.lstrip('-').isdigit() else (1, 0, key)


def _inline(value: Any) -> str:
    if isinstance(value, dict):
        return '{' + ', '.join(f'{k}: {_inline(value[k])}' for k in sorted(value, key=_sort_key)) + '}'
    if isinstance(value, list):
        return '[' + ', '.join(_inline(v) for v in value) + ']'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '-'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(report: Dict[str, Any], fmt: str = TEXT) -> str:
    if fmt == JSON:
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    return '\n'.join(_text_lines(report))
