"""
Canonical JSON output
=====================

Post-processing of results into JSON. Output is canonical: keys are sorted,
rationals are written as 'p/q' strings, and floats only appear inside an
object marked ``{"approx": true, ...}``. Emitting and re-parsing a document
gives equal values.
"""
#===============================================================================
import json
import re
from fractions import Fraction
#===============================================================================
import numpy as np
#===============================================================================
from reebindex import arith
from reebindex.exceptions import StructuralError
#===============================================================================
SCHEMA_VERSION = 1
_RATIONAL = re.compile(r'^-?\d+(/\d+)?$')
#===============================================================================
def encode(x):
    """
    Convert *x* to JSON native values.
    """
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return arith.to_str(x)
    if isinstance(x, arith.ApproxReal):
        return {'approx': True, 'value': float(x)}
    if isinstance(x, (float, np.floating)):
        return {'approx': True, 'value': float(x)}
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [encode(v) for v in x]
    raise StructuralError(f"Cannot encode {type(x).__name__} as JSON.")
#===============================================================================
def decode(x):
    """
    Inverse of :func:`encode`: 'p/q' strings become Fractions, approximate
    values become floats, lists become tuples.
    """
    if isinstance(x, str):
        return Fraction(x) if _RATIONAL.match(x) else x
    if isinstance(x, list):
        return tuple(decode(v) for v in x)
    if isinstance(x, dict):
        if x.get('approx') is True and 'value' in x:
            return float(x['value'])
        return {k: decode(v) for k, v in x.items()}
    return x
#===============================================================================
def dumps(obj):
    """
    Canonical JSON text of *obj*.
    """
    return json.dumps(encode(obj), sort_keys=True, indent=2, ensure_ascii=False) + '\n'
#===============================================================================
def loads(s):
    """
    :raise: StructuralError for unparsable text.
    """
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        raise StructuralError(f"Invalid JSON: {e}") from e
#===============================================================================
def read_json(path):
    try:
        with open(path) as f:
            return loads(f.read())
    except OSError as e:
        raise StructuralError(f"Cannot read '{path}': {e}") from e
#===============================================================================
def report(kind, payload, config=None):
    """
    Wrap *payload* (a dict) in a report carrying the schema version and the
    effective run configuration.
    """
    doc = {'schema_version': SCHEMA_VERSION, 'kind': kind}
    if config is not None:
        doc['config'] = config.as_dict()
    doc.update(payload)
    return doc
#===============================================================================
def to_text(obj, indent=0):
    """
    Plain text rendering of a JSON document, one ``key: value`` per line.
    """
    return _render(encode(obj), indent)
#===============================================================================
def _render(obj, indent=0):
    pad = '  '*indent
    if obj == [] or obj == {}:
        return f"{pad}{json.dumps(obj)}"
    lines = []
    if isinstance(obj, dict):
        if obj.get('approx') is True and 'value' in obj:
            return f"{pad}~{obj['value']!r}"
        for k in sorted(obj):
            v = obj[k]
            if _nested(v):
                lines.append(f"{pad}{k}:")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_render(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if _nested(v):
                lines.append(f"{pad}-")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_render(v)}")
    else:
        lines.append(f"{pad}{'null' if obj is None else obj}")
    return '\n'.join(lines)
#===============================================================================
def _nested(v):
    return isinstance(v, (dict, list)) and bool(v) and not (isinstance(v, dict) and v.get('approx') is True)
#===============================================================================
