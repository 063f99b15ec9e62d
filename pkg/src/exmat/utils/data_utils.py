"""## Data Tools

Functions for reading and writing the JSON documents used by the command line
interface. These are not importable from the top level `exmat` module, but
must instead be imported from `exmat.utils`.
"""

#  _____       _______                _    _ _______ _____ _       _____
# |  __ \   /\|__   __|/\            | |  | |__   __|_   _| |     / ____|
# | |  | | /  \  | |  /  \           | |  | |  | |    | | | |    | (___
# | |  | |/ /\ \ | | / /\ \          | |  | |  | |    | | | |     \___ \
# | |__| / ____ \| |/ ____ \  ______ | |__| |  | |   _| |_| |____ ____) |
# |_____/_/    \_\_/_/    \_\|______| \____/   |_|  |_____|______|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

import hashlib
import json
import sys

__all__ = [
    'MATROID_TYPES',
    'FormatError',
    'canonical_json',
    'check_matroid_document',
    'input_digest',
    'load_json',
    'parse_json'
]

MATROID_TYPES = ('uniform', 'graphic', 'gf2', 'free', 'explicit')

class FormatError(ValueError):

    """Raised when a JSON document cannot be parsed or does not follow the
    matroid file format.
    """

def canonical_json(obj):
    """Serializes `obj` with sorted keys and fixed separators, so that equal
    documents always produce identical bytes.

    **Arguments**

    - **obj** : _dict_ or _list_
        - A JSON-serializable object. Floats are rejected.

    **Returns**

    - _str_
        - The canonical serialization, without a trailing newline.
    """

    _reject_floats(obj)
    return json.dumps(obj, sort_keys=True, separators=(',', ':'), ensure_ascii=True)

def input_digest(doc):
    """Hex sha256 digest of the canonical serialization of `doc`."""

    return hashlib.sha256(canonical_json(doc).encode('ascii')).hexdigest()

def parse_json(text):
    try:
        return json.loads(text)
    except ValueError as e:
        raise FormatError('invalid JSON: {}'.format(e))

def load_json(path):
    """Reads a JSON document from `path`, or from stdin when `path` is `'-'`.
    Any read or decode problem is raised as a `FormatError`.
    """

    try:
        if path == '-':
            return parse_json(sys.stdin.read())
        with open(path, 'r') as f:
            return parse_json(f.read())
    except (IOError, OSError) as e:
        raise FormatError('cannot read {}: {}'.format(path, e))

# labels are strings or integers (never booleans), all of one type
def _check_labels(labels, what):
    if not isinstance(labels, list):
        raise FormatError('{} must be a list'.format(what))
    kinds = set()
    for label in labels:
        if isinstance(label, bool) or not isinstance(label, (str, int)):
            raise FormatError('{} contains invalid label {!r}'.format(what, label))
        kinds.add(type(label))
    if len(kinds) > 1:
        raise FormatError('{} mixes string and integer labels'.format(what))
    if len(set(labels)) != len(labels):
        raise FormatError('{} contains duplicate labels'.format(what))

def _check_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError('{} must be an integer'.format(what))

def _reject_floats(obj):
    if isinstance(obj, float):
        raise FormatError('floats are not allowed in documents')
    if isinstance(obj, dict):
        for v in obj.values():
            _reject_floats(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _reject_floats(v)

def check_matroid_document(doc):
    """Checks that `doc` follows the matroid file format. The accepted
    documents are

    - `{"type": "uniform", "rank": r, "ground": [labels]}`
    - `{"type": "graphic", "vertices": n, "edges": [[u, v, label], ...]}`
    - `{"type": "gf2", "columns": {label: [bits], ...}}`
    - `{"type": "free", "ground": [labels]}`
    - `{"type": "explicit", "ground": [labels], "independent": [[labels], ...]}`

    **Arguments**

    - **doc** : _dict_
        - The decoded JSON document.

    **Returns**

    - _dict_
        - `doc` itself, unchanged.

    Raises `FormatError` describing the first problem found.
    """

    if not isinstance(doc, dict):
        raise FormatError('matroid document must be a JSON object')

    kind = doc.get('type')
    if kind not in MATROID_TYPES:
        raise FormatError('unknown matroid type {!r}'.format(kind))
    _reject_floats(doc)

    required = {'uniform': {'type', 'rank', 'ground'},
                'graphic': {'type', 'vertices', 'edges'},
                'gf2': {'type', 'columns'},
                'free': {'type', 'ground'},
                'explicit': {'type', 'ground', 'independent'}}[kind]
    if set(doc) != required:
        raise FormatError('{} matroid requires exactly the keys {}'.format(kind, sorted(required)))

    if kind == 'uniform':
        _check_labels(doc['ground'], 'ground')
        _check_int(doc['rank'], 'rank')
        if not 0 <= doc['rank'] <= len(doc['ground']):
            raise FormatError('rank {} out of range'.format(doc['rank']))

    elif kind == 'graphic':
        _check_int(doc['vertices'], 'vertices')
        if doc['vertices'] < 0:
            raise FormatError('vertices must be non-negative')
        edges = doc['edges']
        if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 3 for e in edges):
            raise FormatError('edges must be a list of [u, v, label] triples')
        for u, v, _ in edges:
            for w in (u, v):
                _check_int(w, 'edge endpoint')
                if not 0 <= w < doc['vertices']:
                    raise FormatError('edge endpoint {} out of range'.format(w))
        _check_labels([e[2] for e in edges], 'edge labels')

    elif kind == 'gf2':
        columns = doc['columns']
        if not isinstance(columns, dict):
            raise FormatError('columns must be a JSON object')
        lengths = set()
        for label, bits in columns.items():
            if not isinstance(bits, list) or any(b not in (0, 1) or isinstance(b, bool) for b in bits):
                raise FormatError('column {!r} must be a list of bits'.format(label))
            lengths.add(len(bits))
        if len(lengths) > 1:
            raise FormatError('columns have different lengths')

    elif kind == 'free':
        _check_labels(doc['ground'], 'ground')

    else:
        _check_labels(doc['ground'], 'ground')
        if not isinstance(doc['independent'], list):
            raise FormatError('independent must be a list of label lists')
        ground = set(doc['ground'])
        for s in doc['independent']:
            if (not isinstance(s, list) or not all(isinstance(x, (str, int)) for x in s)
                    or not set(s) <= ground):
                raise FormatError('independent set {!r} is not a subset of ground'.format(s))

    return doc
