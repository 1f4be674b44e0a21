"""JSON codecs of the spaces, functions, maps, presentations and reports

Output is always JSON with sorted keys and compact separators, so equal
objects give byte-identical text. Input files are read with the YAML loader
(`pipeline.read_yaml_config`), which also accepts JSON. Rationals are written
as 'p/q' strings.

Function JSON on a single full Cantor component is the short form

    {"component": "X", "cells": [{"word": "01", "value": 1}, ...]}

and every other function carries its space: {"space": ..., "parts": [...]}.
"""

__all__ = ['dumps',
           'load_json_file',
           'space_to_json',
           'space_from_json',
           'cylinder_to_json',
           'cylinder_from_json',
           'function_to_json',
           'function_from_json',
           'map_to_json',
           'map_from_json',
           'presentation_to_json',
           'presentation_from_json',
           'homology_report_to_json',
           'snf_to_json',
           'comparison_to_json',
           'realization_report_to_json',
           'barycentric_to_json',
           'barycentric_from_json',
           'finseq_to_json',
           'finseq_from_json']

import json
import logging

from moore_utils import zfun
from moore_utils.cantor import CantorComponent, Cylinder, DiscreteComponent, \
    Space, cantor_space
from moore_utils.maps import LocalHomeo, PrefixChart
from moore_utils.chain_complex import SimplicialPresentation
from moore_utils.realization import BarycentricPoint, FinSeqPoint
from moore_utils.misc import fraction_to_string, string_to_fraction
from moore_utils.pipeline import read_yaml_config
from moore_utils.errors import ParseError

# ===Import globals
from moore_utils.globals import _CANTOR_KIND, _DISCRETE_KIND

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def dumps(obj):
    """Canonical JSON text
    """
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def load_json_file(path):
    """Parsed content of a JSON (or YAML) input file
    """
    content = read_yaml_config(path)

    if content is None:
        raise ParseError("Empty input file '{0:s}'".format(path))

    return content


def _field(obj, key, expected_type=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError("Missing field '{0:s}' in {1:s}".format(
            key, str(obj)))

    value = obj[key]

    if expected_type is not None and (not isinstance(value, expected_type)
                                      or isinstance(value, bool)):
        raise ParseError("Field '{0:s}' has the wrong type: {1:s}".format(
            key, str(value)))

    return value


def space_to_json(space):
    components = []

    for c in space.components:
        if c.kind == _DISCRETE_KIND:
            components.append({'name': c.name, 'kind': _DISCRETE_KIND,
                               'size': c.size})
        else:
            components.append({'name': c.name, 'kind': _CANTOR_KIND,
                               'restriction': list(c.restriction)})

    return {'components': components}


def space_from_json(obj):
    """Space from its JSON; a bare string names a full Cantor component
    """
    if isinstance(obj, str):
        return cantor_space(obj)

    components = []

    for c in _field(obj, 'components', list):
        name = _field(c, 'name', str)
        kind = c.get('kind', _CANTOR_KIND) if isinstance(c, dict) else None

        if kind == _DISCRETE_KIND:
            components.append(DiscreteComponent(name, _field(c, 'size', int)))
        elif kind == _CANTOR_KIND:
            restriction = c.get('restriction', [''])
            if not isinstance(restriction, list):
                raise ParseError('A restriction is a list of words')
            components.append(CantorComponent(name, tuple(restriction)))
        else:
            raise ParseError("Unknown component kind '{0:s}'".format(
                str(kind)))

    return Space(tuple(components))


def cylinder_to_json(cylinder):
    return {'component': cylinder.component, 'word': cylinder.word}


def cylinder_from_json(obj):
    word = _field(obj, 'word')

    if isinstance(word, bool) or not isinstance(word, (str, int)):
        raise ParseError('Invalid word: {0:s}'.format(str(word)))

    return Cylinder(_field(obj, 'component', str), word)


def _is_short_form_space(space):
    return len(space.components) == 1 and \
        space.components[0].kind == _CANTOR_KIND and \
        space.components[0].restriction == ('',)


def _cells_to_json(cells):
    return [{'word': cell, 'value': value} for cell, value in cells]


def _cells_from_json(component, cells):
    if not isinstance(cells, list):
        raise ParseError('Cells have to be a list')

    return [(cylinder_from_json({'component': component,
                                 'word': _field(c, 'word')}),
             _field(c, 'value', int)) for c in cells]


def function_to_json(f):
    if _is_short_form_space(f.space):
        name = f.space.components[0].name
        return {'component': name, 'cells': _cells_to_json(f.cells(name))}

    return {'space': space_to_json(f.space),
            'parts': [{'component': name, 'cells': _cells_to_json(cells)}
                      for name, cells in f.parts]}


def function_from_json(obj, space=None):
    """LocIntFun from its JSON

    Parameters
    ----------
    obj: dict
        Parsed JSON

    space: Space, optional
        Expected space; a mismatch is a ParseError

    Returns
    -------
    LocIntFun (canonical, so overlapping input cells are summed)

    """
    if isinstance(obj, dict) and 'component' in obj:
        name = _field(obj, 'component', str)
        parsed_space = cantor_space(name)
        cells = _cells_from_json(name, _field(obj, 'cells'))
    else:
        parsed_space = space_from_json(_field(obj, 'space'))
        cells = []
        for part in _field(obj, 'parts', list):
            cells.extend(_cells_from_json(_field(part, 'component', str),
                                          _field(part, 'cells')))

    if space is not None and space != parsed_space:
        raise ParseError('The function does not live on the expected space')

    return zfun.make(parsed_space, cells)


def _chart_to_json(chart):
    return {'src': cylinder_to_json(chart.source),
            'dst': cylinder_to_json(chart.target)}


def _charts_from_json(charts):
    if not isinstance(charts, list):
        raise ParseError('Charts have to be a list')

    return tuple(PrefixChart(cylinder_from_json(_field(c, 'src')),
                             cylinder_from_json(_field(c, 'dst')))
                 for c in charts)


def map_to_json(p):
    return {'domain': space_to_json(p.domain),
            'codomain': space_to_json(p.codomain),
            'charts': [_chart_to_json(c) for c in p.charts]}


def map_from_json(obj, domain=None, codomain=None):
    """LocalHomeo from its JSON, not validated

    domain and codomain are taken from the JSON if present, from the
    arguments otherwise.
    """
    if isinstance(obj, dict) and 'domain' in obj:
        domain = space_from_json(obj['domain'])
    if isinstance(obj, dict) and 'codomain' in obj:
        codomain = space_from_json(obj['codomain'])

    if domain is None or codomain is None:
        raise ParseError('A map needs a domain and a codomain')

    return LocalHomeo(domain, codomain, _charts_from_json(_field(obj,
                                                                 'charts')))


def presentation_to_json(P):
    return {'name': P.name,
            'maxLevel': P.max_level,
            'levels': [space_to_json(level) for level in P.levels],
            'faces': [[{'charts': [_chart_to_json(c) for c in d.charts]}
                       for d in level_faces]
                      for level_faces in P.faces]}


def presentation_from_json(obj):
    """SimplicialPresentation from its JSON; the face maps may leave out their
    domain and codomain, which are then the adjacent levels
    """
    max_level = _field(obj, 'maxLevel', int)
    levels = [space_from_json(level) for level in _field(obj, 'levels', list)]
    faces = _field(obj, 'faces', list)

    if len(levels) != max_level + 1 or len(faces) != max_level:
        raise ParseError(
            'maxLevel {0:d} needs {1:d} levels and {0:d} face lists'.format(
                max_level, max_level + 1))

    face_maps = []

    for n, level_faces in enumerate(faces, start=1):
        if not isinstance(level_faces, list):
            raise ParseError('Faces of level {0:d} are not a list'.format(n))
        face_maps.append(tuple(map_from_json(d, levels[n], levels[n - 1])
                               for d in level_faces))

    return SimplicialPresentation(max_level, tuple(levels), tuple(face_maps),
                                  str(obj.get('name', 'custom')))


def homology_report_to_json(report):
    return {'presentation': report.presentation,
            'groups': [{'level': e.level, 'depth': e.depth,
                        'rank': e.group.rank,
                        'torsion': list(e.group.torsion)}
                       for e in report.entries],
            'stable': {str(n): flag for n, flag in report.stable.items()}}


def snf_to_json(matrix, result, transforms=False):
    obj = {'shape': [matrix.rows, matrix.cols],
           'divisors': list(result.divisors),
           'rank': result.rank,
           'torsion': list(result.torsion)}

    if transforms:
        obj['U'] = result.U.to_rows()
        obj['V'] = result.V.to_rows()

    return obj


def comparison_to_json(report):
    return {'parameters': dict(report.parameters),
            'moore': dict(report.moore),
            'singular': dict(report.singular),
            'verdict': report.verdict.value,
            'reason': report.reason,
            'witnesses': [{'name': w.name, 'passed': w.passed,
                           'detail': w.detail} for w in report.witnesses]}


def realization_report_to_json(report):
    return {'samples': report.samples,
            'seed': report.seed,
            'passed': report.passed,
            'properties': [{'name': r.name, 'passed': r.passed,
                            'failed': r.failed, 'witness': r.witness}
                           for r in report.results]}


def barycentric_to_json(t):
    return [fraction_to_string(c) for c in t.coords]


def barycentric_from_json(obj):
    if not isinstance(obj, list) or len(obj) == 0:
        raise ParseError('A simplex point is a nonempty list of rationals')

    return BarycentricPoint(len(obj) - 1,
                            tuple(string_to_fraction(c) for c in obj))


def finseq_to_json(a):
    return [[k, fraction_to_string(v)] for k, v in a.entries]


def finseq_from_json(obj):
    try:
        return FinSeqPoint(tuple((int(k), string_to_fraction(v))
                                 for k, v in obj))
    except (TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError('Invalid sequence point: {0:s}'.format(str(obj)))


# === MAIN ===
if __name__ == "__main__":
    pass
