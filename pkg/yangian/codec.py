"""
JSON wire format: every scalar travels as an exact rational string
"""

import json
from typing import Dict, List, Sequence, Union

from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import CoercionFailed

from yangian.action import ModuleSpace
from yangian.errors import WeightError, YangianError
from yangian.gt import GlnModule, GTPattern, generator, weyl_dimension
from yangian.linalg import format_rational, to_rational, vector_entries
from yangian.weights import HighestWeight


class ExactJSONEncoder(json.JSONEncoder):
    """Serializes QQ scalars as strings and dataclass-like values via encode_*"""

    def default(self, obj):
        if isinstance(obj, HighestWeight):
            return encode_weight(obj)
        if isinstance(obj, GTPattern):
            return encode_pattern(obj)
        if isinstance(obj, DomainMatrix):
            return encode_matrix(obj)
        try:
            return format_rational(obj)
        except (YangianError, CoercionFailed, TypeError):
            return super().default(obj)


def dumps(doc) -> str:
    return json.dumps(doc, cls=ExactJSONEncoder, indent=2, ensure_ascii=False)


def encode_weight(w: HighestWeight) -> Dict:
    out = {'w': [format_rational(x) for x in w.entries]}
    if w.eval_param:
        out['eval'] = format_rational(w.eval_param)
    return out


def decode_weight(obj: Union[Dict, Sequence]) -> HighestWeight:
    """Accepts {"w": [...], "eval": "..."} or a bare list of entries"""
    if isinstance(obj, dict):
        if 'w' not in obj:
            raise WeightError("weight object needs a 'w' field")
        return HighestWeight(tuple(obj['w']), obj.get('eval', 0))
    if isinstance(obj, (list, tuple)):
        return HighestWeight(tuple(obj))
    raise WeightError(f"cannot read a weight from {obj!r}")


def encode_pattern(p: GTPattern) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in p.rows]


def decode_pattern(rows: Sequence[Sequence]) -> GTPattern:
    pattern = GTPattern(tuple(tuple(to_rational(x) for x in row) for row in rows))
    if [len(row) for row in pattern.rows] != list(range(pattern.n, 0, -1)) or not pattern.is_valid():
        raise WeightError("not a Gelfand-Tsetlin pattern")
    return pattern


def encode_matrix(m: DomainMatrix) -> Dict:
    entries = [
        [i, j, format_rational(x)]
        for i, row in sorted(m.to_dod().items())
        for j, x in sorted(row.items())
    ]
    return {'shape': list(m.shape), 'entries': entries}


def encode_vector(space: ModuleSpace, v: DomainMatrix) -> List[Dict]:
    """Nonzero coordinates with the GT patterns of every factor"""
    out = []
    for idx, x in sorted(vector_entries(v).items()):
        out.append({
            'basis': list(space.positions(idx)),
            'patterns': [encode_pattern(p) for p in space.patterns(idx)],
            'coeff': format_rational(x),
        })
    return out


def module_info(mod: GlnModule, with_generators: bool = True) -> Dict:
    info = {
        'weight': encode_weight(mod.weight),
        'dim': mod.dim,
        'weyl_dimension': weyl_dimension(mod.weight),
        'patterns': [encode_pattern(p) for p in mod.patterns],
    }
    if with_generators:
        info['generators'] = {
            f"E{i},{j}": encode_matrix(generator(mod, i, j))
            for i in range(1, mod.n + 1)
            for j in range(1, mod.n + 1)
        }
    return info
