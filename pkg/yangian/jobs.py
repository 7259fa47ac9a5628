"""
Job specs and the dispatcher shared by the CLI and the web API.

``run`` returns ``(exit_code, document)``; errors become
``{"status": "error", "error": ..., "kind": ...}`` documents.
"""

import logging
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from sympy.polys.matrices import DomainMatrix

import config
from yangian import codec, storage
from yangian.action import (
    ModuleSpace,
    drinfeld_generators,
    lowering_tau,
    quantum_minor,
    raising_tau,
    series_coefficient,
    tau_product,
    tensor_operator,
)
from yangian.errors import DimensionError, IndexRangeError, ResourceCapError, WeightError, YangianError
from yangian.gt import GlnModule
from yangian.harness import GridSpec, cross_validate, has_failures
from yangian.linalg import PolyMatrix
from yangian.oracle import check_cap, decide
from yangian.weights import HighestWeight, failing_pairs, multi_irreducible
from yangian.witness import build_witness

logger = logging.getLogger(__name__)

COMMANDS = ('criterion', 'oracle', 'witness', 'validate', 'gt-info', 'act')

Scalar = Union[int, str]


class FactorModel(BaseModel):
    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    w: List[Scalar] = Field(min_length=1)
    eval_param: Scalar = Field(default="0", alias='eval')

    def to_weight(self) -> HighestWeight:
        return codec.decode_weight({'w': list(self.w), 'eval': self.eval_param})


class FactorsPayload(BaseModel):
    model_config = ConfigDict(extra='forbid')

    factors: List[FactorModel] = Field(min_length=1)

    def weights(self) -> List[HighestWeight]:
        return [f.to_weight() for f in self.factors]


class OraclePayload(FactorsPayload):
    cap: Optional[int] = Field(default=None, ge=1)


class WitnessPayload(BaseModel):
    model_config = ConfigDict(extra='forbid')

    lam: FactorModel
    mu: FactorModel


class GTInfoPayload(FactorModel):
    generators: bool = True


class OperatorModel(BaseModel):
    model_config = ConfigDict(extra='forbid')

    kind: Literal['t', 'a', 'b', 'c', 'minor', 'tau', 'raising_tau', 'tau_product']
    i: Optional[int] = None
    j: Optional[int] = None
    r: Optional[int] = None
    m: Optional[int] = None
    a: Optional[int] = None
    rows: Optional[List[int]] = None
    cols: Optional[List[int]] = None
    u: Optional[Scalar] = None
    v: Optional[Scalar] = None
    k: Optional[int] = Field(default=None, ge=0)
    derivative: bool = False


class BasisRef(BaseModel):
    model_config = ConfigDict(extra='forbid')

    basis: List[int]


class PatternRef(BaseModel):
    model_config = ConfigDict(extra='forbid')

    patterns: List[List[List[Scalar]]]


class ActPayload(FactorsPayload):
    operator: OperatorModel
    vector: Union[Literal['zeta'], BasisRef, PatternRef] = 'zeta'


class JobSpec(BaseModel):
    model_config = ConfigDict(extra='forbid')

    command: Literal['criterion', 'oracle', 'witness', 'validate', 'gt-info', 'act']
    payload: Dict[str, Any]

    @field_validator('payload', mode='before')
    @classmethod
    def _payload_object(cls, value):
        if not isinstance(value, dict):
            raise ValueError("payload must be a JSON object")
        return value


def _error(kind: str, message: str) -> Dict:
    return {'status': 'error', 'error': message, 'kind': kind}


# Command handlers

def run_criterion(payload: FactorsPayload, **_) -> Tuple[int, Dict]:
    weights = payload.weights()
    return config.EXIT_OK, {
        'irreducible': multi_irreducible(weights),
        'failing_pairs': [list(pq) for pq in failing_pairs(weights)],
    }


def run_oracle(payload: OraclePayload, cap: Optional[int] = None, **_) -> Tuple[int, Dict]:
    weights = payload.weights()
    check_cap(weights, payload.cap or cap)
    verdict = decide(ModuleSpace.from_weights(weights))
    return config.EXIT_OK, verdict.to_dict()


def run_witness(payload: WitnessPayload, cap: Optional[int] = None, **_) -> Tuple[int, Dict]:
    lam, mu = payload.lam.to_weight(), payload.mu.to_weight()
    check_cap([lam, mu], cap)
    report = build_witness(lam, mu)
    return config.EXIT_OK, {
        'lam': codec.encode_weight(report.lam),
        'mu': codec.encode_weight(report.mu),
        'swapped': report.swapped,
        'p': report.p,
        'q': report.q,
        'k_list': report.k_list,
        'lone': report.lone,
        'theta': codec.encode_vector(report.space, report.theta),
        'theta_nonzero': report.theta_nonzero,
        'theta_in_cyclic_span': report.theta_in_cyclic_span,
        'theta_closure_proper': report.theta_closure_proper,
        'dim': report.dim,
        'cyclic_dim': report.cyclic_dim,
        'theta_closure_dim': report.theta_closure_dim,
    }


def run_gt_info(payload: GTInfoPayload, cap: Optional[int] = None, **_) -> Tuple[int, Dict]:
    weight = payload.to_weight()
    check_cap([weight], cap)
    return config.EXIT_OK, codec.module_info(GlnModule(weight), payload.generators)


def _require(op: OperatorModel, *names: str):
    missing = [name for name in names if getattr(op, name) is None]
    if missing:
        raise IndexRangeError(f"operator '{op.kind}' needs {', '.join(missing)}")


def _polynomial_operator(space: ModuleSpace, op: OperatorModel) -> PolyMatrix:
    if op.kind == 't':
        _require(op, 'i', 'j')
        return tensor_operator(space, op.i, op.j)
    if op.kind in ('a', 'b', 'c'):
        _require(op, 'm')
        a_m, b_m, c_m = drinfeld_generators(space, op.m)
        chosen = {'a': a_m, 'b': b_m, 'c': c_m}[op.kind]
        if chosen is None:
            raise IndexRangeError(f"{op.kind}_m needs m <= n - 1")
        return chosen
    if op.kind == 'minor':
        _require(op, 'rows', 'cols')
        return quantum_minor(space, op.rows, op.cols)
    if op.kind == 'tau':
        _require(op, 'r', 'a')
        return lowering_tau(space, op.r, op.a)
    _require(op, 'a', 'r')
    return raising_tau(space, op.a, op.r)


def _resolve_vector(space: ModuleSpace, ref) -> DomainMatrix:
    if ref == 'zeta':
        return space.zeta
    if isinstance(ref, BasisRef):
        return space.vector(ref.basis)
    if len(ref.patterns) != space.k:
        raise DimensionError(f"need {space.k} patterns, got {len(ref.patterns)}")
    positions = []
    for (mod, _), rows in zip(space.factors, ref.patterns):
        pattern = codec.decode_pattern(rows)
        if pattern not in mod.patterns:
            raise WeightError(f"pattern {codec.encode_pattern(pattern)} is not in L{mod.weight}")
        positions.append(mod.patterns.index(pattern))
    return space.vector(positions)


def run_act(payload: ActPayload, cap: Optional[int] = None, **_) -> Tuple[int, Dict]:
    weights = payload.weights()
    check_cap(weights, cap)
    space = ModuleSpace.from_weights(weights)
    vector = _resolve_vector(space, payload.vector)
    op = payload.operator

    if op.kind == 'tau_product':
        _require(op, 'r', 'a', 'v', 'k')
        matrix = tau_product(space, op.r, op.a, str(op.v), op.k, op.derivative)
        return config.EXIT_OK, {'vector': codec.encode_vector(space, matrix.matmul(vector))}

    if op.kind == 't' and op.r is not None:
        _require(op, 'i', 'j')
        matrix = series_coefficient(space, op.i, op.j, op.r)
        return config.EXIT_OK, {'vector': codec.encode_vector(space, matrix.matmul(vector))}

    poly = _polynomial_operator(space, op)
    if op.u is not None:
        result = poly.evaluate(str(op.u)).matmul(vector)
        return config.EXIT_OK, {'vector': codec.encode_vector(space, result)}
    return config.EXIT_OK, {
        'coefficients': [codec.encode_vector(space, v) for v in poly.act(vector)],
    }


def run_validate(payload: GridSpec, cap: Optional[int] = None, workers: Optional[int] = None,
                 output: Optional[str] = None, **_) -> Tuple[int, Dict]:
    run = storage.create_validation_run(payload.model_dump())
    report = cross_validate(payload, workers=workers, cap=cap)
    run = storage.complete_validation_run(run, report, output)
    summary = dict(report['summary'])
    if run['status'] == 'error':
        logger.error("validation run %s: %s", run['id'], run['error'])
        return config.EXIT_DOMAIN_ERROR, dict(_error('OSError', run['error']), run_id=run['id'], summary=summary)
    code = config.EXIT_MISMATCH if has_failures(summary) else config.EXIT_OK
    return code, {
        'run_id': run['id'],
        'status': run['status'],
        'report_file': run['report_file'],
        'summary': summary,
    }


HANDLERS: Dict[str, Tuple[type, Callable]] = {
    'criterion': (FactorsPayload, run_criterion),
    'oracle': (OraclePayload, run_oracle),
    'witness': (WitnessPayload, run_witness),
    'validate': (GridSpec, run_validate),
    'gt-info': (GTInfoPayload, run_gt_info),
    'act': (ActPayload, run_act),
}


def run(spec: JobSpec, cap: Optional[int] = None, workers: Optional[int] = None,
        output: Optional[str] = None) -> Tuple[int, Dict]:
    """Validate the payload, then dispatch; never raises for domain errors"""
    model, handler = HANDLERS[spec.command]
    try:
        payload = model.model_validate(spec.payload)
    except ValidationError as e:
        logger.error("invalid %s payload: %s", spec.command, e)
        return config.EXIT_DOMAIN_ERROR, _error('ValidationError', str(e))

    try:
        return handler(payload, cap=cap, workers=workers, output=output)
    except ResourceCapError as e:
        logger.error("%s refused: %s", spec.command, e)
        return config.EXIT_CAP_REFUSED, dict(_error(type(e).__name__, str(e)), dim=e.dim, cap=e.cap)
    except YangianError as e:
        logger.error("%s failed: %s", spec.command, e)
        return config.EXIT_DOMAIN_ERROR, _error(type(e).__name__, str(e))


def run_command(command: str, payload: Any, **kwargs) -> Tuple[int, Dict]:
    """Build the JobSpec from raw JSON values and run it"""
    try:
        spec = JobSpec.model_validate({'command': command, 'payload': payload})
    except ValidationError as e:
        return config.EXIT_DOMAIN_ERROR, _error('ValidationError', str(e))
    return run(spec, **kwargs)
