"""
Criterion-vs-oracle cross validation over a grid of tensor products
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config
from yangian.errors import ResourceCapError, YangianError
from yangian.gt import weyl_dimension
from yangian.linalg import format_rational, to_rational
from yangian.oracle import decide_weights, tensor_dimension
from yangian.weights import HighestWeight, failing_pairs, multi_irreducible, normalize_evaluation

logger = logging.getLogger(__name__)

Case = Tuple[Tuple[Tuple[str, ...], str], ...]


class GridSpec(BaseModel):
    """Validation grid file"""

    model_config = ConfigDict(extra='forbid')

    n: int = Field(ge=1, le=4)
    min_entry: int = 0
    max_entry: int = Field(default=2, ge=0)
    max_span: Optional[int] = Field(default=None, ge=0)
    fix_last: bool = False
    weights: Optional[List[List[str]]] = None
    shifts: List[str] = Field(default_factory=lambda: ["0"])
    factors: int = Field(default=2, ge=1, le=4)
    ordered: bool = True
    dedupe: bool = True
    check_binary: bool = False
    check_permutation: bool = False
    cap: Optional[int] = Field(default=None, ge=1)

    @field_validator('weights', mode='before')
    @classmethod
    def _stringify_weights(cls, value):
        if value is None:
            return value
        return [[str(x) for x in w] for w in value]

    @field_validator('shifts', mode='before')
    @classmethod
    def _stringify_shifts(cls, value):
        return [str(x) for x in value]

    @model_validator(mode='after')
    def _check_weights(self):
        for w in self.weights or []:
            if len(w) != self.n:
                raise ValueError(f"weight {w} does not have {self.n} entries")
        return self


def dominant_weights(spec: GridSpec) -> List[HighestWeight]:
    """All dominant integer weights inside the grid bounds, or the explicit list"""
    if spec.weights is not None:
        return [HighestWeight(tuple(w)) for w in spec.weights]
    found = []
    for entries in product(range(spec.max_entry, spec.min_entry - 1, -1), repeat=spec.n):
        if any(a < b for a, b in zip(entries, entries[1:])):
            continue
        if spec.fix_last and entries[-1] != 0:
            continue
        if spec.max_span is not None and entries[0] - entries[-1] > spec.max_span:
            continue
        found.append(HighestWeight(entries))
    return found


def _translation_key(weights: Sequence[HighestWeight]) -> Tuple:
    normalized = [normalize_evaluation(w).entries for w in weights]
    ref = normalized[0][0]
    return tuple(tuple(x - ref for x in entries) for entries in normalized)


def expand_grid(spec: GridSpec) -> List[Case]:
    """Tensor products to test, each factor as (entries, evaluation parameter)"""
    shifts = [to_rational(s) for s in spec.shifts]
    factors = [
        HighestWeight(w.entries, s)
        for w in dominant_weights(spec)
        for s in shifts
    ]
    if spec.ordered:
        combos = product(factors, repeat=spec.factors)
    else:
        combos = combinations_with_replacement(factors, spec.factors)

    seen = set()
    cases = []
    for combo in combos:
        if spec.dedupe:
            key = _translation_key(combo)
            if key in seen:
                continue
            seen.add(key)
        cases.append(tuple(
            (tuple(format_rational(x) for x in w.entries), format_rational(w.eval_param))
            for w in combo
        ))
    return cases


def case_weights(case: Case) -> List[HighestWeight]:
    return [HighestWeight(entries, a) for entries, a in case]


def run_case(case: Case, options: Dict) -> Dict:
    """Oracle and criterion on one tensor product; never raises"""
    started = time.perf_counter()
    record = {
        'weights': [list(entries) for entries, _ in case],
        'shifts': [a for _, a in case],
    }
    try:
        weights = case_weights(case)
        cap = options.get('cap')
        criterion = multi_irreducible(weights)
        verdict = decide_weights(weights, cap)
        record.update({
            'status': 'success',
            'criterion': criterion,
            'oracle': verdict.irreducible,
            'agree': criterion == verdict.irreducible,
            'dims': [weyl_dimension(w) for w in weights],
            'dim': verdict.dim,
            'singular_dim': verdict.singular_dim,
            'cyclic': verdict.cyclic,
            'closure_dim': verdict.closure_dim,
            'failing_pairs': [list(pq) for pq in failing_pairs(weights)],
        })
        if options.get('check_binary') and len(weights) >= 3:
            pair_verdicts = {
                f"{p},{q}": decide_weights([weights[p], weights[q]], cap).irreducible
                for p in range(len(weights)) for q in range(p + 1, len(weights))
            }
            record['pair_oracle'] = pair_verdicts
            record['binary_ok'] = verdict.irreducible == all(pair_verdicts.values())
        if options.get('check_permutation') and len(weights) >= 2:
            reversed_verdict = decide_weights(list(reversed(weights)), cap)
            record['permutation_ok'] = reversed_verdict.irreducible == verdict.irreducible
    except YangianError as e:
        record.update({'status': 'error', 'error': str(e), 'kind': type(e).__name__})
    record['timing'] = round(time.perf_counter() - started, 4)
    return record


def summarize(cases: List[Dict]) -> Dict:
    """Digest of a finished grid"""
    done = [c for c in cases if c.get('status') == 'success']
    mismatches = [c for c in done if not c['agree']]
    summary = {
        'cases': len(cases),
        'completed': len(done),
        'errors': len(cases) - len(done),
        'agreements': len(done) - len(mismatches),
        'mismatches': len(mismatches),
        'irreducible': len([c for c in done if c['oracle']]),
        'reducible': len([c for c in done if not c['oracle']]),
        'binary_failures': len([c for c in done if c.get('binary_ok') is False]),
        'permutation_failures': len([c for c in done if c.get('permutation_ok') is False]),
        'max_dim': max((c['dim'] for c in done), default=0),
        'total_time': round(sum(c.get('timing', 0) for c in cases), 3),
        'mismatch_cases': mismatches,
    }
    return summary


def has_failures(summary: Dict) -> bool:
    return any(summary.get(key) for key in ('mismatches', 'binary_failures', 'permutation_failures'))


def cross_validate(spec: GridSpec, workers: Optional[int] = None, cap: Optional[int] = None) -> Dict:
    """
    Run every grid case through the criterion and the oracle.

    Refuses the whole grid with ResourceCapError when any tensor product is
    larger than the cap.
    """
    cap = cap or spec.cap or config.DIMENSION_CAP
    workers = workers or config.DEFAULT_WORKERS
    cases = expand_grid(spec)

    largest = max((tensor_dimension(case_weights(c)) for c in cases), default=0)
    if largest > cap:
        raise ResourceCapError(largest, cap)

    logger.info("validating %d cases (largest dimension %d) on %d workers", len(cases), largest, workers)
    options = {'cap': cap, 'check_binary': spec.check_binary, 'check_permutation': spec.check_permutation}
    started = datetime.now()

    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_case, cases, [options] * len(cases), chunksize=max(1, len(cases) // (4 * workers))))
    else:
        records = [run_case(case, options) for case in cases]

    summary = summarize(records)
    logger.info("validation finished: %d cases, %d mismatches, %d errors",
                summary['cases'], summary['mismatches'], summary['errors'])
    return {
        'grid': spec.model_dump(),
        'started_at': started.isoformat(),
        'largest_dim': largest,
        'summary': summary,
        'cases': records,
    }
