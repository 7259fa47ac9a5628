"""
Gelfand-Tsetlin patterns and the gl_n generator matrices in the GT basis
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from yangian.errors import IndexRangeError
from yangian.linalg import as_int, commutator, sparse_matrix, to_rational
from yangian.weights import HighestWeight, WeightVector, content_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GTPattern:
    """Triangular array, top row Λ_n first and bottom row Λ_1 last"""

    rows: Tuple[Tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(to_rational(x) for x in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, r: int) -> Tuple:
        """Λ_r, the row of length r"""
        return self.rows[self.n - r]

    def entry(self, r: int, i: int):
        return self.row(r)[i - 1]

    def content(self, r: int, i: int):
        """l_{ri} = λ_{ri} - i + 1"""
        return self.entry(r, i) - i + 1

    def contents(self, r: int) -> Tuple:
        return tuple(x - i for i, x in enumerate(self.row(r)))

    def is_valid(self) -> bool:
        for r in range(2, self.n + 1):
            upper, lower = self.row(r), self.row(r - 1)
            for i, x in enumerate(lower):
                a, b = upper[i] - x, x - upper[i + 1]
                if a < 0 or b < 0 or QQ.denom(a) != 1:
                    return False
        return True

    def _moved(self, m: int, j: int, delta: int) -> Optional['GTPattern']:
        if not 1 <= m < self.n or not 1 <= j <= m:
            raise IndexRangeError(f"no entry λ_{{{m},{j}}} below the top row of a rank {self.n} pattern")
        rows = [list(row) for row in self.rows]
        rows[self.n - m][j - 1] += delta
        moved = GTPattern(tuple(tuple(row) for row in rows))
        return moved if moved.is_valid() else None

    def increment(self, m: int, j: int) -> Optional['GTPattern']:
        """Λ + δ_{mj}, or None when that is not a pattern"""
        return self._moved(m, j, 1)

    def decrement(self, m: int, j: int) -> Optional['GTPattern']:
        """Λ - δ_{mj}, or None when that is not a pattern"""
        return self._moved(m, j, -1)


def _sub_rows(row: Tuple):
    """All rows interlacing ``row`` from below"""
    ranges = [
        [row[i + 1] + k for k in range(as_int(row[i] - row[i + 1]) + 1)]
        for i in range(len(row) - 1)
    ]
    return product(*ranges)


def enumerate_patterns(w: HighestWeight) -> List[GTPattern]:
    """All GT patterns with top row λ, highest pattern first"""
    results = []

    def extend(rows):
        if len(rows[-1]) == 1:
            results.append(GTPattern(tuple(rows)))
            return
        for sub in _sub_rows(rows[-1]):
            extend(rows + [tuple(sub)])

    extend([w.entries])
    results.sort(key=lambda p: [x for row in p.rows for x in row], reverse=True)
    return results


def pattern_weight(p: GTPattern) -> WeightVector:
    """w_k = |Λ_k| - |Λ_{k-1}|"""
    sums = [QQ.zero] + [sum(p.row(r), QQ.zero) for r in range(1, p.n + 1)]
    return WeightVector(tuple(sums[k] - sums[k - 1] for k in range(1, p.n + 1)))


def weyl_dimension(w: HighestWeight) -> int:
    l = content_set(w).contents
    value = QQ.one
    for i in range(len(l)):
        for j in range(i + 1, len(l)):
            value *= (l[i] - l[j]) / QQ(j - i)
    return as_int(value)


class GlnModule:
    """The irreducible gl_n-module L(λ) in its GT basis"""

    def __init__(self, weight: HighestWeight):
        self.weight = HighestWeight(weight.entries)
        self.patterns: Tuple[GTPattern, ...] = tuple(enumerate_patterns(self.weight))
        self.index: Dict[GTPattern, int] = {p: k for k, p in enumerate(self.patterns)}
        self._generators: Dict[Tuple[int, int], DomainMatrix] = {}
        logger.debug("built L%s with %d patterns", self.weight, len(self.patterns))

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def dim(self) -> int:
        return len(self.patterns)

    @property
    def highest(self) -> GTPattern:
        return self.patterns[0]

    @cached_property
    def weights(self) -> Tuple[Tuple, ...]:
        return tuple(pattern_weight(p).coords for p in self.patterns)

    def generator(self, i: int, j: int) -> DomainMatrix:
        return generator(self, i, j)

    def __repr__(self):
        return f"GlnModule({self.weight}, dim={self.dim})"


def _check_simple(mod: GlnModule, m: int):
    if not 1 <= m <= mod.n - 1:
        raise IndexRangeError(f"simple root index {m} outside 1..{mod.n - 1}")


def raising_matrix(mod: GlnModule, m: int) -> DomainMatrix:
    """E_{m,m+1}"""
    _check_simple(mod, m)
    entries: Dict[int, Dict[int, object]] = {}
    for col, p in enumerate(mod.patterns):
        upper, row = p.contents(m + 1), p.contents(m)
        for j in range(1, m + 1):
            target = p.increment(m, j)
            if target is None:
                continue
            l = row[j - 1]
            num = math.prod((x - l for x in upper), start=QQ.one)
            den = math.prod((row[i] - l for i in range(m) if i != j - 1), start=QQ.one)
            entries.setdefault(mod.index[target], {})[col] = -num / den
    return sparse_matrix(entries, (mod.dim, mod.dim))


def lowering_matrix(mod: GlnModule, m: int) -> DomainMatrix:
    """E_{m+1,m}"""
    _check_simple(mod, m)
    entries: Dict[int, Dict[int, object]] = {}
    for col, p in enumerate(mod.patterns):
        lower = p.contents(m - 1) if m > 1 else ()
        row = p.contents(m)
        for j in range(1, m + 1):
            target = p.decrement(m, j)
            if target is None:
                continue
            l = row[j - 1]
            num = math.prod((l - x for x in lower), start=QQ.one)
            den = math.prod((l - row[i] for i in range(m) if i != j - 1), start=QQ.one)
            entries.setdefault(mod.index[target], {})[col] = num / den
    return sparse_matrix(entries, (mod.dim, mod.dim))


def cartan_matrix(mod: GlnModule, i: int) -> DomainMatrix:
    """E_{ii}, diagonal with the i-th weight coordinate"""
    if not 1 <= i <= mod.n:
        raise IndexRangeError(f"index {i} outside 1..{mod.n}")
    return sparse_matrix({k: {k: w[i - 1]} for k, w in enumerate(mod.weights)}, (mod.dim, mod.dim))


def generator(mod: GlnModule, i: int, j: int) -> DomainMatrix:
    """E_{ij}; non-simple ones are nested commutators of simple ones"""
    key = (i, j)
    if key in mod._generators:
        return mod._generators[key]
    if not (1 <= i <= mod.n and 1 <= j <= mod.n):
        raise IndexRangeError(f"E_{{{i},{j}}} outside gl_{mod.n}")

    if i == j:
        matrix = cartan_matrix(mod, i)
    elif j == i + 1:
        matrix = raising_matrix(mod, i)
    elif i == j + 1:
        matrix = lowering_matrix(mod, j)
    elif i < j:
        matrix = commutator(generator(mod, i, j - 1), generator(mod, j - 1, j))
    else:
        matrix = commutator(generator(mod, i, i - 1), generator(mod, i - 1, j))

    mod._generators[key] = matrix
    return matrix
