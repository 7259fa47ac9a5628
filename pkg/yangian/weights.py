"""
Highest weights, content sets and the non-crossing irreducibility criterion
"""

import logging
from dataclasses import dataclass
from itertools import combinations, groupby
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ

from yangian.errors import IndexRangeError, WeightError, YangianError
from yangian.linalg import as_int, format_rational, is_integer, to_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    """Dominant gl_n weight with an evaluation parameter"""

    entries: Tuple
    eval_param: object = 0

    def __post_init__(self):
        try:
            entries = tuple(to_rational(x) for x in self.entries)
            eval_param = to_rational(self.eval_param)
        except YangianError as e:
            raise WeightError(str(e)) from e
        if not entries:
            raise WeightError("a highest weight needs at least one entry")
        for i in range(len(entries) - 1):
            gap = entries[i] - entries[i + 1]
            if not (is_integer(gap) and gap >= 0):
                raise WeightError(
                    f"not dominant: λ_{i + 1} - λ_{i + 2} = {format_rational(gap)} "
                    f"is not a non-negative integer"
                )
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'eval_param', eval_param)

    @classmethod
    def of(cls, *entries, a=0) -> 'HighestWeight':
        return cls(tuple(entries), a)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self):
        body = ",".join(format_rational(x) for x in self.entries)
        if self.eval_param:
            return f"({body})@{format_rational(self.eval_param)}"
        return f"({body})"


@dataclass(frozen=True)
class ContentSet:
    """Strictly decreasing contents l_i = λ_i - i + 1"""

    contents: Tuple

    def __post_init__(self):
        contents = tuple(to_rational(x) for x in self.contents)
        for a, b in zip(contents, contents[1:]):
            if not a > b:
                raise WeightError("contents must be strictly decreasing")
        object.__setattr__(self, 'contents', contents)

    def __len__(self):
        return len(self.contents)

    def __iter__(self):
        return iter(self.contents)

    def __getitem__(self, index):
        return self.contents[index]

    def as_set(self) -> FrozenSet:
        return frozenset(self.contents)


@dataclass(frozen=True)
class WeightVector:
    """Weight in the ε-basis"""

    coords: Tuple

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(to_rational(x) for x in self.coords))

    def __sub__(self, other: 'WeightVector') -> 'WeightVector':
        return WeightVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __add__(self, other: 'WeightVector') -> 'WeightVector':
        return WeightVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def precedes(self, other: 'WeightVector') -> bool:
        """
        self ⪯ other: other - self is a sum of simple roots ε_i - ε_{i+1}
        with non-negative integer coefficients, read off as partial sums.
        """
        if len(self.coords) != len(other.coords):
            raise WeightError("weights of different rank")
        diff = (other - self).coords
        total = QQ.zero
        for x in diff[:-1]:
            total += x
            if not (is_integer(total) and total >= 0):
                return False
        return total + diff[-1] == 0


def content_set(w: HighestWeight) -> ContentSet:
    return ContentSet(tuple(x - i for i, x in enumerate(w.entries)))


def is_crossing(a: Iterable, b: Iterable) -> bool:
    """True iff a_1 < b_1 < a_2 < b_2 or b_1 < a_1 < b_2 < a_2 for some elements"""
    a = {to_rational(x) for x in a}
    b = {to_rational(x) for x in b}
    if a & b:
        raise WeightError("crossing test needs disjoint sets")
    labels = [side for _, side in sorted([(x, 0) for x in a] + [(x, 1) for x in b])]
    runs = sum(1 for _ in groupby(labels))
    return runs >= 4


def interval_set(x, y, excluded: Iterable = ()) -> FrozenSet:
    """
    Integer-step chain strictly between x and y, minus ``excluded``.

    Empty unless y - x is a non-negative integer.
    """
    x, y = to_rational(x), to_rational(y)
    gap = y - x
    if not (is_integer(gap) and gap >= 0):
        return frozenset()
    skip = {to_rational(e) for e in excluded}
    chain = (x + k for k in range(1, as_int(gap)))
    return frozenset(c for c in chain if c not in skip)


def in_interval(z, x, y, excluded: Iterable = ()) -> bool:
    """z ∈ interval_set(x, y, excluded), without building the chain"""
    z, x, y = to_rational(z), to_rational(x), to_rational(y)
    if not (is_integer(z - x) and is_integer(y - x) and x < z < y):
        return False
    return all(z != to_rational(e) for e in excluded)


def _check_same_rank(lam: HighestWeight, mu: HighestWeight):
    if lam.n != mu.n:
        raise WeightError(f"weights of different rank: {lam.n} and {mu.n}")


def pairwise_condition(lam: HighestWeight, mu: HighestWeight, i: int, j: int) -> bool:
    """
    Interval condition for the index pair 1 <= i < j <= n.

    Holds when neither m_j nor m_i lies in ⟨l_j, l_i⟩, or neither l_j nor
    l_i lies in ⟨m_j, m_i⟩. The interval drops the intermediate contents
    l_{i+1}, ..., l_{j-1} as well as the endpoints.
    """
    _check_same_rank(lam, mu)
    if not 1 <= i < j <= lam.n:
        raise IndexRangeError(f"need 1 <= i < j <= {lam.n}, got i={i}, j={j}")
    l, m = content_set(lam), content_set(mu)
    l_skip, m_skip = l.contents[i:j - 1], m.contents[i:j - 1]
    if not any(in_interval(z, l[j - 1], l[i - 1], l_skip) for z in (m[j - 1], m[i - 1])):
        return True
    return not any(in_interval(z, m[j - 1], m[i - 1], m_skip) for z in (l[j - 1], l[i - 1]))


def normalize_evaluation(w: HighestWeight) -> HighestWeight:
    """L_a(λ) contributes like L(λ - a·I)"""
    if not w.eval_param:
        return w
    return HighestWeight(tuple(x - w.eval_param for x in w.entries), 0)


def shifted(w: HighestWeight, c) -> HighestWeight:
    """λ + c·I, evaluation parameter kept"""
    c = to_rational(c)
    return HighestWeight(tuple(x + c for x in w.entries), w.eval_param)


def pair_irreducible(lam: HighestWeight, mu: HighestWeight) -> bool:
    _check_same_rank(lam, mu)
    lam, mu = normalize_evaluation(lam), normalize_evaluation(mu)
    return all(
        pairwise_condition(lam, mu, i, j)
        for i, j in combinations(range(1, lam.n + 1), 2)
    )


def sets_noncrossing(lam: HighestWeight, mu: HighestWeight) -> bool:
    """Non-crossing of the content-set differences; needs integral λ_1 - μ_1"""
    _check_same_rank(lam, mu)
    lam, mu = normalize_evaluation(lam), normalize_evaluation(mu)
    if not is_integer(lam.entries[0] - mu.entries[0]):
        raise WeightError("set form of the criterion needs integral differences")
    a, b = content_set(lam).as_set(), content_set(mu).as_set()
    return not is_crossing(a - b, b - a)


def _check_factors(ws: Sequence[HighestWeight]):
    if not ws:
        raise WeightError("no tensor factors given")
    ranks = {w.n for w in ws}
    if len(ranks) > 1:
        raise WeightError(f"factors of different rank: {sorted(ranks)}")


def failing_pairs(ws: Sequence[HighestWeight]) -> List[Tuple[int, int]]:
    """0-based factor pairs (p, q), p < q, whose two-fold product is reducible"""
    _check_factors(ws)
    normalized = [normalize_evaluation(w) for w in ws]
    return [
        (p, q)
        for p, q in combinations(range(len(normalized)), 2)
        if not pair_irreducible(normalized[p], normalized[q])
    ]


def multi_irreducible(ws: Sequence[HighestWeight]) -> bool:
    result = not failing_pairs(ws)
    logger.debug("criterion on %s: %s", " ⊗ ".join(str(w) for w in ws), result)
    return result
