"""
Yangian action on tensor products of evaluation modules.

Every series is cleared of denominators: on a space with factors
L_{a_1}(λ^(1)) ⊗ ... ⊗ L_{a_k}(λ^(k)) the operator
T_ij(u) = (u - a_1)...(u - a_k) t_ij(u) is a polynomial matrix of degree k.
Quantum minors, Drinfeld generators and lowering operators are built from
these T_ij(u).
"""

import logging
import math
from functools import cached_property
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from yangian.errors import DimensionError, IndexRangeError
from yangian.gt import GlnModule, GTPattern, generator
from yangian.linalg import PolyMatrix, as_int, basis_vector, identity, to_rational, zero_matrix
from yangian.weights import HighestWeight

logger = logging.getLogger(__name__)


class ModuleSpace:
    """
    Tensor product of evaluation modules with a mixed-radix GT basis.

    Basis index of (Λ^(1), ..., Λ^(k)) is row-major in the factor pattern
    lists, so index 0 is ζ, the tensor product of the highest vectors.
    """

    def __init__(self, factors: Sequence[Tuple[GlnModule, object]]):
        if not factors:
            raise DimensionError("a module space needs at least one factor")
        self.factors: Tuple[Tuple[GlnModule, object], ...] = tuple(
            (mod, to_rational(a)) for mod, a in factors
        )
        ranks = {mod.n for mod, _ in self.factors}
        if len(ranks) != 1:
            raise DimensionError(f"factors of different rank: {sorted(ranks)}")
        self.n = ranks.pop()
        self.dims = tuple(mod.dim for mod, _ in self.factors)
        self.dim = math.prod(self.dims)
        self.strides = tuple(math.prod(self.dims[p + 1:]) for p in range(len(self.dims)))

    @classmethod
    def from_weights(cls, weights: Sequence[HighestWeight]) -> 'ModuleSpace':
        return cls([(GlnModule(w), w.eval_param) for w in weights])

    @property
    def k(self) -> int:
        """Number of tensor factors"""
        return len(self.factors)

    @property
    def eval_params(self) -> Tuple:
        return tuple(a for _, a in self.factors)

    def index(self, positions: Sequence[int]) -> int:
        if len(positions) != self.k:
            raise DimensionError(f"need {self.k} factor positions, got {len(positions)}")
        for pos, d in zip(positions, self.dims):
            if not 0 <= pos < d:
                raise DimensionError(f"position {pos} outside a factor of dimension {d}")
        return sum(pos * s for pos, s in zip(positions, self.strides))

    def positions(self, index: int) -> Tuple[int, ...]:
        return tuple((index // s) % d for s, d in zip(self.strides, self.dims))

    def patterns(self, index: int) -> Tuple[GTPattern, ...]:
        return tuple(mod.patterns[pos] for (mod, _), pos in zip(self.factors, self.positions(index)))

    def vector(self, positions: Sequence[int]) -> DomainMatrix:
        return basis_vector(self.index(positions), self.dim)

    @property
    def zeta(self) -> DomainMatrix:
        return basis_vector(0, self.dim)

    @cached_property
    def grading(self) -> Tuple[Tuple, ...]:
        """Total gl_n weight of every basis vector"""
        labels = []
        for combo in product(*(mod.weights for mod, _ in self.factors)):
            labels.append(tuple(sum(coords, QQ.zero) for coords in zip(*combo)))
        return tuple(labels)

    @cached_property
    def series(self) -> Dict[Tuple[int, int], PolyMatrix]:
        """T_ij(u) for all 1 <= i, j <= n, via the iterated coproduct"""
        indices = [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]
        mod, a = self.factors[0]
        current = {key: evaluation_operator(mod, a, *key) for key in indices}
        for mod, a in self.factors[1:]:
            local = {key: evaluation_operator(mod, a, *key) for key in indices}
            dim = next(iter(current.values())).dim * mod.dim
            nxt = {}
            for i, j in indices:
                total = PolyMatrix.zero(dim)
                for c in range(1, self.n + 1):
                    total = total + current[(i, c)].kron(local[(c, j)])
                nxt[(i, j)] = total
            current = nxt
        logger.debug("built T(u) on a %d-dimensional space with %d factors", self.dim, self.k)
        return current

    def __repr__(self):
        body = " ⊗ ".join(f"L_{a}{mod.weight}" for mod, a in self.factors)
        return f"ModuleSpace({body}, dim={self.dim})"


def _check_index(n: int, *indices: int):
    for i in indices:
        if not 1 <= i <= n:
            raise IndexRangeError(f"index {i} outside 1..{n}")


def evaluation_operator(mod: GlnModule, a, i: int, j: int) -> PolyMatrix:
    """δ_ij (u - a) + E_ij on L(λ)"""
    _check_index(mod.n, i, j)
    e = generator(mod, i, j)
    if i != j:
        return PolyMatrix.constant(e)
    a = to_rational(a)
    return PolyMatrix([e.sub(identity(mod.dim).scalarmul(a)), identity(mod.dim)], mod.dim)


def tensor_operator(space: ModuleSpace, i: int, j: int) -> PolyMatrix:
    _check_index(space.n, i, j)
    return space.series[(i, j)]


def _complete_symmetric(params: Sequence, degree: int) -> List:
    """h_0..h_degree of the evaluation parameters"""
    h = [QQ.one] + [QQ.zero] * degree
    for a in params:
        for s in range(1, degree + 1):
            h[s] = h[s] + a * h[s - 1]
    return h


def series_coefficient(space: ModuleSpace, i: int, j: int, r: int) -> DomainMatrix:
    """
    t_ij^{(r)}, the coefficient of u^{-r} in t_ij(u) = T_ij(u) / ∏(u - a_p).
    """
    if r < 1:
        raise IndexRangeError(f"series coefficient index {r} must be positive")
    big_t = tensor_operator(space, i, j)
    k = space.k
    h = _complete_symmetric(space.eval_params, r)
    out = zero_matrix(space.dim)
    for d in range(max(0, k - r), k + 1):
        weight = h[r - k + d]
        if weight:
            out = out.add(big_t.coeff(d).scalarmul(weight))
    return out


def coefficient_matrices(space: ModuleSpace, upper_only: bool = False) -> List[DomainMatrix]:
    """t_ij^{(r)} for r = 1..k, ordered by (r, i, j); i < j only when ``upper_only``"""
    ops = []
    for r in range(1, space.k + 1):
        for i in range(1, space.n + 1):
            for j in range(1, space.n + 1):
                if upper_only and i >= j:
                    continue
                op = series_coefficient(space, i, j, r)
                if not op.is_zero_matrix:
                    ops.append(op)
    return ops


def _minor(space: ModuleSpace, rows: Sequence[int], cols: Sequence[int], column_form: bool) -> PolyMatrix:
    if len(rows) != len(cols):
        raise DimensionError(f"minor with {len(rows)} rows and {len(cols)} columns")
    _check_index(space.n, *rows, *cols)
    r = len(rows)
    if len(set(rows)) < r or len(set(cols)) < r:
        return PolyMatrix.zero(space.dim)

    shifted: Dict[Tuple[int, int, int], PolyMatrix] = {}

    def factor(a, b, s):
        if (a, b, s) not in shifted:
            shifted[(a, b, s)] = tensor_operator(space, a, b).shift(-s)
        return shifted[(a, b, s)]

    total = PolyMatrix.zero(space.dim)
    for perm in permutations(range(r)):
        sign = Permutation(list(perm)).signature()
        term = PolyMatrix.identity(space.dim)
        for s in range(r):
            if column_form:
                term = term * factor(rows[s], cols[perm[s]], r - 1 - s)
            else:
                term = term * factor(rows[perm[s]], cols[s], s)
        total = total + term if sign > 0 else total - term
    return total


def quantum_minor(space: ModuleSpace, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
    """Σ_σ sgn σ · T_{a_σ(1) b_1}(u) T_{a_σ(2) b_2}(u-1) ... T_{a_σ(r) b_r}(u-r+1)"""
    return _minor(space, rows, cols, column_form=False)


def column_quantum_minor(space: ModuleSpace, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
    """Σ_σ sgn σ · T_{a_1 b_σ(1)}(u-r+1) ... T_{a_r b_σ(r)}(u)"""
    return _minor(space, rows, cols, column_form=True)


def drinfeld_generators(space: ModuleSpace, m: int) -> Tuple[PolyMatrix, Optional[PolyMatrix], Optional[PolyMatrix]]:
    """
    (A_m, B_m, C_m); B_m and C_m are None for m = n.
    """
    if not 1 <= m <= space.n:
        raise IndexRangeError(f"Drinfeld generator index {m} outside 1..{space.n}")
    first = list(range(1, m + 1))
    a_m = quantum_minor(space, first, first)
    if m == space.n:
        return a_m, None, None
    swapped = list(range(1, m)) + [m + 1]
    b_m = quantum_minor(space, first, swapped)
    c_m = quantum_minor(space, swapped, first)
    return a_m, b_m, c_m


def lowering_tau(space: ModuleSpace, r: int, a: int) -> PolyMatrix:
    """τ_{ra}(v) = T^{a+1..r}_{a..r-1}(v); the identity when r <= a"""
    _check_index(space.n, r, a)
    if r <= a:
        return PolyMatrix.identity(space.dim)
    return quantum_minor(space, list(range(a + 1, r + 1)), list(range(a, r)))


def raising_tau(space: ModuleSpace, a: int, r: int) -> PolyMatrix:
    """τ_{ar}(v) = T^{1..a}_{1..a-1,r}(v) for a < r"""
    _check_index(space.n, a, r)
    if not a < r:
        raise IndexRangeError(f"raising operator needs a < r, got a={a}, r={r}")
    return quantum_minor(space, list(range(1, a + 1)), list(range(1, a)) + [r])


def tau_product(space: ModuleSpace, r: int, a: int, v0, k: int, derivative: bool = False) -> DomainMatrix:
    """
    𝒯_{ra}(v, k) = τ_{ra}(v+k-1) ... τ_{ra}(v+1) τ_{ra}(v) at v = v0,
    or its derivative in v at v0. The empty product (k = 0) is the identity.
    """
    if k < 0:
        raise IndexRangeError(f"product length {k} must be non-negative")
    v0 = to_rational(v0)
    if k == 0:
        return zero_matrix(space.dim) if derivative else identity(space.dim)

    tau = lowering_tau(space, r, a)
    # leftmost factor first: τ(v0+k-1), ..., τ(v0)
    values = [tau.evaluate(v0 + s) for s in reversed(range(k))]
    if not derivative:
        out = identity(space.dim)
        for m in values:
            out = out.matmul(m)
        return out

    slopes = [tau.derivative().evaluate(v0 + s) for s in reversed(range(k))]
    out = zero_matrix(space.dim)
    for hole in range(k):
        term = identity(space.dim)
        for pos in range(k):
            term = term.matmul(slopes[pos] if pos == hole else values[pos])
        out = out.add(term)
    return out


def gt_basis_vector(space: ModuleSpace, pattern: GTPattern) -> DomainMatrix:
    """
    Rebuild ξ_Λ of a single-factor space at a = 0 from the highest vector:
    ξ_Λ = ∏_{r=2..n} ∏_{i=1..r-1} 𝒯_{ri}(-λ_{ri}, λ_{ri} - λ_{r-1,i}) ξ,
    with r = 2 and i = 1 leftmost.
    """
    if space.k != 1 or space.eval_params[0]:
        raise DimensionError("GT basis reconstruction needs a single factor at a = 0")
    vec = space.zeta
    for r in range(space.n, 1, -1):
        for i in range(r - 1, 0, -1):
            steps = as_int(pattern.entry(r, i) - pattern.entry(r - 1, i))
            vec = tau_product(space, r, i, -pattern.entry(r, i), steps).matmul(vec)
    return vec
