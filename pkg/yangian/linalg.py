"""
Exact rational linear algebra.

Scalars are elements of sympy's QQ domain, matrices are sparse ``DomainMatrix``
objects over QQ and vectors are ``d x 1`` sparse ``DomainMatrix`` columns.
Polynomial matrices in the formal variable ``u`` are kept as a list of
coefficient matrices (:class:`PolyMatrix`).
"""

import logging
import math
import re
from collections import deque
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

from sympy import Poly, Symbol
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

import config
from yangian.errors import DimensionError, YangianError

logger = logging.getLogger(__name__)

U = Symbol('u')

_RATIONAL_RE = re.compile(r'^\s*([+-]?)(\d+)(?:/(\d+))?\s*$')

SparseVector = Dict[int, object]


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

def to_rational(value):
    """Convert int, Fraction, sympy number or a string like '-3/2' to a QQ element"""
    if isinstance(value, str):
        text = value
        for minus in config.RATIONAL_MINUS:
            text = text.replace(minus, '-')
        match = _RATIONAL_RE.match(text)
        if not match:
            raise YangianError(f"not an exact rational: {value!r}")
        sign, num, den = match.groups()
        den = int(den) if den else 1
        if den == 0:
            raise YangianError(f"zero denominator: {value!r}")
        num = int(num) * (-1 if sign == '-' else 1)
        return QQ(num, den)
    if isinstance(value, bool):
        raise YangianError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, float):
        raise YangianError(f"floating point value {value!r} is not exact")
    return QQ.convert(value)


def format_rational(q) -> str:
    """Decimal-free string form: '3', '-3/2'"""
    q = to_rational(q)
    num, den = int(QQ.numer(q)), int(QQ.denom(q))
    return str(num) if den == 1 else f"{num}/{den}"


def is_integer(q) -> bool:
    return int(QQ.denom(to_rational(q))) == 1


def as_int(q) -> int:
    q = to_rational(q)
    if int(QQ.denom(q)) != 1:
        raise YangianError(f"{format_rational(q)} is not an integer")
    return int(QQ.numer(q))


# ---------------------------------------------------------------------------
# Sparse matrices and vectors
# ---------------------------------------------------------------------------

def sparse_matrix(entries: Mapping[int, Mapping[int, object]], shape) -> DomainMatrix:
    """Build a sparse QQ matrix from a dict of dicts, dropping zeros"""
    dod = {}
    for i, row in entries.items():
        clean = {}
        for j, value in row.items():
            q = to_rational(value)
            if q:
                clean[j] = q
        if clean:
            dod[i] = clean
    return DomainMatrix(dod, shape, QQ)


def identity(dim: int) -> DomainMatrix:
    return DomainMatrix.eye(dim, QQ).to_sparse()


def zero_matrix(rows: int, cols: Optional[int] = None) -> DomainMatrix:
    return DomainMatrix.zeros((rows, rows if cols is None else cols), QQ).to_sparse()


def column(entries: Mapping[int, object], dim: int) -> DomainMatrix:
    """Column vector from {index: value}"""
    for i in entries:
        if not 0 <= i < dim:
            raise DimensionError(f"index {i} outside vector of length {dim}")
    return sparse_matrix({i: {0: v} for i, v in entries.items()}, (dim, 1))


def basis_vector(index: int, dim: int) -> DomainMatrix:
    return column({index: 1}, dim)


def vector_entries(v: DomainMatrix) -> SparseVector:
    """{index: value} of the nonzero entries of a column vector"""
    if v.shape[1] != 1:
        raise DimensionError(f"expected a column vector, got shape {v.shape}")
    return {i: row[0] for i, row in v.to_dod().items() if row.get(0)}


def is_zero_vector(v: DomainMatrix) -> bool:
    return not vector_entries(v)


def kron(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """Kronecker product with row-major block layout"""
    (ar, ac), (br, bc) = a.shape, b.shape
    b_dod = b.to_dod()
    dod = {}
    for i1, row1 in a.to_dod().items():
        for i2, row2 in b_dod.items():
            row = {}
            for j1, x in row1.items():
                for j2, y in row2.items():
                    row[j1 * bc + j2] = x * y
            dod[i1 * br + i2] = row
    return DomainMatrix(dod, (ar * br, ac * bc), QQ)


def commutator(a, b):
    """[a, b] = ab - ba for DomainMatrix or PolyMatrix operands"""
    if isinstance(a, PolyMatrix):
        return a * b - b * a
    return a.matmul(b).sub(b.matmul(a))


# ---------------------------------------------------------------------------
# Kernel and span closure
# ---------------------------------------------------------------------------

def _integral_rows(m: DomainMatrix) -> DomainMatrix:
    """Scale each row by the lcm of its denominators; same kernel, ZZ entries"""
    dod = {}
    for i, row in m.to_dod().items():
        den = 1
        for x in row.values():
            den = math.lcm(den, int(QQ.denom(x)))
        dod[i] = {j: ZZ(int(QQ.numer(x)) * (den // int(QQ.denom(x)))) for j, x in row.items()}
    return DomainMatrix(dod, m.shape, ZZ)


def mat_kernel(m: DomainMatrix) -> List[DomainMatrix]:
    """
    Basis of the null space of ``m`` as column vectors.

    Rows are cleared of denominators and reduced with fraction-free
    Gauss-Jordan elimination over ZZ. A matrix with no rows (or no nonzero
    entries) has the whole space as kernel.
    """
    rows, cols = m.shape
    m = m.convert_to(QQ).to_sparse()
    if rows == 0 or m.is_zero_matrix:
        return [basis_vector(j, cols) for j in range(cols)]

    reduced, _den, pivots = _integral_rows(m).rref_den(method='FF')
    null = reduced.nullspace_from_rref(pivots)

    basis = []
    for _, row in sorted(null.to_dod().items()):
        basis.append(column({j: QQ.convert_from(x, ZZ) for j, x in row.items()}, cols))
    logger.debug("kernel of %dx%d matrix has dimension %d", rows, cols, len(basis))
    return basis


class Echelon:
    """
    Incrementally built row-echelon basis of sparse vectors.

    Each stored vector has its smallest index as pivot, normalized to 1.
    """

    def __init__(self):
        self.rows: Dict[int, SparseVector] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: SparseVector) -> SparseVector:
        vec = dict(vec)
        while True:
            hits = [k for k in vec if k in self.rows]
            if not hits:
                return vec
            p = min(hits)
            c = vec[p]
            for k, x in self.rows[p].items():
                value = vec.get(k, QQ.zero) - c * x
                if value:
                    vec[k] = value
                else:
                    vec.pop(k, None)

    def insert(self, vec: SparseVector) -> Optional[SparseVector]:
        """Add ``vec`` if it is new; return the stored residue or None"""
        residue = self.reduce(vec)
        if not residue:
            return None
        p = min(residue)
        inv = QQ.one / residue[p]
        residue = {k: x * inv for k, x in residue.items()}
        self.rows[p] = residue
        return residue

    def contains(self, vec: SparseVector) -> bool:
        return not self.reduce(vec)


class _ColumnOperator:
    """Matrix stored by columns for fast sparse matrix-vector products"""

    def __init__(self, op: DomainMatrix):
        self.cols = op.transpose().to_dod()

    def __call__(self, vec: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for j, x in vec.items():
            for i, a in self.cols.get(j, {}).items():
                value = out.get(i, QQ.zero) + a * x
                if value:
                    out[i] = value
                else:
                    out.pop(i, None)
        return out


def _split_by_grade(vec: SparseVector, grading) -> List[SparseVector]:
    if grading is None:
        return [vec] if vec else []
    parts: Dict[Hashable, SparseVector] = {}
    for k, x in vec.items():
        parts.setdefault(grading[k], {})[k] = x
    return list(parts.values())


def span_closure(seeds: Sequence[DomainMatrix], ops: Sequence[DomainMatrix],
                 grading: Optional[Sequence[Hashable]] = None) -> List[DomainMatrix]:
    """
    Basis of the smallest subspace containing ``seeds`` and invariant under ``ops``.

    Breadth-first: every newly found basis vector is queued and pushed through
    the operators in declaration order until nothing new appears.

    ``grading`` optionally labels each coordinate (e.g. by weight). Candidate
    vectors are then split into homogeneous parts, which is valid whenever the
    closure is a graded subspace, e.g. when ``ops`` contain diagonal operators
    whose joint eigenspaces are the grades.
    """
    if not seeds:
        return []
    dim = seeds[0].shape[0]
    for s in seeds:
        if s.shape != (dim, 1):
            raise DimensionError(f"seed of shape {s.shape}, expected ({dim}, 1)")
    for op in ops:
        if op.shape != (dim, dim):
            raise DimensionError(f"operator of shape {op.shape} on a {dim}-dimensional space")
    if grading is not None and len(grading) != dim:
        raise DimensionError(f"grading has {len(grading)} labels for dimension {dim}")

    apply = [_ColumnOperator(op.convert_to(QQ)) for op in ops]
    echelon = Echelon()
    queue = deque()
    basis: List[SparseVector] = []

    def visit(vec):
        for part in _split_by_grade(vec, grading):
            stored = echelon.insert(part)
            if stored is not None:
                basis.append(stored)
                queue.append(stored)

    for s in seeds:
        visit(vector_entries(s))

    while queue and len(basis) < dim:
        vec = queue.popleft()
        for op in apply:
            visit(op(vec))

    logger.debug("span closure: %d seeds, %d operators, dimension %d", len(seeds), len(ops), len(basis))
    return [column(v, dim) for v in basis]


def in_span(v: DomainMatrix, basis: Iterable[DomainMatrix]) -> bool:
    """True iff ``v`` lies in the span of ``basis``"""
    echelon = Echelon()
    for b in basis:
        echelon.insert(vector_entries(b))
    return echelon.contains(vector_entries(v))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

def poly_from_coeffs(coeffs: Sequence[object], gen=U) -> Poly:
    """Poly over QQ from coefficients listed lowest degree first"""
    rep = [to_rational(c) for c in coeffs]
    return Poly.from_list(list(reversed(rep)) or [QQ.zero], gen, domain=QQ)


def poly_coeffs(p: Poly) -> List:
    """Coefficients lowest degree first; [] for the zero polynomial"""
    if p.is_zero:
        return []
    return [to_rational(c) for c in reversed(p.all_coeffs())]


def poly_derivative(p: Poly) -> Poly:
    return p.diff(p.gen)


class PolyMatrix:
    """
    Square matrix of polynomials in ``u`` stored as coefficient matrices.

    ``coeffs[d]`` is the coefficient of ``u**d``; trailing zero coefficients
    are stripped so the zero polynomial matrix has no coefficients.
    """

    __slots__ = ('dim', 'coeffs')

    def __init__(self, coeffs: Sequence[DomainMatrix], dim: int):
        coeffs = [c.to_sparse() for c in coeffs]
        for c in coeffs:
            if c.shape != (dim, dim):
                raise DimensionError(f"coefficient of shape {c.shape} in a {dim}x{dim} polynomial matrix")
        while coeffs and coeffs[-1].is_zero_matrix:
            coeffs.pop()
        self.dim = dim
        self.coeffs = tuple(coeffs)

    # constructors

    @classmethod
    def zero(cls, dim: int) -> 'PolyMatrix':
        return cls([], dim)

    @classmethod
    def constant(cls, m: DomainMatrix) -> 'PolyMatrix':
        return cls([m], m.shape[0])

    @classmethod
    def identity(cls, dim: int) -> 'PolyMatrix':
        return cls([identity(dim)], dim)

    # structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> DomainMatrix:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return zero_matrix(self.dim)

    def entry(self, i: int, j: int) -> Poly:
        """Matrix entry (0-based) as a Poly in u"""
        values = [c.to_dod().get(i, {}).get(j, QQ.zero) for c in self.coeffs]
        return poly_from_coeffs(values)

    # ring operations

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyMatrix([self.coeff(d).add(other.coeff(d)) for d in range(n)], self.dim)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyMatrix([self.coeff(d).sub(other.coeff(d)) for d in range(n)], self.dim)

    def __neg__(self):
        return PolyMatrix([c.neg() for c in self.coeffs], self.dim)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        self._check(other)
        if self.is_zero or other.is_zero:
            return PolyMatrix.zero(self.dim)
        out = [zero_matrix(self.dim) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for d, a in enumerate(self.coeffs):
            if a.is_zero_matrix:
                continue
            for e, b in enumerate(other.coeffs):
                if not b.is_zero_matrix:
                    out[d + e] = out[d + e].add(a.matmul(b))
        return PolyMatrix(out, self.dim)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> 'PolyMatrix':
        c = to_rational(c)
        return PolyMatrix([m.scalarmul(c) for m in self.coeffs], self.dim)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, len(self.coeffs)))

    def __repr__(self):
        return f"PolyMatrix(dim={self.dim}, degree={self.degree})"

    # calculus

    def shift(self, c) -> 'PolyMatrix':
        """P(u + c)"""
        c = to_rational(c)
        if not c:
            return self
        out = [zero_matrix(self.dim) for _ in self.coeffs]
        for e, m in enumerate(self.coeffs):
            if m.is_zero_matrix:
                continue
            for d in range(e + 1):
                factor = QQ(math.comb(e, d)) * c ** (e - d)
                out[d] = out[d].add(m.scalarmul(factor))
        return PolyMatrix(out, self.dim)

    def derivative(self) -> 'PolyMatrix':
        return PolyMatrix([m.scalarmul(QQ(d)) for d, m in enumerate(self.coeffs)][1:], self.dim)

    def evaluate(self, c) -> DomainMatrix:
        """Horner evaluation at the rational point ``c``"""
        c = to_rational(c)
        out = zero_matrix(self.dim)
        for m in reversed(self.coeffs):
            out = out.scalarmul(c).add(m)
        return out

    def kron(self, other: 'PolyMatrix') -> 'PolyMatrix':
        dim = self.dim * other.dim
        if self.is_zero or other.is_zero:
            return PolyMatrix.zero(dim)
        out = [zero_matrix(dim) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for d, a in enumerate(self.coeffs):
            for e, b in enumerate(other.coeffs):
                out[d + e] = out[d + e].add(kron(a, b))
        return PolyMatrix(out, dim)

    def act(self, v: DomainMatrix) -> List[DomainMatrix]:
        """Coefficient vectors of P(u)·v, lowest degree first"""
        return [m.matmul(v) for m in self.coeffs]
