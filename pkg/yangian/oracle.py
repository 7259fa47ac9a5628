"""
Brute-force irreducibility oracle.

A finite-dimensional module is irreducible iff its singular vectors
(vectors killed by every t_ij(u), i < j) form a single line and the tensor
product ζ of the highest vectors is cyclic. Any nonzero submodule contains a
singular vector (take a vector of maximal weight in it), so a unique singular
line together with a cyclic ζ leaves no room for a proper submodule; both
conditions are also necessary.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

import config
from yangian.action import ModuleSpace, coefficient_matrices
from yangian.errors import DimensionError, ResourceCapError
from yangian.gt import weyl_dimension
from yangian.linalg import column, is_zero_vector, mat_kernel, span_closure
from yangian.weights import HighestWeight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    irreducible: bool
    singular_dim: int
    cyclic: bool
    dim: int
    closure_dim: int

    def to_dict(self) -> Dict:
        return {
            'irreducible': self.irreducible,
            'singular_dim': self.singular_dim,
            'cyclic': self.cyclic,
            'dim': self.dim,
            'closure_dim': self.closure_dim,
        }


def tensor_dimension(weights: Sequence[HighestWeight]) -> int:
    return math.prod(weyl_dimension(w) for w in weights)


def check_cap(weights: Sequence[HighestWeight], cap: Optional[int] = None) -> int:
    """Dimension of the tensor product; ResourceCapError above the cap"""
    cap = config.DIMENSION_CAP if cap is None else cap
    dim = tensor_dimension(weights)
    if dim > cap:
        raise ResourceCapError(dim, cap)
    return dim


def singular_space(space: ModuleSpace) -> List[DomainMatrix]:
    """
    Joint kernel of t_ij^{(r)}, i < j, r <= k.

    Each t_ij^{(r)} shifts weights by ε_i - ε_j, so the kernel is computed
    one weight space at a time.
    """
    ops = coefficient_matrices(space, upper_only=True)
    grading = space.grading

    blocks: Dict[tuple, List[int]] = {}
    for idx, label in enumerate(grading):
        blocks.setdefault(label, []).append(idx)
    local = {}
    for members in blocks.values():
        for pos, idx in enumerate(members):
            local[idx] = pos

    block_rows: Dict[tuple, Dict[tuple, Dict[int, object]]] = {label: {} for label in blocks}
    for o, op in enumerate(ops):
        for i, row in op.to_dod().items():
            for j, x in row.items():
                label = grading[j]
                block_rows[label].setdefault((o, i), {})[local[j]] = x

    basis = []
    for label, members in blocks.items():
        rows = block_rows[label]
        dod = {r: row for r, row in enumerate(rows.values())}
        matrix = DomainMatrix(dod, (len(dod), len(members)), QQ)
        for vec in mat_kernel(matrix):
            entries = {members[j]: row[0] for j, row in vec.to_dod().items()}
            basis.append(column(entries, space.dim))
    logger.debug("singular space of %r has dimension %d", space, len(basis))
    return basis


def cyclic_closure(space: ModuleSpace, v: DomainMatrix) -> List[DomainMatrix]:
    """Basis of the submodule generated by ``v``"""
    if v.shape != (space.dim, 1):
        raise DimensionError(f"vector of shape {v.shape} in a {space.dim}-dimensional space")
    if is_zero_vector(v):
        raise DimensionError("the zero vector generates nothing")
    return span_closure([v], coefficient_matrices(space), grading=space.grading)


def is_cyclic(space: ModuleSpace, v: DomainMatrix) -> bool:
    return len(cyclic_closure(space, v)) == space.dim


def decide(space: ModuleSpace) -> Verdict:
    singular = singular_space(space)
    closure = cyclic_closure(space, space.zeta)
    cyclic = len(closure) == space.dim
    verdict = Verdict(
        irreducible=len(singular) == 1 and cyclic,
        singular_dim=len(singular),
        cyclic=cyclic,
        dim=space.dim,
        closure_dim=len(closure),
    )
    logger.info("oracle: %r -> %s", space, "irreducible" if verdict.irreducible else "reducible")
    return verdict


def decide_weights(weights: Sequence[HighestWeight], cap: Optional[int] = None) -> Verdict:
    """Cap-checked oracle run on L_{a_1}(λ^(1)) ⊗ ... built from the weights"""
    check_cap(weights, cap)
    return decide(ModuleSpace.from_weights(weights))
