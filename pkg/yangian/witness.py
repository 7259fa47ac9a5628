"""
Explicit reducibility witness for a two-fold tensor product.

When the interval condition fails only for the outermost index pair (1, n),
the vector

    θ̃ = 𝒯_{n-p+1,1}(-λ_1, k_1) 𝒯'_{n-p+2,2}(-λ_2, k_2) ... 𝒯'_{n,p}(-λ_p, k_p) ζ

lies in the submodule generated by ζ but vanishes in its irreducible
quotient, so ζ cannot be recovered from it.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List

from sympy.polys.matrices import DomainMatrix

from yangian.action import ModuleSpace, tau_product
from yangian.errors import PreconditionError, WeightError
from yangian.linalg import as_int, in_span, is_integer, is_zero_vector
from yangian.oracle import cyclic_closure
from yangian.weights import (
    HighestWeight,
    content_set,
    in_interval,
    normalize_evaluation,
    pair_irreducible,
    pairwise_condition,
)

logger = logging.getLogger(__name__)


@dataclass
class WitnessReport:
    lam: HighestWeight
    mu: HighestWeight
    swapped: bool
    p: int
    q: int
    k_list: List[int]
    lone: bool
    theta: DomainMatrix
    theta_nonzero: bool
    theta_in_cyclic_span: bool
    theta_closure_proper: bool
    dim: int
    cyclic_dim: int
    theta_closure_dim: int
    space: ModuleSpace = field(repr=False, default=None)


def _oriented(lam: HighestWeight, mu: HighestWeight) -> bool:
    """m_n ∈ ⟨l_n, l_1⟩ and l_1 ∈ ⟨m_n, m_1⟩"""
    l, m = content_set(lam).contents, content_set(mu).contents
    n = len(l)
    return (in_interval(m[-1], l[-1], l[0], l[1:n - 1])
            and in_interval(l[0], m[-1], m[0], m[1:n - 1]))


def _consecutive_slot(value, contents) -> int:
    """1-based p with value ∈ ⟨c_{p+1}, c_p⟩, or 0"""
    for p in range(1, len(contents)):
        if in_interval(value, contents[p], contents[p - 1]):
            return p
    return 0


def build_witness(lam: HighestWeight, mu: HighestWeight) -> WitnessReport:
    lam, mu = normalize_evaluation(lam), normalize_evaluation(mu)
    if lam.n != mu.n:
        raise WeightError(f"weights of different rank: {lam.n} and {mu.n}")
    n = lam.n

    if pair_irreducible(lam, mu):
        raise PreconditionError('criterion', f"L{lam} ⊗ L{mu} satisfies the criterion; nothing to witness")
    others = [
        (i, j) for i, j in combinations(range(1, n + 1), 2)
        if (i, j) != (1, n) and not pairwise_condition(lam, mu, i, j)
    ]
    if others:
        raise PreconditionError('other_pairs', f"interval condition also fails for {others}; only (1, {n}) is handled")

    swapped = False
    if not _oriented(lam, mu):
        if not _oriented(mu, lam):
            raise PreconditionError('orientation', "neither factor order has m_n ∈ ⟨l_n,l_1⟩ and l_1 ∈ ⟨m_n,m_1⟩")
        lam, mu = mu, lam
        swapped = True

    l, m = content_set(lam).contents, content_set(mu).contents
    p = _consecutive_slot(m[-1], l)
    if not p:
        raise PreconditionError('p', "m_n lies in no interval ⟨l_{p+1}, l_p⟩")
    q = _consecutive_slot(l[0], m)
    if not q:
        raise PreconditionError('q', "l_1 lies in no interval ⟨m_{q+1}, m_q⟩")

    k_list = []
    for i in range(1, p + 1):
        k = l[i - 1] - m[n - p + i - 1]
        if not (is_integer(k) and k > 0):
            raise PreconditionError('k', f"k_{i} = l_{i} - m_{n - p + i} is not a positive integer")
        k_list.append(as_int(k))

    lone = in_interval(l[0], m[n - p], m[n - p - 1])
    if not lone:
        raise PreconditionError('lone', f"l_1 ∉ ⟨m_{n - p + 1}, m_{n - p}⟩")

    space = ModuleSpace.from_weights([lam, mu])
    theta = space.zeta
    for a in range(p, 1, -1):
        op = tau_product(space, n - p + a, a, -lam.entries[a - 1], k_list[a - 1], derivative=True)
        theta = op.matmul(theta)
    theta = tau_product(space, n - p + 1, 1, -lam.entries[0], k_list[0]).matmul(theta)

    cyclic = cyclic_closure(space, space.zeta)
    nonzero = not is_zero_vector(theta)
    own = cyclic_closure(space, theta) if nonzero else []
    report = WitnessReport(
        lam=lam,
        mu=mu,
        swapped=swapped,
        p=p,
        q=q,
        k_list=k_list,
        lone=lone,
        theta=theta,
        theta_nonzero=nonzero,
        theta_in_cyclic_span=in_span(theta, cyclic),
        theta_closure_proper=not in_span(space.zeta, own),
        dim=space.dim,
        cyclic_dim=len(cyclic),
        theta_closure_dim=len(own),
        space=space,
    )
    logger.info("witness for L%s ⊗ L%s: p=%d, k=%s, θ̃ %s", lam, mu, p, k_list,
                "nonzero" if nonzero else "zero")
    return report
