"""
Unit tests for Gelfand-Tsetlin patterns and generator matrices
"""

from itertools import product

import pytest
from sympy.polys.domains import QQ

from yangian.errors import IndexRangeError
from yangian.gt import (
    GlnModule,
    GTPattern,
    cartan_matrix,
    enumerate_patterns,
    generator,
    lowering_matrix,
    pattern_weight,
    raising_matrix,
    weyl_dimension,
)
from yangian.linalg import commutator, zero_matrix
from yangian.weights import HighestWeight


def W(*entries):
    return HighestWeight.of(*entries)


def small_weights():
    """Dominant weights with n <= 3, λ_n = 0 and λ_1 - λ_n <= 3, plus two rational ones"""
    found = [W(0), W(3)]
    for n in (2, 3):
        for entries in product(range(3, -1, -1), repeat=n):
            if entries[-1] == 0 and all(a >= b for a, b in zip(entries, entries[1:])):
                found.append(HighestWeight(entries))
    found += [W("1/2", "-1/2"), W("5/2", "1/2", "-1/2")]
    return found


SMALL = small_weights()


def expected_bracket(mod, i, j, k, l):
    """δ_kj E_il - δ_il E_kj"""
    out = zero_matrix(mod.dim)
    if k == j:
        out = out.add(generator(mod, i, l))
    if i == l:
        out = out.sub(generator(mod, k, j))
    return out


class TestEnumeratePatterns:
    """Test GT pattern enumeration"""

    def test_vector_representation(self):
        """(1,0) has two patterns, λ_11 ∈ {1, 0}"""
        patterns = enumerate_patterns(W(1, 0))
        assert [p.entry(1, 1) for p in patterns] == [1, 0]

    def test_three_dimensional(self):
        """(1,0,0) has three patterns"""
        assert len(enumerate_patterns(W(1, 0, 0))) == 3

    def test_adjoint(self):
        """(2,1,0) has eight patterns"""
        assert len(enumerate_patterns(W(2, 1, 0))) == 8

    def test_highest_first(self):
        """Index 0 is the pattern whose rows truncate λ"""
        p = enumerate_patterns(W(2, 1, 0))[0]
        assert p.rows == ((2, 1, 0), (2, 1), (2,))

    def test_all_valid_and_distinct(self):
        """Every enumerated pattern satisfies betweenness, none repeats"""
        patterns = enumerate_patterns(W(3, 1, 0))
        assert all(p.is_valid() for p in patterns)
        assert len(set(patterns)) == len(patterns)

    def test_count_matches_weyl_dimension(self):
        """Pattern count equals the Weyl dimension formula"""
        for w in SMALL:
            assert len(enumerate_patterns(w)) == weyl_dimension(w), w


class TestPatternWeight:
    """Test weights of GT patterns"""

    def test_highest_pattern(self):
        """Highest pattern of (2,1,0) has weight (2,1,0)"""
        p = enumerate_patterns(W(2, 1, 0))[0]
        assert pattern_weight(p).coords == (2, 1, 0)

    def test_lower_pattern(self):
        """(1,0) with λ_11 = 0 has weight (0,1)"""
        p = enumerate_patterns(W(1, 0))[1]
        assert pattern_weight(p).coords == (0, 1)

    def test_coordinate_sum(self):
        """Coordinates of every pattern weight sum to |λ|"""
        w = W(3, 1, 0)
        for p in enumerate_patterns(w):
            assert sum(pattern_weight(p).coords, QQ.zero) == 4


class TestPatternMoves:
    """Test pattern increments and decrements"""

    def test_increment_out_of_range(self):
        """Incrementing the highest pattern leaves the pattern set"""
        p = enumerate_patterns(W(1, 0))[0]
        assert p.increment(1, 1) is None

    def test_mutually_inverse(self):
        """decrement undoes increment wherever both are defined"""
        for p in enumerate_patterns(W(3, 1, 0)):
            for m in (1, 2):
                for j in range(1, m + 1):
                    up = p.increment(m, j)
                    if up is not None:
                        assert up.decrement(m, j) == p
                    down = p.decrement(m, j)
                    if down is not None:
                        assert down.increment(m, j) == p

    def test_top_row_fixed(self):
        """The top row cannot be moved"""
        p = enumerate_patterns(W(1, 0))[0]
        with pytest.raises(IndexRangeError):
            p.increment(2, 1)


class TestGeneratorMatrices:
    """Test E_ij matrices in the GT basis"""

    def test_raising_on_vector_representation(self):
        """E_12 maps ξ(λ_11=0) to ξ(λ_11=1) with coefficient 1"""
        mod = GlnModule(W(1, 0))
        e12 = raising_matrix(mod, 1).to_dod()
        assert e12 == {0: {1: QQ(1)}}

    def test_raising_kills_highest(self):
        """E_m,m+1 annihilates the highest pattern"""
        mod = GlnModule(W(2, 1, 0))
        for m in (1, 2):
            dod = raising_matrix(mod, m).to_dod()
            assert all(0 not in row for row in dod.values())

    def test_lowering_kills_lowest(self):
        """E_m+1,m annihilates the lowest pattern"""
        mod = GlnModule(W(2, 1, 0))
        last = mod.dim - 1
        for m in (1, 2):
            dod = lowering_matrix(mod, m).to_dod()
            assert all(last not in row for row in dod.values())

    def test_lowering_on_vector_representation(self):
        """E_21 maps the highest vector of L(1,0) to the other basis vector"""
        mod = GlnModule(W(1, 0))
        assert lowering_matrix(mod, 1).to_dod() == {1: {0: QQ(1)}}

    def test_cartan_on_vector_representation(self):
        """E_22 on L(1,0) is diag(0, 1)"""
        mod = GlnModule(W(1, 0))
        assert cartan_matrix(mod, 2).to_dod() == {1: {1: QQ(1)}}

    def test_highest_eigenvalues(self):
        """E_ii acts on the highest vector by λ_i"""
        w = W(3, 1, 0)
        mod = GlnModule(w)
        for i in range(1, 4):
            assert cartan_matrix(mod, i).to_dod().get(0, {}).get(0, QQ.zero) == w.entries[i - 1]

    def test_simple_bracket(self):
        """[E_m,m+1, E_m+1,m] = E_mm - E_m+1,m+1"""
        for w in SMALL:
            mod = GlnModule(w)
            for m in range(1, mod.n):
                lhs = commutator(raising_matrix(mod, m), lowering_matrix(mod, m))
                rhs = cartan_matrix(mod, m).sub(cartan_matrix(mod, m + 1))
                assert lhs == rhs, (w, m)

    def test_full_relation_suite(self):
        """[E_ij, E_kl] = δ_kj E_il - δ_il E_kj for every index quadruple"""
        for w in SMALL:
            mod = GlnModule(w)
            idx = range(1, mod.n + 1)
            for i, j, k, l in product(idx, repeat=4):
                lhs = commutator(generator(mod, i, j), generator(mod, k, l))
                assert lhs == expected_bracket(mod, i, j, k, l), (w, i, j, k, l)

    def test_weight_shift(self):
        """E_ij maps weight w to w + ε_i - ε_j"""
        mod = GlnModule(W(2, 1, 0))
        for i, j in product(range(1, 4), repeat=2):
            for row, cols in generator(mod, i, j).to_dod().items():
                for col in cols:
                    shift = [QQ.zero] * 3
                    shift[i - 1] += 1
                    shift[j - 1] -= 1
                    expected = tuple(a + b for a, b in zip(mod.weights[col], shift))
                    assert mod.weights[row] == expected

    def test_trace_of_cartan_sum(self):
        """E_11 + ... + E_nn acts by |λ| on every pattern"""
        mod = GlnModule(W(3, 1, 0))
        total = zero_matrix(mod.dim)
        for i in range(1, 4):
            total = total.add(cartan_matrix(mod, i))
        assert total.to_dod() == {k: {k: QQ(4)} for k in range(mod.dim)}

    def test_generator_cached(self):
        """generator() returns the cached matrix on repeat calls"""
        mod = GlnModule(W(2, 1, 0))
        assert generator(mod, 1, 3) is generator(mod, 1, 3)

    def test_index_errors(self):
        """Indices outside 1..n raise"""
        mod = GlnModule(W(1, 0))
        with pytest.raises(IndexRangeError):
            raising_matrix(mod, 2)
        with pytest.raises(IndexRangeError):
            cartan_matrix(mod, 0)
        with pytest.raises(IndexRangeError):
            generator(mod, 1, 3)


class TestWeylDimension:
    """Test the Weyl dimension formula"""

    def test_trivial(self):
        """(0,...,0) -> 1"""
        assert weyl_dimension(W(0, 0, 0, 0)) == 1

    def test_vector(self):
        """(1,0) -> 2"""
        assert weyl_dimension(W(1, 0)) == 2

    def test_adjoint(self):
        """(2,1,0) -> 8"""
        assert weyl_dimension(W(2, 1, 0)) == 8

    def test_shift_invariant(self):
        """Adding a constant does not change the dimension"""
        assert weyl_dimension(W("7/2", "5/2", "3/2")) == weyl_dimension(W(2, 1, 0))


class TestGlnModule:
    """Test the module wrapper"""

    def test_drops_evaluation_parameter(self):
        """The gl_n module ignores the evaluation parameter"""
        mod = GlnModule(HighestWeight.of(1, 0, a=5))
        assert mod.weight == W(1, 0)
        assert mod.dim == 2

    def test_index_lookup(self):
        """index maps each pattern back to its position"""
        mod = GlnModule(W(2, 1, 0))
        for k, p in enumerate(mod.patterns):
            assert mod.index[p] == k
        assert mod.highest == mod.patterns[0]

    def test_pattern_type(self):
        """Patterns are hashable value objects"""
        p = GTPattern(((1, 0), (1,)))
        assert p == GTPattern((("1", "0"), ("1",)))
        assert p.content(2, 2) == -1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
