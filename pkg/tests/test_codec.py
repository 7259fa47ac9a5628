"""
Unit tests for the exact JSON wire format
"""

import json

import pytest
from sympy.polys.domains import QQ

from yangian.action import ModuleSpace
from yangian.codec import (
    decode_pattern,
    decode_weight,
    dumps,
    encode_matrix,
    encode_pattern,
    encode_vector,
    encode_weight,
    module_info,
)
from yangian.errors import WeightError
from yangian.gt import GlnModule, enumerate_patterns
from yangian.linalg import column, sparse_matrix
from yangian.weights import HighestWeight


class TestWeights:
    """Test weight encoding"""

    def test_encode_without_eval(self):
        """Zero evaluation parameter is omitted"""
        assert encode_weight(HighestWeight.of(2, 1)) == {'w': ["2", "1"]}

    def test_encode_with_eval(self):
        """Rational entries and parameter become strings"""
        w = HighestWeight.of("5/2", "1/2", a="-3/2")
        assert encode_weight(w) == {'w': ["5/2", "1/2"], 'eval': "-3/2"}

    def test_round_trip(self):
        """Decoding an encoded weight gives the same weight"""
        for w in (HighestWeight.of(2, 1, 0), HighestWeight.of("7/3", "4/3", a=5)):
            assert decode_weight(encode_weight(w)) == w

    def test_bare_list(self):
        """A bare list is a weight at a = 0"""
        assert decode_weight(["1", "0"]) == HighestWeight.of(1, 0)

    def test_missing_entries(self):
        """Objects without 'w' are rejected"""
        with pytest.raises(WeightError):
            decode_weight({'eval': "1"})
        with pytest.raises(WeightError):
            decode_weight("1,0")


class TestPatterns:
    """Test GT pattern encoding"""

    def test_round_trip(self):
        """Every pattern of L(2,1,0) survives encode/decode"""
        for p in enumerate_patterns(HighestWeight.of(2, 1, 0)):
            assert decode_pattern(encode_pattern(p)) == p

    def test_invalid_pattern(self):
        """Betweenness violations are rejected"""
        with pytest.raises(WeightError):
            decode_pattern([["1", "0"], ["2"]])

    def test_wrong_shape(self):
        """Rows must shrink by one"""
        with pytest.raises(WeightError):
            decode_pattern([["1", "0"], ["1", "0"]])


class TestMatricesAndVectors:
    """Test sparse matrix and vector encoding"""

    def test_matrix(self):
        """Nonzero entries as [i, j, value] triples, sorted"""
        m = sparse_matrix({1: {0: QQ(-1, 2)}, 0: {1: 3}}, (2, 2))
        assert encode_matrix(m) == {'shape': [2, 2], 'entries': [[0, 1, "3"], [1, 0, "-1/2"]]}

    def test_vector(self):
        """Vector entries carry factor positions and patterns"""
        space = ModuleSpace.from_weights([HighestWeight.of(1, 0), HighestWeight.of(1, 0)])
        v = column({space.index((0, 1)): QQ(2, 3)}, space.dim)
        (entry,) = encode_vector(space, v)
        assert entry['basis'] == [0, 1]
        assert entry['coeff'] == "2/3"
        assert entry['patterns'] == [[["1", "0"], ["1"]], [["1", "0"], ["0"]]]

    def test_dumps_exact_scalars(self):
        """QQ values inside documents serialize as strings"""
        doc = json.loads(dumps({'x': QQ(1, 3), 'w': HighestWeight.of(1, 0)}))
        assert doc == {'x': "1/3", 'w': {'w': ["1", "0"]}}

    def test_dumps_rejects_unknown(self):
        """Objects with no exact form still fail"""
        with pytest.raises(TypeError):
            dumps({'x': object()})


class TestModuleInfo:
    """Test the module description"""

    def test_adjoint(self):
        """L(2,1,0) has 8 patterns and 9 generators"""
        info = module_info(GlnModule(HighestWeight.of(2, 1, 0)))
        assert info['dim'] == 8
        assert info['weyl_dimension'] == 8
        assert len(info['patterns']) == 8
        assert len(info['generators']) == 9
        assert info['generators']["E1,2"]['shape'] == [8, 8]

    def test_without_generators(self):
        """Generators can be skipped"""
        info = module_info(GlnModule(HighestWeight.of(1, 0)), with_generators=False)
        assert 'generators' not in info
        assert info['patterns'] == [[["1", "0"], ["1"]], [["1", "0"], ["0"]]]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
