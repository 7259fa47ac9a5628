"""
Unit tests for the JSON web API
"""

import json

import pytest
from unittest.mock import patch

pytest.importorskip("flask")

import config
from app import app


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as c:
        yield c


class TestIndex:
    """Test the index route"""

    def test_lists_commands(self, client, tmp_path):
        """Index shows the web commands and the web cap"""
        with patch('config.RUNS_FILE', str(tmp_path / "runs.json")):
            response = client.get('/')
        data = response.get_json()
        assert response.status_code == 200
        assert 'validate' not in data['commands']
        assert 'criterion' in data['commands']
        assert data['dimension_cap'] == config.WEB_MAX_DIMENSION
        assert data['recent_runs'] == []


class TestApi:
    """Test POST /api/<command>"""

    def test_criterion(self, client):
        """Criterion result comes back as JSON"""
        response = client.post('/api/criterion', json={'factors': [{'w': ["1", "0"]}, {'w': ["2", "1"]}]})
        assert response.status_code == 200
        assert json.loads(response.data) == {'irreducible': False, 'failing_pairs': [[0, 1]]}

    def test_bad_weight(self, client):
        """Domain errors are 400"""
        response = client.post('/api/oracle', json={'factors': [{'w': ["0", "1"]}]})
        assert response.status_code == 400
        assert json.loads(response.data)['kind'] == 'WeightError'

    def test_cap(self, client):
        """Products above the web cap are 413"""
        payload = {'factors': [{'w': ["2", "1", "0"]}, {'w': ["2", "1", "0"]}, {'w': ["2", "1", "0"]}]}
        response = client.post('/api/oracle', json=payload)
        assert response.status_code == 413
        assert json.loads(response.data)['cap'] == config.WEB_MAX_DIMENSION

    def test_validate_not_exposed(self, client):
        """Grid validation is CLI only"""
        assert client.post('/api/validate', json={'n': 2}).status_code == 404

    def test_unknown_command(self, client):
        """Unknown commands are 404"""
        assert client.post('/api/decompose', json={}).status_code == 404

    def test_non_json_body(self, client):
        """Bodies that are not JSON are 400"""
        response = client.post('/api/criterion', data="factors", content_type='text/plain')
        assert response.status_code == 400


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
