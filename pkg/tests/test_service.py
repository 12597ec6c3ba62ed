"""HTTP facade contract: payload shapes, schema tag, error kind mapping."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from domgame.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["schema"] == 1
    assert body["status"] == "ok"


def test_solve_complete_graph(client):
    r = client.post("/solve", json={"graph": "g6:C~"})
    assert r.status_code == 200
    body = r.json()
    assert body["schema"] == 1
    assert body["value"] == 1
    assert body["optimal_first_moves"] == [0]
    assert body["variant"] == "dominator"
    assert "trace" not in body  # excluded when not requested


def test_solve_with_dominated_and_trace(client):
    text = "5 4\n0 1\n1 2\n2 3\n3 4\n"
    r = client.post(
        "/solve",
        json={
            "graph": text,
            "variant": "staller",
            "dominated": [0, 1, 2],
            "line": True,
        },
    )
    body = r.json()
    assert body["dominated"] == [0, 1, 2]
    assert body["value"] == 2
    trace = body["trace"]
    assert len(trace) == 2
    assert [t["player"] for t in trace] == ["S", "D"]
    assert all(t["newly_dominated"] >= 1 for t in trace)
    assert sum(t["newly_dominated"] for t in trace) == 2  # v3 and v4 remain


def test_solve_exact_front_widens(client):
    pruned = client.post("/solve", json={"graph": "g6:DQo"}).json()
    exact = client.post("/solve", json={"graph": "g6:DQo", "exact_front": True}).json()
    assert set(pruned["optimal_first_moves"]) <= set(exact["optimal_first_moves"])
    assert pruned["value"] == exact["value"]


def test_family_tree(client):
    r = client.post("/family", json={"name": "T", "params": {"r": 1}, "emit": "g6"})
    body = r.json()
    assert body["kind"] == "tree"
    assert body["order"] == 6
    assert "which" not in body
    assert body["labels"]["w"] == 0


def test_family_pair_h_side(client):
    r = client.post("/family", json={"name": "fig6", "which": "H"})
    body = r.json()
    assert body["kind"] == "pair"
    assert body["which"] == "H"
    assert body["order"] == 8 and body["size"] == 7
    lines = [l for l in body["graph"].splitlines() if l.strip()]
    assert lines[0] == "8 7"


def test_family_fixture_dominated(client):
    r = client.post("/family", json={"name": "F"})
    body = r.json()
    assert body["kind"] == "fixture"
    assert body["order"] == 9
    assert len(body["dominated"]) == 1
    assert body["dominated"][0] == body["labels"]["b_1"]


def test_family_fixture_rejects_params(client):
    r = client.post("/family", json={"name": "P5'", "params": {"r": 2}})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "contract"


def test_census_small(client):
    r = client.post("/census", json={"orders": [4, 5]})
    body = r.json()
    assert [o["n"] for o in body["orders"]] == [4, 5]
    four = body["orders"][0]
    assert four["trees"] == 2
    assert four["lines"][0] == '{"n":4,"gg":1,"ggp":2,"count":1,"witnesses":["Cs"]}'
    assert four["records"][0] == {
        "n": 4,
        "gg": 1,
        "ggp": 2,
        "count": 1,
        "witnesses": ["Cs"],
    }


def test_census_guard_and_override(client):
    r = client.post("/census", json={"orders": [17]})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "guard"


def test_spanning_graph_source(client):
    r = client.post("/spanning", json={"graph": "g6:C~"})
    body = r.json()
    assert body["source"] == "graph"
    report = body["report"]
    assert report["tree_count"] == 16
    assert report["min_tree"]["value"] == 1  # the star
    assert report["prop5_ok"] is True
    assert "pair" not in body


def test_spanning_pair_family(client):
    r = client.post("/spanning", json={"pair_family": "fig6"})
    body = r.json()
    assert body["source"] == "fig6"
    assert body["report"]["min_tree"]["value"] == 3
    assert body["pair"]["all_ok"] is True
    assert body["pair"]["gamma_preserving_tree_exists"] is True


def test_spanning_pair_note_when_host_too_dense(client):
    r = client.post(
        "/spanning", json={"pair_family": "starclique", "params": {"m": 4, "n": 3}, "cap": 10}
    )
    body = r.json()
    assert "report" not in body
    assert "cap" in body["note"]
    assert body["pair"]["gamma_g_G"] == 5


def test_spanning_requires_exactly_one_source(client):
    both = client.post(
        "/spanning", json={"graph": "g6:C~", "pair_family": "fig6"}
    )
    neither = client.post("/spanning", json={})
    assert both.status_code == 422
    assert neither.status_code == 422


def test_verify_endpoint(client):
    r = client.post("/verify", json={"suites": ["thm1", "pairs"], "n_max": 4})
    body = r.json()
    assert body["all_passed"] is True
    assert [c["suite"] for c in body["clauses"]] == ["thm1", "pairs"]
    assert body["clauses"][0]["checked"] == 210  # 10 exhaustive + 200 random


def test_error_kinds(client):
    bad_g6 = client.post("/solve", json={"graph": "g6:C"})
    assert bad_g6.status_code == 400
    assert bad_g6.json()["error"]["kind"] == "format"
    bad_vertex = client.post("/solve", json={"graph": "g6:C~", "dominated": [9]})
    assert bad_vertex.status_code == 400
    assert bad_vertex.json()["error"]["kind"] == "contract"
    bad_shape = client.post("/solve", json={"variant": "dominator"})
    assert bad_shape.status_code == 422


def test_unknown_family_is_contract_error(client):
    r = client.post("/family", json={"name": "no-such-family"})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "contract"
