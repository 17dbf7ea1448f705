"""HTTP endpoints: schemas, error mapping, parity with the library."""

import pytest
from fastapi.testclient import TestClient

from qadd import __version__
from qadd.circuit import Circuit
from qadd.service.app import create_app
from qadd.service.schemas import (
    AddResponse,
    DumpResponse,
    ScheduleResponse,
    StatsResponse,
    VerifyResponse,
)


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_reports_version_and_limit(self, client):
        body = client.get("/health").json()
        assert body == {"status": "ok", "version": __version__, "max_qubits": 24}


class TestAdd:
    def test_constant_mode(self, client):
        r = client.post("/add", json={"n": 4, "a": 9, "b": 7, "mode": "constant"})
        assert r.status_code == 200
        body = r.json()
        assert body["sum"] == 0
        assert body["qubits"] == 4
        AddResponse.model_validate(body)  # schema round trip

    def test_ripple_mode(self, client):
        body = client.post("/add", json={"n": 3, "a": 3, "b": 5, "mode": "ripple"}).json()
        assert (body["sum"], body["qubits"]) == (8, 10)

    def test_two_register_mode(self, client):
        body = client.post("/add", json={"n": 4, "a": 1, "b": 0, "mode": "tworegister"}).json()
        assert (body["sum"], body["qubits"]) == (1, 8)

    def test_emit_circuit_round_trips_strict_parser(self, client):
        body = client.post(
            "/add", json={"n": 3, "a": 1, "b": 2, "emit_circuit": True}
        ).json()
        circuit = Circuit.from_json_dict(body["circuit"])
        assert circuit.num_qubits == 3

    def test_domain_error_maps_to_400(self, client):
        r = client.post("/add", json={"n": 4, "a": 99, "b": 0})
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "ValueOutOfRange"

    def test_unknown_field_rejected(self, client):
        r = client.post("/add", json={"n": 4, "a": 1, "b": 2, "bogus": True})
        assert r.status_code == 422

    def test_auto_cutoff_resolved(self, client):
        body = client.post("/add", json={"n": 8, "a": 0, "b": 0, "cutoff": "auto"}).json()
        assert body["cutoff_resolved"] == 3


class TestVerify:
    def test_exhaustive_small_widths(self, client):
        body = client.post("/verify", json={"n": "1..3", "mode": "constant"}).json()
        VerifyResponse.model_validate(body)
        assert body["cases"] == 4 + 16 + 64
        assert body["failures"] == 0
        assert body["first_failure"] is None

    def test_exhaustive_width_limit(self, client):
        r = client.post("/verify", json={"n": 6, "mode": "constant"})
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "InvalidRequest"

    def test_sampled_cutoff_sweep_reports_probability(self, client):
        body = client.post(
            "/verify", json={"n": 8, "cutoff": 3, "samples": 25, "seed": 1}
        ).json()
        assert body["failures"] == 0
        assert 0.0 < body["mean_success_probability"] < 1.0

    def test_ripple_mode(self, client):
        body = client.post("/verify", json={"n": "1..2", "mode": "ripple"}).json()
        assert (body["cases"], body["failures"]) == (20, 0)


class TestStats:
    def test_paper_counts_at_n8(self, client):
        body = client.post("/stats", json={"n": 8, "cutoff": 3}).json()
        StatsResponse.model_validate(body)
        assert body["qft_total"] == 36
        assert body["aqft_rotations"] == 13
        assert body["adder_depth"] == 3
        assert body["qubits_ripple"] == 25
        assert body["counts_verified"] is True

    def test_large_width_uses_formulas(self, client):
        body = client.post("/stats", json={"n": 2048}).json()
        assert body["depth_source"] == "formula"
        assert body["adder_depth"] == 2048
        assert body["qft_total"] == 2048 * 2049 // 2


class TestSchedule:
    def test_commuting_adder(self, client):
        body = client.post(
            "/schedule",
            json={"builder": "constant-adder", "n": 4, "b": 15, "commuting": True},
        ).json()
        ScheduleResponse.model_validate(body)
        assert body["depth"] == 4
        assert body["verified"] is True
        assert sum(len(sl) for sl in body["slices"]) == body["gates"] == 10

    def test_non_commuting_circuit_rejected_in_commuting_mode(self, client):
        r = client.post("/schedule", json={"builder": "qft", "n": 4, "commuting": True})
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "NonCommutingGates"

    def test_large_circuit_skips_behavioral_check(self, client):
        body = client.post(
            "/schedule",
            json={"builder": "two-register-adder", "n": 16, "cutoff": 4, "commuting": True},
        ).json()
        assert body["num_qubits"] == 32
        assert body["verified"] is None
        assert body["depth"] <= 4


class TestDump:
    def test_circuit_json_parses_strictly(self, client):
        body = client.post("/dump", json={"builder": "two-register-pipeline", "n": 3}).json()
        DumpResponse.model_validate(body)
        circuit = Circuit.from_json_dict(body["circuit"])
        assert circuit.num_qubits == 6

    def test_unknown_builder(self, client):
        r = client.post("/dump", json={"builder": "mystery", "n": 3})
        assert r.status_code == 400

    def test_missing_addend(self, client):
        r = client.post("/dump", json={"builder": "constant-adder", "n": 3})
        assert r.status_code == 400
        assert "addend" in r.json()["error"]["message"]
