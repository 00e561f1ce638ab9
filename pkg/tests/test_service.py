import pytest
from fastapi.testclient import TestClient

from pgc import deserialize
from pgc.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


@pytest.fixture(scope="module")
def scheme2_keys(client):
    body = client.post("/v1/keygen", json={"scheme": 2, "seed": "b0b"}).json()
    return body["public_key"], body["secret_key"]


@pytest.fixture(scope="module")
def scheme1_keys(client):
    body = client.post("/v1/keygen", json={"scheme": 1, "seed": "a11ce"}).json()
    return body["public_key"], body["secret_key"]


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


class TestKeygen:
    def test_deterministic_under_seed(self, client):
        first = client.post("/v1/keygen", json={"scheme": 2, "seed": "0fee"}).json()
        second = client.post("/v1/keygen", json={"scheme": 2, "seed": "0fee"}).json()
        assert first == second

    def test_unseeded_keys_differ(self, client):
        first = client.post("/v1/keygen", json={"scheme": 2}).json()
        second = client.post("/v1/keygen", json={"scheme": 2}).json()
        assert first["public_key"] != second["public_key"]

    def test_scheme2_key_sizes(self, scheme2_keys):
        public, secret = scheme2_keys
        assert len(public) // 2 == 263  # 7-byte header + 2048-bit body
        assert len(secret) // 2 == 71

    def test_scheme1_custom_profile(self, client):
        body = client.post(
            "/v1/keygen",
            json={"scheme": 1, "degree": 12, "seed": "01", "cycle_profile": [3, 4]},
        ).json()
        pub = deserialize(bytes.fromhex(body["public_key"]))
        assert pub.base.order() == 12

    def test_profile_rejected_for_scheme2(self, client):
        response = client.post(
            "/v1/keygen", json={"scheme": 2, "cycle_profile": [2, 3]}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "usage"

    def test_oversized_profile(self, client):
        response = client.post(
            "/v1/keygen", json={"scheme": 1, "degree": 8, "cycle_profile": [5, 6]}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "usage"

    def test_invalid_scheme(self, client):
        response = client.post("/v1/keygen", json={"scheme": 3})
        assert response.status_code == 422
        assert response.json()["error"] == "usage"

    def test_invalid_seed_format(self, client):
        response = client.post("/v1/keygen", json={"scheme": 1, "seed": "xyz"})
        assert response.status_code == 422
        assert response.json()["error"] == "usage"


class TestEncryptDecrypt:
    def test_roundtrip_scheme2(self, client, scheme2_keys):
        public, secret = scheme2_keys
        plaintext = bytes(range(64)).hex()
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": public, "plaintext": plaintext, "seed": "11"},
        ).json()
        assert encrypted["scheme"] == 2
        assert encrypted["blocks"] == 1
        decrypted = client.post(
            "/v1/decrypt",
            json={
                "public_key": public,
                "secret_key": secret,
                "ciphertext": encrypted["ciphertext"],
            },
        ).json()
        assert decrypted["plaintext"] == plaintext

    def test_roundtrip_scheme1(self, client, scheme1_keys):
        public, secret = scheme1_keys
        plaintext = b"scheme one, eighteen bits at a time".hex()
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": public, "plaintext": plaintext, "seed": "22"},
        ).json()
        assert encrypted["scheme"] == 1
        decrypted = client.post(
            "/v1/decrypt",
            json={
                "public_key": public,
                "secret_key": secret,
                "ciphertext": encrypted["ciphertext"],
            },
        ).json()
        assert decrypted["plaintext"] == plaintext

    def test_empty_plaintext(self, client, scheme2_keys):
        public, secret = scheme2_keys
        encrypted = client.post(
            "/v1/encrypt", json={"public_key": public, "plaintext": ""}
        ).json()
        assert encrypted["blocks"] == 0
        decrypted = client.post(
            "/v1/decrypt",
            json={
                "public_key": public,
                "secret_key": secret,
                "ciphertext": encrypted["ciphertext"],
            },
        ).json()
        assert decrypted["plaintext"] == ""

    def test_secret_key_rejected_as_public(self, client, scheme2_keys):
        _, secret = scheme2_keys
        response = client.post(
            "/v1/encrypt", json={"public_key": secret, "plaintext": "00"}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "crypto"

    def test_garbage_key_bytes(self, client):
        response = client.post(
            "/v1/encrypt", json={"public_key": "deadbeef", "plaintext": "00"}
        )
        assert response.status_code == 400
        assert response.json()["error"] == "format"

    def test_odd_length_hex_rejected(self, client, scheme2_keys):
        response = client.post(
            "/v1/encrypt", json={"public_key": scheme2_keys[0], "plaintext": "abc"}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "usage"

    def test_mismatched_key_pair(self, client, scheme1_keys, scheme2_keys):
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": scheme1_keys[0], "plaintext": "ff00", "seed": "33"},
        ).json()
        response = client.post(
            "/v1/decrypt",
            json={
                "public_key": scheme1_keys[0],
                "secret_key": scheme2_keys[1],
                "ciphertext": encrypted["ciphertext"],
            },
        )
        assert response.status_code == 422
        assert response.json()["error"] == "crypto"


class TestAttacks:
    def test_scheme1_break(self, client, scheme1_keys):
        public, _ = scheme1_keys
        plaintext = b"no secret needed".hex()
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": public, "plaintext": plaintext, "seed": "44"},
        ).json()
        response = client.post(
            "/v1/attack/scheme1",
            json={"public_key": public, "ciphertext": encrypted["ciphertext"]},
        )
        assert response.status_code == 200
        assert response.json()["plaintext"] == plaintext

    def test_scheme1_attack_needs_scheme1_key(self, client, scheme2_keys):
        response = client.post(
            "/v1/attack/scheme1",
            json={"public_key": scheme2_keys[0], "ciphertext": "00" * 8},
        )
        assert response.status_code == 422
        assert response.json()["error"] == "crypto"

    def test_conjugacy_guard_at_degree_64(self, client, scheme2_keys):
        response = client.post(
            "/v1/attack/conjugacy", json={"public_key": scheme2_keys[0]}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "guard"

    def test_conjugacy_recovers_equivalent_key(self, client):
        keys = client.post(
            "/v1/keygen", json={"scheme": 2, "degree": 6, "seed": "66"}
        ).json()
        found = client.post(
            "/v1/attack/conjugacy", json={"public_key": keys["public_key"]}
        ).json()
        assert found["found"] is True
        plaintext = bytes(range(24)).hex()
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": keys["public_key"], "plaintext": plaintext, "seed": "67"},
        ).json()
        decrypted = client.post(
            "/v1/decrypt",
            json={
                "public_key": keys["public_key"],
                "secret_key": found["secret_key"],
                "ciphertext": encrypted["ciphertext"],
            },
        ).json()
        assert decrypted["plaintext"] == plaintext

    def test_leakage_reports_plaintext_multiset(self, client, scheme2_keys):
        public, _ = scheme2_keys
        block = bytes([1, 2, 3, 4] * 64)  # every cell is 0x01020304
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": public, "plaintext": block.hex(), "seed": "55"},
        ).json()
        response = client.post(
            "/v1/attack/leakage", json={"ciphertext": encrypted["ciphertext"]}
        )
        assert response.status_code == 200
        blocks = response.json()["blocks"]
        assert len(blocks) == 1
        assert blocks[0]["distinct"] == 1
        assert blocks[0]["counts"] == [[0x01020304, 64]]

    def test_leakage_rejects_scheme1_streams(self, client, scheme1_keys):
        encrypted = client.post(
            "/v1/encrypt",
            json={"public_key": scheme1_keys[0], "plaintext": "aa", "seed": "56"},
        ).json()
        response = client.post(
            "/v1/attack/leakage", json={"ciphertext": encrypted["ciphertext"]}
        )
        assert response.status_code == 422
        assert response.json()["error"] == "crypto"


class TestDemo:
    def test_reports_the_headline_figures(self, client):
        body = client.post("/v1/demo", json={"seed": "77"}).json()
        assert body["scheme2"]["public_key_body_bits"] == 2048
        assert body["scheme2"]["plaintext_block_bits"] == 2048
        assert body["scheme2"]["expansion_rate"] == 1.25
        assert body["scheme1"]["base_order"] == 510510
        assert body["scheme1"]["capacity_bits"] == 18

    def test_transcript_is_honest(self, client):
        body = client.post("/v1/demo", json={"seed": "78"}).json()
        assert body["scheme1"]["roundtrip_ok"] is True
        assert body["scheme1"]["attack_ok"] is True
        assert body["scheme2"]["roundtrip_ok"] is True
        assert body["scheme2"]["leaked_multiset_matches"] is True

    def test_deterministic(self, client):
        first = client.post("/v1/demo", json={"seed": "79"}).json()
        second = client.post("/v1/demo", json={"seed": "79"}).json()
        assert first == second
