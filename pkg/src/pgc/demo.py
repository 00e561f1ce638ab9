"""End-to-end walkthrough of both schemes at the default degree.

Produces a JSON-friendly transcript: key sizes (the 2048-bit public-key body
and the 64x32-bit plaintext block at degree 64), a scheme-1 roundtrip plus its
no-secret-key break, and a scheme-2 roundtrip plus its multiset leakage.
"""

from __future__ import annotations

import secrets

from . import attacks, scheme1, scheme2
from .encoding import HEADER_SIZE, pack_message, serialize, unpack_message
from .rng import RandomSource


def _body_bits(obj) -> int:
    return (len(serialize(obj)) - HEADER_SIZE) * 8


# Scanning more session exponents than this is no longer a snappy demo;
# the acceptance suite, not the demo, exercises the slow tail.
_DEMO_SCAN_LIMIT = 2_500_000


def _fitting_profile(degree: int) -> tuple[int, ...]:
    profile = []
    budget = degree
    for length in scheme1.DEFAULT_CYCLE_PROFILE:
        if length > budget:
            break
        profile.append(length)
        budget -= length
    return tuple(profile)


def run_demo(seed: int | None = None, degree: int = 64) -> dict:
    """Run both schemes once and report the transcript; deterministic under a
    fixed seed, otherwise seeded from OS entropy (the seed used is reported)."""
    if seed is None:
        seed = secrets.randbits(64)
    rng = RandomSource(seed)

    profile = _fitting_profile(degree)
    pub1, sec1 = scheme1.keygen(rng, degree, profile)
    message = rng.uniform_below(scheme1.message_space(pub1))
    ct1 = scheme1.encrypt(pub1, message, rng)
    decrypted = scheme1.decrypt(sec1, pub1, ct1)
    if pub1.conjugator.order() <= _DEMO_SCAN_LIMIT:
        cracked = attacks.attack_scheme1(pub1, ct1)
    else:
        cracked = None
    transcript = {
        "seed": f"{seed:016x}",
        "degree": degree,
        "scheme1": {
            "cycle_profile": list(profile),
            "base_order": scheme1.message_space(pub1),
            "capacity_bits": scheme1.capacity_bits(pub1),
            "public_key_body_bits": _body_bits(pub1),
            "ciphertext_body_bits": _body_bits(ct1),
            "message": message,
            "decrypted": decrypted,
            "roundtrip_ok": decrypted == message,
            "attack_recovered": cracked,
            "attack_ok": None if cracked is None else cracked == message,
        },
    }

    pub2, sec2 = scheme2.keygen(rng, degree)
    plain_block = bytes(rng.uniform_below(256) for _ in range(4 * degree))
    cells = pack_message(plain_block, degree)
    ct2 = scheme2.encrypt(pub2, cells, rng)
    recovered = scheme2.decrypt(sec2, ct2)
    report = attacks.leakage_report(ct2)
    block_bits = 32 * degree
    ct2_bits = _body_bits(ct2)
    transcript["scheme2"] = {
        "public_key_body_bits": _body_bits(pub2),
        "plaintext_block_bits": block_bits,
        "ciphertext_body_bits": ct2_bits,
        "expansion_rate": ct2_bits / block_bits,
        "roundtrip_ok": unpack_message(recovered) == plain_block,
        "leaked_multiset_matches": report.cells_sorted == tuple(sorted(cells)),
    }
    return transcript
