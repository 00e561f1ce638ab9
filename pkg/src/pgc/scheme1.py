"""Scheme 1: message-as-exponent encryption masked by conjugation.

Key generation publishes a base element X of known large order, a conjugating
element A, and D = A^a X A^-a for a secret exponent a. Encryption of an
integer m draws a session exponent r and sends (A^r D^m A^-r, A^r X A^-r).
The keyholder conjugates the second component by A^a, obtaining
F = A^(a+r) X A^-(a+r), and the first component equals F^m exactly, so the
cycle-congruence discrete log recovers m. The message space is [0, order(X)).
"""

from __future__ import annotations

from typing import Sequence

from .congruence import NotAPowerError, perm_dlog
from .errors import KeyMismatchError, MalformedCiphertextError, MessageRangeError
from .keys import Scheme1Ciphertext, Scheme1PublicKey, Scheme1SecretKey
from .perm import Permutation, conjugate
from .rng import RandomSource

# Distinct primes with the largest lcm reachable simply under sum <= 64;
# gives the base order 510510 and an 18-bit block capacity.
DEFAULT_CYCLE_PROFILE = (2, 3, 5, 7, 11, 13, 17)


def keygen(
    rng: RandomSource,
    degree: int = 64,
    cycle_profile: Sequence[int] = DEFAULT_CYCLE_PROFILE,
) -> tuple[Scheme1PublicKey, Scheme1SecretKey]:
    """Generate a key pair with the base built from the given cycle lengths.

    The base's cycles are laid out on randomly chosen points (remaining points
    fixed), so order(base) = lcm(cycle_profile). Identity draws of the
    conjugating element are regenerated, which needs degree >= 2.
    """
    if degree < 2:
        raise ValueError("degree must be at least 2")
    profile = tuple(cycle_profile)
    if any(length < 1 for length in profile):
        raise ValueError("cycle lengths must be positive")
    if sum(profile) > degree:
        raise ValueError(f"cycle profile sums to {sum(profile)}, above degree {degree}")

    points = Permutation.random(degree, rng).image
    cycles = []
    position = 0
    for length in profile:
        cycles.append(points[position : position + length])
        position += length
    base = Permutation.from_cycles(degree, cycles)

    conjugator = Permutation.random(degree, rng)
    while conjugator.is_identity():
        conjugator = Permutation.random(degree, rng)

    exponent = 1 + rng.uniform_below(conjugator.order() - 1)
    masked_base = conjugate(conjugator**exponent, base)
    return Scheme1PublicKey(base, conjugator, masked_base), Scheme1SecretKey(exponent)


def message_space(pub: Scheme1PublicKey) -> int:
    """Number of encryptable messages: order of the base element."""
    return pub.base.order()


def capacity_bits(pub: Scheme1PublicKey) -> int:
    """Largest block width w with 2^w <= order(base); 18 for the default profile."""
    return message_space(pub).bit_length() - 1


def encrypt(pub: Scheme1PublicKey, message: int, rng: RandomSource) -> Scheme1Ciphertext:
    """Encrypt an integer in [0, order(base))."""
    space = message_space(pub)
    if not 0 <= message < space:
        raise MessageRangeError(f"message must lie in [0, {space})")
    session = rng.uniform_below(pub.conjugator.order())
    mask = pub.conjugator**session
    return Scheme1Ciphertext(
        masked_power=conjugate(mask, pub.masked_base**message),
        session_base=conjugate(mask, pub.base),
    )


def decrypt(sec: Scheme1SecretKey, pub: Scheme1PublicKey, ct: Scheme1Ciphertext) -> int:
    """Recover the message by solving the per-cycle congruence system."""
    if ct.degree != pub.degree:
        raise KeyMismatchError(
            f"ciphertext degree {ct.degree} does not match key degree {pub.degree}"
        )
    rebuilt_base = conjugate(pub.conjugator**sec.exponent, ct.session_base)
    try:
        return perm_dlog(rebuilt_base, ct.masked_power).residue
    except NotAPowerError as exc:
        raise MalformedCiphertextError(
            "ciphertext is not a power of the rebuilt base element"
        ) from exc
