"""Scheme 2: a conjugated word pair scrambling a cell vector.

The secret key is a permutation X; the public key is a generator pair (A, B)
together with the twisted pair (XAX^-1, XBX^-1). Encryption draws a fresh
256-bit pattern, evaluates it as a word T over the plain pair and as the same
word U over the twisted pair, and sends T alongside the message cells moved by
U. Because conjugation is a homomorphism, X T X^-1 = U, so the keyholder can
rebuild U from T and undo the move. The pattern itself is never transmitted
and never reused.
"""

from __future__ import annotations

from typing import Sequence

from .encoding import word_from_bits
from .errors import DegreeMismatchError, KeyMismatchError, MessageRangeError
from .keys import CELL_LIMIT, Scheme2Ciphertext, Scheme2PublicKey, Scheme2SecretKey
from .perm import Permutation, conjugate
from .rng import RandomSource

WORD_BITS = 256


def keygen(rng: RandomSource, degree: int = 64) -> tuple[Scheme2PublicKey, Scheme2SecretKey]:
    """Generate a key pair; identity draws are regenerated so the twisted pair
    never trivially equals the plain pair."""
    if degree < 2:
        raise ValueError("degree must be at least 2")

    def non_identity() -> Permutation:
        p = Permutation.random(degree, rng)
        while p.is_identity():
            p = Permutation.random(degree, rng)
        return p

    conjugator = non_identity()
    gen0 = non_identity()
    gen1 = non_identity()
    pub = Scheme2PublicKey(
        gen0=gen0,
        gen1=gen1,
        twisted0=conjugate(conjugator, gen0),
        twisted1=conjugate(conjugator, gen1),
    )
    return pub, Scheme2SecretKey(conjugator)


def encrypt(pub: Scheme2PublicKey, cells: Sequence[int], rng: RandomSource) -> Scheme2Ciphertext:
    """Scramble one cell vector under a fresh word pattern."""
    cells = tuple(cells)
    if len(cells) != pub.degree:
        raise DegreeMismatchError(
            f"message has {len(cells)} cells but the key degree is {pub.degree}"
        )
    if any(not 0 <= cell < CELL_LIMIT for cell in cells):
        raise MessageRangeError("cells must be 32-bit unsigned integers")
    pattern = rng.random_bits(WORD_BITS)
    word = word_from_bits(pattern, pub.gen0, pub.gen1)
    mask = word_from_bits(pattern, pub.twisted0, pub.twisted1)
    return Scheme2Ciphertext(word=word, masked=mask.apply(cells))


def decrypt(sec: Scheme2SecretKey, ct: Scheme2Ciphertext) -> tuple[int, ...]:
    """Rebuild the mask word by conjugation and undo the cell move."""
    if ct.degree != sec.degree:
        raise KeyMismatchError(
            f"ciphertext degree {ct.degree} does not match key degree {sec.degree}"
        )
    mask = conjugate(sec.conjugator, ct.word)
    return mask.inverse().apply(ct.masked)
