"""Key and ciphertext containers for both schemes.

Scheme 1 hides the message in the exponent of a conjugated base element:
the public key publishes the base, the conjugating element, and the base
conjugated by a secret power of the conjugating element; the secret key is
that exponent. Scheme 2 hides a word pattern: the public key is a generator
pair together with both generators conjugated by a secret permutation, which
is itself the secret key; a ciphertext carries the public word and the
message cells scrambled by the corresponding twisted word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import U64_MAX, Permutation

CELL_LIMIT = 2**32


def _require_equal_degrees(*perms: Permutation) -> None:
    if len({p.degree for p in perms}) != 1:
        raise ValueError("all permutations in one object must share a degree")


@dataclass(frozen=True)
class Scheme1PublicKey:
    base: Permutation
    conjugator: Permutation
    masked_base: Permutation

    def __post_init__(self):
        _require_equal_degrees(self.base, self.conjugator, self.masked_base)

    @property
    def degree(self) -> int:
        return self.base.degree


@dataclass(frozen=True)
class Scheme1SecretKey:
    exponent: int

    def __post_init__(self):
        if not 1 <= self.exponent <= U64_MAX:
            raise ValueError("secret exponent must be a positive 64-bit integer")


@dataclass(frozen=True)
class Scheme1Ciphertext:
    masked_power: Permutation
    session_base: Permutation

    def __post_init__(self):
        _require_equal_degrees(self.masked_power, self.session_base)

    @property
    def degree(self) -> int:
        return self.masked_power.degree


@dataclass(frozen=True)
class Scheme2PublicKey:
    gen0: Permutation
    gen1: Permutation
    twisted0: Permutation
    twisted1: Permutation

    def __post_init__(self):
        _require_equal_degrees(self.gen0, self.gen1, self.twisted0, self.twisted1)

    @property
    def degree(self) -> int:
        return self.gen0.degree


@dataclass(frozen=True)
class Scheme2SecretKey:
    conjugator: Permutation

    @property
    def degree(self) -> int:
        return self.conjugator.degree


@dataclass(frozen=True)
class Scheme2Ciphertext:
    word: Permutation
    masked: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "masked", tuple(self.masked))
        if len(self.masked) != self.word.degree:
            raise ValueError("masked cell count must equal the word's degree")
        if any(not 0 <= cell < CELL_LIMIT for cell in self.masked):
            raise ValueError("cells must be 32-bit unsigned integers")

    @property
    def degree(self) -> int:
        return self.word.degree
