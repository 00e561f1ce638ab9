"""Public-key cryptosystems over the symmetric group, and their breaks.

The package is a working laboratory, not a secure system: both schemes are
implemented exactly as designed and the attacks module demonstrates why
neither should ever protect real data.
"""

from . import attacks, congruence, encoding, envelope, errors, scheme1, scheme2
from .congruence import Congruence, crt_combine, perm_dlog
from .encoding import deserialize, pack_message, serialize, unpack_message, word_from_bits
from .keys import (
    Scheme1Ciphertext,
    Scheme1PublicKey,
    Scheme1SecretKey,
    Scheme2Ciphertext,
    Scheme2PublicKey,
    Scheme2SecretKey,
)
from .perm import CycleDecomposition, Permutation, conjugate
from .rng import RandomSource

__version__ = "0.1.0"

__all__ = [
    "Congruence",
    "CycleDecomposition",
    "Permutation",
    "RandomSource",
    "Scheme1Ciphertext",
    "Scheme1PublicKey",
    "Scheme1SecretKey",
    "Scheme2Ciphertext",
    "Scheme2PublicKey",
    "Scheme2SecretKey",
    "attacks",
    "congruence",
    "conjugate",
    "crt_combine",
    "deserialize",
    "encoding",
    "envelope",
    "errors",
    "pack_message",
    "perm_dlog",
    "scheme1",
    "scheme2",
    "serialize",
    "unpack_message",
    "word_from_bits",
]
