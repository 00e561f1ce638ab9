"""Exception hierarchy.

Every domain error derives from :class:`PgcError` and carries a ``category``
("format", "crypto" or "guard") that the service maps to an HTTP error payload
and the CLI maps to an exit code. Programming-contract violations (bad argument
types, impossible degrees, non-bit values) raise plain ``ValueError`` instead.
"""


class PgcError(Exception):
    """Base class for all domain errors raised by this package."""

    category = "crypto"


class FormatError(PgcError):
    """A byte stream does not conform to the serialization format."""

    category = "format"


class BadMagicError(FormatError):
    """Serialized object does not start with the PGC magic bytes."""


class BadVersionError(FormatError):
    """Serialized object carries an unsupported format version."""


class BadKindError(FormatError):
    """Serialized object carries an unknown kind byte."""


class TruncatedError(FormatError):
    """Serialized object or stream is shorter than its header demands."""


class TrailingDataError(FormatError):
    """Serialized object is followed by bytes its header does not account for."""


class NonBijectiveImageError(FormatError):
    """An embedded permutation body is not a bijection on its points."""


class CryptoError(PgcError):
    """A cryptographic operation was given inputs outside its contract."""

    category = "crypto"


class DegreeMismatchError(CryptoError):
    """Key, ciphertext or message degrees do not agree."""


class KeyMismatchError(CryptoError):
    """A key object is of the wrong kind for the requested operation."""


class MessageRangeError(CryptoError):
    """A message lies outside the scheme's message space."""


class BlockOverflowError(CryptoError):
    """A message block is longer than one cell vector can carry."""


class LcmOverflowError(CryptoError):
    """An lcm of cycle lengths or moduli exceeds the 64-bit limit."""


class InconsistentSystemError(CryptoError):
    """A system of congruences admits no simultaneous solution."""


class NotAPowerError(CryptoError):
    """The discrete-log target is not a power of the base permutation."""


class MalformedCiphertextError(CryptoError):
    """A ciphertext cannot have been produced under the given key."""


class AttackFailedError(CryptoError):
    """An attack's search space was exhausted without a match."""


class GuardError(PgcError):
    """A brute-force search exceeds its configured safety bound."""

    category = "guard"
