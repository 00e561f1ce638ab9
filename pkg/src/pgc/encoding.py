"""Bit-to-group-element word encoding, message packing, and the wire format.

Words over a generator pair: a bit list selects generator 0 or 1 per bit and
the selected elements are multiplied together with earlier bits acting first.
Under this package's composition convention that means left-multiplying the
accumulator by each selected generator in turn. Both parties must share this
order; it is normative.

Wire format (normative, bit-exact):

    magic   3 bytes  0x50 0x47 0x43 ("PGC")
    version 1 byte   0x01
    kind    1 byte   see KIND_* constants
    degree  2 bytes  unsigned big-endian
    body    kind-specific, length fully determined by (kind, degree)

Permutations serialize as one byte per point for degree <= 256, else two
bytes big-endian per point, image values in index order. Cells are 32-bit
big-endian. The scheme-1 secret exponent is a 64-bit big-endian integer.
"""

from __future__ import annotations

import struct
from typing import Sequence

from .errors import (
    BadKindError,
    BadMagicError,
    BadVersionError,
    BlockOverflowError,
    FormatError,
    NonBijectiveImageError,
    TrailingDataError,
    TruncatedError,
)
from .keys import (
    Scheme1Ciphertext,
    Scheme1PublicKey,
    Scheme1SecretKey,
    Scheme2Ciphertext,
    Scheme2PublicKey,
    Scheme2SecretKey,
)
from .perm import Permutation

MAGIC = b"PGC"
VERSION = 0x01
HEADER_SIZE = 7

KIND_SCHEME1_PUBLIC = 0x01
KIND_SCHEME1_SECRET = 0x02
KIND_SCHEME2_PUBLIC = 0x03
KIND_SCHEME2_SECRET = 0x04
KIND_SCHEME1_CIPHERTEXT = 0x05
KIND_SCHEME2_CIPHERTEXT = 0x06

KIND_NAMES = {
    KIND_SCHEME1_PUBLIC: "scheme1-public",
    KIND_SCHEME1_SECRET: "scheme1-secret",
    KIND_SCHEME2_PUBLIC: "scheme2-public",
    KIND_SCHEME2_SECRET: "scheme2-secret",
    KIND_SCHEME1_CIPHERTEXT: "scheme1-ciphertext",
    KIND_SCHEME2_CIPHERTEXT: "scheme2-ciphertext",
}

_KIND_BY_TYPE = {
    Scheme1PublicKey: KIND_SCHEME1_PUBLIC,
    Scheme1SecretKey: KIND_SCHEME1_SECRET,
    Scheme2PublicKey: KIND_SCHEME2_PUBLIC,
    Scheme2SecretKey: KIND_SCHEME2_SECRET,
    Scheme1Ciphertext: KIND_SCHEME1_CIPHERTEXT,
    Scheme2Ciphertext: KIND_SCHEME2_CIPHERTEXT,
}


def word_from_bits(bits: Sequence[int], gen0: Permutation, gen1: Permutation) -> Permutation:
    """Evaluate the word selected by ``bits`` over the generator pair.

    Earlier bits act first: the result applied to a point runs the generator
    of bits[0], then bits[1], and so on.

    >>> g0, g1 = Permutation([1, 0, 2]), Permutation([0, 2, 1])
    >>> word_from_bits([0, 1], g0, g1) == g1 * g0
    True
    """
    if not bits:
        raise ValueError("bit list must be non-empty")
    if gen0.degree != gen1.degree:
        raise ValueError("generators must have the same degree")
    word = Permutation.identity(gen0.degree)
    for bit in bits:
        if bit == 0:
            word = gen0 * word
        elif bit == 1:
            word = gen1 * word
        else:
            raise ValueError(f"bit value {bit!r} is not 0 or 1")
    return word


def point_width(degree: int) -> int:
    return 1 if degree <= 256 else 2


def serialize_permutation(p: Permutation) -> bytes:
    """Permutation body bytes: degree-64 elements occupy exactly 64 bytes."""
    if p.degree > 65535:
        raise ValueError("degree above 65535 is not serializable")
    if point_width(p.degree) == 1:
        return bytes(p.image)
    return b"".join(struct.pack(">H", v) for v in p.image)


def permutation_body_size(degree: int) -> int:
    return degree * point_width(degree)


def object_body_size(kind: int, degree: int) -> int:
    perm = permutation_body_size(degree)
    if kind == KIND_SCHEME1_PUBLIC:
        return 3 * perm
    if kind == KIND_SCHEME1_SECRET:
        return 8
    if kind == KIND_SCHEME2_PUBLIC:
        return 4 * perm
    if kind == KIND_SCHEME2_SECRET:
        return perm
    if kind == KIND_SCHEME1_CIPHERTEXT:
        return 2 * perm
    if kind == KIND_SCHEME2_CIPHERTEXT:
        return perm + 4 * degree
    raise BadKindError(f"unknown kind byte 0x{kind:02X}")


def object_size(kind: int, degree: int) -> int:
    return HEADER_SIZE + object_body_size(kind, degree)


def parse_header(data: bytes) -> tuple[int, int]:
    """Validate a serialized object's header and return (kind, degree)."""
    if len(data) < HEADER_SIZE:
        raise TruncatedError(f"need {HEADER_SIZE} header bytes, got {len(data)}")
    if data[:3] != MAGIC:
        raise BadMagicError(f"bad magic {data[:3]!r}")
    if data[3] != VERSION:
        raise BadVersionError(f"unsupported version 0x{data[3]:02X}")
    kind = data[4]
    if kind not in KIND_NAMES:
        raise BadKindError(f"unknown kind byte 0x{kind:02X}")
    degree = int.from_bytes(data[5:7], "big")
    if degree < 1:
        raise FormatError("degree field must be at least 1")
    return kind, degree


def serialize(obj) -> bytes:
    """Serialize any key or ciphertext object to its canonical bytes."""
    kind = _KIND_BY_TYPE.get(type(obj))
    if kind is None:
        raise TypeError(f"{type(obj).__name__} is not a serializable object")
    if kind == KIND_SCHEME1_PUBLIC:
        degree = obj.degree
        body = b"".join(
            serialize_permutation(p) for p in (obj.base, obj.conjugator, obj.masked_base)
        )
    elif kind == KIND_SCHEME1_SECRET:
        # a bare integer has no degree; the field width is fixed at 8 bytes
        degree = 1
        body = obj.exponent.to_bytes(8, "big")
    elif kind == KIND_SCHEME2_PUBLIC:
        degree = obj.degree
        body = b"".join(
            serialize_permutation(p)
            for p in (obj.gen0, obj.gen1, obj.twisted0, obj.twisted1)
        )
    elif kind == KIND_SCHEME2_SECRET:
        degree = obj.degree
        body = serialize_permutation(obj.conjugator)
    elif kind == KIND_SCHEME1_CIPHERTEXT:
        degree = obj.degree
        body = serialize_permutation(obj.masked_power) + serialize_permutation(obj.session_base)
    else:
        degree = obj.degree
        body = serialize_permutation(obj.word) + struct.pack(f">{degree}I", *obj.masked)
    return MAGIC + bytes([VERSION, kind]) + degree.to_bytes(2, "big") + body


def _read_permutation(body: bytes, offset: int, degree: int) -> tuple[Permutation, int]:
    width = point_width(degree)
    end = offset + degree * width
    if width == 1:
        values = list(body[offset:end])
    else:
        values = [int.from_bytes(body[i : i + 2], "big") for i in range(offset, end, 2)]
    try:
        return Permutation(values), end
    except ValueError as exc:
        raise NonBijectiveImageError(str(exc)) from exc


def deserialize(data: bytes):
    """Parse canonical bytes back into the matching key or ciphertext object.

    Every embedded permutation is re-validated as a bijection; a body of the
    wrong length raises TruncatedError or TrailingDataError.
    """
    kind, degree = parse_header(data)
    expected = object_size(kind, degree)
    if len(data) < expected:
        raise TruncatedError(
            f"{KIND_NAMES[kind]} at degree {degree} needs {expected} bytes, got {len(data)}"
        )
    if len(data) > expected:
        raise TrailingDataError(f"{len(data) - expected} unexpected bytes after the body")
    body = data[HEADER_SIZE:]
    if kind == KIND_SCHEME1_PUBLIC:
        base, offset = _read_permutation(body, 0, degree)
        conjugator, offset = _read_permutation(body, offset, degree)
        masked_base, _ = _read_permutation(body, offset, degree)
        return Scheme1PublicKey(base, conjugator, masked_base)
    if kind == KIND_SCHEME1_SECRET:
        exponent = int.from_bytes(body, "big")
        if exponent == 0:
            raise FormatError("secret exponent must be positive")
        return Scheme1SecretKey(exponent)
    if kind == KIND_SCHEME2_PUBLIC:
        gen0, offset = _read_permutation(body, 0, degree)
        gen1, offset = _read_permutation(body, offset, degree)
        twisted0, offset = _read_permutation(body, offset, degree)
        twisted1, _ = _read_permutation(body, offset, degree)
        return Scheme2PublicKey(gen0, gen1, twisted0, twisted1)
    if kind == KIND_SCHEME2_SECRET:
        conjugator, _ = _read_permutation(body, 0, degree)
        return Scheme2SecretKey(conjugator)
    if kind == KIND_SCHEME1_CIPHERTEXT:
        masked_power, offset = _read_permutation(body, 0, degree)
        session_base, _ = _read_permutation(body, offset, degree)
        return Scheme1Ciphertext(masked_power, session_base)
    word, offset = _read_permutation(body, 0, degree)
    cells = struct.unpack(f">{degree}I", body[offset:])
    return Scheme2Ciphertext(word, cells)


def pack_message(data: bytes, degree: int) -> tuple[int, ...]:
    """Pack at most 4*degree bytes into a cell vector, big-endian, zero-padded.

    >>> pack_message(b"\\x01\\x02\\x03\\x04\\x05", 2)
    (16909060, 83886080)
    """
    if len(data) > 4 * degree:
        raise BlockOverflowError(f"{len(data)} bytes exceed the {4 * degree}-byte block")
    padded = data + b"\x00" * (4 * degree - len(data))
    return struct.unpack(f">{degree}I", padded)


def unpack_message(cells: Sequence[int]) -> bytes:
    """Inverse of pack_message, padding included."""
    return struct.pack(f">{len(cells)}I", *cells)


def hex_armor(data: bytes) -> bytes:
    """Encode bytes as a single lowercase-hex line."""
    return data.hex().encode("ascii") + b"\n"


def dearmor(data: bytes) -> bytes:
    """Accept either raw format bytes or a hex-armored line.

    Raw content is recognized by its first byte: serialized objects start with
    0x50 ("P") and ciphertext envelopes with 0x00 (length prefix), neither of
    which is a hex digit's ASCII code.
    """
    if data[:1] in (b"P", b"\x00"):
        return data
    text = data.decode("ascii", errors="replace").strip()
    try:
        return bytes.fromhex(text)
    except ValueError:
        raise FormatError("input is neither raw PGC bytes nor a hex line") from None
