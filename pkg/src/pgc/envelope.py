"""Byte-stream encryption: chunking, record framing, and reassembly.

An encrypted file is an 8-byte big-endian plaintext length followed by a
sequence of serialized ciphertext records. Scheme 1 interprets the plaintext
as an MSB-first bitstream cut into blocks of capacity_bits(pub) bits (18 for
the default profile), one record per block; scheme 2 cuts the plaintext into
4n-byte chunks, packs each into a cell vector (zero-padded at the tail), one
record per chunk. The length prefix removes the padding on decryption.
"""

from __future__ import annotations

from typing import Sequence

from . import scheme1, scheme2
from .encoding import (
    HEADER_SIZE,
    deserialize,
    object_size,
    pack_message,
    parse_header,
    serialize,
    unpack_message,
)
from .errors import (
    CryptoError,
    FormatError,
    KeyMismatchError,
    MalformedCiphertextError,
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
from .rng import RandomSource

LENGTH_PREFIX_SIZE = 8


def chunk_bits(data: bytes, width: int) -> list[int]:
    """Cut a byte string, read MSB-first, into ceil(8*len/width) blocks of
    ``width`` bits each, the last block zero-padded on the right."""
    if width < 1:
        raise ValueError("block width must be positive")
    total_bits = 8 * len(data)
    count = -(-total_bits // width)
    if count == 0:
        return []
    value = int.from_bytes(data, "big") << (count * width - total_bits)
    mask = (1 << width) - 1
    return [(value >> (width * (count - 1 - i))) & mask for i in range(count)]


def join_bits(blocks: Sequence[int], width: int, byte_length: int) -> bytes:
    """Inverse of chunk_bits given the original byte length."""
    total_bits = width * len(blocks)
    if total_bits < 8 * byte_length:
        raise FormatError("blocks carry fewer bits than the declared length")
    value = 0
    for block in blocks:
        value = (value << width) | block
    value >>= total_bits - 8 * byte_length
    return value.to_bytes(byte_length, "big")


def parse_records(data: bytes) -> list:
    """Split a concatenation of serialized objects and parse each one."""
    records = []
    position = 0
    while position < len(data):
        kind, degree = parse_header(data[position : position + HEADER_SIZE])
        size = object_size(kind, degree)
        if len(data) - position < size:
            raise TruncatedError("stream ends inside a record")
        records.append(deserialize(data[position : position + size]))
        position += size
    return records


def encrypt_bytes(pub, plaintext: bytes, rng: RandomSource) -> bytes:
    """Encrypt an arbitrary byte string under either scheme's public key."""
    if isinstance(pub, Scheme1PublicKey):
        width = scheme1.capacity_bits(pub)
        if width < 1:
            raise CryptoError("base order below 2 leaves no room for message bits")
        records = [
            serialize(scheme1.encrypt(pub, block, rng))
            for block in chunk_bits(plaintext, width)
        ]
    elif isinstance(pub, Scheme2PublicKey):
        block_size = 4 * pub.degree
        records = [
            serialize(
                scheme2.encrypt(pub, pack_message(plaintext[i : i + block_size], pub.degree), rng)
            )
            for i in range(0, len(plaintext), block_size)
        ]
    else:
        raise KeyMismatchError(f"{type(pub).__name__} is not an encryption key")
    return len(plaintext).to_bytes(LENGTH_PREFIX_SIZE, "big") + b"".join(records)


def split_envelope(envelope: bytes) -> tuple[int, list]:
    """Return (plaintext length, parsed records) of an encrypted file."""
    if len(envelope) < LENGTH_PREFIX_SIZE:
        raise TruncatedError("envelope is shorter than its length prefix")
    return int.from_bytes(envelope[:LENGTH_PREFIX_SIZE], "big"), parse_records(
        envelope[LENGTH_PREFIX_SIZE:]
    )


def _check_records(records: list, expected_type, expected_count: int, degree: int) -> None:
    if any(not isinstance(r, expected_type) for r in records):
        raise KeyMismatchError("stream contains records for the other scheme")
    if any(r.degree != degree for r in records):
        raise KeyMismatchError("record degree does not match the key degree")
    if len(records) != expected_count:
        raise FormatError(
            f"declared length needs {expected_count} records, stream has {len(records)}"
        )


def assemble_scheme1(blocks: Sequence[int], width: int, byte_length: int) -> bytes:
    if any(block >= 1 << width for block in blocks):
        raise MalformedCiphertextError("recovered block exceeds the block width")
    return join_bits(blocks, width, byte_length)


def decrypt_bytes(sec, pub, envelope: bytes) -> bytes:
    """Exact inverse of encrypt_bytes given the matching key pair."""
    byte_length, records = split_envelope(envelope)
    if isinstance(sec, Scheme1SecretKey):
        if not isinstance(pub, Scheme1PublicKey):
            raise KeyMismatchError("scheme-1 secret key needs a scheme-1 public key")
        width = scheme1.capacity_bits(pub)
        _check_records(records, Scheme1Ciphertext, -(-8 * byte_length // width), pub.degree)
        blocks = [scheme1.decrypt(sec, pub, record) for record in records]
        return assemble_scheme1(blocks, width, byte_length)
    if isinstance(sec, Scheme2SecretKey):
        if pub is not None and not isinstance(pub, Scheme2PublicKey):
            raise KeyMismatchError("scheme-2 secret key needs a scheme-2 public key")
        if pub is not None and pub.degree != sec.degree:
            raise KeyMismatchError("public and secret key degrees do not match")
        block_size = 4 * sec.degree
        _check_records(records, Scheme2Ciphertext, -(-byte_length // block_size), sec.degree)
        data = b"".join(unpack_message(scheme2.decrypt(sec, record)) for record in records)
        return data[:byte_length]
    raise KeyMismatchError(f"{type(sec).__name__} is not a decryption key")
