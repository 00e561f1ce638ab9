"""The attacks that break both schemes, using public data only.

Scheme 1 falls because its conjugacy instance is constrained to the cyclic
group generated by one public element: sweeping t -> A t A^-1 from the public
base finds the session exponent in at most order(A) steps, after which the
easy permutation discrete log recovers the message. Scheme 2 falls at small
degree to plain enumeration of conjugator candidates, and at any degree its
ciphertext cells are a permutation of the plaintext cells, so the cell
multiset leaks outright.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice, permutations
from typing import Sequence

from .congruence import perm_dlog
from .envelope import assemble_scheme1, split_envelope
from .errors import AttackFailedError, GuardError, KeyMismatchError
from .keys import Scheme1Ciphertext, Scheme1PublicKey, Scheme2Ciphertext
from .perm import Permutation, conjugate
from . import scheme1

CONJUGACY_DEGREE_LIMIT = 9  # 9! = 362,880 candidates; the guard for full enumeration


def _scan_sessions(pub: Scheme1PublicKey, target, start: int, stop: int) -> int | None:
    # entering mid-orbit costs one O(n) power; each step is one conjugation
    candidate = conjugate(pub.conjugator**start, pub.base)
    for step in range(start, stop):
        if candidate == target:
            return step
        candidate = conjugate(pub.conjugator, candidate)
    return None


def attack_scheme1(pub: Scheme1PublicKey, ct: Scheme1Ciphertext, workers: int = 1) -> int:
    """Recover the message of an honest ciphertext without the secret key.

    Scans t_0 = base, t_(k+1) = A t_k A^-1 until it hits the ciphertext's
    session base (at most order(A) steps, O(n) each), then unmasks the power
    component and solves the discrete log against the published masked base.
    Extra workers scan disjoint exponent ranges; the minimum match wins, so
    the result does not depend on the worker count.
    """
    if ct.degree != pub.degree:
        raise KeyMismatchError(
            f"ciphertext degree {ct.degree} does not match key degree {pub.degree}"
        )
    bound = pub.conjugator.order()
    if workers <= 1:
        session = _scan_sessions(pub, ct.session_base, 0, bound)
    else:
        chunk = -(-bound // workers)
        ranges = [(i, min(i + chunk, bound)) for i in range(0, bound, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = [
                h
                for h in pool.map(lambda r: _scan_sessions(pub, ct.session_base, *r), ranges)
                if h is not None
            ]
        session = min(hits) if hits else None
    if session is None:
        raise AttackFailedError("no session exponent below order(A) matches")
    unmasked_power = conjugate(pub.conjugator**-session, ct.masked_power)
    return perm_dlog(pub.masked_base, unmasked_power).residue


def attack_scheme1_stream(pub: Scheme1PublicKey, envelope: bytes) -> tuple[list[int], bytes]:
    """Run attack_scheme1 over every record of an encrypted file; returns the
    recovered block values and the reassembled plaintext."""
    byte_length, records = split_envelope(envelope)
    if any(not isinstance(r, Scheme1Ciphertext) for r in records):
        raise KeyMismatchError("stream contains records that are not scheme-1 ciphertexts")
    blocks = [attack_scheme1(pub, record) for record in records]
    return blocks, assemble_scheme1(blocks, scheme1.capacity_bits(pub), byte_length)


def _matches_all(candidate: tuple[int, ...], pairs) -> bool:
    # conjugate(x, y) == z without allocating: z[x[i]] == x[y[i]] pointwise.
    for y, z in pairs:
        for i, xi in enumerate(candidate):
            if z[xi] != candidate[y[i]]:
                break
        else:
            continue
        return False
    return True


def brute_force_conjugator(
    pairs: Sequence[tuple[Permutation, Permutation]],
    degree: int,
    workers: int = 1,
) -> Permutation | None:
    """Find some x with x y x^-1 = z for every supplied (y, z) pair, by
    enumerating S_degree in lexicographic order of image arrays.

    Returns the lexicographically first solution (None if there is none),
    regardless of worker count: workers scan disjoint contiguous ranges and
    the minimum-index hit wins. The result need not be the key that produced
    the pairs; any solution decrypts equally well.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if degree > CONJUGACY_DEGREE_LIMIT:
        raise GuardError(
            f"degree {degree} exceeds the enumeration guard ({CONJUGACY_DEGREE_LIMIT})"
        )
    raw_pairs = []
    for y, z in pairs:
        if y.degree != degree or z.degree != degree:
            raise ValueError("pair degrees must all equal the search degree")
        raw_pairs.append((y.image, z.image))

    total = 1
    for k in range(2, degree + 1):
        total *= k

    def scan(start: int, stop: int) -> tuple[int, tuple[int, ...]] | None:
        for offset, candidate in enumerate(
            islice(permutations(range(degree)), start, stop)
        ):
            if _matches_all(candidate, raw_pairs):
                return start + offset, candidate
        return None

    if workers <= 1:
        hit = scan(0, total)
    else:
        chunk = -(-total // workers)
        ranges = [(i, min(i + chunk, total)) for i in range(0, total, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = [h for h in pool.map(lambda r: scan(*r), ranges) if h is not None]
        hit = min(hits) if hits else None
    if hit is None:
        return None
    return Permutation(hit[1])


@dataclass(frozen=True)
class LeakageReport:
    """What a scheme-2 ciphertext reveals about its plaintext: the exact
    multiset of cell values."""

    degree: int
    cells_sorted: tuple[int, ...]
    counts: tuple[tuple[int, int], ...]

    @property
    def distinct(self) -> int:
        return len(self.counts)


def leakage_report(ct: Scheme2Ciphertext) -> LeakageReport:
    """Tabulate the ciphertext cells; for any honest ciphertext this equals
    the plaintext multiset because the scheme only transposes cells."""
    counts = tuple(sorted(Counter(ct.masked).items()))
    return LeakageReport(
        degree=ct.degree,
        cells_sorted=tuple(sorted(ct.masked)),
        counts=counts,
    )
