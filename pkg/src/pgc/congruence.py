"""One-unknown systems of linear congruences, and the permutation discrete log.

The discrete log Q = P^m in S_n reduces to one congruence per cycle of P:
if a cycle has length k and Q sends the cycle's first point to the position-j
point of that cycle, then m ≡ j (mod k). Combining the system with the
generalized CRT (moduli need not be coprime) yields m modulo order(P).
Position matching alone is necessary but not sufficient, so the solver always
verifies P^m = Q before answering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistentSystemError, LcmOverflowError, NotAPowerError
from .perm import U64_MAX, Permutation


@dataclass(frozen=True)
class Congruence:
    """The statement x ≡ residue (mod modulus)."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")

    def holds_for(self, x: int) -> bool:
        return x % self.modulus == self.residue


def _merge(a: Congruence, b: Congruence) -> Congruence:
    g = math.gcd(a.modulus, b.modulus)
    if (b.residue - a.residue) % g != 0:
        raise InconsistentSystemError(
            f"x ≡ {a.residue} (mod {a.modulus}) contradicts x ≡ {b.residue} (mod {b.modulus})"
        )
    lcm = a.modulus // g * b.modulus
    if lcm > U64_MAX:
        raise LcmOverflowError("combined modulus exceeds 64 bits")
    step = b.modulus // g
    t = ((b.residue - a.residue) // g * pow(a.modulus // g, -1, step)) % step
    return Congruence((a.residue + a.modulus * t) % lcm, lcm)


def crt_combine(system: Sequence[Congruence]) -> Congruence:
    """Solve a system of congruences with arbitrary (non-coprime) moduli.

    The result modulus is the lcm of the input moduli; a pair is consistent
    iff its residues agree modulo the gcd of its moduli.

    >>> crt_combine([Congruence(1, 2), Congruence(2, 3)])
    Congruence(residue=5, modulus=6)
    >>> crt_combine([Congruence(2, 4), Congruence(4, 6)])
    Congruence(residue=10, modulus=12)
    """
    if not system:
        raise ValueError("cannot combine an empty system")
    combined = system[0]
    for congruence in system[1:]:
        combined = _merge(combined, congruence)
    return combined


def perm_dlog(base: Permutation, target: Permutation) -> Congruence:
    """Solve target = base^m for m, returned as m mod order(base).

    >>> perm_dlog(Permutation([1, 2, 3, 4, 0]), Permutation([3, 4, 0, 1, 2]))
    Congruence(residue=3, modulus=5)

    Raises NotAPowerError when no power of ``base`` equals ``target``: the
    per-cycle positions may be absent, the congruences inconsistent, or the
    combined candidate may fail the final check.
    """
    if base.degree != target.degree:
        raise ValueError("base and target must have the same degree")
    system = []
    for orbit in base._cycle_orbits():
        try:
            position = orbit.index(target(orbit[0]))
        except ValueError:
            raise NotAPowerError(
                f"target leaves the base cycle through point {orbit[0]}"
            ) from None
        system.append(Congruence(position, len(orbit)))
    try:
        combined = crt_combine(system)
    except InconsistentSystemError as exc:
        raise NotAPowerError("cycle positions are mutually inconsistent") from exc
    if base**combined.residue != target:
        raise NotAPowerError("cycle positions match but the target is not a power")
    return combined
