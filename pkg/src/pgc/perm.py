"""Arithmetic in the symmetric group on the points {0, ..., n-1}.

A permutation is stored in word (one-line) form: the tuple ``image`` where
``image[i]`` is the image of point ``i``. Composition is right-to-left:
``(p * q)(i) = p(q(i))``, i.e. ``q`` acts first. Every scheme formula in this
package is stated under that one convention.

Powers are computed by rotating each cycle of the base by ``e mod len(cycle)``,
so ``p ** e`` costs O(n) regardless of the magnitude (or sign) of ``e``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LcmOverflowError

U64_MAX = 2**64 - 1


class Permutation:
    """An element of S_n, immutable and hashable.

    >>> p = Permutation([1, 2, 0])
    >>> p * Permutation([0, 2, 1])
    Permutation([1, 0, 2])
    >>> p.inverse()
    Permutation([2, 0, 1])
    >>> p ** 3 == Permutation.identity(3)
    True
    """

    __slots__ = ("_image", "_orbits")

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        n = len(image)
        if n == 0:
            raise ValueError("degree must be at least 1")
        seen = [False] * n
        for v in image:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError(f"{image!r} is not a permutation of 0..{n - 1}")
            seen[v] = True
        self._image = image
        self._orbits: list[tuple[int, ...]] | None = None

    @classmethod
    def _from_trusted(cls, image: tuple[int, ...]) -> Permutation:
        # Fast path for images that are bijections by construction.
        p = object.__new__(cls)
        p._image = image
        p._orbits = None
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._from_trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build the permutation that maps ``points[j] -> points[(j+1) % k]``
        within each cycle and fixes every unlisted point.

        >>> Permutation.from_cycles(5, [(0, 1), (2, 3, 4)])
        Permutation([1, 0, 3, 4, 2])
        """
        if n < 1:
            raise ValueError("degree must be at least 1")
        image = list(range(n))
        used = [False] * n
        for cycle in cycles:
            points = list(cycle)
            if not points:
                raise ValueError("empty cycle")
            for point in points:
                if not isinstance(point, int) or not 0 <= point < n:
                    raise ValueError(f"cycle point {point!r} out of range for degree {n}")
                if used[point]:
                    raise ValueError(f"cycles overlap at point {point}")
                used[point] = True
            for j, point in enumerate(points):
                image[point] = points[(j + 1) % len(points)]
        return cls._from_trusted(tuple(image))

    @classmethod
    def random(cls, n: int, rng) -> Permutation:
        """Uniformly random element of S_n via Fisher-Yates, driven by ``rng``."""
        if n < 1:
            raise ValueError("degree must be at least 1")
        image = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.uniform_below(i + 1)
            image[i], image[j] = image[j], image[i]
        return cls._from_trusted(tuple(image))

    @property
    def degree(self) -> int:
        return len(self._image)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    def __call__(self, point: int) -> int:
        return self._image[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        mine = self._image
        if len(mine) != len(other._image):
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation._from_trusted(tuple(mine[j] for j in other._image))

    def inverse(self) -> Permutation:
        out = [0] * len(self._image)
        for i, v in enumerate(self._image):
            out[v] = i
        return Permutation._from_trusted(tuple(out))

    __invert__ = inverse

    def __pow__(self, e: int) -> Permutation:
        """``p ** e`` for any integer ``e``; negative exponents are powers of
        the inverse. Each cycle is rotated by ``e mod len(cycle)``, so the
        cost does not depend on ``e``.
        """
        image = list(range(len(self._image)))
        for orbit in self._cycle_orbits():
            k = len(orbit)
            shift = e % k
            for j, point in enumerate(orbit):
                image[point] = orbit[(j + shift) % k]
        return Permutation._from_trusted(tuple(image))

    def _cycle_orbits(self) -> list[tuple[int, ...]]:
        # Canonical by construction: scanning starts ascend, so each orbit
        # begins at its minimum and orbits are ordered by that minimum.
        if self._orbits is None:
            image = self._image
            seen = [False] * len(image)
            orbits = []
            for start in range(len(image)):
                if seen[start]:
                    continue
                orbit = [start]
                seen[start] = True
                point = image[start]
                while point != start:
                    orbit.append(point)
                    seen[point] = True
                    point = image[point]
                orbits.append(tuple(orbit))
            self._orbits = orbits
        return self._orbits

    def cycles(self) -> CycleDecomposition:
        """Disjoint-cycle form, fixed points included as length-1 cycles.

        >>> Permutation([1, 0, 3, 4, 2]).cycles().cycles
        ((0, 1), (2, 3, 4))
        """
        return CycleDecomposition(len(self._image), tuple(self._cycle_orbits()))

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order; invariant under conjugation."""
        return tuple(sorted((len(o) for o in self._cycle_orbits()), reverse=True))

    def order(self) -> int:
        """Least positive e with ``p ** e`` the identity: the lcm of the cycle
        lengths. Raises LcmOverflowError beyond the 64-bit limit.

        >>> Permutation([1, 0, 3, 4, 2]).order()
        6
        """
        result = 1
        for orbit in self._cycle_orbits():
            result = math.lcm(result, len(orbit))
            if result > U64_MAX:
                raise LcmOverflowError("permutation order exceeds 64 bits")
        return result

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._image))

    def apply(self, cells: Sequence[int]) -> tuple[int, ...]:
        """Act on a cell vector: the cell at position i moves to position p(i).

        >>> Permutation([1, 2, 0]).apply([10, 20, 30])
        (30, 10, 20)
        """
        if len(cells) != len(self._image):
            raise ValueError("cell vector length must equal the degree")
        out = [0] * len(cells)
        for i, v in enumerate(self._image):
            out[v] = cells[i]
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self) -> int:
        return hash(self._image)

    def __repr__(self) -> str:
        return f"Permutation({list(self._image)})"

    def __str__(self) -> str:
        parts = [f"({' '.join(map(str, o))})" for o in self._cycle_orbits() if len(o) > 1]
        return "".join(parts) if parts else "()"


def conjugate(x: Permutation, y: Permutation) -> Permutation:
    """The conjugate x * y * x^-1; has the same cycle type as ``y`` and is a
    homomorphism in ``y`` (the algebraic fact both schemes lean on).

    >>> x, y = Permutation([1, 2, 0]), Permutation([1, 0, 2])
    >>> conjugate(x, y) == x * y * x.inverse()
    True
    """
    xi = x._image
    yi = y._image
    if len(xi) != len(yi):
        raise ValueError("cannot conjugate permutations of different degrees")
    out = [0] * len(xi)
    for i, xv in enumerate(xi):
        out[xv] = xi[yi[i]]
    return Permutation._from_trusted(tuple(out))


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint-cycle form of a permutation.

    The cycles partition {0..degree-1} (fixed points appear as 1-cycles), each
    cycle starts at its minimum point, and cycles are sorted by that minimum,
    so equal permutations always decompose to equal objects.
    """

    degree: int
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = [False] * self.degree
        previous_min = -1
        for cycle in self.cycles:
            if not cycle or min(cycle) != cycle[0] or cycle[0] <= previous_min:
                raise ValueError("cycles must start at their minimum, in ascending order")
            previous_min = cycle[0]
            for point in cycle:
                if not 0 <= point < self.degree or seen[point]:
                    raise ValueError("cycles must partition the points exactly once")
                seen[point] = True
        if not all(seen):
            raise ValueError("cycles must cover every point (fixed points as 1-cycles)")

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.degree, self.cycles)
