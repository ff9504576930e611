"""Finite permutation groups in one-line notation.

Degree is generic even though the rest of the package only ever feeds S4
into the representation layer.  Elements are immutable and hashable; a
generated group keeps its elements sorted lexicographically by their
one-line images, which pins down every index used downstream (orbit labels,
term order, JSON output).
"""

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "Permutation",
    "GroupTable",
    "compose",
    "generate_group",
    "symmetric_group",
    "sign",
    "cycle_type",
    "parse_cycles",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}; images[k] is where k maps."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(k) for k in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k]

    def __mul__(self, other):
        """Composition acting right to left: (p * q)(k) = p(q(k))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(
                f"incompatible permutations: degree {self.degree} vs {other.degree}"
            )
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        inv = [0] * self.degree
        for k, j in enumerate(self.images):
            inv[j] = k
        return Permutation(tuple(inv))

    def cycles(self):
        """Disjoint cycles of length >= 2, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self):
        """Multiset of cycle lengths, sorted decreasing (fixed points included)."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def sign(self):
        return -1 if (self.degree - len(self.cycle_type())) % 2 else 1

    def cycle_string(self):
        """Cycle notation with 1-based points; the identity prints as "e"."""
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(str(k + 1) for k in c) + ")" for c in cycles)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def transposition(cls, i, j, degree):
        """Swap of the 0-based points i and j."""
        images = list(range(degree))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))


def compose(p, q):
    """(p o q)(k) = p(q(k)); both factors must share the same degree."""
    return p * q


def sign(p):
    return p.sign()


def cycle_type(p):
    return p.cycle_type()


@dataclass(frozen=True)
class GroupTable:
    """All elements of a finite permutation group, in canonical order.

    The canonical order is lexicographic on one-line images, which places
    the identity at index 0.  Multiplication and inversion are precomputed
    as index tables.
    """

    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")

    @property
    def order(self):
        return len(self.elements)

    @property
    def degree(self):
        return self.elements[0].degree

    @cached_property
    def _index(self):
        return {p: k for k, p in enumerate(self.elements)}

    def index(self, p):
        return self._index[p]

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    @cached_property
    def product_table(self):
        """product_table[i, j] is the index of elements[i] * elements[j]."""
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for i, p in enumerate(self.elements):
            for j, q in enumerate(self.elements):
                table[i, j] = self._index[p * q]
        table.setflags(write=False)
        return table

    @cached_property
    def inverse_table(self):
        table = np.array([self._index[p.inverse()] for p in self.elements])
        table.setflags(write=False)
        return table

    @cached_property
    def conjugacy_classes(self):
        """Element indices grouped by cycle type (conjugacy class in S_n)."""
        classes = {}
        for k, p in enumerate(self.elements):
            classes.setdefault(p.cycle_type(), []).append(k)
        return {ct: tuple(idx) for ct, idx in sorted(classes.items())}


def generate_group(generators):
    """Close a nonempty set of same-degree permutations under composition.

    Finiteness makes the closure a group (inverses are powers), so a plain
    breadth-first product closure suffices.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise ValueError(
                f"incompatible permutations: degree {g.degree} vs {degree}"
            )
    seen = {Permutation.identity(degree)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for p in frontier:
            for g in generators:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    fresh.append(q)
        frontier = fresh
    return GroupTable(tuple(sorted(seen, key=lambda p: p.images)))


def symmetric_group(degree):
    """The full symmetric group on `degree` points."""
    gens = [Permutation.transposition(i, i + 1, degree) for i in range(degree - 1)]
    if not gens:
        gens = [Permutation.identity(degree)]
    return generate_group(gens)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse cycle notation like "(1 2)(3 4)" with 1-based points.

    Commas are accepted alongside spaces; "e" (or "()") denotes the
    identity.  Cycles are composed left to right as maps, i.e. the
    rightmost cycle acts first, which is immaterial for the usual
    disjoint-cycle input.
    """
    stripped = text.strip()
    if stripped in ("e", "()", ""):
        return Permutation.identity(degree)
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    result = Permutation.identity(degree)
    for body in _CYCLE_RE.findall(stripped):
        points = [tok for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if len(points) < 2:
            raise ValueError(f"cycle needs at least two points: ({body})")
        try:
            pts = [int(tok) - 1 for tok in points]
        except ValueError:
            raise ValueError(f"non-integer point in cycle: ({body})") from None
        if any(not 0 <= k < degree for k in pts):
            raise ValueError(f"point out of range 1..{degree}: ({body})")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: ({body})")
        images = list(range(degree))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
        result = result * Permutation(tuple(images))
    return result
