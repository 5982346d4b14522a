"""Permutations on a fixed finite domain, plus cycle-notation text.

Points are 0-based integers internally; every text format (cycle notation,
domain labels, reports) is 1-based. A permutation is stored as its image
sequence: p.images[i] is the image of point i. Points act on the right,
so (alpha)^(pq) = ((alpha)^p)^q and compose(p, q) means "apply p, then q".
Degree is fixed per permutation; mixing degrees is an error, never padding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CycleParseError, DegreeMismatchError

# Raw-tuple helpers. Hot loops elsewhere in the package work on plain image
# tuples and only wrap results into Permutation at API boundaries.


def compose_images(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of p-then-q."""
    return tuple(q[i] for i in p)


def inverse_images(p: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of the inverse of p."""
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity_images(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


class Permutation:
    """An immutable bijection of {0, ..., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    def __call__(self, point: int) -> int:
        """Image of a single point."""
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation(inverse_images(self.images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted by it."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        # Point-image lexicographic order; used for canonical sorting in reports.
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({print_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product p-then-q: result.images[i] = q.images[p.images[i]]."""
    if p.degree != q.degree:
        raise DegreeMismatchError(f"compose: degree {p.degree} vs {q.degree}")
    return Permutation(compose_images(p.images, q.images))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles of 1-based points, separated by spaces or commas.

    "(1 2 3)(4 5)" with degree 5 gives images [1,2,0,4,3]. The empty string
    and "()" both denote the identity. Repeated points, points outside
    1..degree, and unbalanced parentheses raise CycleParseError with the
    offending character position.
    """
    images = list(range(degree))
    seen: set[int] = set()
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", i)
        i += 1
        cycle: list[int] = []
        while True:
            while i < n and (text[i].isspace() or text[i] == ","):
                i += 1
            if i >= n:
                raise CycleParseError("unclosed cycle", i)
            if text[i] == ")":
                i += 1
                break
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i == start:
                raise CycleParseError(f"expected a point but found {text[i]!r}", i)
            pt = int(text[start:i])
            if not 1 <= pt <= degree:
                raise CycleParseError(f"point {pt} outside 1..{degree}", start)
            if pt - 1 in seen:
                raise CycleParseError(f"repeated point {pt}", start)
            seen.add(pt - 1)
            cycle.append(pt - 1)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Permutation(images)


def print_cycles(p: Permutation) -> str:
    """Cycle notation, 1-based; the identity prints as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycles)


@dataclass(frozen=True)
class Domain:
    """A labeled point set: index i carries the printable label labels[i]."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("domain labels must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    @staticmethod
    def natural(n: int) -> "Domain":
        """Points labeled "1" .. "n"."""
        return Domain(tuple(str(i + 1) for i in range(n)))
