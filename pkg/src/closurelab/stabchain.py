"""Schreier-Sims stabilizer chains and the queries they answer.

A chain for G fixes a base b_0, b_1, ... and stores, per level l, the
strong generators that fix b_0..b_{l-1} pointwise together with a
transversal for the orbit of b_l under them. Everything else in the
package (order, membership, transporters, stabilizers, and through them
closures and base sizes) reduces to chain queries.

The construction is the deterministic textbook algorithm: verify, level by
level from the bottom, that every Schreier generator sifts to the identity,
adjoining any nontrivial residue as a new strong generator. No
randomization, so chains (and all downstream reports) are reproducible
functions of the generator list.
"""

from __future__ import annotations

from .budget import DEFAULT_MAX_DEGREE
from .errors import DegreeLimitError, DegreeMismatchError
from .perm import Permutation, compose_images, identity_images, inverse_images


class _Level:
    """One chain level: base point, strong generators, transversal."""

    __slots__ = ("beta", "gens", "transversal")

    def __init__(self, beta: int):
        self.beta = beta
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}


def _orbit_transversal(beta: int, gens: list[tuple[int, ...]], degree: int) -> dict[int, tuple[int, ...]]:
    """Breadth-first orbit of beta with coset representatives.

    The representative u stored for a point p satisfies beta^u = p. FIFO
    expansion with generators applied in list order keeps the result
    deterministic.
    """
    trans = {beta: identity_images(degree)}
    queue = [beta]
    head = 0
    while head < len(queue):
        pt = queue[head]
        head += 1
        u = trans[pt]
        for g in gens:
            img = g[pt]
            if img not in trans:
                trans[img] = compose_images(u, g)
                queue.append(img)
    return trans


class StabilizerChain:
    """Verified chain of stabilizers with transversals."""

    def __init__(self, degree: int, levels: list[_Level]):
        self.degree = degree
        self.levels = levels
        self._orbit_ids: dict[int, tuple[int, ...]] = {}

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.beta for level in self.levels)

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def sift(self, images: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        """Strip transversal factors; return (residue, levels consumed)."""
        g = images
        for idx, level in enumerate(self.levels):
            pt = g[level.beta]
            u = level.transversal.get(pt)
            if u is None:
                return g, idx
            if pt != level.beta:
                g = compose_images(g, inverse_images(u))
        return g, len(self.levels)

    def contains_images(self, images: tuple[int, ...]) -> bool:
        residue, _ = self.sift(images)
        return all(i == j for i, j in enumerate(residue))

    def strong_generators(self) -> list[tuple[int, ...]]:
        """All strong generators, deduplicated, level-0 view."""
        seen = []
        have = set()
        for level in self.levels:
            for g in level.gens:
                if g not in have:
                    have.add(g)
                    seen.append(g)
        return seen

    def generators_fixing(self, pts) -> list[tuple[int, ...]]:
        """Strong generators fixing every point of pts (a stabilizer's gens
        when pts is a prefix of the base)."""
        pts = list(pts)
        return [g for g in self.strong_generators() if all(g[p] == p for p in pts)]

    def orbit_ids(self, level_idx: int) -> tuple[int, ...]:
        """Per point, the least point of its orbit under level level_idx's group.

        Level len(levels) is the trivial group (every orbit a singleton).
        Used by the transporter search to prune infeasible branches.
        """
        cached = self._orbit_ids.get(level_idx)
        if cached is not None:
            return cached
        if level_idx >= len(self.levels):
            ids = tuple(range(self.degree))
        else:
            gens = []
            have = set()
            for level in self.levels[level_idx:]:
                for g in level.gens:
                    if g not in have:
                        have.add(g)
                        gens.append(g)
            rep = list(range(self.degree))
            seen = [False] * self.degree
            for start in range(self.degree):
                if seen[start]:
                    continue
                orbit = [start]
                seen[start] = True
                head = 0
                while head < len(orbit):
                    pt = orbit[head]
                    head += 1
                    for g in gens:
                        img = g[pt]
                        if not seen[img]:
                            seen[img] = True
                            orbit.append(img)
                # start is the least point of its orbit by scan order
                for pt in orbit:
                    rep[pt] = start
            ids = tuple(rep)
        self._orbit_ids[level_idx] = ids
        return ids


def build_chain(
    G: "PermGroup",
    preferred_base=None,
    known_order: int | None = None,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> StabilizerChain:
    """Deterministic Schreier-Sims for G, optionally forcing a base prefix.

    With preferred_base, the chain base begins with those points in order
    (duplicates dropped); levels whose orbit is trivial are kept so the
    prefix stays aligned. known_order allows early termination as soon as
    the transversal product reaches it, which is sound because the product
    never exceeds the group order.
    """
    if G.degree > max_degree:
        raise DegreeLimitError(f"degree {G.degree} exceeds guard {max_degree}")
    degree = G.degree
    identity = identity_images(degree)
    gens = [p.images for p in G.generators if p.images != identity]

    levels: list[_Level] = []
    seen_base: set[int] = set()
    if preferred_base:
        for b in preferred_base:
            if b in seen_base:
                continue
            if not 0 <= b < degree:
                raise ValueError(f"base point {b} outside 0..{degree - 1}")
            seen_base.add(b)
            levels.append(_Level(b))
    forced = len(levels)

    def place(g: tuple[int, ...]) -> int:
        """Insert g as a strong generator; return the deepest level it joins."""
        idx = 0
        while True:
            if idx == len(levels):
                moved = min(p for p in range(degree) if g[p] != p)
                levels.append(_Level(moved))
                seen_base.add(moved)
            level = levels[idx]
            level.gens.append(g)
            if g[level.beta] != level.beta:
                return idx
            idx += 1

    for g in gens:
        place(g)

    def refresh(idx: int) -> None:
        level = levels[idx]
        level.transversal = _orbit_transversal(level.beta, level.gens, degree)

    for idx in range(len(levels)):
        refresh(idx)

    def current_order() -> int:
        n = 1
        for level in levels:
            n *= len(level.transversal)
        return n

    def sift_from(g: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
        for idx in range(start, len(levels)):
            level = levels[idx]
            pt = g[level.beta]
            u = level.transversal.get(pt)
            if u is None:
                return g, idx
            if pt != level.beta:
                g = compose_images(g, inverse_images(u))
            if g == identity:
                return g, len(levels)
        return g, len(levels)

    i = len(levels) - 1
    while i >= 0:
        if known_order is not None and current_order() == known_order:
            break
        refresh(i)
        level = levels[i]
        clean = True
        for pt, u in list(level.transversal.items()):
            for s in level.gens:
                # Schreier generator u * s * inv(rep of pt^s)
                img = s[pt]
                w = compose_images(u, s)
                rep = level.transversal[img]
                if w == rep:
                    continue
                g = compose_images(w, inverse_images(rep))
                if g == identity:
                    continue
                residue, stop = sift_from(g, i + 1)
                if residue == identity:
                    continue
                if stop == len(levels):
                    moved = min(p for p in range(degree) if residue[p] != p)
                    levels.append(_Level(moved))
                    stop = len(levels) - 1
                for idx in range(i + 1, stop + 1):
                    levels[idx].gens.append(residue)
                    refresh(idx)
                i = stop
                clean = False
                break
            if not clean:
                break
        if clean:
            i -= 1

    # Drop trailing levels with trivial orbit and no deeper content; keep
    # forced prefix levels so stabilizer extraction by prefix stays valid.
    keep = len(levels)
    while keep > forced and keep > 0 and len(levels[keep - 1].transversal) == 1:
        keep -= 1
    return StabilizerChain(degree, levels[:keep])


class PermGroup:
    """A permutation group given by generators, with a cached chain.

    Generators are kept exactly as supplied (order, duplicates, identities)
    because induced actions align generator lists positionally; the chain
    ignores identity generators internally.
    """

    def __init__(self, degree: int, generators, name: str | None = None, known_order: int | None = None):
        self.degree = degree
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError(f"generator is not a Permutation: {g!r}")
            if g.degree != degree:
                raise DegreeMismatchError(f"generator degree {g.degree} != group degree {degree}")
        self.generators = gens
        self.name = name
        self._known_order = known_order
        self._chain: StabilizerChain | None = None
        self._rebased: dict[tuple[int, ...], StabilizerChain] = {}

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup(degree, (), name="1")

    def chain(self, preferred_base=None) -> StabilizerChain:
        if preferred_base is None:
            if self._chain is None:
                self._chain = build_chain(self, known_order=self._known_order)
            return self._chain
        key = tuple(dict.fromkeys(preferred_base))
        cached = self._rebased.get(key)
        if cached is None:
            # Reuse verified strong generators; their span is already G, so
            # the rebuild mostly recomputes orbits. Known order bounds work.
            seed = PermGroup(self.degree, self._strong_perms(), name=self.name)
            cached = build_chain(seed, preferred_base=key, known_order=self.order())
            self._rebased[key] = cached
        return cached

    def _strong_perms(self) -> tuple[Permutation, ...]:
        if self._chain is None and not self._rebased:
            return self.generators
        chain = self._chain if self._chain is not None else next(iter(self._rebased.values()))
        strong = [Permutation(g) for g in chain.strong_generators()]
        return tuple(strong) if strong else self.generators

    def order(self) -> int:
        return self.chain().order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"element degree {p.degree} != group degree {self.degree}")
        return self.chain().contains_images(p.images)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def orbits(self) -> list[list[int]]:
        """Orbit partition of 0..degree-1; each orbit sorted, sorted by least point."""
        gens = [g.images for g in self.generators]
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            head = 0
            while head < len(orbit):
                pt = orbit[head]
                head += 1
                for g in gens:
                    img = g[pt]
                    if not seen[img]:
                        seen[img] = True
                        orbit.append(img)
            out.append(sorted(orbit))
        return out

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbits()) == 1

    def orbit_of(self, pt: int) -> list[int]:
        gens = [g.images for g in self.generators]
        orbit = [pt]
        seen = {pt}
        head = 0
        while head < len(orbit):
            p = orbit[head]
            head += 1
            for g in gens:
                img = g[p]
                if img not in seen:
                    seen.add(img)
                    orbit.append(img)
        return sorted(orbit)

    def pointwise_stabilizer(self, pts) -> "PermGroup":
        """The subgroup fixing every point of pts, via a chain based there."""
        pts = list(pts)
        for p in pts:
            if not 0 <= p < self.degree:
                raise ValueError(f"point {p} outside 0..{self.degree - 1}")
        chain = self.chain(preferred_base=pts)
        gens = [Permutation(g) for g in chain.generators_fixing(pts)]
        return PermGroup(self.degree, gens)

    def tuple_transporter(self, src, dst) -> Permutation | None:
        return tuple_transporter(self, src, dst)

    def elements(self, limit: int = 2_000_000):
        """All elements by breadth-first closure; guarded by limit.

        Deterministic order of discovery (identity first). Intended for
        desk-scale groups only; order() is the scalable alternative.
        """
        gens = [g.images for g in self.generators]
        identity = identity_images(self.degree)
        seen = {identity}
        queue = [identity]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for g in gens:
                y = compose_images(x, g)
                if y not in seen:
                    if len(seen) >= limit:
                        raise DegreeLimitError(f"element enumeration exceeds limit {limit}")
                    seen.add(y)
                    queue.append(y)
        return [Permutation(x) for x in queue]

    def same_group(self, other: "PermGroup") -> bool:
        """Equality as subgroups of the same symmetric group."""
        if self.degree != other.degree:
            return False
        if self.order() != other.order():
            return False
        return all(self.contains(g) for g in other.generators)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def __repr__(self) -> str:
        label = self.name or f"{len(self.generators)} gens"
        return f"PermGroup(degree={self.degree}, {label})"


def order(G: PermGroup) -> int:
    """Group order via the chain's transversal-size product."""
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    """Membership by sifting to the identity residue."""
    return G.contains(p)


def pointwise_stabilizer(G: PermGroup, pts) -> PermGroup:
    return G.pointwise_stabilizer(pts)


def tuple_transporter(G: PermGroup, src, dst) -> Permutation | None:
    """Some g in G with src^g = dst, or None if no such element exists.

    src must be injective (repeated constraints collapse to their distinct
    entries); a non-injective dst can never be reached from an injective
    tuple, so the answer is None. The search walks the chain level by level,
    always trying the least available image of the level's base point first,
    pruning any branch where some dst entry leaves the orbit of its src
    entry under the level's stabilizer. The witness is therefore canonical
    for a fixed chain.
    """
    src = tuple(src)
    dst = tuple(dst)
    if len(src) != len(dst):
        raise ValueError(f"tuple length mismatch: {len(src)} vs {len(dst)}")
    if len(set(src)) != len(src):
        raise ValueError("src tuple must have pairwise distinct entries")
    for t in (src, dst):
        for p in t:
            if not 0 <= p < G.degree:
                raise ValueError(f"point {p} outside 0..{G.degree - 1}")
    if len(set(dst)) != len(dst):
        return None
    if src == dst:
        return Permutation.identity(G.degree)

    chain = G.chain()
    levels = chain.levels
    degree = G.degree
    identity = identity_images(degree)
    pos_of = {p: j for j, p in enumerate(src)}

    def feasible(level_idx: int, winv: tuple[int, ...]) -> bool:
        ids = chain.orbit_ids(level_idx)
        for j, s in enumerate(src):
            if ids[s] != ids[winv[dst[j]]]:
                return False
        return True

    if not feasible(0, identity):
        return None

    def search(level_idx: int, w: tuple[int, ...], winv: tuple[int, ...]):
        if level_idx == len(levels):
            for j, s in enumerate(src):
                if w[s] != dst[j]:
                    return None
            return w
        level = levels[level_idx]
        j = pos_of.get(level.beta)
        if j is not None:
            # The base point's image is pinned by the constraint itself.
            gamma = winv[dst[j]]
            candidates = [gamma] if gamma in level.transversal else []
        else:
            candidates = sorted(level.transversal)
        for gamma in candidates:
            u = level.transversal[gamma]
            w2 = compose_images(u, w)
            winv2 = compose_images(winv, inverse_images(u))
            if not feasible(level_idx + 1, winv2):
                continue
            found = search(level_idx + 1, w2, winv2)
            if found is not None:
                return found
        return None

    result = search(0, identity, identity)
    return Permutation(result) if result is not None else None
