"""Induced actions and their bookkeeping.

Orbits, block systems and primitivity, quotient actions on blocks, actions
on k-subsets and on partitions into equal parts, coset actions, restrictions
to invariant subsets, disjoint unions, and desk-scale subgroup enumeration.
Every construction returns an ActionInstance that remembers where its domain
came from, so downstream reports stay readable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import DEFAULT_MAX_DEGREE
from .errors import (
    BudgetExceededError,
    DegreeLimitError,
    DegreeMismatchError,
    IntransitiveActionError,
    InvalidPartitionError,
    NotASubgroupError,
)
from .perm import Domain, Permutation, compose_images, inverse_images, print_cycles
from .stabchain import PermGroup


@dataclass(frozen=True)
class ActionInstance:
    """A group acting on a labeled domain, with provenance.

    group is the image of the action (a permutation group on the domain);
    source_order is the order of the acting group, so faithfulness and the
    kernel size are always recoverable.
    """

    group: PermGroup
    domain: Domain
    provenance: str
    source_order: int

    def __post_init__(self):
        if self.group.degree != self.domain.size:
            raise DegreeMismatchError(
                f"group degree {self.group.degree} != domain size {self.domain.size}"
            )

    @property
    def degree(self) -> int:
        return self.domain.size

    @property
    def faithful(self) -> bool:
        return self.group.order() == self.source_order

    @property
    def kernel_order(self) -> int:
        return self.source_order // self.group.order()

    def __repr__(self) -> str:
        return f"ActionInstance({self.provenance}, degree={self.degree})"


def natural_action(G: PermGroup) -> ActionInstance:
    """G acting on its own points, labeled 1..n."""
    return ActionInstance(G, Domain.natural(G.degree), "natural", G.order())


@dataclass(frozen=True)
class BlockSystem:
    """An invariant partition of the domain into blocks.

    Blocks are stored sorted internally and ordered by least point, so equal
    systems compare equal.
    """

    blocks: tuple[tuple[int, ...], ...]
    degree: int

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            if not block or tuple(sorted(block)) != block:
                raise InvalidPartitionError(f"block {block} is not sorted and nonempty")
            for p in block:
                if p in seen:
                    raise InvalidPartitionError(f"point {p} appears in two blocks")
                seen.add(p)
        if seen != set(range(self.degree)):
            raise InvalidPartitionError("blocks do not cover the domain")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise InvalidPartitionError("blocks must be ordered by least point")
        lookup = {}
        for idx, block in enumerate(self.blocks):
            for p in block:
                lookup[p] = idx
        object.__setattr__(self, "_lookup", lookup)

    @staticmethod
    def from_blocks(blocks, degree: int) -> "BlockSystem":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return BlockSystem(canon, degree)

    @staticmethod
    def singletons(degree: int) -> "BlockSystem":
        return BlockSystem(tuple((p,) for p in range(degree)), degree)

    def block_of(self, point: int) -> int:
        return self._lookup[point]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def is_singletons(self) -> bool:
        return len(self.blocks) == self.degree

    @property
    def is_universal(self) -> bool:
        return len(self.blocks) == 1

    def labels(self, domain: Domain) -> tuple[str, ...]:
        return tuple(
            "{" + ",".join(domain.labels[p] for p in block) + "}" for block in self.blocks
        )


def orbits(A: ActionInstance) -> list[list[int]]:
    """Orbit partition of the domain, each orbit sorted, ordered by least point."""
    return A.group.orbits()


def is_invariant(G: PermGroup, S: BlockSystem) -> bool:
    for g in G.generators:
        for block in S.blocks:
            j = S.block_of(g(block[0]))
            if {g(p) for p in block} != set(S.blocks[j]):
                return False
    return True


def minimal_block_system(A: ActionInstance, seed_pair) -> BlockSystem:
    """Finest invariant partition with both seed points in one block.

    Classical union-find refinement: identify the seeds, then propagate
    every forced identification through the generators. May return the
    universal partition.
    """
    a, b = seed_pair
    if a == b:
        raise ValueError("seed points must be distinct")
    G = A.group
    if not G.is_transitive():
        raise IntransitiveActionError("block systems are only formed on transitive actions")
    n = G.degree
    gens = [g.images for g in G.generators]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if ry < rx:
            rx, ry = ry, rx
        parent[ry] = rx
        for g in gens:
            queue.append((g[x], g[y]))

    groups: dict[int, list[int]] = {}
    for p in range(n):
        groups.setdefault(find(p), []).append(p)
    return BlockSystem.from_blocks(groups.values(), n)


def is_primitive(A: ActionInstance) -> bool:
    """Transitive with no nontrivial invariant partition; size-1 domains count."""
    G = A.group
    if G.degree == 1:
        return True
    if not G.is_transitive():
        return False
    for beta in range(1, G.degree):
        if minimal_block_system(A, (0, beta)).num_blocks > 1:
            return False
    return True


def maximal_block_systems(A: ActionInstance) -> list[BlockSystem]:
    """All invariant partitions with more than one block and primitive quotient.

    The singleton partition qualifies exactly when the action itself is
    primitive. Found by coarsening each minimal system until the quotient
    turns primitive, with deduplication; ordered by block count, then blocks.
    """
    G = A.group
    if G.degree < 2:
        raise ValueError("maximal block systems need a domain of size at least 2")
    if not G.is_transitive():
        raise IntransitiveActionError("block systems are only formed on transitive actions")
    found: set[tuple[tuple[int, ...], ...]] = set()

    def coarsen(system: BlockSystem) -> None:
        if system.blocks in found:
            return
        Q = quotient_action(A, system)
        if is_primitive(Q):
            found.add(system.blocks)
            return
        m = Q.group.degree
        for beta in range(1, m):
            qsys = minimal_block_system(Q, (0, beta))
            if qsys.num_blocks == 1:
                continue
            pulled = [
                sorted(p for j in qblock for p in system.blocks[j]) for qblock in qsys.blocks
            ]
            coarsen(BlockSystem.from_blocks(pulled, G.degree))

    if is_primitive(A):
        found.add(BlockSystem.singletons(G.degree).blocks)
    else:
        for beta in range(1, G.degree):
            system = minimal_block_system(A, (0, beta))
            if system.num_blocks == 1:
                continue
            coarsen(system)
    systems = [BlockSystem(blocks, G.degree) for blocks in found]
    systems.sort(key=lambda s: (s.num_blocks, s.blocks))
    return systems


def quotient_action(A: ActionInstance, S: BlockSystem) -> ActionInstance:
    """The action induced on the blocks of an invariant partition."""
    G = A.group
    if S.degree != G.degree:
        raise DegreeMismatchError(f"system degree {S.degree} != action degree {G.degree}")
    if not is_invariant(G, S):
        raise InvalidPartitionError("partition is not invariant under the group")
    images = []
    for g in G.generators:
        img = []
        for block in S.blocks:
            j = S.block_of(g(block[0]))
            if {g(p) for p in block} != set(S.blocks[j]):
                raise InvalidPartitionError("partition is not invariant under the group")
            img.append(j)
        images.append(Permutation(tuple(img)))
    domain = Domain(S.labels(A.domain))
    group = PermGroup(S.num_blocks, images)
    return ActionInstance(group, domain, f"blocks({S.num_blocks}x{len(S.blocks[0])})", A.source_order)


def ksubsets_action(G: PermGroup, k: int) -> ActionInstance:
    """G (natural on n points) acting on all k-element subsets."""
    n = G.degree
    if not 1 <= k <= n // 2:
        raise ValueError(f"k must satisfy 1 <= k <= n/2, got k={k} with n={n}")
    subsets = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    images = []
    for g in G.generators:
        images.append(
            Permutation(tuple(index[tuple(sorted(g(p) for p in s))] for s in subsets))
        )
    labels = tuple("{" + ",".join(str(p + 1) for p in s) + "}" for s in subsets)
    return ActionInstance(
        PermGroup(len(subsets), images), Domain(labels), f"ksubsets({k})", G.order()
    )


def _equal_partitions(n: int, a: int, b: int) -> list[tuple[tuple[int, ...], ...]]:
    out: list[tuple[tuple[int, ...], ...]] = []
    points = list(range(n))

    def rec(remaining: list[int], blocks: list[tuple[int, ...]]) -> None:
        if not remaining:
            out.append(tuple(blocks))
            return
        first = remaining[0]
        for rest in combinations(remaining[1:], a - 1):
            taken = {first, *rest}
            blocks.append((first,) + rest)
            rec([p for p in remaining if p not in taken], blocks)
            blocks.pop()

    rec(points, [])
    return out


def partitions_action(G: PermGroup, a: int, b: int) -> ActionInstance:
    """G (natural on n = a*b points) acting on partitions into b parts of size a."""
    n = G.degree
    if a < 2 or b < 2:
        raise ValueError(f"need part size >= 2 and part count >= 2, got a={a}, b={b}")
    if n != a * b:
        raise ValueError(f"degree {n} is not a*b = {a * b}")
    parts = _equal_partitions(n, a, b)
    index = {p: i for i, p in enumerate(parts)}

    def act(g: Permutation, part) -> int:
        moved = sorted(tuple(sorted(g(p) for p in block)) for block in part)
        return index[tuple(moved)]

    images = [Permutation(tuple(act(g, p) for p in parts)) for g in G.generators]
    labels = tuple(
        "|".join("{" + ",".join(str(p + 1) for p in block) + "}" for block in part)
        for part in parts
    )
    return ActionInstance(
        PermGroup(len(parts), images), Domain(labels), f"partitions({a},{b})", G.order()
    )


def _coset_canonical(H_chain, x: tuple[int, ...]) -> tuple[int, ...]:
    """The element of Hx whose base-image tuple is lexicographically least."""
    y = x
    for level in H_chain.levels:
        best = min(level.transversal, key=lambda gamma: y[gamma])
        if best != level.beta:
            y = compose_images(level.transversal[best], y)
    return y


def coset_action(G: PermGroup, H: PermGroup, max_degree: int = DEFAULT_MAX_DEGREE) -> ActionInstance:
    """G acting on the right cosets of H by right multiplication.

    Cosets are identified by a canonical representative (the element with
    least base-image tuple, via H's chain), enumerated breadth-first and
    then ordered by representative. Faithful exactly when H has trivial
    core in G.
    """
    if H.degree != G.degree:
        raise DegreeMismatchError(f"subgroup degree {H.degree} != group degree {G.degree}")
    if not all(G.contains(h) for h in H.generators):
        raise NotASubgroupError("H has a generator outside G")
    index = G.order() // H.order()
    if index > max_degree:
        raise DegreeLimitError(f"index {index} exceeds guard {max_degree}")
    chain = H.chain()
    gens = [g.images for g in G.generators]

    start = _coset_canonical(chain, tuple(range(G.degree)))
    reps = {start}
    queue = [start]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for g in gens:
            y = _coset_canonical(chain, compose_images(x, g))
            if y not in reps:
                reps.add(y)
                queue.append(y)
    ordered = sorted(reps)
    pos = {rep: i for i, rep in enumerate(ordered)}
    images = []
    for g in gens:
        images.append(
            Permutation(tuple(pos[_coset_canonical(chain, compose_images(rep, g))] for rep in ordered))
        )
    labels = tuple("H" + print_cycles(Permutation(rep)) for rep in ordered)
    name = H.name if H.name else "H"
    return ActionInstance(
        PermGroup(len(ordered), images), Domain(labels), f"cosets({name})", G.order()
    )


def identity_coset_point(G: PermGroup, H: PermGroup, A: ActionInstance) -> int:
    """The domain point of coset_action(G, H) that is the coset H itself."""
    rep = _coset_canonical(H.chain(), tuple(range(G.degree)))
    label = "H" + print_cycles(Permutation(rep))
    return A.domain.labels.index(label)


def restriction(A: ActionInstance, points) -> ActionInstance:
    """The action of the same group on an invariant subset, relabeled 0..|Δ|-1."""
    pts = sorted(set(points))
    pt_set = set(pts)
    G = A.group
    for g in G.generators:
        for p in pts:
            if g(p) not in pt_set:
                raise ValueError(f"subset is not invariant: generator moves {p} outside")
    pos = {p: i for i, p in enumerate(pts)}
    images = [Permutation(tuple(pos[g(p)] for p in pts)) for g in G.generators]
    labels = tuple(A.domain.labels[p] for p in pts)
    tag = "{" + ",".join(labels) + "}" if len(pts) <= 12 else f"{len(pts)} points"
    return ActionInstance(
        PermGroup(len(pts), images), Domain(labels), f"restriction({tag})", A.source_order
    )


def union(instances) -> ActionInstance:
    """Disjoint union of actions of one group, acting diagonally.

    Generator lists must align positionally (that is what "same group"
    means here); labels gain a summand prefix "i:".
    """
    instances = list(instances)
    if not instances:
        raise ValueError("union needs at least one action")
    num_gens = len(instances[0].group.generators)
    source = instances[0].source_order
    for inst in instances[1:]:
        if len(inst.group.generators) != num_gens:
            raise ValueError("union summands have mismatched generator counts")
        if inst.source_order != source:
            raise ValueError("union summands disagree on the acting group's order")
    total = sum(inst.degree for inst in instances)
    images = []
    for j in range(num_gens):
        img: list[int] = []
        offset = 0
        for inst in instances:
            g = inst.group.generators[j]
            img.extend(offset + g(p) for p in range(inst.degree))
            offset += inst.degree
        images.append(Permutation(tuple(img)))
    labels = tuple(
        f"{i + 1}:{label}"
        for i, inst in enumerate(instances)
        for label in inst.domain.labels
    )
    tag = ", ".join(inst.provenance for inst in instances)
    return ActionInstance(PermGroup(total, images), Domain(labels), f"union({tag})", source)


def actions_equivalent(a: ActionInstance, b: ActionInstance) -> bool:
    """Whether two transitive actions of one group are the same up to relabeling.

    Decided on the disjoint union: the actions are equivalent exactly when
    the stabilizer of a point on the first side fixes some point on the
    second side (equal degrees force the two point stabilizers to coincide,
    which is the usual stabilizer-conjugacy criterion).
    """
    if not a.group.is_transitive() or not b.group.is_transitive():
        raise IntransitiveActionError("equivalence is defined for transitive actions")
    if a.degree != b.degree:
        return False
    U = union([a, b])
    stab = U.group.pointwise_stabilizer([0])
    for p in range(a.degree, a.degree + b.degree):
        if all(g(p) == p for g in stab.generators):
            return True
    return False


def transitivity_degree(A) -> int:
    """Largest m such that the action is m-transitive (0 if intransitive).

    Accepts an ActionInstance or a PermGroup. Computed by fixing points
    0, 1, 2, ... in order and checking at each step that the stabilizer so
    far is transitive on the rest; m-transitivity does not depend on which
    points are fixed, so this single chain decides it.
    """
    G = A.group if isinstance(A, ActionInstance) else A
    n = G.degree
    m = 0
    fixed: list[int] = []
    H = G
    while m < n:
        rest = [p for p in range(n) if p not in fixed]
        if len(rest) != len(H.orbit_of(rest[0])):
            break
        fixed.append(rest[0])
        m += 1
        if m == n:
            break
        H = G.pointwise_stabilizer(fixed)
    return m


def setwise_block_stabilizer(A: ActionInstance, S: BlockSystem, block_indices) -> PermGroup:
    """Subgroup of A.group mapping each listed block to itself.

    Computed on the auxiliary action on points plus blocks, where the
    setwise stabilizer becomes a pointwise one.
    """
    G = A.group
    n = G.degree
    if not is_invariant(G, S):
        raise InvalidPartitionError("partition is not invariant under the group")
    aux_gens = []
    for g in G.generators:
        tail = tuple(n + S.block_of(g(block[0])) for block in S.blocks)
        aux_gens.append(Permutation(g.images + tail))
    aux = PermGroup(n + S.num_blocks, aux_gens)
    fixed = [n + j for j in block_indices]
    stab = aux.pointwise_stabilizer(fixed)
    return PermGroup(n, [Permutation(h.images[:n]) for h in stab.generators])


def subgroups_up_to_conjugacy(G: PermGroup, order_bound: int = 3000) -> list[PermGroup]:
    """One representative per conjugacy class of subgroups, sorted by order.

    Seeds with the cyclic subgroups, then closes under single-element
    extension of class representatives; every subgroup shows up because it
    is reachable by adjoining generators one at a time along a chain of
    subgroups. Element-set fingerprints deduplicate across classes.
    """
    N = G.order()
    if N > order_bound:
        raise BudgetExceededError(f"group order {N} exceeds subgroup enumeration bound {order_bound}")
    degree = G.degree
    ident = tuple(range(degree))
    elems = sorted(p.images for p in G.elements(limit=order_bound + 1))
    gens = [g.images for g in G.generators if g.images != ident]

    def generated(seed: list[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
        out = {ident}
        queue = [ident]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for s in seed:
                y = compose_images(x, s)
                if y not in out:
                    out.add(y)
                    queue.append(y)
        return frozenset(out)

    def conjugacy_class(H: frozenset[tuple[int, ...]]) -> set[frozenset[tuple[int, ...]]]:
        cls = {H}
        queue = [H]
        head = 0
        while head < len(queue):
            K = queue[head]
            head += 1
            for g in gens:
                gi = inverse_images(g)
                Kg = frozenset(compose_images(compose_images(gi, h), g) for h in K)
                if Kg not in cls:
                    cls.add(Kg)
                    queue.append(Kg)
        return cls

    known: set[frozenset[tuple[int, ...]]] = set()
    reps: list[tuple[frozenset[tuple[int, ...]], list[tuple[int, ...]]]] = []

    def register(H: frozenset[tuple[int, ...]], seed_gens: list[tuple[int, ...]]) -> None:
        if H in known:
            return
        cls = conjugacy_class(H)
        known.update(cls)
        canon = min(cls, key=lambda K: tuple(sorted(K)))
        if canon is not H:
            # regenerate a small generating list for the canonical member
            canon_gens: list[tuple[int, ...]] = []
            closure = {ident}
            for x in sorted(canon):
                if x not in closure:
                    canon_gens.append(x)
                    closure = set(generated(canon_gens))
            seed_gens = canon_gens
        reps.append((canon, seed_gens))

    register(frozenset([ident]), [])
    for x in elems:
        if x == ident:
            continue
        register(generated([x]), [x])

    head = 0
    while head < len(reps):
        H, H_gens = reps[head]
        head += 1
        if len(H) == N:
            continue
        covered = set(H)
        for x in elems:
            if x in covered:
                continue
            covered.update(compose_images(h, x) for h in H)
            K = generated(H_gens + [x])
            register(K, H_gens + [x])

    reps.sort(key=lambda item: (len(item[0]), tuple(sorted(item[0]))))
    out = []
    for H, H_gens in reps:
        perms = [Permutation(g) for g in H_gens]
        out.append(PermGroup(degree, perms, known_order=len(H)))
    return out
