"""Orbits, transitivity, block systems and induced actions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation, PermutationGroup, point_stabilizer


@dataclass(frozen=True)
class BlockSystem:
    """A partition of ``{0, ..., n-1}`` into ``num_classes`` classes of equal size.

    Class ids are numbered by first appearance in point order.
    """

    class_of: tuple[int, ...]

    def __post_init__(self):
        sizes: dict[int, int] = {}
        for c in self.class_of:
            sizes[c] = sizes.get(c, 0) + 1
        if sorted(sizes) != list(range(len(sizes))):
            raise ValueError("class ids must be 0..d-1")
        if len(set(sizes.values())) > 1:
            raise ValueError(f"classes have unequal sizes {sorted(sizes.values())}")

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], degree: int | None = None) -> BlockSystem:
        classes = [sorted(c) for c in classes]
        n = degree if degree is not None else sum(len(c) for c in classes)
        class_of = [-1] * n
        for cid, members in enumerate(sorted(classes, key=min)):
            for x in members:
                if not 0 <= x < n or class_of[x] != -1:
                    raise ValueError(f"bad or repeated point {x}")
                class_of[x] = cid
        if -1 in class_of:
            raise ValueError("classes do not cover every point")
        return cls(tuple(class_of))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> BlockSystem:
        """Normalise arbitrary labels, renumbering by first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(x, len(remap)) for x in labels))

    @property
    def degree(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @property
    def class_size(self) -> int:
        return self.degree // self.num_classes if self.num_classes else 0

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def is_nontrivial(self) -> bool:
        return 1 < self.class_size < self.degree

    def class_image(self, g: Permutation) -> Permutation:
        """The permutation induced by ``g`` on class ids; raises if not invariant."""
        images = [-1] * self.num_classes
        for x, c in enumerate(self.class_of):
            t = self.class_of[g.images[x]]
            if images[c] == -1:
                images[c] = t
            elif images[c] != t:
                raise ValueError(f"partition not invariant under {g.to_cycles()}: class {c} split")
        return Permutation(images)

    def is_invariant(self, group_or_gens) -> bool:
        gens = getattr(group_or_gens, "generators", group_or_gens)
        try:
            for g in gens:
                self.class_image(g)
        except ValueError:
            return False
        return True


@dataclass(frozen=True)
class InducedAction:
    source: PermutationGroup
    target: PermutationGroup
    kernel_order: int


def orbit(group: PermutationGroup, x: int) -> set[int]:
    if not 0 <= x < group.degree:
        raise ValueError(f"point {x} out of range for degree {group.degree}")
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in group.generators:
                z = g.images[y]
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def orbits(group: PermutationGroup) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for x in range(group.degree):
        if x not in seen:
            o = orbit(group, x)
            seen |= o
            out.append(sorted(o))
    return out


def is_transitive(group: PermutationGroup) -> bool:
    return len(orbit(group, 0)) == group.degree


def is_2_transitive(group: PermutationGroup) -> bool:
    if group.degree < 2:
        raise ValueError("2-transitivity needs degree >= 2")
    if not is_transitive(group):
        return False
    return len(orbit(point_stabilizer(group, 0), 1)) == group.degree - 1


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def minimal_block_system(group: PermutationGroup, a: int, b: int) -> BlockSystem | None:
    """Finest invariant partition putting ``a`` and ``b`` together.

    Returns ``None`` when that partition is the single-class one.
    """
    if a == b:
        raise ValueError("a and b must differ")
    if not is_transitive(group):
        raise ValueError("group is not transitive")
    n = group.degree
    uf = _UnionFind(n)
    uf.union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in group.generators:
            gx, gy = g.images[x], g.images[y]
            if uf.union(gx, gy):
                queue.append((gx, gy))
    labels = [uf.find(x) for x in range(n)]
    if len(set(labels)) == 1:
        return None
    return BlockSystem.from_labels(labels)


def is_primitive(group: PermutationGroup) -> bool:
    if group.degree < 2:
        raise ValueError("primitivity needs degree >= 2")
    if not is_transitive(group):
        raise ValueError("group is not transitive")
    return all(minimal_block_system(group, 0, b) is None for b in range(1, group.degree))


def induced_action_on_classes(group: PermutationGroup, sigma: BlockSystem) -> InducedAction:
    gens = [sigma.class_image(g) for g in group.generators]
    target = PermutationGroup(gens, sigma.num_classes)
    return InducedAction(group, target, group.order() // target.order())


def _on_points_and_classes(group: PermutationGroup, sigma: BlockSystem) -> list[Permutation]:
    n = group.degree
    out = []
    for g in group.generators:
        cls_img = sigma.class_image(g)
        out.append(Permutation(list(g.images) + [n + c for c in cls_img.images], check=False))
    return out


def _restrict(gens: Iterable[Permutation], points: Sequence[int]) -> list[Permutation]:
    index = {x: i for i, x in enumerate(points)}
    return [Permutation([index[g.images[x]] for x in points]) for g in gens]


def class_stabilizer(group: PermutationGroup, sigma: BlockSystem, i: int) -> PermutationGroup:
    """Setwise stabilizer of class ``i`` as a group on all points.

    The group is lifted to its faithful action on points plus classes, the
    class point ``n + i`` is stabilized, and the result projected back.
    """
    if not sigma.is_invariant(group):
        raise ValueError("partition is not invariant under the group")
    n = group.degree
    lifted = PermutationGroup(_on_points_and_classes(group, sigma), n + sigma.num_classes,
                              base_prefix=[n + i])
    gens = [Permutation(g.images[:n], check=False) for g in lifted.stabilizer_chain_generators(1)]
    return PermutationGroup(gens, n)


def class_stabilizer_restricted(group: PermutationGroup, sigma: BlockSystem, i: int) -> InducedAction:
    """``G_Delta`` restricted to the points of class ``Delta = classes[i]``."""
    source = class_stabilizer(group, sigma, i)
    members = sigma.classes()[i]
    target = PermutationGroup(_restrict(source.generators, members), len(members))
    return InducedAction(source, target, source.order() // target.order())


def set_orbit(group: PermutationGroup, s: Iterable[int]) -> list[tuple[int, ...]]:
    """Orbit of a point set, each member as a sorted tuple, in discovery order."""
    start = tuple(sorted(set(s)))
    for x in start:
        if not 0 <= x < group.degree:
            raise ValueError(f"point {x} out of range for degree {group.degree}")
    seen = {start}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for g in group.generators:
                img = tuple(sorted(g.images[x] for x in t))
                if img not in seen:
                    seen.add(img)
                    out.append(img)
                    nxt.append(img)
        frontier = nxt
    return out


def setwise_stabilizer_order(group: PermutationGroup, s: Iterable[int]) -> int:
    return group.order() // len(set_orbit(group, s))


def restrict_to(group: PermutationGroup, points: Sequence[int]) -> PermutationGroup:
    """Action of ``group`` on an invariant subset ``points`` (renumbered 0..)."""
    return PermutationGroup(_restrict(group.generators, points), len(points))
