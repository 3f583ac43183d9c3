"""Permutations and permutation groups with a deterministic Schreier-Sims chain.

Points are 0-based. Permutations act on the right: ``compose(a, b)`` sends
``x`` to ``b(a(x))``, so products read left to right like cycle notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence


class Permutation:
    """An immutable bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return self.inverse()

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, e: int) -> Permutation:
        base = self if e >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        e = abs(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def first_moved(self) -> int | None:
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def to_cycles(self) -> str:
        """Cycle notation accepted back by :func:`perm_from_cycles`."""
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycles() or '()'}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s+\d+)*)?\s*\)")


def perm_from_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(0 1 2)(3 4)"``.

    The empty string is the identity. Points missing from ``text`` are fixed.
    """
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(text, pos)
        if m is None:
            raise ValueError(f"malformed cycle notation at offset {pos}: {text!r}")
        cycle = [int(t) for t in (m.group(1) or "").split()]
        for x in cycle:
            if x >= degree:
                raise ValueError(f"point {x} out of range for degree {degree}")
            if x in seen:
                raise ValueError(f"repeated point {x} in {text!r}")
            seen.add(x)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):  # "()" is the identity
            images[a] = b
        pos = m.end()
    return Permutation(images, check=False)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the permutation ``x -> b(a(x))``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    bi = b.images
    return Permutation([bi[x] for x in a.images], check=False)


@dataclass
class _Level:
    base_point: int
    gens: list[Permutation] = field(default_factory=list)
    # transversal[y] = u with u(base_point) == y
    transversal: dict[int, Permutation] = field(default_factory=dict)
    done: set[tuple[int, int]] = field(default_factory=set)


class PermutationGroup:
    """A permutation group with an exact base and strong generating set.

    Built with the incremental deterministic Schreier-Sims algorithm: every
    Schreier generator of every level is sifted, and non-trivial residues are
    added as new strong generators. ``base_prefix`` forces the first base
    points, which is how point stabilizers are read off.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int | None = None,
        base_prefix: Sequence[int] = (),
    ):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for the trivial group")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        for x in base_prefix:
            if not 0 <= x < degree:
                raise ValueError(f"base point {x} out of range")
        self.degree = degree
        self.generators = [g for g in dict.fromkeys(generators) if not g.is_identity()]
        self._identity = Permutation.identity(degree)
        self._levels: list[_Level] = [_Level(x, transversal={x: self._identity}) for x in base_prefix]
        for g in self.generators:
            if all(g.images[lv.base_point] == lv.base_point for lv in self._levels):
                self._levels.append(self._new_level(g))
            for lv in self._levels:
                lv.gens.append(g)
                if g.images[lv.base_point] != lv.base_point:
                    break
        if self.generators:
            self._schreier_sims()

    # chain construction

    def _new_level(self, g: Permutation) -> _Level:
        b = next(x for x in g.support() if x not in self.base)
        return _Level(b, transversal={b: self._identity})

    def _extend_orbit(self, level: _Level) -> None:
        frontier = list(level.transversal)
        while frontier:
            nxt = []
            for y in frontier:
                u = level.transversal[y]
                for s in level.gens:
                    z = s.images[y]
                    if z not in level.transversal:
                        level.transversal[z] = u * s
                        nxt.append(z)
            frontier = nxt

    def _sift(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for depth in range(start, len(self._levels)):
            level = self._levels[depth]
            y = g.images[level.base_point]
            u = level.transversal.get(y)
            if u is None:
                return g, depth
            if y != level.base_point:
                g = g * u.inverse()
        return g, len(self._levels)

    def _schreier_sims(self) -> None:
        for level in self._levels:
            self._extend_orbit(level)
        i = len(self._levels) - 1
        while i >= 0:
            level = self._levels[i]
            pending = None
            for y in list(level.transversal):
                for si, s in enumerate(level.gens):
                    if (y, si) in level.done:
                        continue
                    level.done.add((y, si))
                    h = level.transversal[y] * s * level.transversal[s.images[y]].inverse()
                    if h.is_identity():
                        continue
                    residue, j = self._sift(h, i + 1)
                    if not residue.is_identity():
                        pending = (residue, j)
                        break
                if pending:
                    break
            if pending is None:
                i -= 1
                continue
            residue, j = pending
            if j == len(self._levels):
                self._levels.append(self._new_level(residue))
            for lv in self._levels[i + 1:j + 1]:
                if residue not in lv.gens:
                    lv.gens.append(residue)
                self._extend_orbit(lv)
            i = j

    # public surface

    @property
    def base(self) -> list[int]:
        return [lv.base_point for lv in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(dict.fromkeys(g for lv in self._levels for g in lv.gens))

    @property
    def fundamental_orbits(self) -> list[dict[int, Permutation]]:
        return [dict(lv.transversal) for lv in self._levels]

    def order(self) -> int:
        return prod(len(lv.transversal) for lv in self._levels)

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} != {self.degree}")
        residue, _ = self._sift(g, 0)
        return residue.is_identity()

    __contains__ = contains

    def identity(self) -> Permutation:
        return self._identity

    def stabilizer_chain_generators(self, depth: int) -> list[Permutation]:
        """Strong generators fixing the first ``depth`` base points."""
        if depth >= len(self._levels):
            return []
        return list(self._levels[depth].gens)

    def elements(self):
        """Iterate over all group elements (small groups only)."""
        def walk(depth, acc):
            if depth == len(self._levels):
                yield acc
                return
            for u in self._levels[depth].transversal.values():
                yield from walk(depth + 1, u * acc)
        yield from walk(0, self._identity)

    def random_element(self, rng) -> Permutation:
        g = self._identity
        for lv in reversed(self._levels):
            g = g * rng.choice(list(lv.transversal.values()))
        return g

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order()})"


def group_from_generators(gens: Sequence[Permutation], degree: int) -> PermutationGroup:
    return PermutationGroup(gens, degree)


def group_order(group: PermutationGroup) -> int:
    return group.order()


def contains(group: PermutationGroup, g: Permutation) -> bool:
    return group.contains(g)


def point_stabilizer(group: PermutationGroup, x: int) -> PermutationGroup:
    """The subgroup fixing ``x``, read off a chain re-based at ``x``."""
    if not 0 <= x < group.degree:
        raise ValueError(f"point {x} out of range for degree {group.degree}")
    rebased = PermutationGroup(group.strong_generators, group.degree, base_prefix=[x])
    return PermutationGroup(rebased.stabilizer_chain_generators(1), group.degree)
