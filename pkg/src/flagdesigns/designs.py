"""Incidence structures, 2-design checks and the invariants of block systems.

Traces, overlap numbers and induced designs are computed straight from the
block list; nothing here needs a group except the flag and index checks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .actions import (
    BlockSystem,
    class_stabilizer_restricted,
    is_2_transitive,
    orbits,
    set_orbit,
)
from .perm import Permutation, PermutationGroup, point_stabilizer


class DesignError(ValueError):
    """A verification failed; ``witness`` holds the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotADesign(DesignError):
    pass


class TraceError(DesignError):
    pass


class OverlapError(DesignError):
    pass


class AutomorphismError(DesignError):
    pass


class IncidenceStructure:
    """``v`` points and a list of blocks, each a strictly increasing tuple."""

    def __init__(self, v: int, blocks: Iterable[Iterable[int]], multiset: bool = False):
        self.v = v
        normalized = []
        for blk in blocks:
            b = tuple(sorted(blk))
            if len(set(b)) != len(b):
                raise ValueError(f"block {b} repeats a point")
            if b and not (0 <= b[0] and b[-1] < v):
                raise ValueError(f"block {b} has points outside 0..{v - 1}")
            normalized.append(b)
        if not multiset and len(set(normalized)) != len(normalized):
            dup = next(b for b, n in Counter(normalized).items() if n > 1)
            raise ValueError(f"repeated block {dup}")
        self.blocks: list[tuple[int, ...]] = normalized
        self.multiset = multiset

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> set[int]:
        return {len(b) for b in self.blocks}

    @property
    def k(self) -> int:
        sizes = self.block_sizes()
        if len(sizes) != 1:
            raise ValueError(f"block sizes are not constant: {sorted(sizes)}")
        return sizes.pop()

    def replication(self) -> list[int]:
        r = [0] * self.v
        for blk in self.blocks:
            for x in blk:
                r[x] += 1
        return r

    def block_index(self) -> dict[tuple[int, ...], int]:
        return {b: i for i, b in enumerate(self.blocks)}

    def __repr__(self) -> str:
        return f"IncidenceStructure(v={self.v}, b={self.b})"


@dataclass(frozen=True)
class DesignSummary:
    v: int
    b: int
    k: int
    r: int
    lam: int

    @property
    def symmetric(self) -> bool:
        return self.b == self.v

    def __str__(self) -> str:
        return f"2-({self.v},{self.k},{self.lam})"


def pair_counts(design: IncidenceStructure) -> Counter:
    counts: Counter = Counter()
    for blk in design.blocks:
        counts.update(combinations(blk, 2))
    return counts


def is_2design(design: IncidenceStructure) -> int:
    """Return ``lambda`` if ``design`` is a non-trivial 2-design.

    Raises :class:`NotADesign` with a violating pair or block as witness.
    """
    if design.v < 2:
        raise ValueError("need at least two points")
    if not design.blocks:
        raise NotADesign("no blocks", witness=None)
    sizes = Counter(len(b) for b in design.blocks)
    if len(sizes) > 1:
        k0 = len(design.blocks[0])
        bad = next(b for b in design.blocks if len(b) != k0)
        raise NotADesign(f"block sizes vary ({sorted(sizes)})", witness=bad)
    k = len(design.blocks[0])
    if not 2 < k < design.v:
        raise NotADesign(f"trivial block size k={k} for v={design.v}", witness=design.blocks[0])
    counts = pair_counts(design)
    lam = counts.get((0, 1), 0)
    for pair in combinations(range(design.v), 2):
        if counts.get(pair, 0) != lam:
            raise NotADesign(
                f"pair {pair} lies in {counts.get(pair, 0)} blocks, pair (0, 1) in {lam}",
                witness=pair,
            )
    if lam == 0:
        raise NotADesign("no pair is covered", witness=(0, 1))
    return lam


def summarize(design: IncidenceStructure) -> DesignSummary:
    lam = is_2design(design)
    k = design.k
    r = lam * (design.v - 1) // (k - 1)
    return DesignSummary(design.v, design.b, k, r, lam)


# automorphisms and flags

def check_automorphisms(design: IncidenceStructure, gens: Iterable[Permutation]) -> None:
    """Raise :class:`AutomorphismError` unless every generator preserves the blocks."""
    index = design.block_index()
    for g in gens:
        if g.degree != design.v:
            raise AutomorphismError(f"generator degree {g.degree} != v={design.v}", witness=(g, None))
        for blk in design.blocks:
            img = tuple(sorted(g.images[x] for x in blk))
            if img not in index:
                raise AutomorphismError(
                    f"{g.to_cycles()} maps block {blk} to non-block {img}", witness=(g, blk)
                )


def block_permutation(design: IncidenceStructure, g: Permutation,
                      index: dict | None = None) -> Permutation:
    index = index or design.block_index()
    return Permutation([index[tuple(sorted(g.images[x] for x in blk))] for blk in design.blocks],
                       check=False)


def flag_orbit_size(design: IncidenceStructure, group: PermutationGroup) -> int:
    if design.multiset:
        raise ValueError("flag operations need a simple design")
    check_automorphisms(design, group.generators)
    index = design.block_index()
    block_perms = [block_permutation(design, g, index) for g in group.generators]
    start = (design.blocks[0][0], 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x, bi in frontier:
            for g, gb in zip(group.generators, block_perms):
                f = (g.images[x], gb.images[bi])
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return len(seen)


def is_flag_transitive(design: IncidenceStructure, group: PermutationGroup) -> bool:
    return flag_orbit_size(design, group) == sum(len(b) for b in design.blocks)


# traces against a block system

@dataclass(frozen=True)
class TraceProfile:
    k0: int
    # counts[j][i] = |B_j cap Delta_i|
    counts: tuple[tuple[int, ...], ...]

    def classes_met(self) -> list[int]:
        return [sum(1 for c in row if c) for row in self.counts]


def _check_partition(design: IncidenceStructure, sigma: BlockSystem) -> None:
    if sigma.degree != design.v:
        raise ValueError(f"partition covers {sigma.degree} points, design has {design.v}")


def trace_profile(design: IncidenceStructure, sigma: BlockSystem) -> TraceProfile:
    """Every non-empty ``|B cap Delta_i|`` must equal one constant ``k0``."""
    _check_partition(design, sigma)
    d = sigma.num_classes
    rows = []
    first = None
    for j, blk in enumerate(design.blocks):
        row = [0] * d
        for x in blk:
            row[sigma.class_of[x]] += 1
        for i, t in enumerate(row):
            if not t:
                continue
            if first is None:
                first = (j, i, t)
            elif t != first[2]:
                raise TraceError(
                    f"block {design.blocks[first[0]]} meets class {first[1]} in {first[2]} points, "
                    f"block {blk} meets class {i} in {t}",
                    witness=((design.blocks[first[0]], first[1], first[2]), (blk, i, t)),
                )
        rows.append(tuple(row))
    return TraceProfile(first[2] if first else 0, tuple(rows))


def traces_on_class(design: IncidenceStructure, sigma: BlockSystem, i: int) -> Counter:
    cls = set(sigma.classes()[i])
    return Counter(tuple(x for x in blk if x in cls) for blk in design.blocks
                   if any(x in cls for x in blk))


@dataclass(frozen=True)
class OverlapReport:
    theta: int
    # one sample per class: (class id, a block meeting it, its trace, blocks sharing it)
    witness: tuple = field(default=(), compare=False)


def overlap_number(design: IncidenceStructure, sigma: BlockSystem) -> OverlapReport:
    """Count blocks sharing each non-empty trace; succeed iff the count is constant."""
    trace_profile(design, sigma)
    theta = None
    where = None
    samples = []
    for i in range(sigma.num_classes):
        counts = traces_on_class(design, sigma, i)
        if not counts:
            continue
        cls = set(sigma.classes()[i])
        trace0 = next(iter(counts))
        sharing = tuple(b for b in design.blocks if tuple(x for x in b if x in cls) == trace0)
        samples.append((i, sharing[0], trace0, sharing))
        for trace, n in counts.items():
            if theta is None:
                theta, where = n, (i, trace)
            elif n != theta:
                raise OverlapError(
                    f"trace {where[1]} on class {where[0]} is shared by {theta} blocks, "
                    f"trace {trace} on class {i} by {n}",
                    witness=((where[0], where[1], theta), (i, trace, n)),
                )
    if theta is None:
        raise OverlapError("no block meets any class")
    return OverlapReport(theta, tuple(samples))


def induced_design(design: IncidenceStructure, sigma: BlockSystem, i: int,
                   lam: int | None = None) -> IncidenceStructure:
    """Distinct traces on class ``i``, renumbered 0..c-1 in global point order."""
    profile = trace_profile(design, sigma)
    if profile.k0 < 3:
        raise DesignError(f"k0 = {profile.k0} < 3: induced structure is not a design here")
    theta = overlap_number(design, sigma).theta
    lam = is_2design(design) if lam is None else lam
    if lam % theta:
        raise DesignError(f"theta = {theta} does not divide lambda = {lam}")
    members = sigma.classes()[i]
    local = {x: n for n, x in enumerate(members)}
    traces = sorted(traces_on_class(design, sigma, i))
    induced = IncidenceStructure(len(members), [[local[x] for x in t] for t in traces])
    lam_i = is_2design(induced)
    if lam_i != lam // theta:
        raise DesignError(f"induced lambda {lam_i} != lambda/theta = {lam // theta}")
    return induced


@dataclass(frozen=True)
class OverlapIndexCheck:
    hypothesis_met: bool
    stabilizer_trace_index: int
    theta: int

    @property
    def holds(self) -> bool:
        return self.hypothesis_met and self.stabilizer_trace_index == self.theta

    def __bool__(self) -> bool:
        return self.holds


def check_overlap_index(design: IncidenceStructure, group: PermutationGroup,
                        sigma: BlockSystem, flag: tuple[int, Sequence[int]]) -> OverlapIndexCheck:
    """Compare ``[G_{x, B cap Delta} : G_{x, B}]`` with the counted overlap number.

    Both stabilizer orders are ``|G_x|`` over a set-orbit length under ``G_x``,
    so the index is a ratio of those two orbit lengths.
    """
    x, blk = flag
    blk = tuple(sorted(blk))
    if x not in blk:
        raise ValueError(f"({x}, {blk}) is not a flag")
    theta = overlap_number(design, sigma).theta
    ft = is_flag_transitive(design, group)
    gx = point_stabilizer(group, x)
    trace = [y for y in blk if sigma.class_of[y] == sigma.class_of[x]]
    index = len(set_orbit(gx, blk)) // len(set_orbit(gx, trace))
    return OverlapIndexCheck(ft, index, theta)


def sigma_of_block_profile(design: IncidenceStructure, sigma: BlockSystem) -> Counter:
    """Histogram of ``|Sigma(B)|``, the number of classes each block meets."""
    return Counter(trace_profile(design, sigma).classes_met())


# minimal normal subgroup orbit patterns

@dataclass
class TrichotomyReport:
    case: str  # "classes", "transitive", "second-partition" or "none"
    orbit_sizes: list[int]
    subclaims: dict = field(default_factory=dict)


def normal_orbit_trichotomy(design: IncidenceStructure, sigma: BlockSystem,
                            normal: PermutationGroup,
                            group: PermutationGroup | None = None) -> TrichotomyReport:
    """Classify the orbit pattern of a (candidate minimal normal) subgroup.

    ``group`` is the full automorphism group; it is only needed for the
    invariance and 2-transitivity sub-claims of the third pattern.
    """
    check_automorphisms(design, normal.generators)
    orbs = orbits(normal)
    sizes = sorted({len(o) for o in orbs})
    if sorted(map(tuple, orbs)) == sorted(map(tuple, sigma.classes())):
        return TrichotomyReport("classes", [len(o) for o in orbs])
    if len(orbs) == 1:
        return TrichotomyReport("transitive", [design.v])
    if len(sizes) != 1 or len(orbs[0]) == 1:
        return TrichotomyReport("none", [len(o) for o in orbs])
    sigma2 = BlockSystem.from_classes(orbs, design.v)
    lam = is_2design(design)
    claims: dict = {}
    claims["a_class_size"] = sigma2.class_size == lam + 2
    try:
        claims["b_traces_0_or_2"] = trace_profile(design, sigma2).k0 == 2
    except TraceError:
        claims["b_traces_0_or_2"] = False
    claims["c_meets_each_class_once"] = all(
        len(set(a) & set(b)) == 1 for a in sigma.classes() for b in sigma2.classes()
    )
    if group is not None:
        claims["invariant"] = sigma2.is_invariant(group)
        claims["d_two_transitive"] = claims["invariant"] and all(
            is_2_transitive(class_stabilizer_restricted(group, sigma2, j).target)
            for j in range(sigma2.num_classes)
        )
    return TrichotomyReport("second-partition", [len(o) for o in orbs], claims)


def all_triples(v: int) -> IncidenceStructure:
    return IncidenceStructure(v, combinations(range(v), 3))
