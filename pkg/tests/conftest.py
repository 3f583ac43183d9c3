import functools
import itertools
import random
import sys

import pytest

from flagdesigns.perm import Permutation


def closure(gens, degree):
    """All elements generated by ``gens``, by breadth-first closure."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_blocks(elements, degree, a, b):
    """Finest partition containing {a, b} that every element preserves, by brute force."""
    label = list(range(degree))

    def merge(x, y):
        lx, ly = label[x], label[y]
        if lx == ly:
            return False
        for i in range(degree):
            if label[i] == ly:
                label[i] = lx
        return True

    merge(a, b)
    changed = True
    while changed:
        changed = False
        for g in elements:
            for x, y in itertools.combinations(range(degree), 2):
                if label[x] == label[y] and label[g(x)] != label[g(y)]:
                    merge(g(x), g(y))
                    changed = True
    return label


def random_perm(rng, n):
    imgs = list(range(n))
    rng.shuffle(imgs)
    return Permutation(imgs)


@pytest.fixture
def rng():
    return random.Random(20241017)


@functools.lru_cache(maxsize=None)
def hyperbolic_16():
    """Symmetric 2-(16,6,2) design from the quadric x0x1 + x2x3 = 1 in GF(2)^4.

    Returns the design, the group generated by translations and the isometries
    fixing the totally singular plane W = <e0, e2>, and the partition into
    cosets of W. The group is flag-transitive and leaves the partition invariant.
    """
    from flagdesigns.actions import BlockSystem
    from flagdesigns.designs import IncidenceStructure
    from flagdesigns.perm import PermutationGroup

    vecs = list(itertools.product(range(2), repeat=4))
    idx = {v: i for i, v in enumerate(vecs)}

    def q(x):
        return (x[0] * x[1] + x[2] * x[3]) % 2

    def add(a, b):
        return tuple((x + y) % 2 for x, y in zip(a, b))

    base = [v for v in vecs if q(v)]
    blocks = [sorted(idx[add(d, g)] for d in base) for g in vecs]
    W = {(0, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (1, 0, 1, 0)}
    gens = []
    for rows in itertools.product(vecs, repeat=4):
        def img(x, rows=rows):
            return tuple(sum(x[i] * rows[i][j] for i in range(4)) % 2 for j in range(4))
        ims = [img(v) for v in vecs]
        if len(set(ims)) == 16 and all(q(i) == q(v) for i, v in zip(ims, vecs)) \
                and {img(w) for w in W} == W:
            gens.append(Permutation([idx[i] for i in ims]))
    for e in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]:
        gens.append(Permutation([idx[add(v, e)] for v in vecs]))
    G = PermutationGroup(gens, 16)
    classes = {frozenset(idx[add(v, w)] for w in W) for v in vecs}
    sigma = BlockSystem.from_classes([sorted(c) for c in classes], 16)
    return IncidenceStructure(16, blocks), G, sigma


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
