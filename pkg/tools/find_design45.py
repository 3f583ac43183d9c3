"""Search for a flag-transitive, point-imprimitive symmetric 2-(45,12,3) design.

Points are the cosets of 2-dimensional subspaces W_0, ..., W_4 (W_i the i-th
cyclic shift of W_0) in N = {x in GF(3)^5 : sum(x) = 0}, one class of nine
cosets per i. N acts by translation, Z5 by shifting coordinates and classes.
A block is taken to be an orbit of length 45 of a union of four lines, one in
each of four classes; every such orbit that is a 2-design gets its full
automorphism group from nauty and is tested for flag-transitivity.

Needs ``pynauty`` (``pip install pynauty``). Usage::

    python3 tools/find_design45.py tests/fixtures/design45.txt
"""

import itertools
import sys

import pynauty

from flagdesigns.actions import BlockSystem, set_orbit
from flagdesigns.designfile import write_design
from flagdesigns.designs import IncidenceStructure, NotADesign, is_2design, is_flag_transitive
from flagdesigns.perm import Permutation, PermutationGroup

N = [v for v in itertools.product(range(3), repeat=5) if sum(v) % 3 == 0]


def add(a, b):
    return tuple((x + y) % 3 for x, y in zip(a, b))


def shift(v):
    return v[-1:] + v[:-1]


def span(vs):
    out = {(0,) * 5}
    for v in vs:
        out = {add(s, tuple(c * x % 3 for x in v)) for s in out for c in range(3)}
    return frozenset(out)


def setting(W0):
    Ws = [W0]
    for _ in range(4):
        Ws.append(frozenset(shift(w) for w in Ws[-1]))
    pts, index = [], {}
    for i in range(5):
        for v in N:
            coset = frozenset(add(v, w) for w in Ws[i])
            if (i, coset) not in index:
                index[(i, coset)] = len(pts)
                pts.append((i, coset))

    def perm(f):
        return Permutation([index[f(i, c)] for i, c in pts])

    gens = [perm(lambda i, c, e=e: (i, frozenset(add(x, e) for x in c)))
            for e in [(1, 2, 0, 0, 0), (0, 1, 2, 0, 0), (0, 0, 1, 2, 0), (0, 0, 0, 1, 2)]]
    translations = PermutationGroup(gens, 45)
    gens.append(perm(lambda i, c: ((i + 1) % 5, frozenset(shift(x) for x in c))))
    return translations, PermutationGroup(gens, 45)


def automorphisms(blocks):
    adj = {i: [] for i in range(90)}
    for j, blk in enumerate(blocks):
        for x in blk:
            adj[x].append(45 + j)
    g = pynauty.Graph(90, adjacency_dict=adj,
                      vertex_coloring=[set(range(45)), set(range(45, 90))])
    gens = pynauty.autgrp(g)[0]
    return PermutationGroup([Permutation(list(a[:45])) for a in gens], 45)


def search():
    subspaces = sorted({span(pair) for pair in itertools.combinations(N, 2)} - {span([])},
                       key=sorted)
    subspaces = [W for W in subspaces if len(W) == 9]
    for W0 in subspaces:
        translations, H = setting(W0)
        lines = [set() for _ in range(5)]
        for g in translations.elements():
            for cyc in g.cycles():
                if len(cyc) == 3:
                    lines[cyc[0] // 9].add(tuple(sorted(cyc)))
        seen = set()
        # blocks missing class 0; Z5 supplies the other missing classes
        for combo in itertools.product(*(sorted(lines[i]) for i in range(1, 5))):
            B = tuple(sorted(x for line in combo for x in line))
            if B in seen:
                continue
            orbit = set_orbit(H, B)
            seen.update(orbit)
            if len(orbit) != 45:
                continue
            D = IncidenceStructure(45, orbit)
            try:
                if is_2design(D) != 3:
                    continue
            except NotADesign:
                continue
            G = automorphisms(D.blocks)
            if is_flag_transitive(D, G):
                return D, G
    raise SystemExit("no flag-transitive design found")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "design45.txt"
    D, G = search()
    sigma = BlockSystem.from_labels([x // 9 for x in range(45)])
    assert sigma.is_invariant(G)
    write_design(out, D, G.generators, sigma, [
        "flag-transitive, point-imprimitive symmetric 2-(45,12,3) design",
        "found by tools/find_design45.py: designs invariant under 3^4:Z5, full group by nauty",
        f"group below: full automorphism group, order {G.order()}; partition: 5 classes of 9",
    ])
    print(f"wrote {out}: |Aut| = {G.order()}")


if __name__ == "__main__":
    main()
