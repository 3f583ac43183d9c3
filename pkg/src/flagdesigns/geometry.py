"""Finite projective and affine spaces, their triple/line designs and groups.

Projective points are vectors whose first non-zero coordinate is 1; both
point lists are sorted lexicographically by coordinates (field elements in
their integer order). Matrices act on row vectors, ``x -> x M``, which keeps
products consistent with the left-to-right permutation convention.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb, gcd, prod

from .designs import IncidenceStructure
from .fields import FIELD_SIZE_CAP, FiniteField, field_of_order
from .perm import Permutation, PermutationGroup

MAX_TRIPLE_BLOCKS = 5_000_000

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _space_field(h: int, q: int) -> FiniteField:
    if h < 1:
        raise ValueError("dimension must be >= 1")
    if q ** h > FIELD_SIZE_CAP:
        raise ValueError(f"space of size {q}^{h} exceeds cap {FIELD_SIZE_CAP}")
    return field_of_order(q)


def normalize(F: FiniteField, vec: Vector) -> Vector:
    lead = next((c for c in vec if c), None)
    if lead is None:
        raise ValueError("zero vector has no projective point")
    if lead == 1:
        return tuple(vec)
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in vec)


def pg_points(h: int, q: int) -> list[Vector]:
    """Points of the projective space of vector dimension ``h`` over GF(q)."""
    F = _space_field(h, q)
    pts = []
    for lead in range(h):
        for tail in product(F.elements(), repeat=h - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


def ag_points(h: int, q: int) -> list[Vector]:
    _space_field(h, q)
    return list(product(range(q), repeat=h))


def vec_add(F: FiniteField, a: Vector, b: Vector) -> Vector:
    return tuple(F.add(x, y) for x, y in zip(a, b))


def vec_scale(F: FiniteField, c: int, a: Vector) -> Vector:
    return tuple(F.mul(c, x) for x in a)


def vec_mat(F: FiniteField, v: Vector, m: Matrix) -> Vector:
    h = len(v)
    out = []
    for j in range(h):
        acc = 0
        for i in range(h):
            if v[i] and m[i][j]:
                acc = F.add(acc, F.mul(v[i], m[i][j]))
        out.append(acc)
    return tuple(out)


def projective_lines(h: int, q: int) -> list[tuple[int, ...]]:
    """Lines as sorted tuples of point indices, in order of first appearance."""
    F = _space_field(h, q)
    pts = pg_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    seen: set[tuple[int, ...]] = set()
    lines = []
    covered: set[tuple[int, int]] = set()
    for i, j in combinations(range(len(pts)), 2):
        if (i, j) in covered:
            continue
        x, y = pts[i], pts[j]
        members = {i, j}
        for t in range(1, q):
            members.add(index[normalize(F, vec_add(F, x, vec_scale(F, t, y)))])
        line = tuple(sorted(members))
        covered.update(combinations(line, 2))
        if line not in seen:
            seen.add(line)
            lines.append(line)
    return lines


def _triple_cap(v: int) -> None:
    if comb(v, 3) > MAX_TRIPLE_BLOCKS:
        raise ValueError(f"C({v},3) triples exceed the block cap {MAX_TRIPLE_BLOCKS}")


def collinear_triples_design(h: int, q: int) -> IncidenceStructure:
    """All 3-subsets of lines of PG_{h-1}(q): a 2-((q^h-1)/(q-1), 3, q-1) design."""
    if h < 3:
        raise ValueError("need h >= 3 so that lines are proper")
    lines = projective_lines(h, q)
    v = len(pg_points(h, q))
    _triple_cap(v)
    blocks = sorted(t for line in lines for t in combinations(line, 3))
    return IncidenceStructure(v, blocks)


def noncollinear_triples_design(h: int, q: int) -> IncidenceStructure:
    """All 3-subsets not on a line: a 2-(v, 3, q^2 (q^(h-2)-1)/(q-1)) design."""
    if h < 3:
        raise ValueError("need h >= 3")
    v = len(pg_points(h, q))
    _triple_cap(v)
    collinear = {t for line in projective_lines(h, q) for t in combinations(line, 3)}
    return IncidenceStructure(v, (t for t in combinations(range(v), 3) if t not in collinear))


def ag_lines_design(h: int, q: int) -> IncidenceStructure:
    """Lines of AG_h(q): a 2-(q^h, q, 1) design."""
    if h < 2:
        raise ValueError("need h >= 2")
    F = _space_field(h, q)
    pts = ag_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    directions = pg_points(h, q)
    lines = set()
    for p in pts:
        for d in directions:
            lines.add(tuple(sorted(index[vec_add(F, p, vec_scale(F, t, d))] for t in range(q))))
    return IncidenceStructure(len(pts), sorted(lines))


# classical groups

def _identity_matrix(h: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(h)] for i in range(h)]


def _freeze(m) -> Matrix:
    return tuple(tuple(r) for r in m)


def special_linear_generators(F: FiniteField, h: int) -> list[Matrix]:
    """Elementary transvections ``I + t E_{i,i+1}`` and ``I + t E_{i+1,i}``.

    ``t`` runs over a GF(p)-basis of GF(q); these generate SL_h(q).
    """
    gens = []
    for i in range(h - 1):
        for t in F.basis():
            for r, c in ((i, i + 1), (i + 1, i)):
                m = _identity_matrix(h)
                m[r][c] = t
                gens.append(_freeze(m))
    return gens


def _diag_primitive(F: FiniteField, h: int) -> Matrix:
    m = _identity_matrix(h)
    m[0][0] = F.primitive
    return _freeze(m)


def _projective_perm(F, pts, index, m: Matrix) -> Permutation:
    return Permutation([index[normalize(F, vec_mat(F, p, m))] for p in pts], check=False)


def _frobenius_perm(F, pts, index, projective: bool) -> Permutation:
    img = []
    for p in pts:
        w = tuple(F.frobenius(c) for c in p)
        img.append(index[normalize(F, w) if projective else w])
    return Permutation(img, check=False)


def gl_order(h: int, q: int) -> int:
    return prod(q ** h - q ** i for i in range(h))


def projective_group_order(h: int, q: int, kind: str = "special",
                           include_frobenius: bool = False) -> int:
    """Closed-form order of PSL, PGL (optionally extended by field automorphisms)."""
    e = field_of_order(q).e
    if kind == "special":
        order = gl_order(h, q) // (q - 1) // gcd(h, q - 1)
    elif kind == "general":
        order = gl_order(h, q) // (q - 1)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return order * (e if include_frobenius else 1)


def affine_group_order(h: int, q: int, include_frobenius: bool = False) -> int:
    e = field_of_order(q).e
    return q ** h * gl_order(h, q) * (e if include_frobenius else 1)


def projective_group(h: int, q: int, include_frobenius: bool = False,
                     kind: str = "special") -> PermutationGroup:
    """PSL_h(q) (or PGL with ``kind="general"``) on :func:`pg_points`.

    The order is checked against the closed formula; a mismatch raises.
    """
    if h < 2:
        raise ValueError("need h >= 2")
    F = _space_field(h, q)
    pts = pg_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    mats = special_linear_generators(F, h)
    if kind == "general":
        mats.append(_diag_primitive(F, h))
    elif kind != "special":
        raise ValueError(f"unknown kind {kind!r}")
    gens = [_projective_perm(F, pts, index, m) for m in mats]
    if include_frobenius and F.e > 1:
        gens.append(_frobenius_perm(F, pts, index, projective=True))
    group = PermutationGroup(gens, len(pts))
    expected = projective_group_order(h, q, kind, include_frobenius)
    if group.order() != expected:
        raise ArithmeticError(f"generated order {group.order()} != formula {expected}")
    return group


def affine_group(h: int, q: int, include_frobenius: bool = False) -> PermutationGroup:
    """AGL_h(q) (AGammaL with the flag) on :func:`ag_points`."""
    if h < 1:
        raise ValueError("need h >= 1")
    F = _space_field(h, q)
    pts = ag_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    mats = special_linear_generators(F, h) + [_diag_primitive(F, h)]
    gens = [Permutation([index[vec_mat(F, p, m)] for p in pts], check=False) for m in mats]
    shift = (1,) + (0,) * (h - 1)
    gens.append(Permutation([index[vec_add(F, p, shift)] for p in pts], check=False))
    if include_frobenius and F.e > 1:
        gens.append(_frobenius_perm(F, pts, index, projective=False))
    group = PermutationGroup(gens, len(pts))
    expected = affine_group_order(h, q, include_frobenius)
    if group.order() != expected:
        raise ArithmeticError(f"generated order {group.order()} != formula {expected}")
    return group


def translation_group(h: int, q: int, directions=None) -> PermutationGroup:
    """Translations of AG_h(q) by the GF(p)-span of ``directions`` (default: all)."""
    F = _space_field(h, q)
    pts = ag_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    if directions is None:
        directions = [tuple(F.mul(t, 1) if j == i else 0 for j in range(h))
                      for i in range(h) for t in F.basis()]
    gens = [Permutation([index[vec_add(F, p, tuple(d))] for p in pts], check=False)
            for d in directions]
    return PermutationGroup(gens, len(pts))


def parallel_class_partition(h: int, q: int, direction) -> list[list[int]]:
    """Points of AG_h(q) grouped into the lines parallel to ``direction``."""
    F = _space_field(h, q)
    pts = ag_points(h, q)
    index = {p: i for i, p in enumerate(pts)}
    direction = tuple(direction)
    classes = {}
    for p in pts:
        line = tuple(sorted(index[vec_add(F, p, vec_scale(F, t, direction))] for t in range(q)))
        classes[line] = list(line)
    return sorted(classes.values())
