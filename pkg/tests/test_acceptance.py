"""Acceptance criteria 1-11, one test each, with a PASS/FAIL line per criterion.

The lines are printed in the terminal summary of a pytest run, and directly
when the module is run as a script: ``python3 tests/test_acceptance.py``.
"""

import random
from fractions import Fraction
from pathlib import Path

import pytest

from flagdesigns.actions import BlockSystem, minimal_block_system
from flagdesigns.checker import full_report
from flagdesigns.designs import (
    IncidenceStructure,
    TraceError,
    flag_orbit_size,
    is_2design,
    is_flag_transitive,
    overlap_number,
    trace_profile,
)
from flagdesigns.geometry import (
    affine_group,
    ag_lines_design,
    collinear_triples_design,
    noncollinear_triples_design,
    parallel_class_partition,
    projective_group,
)
from flagdesigns.numtheory import (
    check_eq_rid,
    compute_rho,
    lemma_div_solutions,
    pillai_solutions,
    primitive_part,
)
from flagdesigns.params import family_rows, lemma_pp_ratio, type1_params, type2_params
from flagdesigns.perm import PermutationGroup, contains, group_order, perm_from_cycles, point_stabilizer

from conftest import brute_blocks, closure, random_perm

FIXTURE = Path(__file__).parent / "fixtures" / "design45.txt"
RESULTS: dict[int, str] = {}


def record(n, checks):
    """Store one line for criterion ``n`` and fail on the first false check."""
    bad = [name for name, ok in checks if not ok]
    RESULTS[n] = f"criterion {n:>2}: {'PASS' if not bad else 'FAIL'}" + (
        "" if not bad else "  (" + "; ".join(bad) + ")")
    assert not bad, bad


def test_criterion_01_appendix_families():
    pg = collinear_triples_design(4, 2)
    non = noncollinear_triples_design(3, 5)
    ag = ag_lines_design(2, 3)
    lam_non = is_2design(non)
    pp = lemma_pp_ratio(non.v, non.k, lam_non)
    record(1, [
        ("PG collinear 2-(15,3,1), 35 blocks", (pg.v, pg.k, is_2design(pg), pg.b) == (15, 3, 1, 35)),
        ("PG noncollinear 2-(31,3,25), b=3875", (non.v, non.k, lam_non, non.b) == (31, 3, 25, 3875)),
        ("r = 375", pp.r == 375),
        ("r/lambda = 15 = (v-1)/2", pp.ratio == Fraction(15) == Fraction(non.v - 1, 2)),
        ("AG lines 2-(9,3,1), 12 blocks", (ag.v, ag.k, is_2design(ag), ag.b) == (9, 3, 1, 12)),
    ])


def test_criterion_02_flag_transitivity():
    toy = IncidenceStructure(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    klein = PermutationGroup([perm_from_cycles("(0 1)(2 3)", 4), perm_from_cycles("(0 2)(1 3)", 4)])
    pg = collinear_triples_design(4, 2)
    record(2, [
        ("PSL4(2) flag orbit 105 = b*k", flag_orbit_size(pg, projective_group(4, 2)) == 105 == pg.b * pg.k),
        ("AGL2(3) flag orbit 36", flag_orbit_size(ag_lines_design(2, 3), affine_group(2, 3)) == 36),
        ("Klein group on 2-(4,3,2) not flag-transitive",
         is_2design(toy) == 2 and klein.order() == 4 and not is_flag_transitive(toy, klein)),
    ])


def test_criterion_03_parameter_tables():
    t1a, t1b, t2 = type1_params(3), type1_params(4), type2_params(3)
    rows = family_rows("type1", 1000) + family_rows("type2", 1000) + family_rows("k0eq2", 1000)
    record(3, [
        ("type1(3)", (t1a.v, t1a.k, t1a.lam, t1a.c, t1a.d) == (45, 12, 3, 9, 5)),
        ("type1(4)", (t1b.v, t1b.k, t1b.lam, t1b.c, t1b.d) == (96, 20, 4, 16, 6)),
        ("type2(3)", (t2.v, t2.k, t2.lam, t2.c, t2.d) == (45, 12, 3, 9, 5)),
        ("symmetric identity up to lambda=1000",
         all(r.lam * (r.v - 1) == r.k * (r.k - 1) for r in rows) and max(r.lam for r in rows) >= 999),
    ])


def test_criterion_04_lemma_div():
    pm_max = 3 ** 8
    got = set(lemma_div_solutions(pm_max))
    oracle = set()
    for p in range(3, pm_max + 1, 2):
        if any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            continue
        pm, m = p, 1
        while pm <= pm_max:
            u = pm + 2
            if all(u % d for d in range(2, int(u ** 0.5) + 1)):
                for z in range(1, 4 * m + 1):
                    if (p ** z - 1) % u == 0:
                        oracle.add((pm, u, z))
            pm *= p
            m += 1
    record(4, [
        ("solutions exactly {(3,5,4),(9,11,5)}", got == {(3, 5, 4), (9, 11, 5)}),
        ("matches brute-force oracle", got == oracle),
    ])


def test_criterion_05_pillai():
    sols = pillai_solutions(10 ** 6)
    pairs = {(p ** m, u ** h) for p, m, u, h in sols}
    record(5, [
        ("contains (3,5), (7,9), (25,27)", {(3, 5), (7, 9), (25, 27)} <= pairs),
        ("h>1 and m even gives exactly (5,2,3,3)",
         {s for s in sols if s[3] > 1 and s[1] % 2 == 0} == {(5, 2, 3, 3)}),
    ])


def test_criterion_06_primitive_parts():
    exceptions = {(2, 6)} | {(a, 2) for a in range(2, 21) if (a + 1) & a == 0}
    grid_ok = all(primitive_part(a, e) > 1
                  for a in range(2, 21) for e in range(3, 13) if (a, e) not in exceptions)
    record(6, [
        ("Phi*_6(2) = 1", primitive_part(2, 6) == 1),
        ("Phi*_2(7) = 1", primitive_part(7, 2) == 1),
        ("Phi*_4(3) = 5", primitive_part(3, 4) == 5),
        ("Phi*_5(3) = 121", primitive_part(3, 5) == 121),
        ("Zsigmondy positivity on a <= 20, 2 < e <= 12", grid_ok),
    ])


def test_criterion_07_rho_table():
    aut = {"PSL2(7)": 336, "PSL2(13)": 2184, "PSL3(4)": 241920, "PSU3(3)": 12096}
    rows = [(27, 3, aut["PSL2(7)"]), (125, 5, aut["PSL2(7)"]), (27, 9, aut["PSL2(7)"]),
            (125, 25, aut["PSL2(7)"]), (27, 3, aut["PSL2(13)"]), (27, 3, aut["PSL3(4)"]),
            (125, 5, aut["PSU3(3)"])]
    got = [compute_rho(s, a, o) for s, a, o in rows]
    record(7, [("rho = 29,127,29,127,29,29,127", got == [29, 127, 29, 127, 29, 29, 127])])


def test_criterion_08_rid_filter():
    record(8, [
        (f"(q,h)=({q},{h}) rejected for every t", not any(check_eq_rid(h, q).values()))
        for q, h in [(2, 6), (2, 10), (4, 5)]
    ])


def test_criterion_09_group_engine_oracles():
    rng = random.Random(9)
    failures = []
    for sample in range(100):
        n = rng.randint(1, 7)
        gens = [random_perm(rng, n) for _ in range(rng.randint(1, 3))]
        G = PermutationGroup(gens, n)
        elems = closure(gens, n)
        if group_order(G) != len(elems):
            failures.append(f"order #{sample}")
        probes = [random_perm(rng, n) for _ in range(5)]
        if any(contains(G, g) != (g in elems) for g in probes + gens):
            failures.append(f"contains #{sample}")
        for x in range(n):
            stab = sum(1 for g in elems if g(x) == x)
            orbit = {g(x) for g in elems}
            if point_stabilizer(G, x).order() != stab or stab * len(orbit) != len(elems):
                failures.append(f"stabilizer #{sample}")
        if n >= 2 and len({g(0) for g in elems}) == n:
            for b in range(1, n):
                label = brute_blocks(elems, n, 0, b)
                got = minimal_block_system(G, 0, b)
                want = None if len(set(label)) == 1 else BlockSystem.from_labels(label)
                if got != want:
                    failures.append(f"blocks #{sample}")
    record(9, [("100 random groups agree with closure enumeration", not failures)])


def test_criterion_10_theta_machinery():
    designs = [collinear_triples_design(4, 2), collinear_triples_design(3, 3),
               noncollinear_triples_design(3, 2), ag_lines_design(2, 3), ag_lines_design(3, 3)]
    singleton_ok = True
    for D in designs:
        lam = is_2design(D)
        r = lam * (D.v - 1) // (D.k - 1)
        singleton_ok &= overlap_number(D, BlockSystem.from_labels(range(D.v))).theta == r
    parallel = BlockSystem.from_classes(parallel_class_partition(2, 3, (0, 1)), 9)
    try:
        trace_profile(ag_lines_design(2, 3), parallel)
        ag_fails = False
    except TraceError as exc:
        ag_fails = exc.witness is not None
    toy = IncidenceStructure(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    try:
        trace_profile(toy, BlockSystem.from_classes([[0, 1], [2, 3]], 4))
        toy_sizes = None
    except TraceError as exc:
        toy_sizes = {w[2] for w in exc.witness}
    record(10, [
        ("singleton partition theta = r", singleton_ok),
        ("AG2(3) parallel classes: trace_profile fails with witness", ag_fails),
        ("2-(4,3,2) toy fails with traces {2,1}", toy_sizes == {2, 1}),
    ])


@pytest.mark.skipif(not FIXTURE.exists(), reason="no 2-(45,12,3) fixture present")
def test_criterion_11_fixture_45():
    r = full_report(FIXTURE)
    record(11, [
        ("all hypotheses hold", r.hypotheses_hold()),
        ("k0 = 3", r.value("trace_profile", "k0") == 3),
        ("theta = 3", r.value("overlap", "theta") == 3),
        ("D_i = 2-(9,3,1)", r.status("induced_designs") == "pass"
         and (r.value("induced_designs", "c"), r.value("induced_designs", "k0"),
              r.value("induced_designs", "lam")) == (9, 3, 1)),
        ("|Sigma(B)| = 4 for every block", r.value("sigma_profile", "histogram") == {4: 45}),
        ("G^Sigma 2-transitive", r.status("sigma_two_transitive") == "pass"),
        ("induced class action primitive", r.status("class_action_primitive") == "pass"),
        ("conclusion names the (45,12,3) case", r.conclusion == "case-1"),
    ])


def summary_lines() -> list[str]:
    lines = []
    for n in range(1, 12):
        if n in RESULTS:
            lines.append(RESULTS[n])
        elif n == 11 and not FIXTURE.exists():
            lines.append("criterion 11: SKIP  (no 2-(45,12,3) fixture present)")
        else:
            lines.append(f"criterion {n:>2}: FAIL  (not run or errored)")
    return lines


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            if name.endswith("fixture_45") and not FIXTURE.exists():
                continue
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all("FAIL" not in line for line in summary_lines()) else 1)
