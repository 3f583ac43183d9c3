import itertools

import pytest
from hypothesis import given, settings, strategies as st

from flagdesigns.actions import BlockSystem
from flagdesigns.designs import (
    AutomorphismError,
    DesignError,
    IncidenceStructure,
    NotADesign,
    OverlapError,
    TraceError,
    all_triples,
    check_automorphisms,
    check_overlap_index,
    flag_orbit_size,
    induced_design,
    is_2design,
    is_flag_transitive,
    normal_orbit_trichotomy,
    overlap_number,
    pair_counts,
    sigma_of_block_profile,
    summarize,
    trace_profile,
)
from flagdesigns.geometry import (
    affine_group,
    ag_lines_design,
    collinear_triples_design,
    noncollinear_triples_design,
    parallel_class_partition,
    translation_group,
)
from flagdesigns.perm import PermutationGroup, perm_from_cycles

from conftest import hyperbolic_16

TOY = IncidenceStructure(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
KLEIN = PermutationGroup([perm_from_cycles("(0 1)(2 3)", 4), perm_from_cycles("(0 2)(1 3)", 4)])


def brute_lambda(D):
    """Pair counts by direct membership tests."""
    counts = {p: sum(1 for b in D.blocks if set(p) <= set(b))
              for p in itertools.combinations(range(D.v), 2)}
    return set(counts.values())


def test_incidence_structure_validation():
    with pytest.raises(ValueError):
        IncidenceStructure(3, [(0, 1, 5)])
    with pytest.raises(ValueError):
        IncidenceStructure(3, [(0, 1), (1, 0)])
    multi = IncidenceStructure(3, [(0, 1), (0, 1)], multiset=True)
    assert multi.b == 2


def test_toy_design():
    assert is_2design(TOY) == 2
    s = summarize(TOY)
    assert (s.v, s.b, s.k, s.r, s.lam) == (4, 4, 3, 3, 2)
    assert s.symmetric
    assert str(s) == "2-(4,3,2)"


def test_not_a_design_witness():
    D = IncidenceStructure(5, [(0, 1, 2), (2, 3, 4)])
    with pytest.raises(NotADesign) as err:
        is_2design(D)
    pair = err.value.witness
    assert len(pair) == 2
    with pytest.raises(NotADesign):
        is_2design(IncidenceStructure(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotADesign):
        is_2design(IncidenceStructure(4, [(0, 1, 2), (0, 1, 2, 3)]))


@pytest.mark.parametrize("D", [
    collinear_triples_design(4, 2), noncollinear_triples_design(3, 2), ag_lines_design(2, 3),
    all_triples(7), TOY,
])
def test_lambda_matches_brute_force(D):
    assert brute_lambda(D) == {is_2design(D)}
    assert sum(pair_counts(D).values()) == D.b * D.k * (D.k - 1) // 2


def test_klein_group_not_flag_transitive():
    check_automorphisms(TOY, KLEIN.generators)
    assert flag_orbit_size(TOY, KLEIN) == 4
    assert not is_flag_transitive(TOY, KLEIN)
    S4 = PermutationGroup([perm_from_cycles("(0 1)", 4), perm_from_cycles("(0 1 2 3)", 4)])
    assert is_flag_transitive(TOY, S4)


def test_non_automorphism_witness():
    D = ag_lines_design(2, 3)
    g = perm_from_cycles("(0 1)", 9)
    with pytest.raises(AutomorphismError) as err:
        check_automorphisms(D, [g])
    assert err.value.witness[0] == g


def test_toy_trace_failure():
    sigma = BlockSystem.from_classes([[0, 1], [2, 3]], 4)
    with pytest.raises(TraceError) as err:
        trace_profile(TOY, sigma)
    sizes = {w[2] for w in err.value.witness}
    assert sizes == {2, 1}


def test_parallel_class_trace_failure():
    sigma = BlockSystem.from_classes(parallel_class_partition(2, 3, (0, 1)), 9)
    with pytest.raises(TraceError) as err:
        trace_profile(ag_lines_design(2, 3), sigma)
    assert err.value.witness is not None


@pytest.mark.parametrize("D", [
    collinear_triples_design(3, 2), collinear_triples_design(4, 2), noncollinear_triples_design(3, 3),
    ag_lines_design(2, 3), ag_lines_design(3, 3), TOY,
])
def test_singleton_partition_theta_is_r(D):
    lam = is_2design(D)
    r = lam * (D.v - 1) // (D.k - 1)
    singletons = BlockSystem.from_labels(list(range(D.v)))
    assert trace_profile(D, singletons).k0 == 1
    assert overlap_number(D, singletons).theta == r


def test_overlap_failure_has_witness():
    sigma = BlockSystem.from_classes([[0, 1, 2], [3, 4, 5]], 6)
    D = IncidenceStructure(6, [(0, 1, 2), (3, 4, 5)])
    assert overlap_number(D, sigma).theta == 1
    # trace {0,1,2} is hit by two blocks, trace {3,4,5} by one
    M = IncidenceStructure(6, [(0, 1, 2), (0, 1, 2), (3, 4, 5)], multiset=True)
    with pytest.raises(OverlapError) as err:
        overlap_number(M, sigma)
    assert {w[2] for w in err.value.witness} == {1, 2}


def test_hyperbolic_16_structure():
    D, G, sigma = hyperbolic_16()
    assert is_2design(D) == 2
    assert D.b == 16
    assert is_flag_transitive(D, G)
    assert sigma.is_invariant(G)
    assert trace_profile(D, sigma).k0 == 2
    assert overlap_number(D, sigma).theta == 2
    assert sigma_of_block_profile(D, sigma) == {3: 16}
    # k0 = 2: the induced structure is not a 2-design with k > 2
    with pytest.raises(DesignError):
        induced_design(D, sigma, 0)


def test_overlap_index_on_flag_transitive_design():
    D, G, sigma = hyperbolic_16()
    blk = D.blocks[0]
    check = check_overlap_index(D, G, sigma, (blk[0], blk))
    assert check.hypothesis_met
    assert check.stabilizer_trace_index == check.theta == 2
    assert check
    with pytest.raises(ValueError):
        check_overlap_index(D, G, sigma, (next(x for x in range(16) if x not in blk), blk))


def test_overlap_index_reports_unmet_hypothesis():
    D, G, sigma = hyperbolic_16()
    T = PermutationGroup(G.generators[-4:], 16)
    blk = D.blocks[0]
    check = check_overlap_index(D, T, sigma, (blk[0], blk))
    assert not check.hypothesis_met
    assert not check


def test_induced_design_single_class():
    D = ag_lines_design(2, 3)
    one = BlockSystem.from_labels([0] * 9)
    assert trace_profile(D, one).k0 == 3
    assert overlap_number(D, one).theta == 1
    induced = induced_design(D, one, 0)
    assert is_2design(induced) == 1


def test_trichotomy_patterns():
    D, G, sigma = hyperbolic_16()
    W = PermutationGroup([perm_from_cycles("()", 16)], 16)
    assert normal_orbit_trichotomy(D, sigma, W).case == "none"
    translations = PermutationGroup(G.generators[-4:], 16)
    assert normal_orbit_trichotomy(D, sigma, translations).case == "transitive"
    # the translations by W have the classes of sigma as orbits
    sub = PermutationGroup([G.generators[-4], G.generators[-2]], 16)
    assert normal_orbit_trichotomy(D, sigma, sub).case == "classes"


def test_trichotomy_second_partition():
    D, G, sigma = hyperbolic_16()
    # translations by <e1, e3> give a second partition, transversal to sigma
    other = PermutationGroup([G.generators[-3], G.generators[-1]], 16)
    rep = normal_orbit_trichotomy(D, sigma, other, group=G)
    assert rep.case == "second-partition"
    assert rep.orbit_sizes == [4, 4, 4, 4]
    assert rep.subclaims["a_class_size"]
    assert rep.subclaims["c_meets_each_class_once"]
    assert set(rep.subclaims) >= {"b_traces_0_or_2", "invariant", "d_two_transitive"}


def test_affine_group_flag_orbit():
    assert flag_orbit_size(ag_lines_design(2, 3), affine_group(2, 3)) == 36
    assert not is_flag_transitive(ag_lines_design(2, 3), translation_group(2, 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 8), st.data())
def test_random_block_sets_agree_with_brute_force(v, data):
    k = data.draw(st.integers(3, v - 1))
    pool = list(itertools.combinations(range(v), k))
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=12, unique=True))
    D = IncidenceStructure(v, chosen)
    lams = brute_lambda(D)
    if len(lams) == 1 and 0 not in lams:
        assert is_2design(D) == lams.pop()
    else:
        with pytest.raises(NotADesign):
            is_2design(D)
