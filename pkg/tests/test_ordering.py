import pytest

from hochord.ordering import (CyclicOrderingUnavailable, OrderingAssignment,
                              OrderingError, assignment_from_level_orders,
                              check_nncmo, check_nncmo_full, classify_actions,
                              classify_nncmo, composition_induced_order,
                              cyclic_ordering, fibers_of_face, search_nncmo)
from hochord.simplicial import (SimplexRef, circle, interval, point, sphere2,
                                wedge_of_circles)

BUNDLED = [point, interval, circle, lambda: wedge_of_circles(2),
           lambda: wedge_of_circles(3), sphere2]


def _level_order_assignment(X, cutoff):
    orders = {}
    for n in range(1, cutoff + 1):
        for i in range(n + 1):
            for target, fiber in fibers_of_face(X, n, i).items():
                orders[(n, i, target)] = fiber
    return OrderingAssignment(X, cutoff, orders)


def _names(X, refs):
    return [X.monotone_name(r) for r in refs]


# ---------------------------------------------------------------------------
# composition-induced orders

def test_single_step_induced_order_is_the_fiber_order():
    X = circle()
    asg = classify_nncmo(X, 4).assignment
    fiber = asg.order_of(2, 1, SimplexRef(X.id_of("e")))
    assert composition_induced_order(X, asg, (1,), 2, fiber) == fiber


def test_sphere_level4_induced_order_from_given_step_orders():
    S = sphere2()
    asg = _level_order_assignment(S, 4)
    sigma = SimplexRef(S.id_of("sigma"))
    fiber = [r for r in S.level_nonbase(4) if S.face_word(r, (1, 2)) == sigma]
    # route d_2 o d_1: blocks by d_1-image, ordered by the d_2-order downstream
    induced = composition_induced_order(S, asg, (1, 2), 4, fiber)
    assert _names(S, induced) == ["[00112]", "[01112]", "[00122]", "[01122]"]
    other = composition_induced_order(S, asg, (3, 1), 4, fiber)
    assert _names(S, other) == ["[00112]", "[00122]", "[01112]", "[01122]"]


def test_all_singleton_fibers_give_unique_order():
    P = point()
    asg = _level_order_assignment(P, 4)
    assert check_nncmo(P, asg, 4) is None


# ---------------------------------------------------------------------------
# the consistency check

def test_circle_cyclic_assignment_checks_out_to_level_5():
    X = circle()
    orders = cyclic_ordering(X, 5)
    asg = assignment_from_level_orders(X, orders, 5)
    assert check_nncmo(X, asg, 5) is None
    assert check_nncmo_full(X, asg, 5) is None


def test_sphere_any_assignment_fails_with_the_four_simplex_fiber():
    S = sphere2()
    asg = _level_order_assignment(S, 4)
    w = check_nncmo(S, asg, 4)
    assert w is not None
    assert sorted(_names(S, w.fiber)) == ["[00112]", "[00122]", "[01112]", "[01122]"]
    assert sorted(w.factorization_strings()) == ["d1 d3", "d2 d1"]
    assert w.verify_equal_maps(S)


def test_check_nncmo_catches_a_swapped_fiber_order():
    X = circle()
    asg = assignment_from_level_orders(X, cyclic_ordering(X, 4), 4)
    e = SimplexRef(X.id_of("e"))
    orders = dict(asg.orders)
    orders[(2, 1, e)] = tuple(reversed(orders[(2, 1, e)]))
    mutated = OrderingAssignment(X, 4, orders)
    w = check_nncmo(X, mutated, 4)
    assert w is not None and w.kind == "assignment"


def test_trivial_cutoff_is_ok():
    X = sphere2()
    asg = _level_order_assignment(X, 1)
    # nothing to check below two-step compositions
    assert check_nncmo(X, asg, 1) is None


def test_assignment_requires_full_coverage():
    X = circle()
    orders = dict(assignment_from_level_orders(X, cyclic_ordering(X, 3), 3).orders)
    missing = next(iter(orders))
    del orders[missing]
    with pytest.raises(OrderingError):
        OrderingAssignment(X, 3, orders)


# ---------------------------------------------------------------------------
# search and classification

def test_search_verdicts():
    assert search_nncmo(sphere2(), 4).verdict == "fails"
    assert search_nncmo(wedge_of_circles(2), 4).verdict == "admits"
    assert search_nncmo(interval(), 4).verdict == "admits"


def test_search_node_limit_is_an_error_not_an_answer():
    from hochord.ordering import InconclusiveSearch
    with pytest.raises(InconclusiveSearch):
        search_nncmo(wedge_of_circles(3), 4, node_limit=1)


def test_classify_matches_search_on_bundled_sets():
    for builder in BUNDLED:
        X = builder()
        assert classify_nncmo(X, 4).verdict == search_nncmo(X, 4).verdict


def test_every_admits_passes_the_checker():
    for builder in BUNDLED:
        X = builder()
        for result in (classify_nncmo(X, 4), search_nncmo(X, 4)):
            if result.admits:
                assert check_nncmo(X, result.assignment, 4) is None


def test_full_factorization_oracle_validates_adjacent_reduction():
    for builder in BUNDLED:
        X = builder()
        result = search_nncmo(X, 4)
        if result.admits:
            assert check_nncmo_full(X, result.assignment, 4) is None


def test_sphere_witness_is_certified():
    res = classify_nncmo(sphere2(), 4)
    S = sphere2()
    assert not res.admits
    w = res.witness
    assert w.verify_equal_maps(S)
    assert w.reverify_unsat(S)
    assert sorted(_names(S, w.fiber)) == ["[00112]", "[00122]", "[01112]", "[01122]"]


def test_generic_witness_words_for_higher_sphere_like_sets():
    # glue a 3-simplex onto the basepoint: dimension 3, generic witness applies
    text = """
    basepoint v0
    simplex v0 dim=0
    simplex tau dim=3 faces=[s1 s0 v0, s1 s0 v0, s1 s0 v0, s1 s0 v0]
    """
    from hochord.simplicial import from_file
    X = from_file(text, "glued3")
    res = classify_nncmo(X, 4)
    assert not res.admits
    assert res.witness.level == 5
    assert res.witness.verify_equal_maps(X)
    assert res.witness.reverify_unsat(X)


# ---------------------------------------------------------------------------
# cyclic orderings

def test_circle_cyclic_levels_match_the_wheel():
    X = circle()
    orders = cyclic_ordering(X, 4)
    assert _names(X, orders[2]) == ["[001]", "[011]"]
    assert _names(X, orders[3]) == ["[0001]", "[0011]", "[0111]"]
    assert _names(X, orders[4]) == ["[00001]", "[00011]", "[00111]", "[01111]"]


def test_wedge_interleaving():
    W = wedge_of_circles(2)
    orders = cyclic_ordering(W, 3)
    assert _names(W, orders[2]) == ["[001]_e1", "[011]_e1", "[001]_e2", "[011]_e2"]


def test_cyclic_monotonicity_property_to_level_5():
    for builder in (circle, interval, lambda: wedge_of_circles(2)):
        X = builder()
        orders = cyclic_ordering(X, 5)
        for n in range(2, 6):
            pos = {r: k for k, r in enumerate(orders[n - 1])}
            seq = orders[n]
            for a in range(len(seq)):
                for b in range(a + 1, len(seq)):
                    for i in range(n + 1):
                        fa, fb = X.face(seq[a], i), X.face(seq[b], i)
                        if X.is_basepoint(fa) or X.is_basepoint(fb):
                            continue
                        assert pos[fa] <= pos[fb]


def test_cyclic_ordering_rejects_higher_dimensional_sets():
    with pytest.raises(OrderingError):
        cyclic_ordering(sphere2(), 3)


def test_cyclic_ordering_unavailable_on_subdivided_circle():
    # two edges through an extra vertex: one-dimensional, but no face-monotone
    # order exists; the search still finds a multiplicative ordering
    from hochord.simplicial import from_file
    text = """
    basepoint v0
    simplex v0 dim=0
    simplex p dim=0
    simplex e1 dim=1 faces=[p, v0]
    simplex e2 dim=1 faces=[v0, p]
    """
    X = from_file(text, "bigon")
    with pytest.raises(CyclicOrderingUnavailable):
        cyclic_ordering(X, 3)
    res = classify_nncmo(X, 3)
    assert res.admits
    assert check_nncmo(X, res.assignment, 3) is None


# ---------------------------------------------------------------------------
# action classes

def test_circle_classes_and_types():
    X = circle()
    rep = classify_actions(X, 4)
    assert len(rep.classes) == 2
    by_type = {c.action_type: c for c in rep.classes}
    assert set(by_type) == {"left", "right"}
    # the right action collects the [0..01] sites, the left one the [01..1]s
    right_names = {X.monotone_name(ref) for (_, ref, _) in by_type["right"].sites}
    left_names = {X.monotone_name(ref) for (_, ref, _) in by_type["left"].sites}
    assert right_names == {"[01]", "[001]", "[0001]", "[00001]"}
    assert left_names == {"[01]", "[011]", "[0111]", "[01111]"}
    assert all(i == 0 for (_, _, i) in by_type["left"].sites)


def test_point_has_no_action_sites():
    rep = classify_actions(point(), 4)
    assert rep.classes == ()


def test_wedge_classes_match_per_circle_answer():
    W = wedge_of_circles(2)
    rep = classify_actions(W, 4)
    assert len(rep.classes) == 4
    types = sorted(c.action_type for c in rep.classes)
    assert types == ["left", "left", "right", "right"]
    # per edge: one left class (face index 0) and one right class
    for c in rep.classes:
        bases = {ref.base for (_, ref, _) in c.sites}
        assert len(bases) == 1


def test_sphere_classes_untyped():
    rep = classify_actions(sphere2(), 4)
    assert rep.classes and all(c.action_type == "untyped" for c in rep.classes)
    assert any("not one-dimensional" in n for n in rep.notes)


def test_interval_single_right_class():
    rep = classify_actions(interval(), 4)
    assert len(rep.classes) == 1
    assert rep.classes[0].action_type == "right"
