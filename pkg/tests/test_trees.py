import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from ramapoly.trees import (ClassFilter, CycleError, DisconnectedError, LabelError,
                            TreeError, build, enumerate_rooted, enumerate_unrooted,
                            plane_from_text, plane_to_text, tree_from_text,
                            tree_to_text)

import conftest as oc
from conftest import rooted_trees
from golden import SIXTEEN_DEG1, SIXTEEN_DEG4

tt = tree_from_text


# -- construction ----------------------------------------------------------------

def test_build_two_node():
    t = build(1, {2: 1})
    assert t.root == 1 and t.parent(2) == 1 and t.size == 2


def test_build_chain():
    t = build(2, {1: 2, 3: 1})
    assert t.root == 2 and t.parent(1) == 2 and t.parent(3) == 1


def test_build_cycle():
    with pytest.raises(CycleError):
        build(1, {2: 3, 3: 2})


def test_build_root_with_parent():
    with pytest.raises(LabelError):
        build(1, {1: 2, 2: 1})


def test_build_bad_labels():
    with pytest.raises(LabelError):
        build(0, {1: 0})
    with pytest.raises(LabelError):
        build(1, {2: 5})
    with pytest.raises(LabelError):
        build(1, {-3: 1})


def test_parse_needs_exactly_one_root():
    with pytest.raises(DisconnectedError):
        tree_from_text("0 0 1")
    with pytest.raises(DisconnectedError):
        tree_from_text("2 1")


# -- statistics on pinned examples --------------------------------------------------

def chain_4132():
    return build(4, {1: 4, 3: 1, 2: 3})


def test_is_proper():
    t = chain_4132()
    assert t.is_proper(3) is True
    assert t.is_proper(1) is False
    assert build(1, {2: 1}).is_proper(2) is True
    with pytest.raises(TreeError):
        t.is_proper(4)


def test_improper_count():
    assert chain_4132().improper_count() == 2
    assert build(1, {2: 1, 3: 1, 4: 2}).improper_count() == 0
    assert tt("9 6 7 0 9 4 4 9 6").improper_count() == 8


def test_beta():
    assert chain_4132().beta(3) == 2
    assert chain_4132().beta(2) == 2
    assert tt("2 0 4 6 9 9 2 9 2").beta(9) == 3


def test_degree_descendant_path():
    c = build(2, {1: 2, 3: 1})
    assert build(1, {2: 1}).degree(1) == 1
    assert c.is_descendant(3, 1) is True
    assert c.is_descendant(1, 3) is False
    assert c.path_to_root(3) == (3, 1, 2)
    assert all(c.is_descendant(v, v) for v in c.labels)


def test_proper_on_max_path():
    assert tt("2 0 4 2 9 4 2 9 6").proper_on_max_path() == 2
    assert build(4, {1: 4, 2: 4, 3: 4}).proper_on_max_path() == 0
    assert tt("2 0 1").proper_on_max_path() == 1


def test_upper_critical():
    assert tt("2 0 4 2 9 4 2 9 6").upper_critical() == 4
    assert tt("2 0 1").upper_critical() == 1
    with pytest.raises(TreeError):
        build(3, {2: 3, 1: 2}).upper_critical()


def test_lower_critical():
    assert tt("2 0 4 6 9 9 2 9 2").lower_critical() == 4
    assert build(2, {3: 2, 1: 3}).lower_critical() == 1
    with pytest.raises(TreeError):
        build(1, {2: 1, 3: 2}).lower_critical()


def test_mu():
    assert build(3, {2: 3, 1: 3}).mu() == 3
    assert build(2, {3: 2, 1: 3}).mu() == 2
    assert build(3, {1: 3, 2: 1}).mu() == 3
    with pytest.raises(TreeError):
        build(1, {2: 1}).mu()


def test_alpha_beta_star():
    fig = tt("2 0 4 6 9 9 2 9 2")
    assert fig.alpha() == 8
    assert build(1, {2: 1, 3: 1}).beta_star() == 2
    with pytest.raises(TreeError):
        build(1, {2: 1}).alpha()
    with pytest.raises(TreeError):
        build(2, {1: 2}).beta_star()


def test_relabel():
    assert build(1, {2: 1}).relabel([5, 9]) == build(5, {9: 5})
    t = build(2, {1: 2, 3: 1})
    assert t.relabel([1, 2, 3]) == t
    r = t.relabel([4, 7, 8])
    assert r == build(7, {4: 7, 8: 4})
    assert r.improper_count() == t.improper_count() == 1
    with pytest.raises(LabelError):
        t.relabel([1, 2])
    with pytest.raises(LabelError):
        t.relabel([1, 2, 2])


# -- enumeration ----------------------------------------------------------------

def test_enumerate_counts():
    assert sum(1 for _ in enumerate_rooted(3)) == 9
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_rooted(n)) == n ** (n - 1)
        assert sum(1 for _ in enumerate_unrooted(n)) == n ** max(n - 2, 0)


def test_enumerate_unrooted_rooted_at_min():
    assert all(t.root == 1 for t in enumerate_unrooted(4))


def test_enumerate_canonical_order_and_uniqueness():
    seen = [t.parents for t in enumerate_rooted(4)]
    assert seen == sorted(seen)
    assert len(seen) == len(set(seen)) == 64
    prev = None
    for t in enumerate_rooted(5):
        assert prev is None or prev < t.parents
        prev = t.parents


def test_enumerate_filtered_sixteen_tree_classes():
    got1 = {t.parents for t in enumerate_rooted(4, ClassFilter(k=1, deg_min=">0"))}
    assert got1 == SIXTEEN_DEG1
    got2 = {t.parents for t in enumerate_rooted(4, ClassFilter(k=2, deg_max=">0"))}
    assert got2 == SIXTEEN_DEG4


def test_all_improper_forces_min_leaf():
    for n in range(2, 6):
        for t in enumerate_rooted(n, ClassFilter(k=n - 1)):
            assert t.degree(t.min_label) == 0


def test_stats_match_definitional_oracles_exhaustively():
    for n in range(1, 6):
        for t in enumerate_rooted(n):
            assert t.improper_count() == oc.o_improper_count(t)
            assert t.proper_on_max_path() == oc.o_proper_on_max_path(t)
            for v in t.labels:
                assert t.beta(v) == oc.o_beta(t, v)
            lam = oc.o_lower_critical(t)
            if lam is None:
                assert t.degree(t.max_label) == 0
            else:
                assert t.lower_critical() == lam
            m = oc.o_mu(t)
            if m is not None:
                assert t.mu() == m
            uc = oc.o_upper_critical(t)
            if uc is not None:
                assert t.upper_critical() == uc
            a, bs = oc.o_alpha(t), oc.o_beta_star(t)
            if a is not None:
                assert t.alpha() == a
            if bs is not None:
                assert t.beta_star() == bs


def test_critical_nodes_match_definitions_on_all_seven_label_trees():
    # full brute-force recomputation of the two path statistics at n=7
    for t in enumerate_rooted(7):
        lam = oc.o_lower_critical(t)
        if lam is not None:
            assert t.lower_critical() == lam
        m = oc.o_mu(t)
        if m is not None:
            assert t.mu() == m


# -- properties over random label sets ----------------------------------------------

@settings(max_examples=120, deadline=None)
@given(rooted_trees(max_size=8, max_label=40))
def test_random_trees_match_oracles(t):
    assert t.improper_count() == oc.o_improper_count(t)
    assert t.beta(t.root) == t.min_label
    assert t.proper_on_max_path() == oc.o_proper_on_max_path(t)
    lam = oc.o_lower_critical(t)
    if lam is not None:
        assert t.lower_critical() == lam
    m = oc.o_mu(t)
    if m is not None:
        assert t.mu() == m


@settings(max_examples=80, deadline=None)
@given(rooted_trees(max_size=7), st.sets(st.integers(1, 99), min_size=7, max_size=7))
def test_relabel_is_order_isomorphic(t, fresh):
    target = sorted(fresh)[: t.size]
    r = t.relabel(target)
    assert r.improper_count() == t.improper_count()
    assert r.proper_on_max_path() == t.proper_on_max_path()
    rank = {v: i for i, v in enumerate(t.labels)}
    for v in t.labels:
        assert r.degree(target[rank[v]]) == t.degree(v)
    if t.degree(t.max_label) > 0:
        assert r.lower_critical() == target[rank[t.lower_critical()]]
    if t.root != t.min_label:
        assert r.mu() == target[rank[t.mu()]]


@settings(max_examples=100, deadline=None)
@given(rooted_trees(max_size=8, max_label=60))
def test_text_round_trip(t):
    assert tree_from_text(tree_to_text(t)) == t


def test_labeled_two_line_form():
    t = build(7, {4: 7, 8: 4})
    text = tree_to_text(t)
    assert text.splitlines()[0] == "labels: 4 7 8"
    assert tree_from_text(text) == t


def test_subtree_extraction():
    t = tt("2 0 4 2 9 4 2 9 6")
    s = t.subtree(9)
    assert s.labels == (5, 8, 9) and s.root == 9
    assert s.parent(5) == 9 and s.parent(8) == 9


def test_value_semantics():
    t = build(1, {2: 1})
    u = t.relabel([3, 4])
    assert t == build(1, {2: 1})
    assert u != t
    assert len({t, build(1, {2: 1})}) == 1


# -- plane trees ----------------------------------------------------------------

def test_plane_text_round_trip():
    s = "1(5(8(9)) 2(6) 3(7 4))"
    p = plane_from_text(s)
    assert plane_to_text(p) == s
    assert p.is_increasing()
    assert p.size == 9


def test_plane_child_order_significant():
    a = plane_from_text("1(2 3)")
    b = plane_from_text("1(3 2)")
    assert a != b


def test_plane_errors():
    with pytest.raises(LabelError):
        plane_from_text("1(2 2)")
    with pytest.raises(TreeError):
        plane_from_text("1(2")
    with pytest.raises(TreeError):
        plane_from_text("1)2")
    assert not plane_from_text("2(1)").is_increasing()


# -- filters ----------------------------------------------------------------------

def test_filter_degree_specs():
    t = build(1, {2: 1, 3: 1})
    assert ClassFilter(deg_min="=2").matches(t)
    assert ClassFilter(deg_min=">0").matches(t)
    assert ClassFilter(deg_min=">=2").matches(t)
    assert not ClassFilter(deg_min="0").matches(t)
    assert ClassFilter(deg_max="0").matches(t)


def test_filter_critical_values():
    assert sum(1 for _ in enumerate_rooted(5, ClassFilter(k=2, lam=1))) == 29
    assert sum(1 for _ in enumerate_rooted(4, ClassFilter(k=3, lam=3))) == 3
    assert sum(1 for _ in enumerate_rooted(4, ClassFilter(k=1, deg_min=">0"))) == 16


def test_filter_lambda_requires_max_child():
    leafy = build(1, {2: 1, 3: 2})
    assert not ClassFilter(lam=1).matches(leafy)
    assert not ClassFilter(lam_above_min=True).matches(leafy)


def test_filter_relations():
    t = tt("3 5 0 1 3")
    assert ClassFilter(min_under_max=False).matches(t)
    assert ClassFilter(alpha_below_beta_star=True).matches(t)
    assert not ClassFilter(min_under_max=True).matches(t)
