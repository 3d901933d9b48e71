import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suffixlab.strings import TERMINATOR, Alphabet, from_text, make_string
from suffixlab.trees import (
    build_compact_tree,
    build_suffix_tree,
    find_occurrences,
    growth_from_tree,
    growth_sum_identity,
    growth_via_lcp,
    growth_via_tree,
    scan_occurrences,
    stats_line,
    to_dot,
)

from conftest import all_strings, assert_leaf_paths


def random_str(draw, sigma, max_n):
    symbols = draw(st.lists(st.integers(1, sigma), min_size=1, max_size=max_n))
    return make_string(symbols, Alphabet(sigma))


# ---------------------------------------------------------------------------
# simple tree
# ---------------------------------------------------------------------------


def test_single_symbol_tree():
    tree = build_suffix_tree(from_text("a"))
    assert tree.node_count == 3
    assert tree.leaf_count == 1
    assert_leaf_paths(tree)


def test_two_symbol_tree():
    assert build_suffix_tree(from_text("ab")).node_count == 6


def test_reference_string_tree():
    tree = build_suffix_tree(from_text("aabccb"))
    assert tree.node_count == 25
    assert tree.internal_count == 19
    assert tree.leaf_count == 6
    assert_leaf_paths(tree)


def test_empty_string_rejected():
    with pytest.raises(ValueError):
        build_suffix_tree(from_text("", 2))


def test_leaves_have_terminator_edges_and_no_children():
    for s in all_strings(5, 2):
        tree = build_suffix_tree(s)
        assert len(tree.leaves) == 5
        for leaf in tree.leaves.values():
            assert not tree.children[leaf]
            parent = tree.parent[leaf]
            assert tree.children[parent][TERMINATOR] == leaf


def test_new_internal_counts_sum_to_internal_nodes_minus_root():
    for text in ("aabccb", "abcdefabcdab", "aaaa", "ab"):
        tree = build_suffix_tree(from_text(text))
        assert sum(tree.new_internal_per_suffix) == tree.internal_count - 1


@given(st.data())
@settings(max_examples=200)
def test_node_count_upper_bound(data):
    s = random_str(data.draw, 3, 40)
    n = len(s)
    tree = build_suffix_tree(s)
    assert tree.node_count <= 2 + sum(n - j + 2 for j in range(1, n + 1))


@given(st.data())
@settings(max_examples=150)
def test_leaf_paths_spell_suffixes(data):
    s = random_str(data.draw, 4, 40)
    assert_leaf_paths(build_suffix_tree(s))
    assert_leaf_paths(build_compact_tree(s))


# ---------------------------------------------------------------------------
# growth
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [("aabccb", 5), ("abcdefabcdab", 8), ("abc", 3), ("aaaa", 1), ("a", 1)],
)
def test_growth_by_both_routes(text, expected):
    s = from_text(text)
    assert growth_via_tree(s) == expected
    assert growth_via_lcp(s) == expected


def test_growth_of_empty_string_rejected():
    with pytest.raises(ValueError):
        growth_via_lcp(from_text("", 2))


def test_growth_routes_agree_exhaustively_binary():
    for n in range(1, 9):
        for s in all_strings(n, 2):
            assert growth_via_tree(s) == growth_via_lcp(s)


@given(st.data())
@settings(max_examples=300)
def test_growth_routes_agree_random(data):
    sigma = data.draw(st.sampled_from([2, 3, 4]))
    s = random_str(data.draw, sigma, 64)
    assert growth_via_tree(s) == growth_via_lcp(s)


def test_growth_from_tree_reuses_a_built_tree():
    tree = build_suffix_tree(from_text("aabccb"))
    assert growth_from_tree(tree) == 5


# ---------------------------------------------------------------------------
# growth-sum identity
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("text,nodes", [("aabccb", 25), ("ab", 6), ("aa", 5)])
def test_growth_sum_identity_examples(text, nodes):
    result = growth_sum_identity(from_text(text))
    assert result.node_count == nodes
    assert result.growth_sum_form == nodes
    assert result.equal


def test_growth_sum_identity_needs_two_symbols():
    with pytest.raises(ValueError):
        growth_sum_identity(from_text("a"))


def test_growth_sum_identity_exhaustive_ternary():
    for n in range(2, 8):
        for s in all_strings(n, 3):
            assert growth_sum_identity(s).equal


# ---------------------------------------------------------------------------
# compact tree
# ---------------------------------------------------------------------------


def test_compact_single_symbol():
    tree = build_compact_tree(from_text("a"))
    assert tree.node_count == 2
    assert tree.edge_labels() == ["a$"]


def test_compact_all_distinct():
    tree = build_compact_tree(from_text("abc"))
    assert tree.node_count == 4
    assert tree.leaf_count == 3


def test_compact_reference_string_labels():
    tree = build_compact_tree(from_text("aabccb"))
    assert tree.node_count == 10
    assert sorted(tree.edge_labels()) == sorted(
        ["c", "b", "a", "b$", "cb$", "ccb$", "$", "bccb$", "abccb$"]
    )
    assert_leaf_paths(tree)


def test_compact_invariants_exhaustive_binary():
    for n in range(1, 9):
        for s in all_strings(n, 2):
            tree = build_compact_tree(s)
            assert tree.node_count <= 2 * n
            for v in range(1, tree.node_count):
                if tree.children[v]:
                    assert len(tree.children[v]) >= 2
            assert_leaf_paths(tree)


def test_compact_spans_never_copy_text():
    tree = build_compact_tree(from_text("abcdefabcdab"))
    for v in range(1, tree.node_count):
        span = tree.span[v]
        if span is not None:
            i, j = span
            assert 1 <= i <= j <= len(tree.source)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "pattern,expected", [("cb", [5]), ("b", [3, 6]), ("ba", []), ("aabccb", [1])]
)
def test_find_occurrences_reference(pattern, expected):
    tree = build_compact_tree(from_text("aabccb", 3))
    assert find_occurrences(tree, from_text(pattern, 3)) == expected


def test_find_occurrences_rejects_bad_patterns():
    tree = build_compact_tree(from_text("aabccb", 3))
    with pytest.raises(ValueError):
        find_occurrences(tree, from_text("", 3))
    with pytest.raises(ValueError):
        find_occurrences(tree, from_text("d", 4))


def test_scan_occurrences_overlapping():
    assert scan_occurrences(from_text("aaaa"), from_text("aa")) == [1, 2, 3]


@given(st.data())
@settings(max_examples=300)
def test_search_matches_scan(data):
    sigma = data.draw(st.sampled_from([2, 4]))
    s = random_str(data.draw, sigma, 50)
    plen = data.draw(st.integers(1, min(len(s), 8)))
    if data.draw(st.booleans()):
        start = data.draw(st.integers(1, len(s) - plen + 1))
        pattern = s.sub(start, start + plen - 1)
    else:
        pattern = random_str(data.draw, sigma, plen)
    tree = build_compact_tree(s)
    assert find_occurrences(tree, pattern) == scan_occurrences(s, pattern)


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def test_dot_single_symbol():
    dot = to_dot(build_suffix_tree(from_text("a")))
    assert dot.count("->") == 2
    assert dot.count("[label=") == 5  # 3 nodes + 2 edges
    assert '[label="$"]' in dot


def test_dot_is_deterministic():
    first = to_dot(build_compact_tree(from_text("aabccb")))
    second = to_dot(build_compact_tree(from_text("aabccb")))
    assert first == second
    assert 'label="abccb$"' in first


def test_dot_labels_leaves_with_suffix_numbers():
    dot = to_dot(build_suffix_tree(from_text("ab")))
    assert 'label="1"' in dot
    assert 'label="2"' in dot


def test_stats_line_format():
    s = from_text("aabccb")
    tree = build_suffix_tree(s)
    line = stats_line(tree, growth_via_lcp(s))
    assert line == "n=6 sigma=3 nodes=25 internal=19 leaves=6 growth=5"
