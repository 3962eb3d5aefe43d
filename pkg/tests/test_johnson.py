import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from wreathrep.gcombinatorics import GYoungDiagram
from wreathrep.johnson import (
    RankedVector,
    act_on_word,
    build_sjb,
    constituents,
    generalized_scheme,
    gz_highest_subspace,
    identity_bi,
    tuple_count_identity,
    in_y2_i,
    johnson_decomposition,
    load_action,
    make_action,
    subset_vector,
    up_operator,
    verify_ev,
    verify_sjb,
    y2_diagrams,
    yjm_sn_apply,
)
from wreathrep.wreath import WreathGroup, yjm
from tests.conftest import group


def vec(*pairs):
    """vec((coef, subset), ...)"""
    out = RankedVector.of({})
    for c, s in pairs:
        out = out + subset_vector(s, coef=c)
    return out


GOLDEN = {
    1: [[vec((1, ())), vec((1, (1,)))]],
    2: [
        [vec((1, ())), vec((1, (1,)), (1, (2,))), vec((2, (1, 2)))],
        [vec((1, (2,)), (-1, (1,)))],
    ],
    3: [
        [vec((1, ())), vec((1, (1,)), (1, (2,)), (1, (3,))),
         vec((2, (1, 2)), (2, (1, 3)), (2, (2, 3))), vec((6, (1, 2, 3)))],
        [vec((2, (3,)), (-1, (1,)), (-1, (2,))), vec((1, (1, 3)), (1, (2, 3)), (-2, (1, 2)))],
        [vec((1, (2,)), (-1, (1,))), vec((1, (2, 3)), (-1, (1, 3)))],
    ],
}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_golden_chains(n):
    assert [list(ch.vectors) for ch in build_sjb(n)] == GOLDEN[n]


def test_chain_labels():
    rows = [ch.rows for ch in build_sjb(3)]
    assert rows == [((1, 2, 3), ()), ((1, 2), (3,)), ((1, 3), (2,))]


def test_up_operator_examples():
    assert up_operator(vec((1, ())), 3) == vec((1, (1,)), (1, (2,)), (1, (3,)))
    assert not up_operator(vec((1, (1, 2, 3))), 3)
    assert up_operator(vec((1, (1,))), 3) == vec((1, (1, 2)), (1, (1, 3)))


def test_yjm_sn_examples():
    assert not yjm_sn_apply(1, vec((1, (1,))))
    assert yjm_sn_apply(2, vec((1, (1,)))) == vec((1, (2,)))
    v = vec((1, (2,)), (-1, (1,)))
    assert yjm_sn_apply(2, v) == v.scale(-1)


@pytest.mark.parametrize("n", range(1, 7))
def test_sjb_structure_and_eigenvalues(n):
    sjb = build_sjb(n)
    assert verify_sjb(sjb, n)["ok"]
    assert verify_ev(sjb, n)["ok"]


def test_eigenvalue_labels_n2():
    row, col = build_sjb(2)
    assert [row.tableau.content_of(j) for j in (1, 2)] == [0, 1]
    assert [col.tableau.content_of(j) for j in (1, 2)] == [0, -1]


def _as_word(subset, n):
    return tuple(1 if k in subset else 0 for k in range(1, n + 1))


@pytest.mark.parametrize("n", [3, 4])
def test_eigenvalues_through_group_algebra(n):
    # oracle: the wreath-product YJM elements with G trivial acting on 0/1 words
    G = group("trivial")
    W = WreathGroup(G, n)
    point = load_action("point", G)
    for ch in build_sjb(n):
        T = ch.tableau
        for v in ch.vectors:
            words = {_as_word(s, n): c for s, c in v.terms.items()}
            for j in range(1, n + 1):
                image = {}
                for w, c in yjm(W, j):
                    for word, d in words.items():
                        key = act_on_word(G, point, w, word)
                        image[key] = image.get(key, 0) + c * d
                image = {k: x for k, x in image.items() if x}
                assert image == {k: x * T.content_of(j) for k, x in words.items() if T.content_of(j)}


subsets5 = st.lists(st.sets(st.integers(1, 5)).map(lambda s: tuple(sorted(s))), min_size=1, max_size=4)


@settings(max_examples=50)
@given(subsets5, st.permutations(range(1, 6)))
def test_up_operator_equivariant(subsets, perm):
    n = 5
    v = RankedVector.of({s: Fraction(k + 1) for k, s in enumerate(subsets)})

    def act(u):
        out = {}
        for s, c in u.terms.items():
            key = tuple(sorted(perm[a - 1] for a in s))
            out[key] = out.get(key, 0) + c
        return RankedVector.of(out)

    assert up_operator(act(v), n) == act(up_operator(v, n))


@pytest.mark.parametrize("n, i, expected", [(3, 1, [(0, 1), (1, 2)]), (5, 0, [(0, 1)]), (4, 2, [(0, 1), (1, 3), (2, 2)])])
def test_johnson_decomposition(n, i, expected):
    assert johnson_decomposition(n, i) == expected
    # agrees with the chain counts at rank i
    sjb = build_sjb(n)
    for k, dim in expected:
        assert sum(1 for ch in sjb if ch.start == k and ch.start <= i <= ch.end) == dim


@pytest.mark.parametrize("n", range(0, 11))
def test_identity_bi(n):
    assert identity_bi(n)
    assert 2**n == sum((n - 2 * k + 1) * (comb(n, k) - (comb(n, k - 1) if k else 0)) for k in range(n // 2 + 1))


@pytest.mark.parametrize("spec, action, n", [("cyclic:2", "regular", 1), ("cyclic:2", "regular", 3),
                                              ("cyclic:3", "regular", 2), ("trivial", "point", 4)])
def test_tuple_count_identity(spec, action, n):
    G = group(spec)
    lhs, rhs = tuple_count_identity(n, G, load_action(action, G))
    assert lhs == rhs


def test_tuple_count_small_example():
    G = group("cyclic:2")
    A = load_action("regular", G)
    assert tuple_count_identity(1, G, A) == (3, 3)
    assert {str(mu) for mu in y2_diagrams(1, G, A)} == {"1|-", "-|1"}


@pytest.mark.parametrize("spec, action, n", [("cyclic:2", "regular", 1), ("cyclic:2", "regular", 2),
                                              ("cyclic:2", "regular", 3), ("trivial", "point", 3),
                                              ("cyclic:3", "regular", 2)])
def test_generalized_scheme(spec, action, n):
    G = group(spec)
    report = generalized_scheme(G, load_action(action, G), n)
    assert report["ok"], report


def test_point_action_reproduces_johnson():
    G = group("trivial")
    A = load_action("point", G)
    n = 4
    for i in range(n + 1):
        ks = sorted(mu.shapes[0][1] if len(mu.shapes[0]) > 1 else 0
                    for mu in y2_diagrams(n, G, A) if in_y2_i(mu, i))
        assert ks == [k for k, _ in johnson_decomposition(n, i)]


def test_action_composition():
    G = group("cyclic:3")
    A = load_action("regular", G)
    W = WreathGroup(G, 2)
    words = list(itertools.product(range(4), repeat=2))
    els = list(W.elements())
    for x, y in itertools.product(els[::5], els[::7]):
        for a in words:
            assert act_on_word(G, A, W.mul(x, y), a) == act_on_word(G, A, x, act_on_word(G, A, y, a))


def test_refuses_non_multiplicity_free():
    G = group("sym:3")
    with pytest.raises(ValueError, match="multiplicity free"):
        constituents(G, load_action("regular", G))


def test_custom_action():
    G = group("cyclic:2")
    A = make_action("swap", G, [[0, 1], [1, 0]])
    assert constituents(G, A) == [0, 1]
    with pytest.raises(ValueError):
        make_action("bad", G, [[1, 0], [0, 1]])


def test_highest_subspace_examples():
    G = group("trivial")
    h = gz_highest_subspace(GYoungDiagram(((3,),)), 0, G, load_action("point", G))
    assert h["ok"] and h["dimension"] == 1
    assert [e["expected"] for e in h["eigenvalues"]] == ["0", "1", "2"]

    G = group("cyclic:2")
    A = load_action("regular", G)
    h = gz_highest_subspace(GYoungDiagram(((), (1,))), 1, G, A)
    assert h["ok"]
    assert h["basis"] == [[{"word": [1], "coef": "1/2"}, {"word": [2], "coef": "-1/2"}]]
    h = gz_highest_subspace(GYoungDiagram(((2,), ())), 1, G, A)
    assert h["ok"] and h["eigenvalues"][1]["expected"] == "2"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_highest_subspaces_all(n):
    G = group("cyclic:2")
    A = load_action("regular", G)
    for mu in y2_diagrams(n, G, A):
        for i in range(n + 1):
            if in_y2_i(mu, i):
                assert gz_highest_subspace(mu, i, G, A)["ok"]


def test_highest_subspace_rejects():
    G = group("cyclic:2")
    with pytest.raises(ValueError):
        gz_highest_subspace(GYoungDiagram(((1, 1), ())), 0, G, load_action("regular", G))
