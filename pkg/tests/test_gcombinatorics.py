import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from wreathrep.gcombinatorics import (
    ContentVector,
    GTableau,
    GYoungDiagram,
    brute_force_content_vectors_G,
    components,
    content,
    count_gtableaux,
    enumerate_gdiagrams,
    enumerate_gtableaux,
    hook_length_count,
    is_admissible,
    is_content_vector,
    is_content_vector_G,
    partitions,
    path_from_R,
    phi,
    phi_inverse,
    row_major_tableau,
    tableau_from_rows,
    tableau_length,
    tableau_neighbours,
    admissible_for_content,
)
from tests.conftest import group


def brute_tableaux(mu):
    cells = mu.cells()
    out = set()
    for order in itertools.permutations(cells):
        T = GTableau(mu, tuple(order))
        if T.is_standard():
            out.add(T)
    return out


def brute_diagram_count(n, t):
    # count t-tuples of partitions with sizes summing to n
    return sum(
        len(list(itertools.product(*(list(partitions(k)) for k in sizes))))
        for sizes in itertools.product(range(n + 1), repeat=t)
        if sum(sizes) == n
    )


@pytest.mark.parametrize("n, t, expected", [(2, 1, 2), (2, 2, 5), (0, 3, 1), (3, 2, 10), (4, 1, 5)])
def test_diagram_counts(n, t, expected):
    diagrams = enumerate_gdiagrams(n, t)
    assert len(diagrams) == expected == brute_diagram_count(n, t)
    assert len(set(diagrams)) == len(diagrams)


def test_empty_diagram():
    assert enumerate_gdiagrams(0, 3) == [GYoungDiagram(((), (), ()))]


@pytest.mark.parametrize("shapes, expected", [
    (((3,),), 1),
    (((1,), (1,)), 2),
    (((2, 1),), 2),
    (((2, 1), (1,)), 8),
    (((2,), (1, 1)), 6),
])
def test_tableau_counts(shapes, expected):
    mu = GYoungDiagram(shapes)
    tabs = enumerate_gtableaux(mu)
    assert len(tabs) == expected == count_gtableaux(mu)
    assert set(tabs) == brute_tableaux(mu)
    assert tabs == sorted(tabs, key=lambda T: T.cells)


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_length_matches_enumeration(n):
    for p in partitions(n):
        assert hook_length_count(p) == len(enumerate_gtableaux(GYoungDiagram((p,))))
    assert sum(hook_length_count(p) ** 2 for p in partitions(n)) == factorial(n)


@pytest.mark.parametrize("row, col, value", [(1, 1, 0), (1, 3, 2), (2, 1, -1)])
def test_content(row, col, value):
    assert content(row, col) == value


def test_phi_examples(trivial, z2, s3):
    T = tableau_from_rows([[[1, 2, 3]]])
    assert phi(T, trivial) == ContentVector((0, 0, 0), (0, 1, 2))
    T = tableau_from_rows([[[1]], [[2]]])
    assert phi(T, z2) == ContentVector((0, 1), (0, 0))
    T = tableau_from_rows([[], [], [[1, 2]]])
    assert phi(T, s3).values == (0, 3)


def test_phi_inverse_examples(trivial):
    single = phi_inverse(ContentVector((0,), (Fraction(0),)), trivial)
    assert single.shape == GYoungDiagram(((1,),))
    column = phi_inverse(ContentVector((0, 0), (Fraction(0), Fraction(-1))), trivial)
    assert column.shape == GYoungDiagram(((1, 1),))


def test_phi_inverse_rejects(trivial):
    with pytest.raises(ValueError, match="preceded"):
        phi_inverse(ContentVector((0, 0), (Fraction(0), Fraction(2))), trivial)


@pytest.mark.parametrize("seq, ok", [((0, 1, 2), True), ((0, 2), False), ((0, 1, 0), False),
                                     ((0, -1, 1, 0), True), ((1,), False)])
def test_is_content_vector(seq, ok):
    assert is_content_vector(seq) is ok


@pytest.mark.parametrize("spec, n", [("trivial", 4), ("cyclic:2", 3), ("cyclic:2", 4), ("sym:3", 3)])
def test_phi_roundtrip(spec, n):
    G = group(spec)
    for mu in enumerate_gdiagrams(n, len(G.irreps)):
        for T in enumerate_gtableaux(mu):
            cv = phi(T, G)
            assert is_content_vector_G(cv.labels, cv.values, G)
            assert phi_inverse(cv, G) == T


@pytest.mark.parametrize("spec, n", [("trivial", 4), ("cyclic:2", 3), ("cyclic:2", 4)])
def test_spec_equals_cont(spec, n):
    G = group(spec)
    images = {phi(T, G) for mu in enumerate_gdiagrams(n, len(G.irreps)) for T in enumerate_gtableaux(mu)}
    assert images == brute_force_content_vectors_G(n, G)


@pytest.mark.parametrize("n", range(1, 6))
def test_admissible_components_are_shapes(n):
    G = group("cyclic:2") if n <= 4 else group("trivial")
    tabs = [T for mu in enumerate_gdiagrams(n, len(G.irreps)) for T in enumerate_gtableaux(mu)]
    comps = components(tabs, tableau_neighbours)
    assert len(comps) == len(enumerate_gdiagrams(n, len(G.irreps)))
    assert all(len({T.shape for T in c}) == 1 for c in comps)


def test_admissible_examples():
    assert not is_admissible(tableau_from_rows([[[1, 2, 3]]]), 1)
    assert is_admissible(tableau_from_rows([[[1]], [[2]]]), 1)
    assert is_admissible(tableau_from_rows([[[1, 2], [3]]]), 2)


def test_phi_maps_admissible_to_admissible():
    G = group("cyclic:2")
    for mu in enumerate_gdiagrams(3, 2):
        for T in enumerate_gtableaux(mu):
            for i in range(1, 3):
                assert is_admissible(T, i) == admissible_for_content(phi(T, G), i, G)
                if is_admissible(T, i):
                    assert phi(T.swap(i), G) == phi(T, G).swap(i)


def test_row_major_and_paths():
    mu = GYoungDiagram(((2, 1), (1,)))
    R = row_major_tableau(mu)
    assert str(R) == "1 2/3 | 4"
    assert path_from_R(R) == []
    T = tableau_from_rows([[[1, 3], [2]]])
    path = path_from_R(T)
    assert len(path) == tableau_length(T) == 1


def _apply_path(T, path):
    cur = row_major_tableau(T.shape)
    for i in path:
        assert is_admissible(cur, i)
        cur = cur.swap(i)
    return cur


@pytest.mark.parametrize("shapes", [((3, 2),), ((2, 1), (1, 1)), ((2,), (1,), (1,))])
def test_path_from_R_reaches_T(shapes):
    for T in enumerate_gtableaux(GYoungDiagram(shapes)):
        path = path_from_R(T)
        assert _apply_path(T, path) == T
        assert len(path) == tableau_length(T)


shapes_strategy = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 3).flatmap(lambda t: st.sampled_from(enumerate_gdiagrams(n, t))))


@settings(max_examples=40, deadline=None)
@given(shapes_strategy, st.data())
def test_random_tableau_properties(mu, data):
    T = data.draw(st.sampled_from(enumerate_gtableaux(mu)))
    assert T.is_standard()
    G = group("cyclic:3") if mu.t == 3 else group("cyclic:2") if mu.t == 2 else group("trivial")
    assert phi_inverse(phi(T, G), G) == T
    for i in range(1, T.n):
        if is_admissible(T, i):
            S = T.swap(i)
            assert S.is_standard()
            assert abs(tableau_length(S) - tableau_length(T)) == 1
