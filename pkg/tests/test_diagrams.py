import pytest
import sympy
from hypothesis import given, strategies as st

from dynkinstab.diagrams import (
    all_automorphisms,
    automorphisms,
    build_diagram,
    catalog,
    delta,
    group_order,
    is_automorphism,
    is_positive_definite,
    parse_diagram,
    permutation_from_labels,
    principal_minors_nonnegative,
    to_json,
)
from dynkinstab.errors import InvalidInputError

from oracles import (
    HAND_EDGES,
    KNOWN_MARKS,
    brute_automorphism_count,
    cartan_from_edges,
    sympy_marks,
)

ALL = catalog(8)


def test_a2_euler_matrix():
    d = build_diagram("A", 2)
    assert d.euler_matrix == ((2, -1), (-1, 2))
    assert is_positive_definite(d.euler_matrix)


def test_affine_a1_double_edge():
    d = build_diagram("A", 1, affine=True)
    assert d.euler_matrix == ((2, -2), (-2, 2))
    assert d.multiplicity(0, 1) == 2
    assert principal_minors_nonnegative(d.euler_matrix)
    assert delta(d) == (1, 1)


def test_e8_is_affine_e8_minus_special_vertex():
    fin = build_diagram("E", 8)
    aff = build_diagram("E", 8, affine=True)
    sub = tuple(row[1:] for row in aff.euler_matrix[1:])
    assert fin.euler_matrix == sub


@pytest.mark.parametrize("key", sorted(HAND_EDGES))
def test_matches_hand_written_adjacency(key):
    fam, n, aff = key
    d = build_diagram(fam, n, aff)
    assert [list(r) for r in d.euler_matrix] == cartan_from_edges(d.labels, HAND_EDGES[key])


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.name)
def test_euler_matrix_shape_and_definiteness(d):
    E = d.euler_matrix
    r = d.size
    assert all(E[i][j] == E[j][i] for i in range(r) for j in range(r))
    assert all(E[i][i] == 2 for i in range(r))
    M = sympy.Matrix(E)
    if d.affine:
        assert M.is_positive_semidefinite
        assert M.rank() == r - 1
    else:
        assert M.is_positive_definite


@pytest.mark.parametrize("d", catalog(8, affine=True), ids=lambda d: d.name)
def test_delta_matches_sympy_kernel(d):
    m = delta(d)
    assert m == sympy_marks(d.euler_matrix)
    assert m[0] == 1 and min(m) > 0
    assert sympy.igcd(*m) == 1


@pytest.mark.parametrize("name,marks", sorted(KNOWN_MARKS.items()))
def test_delta_matches_table(name, marks):
    assert delta(parse_diagram(name)) == marks


def test_an_affine_marks_all_one():
    for n in range(1, 9):
        assert delta(build_diagram("A", n, True)) == (1,) * (n + 1)


def test_delta_rejects_finite():
    with pytest.raises(InvalidInputError):
        delta(build_diagram("A", 3))


@pytest.mark.parametrize("fam,n", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)])
def test_rank_bounds(fam, n):
    with pytest.raises(InvalidInputError):
        build_diagram(fam, n)


@pytest.mark.parametrize("name,expected", [("A2", ("A", 2, False)), ("a1~", ("A", 1, True)),
                                           ("D_4~", ("D", 4, True)), ("E8", ("E", 8, False))])
def test_parse_names(name, expected):
    d = parse_diagram(name)
    assert (d.family, d.rank, d.affine) == expected


def test_parse_rejects_garbage():
    with pytest.raises(InvalidInputError):
        parse_diagram("F4")


def test_trivial_and_small_groups():
    assert automorphisms(build_diagram("A", 1)) == []
    gens = automorphisms(build_diagram("A", 2))
    assert gens == [(1, 0)]


SMALL = [d for d in ALL if d.size <= 7]


@pytest.mark.parametrize("d", SMALL, ids=lambda d: d.name)
def test_group_order_matches_bruteforce(d):
    gens = automorphisms(d)
    assert group_order(d, gens) == brute_automorphism_count(d.adjacency)
    assert len(all_automorphisms(d)) == brute_automorphism_count(d.adjacency)


def test_d4_affine_order_24():
    d = build_diagram("D", 4, True)
    assert group_order(d, automorphisms(d)) == 24
    # leaves only; the centre is fixed
    assert all(g[2] == 2 for g in all_automorphisms(d))


def test_fix_special_subgroup():
    d = build_diagram("A", 3, True)
    sub = all_automorphisms(d, fix_special=True)
    assert len(sub) == 2 and all(g[0] == 0 for g in sub)


@pytest.mark.parametrize("d", ALL, ids=lambda d: d.name)
def test_generators_preserve_euler_matrix(d):
    E = d.euler_matrix
    for g in automorphisms(d):
        assert all(E[g[i]][g[j]] == E[i][j] for i in range(d.size) for j in range(d.size))


@given(st.permutations(range(5)))
def test_is_automorphism_agrees_with_definition(p):
    d = build_diagram("D", 4, True)
    adj = d.adjacency
    direct = all(adj[p[i]][p[j]] == adj[i][j] for i in range(5) for j in range(5))
    assert is_automorphism(d, tuple(p)) == direct


def test_permutation_from_labels():
    d = build_diagram("A", 2)
    assert permutation_from_labels(d, {1: 2, 2: 1}) == (1, 0)
    with pytest.raises(InvalidInputError):
        permutation_from_labels(build_diagram("A", 3), {1: 2, 2: 1})


def test_json_export():
    out = to_json(build_diagram("A", 1, True))
    assert out["marks"] == [1, 1] and out["euler_matrix"] == [[2, -2], [-2, 2]]
    assert "marks" not in to_json(build_diagram("A", 2))
