import pytest
from hypothesis import given, strategies as st

from crystal_forge.dynkin import (
    dynkin,
    induced_subdiagram,
    pairing,
    parse_diagram,
)


def test_a1_tables():
    a1 = dynkin("A", 1)
    assert a1.cartan == ((2,),)
    assert a1.x_matrix == ((0,),)
    assert a1.oriented_edges == ()
    assert a1.simple_root(0) == (2,)


def test_a2_tables():
    a2 = dynkin("A", 2)
    assert a2.cartan == ((2, -1), (-1, 2))
    assert a2.x_matrix == ((0, 1), (1, 0))
    assert len(a2.oriented_edges) == 2


def test_d4_shape():
    d4 = dynkin("D", 4)
    assert [sum(row) for row in d4.cartan] == [1, -1, 1, 1]
    assert sum(d4.x_matrix[1]) == 3  # vertex 1 has degree 3
    assert len(d4.oriented_edges) == 6


@pytest.mark.parametrize("family,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)])
def test_invalid_diagrams(family, rank):
    with pytest.raises(ValueError):
        dynkin(family, rank)


def test_parse_diagram():
    assert parse_diagram("A2").label == "A2"
    assert parse_diagram(" e6 ").label == "E6"
    with pytest.raises(ValueError):
        parse_diagram("F4")
    with pytest.raises(ValueError):
        parse_diagram("A")


def test_pairing_examples():
    assert pairing((1, 0), (0, 1)) == 0
    assert pairing((1, 1), (1, 1)) == 2
    a2 = dynkin("A", 2)
    assert pairing(a2.apply_x((1, 1)), (1, 1)) == 2
    with pytest.raises(ValueError):
        pairing((1,), (1, 0))


def test_weyl_reflect_example():
    a2 = dynkin("A", 2)
    assert a2.weyl_reflect(0, (1, 0)) == (-1, 1)


@given(
    st.tuples(*(st.integers(-6, 6) for _ in range(3))),
    st.integers(0, 2),
)
def test_weyl_reflect_involution_and_sign(w, i):
    a3 = dynkin("A", 3)
    once = a3.weyl_reflect(i, w)
    assert once[i] == -w[i]
    assert a3.weyl_reflect(i, once) == w


@given(
    st.tuples(*(st.integers(-6, 6) for _ in range(4))),
    st.tuples(*(st.integers(-6, 6) for _ in range(4))),
)
def test_x_symmetric(v, u):
    d4 = dynkin("D", 4)
    assert pairing(d4.apply_x(v), u) == pairing(v, d4.apply_x(u))


def test_oriented_edge_reversal():
    d4 = dynkin("D", 4)
    H = d4.oriented_edges
    assert len(H) == 2 * len(d4.edges)
    for h in H:
        rev = d4.reversed_edge(h)
        assert rev in H and rev != h and d4.reversed_edge(rev) == h
        assert d4.orientation_sign(h) + d4.orientation_sign(rev) == 0


@pytest.mark.parametrize(
    "label,count",
    [("A2", 3), ("A3", 6), ("A4", 10), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120)],
)
def test_positive_root_counts(label, count):
    assert len(parse_diagram(label).positive_roots()) == count


@pytest.mark.parametrize(
    "label,hw,dim",
    [
        ("A2", (1, 0), 3),
        ("A2", (1, 1), 8),
        ("A2", (2, 1), 15),
        ("D4", (1, 0, 0, 0), 8),
        ("D4", (0, 1, 0, 0), 28),
        ("E6", (1, 0, 0, 0, 0, 0), 27),
    ],
)
def test_weyl_dimension(label, hw, dim):
    assert parse_diagram(label).weyl_dimension(hw) == dim


def test_inverse_cartan_roundtrip():
    e6 = dynkin("E", 6)
    v = (3, -1, 4, 0, 2, -5)
    sol = e6.solve_cartan(v)
    assert e6.apply_cartan(sol) == v


def test_induced_subdiagram():
    a3 = dynkin("A", 3)
    sub, kept = induced_subdiagram(a3, [0, 2])
    assert sub.label == "A1+A1" and kept == (0, 2)
    d4 = dynkin("D", 4)
    sub, _ = induced_subdiagram(d4, [0, 2, 3])
    assert sub.label == "A1+A1+A1"
    sub, _ = induced_subdiagram(d4, [1, 2, 3])
    assert sub.label == "A3"
    sub, _ = induced_subdiagram(d4, [])
    assert sub.rank == 0
    with pytest.raises(ValueError):
        induced_subdiagram(a3, [7])


@pytest.mark.parametrize(
    "label,keep,expected",
    [
        ("E6", [0, 1, 2, 3, 5], "D5"),
        ("E6", [0, 1, 2, 3, 4], "A5"),
        ("E6", [1, 2, 3, 5], "D4"),
        ("E6", [0, 1, 3, 4, 5], "A2+A2+A1"),
        ("E7", [1, 2, 3, 4, 5, 6], "D6"),
        ("E8", [0, 1, 2, 3, 4, 5, 7], "E7"),
        ("E8", [0, 1, 2, 3, 4, 5, 6], "A7"),
    ],
)
def test_e_type_subdiagrams(label, keep, expected):
    sub, _ = induced_subdiagram(parse_diagram(label), keep)
    assert sub.label == expected
