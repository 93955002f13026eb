from fractions import Fraction
from random import Random

import pytest

from crystal_forge.dynkin import dynkin
from crystal_forge.paths import (
    VertexCapError,
    build_crystal,
    canonical_path,
    highest_path,
    path_e,
    path_endpoint,
    path_f,
)

from oracles import freudenthal_character

A1 = dynkin("A", 1)
A2 = dynkin("A", 2)
D4 = dynkin("D", 4)


def test_highest_path_examples():
    assert highest_path(A1, (2,)) == ((Fraction(2),),)
    assert highest_path(A2, (1, 1)) == ((Fraction(1), Fraction(1)),)
    with pytest.raises(ValueError):
        highest_path(A2, (-1, 0))


def test_lowering_splits_the_straight_path():
    p = highest_path(A1, (2,))
    q = path_f(A1, 0, p)
    assert q == ((Fraction(-1),), (Fraction(1),))
    assert path_endpoint(q, 1) == (0,)


def test_string_exhaustion():
    p = highest_path(A1, (2,))
    p1 = path_f(A1, 0, p)
    p2 = path_f(A1, 0, p1)
    assert path_endpoint(p2, 1) == (-2,)
    assert path_f(A1, 0, p2) is None
    assert path_e(A1, 0, p) is None


def test_operators_are_mutually_inverse():
    rng = Random(3)
    for diagram, hw in [(A2, (2, 1)), (D4, (1, 0, 0, 1))]:
        crystal = build_crystal(diagram, hw)
        paths = [payload[1] for payload in crystal.payloads]
        for path in paths:
            for i in range(diagram.rank):
                down = path_f(diagram, i, path)
                if down is not None:
                    assert path_e(diagram, i, down) == path
                up = path_e(diagram, i, path)
                if up is not None:
                    assert path_f(diagram, i, up) == path
        # random alternating walks return home
        for _ in range(50):
            path = paths[rng.randrange(len(paths))]
            i = rng.randrange(diagram.rank)
            down = path_f(diagram, i, path)
            if down is not None:
                assert path_e(diagram, i, down) == path


def test_canonicalization_idempotent_and_respected():
    crystal = build_crystal(A2, (1, 1))
    for payload in crystal.payloads:
        path = payload[1]
        assert canonical_path(path) == path
        # split every segment in two; operators must not notice
        split = []
        for seg in path:
            split.append(tuple(c / 2 for c in seg))
            split.append(tuple(c / 2 for c in seg))
        assert canonical_path(split) == path
        for i in range(2):
            a = path_f(A2, i, path)
            b = path_f(A2, i, tuple(split))
            assert a == b


def test_build_crystal_counts():
    assert len(build_crystal(A1, (3,))) == 4
    assert sorted(build_crystal(A1, (3,)).weights) == [(-3,), (-1,), (1,), (3,)]
    assert sorted(build_crystal(A2, (1, 0)).weights) == [(-1, 1), (0, -1), (1, 0)]
    assert len(build_crystal(D4, (1, 0, 0, 0))) == 8


def test_unique_source_with_highest_weight():
    c = build_crystal(A2, (2, 1))
    sources = [v for v in range(len(c)) if c.is_source(v)]
    assert sources == [0]
    assert c.weights[0] == (2, 1)


def test_cardinality_matches_weyl_dimension():
    for diagram, hw in [
        (A2, (2, 1)),
        (A2, (3, 0)),
        (dynkin("A", 3), (1, 1, 0)),
        (D4, (0, 1, 0, 0)),
    ]:
        assert len(build_crystal(diagram, hw)) == diagram.weyl_dimension(hw)


def test_character_matches_freudenthal():
    for diagram, hw in [(A2, (2, 1)), (dynkin("A", 3), (1, 0, 1)), (D4, (1, 0, 0, 0))]:
        crystal = build_crystal(diagram, hw)
        assert crystal.character() == freudenthal_character(diagram, hw)


def test_vertex_cap():
    with pytest.raises(VertexCapError):
        build_crystal(A2, (3, 3), max_vertices=10)


def test_nondominant_rejected():
    with pytest.raises(ValueError):
        build_crystal(A2, (0, -1))
