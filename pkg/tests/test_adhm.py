import json
from random import Random

import pytest

from crystal_forge.adhm import (
    ADHMDatum,
    GradedFlag,
    check_preprojective,
    closure,
    core,
    datum_from_json,
    is_ast_stable,
    is_nilpotent,
    is_stable,
    kernel_of_q,
    preprojective_residual,
    random_preprojective,
    stratum_membership,
    zero_graded,
)
from crystal_forge.dynkin import dynkin
from crystal_forge.linalg import (
    contains,
    full_space,
    mat,
    matmul,
    rank,
    span,
    zero_space,
)

A1 = dynkin("A", 1)
A2 = dynkin("A", 2)
A3 = dynkin("A", 3)


def one_vertex(p_row, q_col):
    return ADHMDatum(A1, (2,), (1,), {}, (mat([p_row]),), (mat([[c] for c in q_col]),))


def test_moment_map_examples():
    assert check_preprojective(one_vertex([1, 0], [0, 1]))
    bad = one_vertex([1, 0], [1, 0])
    assert not check_preprojective(bad)
    assert not preprojective_residual(bad)[0].is_zero()
    assert check_preprojective(one_vertex([0, 0], [0, 0]))


def test_stability_examples():
    good = one_vertex([1, 0], [0, 1])
    assert is_stable(good) and is_ast_stable(good)
    assert not is_stable(one_vertex([0, 0], [0, 1]))
    assert not is_ast_stable(one_vertex([1, 0], [0, 0]))


def test_square_zero_composite_has_full_rank():
    # stable and costable one-vertex data: t = q p has rank dim V and t^2 = 0
    datum = one_vertex([1, 0], [0, 1])
    t = matmul(datum.q[0], datum.p[0])
    assert rank(t) == 1
    assert matmul(t, t).is_zero()


def _a2_edge_datum(edge_value):
    return ADHMDatum(
        A2,
        (0, 0),
        (1, 1),
        {(0, 1): mat([[edge_value]])},
        (mat([[]], rows=1, cols=0), mat([[]], rows=1, cols=0)),
        (mat([], rows=0, cols=1), mat([], rows=0, cols=1)),
    )


def test_closure_core_examples():
    zero_maps = _a2_edge_datum(0)
    line = (span([(1,)], 1), zero_space(1))
    assert closure(zero_maps, line) == line
    assert core(zero_maps, line) == line

    datum = _a2_edge_datum(1)
    closed = closure(datum, line)
    assert tuple(s.cols for s in closed) == (1, 1)
    assert closure(datum, (full_space(1), full_space(1))) == (full_space(1), full_space(1))
    assert core(datum, zero_graded((1, 1))) == zero_graded((1, 1))


def test_closure_core_properties():
    rng = Random(21)
    for _ in range(20):
        datum = random_preprojective(A2, (2, 2), (1, 1), rng)
        spaces = tuple(
            span(
                [[rng.randint(-2, 2) for _ in range(datum.v[i])] for _ in range(rng.randint(0, 2))],
                datum.v[i],
            )
            for i in range(2)
        )
        cl = closure(datum, spaces)
        co = core(datum, spaces)
        for i in range(2):
            assert contains(cl[i], spaces[i])
            assert contains(spaces[i], co[i])
        assert closure(datum, cl) == cl
        assert core(datum, co) == co


def test_nilpotency_examples():
    assert is_nilpotent(_a2_edge_datum(0))
    two_cycle = ADHMDatum(
        A2,
        (0, 0),
        (1, 1),
        {(0, 1): mat([[1]]), (1, 0): mat([[1]])},
        (mat([[]], rows=1, cols=0), mat([[]], rows=1, cols=0)),
        (mat([], rows=0, cols=1), mat([], rows=0, cols=1)),
    )
    assert not is_nilpotent(two_cycle)


def test_zero_framing_solutions_are_nilpotent():
    rng = Random(22)
    for diagram in (A2, A3):
        for _ in range(15):
            v = tuple(rng.randint(1, 3) for _ in range(diagram.rank))
            datum = random_preprojective(diagram, v, (0,) * diagram.rank, rng)
            assert check_preprojective(datum)
            assert is_nilpotent(datum)


def test_stratum_membership_examples():
    datum = ADHMDatum(A1, (2,), (1,), {}, (mat([[0, 1]]),), (mat([[1], [0]]),))
    member = GradedFlag(A1, (2,), ((span([(1, 0)], 2),), (full_space(2),)))
    reject = GradedFlag(A1, (2,), ((span([(0, 1)], 2),), (full_space(2),)))
    assert stratum_membership(datum, member) == (((0,), (0,)), ((0,), (1,)))
    assert stratum_membership(datum, reject) is None
    trivial = GradedFlag(A1, (2,), ((full_space(2),),))
    v_t, vt_t = stratum_membership(datum, trivial)
    core_dim = sum(s.cols for s in core(datum, kernel_of_q(datum)))
    assert v_t == ((1 - core_dim,),) and vt_t == ((core_dim,),)


def test_stratum_requires_stability():
    unstable = one_vertex([0, 0], [0, 1])
    flag = GradedFlag(A1, (2,), ((full_space(2),),))
    with pytest.raises(ValueError):
        stratum_membership(unstable, flag)


def test_stratum_label_telescopes_to_dim_v():
    rng = Random(5)
    found = 0
    for _ in range(80):
        datum = random_preprojective(A2, (1, 1), (2, 1), rng)
        if not is_stable(datum):
            continue
        flag = GradedFlag(
            A2,
            (2, 1),
            (
                (span([(1, 0)], 2), zero_space(1)),
                (full_space(2), full_space(1)),
            ),
        )
        label = stratum_membership(datum, flag)
        if label is None:
            continue
        v_tuple, vt_tuple = label
        total = [0, 0]
        for w in v_tuple + vt_tuple:
            total = [a + b for a, b in zip(total, w)]
        assert tuple(total) == datum.v
        found += 1
    assert found > 0


def test_flag_validation():
    with pytest.raises(ValueError):
        GradedFlag(A1, (2,), ((span([(1, 0)], 2),),))  # last step not full
    with pytest.raises(ValueError):
        GradedFlag(
            A1,
            (2,),
            ((full_space(2),), (span([(1, 0)], 2),)),  # not increasing
        )


def test_shape_validation():
    with pytest.raises(ValueError):
        ADHMDatum(A1, (2,), (1,), {}, (mat([[1]]),), (mat([[1], [0]]),))
    with pytest.raises(ValueError):
        ADHMDatum(
            A2,
            (0, 0),
            (1, 1),
            {(0, 2): mat([[1]])},
            (mat([[]], rows=1, cols=0), mat([[]], rows=1, cols=0)),
            (mat([], rows=0, cols=1), mat([], rows=0, cols=1)),
        )


def test_json_interchange():
    payload = {
        "diagram": "A1",
        "d": [2],
        "v": [1],
        "x": {},
        "p": [[[[0, 1], [1, 1]]]],
        "q": [[[[1, 1]], [[0, 1]]]],
        "flag": [
            [[[[1, 1], [0, 1]]]],
            [[[[1, 1], [0, 1]], [[0, 1], [1, 1]]]],
        ],
    }
    datum, flag = datum_from_json(payload)
    assert check_preprojective(datum)
    assert is_stable(datum)
    assert flag is not None and flag.n == 2
    assert stratum_membership(datum, flag) == (((0,), (0,)), ((0,), (1,)))


def test_json_roundtrip_via_string():
    payload = {
        "diagram": "A2",
        "d": [1, 0],
        "v": [1, 1],
        "x": {"0->1": [[[1, 1]]], "1->0": [[[0, 1]]]},
        "p": [[[[1, 1]]], [[]]],
        "q": [[[[0, 1]]], []],
    }
    datum, flag = datum_from_json(json.loads(json.dumps(payload)))
    assert flag is None
    assert check_preprojective(datum)
