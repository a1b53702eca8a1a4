import itertools
import json

import pytest

from selt.errors import BadTableau, NotASubset, NotSlidable
from selt.jdt import rect, rectify
from selt.shapes import Box, StrictPartition, rho, rho_nm, skew
from selt.slide_calc import (
    Shading,
    count_d_staircase,
    i_slide,
    is_bad,
    is_r_compatible,
    is_slidable,
    shading_boxes,
    shading_to_tableau,
    shift_op,
    slidable_candidates,
    slide_decomposition,
    tableau_to_shading,
    u_tableau,
)
from selt.tableaux import EdgeTableau, superstandard


def staircase_tableau(n, edges, n_labels):
    shape = skew(rho(n), rho(n))
    return EdgeTableau(shape, {}, edges, n_labels)


def test_u_tableau_pinned():
    u = u_tableau(4, 3)
    assert [u.edge(i) for i in range(1, 5)] == [(1,), (2, 5), (3, 6, 8), (4, 7, 9)]
    u = u_tableau(3, 3)
    assert [u.edge(i) for i in range(1, 4)] == [(1,), (2, 4), (3, 5, 6)]
    u = u_tableau(3, 0)
    assert all(u.edge(i) == () for i in range(1, 4))


def test_i_slide_pinned():
    u = u_tableau(4, 3)
    t = i_slide(u, 3, (6,))
    assert [t.edge(i) for i in range(1, 5)] == [(1,), (2, 5), (3, 8), (4, 6, 7, 9)]
    assert i_slide(u, 2, ()) == u
    with pytest.raises(NotASubset):
        i_slide(u, 1, (2,))


def test_is_bad():
    assert is_bad(u_tableau(4, 3)) == (False, None)
    t = staircase_tableau(2, {1: [2], 2: [1]}, 2)
    bad, witness = is_bad(t)
    assert bad and witness == (2, 2, 1)
    good = i_slide(u_tableau(4, 3), 3, (6,))
    assert is_bad(good) == (False, None)


def test_slide_decomposition_pinned():
    t = i_slide(u_tableau(4, 3), 3, (6,))
    assert slide_decomposition(t) == (frozenset(), frozenset(), frozenset({6}))
    assert slide_decomposition(u_tableau(4, 3)) == (frozenset(),) * 3
    bad = staircase_tableau(2, {1: [2], 2: [1]}, 2)
    with pytest.raises(BadTableau):
        slide_decomposition(bad)


def example_311():
    """The two tableaux built from U_{3,3} by slides ({}, {2}) and ({1}, {2})."""
    u = u_tableau(3, 3)
    t = i_slide(u, 2, (2,))
    t_prime = i_slide(i_slide(u, 1, (1,)), 2, (2,))
    return t, t_prime


def test_example_slide_paths():
    t, t_prime = example_311()
    assert [t.edge(i) for i in range(1, 4)] == [(1,), (4,), (2, 3, 5, 6)]
    assert [t_prime.edge(i) for i in range(1, 4)] == [(), (1, 4), (2, 3, 5, 6)]
    assert slide_decomposition(t) == (frozenset(), frozenset({2}))
    assert slide_decomposition(t_prime) == (frozenset({1}), frozenset({2}))


def test_example_slidable_classification():
    t, t_prime = example_311()
    ok_t, reports_t = is_slidable(t)
    ok_tp, reports_tp = is_slidable(t_prime)
    assert ok_t and not ok_tp
    # each individual step: both first steps and t's second are slidable,
    # t_prime's second is not
    assert all(r.ok for r in reports_t)
    assert reports_tp[0].ok and not reports_tp[1].ok


def test_example_rectification_agrees():
    t, t_prime = example_311()
    target = superstandard(rho_nm(3, 3))
    assert rect(t) == target
    assert rect(t_prime) != target


def test_example_compatibility():
    t, t_prime = example_311()
    assert is_r_compatible(t_prime, 0)
    assert is_r_compatible(t, 1)
    assert not is_r_compatible(t_prime, 1)


def test_u_is_compatible_and_slidable():
    for n, m in [(2, 1), (3, 2), (4, 3)]:
        u = u_tableau(n, m)
        for r in range(0, m + 1):
            assert is_r_compatible(u, r)
        ok, reports = is_slidable(u)
        assert ok and all(r.step == frozenset() for r in reports)


def test_slidable_candidates_pinned():
    t = staircase_tableau(4, {2: [2], 3: [1, 3, 5, 6, 8], 4: [4, 7, 9, 10]}, 10)
    assert slidable_candidates(t, 3, t) == {1, 5, 8}


def test_shift_figure_pinned():
    big_t = staircase_tableau(4, {2: [2, 5], 3: [1, 3, 6, 8], 4: [4, 7, 9, 10]}, 10)
    tilde = rectify(i_slide(big_t, 3, (8,))).states[7]
    assert tilde.boxes == {
        Box(1, 4): 4, Box(2, 2): 1, Box(2, 3): 3, Box(2, 4): 7,
        Box(3, 3): 6, Box(3, 4): 8, Box(4, 4): 9,
    }
    assert tilde.edge(2) == (2, 5) and tilde.edge(4) == (10,)
    out = shift_op(tilde, 8, 3)
    assert out.boxes == {
        Box(1, 4): 4, Box(2, 2): 1, Box(2, 3): 3, Box(2, 4): 7,
        Box(3, 3): 6, Box(3, 4): 9, Box(4, 4): 10,
    }
    assert out.edge(2) == (2, 5)
    assert out.edge(3) == (8,)
    assert out.edge(4) == ()


def test_shift_trivial_when_absent():
    u = u_tableau(3, 2)
    assert shift_op(u, 5, 1) is u  # 5 is not in column 2


def test_shading_validation():
    with pytest.raises(ValueError):
        Shading(4, 2, frozenset({(4, 1)}))
    with pytest.raises(ValueError):
        Shading(4, 2, frozenset({(1, 2)}))


def test_shading_boxes_count():
    from math import comb
    for n in range(1, 6):
        for m in range(0, n + 1):
            assert len(shading_boxes(n, m)) == comb(n, 2) - comb(n - m, 2)


def test_example_shading_pair_bit_exact():
    s = Shading(4, 2, frozenset({(1, 1), (2, 1), (3, 2)}))
    assert json.loads(json.dumps(s.to_json())) == {
        "n": 4, "m": 2, "shaded": [[1, 1], [2, 1], [3, 2]],
    }
    t = shading_to_tableau(s)
    assert json.loads(json.dumps(t.to_json())) == {
        "shape": {"outer": [4, 3, 2, 1], "inner": [4, 3, 2, 1]},
        "boxes": [],
        "edges": {"2": [2, 5], "3": [1, 3], "4": [4, 6, 7]},
        "n": 7,
    }
    assert tableau_to_shading(t) == s


def test_empty_shading_gives_u():
    for n, m in [(2, 1), (4, 2), (4, 4)]:
        s = Shading(n, m, frozenset())
        assert shading_to_tableau(s) == u_tableau(n, m)


def test_all_shadings_roundtrip_and_rectify():
    boxes = shading_boxes(4, 2)
    target = superstandard(rho_nm(4, 2))
    seen = set()
    for bits in itertools.product((False, True), repeat=len(boxes)):
        s = Shading(4, 2, frozenset(b for b, on in zip(boxes, bits) if on))
        t = shading_to_tableau(s)
        seen.add(t)
        assert tableau_to_shading(t) == s
        assert rect(t) == target
    assert len(seen) == 32


def test_tableau_to_shading_rejects_non_members():
    bad = staircase_tableau(2, {1: [2], 2: [1]}, 2)
    with pytest.raises(NotSlidable):
        tableau_to_shading(bad)
    _, t_prime = example_311()
    with pytest.raises(NotSlidable):
        tableau_to_shading(t_prime)


def test_count_d_staircase_values():
    assert count_d_staircase(2, 1) == 2
    assert count_d_staircase(4, 2) == 32
    assert count_d_staircase(5, 0) == 1
