import json

import pytest

from selt.shapes import (
    Box,
    SkewShape,
    StrictPartition,
    contains,
    inner_corners,
    rho,
    rho_nm,
    skew,
)


def test_strict_partition_basic():
    p = StrictPartition((5, 3, 2))
    assert p.size() == 10
    assert len(p) == 3
    assert p[0] == 5
    assert p == (5, 3, 2)


def test_strict_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    with pytest.raises(ValueError):
        StrictPartition((2, 3))
    with pytest.raises(ValueError):
        StrictPartition((3, 0))
    with pytest.raises(ValueError):
        StrictPartition((-1,))


def test_rho():
    assert rho(0) == ()
    assert rho(5) == (5, 4, 3, 2, 1)
    assert rho(3) == (3, 2, 1)


def test_rho_nm():
    assert rho_nm(4, 2) == (4, 3)
    assert rho_nm(7, 0) == ()
    assert rho_nm(4, 4) == (4, 3, 2, 1)


def test_contains():
    assert contains(StrictPartition((3, 2)), StrictPartition((5, 3, 2)))
    assert contains(StrictPartition(()), StrictPartition((4, 1)))
    assert not contains(StrictPartition((4, 3)), StrictPartition((3, 2, 1)))
    assert not contains(StrictPartition((2, 1)), StrictPartition((3,)))


def all_strict_partitions_up_to(total):
    out = [()]
    def rec(prefix, rest):
        for p in range(min(rest, prefix[-1] - 1 if prefix else rest), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), rest - p)
    rec((), total)
    return [StrictPartition(p) for p in out]


def test_contains_is_a_partial_order():
    ps = all_strict_partitions_up_to(5)
    for a in ps:
        assert contains(a, a)
        for b in ps:
            if contains(a, b) and contains(b, a):
                assert a == b
    # transitivity on the box-subset characterization
    for a in ps:
        for b in ps:
            if contains(a, b):
                assert set(a.boxes()) <= set(b.boxes())


def test_has_box_and_boxes_shifted_coordinates():
    p = StrictPartition((2, 1))
    assert list(p.boxes()) == [Box(1, 1), Box(1, 2), Box(2, 2)]
    assert p.has_box(2, 2)
    assert not p.has_box(2, 1)
    assert not p.has_box(1, 3)


def test_skew_shape_box_and_edge_counts():
    s = skew(StrictPartition((5, 3, 2)), StrictPartition((3, 2)))
    assert len(s.boxes()) == 5
    assert list(s.diagonal_edges()) == [1, 2, 3]

    s = skew(StrictPartition((3, 2, 1)), StrictPartition((3, 2, 1)))
    assert len(s.boxes()) == 0
    assert list(s.diagonal_edges()) == [1, 2, 3]

    s = skew(StrictPartition((2, 1)), StrictPartition(()))
    assert len(s.boxes()) == 3
    assert list(s.diagonal_edges()) == [1, 2]


def test_skew_boxes_row_major():
    s = skew(StrictPartition((5, 3, 2)), StrictPartition((3, 2)))
    assert s.boxes() == (Box(1, 4), Box(1, 5), Box(2, 4), Box(3, 3), Box(3, 4))


def test_skew_requires_containment():
    from selt.errors import ContainmentError
    with pytest.raises(ContainmentError):
        skew(StrictPartition((2, 1)), StrictPartition((3,)))


def corner_oracle(inner):
    """A corner is a box whose removal leaves a valid shifted diagram."""
    found = []
    parts = list(inner.parts)
    for i in range(1, len(parts) + 1):
        smaller = parts.copy()
        smaller[i - 1] -= 1
        if smaller[i - 1] == 0:
            if i != len(parts):
                continue
            smaller.pop()
        if all(a > b for a, b in zip(smaller, smaller[1:])):
            found.append(Box(i, parts[i - 1] + i - 1))
    return found


@pytest.mark.parametrize(
    "outer,inner",
    [((3, 2), (2, 1)), ((5, 3, 2), (3, 2)), ((4, 3, 2, 1), (3, 1)), ((5, 1), (1,))],
)
def test_inner_corners_match_removability_oracle(outer, inner):
    shape = skew(StrictPartition(outer), StrictPartition(inner))
    got = set(inner_corners(shape))
    want = set(corner_oracle(StrictPartition(inner)))
    assert got == want


def test_inner_corners_pinned():
    assert inner_corners(skew(StrictPartition((3, 2)), StrictPartition((2, 1)))) == [
        Box(2, 2)
    ]
    assert inner_corners(skew(StrictPartition((5, 3, 2)), StrictPartition((3, 2)))) == [
        Box(2, 3)
    ]
    assert inner_corners(skew(StrictPartition((2, 1)), StrictPartition(()))) == []


def test_json_roundtrip():
    p = StrictPartition((4, 2, 1))
    assert StrictPartition.from_json(json.loads(json.dumps(p.to_json()))) == p
    s = skew(StrictPartition((4, 2, 1)), StrictPartition((2, 1)))
    back = SkewShape.from_json(json.loads(json.dumps(s.to_json())))
    assert back.outer == s.outer and back.inner == s.inner
