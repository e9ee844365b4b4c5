import random

import pytest

from a2poly import catalog
from a2poly.diagram import (
    INF,
    ZERO,
    CrossingsPresent,
    Diagram,
    MGDSyntaxError,
    ValidationError,
    VertexRecord,
    component_count,
    faces,
    mirror,
    negative_resolution,
    parse_mgd,
    positive_resolution,
    resolve_state,
    reverse_orientation,
    serialize,
    validate,
    writhe,
)
from a2poly.randgen import random_marked_diagram


def test_marked_kink_resolutions():
    d = parse_mgd("M +1 -2 +2 -1")
    inf = resolve_state(d, {0: INF})
    zero = resolve_state(d, {0: ZERO})
    assert inf.free_loops == 1 and not inf.vertices
    assert zero.free_loops == 2 and not zero.vertices


def test_free_loop_record():
    assert parse_mgd("O 3").free_loops == 3


def test_parser_rejects_bad_pairing():
    with pytest.raises((MGDSyntaxError, ValidationError)):
        parse_mgd("X+ +1 +2 -1 -2\nX+ +3 +1 -3 -1")
    with pytest.raises(ValidationError):
        parse_mgd("M +1 -2 +2 -3")  # label 3 unpaired


def test_parser_rejects_marked_orientation():
    # two adjacent arriving darts at a marked vertex
    with pytest.raises(ValidationError) as err:
        validate(Diagram([VertexRecord("M", (1, 2, -1, -2))]))
    assert "orientation" in str(err.value)


def test_parser_rejects_nonplanar_rotation():
    with pytest.raises(ValidationError) as err:
        parse_mgd("W+ -1 -2 -3\nW- +1 +2 +3")
    assert "planarity" in str(err.value)


def test_serialize_roundtrip_catalog():
    for name in catalog.names():
        d = catalog.load(name)
        again = parse_mgd(serialize(d))
        assert serialize(again) == serialize(d)
        assert writhe(again) == writhe(d)


def test_writhe_values():
    assert writhe(catalog.load("trefoil-r")) == 3
    assert writhe(mirror(catalog.load("trefoil-r"))) == -3
    assert writhe(parse_mgd("O 2")) == 0
    assert writhe(catalog.load("yoshikawa-8_1")) == 0


def test_faces_theta_and_circle():
    theta = parse_mgd("W+ -3 -2 -1\nW- +1 +2 +3")
    sizes = sorted(len(f) for f in faces(theta))
    assert sizes == [2, 2, 2]
    with pytest.raises(CrossingsPresent):
        faces(catalog.load("trefoil-r"))


def test_resolution_properties():
    d = catalog.load("yoshikawa-8_1")
    marked = d.marked_indices()
    assert component_count(positive_resolution(d)) == 2
    assert component_count(negative_resolution(d)) == 2
    mid1 = resolve_state(d, {marked[0]: INF, marked[1]: ZERO})
    mid2 = resolve_state(d, {marked[0]: ZERO, marked[1]: INF})
    assert component_count(mid1) == 1  # square-knot cross-section
    assert component_count(mid2) == 3
    for state_diag in (mid1, mid2):
        assert writhe(state_diag) == writhe(d)


def test_resolutions_of_random_diagrams_are_valid():
    rng = random.Random(5)
    for _ in range(15):
        d = random_marked_diagram(rng, 6, 3)
        marked = d.marked_indices()
        for code in range(1 << len(marked)):
            state = {vi: (ZERO if (code >> j) & 1 else INF) for j, vi in enumerate(marked)}
            res = resolve_state(d, state)
            validate(res)
            assert writhe(res) == writhe(d)
            assert not res.marked_indices()


def test_mirror_and_reverse_are_involutions():
    for name in ("trefoil-r", "yoshikawa-9_1", "ex42-5"):
        d = catalog.load(name)
        assert serialize(mirror(mirror(d))) == serialize(d)
        assert serialize(reverse_orientation(reverse_orientation(d))) == serialize(d)
        validate(mirror(d))
        validate(reverse_orientation(d))


def test_empty_diagram_parses():
    d = parse_mgd("# nothing here\n")
    assert not d.vertices and d.free_loops == 0
