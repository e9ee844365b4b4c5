import pytest

from a2poly.bracket import a2_bracket
from a2poly.diagram import parse_mgd, serialize, validate
from a2poly.ring import A_CIRCLE, B_BIGON, LaurentA
import functools

from a2poly.tangles import (
    TABLE_3,
    TABLE_4,
    TABLE_4_COLUMNS,
    BoundaryMismatch,
    census_identity_holds,
    enumerate_fundamental,
    glue,
    labeled_bases,
    move_templates,
    reproduce_tables,
    tiling_census,
    yoshikawa_closures,
)


@functools.lru_cache(maxsize=1)
def _tables():
    return reproduce_tables()


def test_enumeration_counts():
    assert len(enumerate_fundamental(3, 8)) == 6
    assert len(enumerate_fundamental(4, 12)) == 23


def test_enumeration_saturation():
    assert len(enumerate_fundamental(3, 10)) == 6
    assert len(enumerate_fundamental(4, 14)) == 23


def test_two_point_boundary():
    assert len(enumerate_fundamental(1, 4)) == 1  # single arc only


def test_census_identity():
    for pairs, vmax in ((3, 8), (4, 12)):
        for t in enumerate_fundamental(pairs, vmax):
            assert census_identity_holds(t)


def test_theta_like_census():
    # hexagonal web: six boundary squares and one interior hexagon
    web6 = next(t for t in enumerate_fundamental(3, 8) if len(t.vertices) == 6)
    census = tiling_census(web6)
    assert census["faces"] == {4: 6, 6: 1}
    assert census["V"] - census["E"] + census["F"] == 1


def test_glue_values():
    rep = _tables()
    f, _g = labeled_bases(rep)
    assert a2_bracket(glue(f[3], f[3])) == LaurentA({0: 1})
    assert a2_bracket(glue(f[3], f[4])) == A_CIRCLE * A_CIRCLE
    assert a2_bracket(glue(f[4], f[5])) == B_BIGON**3


def test_glue_mismatch():
    t = parse_mgd("BOUNDARY -1 +1")
    bad = parse_mgd("BOUNDARY -1 +1 -2 +2")
    with pytest.raises(BoundaryMismatch):
        glue(t, bad)


def test_table_entries_match():
    rep = _tables()
    g3 = rep.gram3
    for row in (3, 4):
        for col in range(6):
            assert g3[rep.labeling3[row]][rep.labeling3[col]] == TABLE_3[row][col]
    g4 = rep.gram4
    for row in range(23):
        for k, col in enumerate(TABLE_4_COLUMNS):
            assert g4[rep.labeling4[row]][rep.labeling4[col]] == TABLE_4[row][k]


def test_table_spot_values():
    rep = _tables()
    g4 = rep.gram4
    lab = rep.labeling4
    B = B_BIGON
    assert g4[lab[4]][lab[15]] == B**3 + B**3 + B**5
    assert g4[lab[15]][lab[15]] == (A_CIRCLE * B**2).scale(2) + A_CIRCLE * B**4


def test_gram_mirror_symmetry():
    rep = _tables()
    for gram, n in ((rep.gram3, 6), (rep.gram4, 23)):
        for i in range(n):
            for j in range(n):
                assert gram[i][j] == gram[j][i].mirror()


def test_closure_identities():
    rep = _tables()
    cr = yoshikawa_closures(rep)
    assert cr.decomposition3_ok
    assert cr.decomposition4_ok
    assert cr.expansion_g_ok
    assert cr.expansion_gstar_ok
    assert cr.case_list3_ok
    assert cr.case_list4_ok


def test_templates_validate():
    for name, t in move_templates().items():
        validate(t)
        assert t.is_tangle(), name


def test_enumerated_tangles_roundtrip():
    for t in enumerate_fundamental(3, 8):
        assert serialize(parse_mgd(serialize(t))) == serialize(t)
