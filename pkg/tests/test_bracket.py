import random

import pytest

from a2poly import catalog
from a2poly.bracket import EmptyDiagram, OpenWeb, a2_bracket, reduce_web, resolve_crossing
from a2poly.conway import _smooth_crossing, _switch_crossing
from a2poly.diagram import parse_mgd, writhe
from a2poly.randgen import random_link_diagram, random_skein_triple, random_web
from a2poly.ring import A_CIRCLE, B_BIGON, LaurentA
from a2poly.statesum import surface_poly


def test_unknot_and_unlinks():
    assert a2_bracket(parse_mgd("O 1")) == LaurentA({0: 1})
    assert a2_bracket(parse_mgd("O 2")) == A_CIRCLE
    assert a2_bracket(parse_mgd("O 3")) == A_CIRCLE**2


def test_empty_diagram_rejected():
    with pytest.raises(EmptyDiagram):
        a2_bracket(parse_mgd(""))


def test_theta_web_value():
    theta = parse_mgd("W+ -3 -2 -1\nW- +1 +2 +3")
    assert a2_bracket(theta) == B_BIGON


def test_open_web_rejected():
    t = parse_mgd("BOUNDARY -1 +1")
    with pytest.raises(OpenWeb):
        reduce_web(t)


def test_kink_values():
    pos = parse_mgd("X+ +1 +2 -2 -1")
    neg = parse_mgd("X- +1 -1 -2 +2")
    assert a2_bracket(pos) == LaurentA({-8: 1})
    assert a2_bracket(neg) == LaurentA({8: 1})
    assert writhe(pos) == 1 and writhe(neg) == -1


def test_resolve_crossing_shape():
    d = catalog.load("trefoil-r")
    terms = resolve_crossing(d, 0)
    assert len(terms) == 2
    coeffs = {str(c) for c, _ in terms}
    assert coeffs == {"-a", "a^-2"}


def test_skein_identity_seeded():
    # a^-1<D+> - a<D-> = (a^-3 - a^3)<D0> on random one-crossing surgeries
    rng = random.Random(101)
    z = LaurentA({-3: 1, 3: -1})
    for _ in range(25):
        pos, neg, smooth = random_skein_triple(rng, 6)
        lhs = LaurentA({-1: 1}) * a2_bracket(pos) - LaurentA({1: 1}) * a2_bracket(neg)
        assert lhs == z * a2_bracket(smooth)


def test_split_multiplicativity():
    rng = random.Random(7)
    for _ in range(8):
        d1 = random_link_diagram(rng, 4)
        d2 = random_link_diagram(rng, 4)
        shift = max(d1.edge_labels(), default=0)
        from a2poly.diagram import Diagram, VertexRecord

        merged = Diagram(
            list(d1.vertices)
            + [
                VertexRecord(v.kind, tuple(s + shift if s > 0 else s - shift for s in v.slots))
                for v in d2.vertices
            ],
            d1.free_loops + d2.free_loops,
        )
        lhs = a2_bracket(merged)
        rhs = A_CIRCLE * a2_bracket(d1) * a2_bracket(d2)
        assert lhs == rhs


def test_confluence_randomized_orders():
    rng = random.Random(2024)
    for _ in range(60):
        w = random_web(rng, 12)
        base = reduce_web(w)
        for _ in range(2):
            assert reduce_web(w, random.Random(rng.randrange(1 << 30))) == base


def test_regular_isotopy_r1_factor():
    # adding a curl multiplies the bracket by a^{-8} or a^{8}
    rng = random.Random(31)
    from a2poly.moves import apply_move, find_sites

    for _ in range(10):
        d = random_link_diagram(rng, 5)
        base = a2_bracket(d)
        for move, factor in (("g1p", LaurentA({-8: 1})), ("g1", LaurentA({8: 1}))):
            sites = [s for s in find_sites(d, move) if s.kind == "insert"]
            d2 = apply_move(d, rng.choice(sites))
            assert a2_bracket(d2) == factor * base
