import cmath
import random

from a2poly import catalog
from a2poly.diagram import INF, ZERO, parse_mgd, resolve_state
from a2poly.randgen import random_marked_diagram
from a2poly.ring import (
    A6P1,
    A12P1,
    PHI18,
    A_CIRCLE,
    LaurentA,
    SurfacePoly,
    quotient_reduce,
)
from a2poly.statesum import (
    double_bracket,
    enumerate_states,
    p9_star,
    p9_star_oracle,
    ribbon_analysis,
    specialize,
    star_quotient_oracle,
    surface_poly,
)

ONE = LaurentA({0: 1})


def test_marked_kink_double_bracket():
    d = parse_mgd("M +1 -2 +2 -1")
    assert double_bracket(d) == SurfacePoly({(1, 0): ONE, (0, 1): A_CIRCLE})


def test_plain_link_has_no_xy():
    d = catalog.load("trefoil-r")
    report = surface_poly(d)
    assert set(report.poly.terms) == {(0, 0)}
    assert report.marked_count == 0


def test_catalog_marked_values():
    for name, expected in catalog.GOLDEN_MARKED.items():
        assert surface_poly(catalog.load(name)).poly == expected, name


def test_state_table_shape():
    d = catalog.load("yoshikawa-8_1")
    report = surface_poly(d)
    assert len(report.per_state) == 4
    assert {(r.x_degree, r.y_degree) for r in report.per_state} == {(2, 0), (1, 1), (0, 2)}
    # binary counter order: first state is all-INF
    assert report.per_state[0].state == (INF, INF)
    assert report.per_state[-1].state == (ZERO, ZERO)


def test_state_resummation():
    # the invariant re-sums from per-state invariants (writhe is constant
    # across states)
    rng = random.Random(55)
    for _ in range(10):
        d = random_marked_diagram(rng, 5, 3)
        total = SurfacePoly()
        for state in enumerate_states(d):
            n_inf = sum(1 for v in state.values() if v == INF)
            n_zero = len(state) - n_inf
            sub = surface_poly(resolve_state(d, state)).poly.coeff(0, 0)
            total = total + SurfacePoly.monomial(sub, n_inf, n_zero)
        assert total == surface_poly(d).poly


def test_specialization_catalog():
    d = catalog.load("yoshikawa-8_1")
    s6 = specialize(d, A6P1)
    assert {k: v.coeffs[0] for k, v in s6.terms.items()} == {(2, 0): -1, (1, 1): 2, (0, 2): -1}
    s12 = specialize(d, A12P1)
    assert {k: v.coeffs[0] for k, v in s12.terms.items()} == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    s18 = specialize(d, PHI18)
    assert len(s18.terms) == 1 and s18.coeff(1, 1).coeffs[0] == 4


def test_ribbon_8_1():
    rep = ribbon_analysis(catalog.load("yoshikawa-8_1"))
    assert rep.is_ribbon and rep.n == 1
    assert rep.sigma0_is_knot
    assert rep.is_monomial
    assert abs(rep.coefficient_complex - 4) < 1e-9
    assert rep.admissibility["verdict"] == "likely"


def test_ribbon_negative_and_trivial():
    assert not ribbon_analysis(catalog.load("yoshikawa-10_2")).is_ribbon
    unknot = ribbon_analysis(catalog.load("unknot"))
    assert unknot.is_ribbon and unknot.n == 0
    assert unknot.coefficient_complex == 1


def test_p9_star_pipelines_agree():
    for name in ("yoshikawa-8_1", "yoshikawa-9_1", "unknot"):
        d = catalog.load(name)
        direct = p9_star(d)
        oracle = p9_star_oracle(d)
        assert set(direct) == set(oracle)
        for k in direct:
            assert abs(direct[k] - oracle[k]) < 1e-9
        assert star_quotient_oracle(d) == specialize(d, PHI18)


def test_star_quotient_9_1_is_monomial():
    rep = ribbon_analysis(catalog.load("yoshikawa-9_1"))
    assert rep.is_ribbon and rep.n == 1 and rep.is_monomial


def test_single_vertex_expansion():
    # expanding one marked vertex: value = x*(first smoothing) + y*(second)
    from a2poly.diagram import splice

    rng = random.Random(91)
    for _ in range(8):
        d = random_marked_diagram(rng, 5, 3)
        v = rng.choice(d.marked_indices())
        inf_part = splice(d, {v}, [((v, 0), (v, 1)), ((v, 2), (v, 3))])
        zero_part = splice(d, {v}, [((v, 1), (v, 2)), ((v, 3), (v, 0))])
        expanded = surface_poly(inf_part).poly * SurfacePoly.monomial(ONE, 1, 0)
        expanded = expanded + surface_poly(zero_part).poly * SurfacePoly.monomial(ONE, 0, 1)
        assert expanded == surface_poly(d).poly
