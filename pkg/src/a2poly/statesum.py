"""State-sum invariants of marked graph diagrams and their specializations.

The double bracket expands every marked vertex into its two smoothings,
weighting by x (slots 1-2 / 3-4 joined) or y (slots 2-3 / 4-1 joined), and
evaluates each resulting link diagram with the trivalent-web bracket.  The
writhe-normalized polynomial is a^(8w) times that sum and is invariant
under the moves that preserve the presented surface-link.
"""

from __future__ import annotations

from dataclasses import dataclass

from a2poly.bracket import a2_bracket
from a2poly.conway import conway_poly, conway_in_quotient
from a2poly.diagram import (
    INF,
    MV,
    ZERO,
    Diagram,
    ValidationError,
    component_count,
    face_list,
    resolve_state,
    writhe,
)
from a2poly.ring import (
    OMEGA18,
    PHI18,
    LaurentA,
    QuotientElem,
    QuotientPoly,
    QuotientRing,
    SurfacePoly,
    quotient_reduce,
)

State = dict[int, str]


def enumerate_states(diagram: Diagram) -> list[State]:
    """All assignments, in binary-counter order over sorted marked vertices.

    Bit j of the counter addresses the j-th marked vertex; a clear bit means
    the T-infinity smoothing.
    """
    marked = diagram.marked_indices()
    out = []
    for code in range(1 << len(marked)):
        out.append(
            {vi: (ZERO if (code >> j) & 1 else INF) for j, vi in enumerate(marked)}
        )
    return out


@dataclass(frozen=True)
class StateRow:
    state: tuple[str, ...]
    x_degree: int
    y_degree: int
    bracket: LaurentA


@dataclass(frozen=True)
class InvariantReport:
    poly: SurfacePoly
    writhe: int
    marked_count: int
    per_state: tuple[StateRow, ...]


def double_bracket(diagram: Diagram) -> SurfacePoly:
    """Sum over all smoothing states of x^(#inf) y^(#zero) times the bracket."""
    return _state_sum(diagram).poly


def _state_sum(diagram: Diagram) -> InvariantReport:
    if not diagram.is_closed():
        raise ValidationError("state sum requires a closed diagram")
    marked = diagram.marked_indices()
    rows = []
    total = SurfacePoly()
    for state in enumerate_states(diagram):
        n_inf = sum(1 for v in state.values() if v == INF)
        n_zero = len(marked) - n_inf
        value = a2_bracket(resolve_state(diagram, state))
        rows.append(
            StateRow(tuple(state[vi] for vi in marked), n_inf, n_zero, value)
        )
        total = total + SurfacePoly.monomial(value, n_inf, n_zero)
    return InvariantReport(total, writhe(diagram), len(marked), tuple(rows))


def surface_poly(diagram: Diagram) -> InvariantReport:
    """The writhe-normalized invariant a^(8w) [[D]] with its per-state table."""
    base = _state_sum(diagram)
    w = base.writhe
    normalized = base.poly.scale(LaurentA({8 * w: 1}))
    return InvariantReport(normalized, w, base.marked_count, base.per_state)


def specialize(diagram: Diagram, ring: QuotientRing) -> QuotientPoly:
    """The invariant reduced coefficient-wise into a quotient ring."""
    report = surface_poly(diagram)
    return quotient_reduce(report.poly, ring)


# ---------------------------------------------------------------------------
# Ribbon structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RibbonReport:
    is_ribbon: bool
    pairs: tuple[tuple[int, int], ...]
    n: int
    sigma0_is_knot: bool
    sigma0_resolution: Diagram | None
    coefficient: QuotientElem | None
    coefficient_complex: complex | None
    specialization: QuotientPoly
    is_monomial: bool
    admissibility: dict


def _merging_type(diagram: Diagram, vertex: int, bigon_slots: set[int]) -> str:
    """Which smoothing of a marked vertex joins its two bigon-side darts.

    The T-infinity smoothing joins slot pairs {0,1} and {2,3}; T-zero joins
    {1,2} and {3,0}.  The bigon's two edges occupy adjacent slots.
    """
    if bigon_slots in ({0, 1}, {2, 3}):
        return INF
    if bigon_slots in ({1, 2}, {3, 0}):
        return ZERO
    raise ValidationError("bigon slots not adjacent at a marked vertex")


def _marked_bigons(diagram: Diagram) -> list[tuple[int, int, str, str]]:
    """Bigon faces joining two marked vertices: (v, u, merge_v, merge_u)."""
    out = []
    seen = set()
    for face in face_list(diagram):
        if len(face) != 2:
            continue
        (v, i), (u, j) = face
        if v == u or v == -1 or u == -1:
            continue
        if diagram.vertices[v].kind != MV or diagram.vertices[u].kind != MV:
            continue
        v_slots = {i, diagram.other_end((u, j))[1]}
        u_slots = {j, diagram.other_end((v, i))[1]}
        key = (min(v, u), max(v, u), frozenset(v_slots), frozenset(u_slots))
        if key in seen:
            continue
        seen.add(key)
        out.append((v, u, _merging_type(diagram, v, v_slots), _merging_type(diagram, u, u_slots)))
    return out


def _find_pairing(
    marked: list[int], candidates: list[tuple[int, int]]
) -> list[tuple[int, int]] | None:
    """Perfect matching of the marked vertices along ribbon bigons."""
    if not marked:
        return []
    first = marked[0]
    for v, u in candidates:
        if first not in (v, u):
            continue
        other = u if v == first else v
        if other not in marked:
            continue
        rest = [m for m in marked if m not in (v, u)]
        sub = _find_pairing(rest, [c for c in candidates if first not in c and other not in c])
        if sub is not None:
            return [(first, other)] + sub
    return None


def ribbon_analysis(diagram: Diagram, conway_cap: int = 14) -> RibbonReport:
    """Detect ribbon pairs and, when the pairing exists, the monomial data.

    A ribbon pair is a bigon whose two marked vertices merge the bigon by
    opposite smoothing types.  When every marked vertex belongs to exactly
    one chosen pair, the middle state assigning each vertex its non-merging
    smoothing is the candidate knot cross-section.
    """
    marked = diagram.marked_indices()
    ribbon_bigons = [
        (v, u) for (v, u, mv_, mu_) in _marked_bigons(diagram) if mv_ != mu_
    ]
    merge_of: dict[tuple[int, int], tuple[str, str]] = {}
    for v, u, mv_, mu_ in _marked_bigons(diagram):
        if mv_ != mu_:
            merge_of[(v, u)] = (mv_, mu_)
    pairing = _find_pairing(list(marked), ribbon_bigons)

    spec = specialize(diagram, PHI18)
    admissibility = _admissibility_report(diagram, conway_cap)

    if pairing is None:
        return RibbonReport(
            is_ribbon=False,
            pairs=(),
            n=0,
            sigma0_is_knot=False,
            sigma0_resolution=None,
            coefficient=None,
            coefficient_complex=None,
            specialization=spec,
            is_monomial=False,
            admissibility=admissibility,
        )

    n = len(pairing)
    state: State = {}
    for v, u in pairing:
        mv_, mu_ = merge_of[(v, u)]
        # non-merging smoothing at each vertex keeps the bigon on the strand
        state[v] = ZERO if mv_ == INF else INF
        state[u] = ZERO if mu_ == INF else INF
    sigma0 = resolve_state(diagram, state) if marked else diagram
    sigma0_is_knot = component_count(sigma0) == 1 if marked else True

    coeff = None
    coeff_c = None
    is_monomial = len(spec.terms) <= 1 and all(k == (n, n) for k in spec.terms)
    if is_monomial:
        coeff = spec.coeff(n, n)
        coeff_c = coeff.eval_complex(OMEGA18)
    return RibbonReport(
        is_ribbon=True,
        pairs=tuple(pairing),
        n=n,
        sigma0_is_knot=sigma0_is_knot,
        sigma0_resolution=sigma0,
        coefficient=coeff,
        coefficient_complex=coeff_c,
        specialization=spec,
        is_monomial=is_monomial,
        admissibility=admissibility,
    )


def _admissibility_report(diagram: Diagram, conway_cap: int) -> dict:
    """Necessary-condition report; triviality of resolutions is not certified."""
    from a2poly.diagram import negative_resolution, positive_resolution

    out: dict = {"verdict": "unknown"}
    try:
        pos = positive_resolution(diagram)
        neg = negative_resolution(diagram)
        out["positive_components"] = component_count(pos)
        out["negative_components"] = component_count(neg)
        nab_pos = conway_poly(pos, conway_cap)
        nab_neg = conway_poly(neg, conway_cap)
        trivialish = _conway_trivial(nab_pos, out["positive_components"]) and _conway_trivial(
            nab_neg, out["negative_components"]
        )
        out["conway_necessary_condition"] = trivialish
        out["verdict"] = "likely" if trivialish else "not admissible"
    except Exception as exc:  # oracle cap exceeded etc.
        out["error"] = str(exc)
    return out


def _conway_trivial(poly, components: int) -> bool:
    if components == 1:
        return poly.is_one()
    return poly.is_zero()


# ---------------------------------------------------------------------------
# Star-quotient evaluation at the primitive 18th root of unity
# ---------------------------------------------------------------------------


def p9_star(diagram: Diagram) -> dict[tuple[int, int], complex]:
    """Complex evaluation of the star-quotient invariant at exp(2*pi*i/18).

    Computed exactly in Z[a]/(a^6-a^3+1) first and mapped to floats only at
    the boundary (stated tolerance 1e-9).
    """
    spec = specialize(diagram, PHI18)
    return {k: v.eval_complex(OMEGA18) for k, v in spec.terms.items()}


def p9_star_oracle(diagram: Diagram, conway_cap: int = 14) -> dict[tuple[int, int], complex]:
    """Independent pipeline: per-state Conway values at z = i*sqrt(3)."""
    z = complex(0.0, 3.0**0.5)
    out: dict[tuple[int, int], complex] = {}
    marked = diagram.marked_indices()
    for state in enumerate_states(diagram):
        n_inf = sum(1 for v in state.values() if v == INF)
        key = (n_inf, len(marked) - n_inf)
        val = conway_poly(resolve_state(diagram, state), conway_cap).eval_complex(z)
        out[key] = out.get(key, 0j) + val
    return {k: v for k, v in out.items() if abs(v) > 1e-12}


def star_quotient_oracle(diagram: Diagram, conway_cap: int = 14) -> QuotientPoly:
    """Exact star-quotient value via per-state Conway polynomials."""
    terms: dict[tuple[int, int], QuotientElem] = {}
    marked = diagram.marked_indices()
    zero = QuotientElem(PHI18, tuple([0] * PHI18.degree))
    for state in enumerate_states(diagram):
        n_inf = sum(1 for v in state.values() if v == INF)
        key = (n_inf, len(marked) - n_inf)
        val = conway_in_quotient(resolve_state(diagram, state), conway_cap)
        terms[key] = terms.get(key, zero) + val
    return QuotientPoly(PHI18, terms)
