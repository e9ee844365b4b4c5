"""Bracket evaluation of closed tangled trivalent graph diagrams.

Crossings are resolved into a two-term formal sum (a rectangular H-web
piece and the oriented smoothing); crossing-free webs are reduced by the
confluent local rules: circles contribute A = a^-6+1+a^6, bigons between a
source and a sink contract with factor B = a^-3+a^3, and square faces split
into the sum of their two planar reconnections.

Internally the empty diagram has value 1, so a single circle is worth A;
the public ``a2_bracket`` renormalizes so the unknot has value 1 (a single
exact division by A at the end, whose failure would signal a rule bug).
"""

from __future__ import annotations

import random

from a2poly.diagram import (
    MV,
    WN,
    WP,
    XN,
    XP,
    Dart,
    Diagram,
    ValidationError,
    VertexRecord,
    face_list,
    splice,
)
from a2poly.ring import A_CIRCLE, B_BIGON, ONE, ZERO, LaurentA


class EmptyDiagram(ValueError):
    """The empty diagram has no normalized bracket value."""


class OpenWeb(ValueError):
    """Web reduction requires a closed diagram."""


class NotACrossing(ValueError):
    pass


class InternalError(AssertionError):
    """A reduction step met a face shape that valid webs cannot produce."""


WebExpr = list[tuple[LaurentA, Diagram]]

_NEG_A = LaurentA({1: -1})
_A_M2 = LaurentA({-2: 1})
_NEG_A_INV = LaurentA({-1: -1})
_A_P2 = LaurentA({2: 1})


def resolve_crossing(diagram: Diagram, vertex: int) -> WebExpr:
    """Resolve one crossing into its two-term expansion.

    For a positive crossing (slots s1..s4 counterclockwise, s1 = under-in,
    s2 = over-in): ``-a`` times the H-piece (sink on the in-pair, source on
    the out-pair, bridged source-to-sink) plus ``a^-2`` times the oriented
    smoothing joining s1-s4 and s2-s3.  For a negative crossing the
    coefficients are ``-a^-1`` and ``a^2`` and the roles rotate with the
    over-strand.
    """
    v = diagram.vertices[vertex]
    if v.kind not in (XP, XN):
        raise NotACrossing(f"vertex {vertex} is {v.kind}")
    s1, s2, s3, s4 = v.slots
    fresh = max(diagram.edge_labels(), default=0) + 1
    if v.kind == XP:
        # in-darts s1 (under), s2 (over); out-darts s3 (under), s4 (over)
        sink = VertexRecord(WN, (s1, s2, fresh))
        source = VertexRecord(WP, (s3, s4, -fresh))
        h_term = splice(diagram, {vertex}, [], [sink, source])
        smooth = splice(diagram, {vertex}, [((vertex, 0), (vertex, 3)), ((vertex, 1), (vertex, 2))])
        return [(_NEG_A, h_term), (_A_M2, smooth)]
    # negative: in-darts s4 (over), s1 (under); out-darts s2 (over), s3 (under)
    sink = VertexRecord(WN, (s4, s1, fresh))
    source = VertexRecord(WP, (s2, s3, -fresh))
    h_term = splice(diagram, {vertex}, [], [sink, source])
    smooth = splice(diagram, {vertex}, [((vertex, 0), (vertex, 1)), ((vertex, 2), (vertex, 3))])
    return [(_NEG_A_INV, h_term), (_A_P2, smooth)]


def _web_faces(web: Diagram) -> list[list[Dart]]:
    return face_list(web)


def _external_dart(web: Diagram, vi: int, used: set[int]) -> Dart:
    slots = web.vertices[vi].slots
    for si in range(len(slots)):
        if si not in used:
            return (vi, si)
    raise InternalError("trivalent vertex with no external dart")


def _reduce_once(web: Diagram, rng: random.Random | None) -> tuple[LaurentA, list[Diagram]] | None:
    """Apply one bigon or square reduction; None when only circles remain."""
    candidates: list[tuple[str, list[Dart]]] = []
    for face in _web_faces(web):
        if len(face) == 2:
            v1, v2 = face[0][0], face[1][0]
            if v1 != v2:
                candidates.append(("bigon", face))
        elif len(face) == 4:
            vis = [d[0] for d in face]
            if len(set(vis)) == 4:
                candidates.append(("square", face))
    if not candidates:
        if any(True for _ in web.vertices):
            raise InternalError("closed web with vertices but no small face")
        return None
    kind, face = candidates[0] if rng is None else rng.choice(candidates)

    if kind == "bigon":
        # face darts (v, i), (u, j): the two face edges occupy slots
        # {i, alpha(u,j).slot} at v; contract, welding the external darts.
        (v, i), (u, j) = face
        v_used = {i, web.other_end((u, j))[1]}
        u_used = {j, web.other_end((v, i))[1]}
        ext_v = _external_dart(web, v, v_used)
        ext_u = _external_dart(web, u, u_used)
        out = splice(web, {v, u}, [(ext_v, ext_u)])
        return B_BIGON, [out]

    # square: corners v1..v4 in face order; sum of the two reconnections
    verts = [d[0] for d in face]
    used: dict[int, set[int]] = {v: set() for v in verts}
    for d in face:
        used[d[0]].add(d[1])
        prev = web.other_end(d)
        used[prev[0]].add(prev[1])
    ext = [_external_dart(web, v, used[v]) for v in verts]
    kinds = [web.vertices[v].kind for v in verts]
    if kinds[0] == kinds[1] or kinds[1] == kinds[2]:
        raise InternalError("square face without alternating sources and sinks")
    term1 = splice(web, set(verts), [(ext[0], ext[1]), (ext[2], ext[3])])
    term2 = splice(web, set(verts), [(ext[1], ext[2]), (ext[3], ext[0])])
    return ONE, [term1, term2]


def reduce_web(web: Diagram, rng: random.Random | None = None) -> LaurentA:
    """Scalar of a closed crossing-free web, empty-diagram normalization.

    Every circle contributes a factor A; the reduction order may be
    randomized via ``rng`` (the result is order-independent).
    """
    if not web.is_closed():
        raise OpenWeb("web has boundary darts")
    if not web.is_web():
        raise OpenWeb("web has non-trivalent vertices")
    total = ZERO
    stack: list[tuple[LaurentA, Diagram]] = [(ONE, web)]
    while stack:
        coeff, cur = stack.pop()
        step = _reduce_once(cur, rng)
        if step is None:
            total = total + coeff * A_CIRCLE ** cur.free_loops
            continue
        factor, parts = step
        for part in parts:
            stack.append((coeff * factor, part))
    return total


def _eager_simplify(coeff: LaurentA, diagram: Diagram) -> tuple[LaurentA, Diagram]:
    """Contract web-only bigons and strip circles while crossings remain.

    Only faces whose vertices are all trivalent are touched, which commutes
    with later crossing resolutions; squares are left for final reduction
    (splitting early would multiply terms, not shrink them).
    """
    while True:
        if diagram.free_loops:
            coeff = coeff * A_CIRCLE ** diagram.free_loops
            diagram = Diagram(diagram.vertices, 0, diagram.boundary)
        done = True
        for face in face_list(diagram):
            if len(face) != 2:
                continue
            (v, i), (u, j) = face
            if v == u:
                continue
            if diagram.vertices[v].kind not in (WP, WN):
                continue
            if diagram.vertices[u].kind not in (WP, WN):
                continue
            v_used = {i, diagram.other_end((u, j))[1]}
            u_used = {j, diagram.other_end((v, i))[1]}
            ext_v = _external_dart(diagram, v, v_used)
            ext_u = _external_dart(diagram, u, u_used)
            diagram = splice(diagram, {v, u}, [(ext_v, ext_u)])
            coeff = coeff * B_BIGON
            done = False
            break
        if done:
            return coeff, diagram


def bracket_raw(diagram: Diagram, rng: random.Random | None = None) -> LaurentA:
    """Bracket with the empty-diagram-is-1 normalization (internal)."""
    if not diagram.is_closed():
        raise OpenWeb("bracket requires a closed diagram")
    for v in diagram.vertices:
        if v.kind == MV:
            raise ValidationError("bracket is undefined for marked vertices")
    total = ZERO
    stack: list[tuple[LaurentA, Diagram]] = [(ONE, diagram)]
    while stack:
        coeff, cur = stack.pop()
        crossings = cur.crossing_indices()
        if not crossings:
            total = total + coeff * reduce_web(cur, rng)
            continue
        for sub_coeff, sub in resolve_crossing(cur, crossings[0]):
            stack.append(_eager_simplify(coeff * sub_coeff, sub))
    return total


def a2_bracket(diagram: Diagram, rng: random.Random | None = None) -> LaurentA:
    """Bracket of a closed nonempty diagram, normalized so the unknot is 1."""
    if not diagram.vertices and not diagram.free_loops:
        raise EmptyDiagram("the empty diagram has no normalized value")
    raw = bracket_raw(diagram, rng)
    try:
        return raw.exact_div(A_CIRCLE)
    except Exception as exc:  # exact by construction for nonempty diagrams
        raise InternalError(f"bracket not divisible by the circle value: {raw}") from exc
