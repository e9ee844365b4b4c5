"""Conway polynomial oracle for link diagrams.

Independent of the trivalent-web machinery: computed by the skein recursion
nabla(+) - nabla(-) = z * nabla(0) with a descending-diagram strategy, so it
can cross-check the star-quotient specialization of the main pipeline.
"""

from __future__ import annotations

from a2poly.diagram import (
    XN,
    XP,
    Dart,
    Diagram,
    ValidationError,
    VertexRecord,
    serialize,
    splice,
)
from a2poly.ring import PHI18, QuotientElem


class DepthExceeded(RuntimeError):
    """Crossing count above the configured oracle cap."""


class ZPoly:
    """Integer polynomial in z (dense tuple of ascending coefficients)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):  # trailing zeros trimmed
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("ZPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __add__(self, other: ZPoly) -> ZPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __sub__(self, other: ZPoly) -> ZPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                - (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __mul__(self, other: ZPoly) -> ZPoly:
        if not self.coeffs or not other.coeffs:
            return ZPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZPoly(out)

    def shift_z(self) -> ZPoly:
        """Multiply by z."""
        return ZPoly((0,) + self.coeffs)

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_quotient(self, z: QuotientElem) -> QuotientElem:
        ring = z.ring
        acc = QuotientElem(ring, tuple([0] * ring.degree))
        one = QuotientElem(ring, ring.one_vec())
        power = one
        for c in self.coeffs:
            if c:
                term = QuotientElem(ring, tuple(c * x for x in power.coeffs))
                acc = acc + term
            power = power * z
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "z" if i == 1 else f"z^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"ZPoly({self})"


Z = ZPoly((0, 1))
ONE_Z = ZPoly((1,))
ZERO_Z = ZPoly()


def _switch_crossing(diagram: Diagram, vi: int) -> Diagram:
    """Swap over and under strands at one crossing (sign flips)."""
    v = diagram.vertices[vi]
    a, b, c, d = v.slots
    if v.kind == XP:
        new = VertexRecord(XN, (b, c, d, a))
    else:
        new = VertexRecord(XP, (d, a, b, c))
    verts = list(diagram.vertices)
    verts[vi] = new
    return Diagram(verts, diagram.free_loops, diagram.boundary)


def _smooth_crossing(diagram: Diagram, vi: int) -> Diagram:
    """Oriented smoothing (the same for both signs of the crossing)."""
    v = diagram.vertices[vi]
    if v.kind == XP:
        joins = [((vi, 0), (vi, 3)), ((vi, 1), (vi, 2))]
    else:
        joins = [((vi, 0), (vi, 1)), ((vi, 2), (vi, 3))]
    return splice(diagram, {vi}, joins)


def _first_ascending_violation(diagram: Diagram) -> tuple[int, bool] | None:
    """Walk components from their lowest edge; report the first crossing met
    on the under-strand before its over-strand, as (vertex, is_positive)."""
    visited_edges: set[int] = set()
    first_visit: dict[int, str] = {}  # crossing -> 'over'/'under'
    labels = sorted(diagram.edge_labels())
    pos = diagram._positions()
    for start_label in labels:
        if start_label in visited_edges:
            continue
        # follow the component containing this edge, in orientation order
        lbl = start_label
        while lbl not in visited_edges:
            visited_edges.add(lbl)
            dart = pos[lbl][1]  # arriving end
            vi, si = dart
            v = diagram.vertices[vi]
            # arriving slots: 0 (under-in, both kinds), 1 (XP over-in),
            # 3 (XN over-in)
            role = "under" if si == 0 else "over"
            if vi not in first_visit:
                first_visit[vi] = role
                if role == "under":
                    return vi, v.kind == XP
            # continue through the crossing
            cont_slot = (si + 2) % 4
            lbl = abs(v.slots[cont_slot])
    return None


def conway_poly(diagram: Diagram, max_crossings: int = 14) -> ZPoly:
    """Conway polynomial of a closed link diagram by skein recursion.

    Descending leaves are trivial links: value 1 for a knot, 0 otherwise.
    Memoized on the canonical serialization; ``max_crossings`` caps the
    recursion (DepthExceeded beyond it).
    """
    if not diagram.is_closed():
        raise ValidationError("conway requires a closed diagram")
    if not diagram.is_link_diagram():
        raise ValidationError("conway requires a link diagram (no marked vertices)")
    memo: dict[str, ZPoly] = {}

    def go(d: Diagram) -> ZPoly:
        crossings = d.crossing_indices()
        if len(crossings) > max_crossings:
            raise DepthExceeded(f"{len(crossings)} crossings exceeds cap {max_crossings}")
        if not crossings:
            from a2poly.diagram import component_count

            return ONE_Z if component_count(d) == 1 else ZERO_Z
        key = serialize(d)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bad = _first_ascending_violation(d)
        if bad is None:
            from a2poly.diagram import component_count

            result = ONE_Z if component_count(d) == 1 else ZERO_Z
        else:
            vi, is_positive = bad
            switched = go(_switch_crossing(d, vi))
            smoothed = go(_smooth_crossing(d, vi))
            # nabla(D+) - nabla(D-) = z nabla(D0)
            if is_positive:
                result = switched + smoothed.shift_z()
            else:
                result = switched - smoothed.shift_z()
        memo[key] = result
        return result

    return go(diagram)


def conway_in_quotient(diagram: Diagram, max_crossings: int = 14) -> QuotientElem:
    """Conway polynomial evaluated at z = a^3 - a^-3 in Z[a]/(a^6-a^3+1)."""
    from a2poly.ring import LaurentA, quotient_reduce

    z = quotient_reduce(LaurentA({3: 1, -3: -1}), PHI18)
    return conway_poly(diagram, max_crossings).eval_quotient(z)
