"""Combinatorial-map representation of oriented marked graph diagrams.

A diagram is a list of vertices, each with a counterclockwise cyclic list of
signed edge labels (darts).  ``+e`` means edge e arrives at that slot, ``-e``
that it departs.  Vertex kinds:

* ``X+`` / ``X-`` -- crossings.  Slot 1 is the incoming under-strand dart;
  slots run counterclockwise.  At ``X+`` the over-strand enters at slot 2,
  at ``X-`` it enters at slot 4.  The under-strand runs slot 1 -> slot 3,
  the over-strand slot 2 -> slot 4 (``X+``) or slot 4 -> slot 2 (``X-``).
* ``M`` -- marked vertex.  Orientations alternate in/out/in/out; the marker
  pairs slots (1,2) and (3,4).  The T-infinity smoothing joins slots 1-2
  and 3-4, the T-zero smoothing joins 2-3 and 4-1.
* ``W+`` / ``W-`` -- trivalent source (all departing) / sink (all arriving).

Closed curves with no vertices are tracked by a count (``free_loops``).
Tangles additionally carry a ``BOUNDARY`` record: the boundary darts in
counterclockwise order around the disk.

Diagrams are immutable after construction; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

XP = "X+"
XN = "X-"
MV = "M"
WP = "W+"
WN = "W-"

SLOT_COUNT = {XP: 4, XN: 4, MV: 4, WP: 3, WN: 3}

INF = "inf"
ZERO = "zero"


class MGDSyntaxError(ValueError):
    """Malformed MGD text."""


class ValidationError(ValueError):
    """A diagram invariant is violated; the message names it."""


class CrossingsPresent(ValueError):
    """Raised by face computation when the diagram is not crossing-free."""


@dataclass(frozen=True)
class VertexRecord:
    """One vertex: kind plus its counterclockwise signed darts."""

    kind: str
    slots: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in SLOT_COUNT:
            raise MGDSyntaxError(f"unknown vertex kind {self.kind!r}")
        if len(self.slots) != SLOT_COUNT[self.kind]:
            raise MGDSyntaxError(
                f"{self.kind} needs {SLOT_COUNT[self.kind]} slots, got {len(self.slots)}"
            )


Dart = tuple[int, int]  # (vertex index, slot index); vertex -1 = boundary


class Diagram:
    """An oriented marked graph / tangled trivalent graph diagram."""

    __slots__ = ("vertices", "free_loops", "boundary", "_pos")

    def __init__(
        self,
        vertices: Iterable[VertexRecord] = (),
        free_loops: int = 0,
        boundary: Sequence[int] | None = None,
    ):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "free_loops", int(free_loops))
        object.__setattr__(
            self, "boundary", tuple(boundary) if boundary is not None else None
        )
        object.__setattr__(self, "_pos", None)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    # -- basic views ---------------------------------------------------------

    def is_tangle(self) -> bool:
        return self.boundary is not None

    def all_slots(self) -> Iterator[tuple[Dart, int]]:
        """Yield ((vertex, slot index), signed label) over vertices then boundary."""
        for vi, v in enumerate(self.vertices):
            for si, lbl in enumerate(v.slots):
                yield (vi, si), lbl
        if self.boundary is not None:
            for si, lbl in enumerate(self.boundary):
                yield (-1, si), lbl

    def edge_labels(self) -> set[int]:
        return {abs(lbl) for _, lbl in self.all_slots()}

    def _positions(self) -> dict[int, dict[int, Dart]]:
        """label -> {+1: dart where it arrives, -1: dart where it departs}."""
        pos = self._pos
        if pos is None:
            pos = {}
            for dart, lbl in self.all_slots():
                entry = pos.setdefault(abs(lbl), {})
                sign = 1 if lbl > 0 else -1
                if sign in entry:
                    raise ValidationError(
                        f"pairing: label {abs(lbl)} has two {'+' if sign > 0 else '-'} darts"
                    )
                entry[sign] = dart
            object.__setattr__(self, "_pos", pos)
        return pos

    def dart_label(self, dart: Dart) -> int:
        vi, si = dart
        if vi == -1:
            return self.boundary[si]
        return self.vertices[vi].slots[si]

    def other_end(self, dart: Dart) -> Dart:
        """The dart at the opposite end of this dart's edge."""
        lbl = self.dart_label(dart)
        entry = self._positions()[abs(lbl)]
        return entry[-1] if lbl > 0 else entry[1]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.vertices:
            out[v.kind] = out.get(v.kind, 0) + 1
        return out

    def crossing_indices(self) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.kind in (XP, XN)]

    def marked_indices(self) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.kind == MV]

    def is_closed(self) -> bool:
        return self.boundary is None

    def is_link_diagram(self) -> bool:
        return all(v.kind in (XP, XN) for v in self.vertices)

    def is_web(self) -> bool:
        return all(v.kind in (WP, WN) for v in self.vertices)

    # -- rewriting helper ----------------------------------------------------

    def relabeled(self) -> Diagram:
        """Canonically relabel edges by first appearance (scan order)."""
        mapping: dict[int, int] = {}
        nxt = 1
        for _, lbl in self.all_slots():
            if abs(lbl) not in mapping:
                mapping[abs(lbl)] = nxt
                nxt += 1
        def rl(lbl: int) -> int:
            return mapping[abs(lbl)] * (1 if lbl > 0 else -1)
        verts = [VertexRecord(v.kind, tuple(rl(s) for s in v.slots)) for v in self.vertices]
        bnd = tuple(rl(s) for s in self.boundary) if self.boundary is not None else None
        return Diagram(verts, self.free_loops, bnd)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Diagram)
            and self.vertices == other.vertices
            and self.free_loops == other.free_loops
            and self.boundary == other.boundary
        )

    def __hash__(self):
        return hash((self.vertices, self.free_loops, self.boundary))

    def __repr__(self):
        kind = "Tangle" if self.is_tangle() else "Diagram"
        return f"<{kind} {len(self.vertices)}v {self.free_loops}o>"


# ---------------------------------------------------------------------------
# MGD text format
# ---------------------------------------------------------------------------


def parse_mgd(text: str) -> Diagram:
    """Parse MGD text into a validated Diagram (or tangle)."""
    vertices: list[VertexRecord] = []
    free_loops = 0
    boundary: tuple[int, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, args = parts[0], parts[1:]
        try:
            if head == "O":
                if len(args) != 1:
                    raise MGDSyntaxError("O takes one count")
                free_loops += int(args[0])
            elif head in SLOT_COUNT:
                slots = tuple(_parse_signed(a) for a in args)
                vertices.append(VertexRecord(head, slots))
            elif head == "BOUNDARY":
                if boundary is not None:
                    raise MGDSyntaxError("duplicate BOUNDARY record")
                boundary = tuple(_parse_signed(a) for a in args)
            else:
                raise MGDSyntaxError(f"unknown record {head!r}")
        except MGDSyntaxError as exc:
            raise MGDSyntaxError(f"line {lineno}: {exc}") from None
        except ValueError as exc:
            raise MGDSyntaxError(f"line {lineno}: {exc}") from None
    diagram = Diagram(vertices, free_loops, boundary)
    validate(diagram)
    return diagram


def _parse_signed(token: str) -> int:
    if token[0] not in "+-" or not token[1:].isdigit() or int(token[1:]) == 0:
        raise MGDSyntaxError(f"bad dart token {token!r}")
    val = int(token[1:])
    return val if token[0] == "+" else -val


def serialize(diagram: Diagram) -> str:
    """Canonical MGD text; edges relabeled by first appearance."""
    d = diagram.relabeled()
    lines: list[str] = []
    if d.free_loops:
        lines.append(f"O {d.free_loops}")
    for v in d.vertices:
        darts = " ".join(f"+{s}" if s > 0 else f"-{-s}" for s in v.slots)
        lines.append(f"{v.kind} {darts}")
    if d.boundary is not None:
        darts = " ".join(f"+{s}" if s > 0 else f"-{-s}" for s in d.boundary)
        lines.append(f"BOUNDARY {darts}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(diagram: Diagram) -> None:
    """Check every structural invariant; raise ValidationError naming the breach."""
    seen: dict[int, dict[int, Dart]] = {}
    for dart, lbl in diagram.all_slots():
        if lbl == 0:
            raise ValidationError("pairing: zero label")
        entry = seen.setdefault(abs(lbl), {})
        sign = 1 if lbl > 0 else -1
        if sign in entry:
            raise ValidationError(
                f"pairing: label {abs(lbl)} appears twice with sign {'+' if sign > 0 else '-'}"
            )
        entry[sign] = dart
    for lbl, entry in seen.items():
        if len(entry) != 2:
            raise ValidationError(f"pairing: label {lbl} lacks a {'-' if 1 in entry else '+'} dart")

    for vi, v in enumerate(diagram.vertices):
        signs = [1 if s > 0 else -1 for s in v.slots]
        if v.kind in (XP, XN):
            expect = [1, 1, -1, -1] if v.kind == XP else [1, -1, -1, 1]
            if signs != expect:
                raise ValidationError(
                    f"orientation: crossing {vi} slot signs {signs} != {expect} for {v.kind}"
                )
        elif v.kind == MV:
            if signs not in ([1, -1, 1, -1], [-1, 1, -1, 1]):
                raise ValidationError(
                    f"orientation: marked vertex {vi} darts do not alternate in/out"
                )
        elif v.kind == WP:
            if signs != [-1, -1, -1]:
                raise ValidationError(f"orientation: source {vi} has an arriving dart")
        elif v.kind == WN:
            if signs != [1, 1, 1]:
                raise ValidationError(f"orientation: sink {vi} has a departing dart")

    _check_euler(diagram)


def _check_euler(diagram: Diagram) -> None:
    """Sphere Euler relation V - E + F = 2 per connected component (planarity)."""
    comps = _graph_components(diagram)
    faces_by_dart = _face_orbits(diagram)
    for comp in comps:
        verts = len(comp)
        edges = 0
        darts_in_comp = set()
        for vi in comp:
            if vi == -1:
                slots = len(diagram.boundary or ())
            else:
                slots = len(diagram.vertices[vi].slots)
            for si in range(slots):
                darts_in_comp.add((vi, si))
        edges = len(darts_in_comp) // 2
        face_ids = {faces_by_dart[d] for d in darts_in_comp}
        if verts - edges + len(face_ids) != 2:
            raise ValidationError(
                f"planarity: component {sorted(comp)} violates V-E+F=2 "
                f"({verts}-{edges}+{len(face_ids)})"
            )


def _graph_components(diagram: Diagram) -> list[set[int]]:
    """Connected components over vertex indices (boundary counts as vertex -1)."""
    nodes = set(range(len(diagram.vertices)))
    if diagram.boundary is not None and diagram.boundary:
        nodes.add(-1)
    adj: dict[int, set[int]] = {n: set() for n in nodes}
    for lbl, entry in diagram._positions().items():
        (v1, _), (v2, _) = entry[1], entry[-1]
        adj[v1].add(v2)
        adj[v2].add(v1)
    comps = []
    remaining = set(nodes)
    while remaining:
        start = remaining.pop()
        comp = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for m in adj[n]:
                if m not in comp:
                    comp.add(m)
                    stack.append(m)
        remaining -= comp
        comps.append(comp)
    return comps


def _face_orbits(diagram: Diagram) -> dict[Dart, int]:
    """Assign a face id to every dart via orbits of (edge-flip then rotate).

    The boundary (if present) is treated as one extra vertex whose rotation
    is the reverse of the boundary order, which caps the disk into a sphere.
    """
    def rotate(dart: Dart) -> Dart:
        vi, si = dart
        if vi == -1:
            n = len(diagram.boundary)
            return (-1, (si - 1) % n)  # rim rotation is reversed
        n = len(diagram.vertices[vi].slots)
        return (vi, (si + 1) % n)

    face_of: dict[Dart, int] = {}
    fid = 0
    all_darts = [dart for dart, _ in diagram.all_slots()]
    for start in all_darts:
        if start in face_of:
            continue
        d = start
        while d not in face_of:
            face_of[d] = fid
            d = rotate(diagram.other_end(d))
        fid += 1
    return face_of


def face_list(diagram: Diagram) -> list[list[Dart]]:
    """All faces as dart cycles (any vertex kinds; internal utility)."""
    def rotate(dart: Dart) -> Dart:
        vi, si = dart
        if vi == -1:
            n = len(diagram.boundary)
            return (-1, (si - 1) % n)
        n = len(diagram.vertices[vi].slots)
        return (vi, (si + 1) % n)

    seen: set[Dart] = set()
    faces: list[list[Dart]] = []
    for start, _ in diagram.all_slots():
        if start in seen:
            continue
        cycle = []
        d = start
        while d not in seen:
            seen.add(d)
            cycle.append(d)
            d = rotate(diagram.other_end(d))
        faces.append(cycle)
    return faces


def faces(diagram: Diagram) -> list[list[Dart]]:
    """Faces of a crossing-free diagram, from the rotation system."""
    if any(v.kind in (XP, XN) for v in diagram.vertices):
        raise CrossingsPresent("faces are defined for crossing-free diagrams")
    return face_list(diagram)


# ---------------------------------------------------------------------------
# Writhe, components, resolutions
# ---------------------------------------------------------------------------


def writhe(diagram: Diagram) -> int:
    """Signed crossing count; marked and trivalent vertices contribute 0."""
    w = 0
    for v in diagram.vertices:
        if v.kind == XP:
            w += 1
        elif v.kind == XN:
            w -= 1
    return w


def strand_continuation(si: int) -> int:
    """Slot where the strand at slot si continues through a crossing."""
    return (si + 2) % 4


def component_count(diagram: Diagram) -> int:
    """Number of closed curves of a link diagram (crossings only)."""
    if not diagram.is_link_diagram():
        raise ValidationError("component count requires a link diagram")
    if not diagram.is_closed():
        raise ValidationError("component count requires a closed diagram")
    seen: set[Dart] = set()
    count = diagram.free_loops
    for start, _ in diagram.all_slots():
        if start in seen:
            continue
        count += 1
        d = start
        while d not in seen:
            seen.add(d)
            vi, si = d
            cont = (vi, strand_continuation(si))
            seen.add(cont)
            d = diagram.other_end(cont)
    return count


def splice(
    diagram: Diagram,
    remove: set[int],
    joins: Iterable[tuple[Dart, Dart]],
    new_vertices: Iterable[VertexRecord] = (),
    extra_loops: int = 0,
) -> Diagram:
    """Remove vertices, weld their dangling edge-ends pairwise, add vertices.

    ``joins`` pairs darts of removed vertices; each join welds the two
    incident edges into one strand (every join pairs an arriving with a
    departing end, so orientations stay coherent).  Weld chains that close
    up entirely among removed vertices become free loops.  ``new_vertices``
    may reference signed labels of removed slots -- the new vertex takes
    over that edge end -- plus fresh labels shared among themselves.
    """
    new_list = list(new_vertices)
    base = len(diagram.vertices)
    existing = diagram.edge_labels()

    # Signed end -> dart holding it, for original structure.
    end_dart: dict[int, Dart] = {}
    for dart, lbl in diagram.all_slots():
        end_dart[lbl] = dart

    # Ends adopted by new vertices (must come from removed darts).
    taken_over: dict[int, Dart] = {}
    for nvi, v in enumerate(new_list):
        for nsi, lbl in enumerate(v.slots):
            if abs(lbl) in existing:
                old = end_dart[lbl]
                if old[0] == -1 or old[0] not in remove:
                    raise ValidationError("splice: new vertex adopts a live edge end")
                taken_over[lbl] = (base + nvi, nsi)

    weld_partner: dict[Dart, Dart] = {}
    for a, b in joins:
        if a[0] not in remove or b[0] not in remove:
            raise ValidationError("splice: joins must pair darts of removed vertices")
        weld_partner[a] = b
        weld_partner[b] = a

    def slot_label(dart: Dart) -> int:
        vi, si = dart
        if vi == -1:
            return diagram.boundary[si]
        if vi >= base:
            return new_list[vi - base].slots[si]
        return diagram.vertices[vi].slots[si]

    def is_current(dart: Dart) -> bool:
        vi, _ = dart
        if vi >= base:
            return True
        return vi not in remove

    def current_darts() -> Iterator[Dart]:
        for vi, v in enumerate(diagram.vertices):
            if vi not in remove:
                for si in range(len(v.slots)):
                    yield (vi, si)
        if diagram.boundary is not None and -1 not in remove:
            for si in range(len(diagram.boundary)):
                yield (-1, si)
        for nvi, v in enumerate(new_list):
            for nsi in range(len(v.slots)):
                yield (base + nvi, nsi)

    def holder(end: int) -> Dart:
        """Current dart holding signed end (new vertices shadow removed darts)."""
        if end in taken_over:
            return taken_over[end]
        dart = end_dart.get(end)
        if dart is None:
            # fresh label introduced by new vertices only
            for nvi, v in enumerate(new_list):
                for nsi, lbl in enumerate(v.slots):
                    if lbl == end:
                        return (base + nvi, nsi)
            raise ValidationError(f"splice: unmatched end {end}")
        return dart

    # Trace each strand from its departing current end to its arriving one.
    used_weld_darts: set[Dart] = set()
    strand_ends: list[tuple[Dart, Dart]] = []
    for dart in current_darts():
        lbl = slot_label(dart)
        if lbl > 0:
            continue  # strands start at departing ends
        cur = -lbl  # arriving end we are heading toward
        while True:
            target = holder(cur)
            if is_current(target):
                break
            partner = weld_partner.get(target)
            if partner is None:
                raise ValidationError("splice: removed dart left unwelded")
            used_weld_darts.add(target)
            used_weld_darts.add(partner)
            nxt = slot_label(partner)
            if nxt > 0:
                raise ValidationError("splice: weld joins two arriving ends")
            cur = -nxt
        strand_ends.append((dart, target))

    # Weld cycles untouched by any strand close up into free loops.
    loops = extra_loops + diagram.free_loops
    visited: set[Dart] = set()
    for start in weld_partner:
        if start in visited or start in used_weld_darts:
            continue
        loops += 1
        d = start
        while d not in visited:
            visited.add(d)
            p = weld_partner[d]
            visited.add(p)
            d = end_dart[-slot_label(p)]

    # Rebuild with one label per strand.
    new_label: dict[Dart, int] = {}
    for sid, (dep, arr) in enumerate(strand_ends, start=1):
        new_label[dep] = -sid
        new_label[arr] = sid

    def rebuilt(vi: int, v: VertexRecord) -> VertexRecord:
        return VertexRecord(v.kind, tuple(new_label[(vi, si)] for si in range(len(v.slots))))

    final = [rebuilt(vi, v) for vi, v in enumerate(diagram.vertices) if vi not in remove]
    final += [rebuilt(base + nvi, v) for nvi, v in enumerate(new_list)]
    bnd = None
    if diagram.boundary is not None and -1 not in remove:
        bnd = tuple(new_label[(-1, si)] for si in range(len(diagram.boundary)))
    return Diagram(final, loops, bnd)


def resolve_state(diagram: Diagram, state: dict[int, str]) -> Diagram:
    """Replace every marked vertex by its two smoothing arcs per the state.

    ``state`` maps marked-vertex index to INF (join slots 1-2 and 3-4) or
    ZERO (join slots 2-3 and 4-1).  The all-INF state is the positive
    resolution, the all-ZERO state the negative one.
    """
    marked = diagram.marked_indices()
    if set(state) != set(marked):
        raise ValidationError("state must assign exactly the marked vertices")
    joins: list[tuple[Dart, Dart]] = []
    for vi in marked:
        if state[vi] == INF:
            joins.append(((vi, 0), (vi, 1)))
            joins.append(((vi, 2), (vi, 3)))
        elif state[vi] == ZERO:
            joins.append(((vi, 1), (vi, 2)))
            joins.append(((vi, 3), (vi, 0)))
        else:
            raise ValidationError(f"bad state value {state[vi]!r}")
    return splice(diagram, set(marked), joins)


def positive_resolution(diagram: Diagram) -> Diagram:
    return resolve_state(diagram, {vi: INF for vi in diagram.marked_indices()})


def negative_resolution(diagram: Diagram) -> Diagram:
    return resolve_state(diagram, {vi: ZERO for vi in diagram.marked_indices()})


def morse_crossing_record(
    bl: int, br: int, tl: int, tr: int, up_left: bool, up_right: bool, under_left: bool
) -> VertexRecord:
    """Crossing record from a Morse-style local picture.

    The four corner edges are given as signed-label *magnitudes* with
    their incidence decided here: ``up_left`` means the strand touching the
    bottom-left corner flows upward (into the crossing).  That strand exits
    at the top-right; the other runs bottom-right to top-left.
    ``under_left`` selects which of the two is the under-strand.
    """
    sign_bl = bl if up_left else -bl
    sign_tr = -tr if up_left else tr
    sign_br = br if up_right else -br
    sign_tl = -tl if up_right else tl
    corners_ccw = [("BL", sign_bl), ("BR", sign_br), ("TR", sign_tr), ("TL", sign_tl)]
    if under_left:
        under_in = "BL" if up_left else "TR"
        over_in = "BR" if up_right else "TL"
    else:
        under_in = "BR" if up_right else "TL"
        over_in = "BL" if up_left else "TR"
    start = next(i for i, (name, _) in enumerate(corners_ccw) if name == under_in)
    listing = corners_ccw[start:] + corners_ccw[:start]
    over_pos = next(i for i, (name, _) in enumerate(listing) if name == over_in)
    kind = XP if over_pos == 1 else XN
    return VertexRecord(kind, tuple(s for _, s in listing))


def reverse_orientation(diagram: Diagram) -> Diagram:
    """Reverse every strand.  Crossing signs are preserved; sources and
    sinks swap; marker data is unaffected."""
    verts = []
    for v in diagram.vertices:
        neg = tuple(-s for s in v.slots)
        if v.kind in (XP, XN):
            # relist so slot 1 is the new incoming under-dart (old slot 3)
            verts.append(VertexRecord(v.kind, neg[2:] + neg[:2]))
        elif v.kind == MV:
            verts.append(VertexRecord(MV, neg))
        elif v.kind == WP:
            verts.append(VertexRecord(WN, neg))
        else:
            verts.append(VertexRecord(WP, neg))
    bnd = tuple(-s for s in diagram.boundary) if diagram.boundary is not None else None
    return Diagram(verts, diagram.free_loops, bnd)


def mirror(diagram: Diagram) -> Diagram:
    """Mirror image: reverses all rotations and swaps crossing chirality.

    The invariant of the mirror is the a -> a^-1 image of the original's.
    """
    verts = []
    for v in diagram.vertices:
        rev = tuple(reversed(v.slots))
        if v.kind in (XP, XN):
            # reversed listing of (s1,s2,s3,s4) is (s4,s3,s2,s1); renormalize
            # so slot 1 is again the incoming under-dart: rotate to put the
            # under-in first.  Reversal swaps the over-strand entry side.
            s4, s3, s2, s1 = v.slots[3], v.slots[2], v.slots[1], v.slots[0]
            new_kind = XN if v.kind == XP else XP
            # under-in stays s1; ccw order after reflection: s1, s4, s3, s2
            verts.append(VertexRecord(new_kind, (s1, s4, s3, s2)))
        elif v.kind == MV:
            # reflection reverses the rotation; the marker still joins the
            # same dart pairs, so list them as (s2, s1, s4, s3): consecutive
            # pairs remain {s1,s2} and {s3,s4}.
            s1, s2, s3, s4 = v.slots
            verts.append(VertexRecord(MV, (s2, s1, s4, s3)))
        else:
            verts.append(VertexRecord(v.kind, rev))
    bnd = tuple(reversed(diagram.boundary)) if diagram.boundary is not None else None
    return Diagram(verts, diagram.free_loops, bnd)
