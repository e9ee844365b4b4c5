"""Seeded random diagrams, webs and skein triples for the property suites.

Diagrams are grown Morse-style: a frontier of open strand ends (each with a
flow direction) absorbs random cups, caps, crossings and marked vertices.
Every generated object is validated, so the suites run on structurally
sound inputs by construction.
"""

from __future__ import annotations

import random

from a2poly.bracket import resolve_crossing
from a2poly.conway import _smooth_crossing, _switch_crossing
from a2poly.diagram import (
    MV,
    XP,
    Diagram,
    VertexRecord,
    morse_crossing_record,
    validate,
)


class _Builder:
    def __init__(self):
        self.records: list[VertexRecord] = []
        self.loops = 0
        self.alias: dict[int, int] = {}
        self.next_label = 1

    def fresh(self) -> int:
        lbl = self.next_label
        self.next_label += 1
        return lbl

    def find(self, lbl: int) -> int:
        while lbl in self.alias:
            lbl = self.alias[lbl]
        return lbl

    def finish(self) -> Diagram:
        verts = []
        for rec in self.records:
            slots = tuple(
                self.find(abs(s)) * (1 if s > 0 else -1) for s in rec.slots
            )
            verts.append(VertexRecord(rec.kind, slots))
        d = Diagram(verts, self.loops)
        validate(d)
        return d


def _random_diagram(
    rng: random.Random,
    n_crossings: int,
    n_marked: int,
    max_width: int = 8,
) -> Diagram:
    """One closed diagram with exactly the requested vertex counts."""
    b = _Builder()
    # frontier entries: (label, pending_sign, up) -- pending_sign is what the
    # consuming record will write for this end
    ends: list[tuple[int, int, bool]] = []
    todo_x, todo_m = n_crossings, n_marked

    def cup(at: int):
        lbl = b.fresh()
        flip = rng.random() < 0.5
        up_end = (lbl, +lbl, True)
        down_end = (lbl, -lbl, False)
        pair = [up_end, down_end] if flip else [down_end, up_end]
        ends[at:at] = pair

    def cap(k: int):
        (l1, s1, d1), (l2, s2, d2) = ends[k], ends[k + 1]
        assert d1 != d2
        del ends[k : k + 2]
        up, down = ((l1, s1), (l2, s2)) if d1 else ((l2, s2), (l1, s1))
        lu, ld = b.find(up[0]), b.find(down[0])
        if lu == ld:
            b.loops += 1
        else:
            # merge: the down end's label survives; the up end's pending
            # +label is renamed onto it
            b.alias[lu] = ld

    def vertex(k: int, marked: bool):
        (l1, s1, d1), (l2, s2, d2) = ends[k], ends[k + 1]
        if marked:
            if d1 == d2:
                return False
            tl, tr = b.fresh(), b.fresh()
            # corners ccw (BL, BR, TR, TL); alternation forces the tops
            bl = s1
            br = s2
            tr_in = d1  # dart at TR arrives iff BL arrives
            tl_in = d2
            corners = [
                ("BL", bl),
                ("BR", br),
                ("TR", tr if tr_in else -tr),
                ("TL", tl if tl_in else -tl),
            ]
            # marker joins (s1,s2),(s3,s4) of the listing; both rotations
            # starting at BL or BR give the two marker orientations
            start = rng.choice((0, 1))
            listing = corners[start:] + corners[:start]
            b.records.append(VertexRecord(MV, tuple(s for _n, s in listing)))
            new_left = (tl, -tl if tl_in else tl, not d2)
            new_right = (tr, -tr if tr_in else tr, not d1)
            ends[k : k + 2] = [new_left, new_right]
            return True
        tl, tr = b.fresh(), b.fresh()
        # the record's bottom signs coincide with the pending signs: a
        # strand flowing up arrives at the record, matching pending +label
        rec = morse_crossing_record(
            abs(s1), abs(s2), tl, tr, d1, d2, rng.random() < 0.5
        )
        b.records.append(rec)
        # top ends: the record wrote the departing sign when the strand
        # continues upward, so the future consumer writes the opposite
        new_left = (tl, tl if d2 else -tl, d2)
        new_right = (tr, tr if d1 else -tr, d1)
        ends[k : k + 2] = [new_left, new_right]
        return True

    cup(0)
    while ends or todo_x or todo_m:
        if not ends:
            cup(0)
            continue
        choices = []
        if len(ends) < max_width:
            choices.append("cup")
        cap_positions = [
            k for k in range(len(ends) - 1) if ends[k][2] != ends[k + 1][2]
        ]
        if cap_positions:
            choices.append("cap")
        if todo_x and len(ends) >= 2:
            choices.append("x")
        if todo_m and any(
            ends[k][2] != ends[k + 1][2] for k in range(len(ends) - 1)
        ):
            choices.append("m")
        if not todo_x and not todo_m and cap_positions:
            choices = ["cap", "cap", "cap"] + (["cup"] if len(ends) < max_width else [])
        op = rng.choice(choices)
        if op == "cup":
            cup(rng.randrange(len(ends) + 1))
        elif op == "cap":
            cap(rng.choice(cap_positions))
        elif op == "x":
            k = rng.randrange(len(ends) - 1)
            if vertex(k, marked=False):
                todo_x -= 1
        elif op == "m":
            positions = [
                k for k in range(len(ends) - 1) if ends[k][2] != ends[k + 1][2]
            ]
            if vertex(rng.choice(positions), marked=True):
                todo_m -= 1
    return b.finish()


def random_link_diagram(rng: random.Random, max_crossings: int = 8) -> Diagram:
    n = rng.randint(1, max_crossings)
    return _random_diagram(rng, n, 0)


def random_marked_diagram(
    rng: random.Random, max_crossings: int = 8, max_marked: int = 4
) -> Diagram:
    n = rng.randint(0, max_crossings)
    h = rng.randint(1, max_marked)
    return _random_diagram(rng, n, h)


def random_skein_triple(
    rng: random.Random, max_crossings: int = 7
) -> tuple[Diagram, Diagram, Diagram]:
    """(D+, D-, D0): identical except at one crossing."""
    d = random_link_diagram(rng, max_crossings)
    while not d.crossing_indices():
        d = random_link_diagram(rng, max_crossings)
    c = rng.choice(d.crossing_indices())
    if d.vertices[c].kind == XP:
        pos, neg = d, _switch_crossing(d, c)
    else:
        pos, neg = _switch_crossing(d, c), d
    return pos, neg, _smooth_crossing(d, c)


def random_web(rng: random.Random, max_vertices: int = 12) -> Diagram:
    """Closed trivalent web: resolve every crossing of a random link diagram
    into a randomly chosen branch of its two-term expansion."""
    d = random_link_diagram(rng, max_vertices // 2 + 1)
    while d.crossing_indices():
        c = d.crossing_indices()[0]
        terms = resolve_crossing(d, c)
        _coeff, d = terms[rng.randrange(2)]
        if len(d.vertices) > max_vertices:
            # too large: drop remaining crossings via the smooth branch
            while d.crossing_indices():
                _c2, d = resolve_crossing(d, d.crossing_indices()[0])[1]
    validate(d)
    return d
