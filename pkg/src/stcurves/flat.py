"""Flat geometry: cylinder decompositions and saddle connections.

A horizontal line through the interior of the surface is regular unless it
passes through a cone point.  Maximal unions of horizontal rows of squares
with no singular line in their interior are the horizontal cylinders; every
rational direction (p, q) is handled by applying a matrix that rotates
(p, q) to (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import perm
from .errors import InternalInconsistency, WrongGenus
from .origami import Origami, genus, vertex_data
from .orbit import apply_matrix, matrix_for_direction


@dataclass(frozen=True)
class Cylinder:
    width: int
    height: int
    rows: Tuple[Tuple[int, ...], ...]  # bottom to top; each row an h-cycle


@dataclass(frozen=True)
class CylinderDecomposition:
    direction: Tuple[int, int]
    cylinders: Tuple[Cylinder, ...]
    above: Tuple[Tuple[int, ...], ...]  # per cylinder: sorted neighbour per unit edge

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(c.width for c in self.cylinders)

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(c.height for c in self.cylinders)

    def area(self) -> int:
        return sum(c.width * c.height for c in self.cylinders)


def horizontal_cylinders(o: Origami) -> CylinderDecomposition:
    vd = vertex_data(o)
    rows = perm.cycles(o.h)
    row_of = [0] * o.degree
    for i, row in enumerate(rows):
        for x in row:
            row_of[x] = i

    def line_above_is_regular(row: Sequence[int]) -> bool:
        # the vertex at the left end of the top edge of x is the class of v(x)
        return all(vd.excess[vd.class_of[o.v[x]]] == 0 for x in row)

    # merge row i with the row above it across every regular line
    parent = list(range(len(rows)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    regular_above = [line_above_is_regular(row) for row in rows]
    for i, row in enumerate(rows):
        if regular_above[i]:
            j = row_of[o.v[row[0]]]
            parent[find(i)] = find(j)

    groups: Dict[int, List[int]] = {}
    for i in range(len(rows)):
        groups.setdefault(find(i), []).append(i)

    cylinders: List[Cylinder] = []
    cyl_of_row: Dict[int, int] = {}
    for root in sorted(groups, key=lambda r: min(min(rows[i]) for i in groups[r])):
        members = groups[root]
        # bottom row: its lower line is singular, i.e. it is not the
        # v-image of a row with a regular line above it
        targets = {row_of[o.v[rows[i][0]]] for i in members if regular_above[i]}
        starts = [i for i in members if i not in targets]
        if starts:
            cur = min(starts)
        else:
            cur = min(members)  # fully periodic (torus): any row starts
        ordered = [cur]
        while regular_above[cur]:
            nxt = row_of[o.v[rows[cur][0]]]
            if nxt == ordered[0]:
                break
            ordered.append(nxt)
            cur = nxt
        if sorted(ordered) != sorted(members):
            raise InternalInconsistency("cylinder rows do not stack into a path")
        width = len(rows[ordered[0]])
        if any(len(rows[i]) != width for i in ordered):
            raise InternalInconsistency("rows of one cylinder differ in width")
        idx = len(cylinders)
        cylinders.append(
            Cylinder(width, len(ordered), tuple(rows[i] for i in ordered))
        )
        for i in ordered:
            cyl_of_row[i] = idx

    above = tuple(
        tuple(sorted(cyl_of_row[row_of[o.v[x]]] for x in c.rows[-1]))
        for c in cylinders
    )
    return CylinderDecomposition((1, 0), tuple(cylinders), above)


def cylinders_in_direction(o: Origami, p: int, q: int) -> CylinderDecomposition:
    """Cylinder decomposition in the primitive rational direction (p, q)."""
    if (p, q) == (1, 0):
        return horizontal_cylinders(o)
    m = matrix_for_direction(p, q)
    dec = horizontal_cylinders(apply_matrix(o, m))
    return CylinderDecomposition((p, q), dec.cylinders, dec.above)


def ring_condition(dec: CylinderDecomposition) -> bool:
    """True iff the cylinders close into a single ring.

    Each cylinder's top must meet exactly one cylinder, the "next" map must
    be a permutation, and that permutation must be a single cycle; then the
    top of each cylinder is glued to the whole bottom of the next one.
    """
    n = len(dec.cylinders)
    nxt = []
    for neighbours in dec.above:
        if len(set(neighbours)) != 1:
            return False
        nxt.append(neighbours[0])
    if sorted(nxt) != list(range(n)):
        return False
    seen = 1
    x = nxt[0]
    while x != 0:
        seen += 1
        x = nxt[x]
    return seen == n


@dataclass(frozen=True)
class SaddleConnection:
    start: int  # vertex class at the left end
    end: int  # vertex class at the right end
    length: int


def horizontal_saddle_connections(o: Origami) -> Tuple[SaddleConnection, ...]:
    """Horizontal saddle connections, one line above each h-cycle of squares.

    Walking along the line above a row, the corner at the left end of the
    top edge of square x is the vertex class of v(x); consecutive singular
    corners bound a connection whose length counts unit edges between them.
    """
    vd = vertex_data(o)
    out: List[SaddleConnection] = []
    for row in perm.cycles(o.h):
        w = len(row)
        singular = [
            (i, vd.class_of[o.v[x]])
            for i, x in enumerate(row)
            if vd.excess[vd.class_of[o.v[x]]] > 0
        ]
        if not singular:
            continue
        for (i, ci), (j, cj) in zip(singular, singular[1:] + [singular[0]]):
            out.append(SaddleConnection(ci, cj, (j - i) % w or w))
    return tuple(out)


def has_self_connection_at_simple_zero(o: Origami) -> bool:
    """A horizontal saddle connection from a simple zero back to itself."""
    vd = vertex_data(o)
    return any(
        c.start == c.end and vd.excess[c.start] == 1
        for c in horizontal_saddle_connections(o)
    )


def equal_saddle_lengths_genus3(o: Origami) -> bool:
    """Genus 3 only: all horizontal saddle connections have one length.

    On a genus-3 candidate all cylinders must in addition share their
    height, which makes all core and boundary lengths commensurate.
    """
    if genus(o) != 3:
        raise WrongGenus(f"genus {genus(o)} surface passed to a genus-3 check")
    conns = horizontal_saddle_connections(o)
    dec = horizontal_cylinders(o)
    return (
        len({c.length for c in conns}) <= 1 and len(set(dec.heights)) <= 1
    )
