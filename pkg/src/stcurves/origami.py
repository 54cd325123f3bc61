"""Square-tiled surfaces as pairs of permutations.

A surface of degree d is a pair (h, v) of permutations of {0, ..., d-1}
acting transitively: h(x) is the square to the right of x, v(x) the square
above x.  Unit squares glue edge to edge by translations, so the total space
is a translation surface tiled by d squares, together with a degree-d
translation covering of the unit square torus.

Text format, one surface per line::

    d; h as comma-separated one-line values; v likewise

e.g. ``3; 1,0,2; 2,1,0`` is the L-shaped surface with a single double zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import intlinalg, perm
from .errors import (
    InternalInconsistency,
    LengthMismatch,
    NotTransitive,
    ParseError,
    RankNotTwo,
)
from .perm import Perm


@dataclass(frozen=True)
class Origami:
    h: Perm
    v: Perm

    def __post_init__(self) -> None:
        if len(self.h) != len(self.v):
            raise LengthMismatch(
                f"degree mismatch: |h| = {len(self.h)}, |v| = {len(self.v)}"
            )
        perm.check_perm(self.h)
        perm.check_perm(self.v)
        if not perm.is_transitive(self.h, self.v):
            raise NotTransitive("h and v do not act transitively; surface is not connected")
        object.__setattr__(self, "h", tuple(self.h))
        object.__setattr__(self, "v", tuple(self.v))

    @property
    def degree(self) -> int:
        return len(self.h)

    def __str__(self) -> str:
        return format_origami(self)


def parse_origami(text: str) -> Origami:
    parts = text.strip().split(";")
    if len(parts) != 3:
        raise ParseError(f"expected 'd; h; v', got {text!r}")
    try:
        d = int(parts[0])
        h = tuple(int(t) for t in parts[1].split(","))
        v = tuple(int(t) for t in parts[2].split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer in {text!r}: {exc}") from None
    if len(h) != d or len(v) != d:
        raise ParseError(f"stated degree {d} but |h| = {len(h)}, |v| = {len(v)}")
    if not (perm.is_perm(h) and perm.is_perm(v)):
        raise ParseError(f"h or v is not a permutation of 0..{d-1} in {text!r}")
    return Origami(h, v)


def format_origami(o: Origami) -> str:
    return "{}; {}; {}".format(
        o.degree, ",".join(map(str, o.h)), ",".join(map(str, o.v))
    )


# ---------------------------------------------------------------------------
# vertices, genus, signature


def corner_perm(o: Origami) -> Perm:
    """Permutation whose cycles are the vertices of the surface.

    Following the four corners of the vertex at the bottom-left of square x
    counterclockwise returns to the bottom-left corner of square
    v(h(v^-1(h^-1(x)))); each cycle is one cone point, with cone angle
    2*pi times the cycle length.
    """
    hinv, vinv = perm.inverse(o.h), perm.inverse(o.v)
    return tuple(o.v[o.h[vinv[hinv[x]]]] for x in range(o.degree))


@dataclass(frozen=True)
class VertexData:
    classes: Tuple[Perm, ...]  # cycles of the corner permutation
    class_of: Perm  # square -> index of its bottom-left vertex class
    excess: Tuple[int, ...]  # cycle length - 1, per class


def vertex_data(o: Origami) -> VertexData:
    cycs = perm.cycles(corner_perm(o))
    class_of = [0] * o.degree
    for i, c in enumerate(cycs):
        for x in c:
            class_of[x] = i
    return VertexData(cycs, tuple(class_of), tuple(len(c) - 1 for c in cycs))


def signature(o: Origami) -> Tuple[int, ...]:
    """Orders of the zeros of the invariant 1-form, non-increasing."""
    vd = vertex_data(o)
    return tuple(sorted((e for e in vd.excess if e > 0), reverse=True))


def genus(o: Origami) -> int:
    total = sum(vertex_data(o).excess)
    if total % 2:
        raise InternalInconsistency("odd total cone-angle excess")
    return total // 2 + 1


# ---------------------------------------------------------------------------
# canonical labels


def canonical_relabeling(o: Origami) -> Perm:
    """The relabelling (old -> new) realizing the canonical form.

    For each base square, squares are numbered in breadth-first discovery
    order following h then v; the lexicographically least resulting
    (h, v) one-line pair wins.  Two surfaces are translation-equivalent iff
    their canonical forms coincide.
    """
    d = o.degree
    h, v = o.h, o.v
    best_key = None
    best_rho: List[int] = []
    for base in range(d):
        rho = [-1] * d  # old -> new
        order = [base]
        rho[base] = 0
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for y in (h[x], v[x]):
                if rho[y] < 0:
                    rho[y] = len(order)
                    order.append(y)
        nh = tuple(rho[h[x]] for x in order)
        nv = tuple(rho[v[x]] for x in order)
        key = nh + nv
        if best_key is None or key < best_key:
            best_key = key
            best_rho = rho
    return tuple(best_rho)


def canonical_form(o: Origami) -> Origami:
    rho = canonical_relabeling(o)
    return Origami(perm.conjugate(o.h, rho), perm.conjugate(o.v, rho))


def is_isomorphic(a: Origami, b: Origami) -> bool:
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# absolute holonomy


def square_positions(o: Origami) -> List[Tuple[int, int]]:
    """Integer positions of the squares along a spanning tree of moves.

    Square 0 sits at (0, 0); following h adds (1, 0), following v adds
    (0, 1).  Positions are well defined only modulo the holonomy lattice.
    """
    d = o.degree
    pos: List[Tuple[int, int]] = [(0, 0)] * d
    seen = [False] * d
    seen[0] = True
    queue = [0]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        px, py = pos[x]
        for y, (dx, dy) in ((o.h[x], (1, 0)), (o.v[x], (0, 1))):
            if not seen[y]:
                seen[y] = True
                pos[y] = (px + dx, py + dy)
                queue.append(y)
    return pos


def holonomy_lattice(o: Origami) -> Tuple[Tuple[Tuple[int, int], ...], int]:
    """Lattice of absolute periods of closed loops, as (HNF basis, index).

    The index is [ZZ^2 : Lambda]; it equals 1 unless every loop's holonomy
    lies in a proper sublattice, i.e. unless the torus cover factors through
    a larger torus.
    """
    pos = square_positions(o)
    vectors = []
    for x in range(o.degree):
        for y, (dx, dy) in ((o.h[x], (1, 0)), (o.v[x], (0, 1))):
            hx = pos[x][0] + dx - pos[y][0]
            hy = pos[x][1] + dy - pos[y][1]
            if (hx, hy) != (0, 0):
                vectors.append([hx, hy])
    basis, index = intlinalg.lattice_index_2d(vectors)
    if index == 0:
        raise RankNotTwo("holonomy lattice has rank below 2")
    return tuple((row[0], row[1]) for row in basis), index


def optimal_degree(o: Origami) -> int:
    """Degree of the covering of the maximal intermediate torus.

    The torus cover factors through CC / Lambda for the holonomy lattice
    Lambda, and d = [ZZ^2 : Lambda] * d_opt.
    """
    _, index = holonomy_lattice(o)
    d = o.degree
    if d % index:
        raise InternalInconsistency(
            f"degree {d} not divisible by holonomy index {index}"
        )
    return d // index
