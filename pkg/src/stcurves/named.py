"""Named example surfaces with pinned expected invariants.

Each constructor builds the surface from its algebraic description and
asserts the expected record before returning, so importing a named surface
is itself a consistency test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import InvalidFamily, InternalInconsistency
from .origami import Origami, genus, optimal_degree, signature


@dataclass(frozen=True)
class NamedSurface:
    name: str
    origami: Origami
    expected_genus: int
    expected_signature: Tuple[int, ...]
    expected_d_opt: int
    expected_veech_index: Optional[int] = None

    def __post_init__(self) -> None:
        o = self.origami
        if genus(o) != self.expected_genus:
            raise InternalInconsistency(f"{self.name}: genus {genus(o)}")
        if tuple(sorted(signature(o), reverse=True)) != self.expected_signature:
            raise InternalInconsistency(f"{self.name}: signature {signature(o)}")
        if optimal_degree(o) != self.expected_d_opt:
            raise InternalInconsistency(f"{self.name}: d_opt {optimal_degree(o)}")


# Q8 as square labels 0..7
_Q8 = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
_Q8_TABLE = {
    ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
    ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
    ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
    ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
}


def _q8_mul(a: str, b: str) -> str:
    sign = 1
    if a.startswith("-"):
        sign, a = -sign, a[1:]
    if b.startswith("-"):
        sign, b = -sign, b[1:]
    r = _Q8_TABLE[(a, b)]
    if r.startswith("-"):
        sign, r = -sign, r[1:]
    return r if sign > 0 else "-" + r


def quaternion_origami() -> NamedSurface:
    """The genus-3 surface tiled by the eight elements of the quaternions.

    Squares are the elements of Q8; the right neighbour is right
    multiplication by i, the upper neighbour right multiplication by j.
    The commutator is right multiplication by -1 (four 2-cycles), so all
    four zeros are simple.
    """
    idx = {name: x for x, name in enumerate(_Q8)}
    h = tuple(idx[_q8_mul(name, "i")] for name in _Q8)
    v = tuple(idx[_q8_mul(name, "j")] for name in _Q8)
    return NamedSurface(
        name="quaternion",
        origami=Origami(h, v),
        expected_genus=3,
        expected_signature=(1, 1, 1, 1),
        expected_d_opt=2,
        expected_veech_index=1,
    )


# sheet shifts of the Z/3 cover of the 2x2 torus: crossing the right edge of
# the column-x square in row y adds A[x][y] to the sheet, crossing the top
# edge adds B[x][y]; chosen so that the three corner monodromies at (0,0),
# (1,0), (0,1) are 3-cycles and the core curves of both horizontal and both
# vertical cylinders have nontrivial shift
_ORNI_A = {(0, 0): 1, (1, 0): 0, (0, 1): 0, (1, 1): 2}
_ORNI_B = {(0, 0): 2, (0, 1): 0, (1, 0): 1, (1, 1): 0}


def ornithorynque() -> NamedSurface:
    """The genus-4 surface: a Z/3 cover of the 2x2 torus.

    Twelve squares (x, y, sheet) with x, y in {0,1} and sheet in Z/3,
    branched with monodromy of order 3 over three of the four integer
    points; all three zeros have order 2 and the holonomy lattice is
    2 ZZ^2, so d_opt = 3.
    """
    def sq(x: int, y: int, s: int) -> int:
        return (x + 2 * y) * 3 + s % 3

    h = [0] * 12
    v = [0] * 12
    for x in (0, 1):
        for y in (0, 1):
            for s in range(3):
                h[sq(x, y, s)] = sq((x + 1) % 2, y, s + _ORNI_A[(x, y)])
                v[sq(x, y, s)] = sq(x, (y + 1) % 2, s + _ORNI_B[(x, y)])
    return NamedSurface(
        name="ornithorynque",
        origami=Origami(tuple(h), tuple(v)),
        expected_genus=4,
        expected_signature=(2, 2, 2),
        expected_d_opt=3,
    )


def torus(n: int) -> NamedSurface:
    """The square torus tiled by n x n unit squares (holonomy n ZZ^2)."""
    if n < 1:
        raise InvalidFamily("torus needs n >= 1")
    h = tuple((x + 1) % n + n * y for y in range(n) for x in range(n))
    v = tuple(x + n * ((y + 1) % n) for y in range(n) for x in range(n))
    return NamedSurface(
        name=f"torus{n}",
        origami=Origami(h, v),
        expected_genus=1,
        expected_signature=(),
        expected_d_opt=1,
    )


NAMED: Dict[str, object] = {
    "quaternion": quaternion_origami,
    "ornithorynque": ornithorynque,
    "torus": torus,
}


def by_name(name: str) -> NamedSurface:
    if name == "quaternion":
        return quaternion_origami()
    if name == "ornithorynque":
        return ornithorynque()
    if name.startswith("torus"):
        return torus(int(name[5:] or "1"))
    raise InvalidFamily(f"unknown named surface {name!r}")
