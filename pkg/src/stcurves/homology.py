"""Integral homology and the monodromy of the SL(2, ZZ) action.

Chain model: each square i contributes its bottom edge x_i (pointing right)
and its left edge y_i (pointing up), indexed 0..d-1 and d..2d-1.  Each
square gives one face relation x_i + y_{h(i)} - x_{v(i)} - y_i, and the
boundary of an edge is a difference of vertex classes.  H_1 is the cycle
lattice modulo the face lattice, a free module of rank 2g.

The action of the generators S and T on a surface lifts to explicit maps on
edges; composing them along a stabilizer word and closing up with the final
relabelling gives the monodromy matrix on H_1.  Its kernel under the
pushforward to the torus is the (2g-2)-dimensional primitive part; the
surface is totally degenerate when the whole primitive monodromy group is
finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import intlinalg, perm
from .errors import (
    GenusTooSmall,
    InternalInconsistency,
    NotInStabilizer,
)
from .intlinalg import Matrix
from .origami import Origami, canonical_relabeling, genus, vertex_data
from .orbit import apply_letter, orbit, stabilizer_generators, word_matrix


def face_matrix(o: Origami) -> Matrix:
    d = o.degree
    F = intlinalg.zeros(d, 2 * d)
    for i in range(d):
        F[i][i] += 1
        F[i][d + o.h[i]] += 1
        F[i][o.v[i]] -= 1
        F[i][d + i] -= 1
    return F


def boundary_matrix(o: Origami) -> Matrix:
    d = o.degree
    vd = vertex_data(o)
    D = intlinalg.zeros(len(vd.classes), 2 * d)
    for i in range(d):
        D[vd.class_of[o.h[i]]][i] += 1
        D[vd.class_of[i]][i] -= 1
        D[vd.class_of[o.v[i]]][d + i] += 1
        D[vd.class_of[i]][d + i] -= 1
    return D


@dataclass(frozen=True)
class ChainBasis:
    """A ZZ-basis of H_1 in edge coordinates, plus projection data."""

    surface: Origami
    genus: int
    basis: Tuple[Tuple[int, ...], ...]  # 2g rows of length 2d
    faces: Tuple[Tuple[int, ...], ...]  # d rows of length 2d

    def project(self, vec: Sequence[int]) -> List[int]:
        """Coordinates of a cycle in the basis, modulo the face lattice."""
        cols = [list(row) for row in self.basis] + [list(row) for row in self.faces]
        A = intlinalg.transpose(cols)
        sol = intlinalg.solve_rational(A, list(vec))
        if sol is None:
            raise InternalInconsistency("vector is not a cycle")
        coords = sol[: 2 * self.genus]
        if any(c.denominator != 1 for c in coords):
            raise InternalInconsistency("non-integral homology coordinates")
        return [c.numerator for c in coords]


def homology_basis(o: Origami) -> ChainBasis:
    d = o.degree
    g = genus(o)
    D = boundary_matrix(o)
    F = face_matrix(o)
    K = intlinalg.kernel(D)  # rows: basis of the cycle lattice
    if len(K) != d + 2 * g - 1:
        raise InternalInconsistency("unexpected cycle lattice rank")
    # face rows in cycle-lattice coordinates
    Kt = intlinalg.transpose(K)
    C: Matrix = []
    for row in F:
        sol = intlinalg.solve_rational(Kt, row)
        if sol is None or any(c.denominator != 1 for c in sol):
            raise InternalInconsistency("face is not an integral cycle")
        C.append([c.numerator for c in sol])
    Sig, _, W = intlinalg.diagonalize(C)
    R = intlinalg.inverse_unimodular(W)  # rows form a basis of ZZ^k
    k = len(K)
    free_rows: List[List[int]] = []
    for i in range(k):
        sigma = Sig[i][i] if i < len(Sig) else 0
        if sigma == 0:
            free_rows.append(R[i])
        elif sigma != 1:
            raise InternalInconsistency("torsion in the homology quotient")
    if len(free_rows) != 2 * g:
        raise InternalInconsistency("homology rank is not 2g")
    B = intlinalg.matmul(free_rows, K)
    return ChainBasis(o, g, tuple(tuple(r) for r in B), tuple(tuple(r) for r in F))


# ---------------------------------------------------------------------------
# intersection pairing


def _dual_push_system(o: Origami) -> Matrix:
    """Linear system moving a grid cycle onto the dual (midline) graph.

    Cut every square into four quarters.  A 2-chain q on quarter-squares
    (indexed q[4*i + k], k = 0..3 for the BL, BR, TR, TL quarters of square
    i) cancels a grid cycle w off the grid half-edges iff A q = rhs(w),
    where the rows are the half-edges of the bottom and left edges of each
    square.  Then w - boundary(q) is a homologous cycle supported on the
    midlines, which meets the grid only transversally at edge midpoints.
    """
    d = o.degree
    vinv = perm.inverse(o.v)
    hinv = perm.inverse(o.h)
    A = intlinalg.zeros(4 * d, 4 * d)
    for i in range(d):
        A[i][4 * i + 0] += 1  # left half of bottom edge
        A[i][4 * vinv[i] + 3] -= 1
        A[d + i][4 * i + 1] += 1  # right half of bottom edge
        A[d + i][4 * vinv[i] + 2] -= 1
        A[2 * d + i][4 * hinv[i] + 1] += 1  # lower half of left edge
        A[2 * d + i][4 * i + 0] -= 1
        A[3 * d + i][4 * hinv[i] + 2] += 1  # upper half of left edge
        A[3 * d + i][4 * i + 3] -= 1
    return A


def _dual_representative(o: Origami, w: Sequence[int], A: Optional[Matrix] = None):
    d = o.degree
    if A is None:
        A = _dual_push_system(o)
    rhs = (
        [w[i] for i in range(d)]
        + [w[i] for i in range(d)]
        + [w[d + i] for i in range(d)]
        + [w[d + i] for i in range(d)]
    )
    q = intlinalg.solve_rational(A, rhs)
    if q is None:
        raise InternalInconsistency("chain is not a cycle (dual push failed)")
    return q


def intersection_pairing(o: Origami, z: Sequence[int], w: Sequence[int]) -> int:
    """Algebraic intersection number of two cycles in edge coordinates.

    w is replaced by a homologous cycle on the dual graph through the
    square centers; each dual edge crosses exactly one grid edge at its
    midpoint, transversally, so crossings with z are counted without any
    ambiguity at the cone points.  Sign convention: crossing of z going
    right with w going up counts +1 (so x . y = +1 on the torus).
    """
    q = _dual_representative(o, w)
    total = 0
    for i in range(o.degree):
        up = q[4 * i + 1] - q[4 * i + 0]  # dual flow up through bottom edge of i
        right = q[4 * i + 0] - q[4 * i + 3]  # dual flow right through left edge of i
        total += z[i] * up - z[o.degree + i] * right
    if getattr(total, "denominator", 1) != 1:
        raise InternalInconsistency("non-integral intersection number")
    return int(total)


def intersection_matrix(cb: ChainBasis) -> Matrix:
    cached = getattr(cb, "_intersection", None)
    if cached is not None:
        return cached
    o = cb.surface
    n = 2 * cb.genus
    A = _dual_push_system(o)
    J = intlinalg.zeros(n, n)
    for b in range(n):
        q = _dual_representative(o, cb.basis[b], A)
        for a in range(n):
            z = cb.basis[a]
            total = sum(
                z[i] * (q[4 * i + 1] - q[4 * i + 0])
                - z[o.degree + i] * (q[4 * i + 0] - q[4 * i + 3])
                for i in range(o.degree)
            )
            if getattr(total, "denominator", 1) != 1:
                raise InternalInconsistency("non-integral intersection number")
            J[a][b] = int(total)
    for a in range(n):
        for b in range(n):
            if J[a][b] != -J[b][a]:
                raise InternalInconsistency("intersection form is not skew")
    if intlinalg.det(J) != 1:
        raise InternalInconsistency("intersection form is not unimodular")
    object.__setattr__(cb, "_intersection", J)
    return J


# ---------------------------------------------------------------------------
# edge maps of the generators


def edge_map(o: Origami, letter: str) -> Tuple[Matrix, Origami]:
    """Matrix E with (chain on o) -> E @ chain on apply_letter(o, letter)."""
    d = o.degree
    E = intlinalg.zeros(2 * d, 2 * d)
    hinv = perm.inverse(o.h)
    if letter == "T":
        # shear fixing horizontals: y_i crosses square i then climbs at h(i)
        for i in range(d):
            E[i][i] = 1
            E[i][d + i] += 1
            E[d + o.h[i]][d + i] += 1
    elif letter == "t":
        for i in range(d):
            E[i][i] = 1
            E[d + hinv[i]][d + i] += 1
            E[hinv[i]][d + i] -= 1
    elif letter == "S":
        # quarter turn: right becomes up, up becomes left
        for i in range(d):
            E[d + perm.inverse(o.v)[i]][i] = 1
            E[i][d + i] = -1
    elif letter == "s":
        for i in range(d):
            E[d + i][i] = -1
            E[hinv[i]][d + i] = 1
    else:
        raise InternalInconsistency(f"unknown letter {letter!r}")
    return E, apply_letter(o, letter)


def relabel_matrix(rho: perm.Perm) -> Matrix:
    d = len(rho)
    E = intlinalg.zeros(2 * d, 2 * d)
    for i in range(d):
        E[rho[i]][i] = 1
        E[d + rho[i]][d + i] = 1
    return E


def word_edge_map(o: Origami, word: str) -> Matrix:
    """Edge map along a stabilizer word, closed up by the final relabelling."""
    cur = o
    d = o.degree
    E = intlinalg.eye(2 * d)
    for letter in word:
        El, cur = edge_map(cur, letter)
        E = intlinalg.matmul(El, E)
    rho_o = canonical_relabeling(o)
    rho_c = canonical_relabeling(cur)
    if perm.conjugate(cur.h, rho_c) != perm.conjugate(o.h, rho_o) or perm.conjugate(
        cur.v, rho_c
    ) != perm.conjugate(o.v, rho_o):
        raise NotInStabilizer(f"word {word!r} does not stabilize the surface")
    rho = perm.compose(perm.inverse(rho_o), rho_c)  # squares of cur -> squares of o
    return intlinalg.matmul(relabel_matrix(rho), E)


def monodromy_matrix(o: Origami, word: str, cb: Optional[ChainBasis] = None) -> Matrix:
    """Action of a stabilizer word on H_1 in the given basis (columns act)."""
    if cb is None:
        cb = homology_basis(o)
    E = word_edge_map(o, word)
    n = 2 * cb.genus
    cols = [cb.project(intlinalg.matvec(E, list(b))) for b in cb.basis]
    M = [[cols[b][a] for b in range(n)] for a in range(n)]
    J = intersection_matrix(cb)
    Mt = intlinalg.transpose(M)
    if not intlinalg.mat_eq(intlinalg.matmul(Mt, intlinalg.matmul(J, M)), J):
        raise InternalInconsistency("monodromy does not preserve the intersection form")
    P = pushforward_matrix(cb)
    wm = [list(r) for r in word_matrix(word)]
    if not intlinalg.mat_eq(intlinalg.matmul(P, M), intlinalg.matmul(wm, P)):
        raise InternalInconsistency("monodromy is not pushforward-equivariant")
    return M


# ---------------------------------------------------------------------------
# pushforward to the torus and the primitive part


def pushforward_matrix(cb: ChainBasis) -> Matrix:
    """2 x 2g matrix of total horizontal/vertical holonomy of the basis."""
    d = cb.surface.degree
    return [
        [sum(b[:d]) for b in cb.basis],
        [sum(b[d:]) for b in cb.basis],
    ]


def primitive_sublattice(cb: ChainBasis) -> Matrix:
    """Saturated kernel of the pushforward: rank 2g-2, basis as rows."""
    if cb.genus < 2:
        raise GenusTooSmall("the primitive part needs genus at least 2")
    Q = intlinalg.kernel(pushforward_matrix(cb))
    if len(Q) != 2 * cb.genus - 2:
        raise InternalInconsistency("primitive part has wrong rank")
    return Q


def restrict_to_sublattice(M: Matrix, Q: Matrix) -> Matrix:
    """Matrix of M on the sublattice spanned by the rows of Q."""
    Qt = intlinalg.transpose(Q)
    n = len(Q)
    cols = []
    for r in range(n):
        image = intlinalg.matvec(M, list(Q[r]))
        sol = intlinalg.solve_rational(Qt, image)
        if sol is None or any(c.denominator != 1 for c in sol):
            raise InternalInconsistency("monodromy does not preserve the sublattice")
        cols.append([c.numerator for c in sol])
    return [[cols[c][r] for c in range(n)] for r in range(n)]


@dataclass(frozen=True)
class SplittingReport:
    verdict: str  # TotallyDegenerate | NotTotallyDegenerate | Inconclusive
    group_order: Optional[int]
    n_generators: int
    element_cap: int
    entry_bound: int


def degeneracy_report(
    o: Origami,
    element_cap: int = 10**6,
    entry_bound: int = 10**9,
    graph=None,
) -> SplittingReport:
    """Decide whether the primitive monodromy group is finite.

    The group is generated by the monodromy of the Veech-group generators
    restricted to the primitive sublattice.  Finiteness is decided by
    explicit closure: an entry exceeding entry_bound certifies an element
    of infinite order (NotTotallyDegenerate), while exceeding element_cap
    without blowup is reported as Inconclusive.
    """
    cb = homology_basis(o)
    Q = primitive_sublattice(cb)
    if graph is None:
        graph = orbit(o)
    words = stabilizer_generators(graph)
    gens: List[Tuple[Tuple[int, ...], ...]] = []
    seen_g = set()
    for w in words:
        M = monodromy_matrix(o, w, cb)
        R = restrict_to_sublattice(M, Q)
        for mat in (R, intlinalg.inverse_unimodular(R)):
            key = tuple(tuple(r) for r in mat)
            if key not in seen_g:
                seen_g.add(key)
                gens.append(key)
    n = len(Q)
    ident = tuple(tuple(r) for r in intlinalg.eye(n))

    # Finite subgroups of GL_n(ZZ) have element orders bounded (the order of
    # a torsion element is an lcm of m's with sum phi(m) <= n, well under
    # 2520 for n <= 10), so an element with no small power equal to the
    # identity certifies an infinite group.
    max_order = 2520

    def has_infinite_order(m) -> bool:
        p = m
        for _ in range(max_order):
            if p == ident:
                return False
            if any(abs(x) > entry_bound for row in p for x in row):
                return True
            p = tuple(
                tuple(sum(p[i][k] * m[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        return True

    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                prod = tuple(
                    tuple(sum(a[i][k] * g[k][j] for k in range(n)) for j in range(n))
                    for i in range(n)
                )
                if prod in elements:
                    continue
                if any(abs(x) > entry_bound for row in prod for x in row) or (
                    has_infinite_order(prod)
                ):
                    return SplittingReport(
                        "NotTotallyDegenerate", None, len(gens), element_cap, entry_bound
                    )
                if len(elements) >= element_cap:
                    return SplittingReport(
                        "Inconclusive", None, len(gens), element_cap, entry_bound
                    )
                elements.add(prod)
                nxt.append(prod)
        frontier = nxt
    return SplittingReport(
        "TotallyDegenerate", len(elements), len(gens), element_cap, entry_bound
    )
