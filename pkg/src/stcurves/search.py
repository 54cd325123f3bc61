"""Exhaustive enumeration of square-tiled surfaces and the ST search.

Enumeration strategy: fix the horizontal permutation h as the canonical
representative of each cycle type.  The corner permutation is then
prescribed up to conjugacy by the requested zero signature, and for each
permutation c in that conjugacy class the vertical permutations with
commutator class c form a coset of the centralizer of h.  Expanding those
cosets (the hot loop, compiled when available) and canonicalizing yields
exactly one representative per isomorphism class.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations as _all_perms
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import kernels, perm
from .errors import DegreeGuard, PreconditionFailed, InternalInconsistency
from .origami import (
    Origami,
    holonomy_lattice,
    optimal_degree,
    signature,
    square_positions,
    vertex_data,
)
from .orbit import orbit
from .screen import ChecklistReport, d_opt_formula, enumerate_candidates, st_checklist

Signature = Tuple[int, ...]


@dataclass(frozen=True)
class SearchSpec:
    degree: int
    signature: Optional[Signature] = None  # zero orders, any order
    orbit_dedup: bool = True
    degree_guard: int = 12
    cache_dir: Optional[str] = None

    def normalized_signature(self) -> Optional[Signature]:
        return None if self.signature is None else tuple(sorted(self.signature, reverse=True))


def _commutator_type(d: int, sig: Signature) -> Optional[Tuple[int, ...]]:
    """Cycle type of the corner permutation for the signature, or None."""
    lengths = [k + 1 for k in sig]
    if sum(lengths) > d:
        return None
    return tuple(sorted(lengths + [1] * (d - sum(lengths)), reverse=True))


def _expand_for_type(d: int, mu: Sequence[int], target: Sequence[int]) -> Set[bytes]:
    """Canonical keys of classes with h of cycle type mu, commutator in target class."""
    h = perm.canonical_of_cycle_type(d, mu)
    hinv = perm.inverse(h)
    taus = []
    for c in perm.conjugacy_class(d, target):
        e = perm.compose(hinv, c)
        if perm.cycle_type(e) == tuple(mu):
            # v h^-1 v^-1 = h^-1 c, so v runs over a centralizer coset
            taus.append(perm.conjugator_between(hinv, e))
    if not taus:
        return set()
    zs = list(perm.centralizer(h))
    return kernels.expand_cosets(h, taus, zs)


def _cache_path(spec: SearchSpec) -> Optional[str]:
    base = spec.cache_dir or os.environ.get("ORIGAMI_CACHE_DIR")
    if not base:
        return None
    sig = spec.normalized_signature()
    tag = "any" if sig is None else "-".join(map(str, sig)) or "flat"
    return os.path.join(base, f"d{spec.degree}_sig{tag}.txt")


def enumerate_origamis(spec: SearchSpec) -> List[Origami]:
    """One canonical representative per isomorphism class, sorted.

    With a signature the coset method above applies; without one the degree
    is restricted to 7 (all commutator classes are expanded, which is only
    reasonable at naive-enumeration scale).
    """
    d = spec.degree
    if d < 1:
        raise DegreeGuard("degree must be positive")
    if d > spec.degree_guard:
        raise DegreeGuard(
            f"degree {d} above the guard {spec.degree_guard}; raise degree_guard to force"
        )
    if d > 255:
        raise DegreeGuard("degrees above 255 are unsupported")
    sig = spec.normalized_signature()
    if sig is None and d > 7:
        raise DegreeGuard("unconstrained enumeration is limited to degree 7")

    path = _cache_path(spec)
    if path and os.path.exists(path):
        from .origami import parse_origami

        with open(path) as fh:
            return [parse_origami(line) for line in fh if line.strip()]

    targets: List[Tuple[int, ...]]
    if sig is not None:
        if any(k < 1 for k in sig) or sum(sig) % 2:
            raise PreconditionFailed(f"invalid signature {sig}")
        t = _commutator_type(d, sig)
        targets = [t] if t is not None else []
    else:
        # all possible corner cycle types: even permutations only
        targets = [t for t in _partitions(d) if sum(x - 1 for x in t) % 2 == 0]

    keys: Set[bytes] = set()
    for target in targets:
        for mu in _partitions(d):
            keys |= _expand_for_type(d, mu, target)
    out = [Origami(tuple(k[:d]), tuple(k[d:])) for k in sorted(keys)]

    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            for o in out:
                fh.write(f"{o}\n")
    return out


def _partitions(n: int, max_part: Optional[int] = None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def naive_class_list(d: int, sig: Optional[Signature] = None) -> List[Origami]:
    """Oracle: double loop over S_d x S_d with canonical dedup (d <= 5)."""
    if d > 5:
        raise DegreeGuard("the naive oracle is limited to degree 5")
    sig = None if sig is None else tuple(sorted(sig, reverse=True))
    keys = set()
    for h in _all_perms(range(d)):
        for v in _all_perms(range(d)):
            if not kernels.is_transitive(h, v):
                continue
            if sig is not None and signature(Origami(h, v)) != sig:
                continue
            keys.add(kernels.canonical_key(h, v))
    return [Origami(tuple(k[:d]), tuple(k[d:])) for k in sorted(keys)]


# ---------------------------------------------------------------------------
# parity screen


@dataclass(frozen=True)
class ParityReport:
    d_opt: int
    branch_points: Tuple[Tuple[Tuple[Fraction, Fraction], int], ...]  # (point, parity)
    odd_count: int
    two_torsion_integral: bool
    passes: bool
    one_cylinder_per_direction: bool


def _reduce_mod_lattice(x, y, basis) -> Tuple[Fraction, Fraction]:
    """Canonical representative of (x, y) modulo the HNF lattice basis."""
    (a, b), (zero, c) = basis
    if zero != 0:
        raise InternalInconsistency("lattice basis is not in HNF")
    y = Fraction(y)
    x = Fraction(x)
    ky = (y / c).__floor__()
    y -= ky * c
    x -= ky * b
    kx = (x / a).__floor__()
    x -= kx * a
    return x, y


def parity_screen(o: Origami) -> ParityReport:
    """Branch-point parity test on the optimal intermediate torus.

    The surface covers the torus E' = RR^2 / Lambda with degree d_opt.  A
    branch point is odd when the local monodromy of the cover around it is
    an odd permutation, i.e. when the total cone-angle excess over it is
    odd.  For even d_opt, a cusp degenerates to an admissible stable curve
    only if the odd branch points, translated by one of them, are exactly
    the four 2-torsion points of E'.
    """
    basis, index = holonomy_lattice(o)
    d = o.degree
    if d % index:
        raise InternalInconsistency("holonomy index does not divide degree")
    dopt = d // index
    if dopt % 2:
        raise PreconditionFailed(f"parity screen needs even d_opt, got {dopt}")

    pos = square_positions(o)
    vd = vertex_data(o)
    parity: Dict[Tuple[Fraction, Fraction], int] = {}
    for ci, cyc in enumerate(vd.classes):
        pts = {_reduce_mod_lattice(pos[x][0], pos[x][1], basis) for x in cyc}
        if len(pts) != 1:
            raise InternalInconsistency("vertex class maps to several torus points")
        pt = pts.pop()
        parity[pt] = (parity.get(pt, 0) + vd.excess[ci]) % 2

    branch = tuple(sorted((pt, par) for pt, par in parity.items()))
    odd = sorted(pt for pt, par in parity.items() if par)

    passes = False
    torsion_integral = all(
        _is_integral(_reduce_mod_lattice(
            Fraction(i * basis[0][0] + j * basis[1][0], 2),
            Fraction(i * basis[0][1] + j * basis[1][1], 2),
            basis,
        ))
        for i in (0, 1)
        for j in (0, 1)
    )
    if len(odd) == 4 and torsion_integral:
        torsion = {
            _reduce_mod_lattice(
                Fraction(i * basis[0][0] + j * basis[1][0], 2),
                Fraction(i * basis[0][1] + j * basis[1][1], 2),
                basis,
            )
            for i in (0, 1)
            for j in (0, 1)
        }
        for b0 in odd:
            shifted = {
                _reduce_mod_lattice(b[0] - b0[0], b[1] - b0[1], basis) for b in odd
            }
            if shifted == torsion:
                passes = True
                break

    # case-(i) diagnostic: one cylinder upstairs per cylinder of the marked
    # torus, checked in the horizontal direction
    from .flat import horizontal_cylinders

    branch_heights = {pt[1] % 1 == 0 and pt[1] or pt[1] for pt, par in branch if par or True}
    heights = {pt[1] for pt, _ in branch}
    n_torus_cyls = len(heights) if heights else 1
    one_cyl = len(horizontal_cylinders(o).cylinders) == n_torus_cyls

    return ParityReport(
        d_opt=dopt,
        branch_points=branch,
        odd_count=len(odd),
        two_torsion_integral=torsion_integral,
        passes=passes,
        one_cylinder_per_direction=one_cyl,
    )


def _is_integral(pt: Tuple[Fraction, Fraction]) -> bool:
    return pt[0].denominator == 1 and pt[1].denominator == 1


# ---------------------------------------------------------------------------
# the ST search


def search_st(
    spec: SearchSpec, cap: int = 10**6
) -> List[Tuple[Origami, ChecklistReport]]:
    """Orbit-deduplicated ST-checklist survivors among all classes.

    Candidates failing the arithmetic screen (inadmissible signature or
    mismatched d_opt, both orbit invariants) are dropped before their
    orbit is computed.
    """
    classes = enumerate_origamis(spec)
    survivors: List[Tuple[Origami, ChecklistReport]] = []
    seen: Set[bytes] = set()
    for o in classes:
        key = kernels.canonical_key(o.h, o.v)
        if spec.orbit_dedup and key in seen:
            continue
        g = sum(signature(o)) // 2 + 1
        if g < 2:
            continue
        admissible = {r.signature for r in enumerate_candidates(g) if r.admissible}
        sig = tuple(sorted(signature(o)))
        if sig not in admissible or d_opt_formula(g, sig) != optimal_degree(o):
            continue
        graph = orbit(o)
        if spec.orbit_dedup:
            for node in graph.nodes:
                seen.add(kernels.canonical_key(node.h, node.v))
        report = st_checklist(o, cap=cap, graph=graph)
        if report.st_candidate:
            survivors.append((o, report))
    return survivors
