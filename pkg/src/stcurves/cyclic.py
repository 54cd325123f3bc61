"""Cyclic-cover families y^N = x^a1 (x-1)^a2 (x-t)^a3 over the t-line.

The deck transformation multiplies y by a root of unity, so the Hodge
structure splits into eigenspaces L_i, i = 1..N-1.  Their Hodge numbers
come from the classical branch-point count with a fourth exponent
a4 = -(a1+a2+a3) over infinity; rank-2 pieces are hypergeometric, and
unitarity is decided by whether the exponent sets interlace on the unit
circle.  A family gives a curve that is simultaneously Shimura and
Teichmueller iff no piece is neither unitary nor maximal Higgs and the
degenerate fiber has no separating node (node count gcd(N-2, N) > 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from .errors import IndexOutOfRange, InternalInconsistency, InvalidFamily, RankNotTwo


@dataclass(frozen=True)
class CyclicFamily:
    N: int
    a: Tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.N < 2:
            raise InvalidFamily("N must be at least 2")
        if any(ai % self.N == 0 for ai in self.a):
            raise InvalidFamily("each a_i must be nonzero mod N")
        if sum(self.a) % self.N == 0:
            raise InvalidFamily("a_1 + a_2 + a_3 must be nonzero mod N")
        if gcd(self.N, gcd(gcd(self.a[0], self.a[1]), self.a[2])) != 1:
            raise InvalidFamily("cover is disconnected: gcd(N, a) > 1")

    @property
    def a4(self) -> int:
        return (-sum(self.a)) % self.N

    @property
    def exponents(self) -> Tuple[int, int, int, int]:
        return (self.a[0] % self.N, self.a[1] % self.N, self.a[2] % self.N, self.a4)

    def genus(self) -> int:
        """Genus of a smooth fiber, by Riemann-Hurwitz over four points."""
        total = sum(self.N - gcd(aj, self.N) for aj in self.exponents)
        if total % 2:
            raise InternalInconsistency("odd ramification total")
        return total // 2 - self.N + 1


@dataclass(frozen=True)
class EigenspaceReport:
    i: int
    mu: Tuple[Fraction, Fraction, Fraction, Fraction]  # fractional parts
    rank: int
    h10: int
    h01: int
    exponents_at: Tuple[Tuple[Fraction, ...], ...]  # local exponents at 0, 1, oo
    label: str  # Unitary | MaximalHiggs | Intermediate | Trivial
    caveats: Tuple[str, ...] = ()


def eigenspace_data(fam: CyclicFamily, i: int) -> EigenspaceReport:
    """Hodge numbers and local exponents of the eigenspace L_i."""
    N = fam.N
    if not 1 <= i <= N - 1:
        raise IndexOutOfRange(f"i must be in 1..{N-1}, got {i}")
    exps = fam.exponents
    mu = tuple(Fraction((i * aj) % N, N) for aj in exps)
    nonzero = [j for j in range(4) if mu[j] != 0]
    rank = len(nonzero) - 2
    total = sum(mu[j] for j in nonzero)
    if total.denominator != 1:
        raise InternalInconsistency("branch fractions do not sum to an integer")
    h10 = int(total) - 1
    # the conjugate eigenspace has fractional parts 1 - mu on the same support
    h01 = rank - h10
    if h10 < 0 or h01 < 0:
        raise InternalInconsistency("negative Hodge number")
    # local exponents of the hypergeometric equation satisfied by periods:
    # {0, mu1+mu3-1} at 0, {0, mu2+mu3-1} at 1, {mu4, 1-mu3} at infinity
    exponents_at = (
        (Fraction(0), mu[0] + mu[2] - 1),
        (Fraction(0), mu[1] + mu[2] - 1),
        (mu[3], 1 - mu[2]),
    )
    label, caveats = _label(fam, i, rank, h10, h01, mu)
    return EigenspaceReport(i, mu, rank, h10, h01, exponents_at, label, caveats)


def hypergeometric_parameters(report: EigenspaceReport):
    """The (alpha, beta) parameter pairs of a rank-2 eigenspace."""
    if report.rank != 2:
        raise RankNotTwo(f"eigenspace {report.i} has rank {report.rank}")
    mu = report.mu
    alphas = tuple(sorted((mu[3], 1 - mu[2])))
    betas = tuple(sorted((2 - mu[0] - mu[2], Fraction(1))))
    return alphas, betas


def interlacing_unitary(alphas, betas) -> bool:
    """Strict interlacing of exp(2 pi i alpha) and exp(2 pi i beta).

    Points are compared as exact fractions mod 1 (so 1 reduces to 0); any
    coincidence, within or across the two lists, fails the test.
    """
    pts = [(Fraction(a) % 1, 0) for a in alphas] + [(Fraction(b) % 1, 1) for b in betas]
    pts.sort()
    if len({p for p, _ in pts}) != len(pts):
        return False
    labels = [lab for _, lab in pts]
    return all(labels[k] != labels[(k + 1) % len(labels)] for k in range(len(labels)))


def _label(fam, i, rank, h10, h01, mu):
    caveats: List[str] = []
    if rank <= 0:
        return "Trivial", ()
    if h10 == 0 or h01 == 0:
        return "Unitary", ()
    if rank == 2:
        if fam.N % 2 == 0 and i == fam.N // 2:
            if fam.a == (1, 1, 1):
                # pulled back from the elliptic family y^2 = x(x-1)(x-t)
                return "MaximalHiggs", ()
            caveats.append("possible maximal Higgs piece; proven only for a=(1,1,1)")
        alphas = tuple(sorted((mu[3], 1 - mu[2])))
        betas = tuple(sorted((2 - mu[0] - mu[2], Fraction(1))))
        if interlacing_unitary(alphas, betas):
            return "Unitary", tuple(caveats)
        return "Intermediate", tuple(caveats)
    raise InternalInconsistency(f"rank-{rank} piece with h10 = {h10}, h01 = {h01}")


def node_count(N: int) -> int:
    """Nodes of the degenerate fiber at t=0: gcd(N-2, N); 1 means separating."""
    if N < 2:
        raise InvalidFamily("N must be at least 2")
    return gcd(N - 2, N)


@dataclass(frozen=True)
class FamilyVerdict:
    family: CyclicFamily
    genus: int
    node_count: int
    pieces: Tuple[EigenspaceReport, ...]
    verdict: bool
    caveats: Tuple[str, ...]


def st_verdict(fam: CyclicFamily) -> FamilyVerdict:
    """ST verdict: nonseparating degenerate fiber and no Intermediate piece."""
    pieces = tuple(eigenspace_data(fam, i) for i in range(1, fam.N))
    g = fam.genus()
    if sum(p.h10 for p in pieces) != g:
        raise InternalInconsistency("sum of h10 does not match the genus")
    for p in pieces:
        q = eigenspace_data(fam, fam.N - p.i) if p.i != fam.N else None
        if q is not None and p.h01 != q.h10:
            raise InternalInconsistency("Hodge duality h01(i) = h10(N-i) fails")
    nodes = node_count(fam.N)
    ok = nodes > 1 and all(p.label != "Intermediate" for p in pieces)
    caveats = tuple(c for p in pieces for c in p.caveats)
    # uniqueness of a maximal Higgs sub-VHS makes Intermediate rigorous only
    # once some other piece is already maximal Higgs
    if not any(p.label == "MaximalHiggs" for p in pieces):
        caveats = caveats + tuple(
            f"L_{p.i}: not unitary; maximal Higgs not excluded"
            for p in pieces
            if p.label == "Intermediate"
        )
    if ok and g < 2:
        caveats = caveats + (f"genus {g} family: the verdict is degenerate",)
    return FamilyVerdict(fam, g, nodes, pieces, ok, caveats)
