"""Arithmetic screen for ST-candidates and the full per-surface checklist.

A flat surface whose Teichmueller curve is simultaneously a Shimura curve
is extremely constrained: comparing the Noether formula with the known
degrees of the relevant sheaves pins the degree of the optimal torus cover
to d_opt = 12 / (sum k_i^2/(k_i+1) + 16 - 4g).  Enumerating zero signatures
per genus leaves a short list of candidates, empty outside 3 <= g <= 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    DegenerateDenominator,
    DTooSmall,
    GenusTooSmall,
    InternalInconsistency,
    NotDivisible,
    SignatureGenusMismatch,
    WrongGenus,
)
from .flat import (
    equal_saddle_lengths_genus3,
    has_self_connection_at_simple_zero,
    horizontal_cylinders,
    ring_condition,
)
from .homology import degeneracy_report
from .orbit import OrbitGraph, orbit
from .origami import Origami, genus, optimal_degree, signature

Signature = Tuple[int, ...]


def d_opt_formula(g: int, sig: Sequence[int]) -> Optional[Fraction]:
    """12 / (sum k_i^2/(k_i+1) + 16 - 4g), or None on a zero denominator."""
    sig = tuple(sig)
    if any(k < 1 for k in sig) or sum(sig) != 2 * g - 2:
        raise SignatureGenusMismatch(
            f"signature {sig} does not sum to 2g-2 = {2*g-2}"
        )
    den = sum(Fraction(k * k, k + 1) for k in sig) + 16 - 4 * g
    if den == 0:
        return None
    return 12 / den


def exclusion_rules(sig: Sequence[int]) -> Optional[str]:
    """Signature-level tags mirroring the degeneration arguments.

    With at most two zeros, a one-cylinder direction degenerates to a
    one-component stable curve; with exactly three zeros and an odd order
    among them, a saddle connection joining the heavy zeros collapses the
    same way.  Tags are bookkeeping for the candidate table, not re-proofs.
    """
    s = len(sig)
    if s <= 2:
        return "TwoOrFewerZeros"
    if s == 3 and any(k % 2 for k in sig):
        return "ThreeZeroCollapse"
    return None


@dataclass(frozen=True)
class ScreenRow:
    genus: int
    signature: Signature  # non-decreasing
    d_opt: Fraction
    admissible: bool
    exclusion_reason: Optional[str]


def _partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_candidates(g: int) -> List[ScreenRow]:
    """All zero signatures of genus g with positive integral d_opt.

    Rows follow the candidate-table order: increasing largest zero order,
    then decreasing number of zeros.  Empty for g = 2 and every g >= 7
    (the denominator of the formula is negative from genus 7 on).
    """
    if g < 2:
        raise GenusTooSmall("candidate enumeration needs genus >= 2")
    rows = []
    for part in _partitions(2 * g - 2):
        sig = tuple(sorted(part))
        d = d_opt_formula(g, sig)
        if d is None or d <= 0 or d.denominator != 1:
            continue
        reason = exclusion_rules(sig)
        rows.append(ScreenRow(g, sig, d, reason is None, reason))
    rows.sort(key=lambda r: (max(r.signature), -len(r.signature), r.signature))
    return rows


# paper-table case numbers for the genus 4 and 5 candidate rows
TABLE_CASES: Dict[Tuple[int, Signature], int] = {
    (4, (1, 1, 1, 1, 1, 1)): 1,
    (4, (2, 2, 2)): 2,
    (5, (1, 1, 1, 1, 1, 1, 2)): 3,
    (5, (1, 1, 1, 1, 2, 2)): 4,
    (5, (1, 1, 2, 2, 2)): 5,
    (5, (2, 2, 2, 2)): 6,
    (5, (1, 1, 1, 1, 1, 3)): 7,
    (5, (1, 1, 3, 3)): 8,
    (5, (1, 1, 1, 1, 4)): 9,
}


def candidate_table_csv(genera: Sequence[int]) -> str:
    """Byte-stable CSV of the candidate rows for the given genera."""
    lines = ["case,genus,signature,d_opt,admissible,exclusion"]
    for g in genera:
        for row in enumerate_candidates(g):
            case = TABLE_CASES.get((g, row.signature))
            lines.append(
                "{},{},{},{},{},{}".format(
                    f"({case})" if case else "-",
                    g,
                    '"(' + ",".join(map(str, row.signature)) + ')"',
                    row.d_opt,
                    "yes" if row.admissible else "no",
                    row.exclusion_reason or "",
                )
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# modular-curve quantities


@dataclass(frozen=True)
class ModularData:
    d: int
    delta_d: Fraction
    cusp_count: int
    genus_Xd: int


def modular_data(d: int) -> ModularData:
    """Degree data of the modular curve X(d): Delta_d, cusps, genus."""
    if d < 2:
        raise DTooSmall("modular data needs d >= 2")
    if d == 2:
        delta = Fraction(1, 4)
    else:
        delta = Fraction(d * d, 24)
        p = 2
        m = d
        while m > 1:
            if m % p == 0:
                delta *= 1 - Fraction(1, p * p)
                while m % p == 0:
                    m //= p
            p += 1
    cusps = 12 * delta
    if cusps.denominator != 1:
        raise InternalInconsistency("cusp count is not integral")
    g = (d - 6) * delta + 1 if d > 2 else Fraction(0)
    if g.denominator != 1:
        raise InternalInconsistency("modular genus is not integral")
    return ModularData(d, delta, cusps.numerator, g.numerator)


def delta_chi_top(d: int, d_opt: int) -> int:
    """Excess Euler characteristic per singular fiber: d / d_opt."""
    if d_opt <= 0 or d % d_opt:
        raise NotDivisible(f"d_opt = {d_opt} does not divide d = {d}")
    return d // d_opt


def rank2_exponent(degL: int, g: int, cusps: int) -> Fraction:
    """Lyapunov exponent of a rank-2 piece: deg L / (g - 2 + cusps/2)."""
    den = Fraction(g - 2) + Fraction(cusps, 2)
    if den <= 0:
        raise DegenerateDenominator(f"g = {g}, cusps = {cusps}")
    return degL / den


# ---------------------------------------------------------------------------
# the full checklist


@dataclass
class ChecklistReport:
    surface: Origami
    genus: int
    signature: Signature
    d_opt: int
    veech_index: int
    admissible_signature: bool  # (a)
    cusp_geometry: bool  # (b): >= 2 cylinders, ring, equal widths per cusp
    no_simple_self_connection: bool  # (c)
    genus3_equal_lengths: Optional[bool]  # (d), None unless genus 3
    degeneracy_verdict: Optional[str]  # (e)
    details: List[str] = field(default_factory=list)

    @property
    def st_candidate(self) -> bool:
        return (
            self.admissible_signature
            and self.cusp_geometry
            and self.no_simple_self_connection
            and self.genus3_equal_lengths is not False
            and self.degeneracy_verdict == "TotallyDegenerate"
        )


def _check_cusp_direction(rep: Origami, g: int, details: List[str]) -> bool:
    dec = horizontal_cylinders(rep)
    k = len(dec.cylinders)
    if g >= 2 and k < 2:
        details.append(f"cusp {rep}: only {k} cylinder(s)")
        return False
    if not ring_condition(dec):
        details.append(f"cusp {rep}: ring condition fails")
        return False
    widths = set(dec.widths)
    if len(widths) != 1:
        details.append(f"cusp {rep}: unequal widths {sorted(widths)}")
        return False
    # arithmetic identity on equal-width ring decompositions: with m = d/w,
    # sum(h_i * m - 1) + k = m^2 is area conservation in disguise
    w = dec.widths[0]
    d = rep.degree
    if d % w:
        raise InternalInconsistency("width does not divide degree")
    m = d // w
    if sum(h * m - 1 for h in dec.heights) + k != m * m:
        raise InternalInconsistency("ring identity fails on equal widths")
    return True


def st_checklist(
    o: Origami,
    cap: int = 10**6,
    graph: Optional[OrbitGraph] = None,
    skip_degeneracy_on_fail: bool = True,
) -> ChecklistReport:
    """Evaluate all ST-candidate predicates for one surface.

    (a) signature admissible for its genus and d_opt(O) matches the formula
    (b) every cusp direction: >= 2 cylinders, ring condition, equal widths
    (c) no horizontal saddle connection from a simple zero to itself, in
        any cusp direction
    (d) genus 3 only: all saddle connections of one length, equal heights
    (e) primitive monodromy group finite (totally degenerate spectrum)
    """
    g = genus(o)
    if g < 2:
        raise GenusTooSmall("the checklist applies to genus >= 2")
    sig = tuple(sorted(signature(o)))
    dopt = optimal_degree(o)
    details: List[str] = []

    admissible = {r.signature for r in enumerate_candidates(g) if r.admissible}
    ok_a = sig in admissible and d_opt_formula(g, sig) == dopt
    if not ok_a:
        details.append(f"signature {sig} with d_opt {dopt} not admissible")

    if graph is None:
        graph = orbit(o)
    reps = [graph.nodes[c.rep] for c in graph.cusps()]

    ok_b = True
    ok_c = True
    ok_d: Optional[bool] = True if g == 3 else None
    for rep in reps:
        if ok_b and not _check_cusp_direction(rep, g, details):
            ok_b = False
        if ok_c and has_self_connection_at_simple_zero(rep):
            details.append(f"cusp {rep}: self connection at a simple zero")
            ok_c = False
        if g == 3 and ok_d and not equal_saddle_lengths_genus3(rep):
            details.append(f"cusp {rep}: saddle connection lengths differ")
            ok_d = False

    verdict: Optional[str] = None
    flat_ok = ok_a and ok_b and ok_c and ok_d is not False
    if flat_ok or not skip_degeneracy_on_fail:
        verdict = degeneracy_report(o, element_cap=cap, graph=graph).verdict
        if verdict != "TotallyDegenerate":
            details.append(f"degeneracy verdict: {verdict}")

    return ChecklistReport(
        surface=o,
        genus=g,
        signature=sig,
        d_opt=dopt,
        veech_index=graph.veech_index,
        admissible_signature=ok_a,
        cusp_geometry=ok_b,
        no_simple_self_connection=ok_c,
        genus3_equal_lengths=ok_d,
        degeneracy_verdict=verdict,
        details=details,
    )
