"""Pure-Python twins of the compiled kernels in ``_speedups``.

Same signatures, same results; ``stcurves.kernels`` picks whichever is
available (or honours STCURVES_PURE=1).  Degrees are capped at 255 so that
canonical keys fit in bytes.
"""

from __future__ import annotations

from typing import List, Sequence, Set, Tuple


def canonical_pair(
    h: Sequence[int], v: Sequence[int]
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Lexicographically least relabelling of (h, v).

    Squares are renumbered in breadth-first discovery order (h-successor
    before v-successor) from every base square; the least (h, v) pair wins.
    """
    d = len(h)
    best = None
    rho = [0] * d
    order = [0] * d
    for base in range(d):
        for i in range(d):
            rho[i] = -1
        rho[base] = 0
        order[0] = base
        n = 1
        head = 0
        while head < n:
            x = order[head]
            head += 1
            y = h[x]
            if rho[y] < 0:
                rho[y] = n
                order[n] = y
                n += 1
            y = v[x]
            if rho[y] < 0:
                rho[y] = n
                order[n] = y
                n += 1
        cand = tuple(rho[h[x]] for x in order) + tuple(rho[v[x]] for x in order)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best[:d], best[d:]


def canonical_key(h: Sequence[int], v: Sequence[int]) -> bytes:
    ch, cv = canonical_pair(h, v)
    return bytes(ch) + bytes(cv)


def is_transitive(h: Sequence[int], v: Sequence[int]) -> bool:
    d = len(h)
    seen = bytearray(d)
    seen[0] = 1
    stack = [0]
    n = 1
    while stack:
        x = stack.pop()
        for y in (h[x], v[x]):
            if not seen[y]:
                seen[y] = 1
                n += 1
                stack.append(y)
    return n == d


def expand_cosets(
    h: Sequence[int],
    taus: Sequence[Sequence[int]],
    zs: Sequence[Sequence[int]],
) -> Set[bytes]:
    """Canonical keys of all transitive (h, tau o z) for tau, z given.

    Hot loop of the exhaustive enumeration: for each coset representative
    tau and each centralizer element z, the candidate vertical permutation
    is v(x) = tau(z(x)).
    """
    out: Set[bytes] = set()
    for tau in taus:
        for z in zs:
            v = tuple(tau[x] for x in z)
            if is_transitive(h, v):
                out.add(canonical_key(h, v))
    return out
