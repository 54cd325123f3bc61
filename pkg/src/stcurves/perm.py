"""Permutations of {0, ..., d-1} as tuples of ints.

Composition convention, used everywhere in the package:

    compose(p, q)[x] == p[q[x]]        (q first, then p)
"""

from __future__ import annotations

from itertools import permutations as _all_arrangements
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import NotBijective

Perm = Tuple[int, ...]


def identity(d: int) -> Perm:
    return tuple(range(d))


def is_perm(p: Sequence[int]) -> bool:
    d = len(p)
    return sorted(p) == list(range(d))


def check_perm(p: Sequence[int]) -> Perm:
    if not is_perm(p):
        raise NotBijective(f"not a permutation of 0..{len(p)-1}: {list(p)}")
    return tuple(p)


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: (p*q)(x) = p(q(x))."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(p: Perm, s: Perm) -> Perm:
    """s * p * s^-1."""
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[s[i]] = s[x]
    return tuple(out)


def cycles(p: Perm) -> Tuple[Perm, ...]:
    """Cycles of p, each starting at its smallest element, sorted by start."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(p: Perm) -> Tuple[int, ...]:
    """Cycle lengths in non-increasing order."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(d: int, cycs: Iterable[Sequence[int]]) -> Perm:
    p = list(range(d))
    for cyc in cycs:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[a] = b
    return check_perm(p)


def canonical_of_cycle_type(d: int, lengths: Sequence[int]) -> Perm:
    """The permutation with the given cycle lengths on consecutive blocks."""
    p = list(range(d))
    start = 0
    for ell in lengths:
        for k in range(ell):
            p[start + k] = start + (k + 1) % ell
        start += ell
    assert start == d
    return tuple(p)


def is_transitive(h: Perm, v: Perm) -> bool:
    d = len(h)
    if d == 0:
        return False
    seen = [False] * d
    seen[0] = True
    stack = [0]
    n = 1
    while stack:
        x = stack.pop()
        for y in (h[x], v[x]):
            if not seen[y]:
                seen[y] = True
                n += 1
                stack.append(y)
    return n == d


def conjugator_between(p: Perm, q: Perm) -> Perm:
    """Some s with s * p * s^-1 = q; p and q must share a cycle type."""
    cp, cq = cycles(p), cycles(q)
    by_len: dict[int, list] = {}
    for c in cq:
        by_len.setdefault(len(c), []).append(c)
    s = [0] * len(p)
    used = {ln: 0 for ln in by_len}
    for c in sorted(cp, key=len):
        tgt = by_len[len(c)][used[len(c)]]
        used[len(c)] += 1
        for a, b in zip(c, tgt):
            s[a] = b
    return check_perm(s)


def centralizer(p: Perm) -> Iterator[Perm]:
    """All permutations commuting with p.

    An element is a shift inside each cycle plus a permutation of the cycles
    within each length class, so the order is prod(l^m * m!) over classes.
    """
    d = len(p)
    cycs = cycles(p)
    by_len: dict[int, list] = {}
    for c in cycs:
        by_len.setdefault(len(c), []).append(c)
    classes = sorted(by_len.items())

    def rec(ci: int, current: list) -> Iterator[Perm]:
        if ci == len(classes):
            yield tuple(current)
            return
        ell, group = classes[ci]
        m = len(group)
        for assign in _all_arrangements(range(m)):
            for shifts in _product_shifts(ell, m):
                for gi, (tj, sh) in enumerate(zip(assign, shifts)):
                    src, tgt = group[gi], group[tj]
                    for k in range(ell):
                        current[src[k]] = tgt[(k + sh) % ell]
                yield from rec(ci + 1, current)

    yield from rec(0, [0] * d)


def _product_shifts(ell: int, m: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for rest in _product_shifts(ell, m - 1):
        for s in range(ell):
            yield rest + (s,)


def centralizer_order(p: Perm) -> int:
    from math import factorial

    counts: dict[int, int] = {}
    for c in cycles(p):
        counts[len(c)] = counts.get(len(c), 0) + 1
    n = 1
    for ell, m in counts.items():
        n *= ell**m * factorial(m)
    return n


def conjugacy_class(d: int, lengths: Sequence[int]) -> Iterator[Perm]:
    """All permutations of S_d with the given cycle type, each exactly once.

    Cycles are built greedily: the smallest unplaced point leads the next
    cycle, whose length is chosen among the distinct remaining lengths.
    """
    lengths = sorted(lengths, reverse=True)
    assert sum(lengths) == d

    def rec(remaining: Tuple[int, ...], free: frozenset, p: list) -> Iterator[Perm]:
        if not remaining:
            yield tuple(p)
            return
        leader = min(free)
        rest = sorted(free - {leader})
        tried = set()
        for i, ell in enumerate(remaining):
            if ell in tried:
                continue
            tried.add(ell)
            nxt = remaining[:i] + remaining[i + 1 :]
            if ell == 1:
                p[leader] = leader
                yield from rec(nxt, free - {leader}, p)
                continue
            for tail in _all_arrangements(rest, ell - 1):
                cyc = (leader,) + tail
                for a, b in zip(cyc, cyc[1:] + (leader,)):
                    p[a] = b
                yield from rec(nxt, free - set(cyc), p)
        return

    yield from rec(tuple(lengths), frozenset(range(d)), [0] * d)
