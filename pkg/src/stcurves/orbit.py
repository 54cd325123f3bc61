"""SL(2, ZZ) action on square-tiled surfaces and orbit graphs.

Generator conventions (letters act on surfaces, matrices on RR^2):

    T = [[1, 1], [0, 1]]   act_T(h, v) = (h, v o h^-1)
    S = [[0, -1], [1, 0]]  act_S(h, v) = (v^-1, h)

Lower-case letters 't' and 's' denote the inverses.  A word is a string of
letters applied left to right, so word_matrix("TS") == S @ T.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from . import kernels, perm
from .errors import NotCoprime, ParseError
from .origami import Origami, canonical_form

Mat2 = Tuple[Tuple[int, int], Tuple[int, int]]

LETTER_MATRIX: Dict[str, Mat2] = {
    "T": ((1, 1), (0, 1)),
    "t": ((1, -1), (0, 1)),
    "S": ((0, -1), (1, 0)),
    "s": ((0, 1), (-1, 0)),
}

INVERSE_LETTER = {"T": "t", "t": "T", "S": "s", "s": "S"}


def act_T(o: Origami) -> Origami:
    return Origami(o.h, perm.compose(o.v, perm.inverse(o.h)))


def act_T_inv(o: Origami) -> Origami:
    return Origami(o.h, perm.compose(o.v, o.h))


def act_S(o: Origami) -> Origami:
    return Origami(perm.inverse(o.v), o.h)


def act_S_inv(o: Origami) -> Origami:
    return Origami(o.v, perm.inverse(o.h))


_ACT = {"T": act_T, "t": act_T_inv, "S": act_S, "s": act_S_inv}


def apply_letter(o: Origami, letter: str) -> Origami:
    try:
        return _ACT[letter](o)
    except KeyError:
        raise ParseError(f"unknown generator letter {letter!r}") from None


def apply_word(o: Origami, word: str) -> Origami:
    for letter in word:
        o = apply_letter(o, letter)
    return o


def inverse_word(word: str) -> str:
    return "".join(INVERSE_LETTER[c] for c in reversed(word))


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse letters (Tt, tT, Ss, sS)."""
    out: List[str] = []
    for c in word:
        if out and out[-1] == INVERSE_LETTER[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ),
        (
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ),
    )


def word_matrix(word: str) -> Mat2:
    m: Mat2 = ((1, 0), (0, 1))
    for letter in word:
        if letter not in LETTER_MATRIX:
            raise ParseError(f"unknown generator letter {letter!r}")
        m = mat_mul(LETTER_MATRIX[letter], m)
    return m


def word_for_matrix(m: Mat2) -> str:
    """A word whose word_matrix equals m exactly (m must be in SL(2, ZZ))."""
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise ParseError(f"matrix {m} has determinant {a*d - b*c}, not 1")
    applied: List[str] = []  # left multiplications reducing m to the identity

    def lmul(letter: str) -> None:
        nonlocal a, b, c, d
        (a, b), (c, d) = mat_mul(LETTER_MATRIX[letter], ((a, b), (c, d)))
        applied.append(letter)

    while c != 0:
        if a != 0:
            q = a // c if abs(a) >= abs(c) else 0
            if q == 0:
                lmul("S")
                continue
            for _ in range(abs(q)):
                lmul("t" if q > 0 else "T")
        lmul("S")
    if a == -1:
        lmul("S")
        lmul("S")
    assert (a, d) == (1, 1) and c == 0
    if b:
        for _ in range(abs(b)):
            lmul("t" if b > 0 else "T")
    # m == applied[0]^-1 ... applied[-1]^-1, so as a left-to-right word the
    # inverse letters come in reverse order of application.
    return "".join(INVERSE_LETTER[letter] for letter in reversed(applied))


def apply_matrix(o: Origami, m: Mat2) -> Origami:
    return apply_word(o, word_for_matrix(m))


def matrix_for_direction(p: int, q: int) -> Mat2:
    """An SL(2, ZZ) matrix sending the direction (p, q) to (1, 0)."""
    if gcd(p, q) != 1:
        raise NotCoprime(f"direction ({p}, {q}) is not primitive")
    # extended Euclid: a*p + b*q == 1
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return ((old_s, old_t), (-q, p))


# ---------------------------------------------------------------------------
# orbit graph


@dataclass(frozen=True)
class Cusp:
    rep: int  # smallest node index on the T-cycle
    width: int
    nodes: Tuple[int, ...]


@dataclass(frozen=True)
class OrbitGraph:
    nodes: Tuple[Origami, ...]  # canonical forms; node 0 is the base surface
    s_edge: Tuple[int, ...]  # node index of S . node
    t_edge: Tuple[int, ...]
    node_word: Tuple[str, ...]  # spanning-tree word from node 0 to each node

    @property
    def veech_index(self) -> int:
        return len(self.nodes)

    def cusps(self) -> Tuple[Cusp, ...]:
        seen = [False] * len(self.nodes)
        out = []
        for start in range(len(self.nodes)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.t_edge[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.t_edge[x]
            out.append(Cusp(min(cyc), len(cyc), tuple(cyc)))
        return tuple(out)

    def to_dot(self) -> str:
        lines = ["digraph orbit {"]
        for i, o in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{o}"];')
        for i, j in enumerate(self.s_edge):
            lines.append(f'  n{i} -> n{j} [label="S"];')
        for i, j in enumerate(self.t_edge):
            lines.append(f'  n{i} -> n{j} [label="T"];')
        lines.append("}")
        return "\n".join(lines)


def orbit(o: Origami) -> OrbitGraph:
    """Breadth-first closure of the surface under S and T, up to relabelling."""
    base = canonical_form(o)
    index: Dict[bytes, int] = {kernels.canonical_key(base.h, base.v): 0}
    nodes: List[Origami] = [base]
    words: List[str] = [""]
    s_edge: List[int] = []
    t_edge: List[int] = []
    head = 0
    while head < len(nodes):
        cur = nodes[head]
        for letter, edges in (("S", s_edge), ("T", t_edge)):
            nxt = apply_letter(cur, letter)
            key = kernels.canonical_key(nxt.h, nxt.v)
            j = index.get(key)
            if j is None:
                j = len(nodes)
                index[key] = j
                ch, cv = kernels.canonical_pair(nxt.h, nxt.v)
                nodes.append(Origami(ch, cv))
                words.append(words[head] + letter)
            edges.append(j)
        head += 1
    return OrbitGraph(tuple(nodes), tuple(s_edge), tuple(t_edge), tuple(words))


def veech_index(o: Origami) -> int:
    return orbit(o).veech_index


def stabilizer_generators(graph: OrbitGraph) -> Tuple[str, ...]:
    """Generating words for the stabilizer of node 0 (its Veech group).

    Standard coset-table generators: for every node n and generator g, the
    word (path to n) g (path from g.n back) fixes the base surface; the
    tree edges give trivial words and are dropped, as is a word whose exact
    inverse is already listed.
    """
    n_nodes = len(graph.nodes)
    s_inv = [0] * n_nodes
    t_inv = [0] * n_nodes
    for i in range(n_nodes):
        s_inv[graph.s_edge[i]] = i
        t_inv[graph.t_edge[i]] = i
    gens: List[str] = []
    seen = set()
    for n in range(n_nodes):
        for letter in "STst":
            if letter == "S":
                m = graph.s_edge[n]
            elif letter == "T":
                m = graph.t_edge[n]
            elif letter == "s":
                m = s_inv[n]
            else:
                m = t_inv[n]
            word = graph.node_word[n] + letter + inverse_word(graph.node_word[m])
            if graph.node_word[m] == graph.node_word[n] + letter:
                continue  # tree edge
            word = free_reduce(word)
            if not word or word in seen or inverse_word(word) in seen:
                continue
            seen.add(word)
            gens.append(word)
    return tuple(gens)
