"""Permutation graph, two-coloring, and shortest swap sequences.

The graph on positions 1..n has an edge wherever a later position holds a
smaller value, so independent sets coincide with feasible index sets.
When this graph is bipartite every pile has at most two entries, and a
swap sequence of the smallest possible length |I \\ J| exists whenever any
sequence exists; the only obstruction is a "forbidden pair" of mixed
piles whose four elements close a 4-cycle.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange, NotMaximum, SizeMismatch
from .piles import PileSystem, build_piles
from .reconfig import ReconfSequence, SwapStep, _require_maximum
from .seqcore import FeasibleSet, Sequence, _canonical, is_feasible


@dataclass(frozen=True)
class PermutationGraph:
    """Undirected graph of value inversions; adjacency lists are sorted.

    adjacency[0] is an unused placeholder so vertices index directly.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def has_edge(self, i: int, j: int) -> bool:
        a = self.adjacency[i]
        pos = bisect_left(a, j)
        return pos < len(a) and a[pos] == j

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j) for i in range(1, self.n + 1) for j in self.adjacency[i] if i < j
        ]


@dataclass(frozen=True)
class Bipartition:
    """Two-sided vertex partition; every edge joins the sides."""

    sides: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class OddCycle:
    """Certificate that no two-coloring exists."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class MixedPile:
    """A two-entry pile split between the two input sets."""

    pile: int
    i_elem: int
    j_elem: int


@dataclass(frozen=True)
class NoSequence:
    """No swap sequence exists; carries one forbidden pair as evidence."""

    forbidden: tuple[MixedPile, MixedPile]


@dataclass(frozen=True)
class NotBipartite:
    """The shortest-sequence routine only covers bipartite graphs."""

    odd_cycle: tuple[int, ...]


def build_graph(seq: Sequence) -> PermutationGraph:
    """Graph with an edge {i, j} for every inversion i < j, a_i > a_j.

    Quadratic in n; adjacency is explicit, so this is meant for the
    moderate sizes the graph-based routines operate on.
    """
    n = seq.n
    adjacency: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        vi = seq.value(i)
        for j in range(i + 1, n + 1):
            if vi > seq.value(j):
                adjacency[i].append(j)
                adjacency[j].append(i)
    return PermutationGraph(
        n=n, adjacency=tuple(tuple(sorted(a)) for a in adjacency)
    )


def two_coloring(g: PermutationGraph) -> Bipartition | OddCycle:
    """Breadth-first two-coloring, or an odd-cycle certificate.

    Deterministic: components are rooted at their smallest vertex and the
    root takes side 0.  The certificate is normalized to start at its
    smallest vertex and continue toward its smaller neighbor.
    """
    color = [-1] * (g.n + 1)
    parent = [0] * (g.n + 1)
    for root in range(1, g.n + 1):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddCycle(vertices=_close_cycle(parent, v, w))
    side0 = tuple(v for v in range(1, g.n + 1) if color[v] == 0)
    side1 = tuple(v for v in range(1, g.n + 1) if color[v] == 1)
    return Bipartition(sides=(side0, side1))


def _close_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    """Odd cycle through the non-tree edge {v, w}: tree paths to their meet."""
    chain_v = [v]
    while parent[chain_v[-1]] != 0:
        chain_v.append(parent[chain_v[-1]])
    position = {x: d for d, x in enumerate(chain_v)}
    chain_w = [w]
    while chain_w[-1] not in position:
        chain_w.append(parent[chain_w[-1]])
    meet = chain_w[-1]
    cycle = chain_v[: position[meet] + 1] + chain_w[-2::-1]
    return _normalize_cycle(cycle)


def _normalize_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex, then walk toward its smaller neighbor."""
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def mixed_piles(
    ps: PileSystem, i_set: Iterable[int], j_set: Iterable[int]
) -> list[MixedPile]:
    """Piles of exactly two entries, one private to each input set.

    Ascending pile id.  When every pile has at most two entries, the
    count equals |I \\ J|: each element private to I shares its pile with
    exactly one element private to J.
    """
    members_i = _canonical(i_set)
    members_j = _canonical(j_set)
    if len(members_i) != len(members_j):
        raise SizeMismatch(len(members_i), len(members_j))
    _require_pile_cover(ps, members_i)
    _require_pile_cover(ps, members_j)
    only_i = set(members_i) - set(members_j)
    only_j = set(members_j) - set(members_i)
    result = []
    for t in range(1, ps.k + 1):
        pile = ps.piles[t]
        if len(pile) != 2:
            continue
        i_elem = next((x for x in pile if x in only_i), None)
        j_elem = next((x for x in pile if x in only_j), None)
        if i_elem is not None and j_elem is not None:
            result.append(MixedPile(pile=t, i_elem=i_elem, j_elem=j_elem))
    return result


def _require_pile_cover(ps: PileSystem, members: FeasibleSet) -> None:
    """Necessary condition for a maximum feasible set: one element per pile."""
    for i in members:
        if not 1 <= i <= ps.n:
            raise IndexOutOfRange(i, ps.n)
    if sorted(ps.pile_of[i] for i in members) != list(range(1, ps.k + 1)):
        raise NotMaximum(f"{members} does not take one element from every pile")


def find_forbidden_pair(
    g: PermutationGraph, mixed: list[MixedPile]
) -> tuple[MixedPile, MixedPile] | None:
    """First pair of mixed piles whose four elements induce a 4-cycle.

    Pairs are scanned in ascending pile-id order.  Both within-pile pairs
    are always edges and same-set pairs never are, so the induced graph
    is a 4-cycle exactly when every vertex has degree 2 in it.
    """
    for a in range(len(mixed)):
        for b in range(a + 1, len(mixed)):
            if _induces_four_cycle(g, mixed[a], mixed[b]):
                return mixed[a], mixed[b]
    return None


def _induces_four_cycle(g: PermutationGraph, p: MixedPile, q: MixedPile) -> bool:
    vertices = (p.i_elem, p.j_elem, q.i_elem, q.j_elem)
    degree = [0, 0, 0, 0]
    count = 0
    for x in range(4):
        for y in range(x + 1, 4):
            if g.has_edge(vertices[x], vertices[y]):
                degree[x] += 1
                degree[y] += 1
                count += 1
    return count == 4 and all(d == 2 for d in degree)


def shortest_sequence(
    seq: Sequence, i_set: Iterable[int], j_set: Iterable[int]
) -> ReconfSequence | NoSequence | NotBipartite:
    """Shortest swap sequence between maximum feasible sets, length |I \\ J|.

    Requires a bipartite permutation graph (NotBipartite otherwise).  A
    forbidden pair proves no sequence exists (NoSequence).  Otherwise the
    leftmost mixed pile always admits a swap on at least one side; the
    I-side swap is preferred when both apply, and J-side swaps are
    replayed inverted at the tail.
    """
    members_i = _canonical(i_set)
    members_j = _canonical(j_set)
    if len(members_i) != len(members_j):
        raise SizeMismatch(len(members_i), len(members_j))
    ps = build_piles(seq)
    _require_maximum(seq, ps, members_i)
    _require_maximum(seq, ps, members_j)
    g = build_graph(seq)
    coloring = two_coloring(g)
    if isinstance(coloring, OddCycle):
        return NotBipartite(odd_cycle=coloring.vertices)
    mixed = mixed_piles(ps, members_i, members_j)
    pair = find_forbidden_pair(g, mixed)
    if pair is not None:
        return NoSequence(forbidden=pair)
    cur_i, cur_j = members_i, members_j
    forward: list[SwapStep] = []
    backward: list[SwapStep] = []
    while mixed:
        mp = mixed.pop(0)
        i_side = _swap(cur_i, mp.i_elem, mp.j_elem)
        if is_feasible(seq, i_side):
            cur_i = i_side
            forward.append(SwapStep(remove=mp.i_elem, add=mp.j_elem))
        else:
            j_side = _swap(cur_j, mp.j_elem, mp.i_elem)
            assert is_feasible(seq, j_side), "leftmost mixed pile must be swappable"
            cur_j = j_side
            backward.append(SwapStep(remove=mp.j_elem, add=mp.i_elem))
        # The handled pile stops being mixed; no other pile is touched.
        assert mixed == mixed_piles(ps, cur_i, cur_j)
        assert find_forbidden_pair(g, mixed) is None
    assert cur_i == cur_j
    steps = tuple(forward) + tuple(step.inverted() for step in reversed(backward))
    return ReconfSequence(start=members_i, steps=steps)


def _swap(s: FeasibleSet, out: int, into: int) -> FeasibleSet:
    return tuple(sorted(set(s) - {out} | {into}))
