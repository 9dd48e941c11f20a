"""The rank-l de Bruijn graph, kept implicit: vertices are (l-1)-bit words,
edges are l-bit words, and all structure is label arithmetic. Provides edge
coloring, Eulerian circuits, circuit/sequence conversion, the rank-raising
lift, and a dense edge-subset type with connectivity queries."""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import ResourceGuardError
from .seqcore import CyclicSequence, window_at

# Full-graph operations allocate 2^l entries; beyond this, refuse.
RANK_GUARD = 24


class EdgeColor(Enum):
    RED = "red"  # last bit 0
    BLUE = "blue"  # last bit 1


class MalformedCircuitError(ValueError):
    """Edge list is not a closed trail of distinct edges."""


def check_rank(l: int) -> None:
    if l < 2:
        raise ValueError(f"rank must be >= 2, got {l}")
    if l > RANK_GUARD:
        raise ResourceGuardError(f"rank {l} exceeds the guard {RANK_GUARD}")


def vertex_count(l: int) -> int:
    return 1 << (l - 1)


def edge_count(l: int) -> int:
    return 1 << l


def _check_edge(e: int, l: int) -> None:
    if not 0 <= e < (1 << l):
        raise ValueError(f"edge label {e} out of range for rank {l}")


def _check_vertex(v: int, l: int) -> None:
    if not 0 <= v < (1 << (l - 1)):
        raise ValueError(f"vertex label {v} out of range for rank {l}")


def edge_endpoints(e: int, l: int) -> tuple[int, int]:
    """(tail, head) of an edge: its high l-1 bits and its low l-1 bits."""
    _check_edge(e, l)
    return e >> 1, e & ((1 << (l - 1)) - 1)


def edge_color(e: int) -> EdgeColor:
    return EdgeColor.RED if e & 1 == 0 else EdgeColor.BLUE


def out_edges(v: int, l: int) -> tuple[int, int]:
    """The two out-edges of v: append a bit (v0 is red, v1 is blue)."""
    _check_vertex(v, l)
    return (v << 1, (v << 1) | 1)


def in_edges(v: int, l: int) -> tuple[int, int]:
    """The two in-edges of v: prepend a bit (0v, then 1v). Both end with v's
    low bit, so they always share a color."""
    _check_vertex(v, l)
    return (v, v | (1 << (l - 1)))


@dataclass(frozen=True)
class DeBruijnGraph:
    """The graph of a given rank; fully determined by the rank, so nothing
    else is stored."""

    rank: int

    def __post_init__(self):
        check_rank(self.rank)

    @property
    def vertex_count(self) -> int:
        return vertex_count(self.rank)

    @property
    def edge_count(self) -> int:
        return edge_count(self.rank)

    def full_edge_set(self) -> "EdgeSet":
        return EdgeSet.full(self.rank)


@dataclass(frozen=True)
class Circuit:
    """Closed walk of distinct edges: consecutive heads and tails chain, and
    the last edge chains back to the first."""

    rank: int
    edges: tuple[int, ...]

    def __post_init__(self):
        check_rank(self.rank)
        if not self.edges:
            raise MalformedCircuitError("circuit must contain at least one edge")
        head_mask = (1 << (self.rank - 1)) - 1
        seen = set()
        for e in self.edges:
            if not 0 <= e < (1 << self.rank):
                raise MalformedCircuitError(
                    f"edge label {e} out of range for rank {self.rank}"
                )
            if e in seen:
                raise MalformedCircuitError(f"edge {e:0{self.rank}b} repeats")
            seen.add(e)
        for i, e in enumerate(self.edges):
            nxt = self.edges[(i + 1) % len(self.edges)]
            if (e & head_mask) != (nxt >> 1):
                raise MalformedCircuitError(
                    f"edges {e:0{self.rank}b} -> {nxt:0{self.rank}b} do not chain"
                )

    def __len__(self) -> int:
        return len(self.edges)

    def color_counts(self) -> tuple[int, int]:
        """(red, blue) edge counts."""
        blue = sum(e & 1 for e in self.edges)
        return len(self.edges) - blue, blue

    @property
    def imbalance(self) -> int:
        """red minus blue; equals the zero/one imbalance of the sequence."""
        red, blue = self.color_counts()
        return red - blue


class EdgeSet:
    """Subset of the edges of the rank-l graph, as a dense membership table.

    Supports exact degree, color, and connectivity queries. Mutation
    (add/remove) must only happen from a single owner; treat shared
    instances as read-only.
    """

    __slots__ = ("rank", "_member", "_size")

    def __init__(self, rank: int, edges: Iterable[int] = ()):
        check_rank(rank)
        self.rank = rank
        self._member = bytearray(1 << rank)
        self._size = 0
        for e in edges:
            self.add(e)

    @classmethod
    def full(cls, rank: int) -> "EdgeSet":
        es = cls(rank)
        es._member = bytearray(b"\x01" * (1 << rank))
        es._size = 1 << rank
        return es

    def copy(self) -> "EdgeSet":
        es = EdgeSet.__new__(EdgeSet)
        es.rank = self.rank
        es._member = bytearray(self._member)
        es._size = self._size
        return es

    def __contains__(self, e: int) -> bool:
        return 0 <= e < len(self._member) and self._member[e] != 0

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[int]:
        member = self._member
        return (e for e in range(len(member)) if member[e])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.rank == other.rank and self._member == other._member

    def __repr__(self) -> str:
        labels = ",".join(format(e, f"0{self.rank}b") for e in self)
        return f"EdgeSet(rank={self.rank}, {{{labels}}})"

    def add(self, e: int) -> None:
        _check_edge(e, self.rank)
        if not self._member[e]:
            self._member[e] = 1
            self._size += 1

    def remove(self, e: int) -> None:
        _check_edge(e, self.rank)
        if not self._member[e]:
            raise KeyError(f"edge {e:0{self.rank}b} not in set")
        self._member[e] = 0
        self._size -= 1

    def out_degree(self, v: int) -> int:
        a, b = out_edges(v, self.rank)
        return (a in self) + (b in self)

    def in_degree(self, v: int) -> int:
        a, b = in_edges(v, self.rank)
        return (a in self) + (b in self)

    def color_counts(self) -> tuple[int, int]:
        """(red, blue) edge counts."""
        blue = sum(1 for e in self if e & 1)
        return self._size - blue, blue


def edge_set_difference(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    """Edges of a that are not in b (the ranks must agree)."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    out = EdgeSet(a.rank)
    for e in a:
        if e not in b:
            out.add(e)
    return out


def components(es: EdgeSet) -> list[EdgeSet]:
    """Partition the edges into connected components (edges taken as
    undirected links, over vertices of positive degree only).

    For the Eulerian pieces handled here weak and strong connectivity
    coincide. Components are ordered by their least edge label.
    """
    head_mask = (1 << (es.rank - 1)) - 1
    parent = list(range(1 << (es.rank - 1)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in es:
        ra, rb = find(e >> 1), find(e & head_mask)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, EdgeSet] = {}
    for e in es:
        root = find(e >> 1)
        if root not in groups:
            groups[root] = EdgeSet(es.rank)
        groups[root].add(e)
    return list(groups.values())


def euler_circuit_in(es: EdgeSet) -> Circuit:
    """Hierholzer's algorithm over exactly the edges of `es`, which must form
    one connected piece with in-degree equal to out-degree everywhere.

    Deterministic: starts at the least vertex with an outgoing edge and,
    when both out-edges are unused, consumes the red (append-0) edge first.
    """
    if len(es) == 0:
        raise MalformedCircuitError("empty edge set has no circuit")
    l = es.rank
    head_mask = (1 << (l - 1)) - 1
    member = es._member
    consumed = bytearray(1 << l)
    start = next(iter(es)) >> 1  # least edge's tail = least vertex with an out-edge
    stack = [start]
    walk_reversed = []
    while stack:
        v = stack[-1]
        e = v << 1
        if member[e] and not consumed[e]:
            consumed[e] = 1
            stack.append(e & head_mask)
        elif member[e | 1] and not consumed[e | 1]:
            consumed[e | 1] = 1
            stack.append((e | 1) & head_mask)
        else:
            walk_reversed.append(stack.pop())
    if len(walk_reversed) != len(es) + 1:
        raise MalformedCircuitError(
            "edge set is not a single connected Eulerian component"
        )
    walk = walk_reversed[::-1]
    edges = tuple((walk[i] << 1) | (walk[i + 1] & 1) for i in range(len(walk) - 1))
    return Circuit(l, edges)


def eulerian_circuit(l: int) -> Circuit:
    """A circuit traversing all 2^l edges exactly once (the graph has equal
    in- and out-degrees everywhere and is connected, so one always exists)."""
    check_rank(l)
    return euler_circuit_in(EdgeSet.full(l))


def circuit_to_sequence(c: Circuit) -> CyclicSequence:
    """The sequence whose bit i is the last bit of edge i.

    With this offset the cyclic l-windows of the result, read as the window
    ending at each position, are exactly the circuit's edge labels; bit
    colors line up with edge colors position by position.
    """
    return CyclicSequence("".join("01"[e & 1] for e in c.edges))


def sequence_to_circuit(s: CyclicSequence, l: int) -> Circuit:
    """Inverse of circuit_to_sequence: edge i is the cyclic window ending at
    position i. Fails if any window repeats (the walk would reuse an edge)."""
    check_rank(l)
    n = len(s)
    edges = tuple(window_at(s, (i - (l - 1)) % n, l) for i in range(n))
    if len(set(edges)) != n:
        raise MalformedCircuitError(
            f"some length-{l} window repeats; the sequence is not a rank-{l} circuit"
        )
    return Circuit(l, edges)


def lift_circuit(c: Circuit) -> Circuit:
    """Rewrite a rank-l circuit as a rank-(l+1) cycle.

    Edge labels become vertex labels one rank up; consecutive circuit edges
    are adjacent there, and distinctness of the circuit's edges makes the
    image vertex-simple. Length and color counts are preserved.
    """
    check_rank(c.rank + 1)
    n = len(c.edges)
    lifted = tuple(
        (c.edges[i] << 1) | (c.edges[(i + 1) % n] & 1) for i in range(n)
    )
    return Circuit(c.rank + 1, lifted)


def circuit_to_text(c: Circuit) -> str:
    """Debug serialization: one binary edge label per line."""
    return "\n".join(format(e, f"0{c.rank}b") for e in c.edges)
