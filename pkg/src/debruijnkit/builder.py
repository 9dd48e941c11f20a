"""Constructive generator for (n, l, k) sequences with a prescribed
zero/one imbalance.

The circuit builder recurses on rank: explicit base circuits at rank 2,
rank-raising lifts for small lengths, and, for lengths past the halfway
point, removal of a lifted complementary cycle followed by reconnection
swaps. Multiplicity bounds past 1 come from appending aligned full Eulerian
blocks to the base sequence.
"""

from dataclasses import dataclass

from .errors import InfeasibleError, ResourceGuardError
from .graph import (
    RANK_GUARD,
    Circuit,
    EdgeSet,
    circuit_to_sequence,
    components,
    edge_endpoints,
    edge_set_difference,
    euler_circuit_in,
    eulerian_circuit,
    in_edges,
    lift_circuit,
    out_edges,
)
from .seqcore import (
    BalanceMode,
    CyclicSequence,
    Parameters,
    complement,
    feasible,
    verify,
    window_at,
)

LENGTH_GUARD = 1 << 24

# Circuits in the rank-2 graph (edges 00,01,10,11) by (length, red - blue).
_BASE_CIRCUITS = {
    (1, 1): (0b00,),
    (1, -1): (0b11,),
    (2, 0): (0b01, 0b10),
    (3, 1): (0b00, 0b01, 0b10),
    (3, -1): (0b11, 0b10, 0b01),
    (4, 0): (0b01, 0b11, 0b10, 0b00),
}


@dataclass(frozen=True)
class BuildRequest:
    """A validated generation request.

    target_imbalance is zeros minus ones: 0 exactly when n is even, +-1
    exactly when n is odd; the parameters must be feasible for the mode.
    """

    params: Parameters
    mode: BalanceMode = BalanceMode.BALANCED
    target_imbalance: int = 0

    def __post_init__(self):
        n = self.params.n
        delta = self.target_imbalance
        if n % 2 == 0 and delta != 0:
            raise ValueError(f"even n = {n} forces imbalance 0, got {delta:+d}")
        if n % 2 == 1 and delta not in (-1, 1):
            raise ValueError(f"odd n = {n} forces imbalance +1 or -1, got {delta}")
        feas = feasible(self.params, self.mode)
        if not feas.ok:
            raise InfeasibleError(feas.reason)


def base_circuit(n: int, delta: int) -> Circuit:
    """Length-n circuit in the rank-2 graph with red minus blue = delta
    (n in 1..4, delta matching n's parity)."""
    try:
        edges = _BASE_CIRCUITS[(n, delta)]
    except KeyError:
        raise ValueError(
            f"no rank-2 base circuit of length {n} with imbalance {delta}"
        ) from None
    return Circuit(2, edges)


def _forced_unique(candidates: list[int], kind: str, vertex: int) -> int:
    if len(candidates) != 1:
        raise RuntimeError(
            f"expected exactly one {kind} of vertex {vertex} in the pool, "
            f"found {len(candidates)}"
        )
    return candidates[0]


def merge_components(pool: EdgeSet, removed: EdgeSet) -> EdgeSet:
    """One reconnection swap.

    Scanning removed edges in ascending label order, pick the first edge
    e: v1 -> v2 whose endpoints lie in different components of `pool`. The
    out-edge e1 of v1 and the in-edge e2 of v2 inside the pool are then
    forced (each vertex has only two of either, and e occupies one slot),
    and the return edge e' from tail(e2) to head(e1) necessarily sits among
    the removed edges. Swapping {e1, e2} out and {e, e'} in preserves every
    vertex's in/out degree and the red/blue totals, and strictly reduces the
    component count. The forcedness and color claims are asserted at runtime
    rather than trusted.
    """
    l = pool.rank
    comps = components(pool)
    if len(comps) < 2:
        raise ValueError("pool is already connected; nothing to merge")
    comp_of: dict[int, int] = {}
    for idx, comp in enumerate(comps):
        for e in comp:
            ta, he = edge_endpoints(e, l)
            comp_of[ta] = idx
            comp_of[he] = idx
    crossing = None
    for e in removed:
        ta, he = edge_endpoints(e, l)
        a = comp_of.get(ta)
        b = comp_of.get(he)
        if a is not None and b is not None and a != b:
            crossing = e
            break
    if crossing is None:
        raise RuntimeError(
            "no removed edge crosses two components; connectivity invariant violated"
        )
    v1, v2 = edge_endpoints(crossing, l)
    e1 = _forced_unique([x for x in out_edges(v1, l) if x in pool], "out-edge", v1)
    e2 = _forced_unique([x for x in in_edges(v2, l) if x in pool], "in-edge", v2)
    u2 = edge_endpoints(e2, l)[0]
    ret = (u2 << 1) | (e1 & 1)
    if ret not in removed:
        raise RuntimeError(
            f"return edge {ret:0{l}b} is not among the removed edges"
        )
    # A red crossing edge forces e1 blue, e2 red, e' blue (and the mirror
    # pattern for a blue crossing edge).
    if (e1 & 1) == (crossing & 1) or (e2 & 1) != (crossing & 1) or (ret & 1) != (e1 & 1):
        raise RuntimeError("forced color pattern violated")
    out = pool.copy()
    out.remove(e1)
    out.remove(e2)
    out.add(crossing)
    out.add(ret)
    return out


def build_circuit(n: int, l: int, delta: int) -> Circuit:
    """Circuit of length n in the rank-l graph with red minus blue = delta.

    Recursion: rank 2 uses the base table; n = 2^l is the full Eulerian
    circuit; n <= 2^(l-1) lifts a circuit built one rank down; otherwise
    remove a lifted cycle of the complementary length 2^l - n (with the
    opposite imbalance) and merge the Eulerian remainder until connected.
    """
    if l < 2:
        raise ValueError(f"rank must be >= 2, got {l}")
    if l > RANK_GUARD:
        raise ResourceGuardError(f"rank {l} exceeds the guard {RANK_GUARD}")
    if not 1 <= n <= (1 << l):
        raise ValueError(f"need 1 <= n <= 2^{l}, got n = {n}")
    if abs(delta) > 1 or (n % 2 == 0) != (delta == 0):
        raise ValueError(f"imbalance {delta} incompatible with length {n}")
    if l == 2:
        return base_circuit(n, delta)
    if n == 1 << l:
        return eulerian_circuit(l)
    if n <= 1 << (l - 1):
        return lift_circuit(build_circuit(n, l - 1, delta))

    hole = lift_circuit(build_circuit((1 << l) - n, l - 1, -delta))
    full = EdgeSet.full(l)
    pool = full.copy()
    for e in hole.edges:
        pool.remove(e)
    removed = EdgeSet(l, hole.edges)
    while len(components(pool)) > 1:
        pool = merge_components(pool, removed)
        removed = edge_set_difference(full, pool)
    return euler_circuit_in(pool)


def _window_position(block: CyclicSequence, target: int, l: int) -> int:
    """Index of the unique cyclic window of `block` equal to `target`.

    The block is a full Eulerian sequence, so every l-bit window occurs
    exactly once and the alignment rotation always exists.
    """
    mask = (1 << l) - 1
    word = window_at(block, 0, l)
    for i in range(len(block)):
        if word == target:
            return i
        word = ((word << 1) & mask) | block.bit(i + l)
    raise RuntimeError("alignment window not found in Eulerian block")


def generate(
    params: Parameters,
    mode: BalanceMode = BalanceMode.BALANCED,
    imbalance: int | None = None,
) -> CyclicSequence:
    """Build a verified sequence of length n whose l-windows each occur at
    most k times, in the requested balance mode.

    Construction always targets the tight multiplicity ceil(n / 2^l): a
    circuit supplies the first n mod 2^l bits (or a full block), and every
    further block is the Eulerian sequence rotated so its leading l bits
    match the head of the sequence built so far, which adds every window
    exactly once. Odd lengths default to one extra zero; imbalance=-1 is
    served by complementing the +1 result. The output is re-verified against
    the caller's own k before being returned.
    """
    n, l, k = params.n, params.l, params.k
    if n > LENGTH_GUARD:
        raise ResourceGuardError(f"n = {n} exceeds the guard {LENGTH_GUARD}")
    if l > RANK_GUARD:
        raise ResourceGuardError(f"l = {l} exceeds the guard {RANK_GUARD}")
    if imbalance is None:
        imbalance = 0 if n % 2 == 0 else 1
    request = BuildRequest(params, mode, imbalance)

    if l == 1:
        # Windows are single bits; any string with at most k of each works,
        # and the alternating one is balanced by construction.
        bits = "01" * (n // 2) + ("0" if n % 2 else "")
        seq = CyclicSequence(bits)
    else:
        block_size = 1 << l
        k0 = -(-n // block_size)
        r = n - (k0 - 1) * block_size
        seq = circuit_to_sequence(build_circuit(r, l, 0 if n % 2 == 0 else 1))
        if k0 > 1:
            block = circuit_to_sequence(eulerian_circuit(l))
            offset = _window_position(block, window_at(seq, 0, l), l)
            aligned = block.rotate(offset)
            seq = CyclicSequence(seq.bits + aligned.bits * (k0 - 1))

    if request.target_imbalance == -1:
        seq = complement(seq)
    report = verify(seq, l, k, mode)
    if not report.ok:
        raise RuntimeError(
            f"internal error: construction for {params} failed post-verification"
        )
    return seq
