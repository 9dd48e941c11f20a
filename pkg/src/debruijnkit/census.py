"""Exhaustive enumeration of valid sequences at desk scale.

This is the independent check against the constructive generator: it never
consults the feasibility predicate, only the definition (window counts plus
bit counts), with exact pruning."""

from dataclasses import dataclass
from typing import Iterator

from .builder import generate
from .errors import ResourceGuardError
from .seqcore import (
    BalanceMode,
    CyclicSequence,
    Parameters,
    canonical_rotation,
    feasible,
    window_at,
)

ENUMERATION_GUARD = 28


@dataclass(frozen=True)
class CensusQuery:
    params: Parameters
    mode: BalanceMode = BalanceMode.BALANCED
    up_to_rotation: bool = False

    def __post_init__(self):
        if self.params.n > ENUMERATION_GUARD:
            raise ResourceGuardError(
                f"census length {self.params.n} exceeds the guard {ENUMERATION_GUARD}"
            )


@dataclass(frozen=True)
class CensusResult:
    count: int
    witnesses: tuple[CyclicSequence, ...] | None = None


def enumerate_sequences(query: CensusQuery) -> Iterator[CyclicSequence]:
    """Yield every valid sequence for the query, in ascending text order.

    Depth-first search over bit prefixes. A prefix dies as soon as a
    completed window exceeds k or the zero/one counts leave the reachable
    balance range; both prunes are exact necessary conditions, so the
    enumeration is complete and duplicate-free. With up_to_rotation, only
    sequences equal to their own canonical rotation are yielded, one per
    orbit.
    """
    n, l, k = query.params.n, query.params.l, query.params.k
    if query.mode is BalanceMode.BALANCED:
        if n % 2:
            return  # zeros = ones is unsatisfiable for odd n
        zmin = zmax = n // 2
    elif query.mode is BalanceMode.ALMOST_BALANCED:
        zmin, zmax = n // 2, (n + 1) // 2
    else:
        zmin, zmax = 0, n

    track = l <= n  # incremental window counting only once windows fit
    mask = (1 << l) - 1
    bits: list[str] = []
    counts: dict[int, int] = {}

    def leaf() -> Iterator[CyclicSequence]:
        s = CyclicSequence("".join(bits))
        if track:
            # Complete the l-1 windows that wrap past the end.
            added = []
            ok = True
            for i in range(max(n - l + 1, 1), n):
                w = window_at(s, i, l)
                c = counts.get(w, 0) + 1
                if c > k:
                    ok = False
                    break
                counts[w] = c
                added.append(w)
            for w in added:
                if counts[w] == 1:
                    del counts[w]
                else:
                    counts[w] -= 1
            if not ok:
                return
        else:
            local: dict[int, int] = {}
            for i in range(n):
                w = window_at(s, i, l)
                c = local.get(w, 0) + 1
                if c > k:
                    return
                local[w] = c
        if query.up_to_rotation and s.bits != canonical_rotation(s).bits:
            return
        yield s

    def rec(depth: int, zeros: int, word: int) -> Iterator[CyclicSequence]:
        if depth == n:
            yield from leaf()
            return
        remaining = n - depth - 1
        for b in ("0", "1"):
            z = zeros + (b == "0")
            if z > zmax or z + remaining < zmin:
                continue
            w = ((word << 1) | (b == "1")) & mask
            if track and depth + 1 >= l:
                c = counts.get(w, 0) + 1
                if c > k:
                    continue
                counts[w] = c
                bits.append(b)
                yield from rec(depth + 1, z, w)
                bits.pop()
                if c == 1:
                    del counts[w]
                else:
                    counts[w] = c - 1
            else:
                bits.append(b)
                yield from rec(depth + 1, z, w)
                bits.pop()

    yield from rec(0, 0, 0)


def count(query: CensusQuery, with_witnesses: bool = False) -> CensusResult:
    """Count valid sequences; materialize them only when asked."""
    if with_witnesses:
        witnesses = tuple(enumerate_sequences(query))
        return CensusResult(len(witnesses), witnesses)
    return CensusResult(sum(1 for _ in enumerate_sequences(query)))


def oracle_check(params: Parameters, mode: BalanceMode) -> bool:
    """Cross-validate the generator against exhaustive search.

    True when existence (by enumeration) matches the feasibility predicate
    and, for feasible parameters, the generated sequence's canonical
    rotation is among the enumerated representatives.
    """
    predicted = feasible(params, mode).ok
    query = CensusQuery(params, mode, up_to_rotation=True)
    first = next(iter(enumerate_sequences(query)), None)
    if predicted != (first is not None):
        return False
    if not predicted:
        return True
    target = canonical_rotation(generate(params, mode)).bits
    for s in enumerate_sequences(query):
        if s.bits == target:
            return True
        if s.bits > target:
            return False
    return False
