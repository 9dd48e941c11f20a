"""Cyclic bit sequences: window statistics, balance accounting, verification,
and the existence test for the (n, l, k) window-bound problem."""

from dataclasses import dataclass
from enum import Enum

from .errors import FormatError, ResourceGuardError

# Window lengths above this would need 2^l distinct word keys; reject rather
# than silently degrade.
HISTOGRAM_GUARD = 30

_COMPLEMENT = str.maketrans("01", "10")


class BalanceMode(Enum):
    """Which balance condition a sequence must satisfy, if any."""

    BALANCED = "balanced"
    ALMOST_BALANCED = "almost"
    UNCONSTRAINED = "any"


@dataclass(frozen=True)
class CyclicSequence:
    """A fixed-length cyclic string of bits, stored as plain '0'/'1' text.

    The text form is the interchange format everywhere (CLI, JSON, tests).
    Values are immutable and safe to share between threads.
    """

    bits: str

    def __post_init__(self):
        if not self.bits:
            raise FormatError("sequence must contain at least one bit")
        if self.bits.strip("01"):
            raise FormatError(
                f"sequence may only contain '0' and '1': {self.bits[:40]!r}"
            )

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def bit(self, i: int) -> int:
        """Bit at cyclic position i (any integer index is reduced mod n)."""
        return int(self.bits[i % len(self.bits)])

    def rotate(self, offset: int) -> "CyclicSequence":
        """The rotation that moves position `offset` to the front."""
        o = offset % len(self.bits)
        return CyclicSequence(self.bits[o:] + self.bits[:o])


@dataclass(frozen=True)
class Parameters:
    """(n, l, k): sequence length, window length, max window multiplicity."""

    n: int
    l: int
    k: int

    def __post_init__(self):
        for name, value in (("n", self.n), ("l", self.l), ("k", self.k)):
            if value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value}")


@dataclass(frozen=True)
class BalanceReport:
    zeros: int
    ones: int

    @property
    def imbalance(self) -> int:
        """zeros minus ones: 0 for balanced, +-1 for almost-balanced."""
        return self.zeros - self.ones


@dataclass(frozen=True)
class WindowHistogram:
    """Occurrence counts of the cyclic length-l windows of a sequence.

    Only windows that actually occur have keys; their counts sum to the
    sequence length.
    """

    window_length: int
    counts: dict[int, int]

    def __getitem__(self, word: int) -> int:
        return self.counts.get(word, 0)

    def max_multiplicity(self) -> int:
        return max(self.counts.values())

    def worst_window(self) -> int:
        """Smallest window word achieving the maximum multiplicity."""
        top = self.max_multiplicity()
        return min(w for w, c in self.counts.items() if c == top)

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a window-bound plus balance check (failure is data, not an
    error)."""

    ok: bool
    max_multiplicity: int
    worst_window: int
    window_length: int
    k: int
    mode: BalanceMode
    balance: BalanceReport

    def worst_window_text(self) -> str:
        return format(self.worst_window, f"0{self.window_length}b")

    def as_record(self) -> dict:
        """Flat serializable record of the report."""
        return {
            "pass": self.ok,
            "max_multiplicity": self.max_multiplicity,
            "worst_window": self.worst_window_text(),
            "zeros": self.balance.zeros,
            "ones": self.balance.ones,
        }


@dataclass(frozen=True)
class Feasibility:
    ok: bool
    reason: str | None = None


def window_at(s: CyclicSequence, i: int, l: int) -> int:
    """Length-l window starting at position i, packed most-significant-first
    (bit i of the sequence is the high bit of the word).

    The sequence is read cyclically; when l exceeds len(s) the window keeps
    reading the periodic repetition. That extension makes the operation total
    for every (s, l) and is consistent with circuits shorter than the rank of
    the graph they live in.
    """
    n = len(s)
    if not 0 <= i < n:
        raise IndexError(f"position {i} out of range for length {n}")
    if l < 1:
        raise ValueError(f"window length must be >= 1, got {l}")
    word = 0
    for j in range(i, i + l):
        word = (word << 1) | s.bit(j)
    return word


def window_histogram(s: CyclicSequence, l: int) -> WindowHistogram:
    """Count every cyclic length-l window of s (one window per position)."""
    if l > HISTOGRAM_GUARD:
        raise ResourceGuardError(
            f"window length {l} exceeds the histogram guard {HISTOGRAM_GUARD}"
        )
    counts: dict[int, int] = {}
    word = window_at(s, 0, l)
    mask = (1 << l) - 1
    for i in range(len(s)):
        counts[word] = counts.get(word, 0) + 1
        word = ((word << 1) & mask) | s.bit(i + l)
    return WindowHistogram(l, counts)


def balance(s: CyclicSequence) -> BalanceReport:
    zeros = s.bits.count("0")
    return BalanceReport(zeros, len(s) - zeros)


def _balance_ok(mode: BalanceMode, report: BalanceReport) -> bool:
    if mode is BalanceMode.BALANCED:
        return report.imbalance == 0
    if mode is BalanceMode.ALMOST_BALANCED:
        return abs(report.imbalance) <= 1
    return True


def verify(
    s: CyclicSequence, l: int, k: int, mode: BalanceMode = BalanceMode.BALANCED
) -> VerificationReport:
    """Check that every cyclic l-window occurs at most k times and that the
    zero/one counts satisfy the mode's balance condition."""
    hist = window_histogram(s, l)
    bal = balance(s)
    top = hist.max_multiplicity()
    ok = top <= k and _balance_ok(mode, bal)
    return VerificationReport(ok, top, hist.worst_window(), l, k, mode, bal)


def feasible(p: Parameters, mode: BalanceMode = BalanceMode.BALANCED) -> Feasibility:
    """Existence test for the requested parameters.

    Balanced needs n even and k*2^l >= n; the other modes need only the
    counting bound (there are 2^l possible windows and n window positions).
    """
    if mode is BalanceMode.BALANCED and p.n % 2 != 0:
        return Feasibility(False, f"n is odd (n = {p.n}); a balanced sequence needs n even")
    if p.k * (1 << p.l) < p.n:
        return Feasibility(
            False,
            f"k < n/2^l ({p.k} * 2^{p.l} = {p.k * (1 << p.l)} < n = {p.n})",
        )
    return Feasibility(True)


def canonical_rotation(s: CyclicSequence) -> CyclicSequence:
    """Lexicographically least rotation: total, deterministic, and constant
    on each rotation orbit, so it canonically names the orbit."""
    doubled = s.bits + s.bits
    n = len(s)
    return CyclicSequence(min(doubled[i : i + n] for i in range(n)))


def complement(s: CyclicSequence) -> CyclicSequence:
    """Flip every bit. An involution; negates the imbalance and relabels the
    window histogram by bitwise complement with counts preserved."""
    return CyclicSequence(s.bits.translate(_COMPLEMENT))
