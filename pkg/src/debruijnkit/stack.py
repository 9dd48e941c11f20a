"""The 52-card color-stack application: card model, a built-in stack,
stack validation, crib-sheet building, signal lookup, and the cyclic reveal.

A stack pairs a (52, 5, 2) balanced sequence with 52 distinct cards so that
a card is red exactly where its bit is 0. Five spectators signalling their
card colors then spell out the 5-bit window at the cut position, which the
crib sheet resolves to at most two candidate cards.
"""

from dataclasses import dataclass
from typing import Mapping

from .errors import FormatError
from .seqcore import BalanceMode, CyclicSequence, verify, window_at

RANKS = ("A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K")
SUITS = ("H", "D", "C", "S")
SUIT_NAMES = {"H": "hearts", "D": "diamonds", "C": "clubs", "S": "spades"}
RED_SUITS = ("H", "D")

DECK_SIZE = 52
WINDOW_LENGTH = 5
MAX_WINDOW_REPEATS = 2


class InvalidStackError(ValueError):
    """The stack breaks a structural invariant (reported by validate_stack)."""


class ImpossibleSignalError(LookupError):
    """The signalled color window never occurs in this stack's sequence."""


@dataclass(frozen=True)
class Card:
    rank: str
    suit: str

    def __post_init__(self):
        if self.rank not in RANKS:
            raise FormatError(f"unknown rank {self.rank!r}")
        if self.suit not in SUITS:
            raise FormatError(f"unknown suit {self.suit!r}")

    @classmethod
    def from_code(cls, code: str) -> "Card":
        """Parse 'AH', '10D', 'KS': rank (10 spelled out) then suit letter."""
        if not isinstance(code, str) or len(code) < 2:
            raise FormatError(f"bad card code {code!r}")
        return cls(code[:-1], code[-1])

    @property
    def code(self) -> str:
        return self.rank + self.suit

    @property
    def is_red(self) -> bool:
        return self.suit in RED_SUITS

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class Stack:
    """A 52-bit sequence with one card per position.

    The constructor only enforces the shapes; semantic invariants (distinct
    cards, verified sequence, color/bit agreement) are checked by
    validate_stack so that broken stacks can be represented and reported on.
    """

    sequence: CyclicSequence
    cards: tuple[Card, ...]

    def __post_init__(self):
        if len(self.sequence) != DECK_SIZE:
            raise ValueError(f"stack sequence must have {DECK_SIZE} bits")
        if len(self.cards) != DECK_SIZE:
            raise ValueError(f"stack must have {DECK_SIZE} cards")


_BUILTIN_BITS = "0000011101010010001011001101111100000101101111101001"

_BUILTIN_CARDS = (
    "AH 7H 3D QD 2D KS 8S 10S 2H 7C KD 3C 5D 10D 6C 6H 8D 9H QC JH JS 5C 3H QH AC 2C "
    "4D 5S 9S 10C 7S 4C AD 7D 6D 8H 9D QS 4H 2S 6S JD 9C KC 8C JC 3S 5H AS 10H KH 4S"
)


def builtin_stack() -> Stack:
    """The stack shipped with the toolkit, a known (52, 5, 2) arrangement.

    Stored as literal data: the card-to-position assignment is a free choice
    not derivable from the sequence, so it is never reconstructed.
    """
    cards = tuple(Card.from_code(code) for code in _BUILTIN_CARDS.split())
    return Stack(CyclicSequence(_BUILTIN_BITS), cards)


@dataclass(frozen=True)
class StackReport:
    ok: bool
    problems: tuple[str, ...]


def validate_stack(stack: Stack) -> StackReport:
    """Audit every stack invariant; violations are report content, not errors."""
    problems = []
    seen: set[Card] = set()
    for i, card in enumerate(stack.cards):
        if card in seen:
            problems.append(f"duplicate card {card} at position {i}")
        seen.add(card)
    report = verify(
        stack.sequence, WINDOW_LENGTH, MAX_WINDOW_REPEATS, BalanceMode.BALANCED
    )
    if not report.ok:
        problems.append(
            f"sequence fails the ({DECK_SIZE},{WINDOW_LENGTH},{MAX_WINDOW_REPEATS}) "
            f"balanced check (max multiplicity {report.max_multiplicity}, "
            f"zeros {report.balance.zeros}, ones {report.balance.ones})"
        )
    for i in range(DECK_SIZE):
        want_red = stack.sequence.bit(i) == 0
        if stack.cards[i].is_red != want_red:
            problems.append(
                f"color mismatch at position {i}: bit {stack.sequence.bit(i)} "
                f"vs card {stack.cards[i]}"
            )
    return StackReport(not problems, tuple(problems))


def auto_stack(sequence: CyclicSequence) -> Stack:
    """Assign a fresh deck to a valid sequence: hearts then diamonds (ace to
    king) onto the 0 positions in order, clubs then spades onto the 1s."""
    if len(sequence) != DECK_SIZE:
        raise InvalidStackError(f"sequence must have {DECK_SIZE} bits")
    report = verify(sequence, WINDOW_LENGTH, MAX_WINDOW_REPEATS, BalanceMode.BALANCED)
    if not report.ok:
        raise InvalidStackError(
            f"sequence does not verify as ({DECK_SIZE},{WINDOW_LENGTH},"
            f"{MAX_WINDOW_REPEATS}) balanced"
        )
    reds = [Card(rank, suit) for suit in ("H", "D") for rank in RANKS]
    blacks = [Card(rank, suit) for suit in ("C", "S") for rank in RANKS]
    cards = []
    ri = bi = 0
    for i in range(DECK_SIZE):
        if sequence.bit(i) == 0:
            cards.append(reds[ri])
            ri += 1
        else:
            cards.append(blacks[bi])
            bi += 1
    return Stack(sequence, tuple(cards))


@dataclass(frozen=True)
class CribSheet:
    """Performer lookup data: window word -> candidate cards (in deck-position
    order), plus the cyclic deck order itself."""

    name: str
    sequence: CyclicSequence
    table: Mapping[int, tuple[Card, ...]]
    order: tuple[Card, ...]

    def window_text(self, window: int) -> str:
        return format(window, f"0{WINDOW_LENGTH}b")

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "sequence": str(self.sequence),
            "table": {
                self.window_text(w): [c.code for c in row]
                for w, row in self.table.items()
            },
            "order": [c.code for c in self.order],
        }

    @classmethod
    def from_json_dict(cls, doc: object) -> "CribSheet":
        """Parse and strictly validate the crib JSON schema."""
        if not isinstance(doc, dict):
            raise FormatError("crib document must be a JSON object")
        name = doc.get("name")
        if not isinstance(name, str) or not name:
            raise FormatError("crib 'name' must be a nonempty string")
        sequence_text = doc.get("sequence")
        if not isinstance(sequence_text, str):
            raise FormatError("crib 'sequence' must be a string of bits")
        sequence = CyclicSequence(sequence_text)
        if len(sequence) != DECK_SIZE:
            raise FormatError(f"crib 'sequence' must have {DECK_SIZE} bits")
        raw_order = doc.get("order")
        if not isinstance(raw_order, list) or len(raw_order) != DECK_SIZE:
            raise FormatError(f"crib 'order' must list exactly {DECK_SIZE} cards")
        order = tuple(Card.from_code(c) for c in raw_order)
        if len(set(order)) != DECK_SIZE:
            raise FormatError("crib 'order' contains duplicate cards")
        raw_table = doc.get("table")
        if not isinstance(raw_table, dict) or not raw_table:
            raise FormatError("crib 'table' must be a nonempty object")
        table: dict[int, tuple[Card, ...]] = {}
        used: set[Card] = set()
        for key, row in raw_table.items():
            if (
                not isinstance(key, str)
                or len(key) != WINDOW_LENGTH
                or key.strip("01")
            ):
                raise FormatError(
                    f"crib table key {key!r} is not a {WINDOW_LENGTH}-bit word"
                )
            if not isinstance(row, list) or not 1 <= len(row) <= 2:
                raise FormatError(f"crib table row {key!r} must hold 1 or 2 cards")
            cards = tuple(Card.from_code(c) for c in row)
            for card in cards:
                if card in used:
                    raise FormatError(f"card {card} appears twice in the crib table")
                used.add(card)
            table[int(key, 2)] = cards
        return cls(name, sequence, table, order)

    def render_text(self) -> str:
        """Two-part plain-text crib: the window table, then the cyclic order."""
        rows = [
            f"{self.window_text(w)}: {', '.join(c.code for c in row)}"
            for w, row in sorted(self.table.items())
        ]
        order_line = " ".join(c.code for c in self.order)
        return "\n".join(rows) + "\n\n" + order_line


def crib(stack: Stack, name: str = "stack") -> CribSheet:
    """Build the crib sheet of a valid stack.

    table[w] holds the cards whose deck positions carry window w, in
    ascending position order; the order list is the deck itself.
    """
    report = validate_stack(stack)
    if not report.ok:
        raise InvalidStackError("invalid stack: " + "; ".join(report.problems))
    rows: dict[int, list[Card]] = {}
    for i in range(DECK_SIZE):
        w = window_at(stack.sequence, i, WINDOW_LENGTH)
        rows.setdefault(w, []).append(stack.cards[i])
    table = {w: tuple(cards) for w, cards in sorted(rows.items())}
    return CribSheet(name, stack.sequence, table, stack.cards)


@dataclass(frozen=True)
class ColorSignal:
    """Five R/B colors, spectator 1 first; R maps to bit 0, B to bit 1."""

    colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.colors) != WINDOW_LENGTH:
            raise FormatError(
                f"need exactly {WINDOW_LENGTH} colors, got {len(self.colors)}"
            )
        if any(c not in ("R", "B") for c in self.colors):
            raise FormatError("colors must be 'R' or 'B'")

    @classmethod
    def from_text(cls, text: str) -> "ColorSignal":
        return cls(tuple(text.strip().upper()))

    @property
    def window(self) -> int:
        word = 0
        for c in self.colors:
            word = (word << 1) | (c == "B")
        return word


@dataclass(frozen=True)
class LookupResult:
    window: int
    candidates: tuple[Card, ...]
    question: str | None


def lookup(sheet: CribSheet, signal: ColorSignal) -> LookupResult:
    """Resolve a color signal to its candidate cards.

    Two candidates come with a disambiguation question about the first
    (earlier-position) one: its suit when the suits differ, its rank
    otherwise.
    """
    w = signal.window
    row = sheet.table.get(w)
    if row is None:
        raise ImpossibleSignalError(
            f"impossible signal: window {format(w, f'0{WINDOW_LENGTH}b')} "
            "does not occur in this stack"
        )
    if len(row) == 1:
        return LookupResult(w, row, None)
    first, second = row
    attribute = SUIT_NAMES[first.suit] if first.suit != second.suit else first.rank
    return LookupResult(w, row, attribute + "?")


def reveal(sheet: CribSheet, first_card: Card) -> tuple[Card, ...]:
    """The five held cards: the resolved first card and the next four in the
    cyclic deck order, wrapping around if necessary."""
    try:
        i = sheet.order.index(first_card)
    except ValueError:
        raise ValueError(f"card {first_card} is not in the stack") from None
    n = len(sheet.order)
    return tuple(sheet.order[(i + j) % n] for j in range(WINDOW_LENGTH))
