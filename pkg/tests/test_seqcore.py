import pytest
from hypothesis import given
from hypothesis import strategies as st

from debruijnkit import (
    BalanceMode,
    CyclicSequence,
    FormatError,
    Parameters,
    ResourceGuardError,
    balance,
    canonical_rotation,
    complement,
    feasible,
    verify,
    window_at,
    window_histogram,
)

BUILTIN_52 = "0000011101010010001011001101111100000101101111101001"

bit_strings = st.text(alphabet="01", min_size=1, max_size=64)


def seq(bits: str) -> CyclicSequence:
    return CyclicSequence(bits)


class TestCyclicSequence:
    def test_rejects_empty(self):
        with pytest.raises(FormatError):
            CyclicSequence("")

    def test_rejects_non_bits(self):
        with pytest.raises(FormatError):
            CyclicSequence("0102")
        with pytest.raises(FormatError):
            CyclicSequence("01 10")

    def test_bit_is_cyclic(self):
        s = seq("0110")
        assert [s.bit(i) for i in range(8)] == [0, 1, 1, 0, 0, 1, 1, 0]
        assert s.bit(-1) == 0

    def test_rotate(self):
        assert seq("0110").rotate(1).bits == "1100"
        assert seq("0110").rotate(4).bits == "0110"
        assert seq("0110").rotate(-1).bits == "0011"


class TestWindowAt:
    def test_wraparound(self):
        assert window_at(seq("0110"), 3, 2) == 0b00

    def test_builtin_sequence_head(self):
        assert window_at(seq(BUILTIN_52), 0, 5) == 0b00000

    def test_periodic_extension_past_length(self):
        assert window_at(seq("01"), 0, 5) == 0b01010

    def test_packing_is_most_significant_first(self):
        assert window_at(seq("110"), 0, 3) == 0b110

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            window_at(seq("01"), 2, 1)
        with pytest.raises(IndexError):
            window_at(seq("01"), -1, 1)

    def test_bad_window_length(self):
        with pytest.raises(ValueError):
            window_at(seq("01"), 0, 0)


class TestWindowHistogram:
    def test_order_two_de_bruijn_cycle(self):
        h = window_histogram(seq("0011"), 2)
        assert h.counts == {0b00: 1, 0b01: 1, 0b11: 1, 0b10: 1}

    def test_period_two_string(self):
        h = window_histogram(seq("0101"), 2)
        assert h.counts == {0b01: 2, 0b10: 2}

    def test_builtin_sequence_multiplicities(self):
        h = window_histogram(seq(BUILTIN_52), 5)
        assert h.max_multiplicity() == 2
        spread = sorted(h.counts.values())
        assert spread.count(1) == 12
        assert spread.count(2) == 20

    def test_total_is_length(self):
        assert window_histogram(seq(BUILTIN_52), 5).total() == 52

    def test_guard(self):
        with pytest.raises(ResourceGuardError):
            window_histogram(seq("01"), 31)

    @given(bit_strings, st.integers(min_value=1, max_value=8))
    def test_counts_sum_to_length(self, bits, l):
        assert window_histogram(seq(bits), l).total() == len(bits)

    @given(bit_strings, st.integers(min_value=1, max_value=6), st.integers(0, 63))
    def test_rotation_invariance(self, bits, l, offset):
        s = seq(bits)
        assert window_histogram(s, l).counts == window_histogram(s.rotate(offset), l).counts


class TestBalance:
    def test_tiny(self):
        r = balance(seq("01"))
        assert (r.zeros, r.ones, r.imbalance) == (1, 1, 0)

    def test_builtin_sequence(self):
        r = balance(seq(BUILTIN_52))
        assert (r.zeros, r.ones) == (26, 26)

    def test_positive_imbalance(self):
        assert balance(seq("001")).imbalance == 1

    @given(bit_strings)
    def test_counts_sum(self, bits):
        r = balance(seq(bits))
        assert r.zeros + r.ones == len(bits)


class TestVerify:
    def test_builtin_sequence_passes(self):
        assert verify(seq(BUILTIN_52), 5, 2, BalanceMode.BALANCED).ok

    def test_repeated_window_fails(self):
        report = verify(seq("0101"), 2, 1, BalanceMode.BALANCED)
        assert not report.ok
        assert report.max_multiplicity == 2
        assert report.worst_window_text() == "01"

    def test_classical_order_two_passes(self):
        assert verify(seq("0011"), 2, 1, BalanceMode.BALANCED).ok

    def test_balance_modes(self):
        s = seq("001")
        assert not verify(s, 2, 2, BalanceMode.BALANCED).ok
        assert verify(s, 2, 2, BalanceMode.ALMOST_BALANCED).ok
        assert verify(s, 2, 2, BalanceMode.UNCONSTRAINED).ok
        assert verify(seq("0001"), 2, 2, BalanceMode.ALMOST_BALANCED).ok is False

    def test_record_shape(self):
        record = verify(seq(BUILTIN_52), 5, 2).as_record()
        assert record == {
            "pass": True,
            "max_multiplicity": 2,
            "worst_window": "00000",
            "zeros": 26,
            "ones": 26,
        }

    @given(bit_strings, st.integers(1, 5), st.integers(1, 6))
    def test_monotone_in_k(self, bits, l, k):
        s = seq(bits)
        if verify(s, l, k, BalanceMode.BALANCED).ok:
            assert verify(s, l, k + 1, BalanceMode.BALANCED).ok


class TestFeasible:
    def test_card_stack_parameters(self):
        assert feasible(Parameters(52, 5, 2), BalanceMode.BALANCED).ok

    def test_pigeonhole_violation(self):
        f = feasible(Parameters(10, 2, 2), BalanceMode.BALANCED)
        assert not f.ok
        assert "k < n/2^l" in f.reason

    def test_odd_length_almost(self):
        assert feasible(Parameters(7, 3, 1), BalanceMode.ALMOST_BALANCED).ok

    def test_odd_length_balanced(self):
        f = feasible(Parameters(7, 3, 1), BalanceMode.BALANCED)
        assert not f.ok
        assert "odd" in f.reason

    def test_unconstrained_only_needs_pigeonhole(self):
        assert feasible(Parameters(7, 3, 1), BalanceMode.UNCONSTRAINED).ok
        assert not feasible(Parameters(9, 3, 1), BalanceMode.UNCONSTRAINED).ok


class TestCanonicalRotation:
    def test_examples(self):
        assert canonical_rotation(seq("1100")).bits == "0011"
        assert canonical_rotation(seq("01")).bits == "01"

    def test_five_bit_example_against_exhaustive_minimum(self):
        s = "10110"
        rotations = {(s + s)[i : i + 5] for i in range(5)}
        assert min(rotations) == "01011"
        assert canonical_rotation(seq(s)).bits == "01011"

    @given(bit_strings, st.integers(0, 63))
    def test_constant_on_orbit_and_member(self, bits, offset):
        s = seq(bits)
        canon = canonical_rotation(s)
        assert canonical_rotation(s.rotate(offset)) == canon
        assert canon.bits in {s.rotate(i).bits for i in range(len(bits))}

    @given(bit_strings)
    def test_idempotent(self, bits):
        c = canonical_rotation(seq(bits))
        assert canonical_rotation(c) == c


class TestComplement:
    def test_example(self):
        assert complement(seq("001")).bits == "110"

    @given(bit_strings)
    def test_involution(self, bits):
        s = seq(bits)
        assert complement(complement(s)) == s

    @given(bit_strings, st.integers(1, 6))
    def test_histogram_symmetry(self, bits, l):
        s = seq(bits)
        h = window_histogram(s, l)
        hc = window_histogram(complement(s), l)
        mask = (1 << l) - 1
        assert hc.counts == {w ^ mask: c for w, c in h.counts.items()}
        assert balance(complement(s)).imbalance == -balance(s).imbalance

    def test_verification_equivalence_exhaustive(self):
        # every string of length <= 10, all balance modes, at (l, k) = (3, 2)
        for n in range(1, 11):
            for x in range(1 << n):
                s = seq(format(x, f"0{n}b"))
                for mode in BalanceMode:
                    assert verify(s, 3, 2, mode).ok == verify(complement(s), 3, 2, mode).ok
