import random

import pytest

from debruijnkit import (
    BalanceMode,
    BuildRequest,
    EdgeSet,
    InfeasibleError,
    Parameters,
    ResourceGuardError,
    balance,
    base_circuit,
    build_circuit,
    canonical_rotation,
    circuit_to_sequence,
    complement,
    components,
    edge_set_difference,
    eulerian_circuit,
    generate,
    lift_circuit,
    merge_components,
    verify,
    window_histogram,
)

B = BalanceMode.BALANCED
A = BalanceMode.ALMOST_BALANCED
U = BalanceMode.UNCONSTRAINED


class TestBaseCircuits:
    @pytest.mark.parametrize(
        "n,delta,canonical",
        [
            (1, 1, "0"),
            (1, -1, "1"),
            (2, 0, "01"),
            (3, 1, "001"),
            (3, -1, "011"),
            (4, 0, "0011"),
        ],
    )
    def test_table(self, n, delta, canonical):
        c = base_circuit(n, delta)
        assert len(c) == n
        assert c.imbalance == delta
        assert canonical_rotation(circuit_to_sequence(c)).bits == canonical

    @pytest.mark.parametrize("n,delta", [(2, 1), (3, 0), (4, 1), (5, 1), (0, 0), (1, 0)])
    def test_incompatible_requests(self, n, delta):
        with pytest.raises(ValueError):
            base_circuit(n, delta)


class TestBuildCircuit:
    def test_six_in_rank_three(self):
        c = build_circuit(6, 3, 0)
        assert len(c) == 6 and c.imbalance == 0
        assert verify(circuit_to_sequence(c), 3, 1, B).ok

    @pytest.mark.parametrize("l", range(2, 11))
    def test_full_length_is_the_eulerian_circuit(self, l):
        c = build_circuit(1 << l, l, 0)
        assert len(c) == 1 << l
        assert sorted(c.edges) == list(range(1 << l))

    def test_lift_chain(self):
        c = build_circuit(2, 5, 0)
        assert len(c) == 2
        assert canonical_rotation(circuit_to_sequence(c)).bits == "01"

    def test_every_feasible_request_up_to_rank_six(self):
        for l in range(2, 7):
            for n in range(1, (1 << l) + 1):
                for delta in ([0] if n % 2 == 0 else [1, -1]):
                    c = build_circuit(n, l, delta)
                    assert len(c) == n
                    assert c.imbalance == delta
                    s = circuit_to_sequence(c)
                    assert verify(s, l, 1, U).ok
                    assert balance(s).imbalance == delta

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            build_circuit(5, 2, 1)  # n > 2^l
        with pytest.raises(ValueError):
            build_circuit(4, 3, 1)  # parity mismatch
        with pytest.raises(ValueError):
            build_circuit(3, 3, 0)  # parity mismatch
        with pytest.raises(ValueError):
            build_circuit(3, 3, 3)  # |delta| > 1
        with pytest.raises(ValueError):
            build_circuit(2, 1, 0)  # rank too small
        with pytest.raises(ResourceGuardError):
            build_circuit(2, 25, 0)

    def test_deterministic(self):
        assert build_circuit(11, 4, 1).edges == build_circuit(11, 4, 1).edges


class TestMergeComponents:
    def _fixture(self):
        # remove the lifted rank-2 Eulerian circuit (a 4-cycle) from rank 3
        hole = lift_circuit(eulerian_circuit(2))
        full = EdgeSet.full(3)
        pool = full.copy()
        for e in hole.edges:
            pool.remove(e)
        return full, pool, EdgeSet(3, hole.edges)

    def test_fixture_step_by_step(self):
        full, pool, removed = self._fixture()
        assert sorted(pool) == [0b000, 0b010, 0b101, 0b111]
        assert len(components(pool)) == 3

        first = merge_components(pool, removed)
        assert sorted(first) == [0b001, 0b010, 0b100, 0b111]
        assert len(components(first)) == 2

        second = merge_components(first, edge_set_difference(full, first))
        assert sorted(second) == [0b001, 0b011, 0b100, 0b110]
        assert len(components(second)) == 1

    def test_swap_preserves_degrees_and_colors(self):
        full, pool, removed = self._fixture()
        degrees = [(pool.in_degree(v), pool.out_degree(v)) for v in range(4)]
        colors = pool.color_counts()
        merged = merge_components(pool, removed)
        assert [(merged.in_degree(v), merged.out_degree(v)) for v in range(4)] == degrees
        assert merged.color_counts() == colors

    def test_terminates_within_component_bound(self):
        full, pool, removed = self._fixture()
        swaps = 0
        start = len(components(pool))
        while len(components(pool)) > 1:
            pool = merge_components(pool, removed)
            removed = edge_set_difference(full, pool)
            swaps += 1
        assert swaps == start - 1

    def test_rejects_connected_pool(self):
        full = EdgeSet.full(3)
        with pytest.raises(ValueError):
            merge_components(full, EdgeSet(3))

    def test_forced_color_pattern(self):
        # blue crossing edge 001 forces red 000 out, blue 101 in, red 100 back
        _, pool, removed = self._fixture()
        merged = merge_components(pool, removed)
        assert 0b001 in merged and 0b100 in merged
        assert 0b000 not in merged and 0b101 not in merged


class TestBuildRequest:
    def test_parity_validation(self):
        with pytest.raises(ValueError):
            BuildRequest(Parameters(4, 2, 1), B, 1)
        with pytest.raises(ValueError):
            BuildRequest(Parameters(3, 2, 2), A, 0)

    def test_feasibility_validation(self):
        with pytest.raises(InfeasibleError):
            BuildRequest(Parameters(10, 2, 2), B, 0)

    def test_valid(self):
        req = BuildRequest(Parameters(7, 3, 1), A, -1)
        assert req.target_imbalance == -1


class TestGenerate:
    def test_card_stack_parameters(self):
        s = generate(Parameters(52, 5, 2))
        assert len(s) == 52
        assert verify(s, 5, 2, B).ok

    @pytest.mark.parametrize("m", range(2, 9))
    def test_classical_de_bruijn_orders(self, m):
        s = generate(Parameters(1 << m, m, 1))
        hist = window_histogram(s, m)
        assert hist.max_multiplicity() == 1
        assert len(hist.counts) == 1 << m

    def test_almost_balanced_odd_length(self):
        s = generate(Parameters(7, 2, 2), A)
        assert len(s) == 7
        assert abs(balance(s).imbalance) == 1
        assert window_histogram(s, 2).max_multiplicity() <= 2

    def test_infeasible_reports_reason(self):
        with pytest.raises(InfeasibleError, match=r"k < n/2\^l"):
            generate(Parameters(10, 2, 2))
        with pytest.raises(InfeasibleError, match="odd"):
            generate(Parameters(5, 2, 3), B)

    def test_window_length_one(self):
        assert generate(Parameters(6, 1, 3)).bits == "010101"
        assert generate(Parameters(7, 1, 4), A).bits == "0101010"
        assert generate(Parameters(7, 1, 4), A, -1).bits == "1010101"

    def test_negative_imbalance_is_the_complement(self):
        plus = generate(Parameters(9, 3, 2), A, 1)
        minus = generate(Parameters(9, 3, 2), A, -1)
        assert minus == complement(plus)
        assert balance(minus).imbalance == -1

    def test_imbalance_misuse(self):
        with pytest.raises(ValueError):
            generate(Parameters(4, 2, 1), B, 1)
        with pytest.raises(ValueError):
            generate(Parameters(7, 3, 1), A, 0)

    def test_guards(self):
        with pytest.raises(ResourceGuardError):
            generate(Parameters((1 << 24) + 2, 1, 1 << 24))
        with pytest.raises(ResourceGuardError):
            generate(Parameters(4, 25, 1))

    def test_deterministic(self):
        assert generate(Parameters(52, 5, 2)) == generate(Parameters(52, 5, 2))

    def test_block_concatenation_arithmetic(self):
        # k0 blocks: r + (k0-1)*2^l = n, multiplicity at most k0
        s = generate(Parameters(20, 2, 5))
        assert len(s) == 20
        assert window_histogram(s, 2).max_multiplicity() <= -(-20 // 4)

    def test_targets_tight_multiplicity_even_for_generous_k(self):
        s = generate(Parameters(8, 3, 4))
        assert window_histogram(s, 3).max_multiplicity() == 1

    def test_soundness_sample_grid(self):
        rng = random.Random(1)
        for _ in range(60):
            l = rng.randint(1, 6)
            n = rng.randint(1, min(4 * (1 << l), 200))
            k = -(-n // (1 << l)) + rng.randint(0, 2)
            mode = rng.choice((B, A, U))
            if mode is B and n % 2:
                continue
            s = generate(Parameters(n, l, k), mode)
            assert len(s) == n
            assert verify(s, l, k, mode).ok

    def test_unconstrained_mode(self):
        s = generate(Parameters(6, 2, 2), U)
        assert verify(s, 2, 2, U).ok
