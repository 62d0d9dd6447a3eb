import itertools

import pytest
from hypothesis import given, settings, strategies as st

from codingtheory import (
    EnumerationLimitError,
    UncorrectableError,
    build_syndrome_table,
    field,
    field_of_order,
    hamming_code,
    linear_code,
    random_code,
    repetition_code,
    syndrome_decode,
    universe_code,
)


def distance(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


class TestHammingDecoding:
    def test_golden(self):
        C = hamming_code(2, 3)
        assert C.encode([1, 0, 1, 0]) == (0, 1, 0, 1, 0, 1, 0)
        assert syndrome_decode(C, [0, 1, 0, 1, 1, 1, 0]) == (0, 1, 0, 1, 0, 1, 0)

    def test_exhaustive_single_errors(self):
        C = hamming_code(2, 3)
        T = build_syndrome_table(C, 3)
        ok = 0
        for w in C.codewords():
            for j in range(-1, 7):
                v = list(w)
                if j >= 0:
                    v[j] ^= 1
                ok += T.decode(v) == w
        assert ok == 128

    def test_table_is_perfect(self):
        # a perfect code: every syndrome has a leader of weight <= 1
        T = build_syndrome_table(hamming_code(2, 3), 3)
        assert len(T.table) == 8

    def test_ternary_hamming(self):
        C = hamming_code(3, 2)
        T = build_syndrome_table(C, 3)
        assert len(T.table) == 9
        w = C.encode([1, 2])
        v = list(w)
        v[0] = (v[0] + 2) % 3
        assert T.decode(v) == w


class TestTables:
    def test_sizes(self):
        F = field(2)
        assert len(build_syndrome_table(repetition_code(F, 3), 3).table) == 4
        assert len(build_syndrome_table(universe_code(F, 3), 1).table) == 1

    def test_leaders_are_lex_smallest(self):
        # two weight-1 errors share a syndrome; the lexicographically smaller one wins
        F = field(2)
        C = linear_code(F, [[1, 1, 0, 0], [0, 0, 1, 1]])
        T = build_syndrome_table(C, 3)
        assert T.table[C.syndrome([1, 0, 0, 0])] == (0, 1, 0, 0)

    def test_uncorrectable(self):
        F = field(2)
        C = repetition_code(F, 4)
        T = build_syndrome_table(C, 4)
        with pytest.raises(UncorrectableError):
            T.decode([1, 1, 0, 0])

    def test_limits_and_arguments(self):
        F = field(2)
        with pytest.raises(ValueError):
            build_syndrome_table(repetition_code(F, 3), 0)
        with pytest.raises(EnumerationLimitError):
            build_syndrome_table(repetition_code(F, 30), 29, limit=1000)

    def test_default_distance(self, gf5):
        C = repetition_code(gf5, 5)
        assert syndrome_decode(C, [2, 2, 4, 2, 1]) == (2,) * 5


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(3, 7), st.data())
def test_agrees_with_nearest_codeword(q, n, data):
    F = field_of_order(q)
    k = data.draw(st.integers(1, min(3, n - 1)))
    C = random_code(F, n, k, seed=data.draw(st.integers(0, 10**6)))
    d = C.minimum_weight()
    t = (d - 1) // 2
    words = C.codewords()
    w = data.draw(st.sampled_from(words))
    positions = data.draw(st.lists(st.integers(0, n - 1), max_size=t, unique=True))
    v = list(w)
    for j in positions:
        v[j] = F.add(v[j], data.draw(st.integers(1, q - 1)))
    decoded = syndrome_decode(C, v, d)
    assert decoded == w
    # brute force: the unique nearest codeword
    best = min(distance(v, c) for c in words)
    assert distance(v, decoded) == best
    assert [c for c in words if distance(v, c) == best] == [w]
