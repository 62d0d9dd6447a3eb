import itertools

import pytest
from hypothesis import given, settings, strategies as st

from codingtheory import (
    Matrix,
    cyclic_code,
    field,
    field_of_order,
    hamming_code,
    parse_poly,
    quasi_cyclic_code,
    rand_ldpc,
    zero_sum_code,
)

from conftest import min_weight_brute


def columns_independent(F, cols, size):
    """Do all ``size``-subsets of ``cols`` have full rank? Checked by brute-force spans."""
    r = len(cols[0])
    for subset in itertools.combinations(cols, size):
        for coeffs in itertools.product(range(F.q), repeat=size):
            if not any(coeffs):
                continue
            v = [0] * r
            for c, col in zip(coeffs, subset):
                for i, x in enumerate(col):
                    v[i] = F.add(v[i], F.mul(c, x))
            if not any(v):
                return False
    return True


class TestHamming:
    def test_binary_generator(self):
        C = hamming_code(2, 3)
        assert [list(r) for r in C.G.rows] == [
            [1, 1, 1, 1, 0, 0, 0],
            [0, 1, 1, 0, 1, 0, 0],
            [1, 0, 1, 0, 0, 1, 0],
            [1, 1, 0, 0, 0, 0, 1],
        ]
        assert (C.n, C.k, C.minimum_weight()) == (7, 4, 3)
        D = C.dual()
        assert (D.n, D.k, D.minimum_weight()) == (7, 3, 4)

    @pytest.mark.parametrize("q,r", [(2, 2), (3, 2), (3, 3), (4, 2), (2, 4), (5, 2)])
    def test_parameters(self, q, r):
        C = hamming_code(q, r)
        n = (q**r - 1) // (q - 1)
        assert (C.n, C.k) == (n, n - r)
        assert C.minimum_weight() == 3

    def test_large_case_by_columns(self):
        # GF(4), r=3: 4^18 codewords, so check d=3 through parity-check columns
        C = hamming_code(4, 3)
        F = C.field
        cols = [tuple(row) for row in C.H.rows]
        assert (C.n, C.k) == (21, 18)
        assert len(set(cols)) == 21
        assert columns_independent(F, cols, 2)
        assert not columns_independent(F, cols, 3)

    def test_columns_are_projective_representatives(self):
        C = hamming_code(3, 3)
        for row in C.H.rows:
            assert next(x for x in row if x) == 1

    def test_bad_redundancy(self):
        with pytest.raises(ValueError):
            hamming_code(2, 1)
        with pytest.raises(ValueError):
            hamming_code(6, 2)


class TestCyclic:
    def test_x_minus_one(self, gf5):
        C = cyclic_code(gf5, parse_poly("x-1", gf5, ("x",)), 6)
        assert C.k == 5
        assert C.G.rows[0] == (4, 1, 0, 0, 0, 0)
        assert C == zero_sum_code(gf5, 6)

    def test_coefficient_list(self, gf5):
        assert cyclic_code(gf5, [4, 1], 6) == zero_sum_code(gf5, 6)

    def test_binary_hamming_generator(self):
        # 1 + x + x^3 divides x^7 - 1 over GF(2)
        F = field(2)
        C = cyclic_code(F, [1, 1, 0, 1], 7)
        assert (C.k, C.minimum_weight()) == (4, 3)

    def test_non_divisor_spans_all_shifts(self):
        F = field(2)
        # 1 + x^2 + x^3 is irreducible and x^4 - 1 = (x + 1)^4, so no division
        C = cyclic_code(F, [1, 0, 1, 1], 4)
        rows = [[1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0], [0, 1, 1, 1]]
        assert C.k == Matrix(F, rows).rank()

    def test_zero_generator(self, gf5):
        with pytest.raises(ValueError):
            cyclic_code(gf5, [0, 0], 4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(2, 6), st.data())
def test_cyclic_codes_are_shift_closed(q, n, data):
    F = field_of_order(q)
    deg = data.draw(st.integers(0, n - 1))
    g = data.draw(st.lists(st.integers(0, q - 1), min_size=deg, max_size=deg)) + [data.draw(st.integers(1, q - 1))]
    C = cyclic_code(F, g, n)
    for row in C.G.rows:
        assert tuple(row[-1:] + row[:-1]) in C


class TestQuasiCyclic:
    def test_example_rows(self, gf5):
        C = quasi_cyclic_code(gf5, [[0, 3, 2, 4], [3, 1, 0, 4]])
        assert [list(r) for r in C.generators.rows] == [
            [0, 3, 2, 4],
            [4, 0, 3, 2],
            [2, 4, 0, 3],
            [3, 2, 4, 0],
            [3, 1, 0, 4],
            [4, 3, 1, 0],
            [0, 4, 3, 1],
            [1, 0, 4, 3],
        ]
        assert C.k == Matrix(gf5, C.generators.rows).rank()

    def test_single_vector_shift_invariance(self, gf9):
        C = quasi_cyclic_code(gf9, [[1, 5, 0, 0, 3]])
        for w in C.codewords():
            assert w[-1:] + w[:-1] in C

    def test_ragged(self, gf5):
        with pytest.raises(ValueError):
            quasi_cyclic_code(gf5, [[1, 2], [1, 2, 3]])


class TestLDPC:
    def test_row_weight_and_orthogonality(self):
        C = rand_ldpc(12, 6, 4, seed=1)
        assert (C.n, C.k) == (12, 6)
        checks = C.H.transpose().rows
        assert all(sum(row) == 4 for row in checks)
        assert (C.G @ C.H).is_zero()

    def test_deterministic(self):
        assert rand_ldpc(10, 5, 3, seed=9).H == rand_ldpc(10, 5, 3, seed=9).H

    def test_unreachable_rank(self):
        # two weight-4 rows of length 4 coincide, so rank 2 is impossible
        with pytest.raises(ValueError):
            rand_ldpc(4, 2, 4, seed=0)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            rand_ldpc(5, 5, 2)
        with pytest.raises(ValueError):
            rand_ldpc(5, 2, 6)

    def test_small_matches_brute_force(self):
        C = rand_ldpc(8, 4, 3, seed=3)
        assert C.minimum_weight() == min_weight_brute(C.field, C.G.rows, 8)
