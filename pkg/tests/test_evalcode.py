import itertools

import pytest
from hypothesis import given, settings, strategies as st

from codingtheory import (
    Matrix,
    MultiPoly,
    cartesian_code,
    ev_code_graph,
    evaluation_code,
    field,
    field_of_order,
    repetition_code,
    rm_code,
    rs_code,
    toric_code,
)
from codingtheory.evalcode import monomials_up_to

from conftest import eval_prime, min_weight_prime, rank_brute


POINTS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), ("a", "a", "a")]
POLYS = ["x+y+z", "a+y*z^2", "z^2", "x+y+z+z^2"]


class TestGeneralEvaluation:
    def test_golden(self, gf4):
        C = evaluation_code(gf4, POINTS, POLYS)
        render = [[gf4.render(x) for x in row] for row in C.raw_eval.rows]
        assert render == [
            ["0", "1", "1", "1", "1", "a"],
            ["a", "a", "a", "a", "a+1", "a+1"],
            ["0", "0", "0", "1", "1", "a+1"],
            ["0", "1", "1", "0", "0", "1"],
        ]
        assert (C.n, C.k) == (6, 3)
        assert C.linear_code is C.code
        assert C.points[-1] == (2, 2, 2)

    def test_vanishing_ideal_is_lazy_and_consistent(self, gf4):
        C = evaluation_code(gf4, POINTS, POLYS)
        I = C.vanishing_ideal
        assert C.vanishing_ideal is I
        assert len(I.standard_monomials) == 6
        # x+y+z + (x+y+z+z^2) = z^2 is the dependency among the rows
        f, _, g, h = C.polys
        assert I.reduce(f + h + g).is_zero()

    def test_duplicate_points_dropped(self, gf5):
        C = evaluation_code(gf5, [(1,), (2,), (1,)], [(0,), (1,)])
        assert C.points == [(1,), (2,)]
        assert C.n == 2

    def test_exponent_vectors(self, gf5):
        C = evaluation_code(gf5, [(1, 2), (3, 4)], [(1, 0), (0, 2)])
        assert C.raw_eval.rows == ((1, 3), (4, 1))

    def test_errors(self, gf5):
        with pytest.raises(ValueError):
            evaluation_code(gf5, [], ["x"])
        with pytest.raises(ValueError):
            evaluation_code(gf5, [(1, 2)], [])
        with pytest.raises(ValueError):
            evaluation_code(gf5, [(1, 2)], [(1, 2, 3)])


class TestReedSolomon:
    def test_golden(self, gf5):
        C = rs_code(gf5, [1, 2, 3], 3)
        assert C.raw_eval.rows == ((1, 1, 1), (1, 2, 3), (1, 4, 4))

    def test_errors(self, gf5):
        with pytest.raises(ValueError):
            rs_code(gf5, [1, 1, 2], 2)
        with pytest.raises(ValueError):
            rs_code(gf5, [1, 2], 3)

    @pytest.mark.parametrize("q", [4, 8, 9])
    def test_mds_extension_fields(self, q):
        F = field_of_order(q)
        n = q - 1
        for k in range(1, n + 1):
            C = rs_code(F, F.alphabet()[1:], k)
            if q**k <= 10**5:
                assert C.code.minimum_weight() == n - k + 1


class TestReedMuller:
    def test_binary_first_order(self):
        C = rm_code(2, 3, 1)
        assert (C.n, C.k, C.code.minimum_weight()) == (8, 4, 4)

    @pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (3, 1), (3, 2)])
    def test_degree_zero_is_repetition(self, q, m):
        C = rm_code(q, m, 0)
        assert C.code == repetition_code(field_of_order(q), q**m)

    def test_full_degree_is_universe(self):
        C = rm_code(3, 2, 4)
        assert C.k == 9

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            rm_code(2, 0, 1)


class TestCartesian:
    def test_grid_order(self):
        F = field(3)
        C = cartesian_code(F, [[0, 1], [0, 1, 2]], 1)
        assert C.points == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
        assert C.k == 3

    def test_small_grid_distance(self):
        # degree <= 1 on {0,1}^2: span of 1, x, y; x + y + 2 vanishes on two points
        F = field(3)
        C = cartesian_code(F, [[0, 1], [0, 1]], 1)
        assert C.k == 3
        assert C.code.minimum_weight() == min_weight_prime(3, C.code.G.rows) == 2

    def test_full_field_equals_rm(self):
        F = field(3)
        assert cartesian_code(F, [range(3)] * 2, 2).code == rm_code(3, 2, 2).code

    def test_explicit_polys(self, gf4):
        C = cartesian_code(gf4, [[0, 1], [0, 1]], polys=["x*y"])
        assert C.raw_eval.rows == ((0, 0, 0, 1),)

    def test_exponent_caps(self):
        assert monomials_up_to(2, [1, 2]) == [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)]

    def test_errors(self, gf5):
        with pytest.raises(ValueError):
            cartesian_code(gf5, [[1, 1]], 1)
        with pytest.raises(ValueError):
            cartesian_code(gf5, [[]], 1)
        with pytest.raises(ValueError):
            cartesian_code(gf5, [[1, 2]])


class TestToric:
    def test_length_and_oracle(self, gf5):
        E = [[1, 0], [0, 1], [1, 1]]
        C = toric_code(gf5, E)
        assert C.n == 16
        for row, u in zip(C.raw_eval.rows, E):
            expected = [eval_prime(5, {tuple(u): 1}, pt) for pt in itertools.product(range(1, 5), repeat=2)]
            assert list(row) == expected

    def test_shift_by_q_minus_one(self, gf5):
        assert toric_code(gf5, [[1, 2], [3, 0]]).code == toric_code(gf5, [[5, 2], [-1, 4]]).code

    def test_gf2_warns(self):
        with pytest.warns(UserWarning):
            C = toric_code(field(2), [[1, 1]])
        assert C.n == 1

    def test_errors(self, gf5):
        with pytest.raises(ValueError):
            toric_code(gf5, [])
        with pytest.raises(ValueError):
            toric_code(gf5, [[1, 2], [1]])


class TestGraph:
    def test_single_edge(self):
        C = ev_code_graph(field(2), [[1], [1]], 1)
        assert C.points == [(1,)]
        assert (C.n, C.k) == (1, 1)

    def test_triangle_binary(self):
        # rows of J - I sum to zero mod 2, so the evaluation matrix has rank 2
        F = field(2)
        inc = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
        C = ev_code_graph(F, inc, 1)
        assert C.n == 3
        assert C.k == rank_brute(F, inc, 3) == 2

    def test_triangle_ternary(self):
        F = field(3)
        C = ev_code_graph(F, [[1, 1, 0], [1, 0, 1], [0, 1, 1]], 1)
        assert C.k == 3

    def test_degree_two_monomials(self):
        C = ev_code_graph(field(2), [[1, 1, 0], [1, 0, 1], [0, 1, 1]], 2)
        assert len(C.polys) == 6

    def test_errors(self):
        with pytest.raises(ValueError):
            ev_code_graph(field(2), [[2]], 1)
        with pytest.raises(ValueError):
            ev_code_graph(field(2), [[1]], 0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7]), st.data())
def test_rs_mds_property(p, data):
    F = field(p)
    n = data.draw(st.integers(1, p - 1))
    k = data.draw(st.integers(1, n))
    pts = data.draw(st.permutations(range(p)))[:n]
    C = rs_code(F, pts, k)
    assert C.k == k
    assert min_weight_prime(p, C.code.G.rows) == n - k + 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 2), st.data())
def test_prime_field_evaluation_matches_integer_oracle(p, m, data):
    F = field(p)
    pts = data.draw(st.lists(st.tuples(*[st.integers(0, p - 1)] * m), min_size=1, max_size=6, unique=True))
    monos = [e for e in itertools.product(range(3), repeat=m)]
    polys = data.draw(st.lists(st.dictionaries(st.sampled_from(monos), st.integers(1, p - 1), min_size=1, max_size=3), min_size=1, max_size=4))
    C = evaluation_code(F, pts, [MultiPoly(F, m, t) for t in polys])
    expected = [[eval_prime(p, t, pt) for pt in pts] for t in polys]
    assert [list(r) for r in C.raw_eval.rows] == expected
    assert C.k == Matrix(F, expected, len(pts)).rank()
