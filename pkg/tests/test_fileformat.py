import pytest
from hypothesis import given, settings, strategies as st

from codingtheory import (
    EvaluationCode,
    LRCode,
    LinearCode,
    build_lrc,
    cartesian_code,
    cyclic_code,
    ev_code_graph,
    evaluation_code,
    field,
    field_of_order,
    hamming_code,
    linear_code,
    quasi_cyclic_code,
    rand_ldpc,
    random_code,
    rm_code,
    rs_code,
    toric_code,
    zero_code,
)
from codingtheory.fileformat import FormatError, dump, dumps, load, loads


def _same(a, b):
    la = a if isinstance(a, LinearCode) else a.code
    lb = b if isinstance(b, LinearCode) else b.code
    assert type(a) is type(b)
    assert la == lb
    assert la.G == lb.G


CASES = {
    "hamming": lambda: hamming_code(3, 2),
    "cyclic": lambda: cyclic_code(field(5), [4, 1], 6),
    "quasicyclic": lambda: quasi_cyclic_code(field(5), [[0, 3, 2, 4], [3, 1, 0, 4]]),
    "ldpc": lambda: rand_ldpc(10, 5, 3, seed=2),
    "random_gf8": lambda: random_code(field_of_order(8), 5, 2, seed=1),
    "zero": lambda: zero_code(field_of_order(9), 3),
    "rs": lambda: rs_code(field(7), [1, 2, 3, 4], 2),
    "rm": lambda: rm_code(2, 3, 1),
    "cartesian": lambda: cartesian_code(field(3), [[0, 1], [0, 1, 2]], 2),
    "toric": lambda: toric_code(field(5), [[1, 0], [0, 1], [-1, 2]]),
    "graph": lambda: ev_code_graph(field(3), [[1, 1, 0], [1, 0, 1], [0, 1, 1]], 2),
    "eval_gf4": lambda: evaluation_code(
        field_of_order(4),
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), ("a", "a", "a")],
        ["x+y+z", "a+y*z^2", "z^2", "x+y+z+z^2"],
    ),
    "lrc": lambda: build_lrc(13, 12, 3, 3, [[1, 5, 8, 12], [2, 10, 3, 11], [4, 7, 6, 9]], [0, 0, 0, 0, 1]),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_roundtrip(name):
    code = CASES[name]()
    again = loads(dumps(code))
    _same(code, again)
    assert dumps(again) == dumps(code)
    if isinstance(code, EvaluationCode):
        assert again.points == code.points
        assert again.polys == code.polys
    if isinstance(code, LRCode):
        assert again.blocks == code.blocks
        assert again.locality == code.locality


def test_file_helpers(tmp_path):
    code = hamming_code(2, 3)
    path = tmp_path / "h.code"
    dump(code, path)
    _same(code, load(path))


def test_header_layout():
    text = dumps(linear_code(field_of_order(4), [[1, 1, 0, 0], [0, 0, 1, 1]]))
    assert text.splitlines()[:5] == ["field 2 2", "modulus 1 1 1", "generator 2 4", "1 1 0 0", "0 0 1 1"]


def test_comments_and_blank_lines():
    text = "# a code\nfield 5 1\n\ngenerator 1 3\n1 2 3\n"
    C = loads(text)
    assert C.G.rows == ((1, 2, 3),)


def test_noncanonical_modulus_is_accepted():
    # x^2 + x + 2 is irreducible over GF(3) but not the default choice
    C = loads("field 3 2\nmodulus 2 1 1\ngenerator 1 2\n1 4\n")
    assert C.field.modulus == (2, 1, 1)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "field 4 1\ngenerator 1 1\n1\n",
        "field 5 1\ngenerator 2 3\n1 2 3\n",
        "field 5 1\ngenerator 1 3\n1 2 9\n",
        "field 5 1\ngenerator 1 3\n1 2\n",
        "field 5 1\ngenerator 1 3\n1 x 3\n",
        "field 3 2\nmodulus 1 0 0\ngenerator 1 2\n1 1\n",
        "field 5 1\ngenerator 2 2\n1 1\n2 2\n",
        "field 5 1\ngenerator 1 2\n1 1\nbogus 1\n",
        "field 5 1\ngenerator 1 3\n1 2 3\npoints 3 1\n1\n2\n3\npolys 1\npoly 1\n1 0\n",
    ],
)
def test_malformed(text):
    with pytest.raises(FormatError):
        loads(text)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 8), st.data())
def test_random_roundtrip(q, n, data):
    F = field_of_order(q)
    k = data.draw(st.integers(1, n))
    C = random_code(F, n, k, seed=data.draw(st.integers(0, 10**6)))
    _same(C, loads(dumps(C)))
