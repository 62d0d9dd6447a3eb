"""Hamming, cyclic, quasi-cyclic and random LDPC codes."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .code import LinearCode, from_parity_check, from_span
from .galois import GF, field_of_order
from .matgf import Matrix
from .multipoly import MultiPoly


def _right_systematic(M: Matrix) -> Matrix:
    """Basis of the row space in echelon form read from the right.

    When the last k columns are an information set this is [P | I_k].
    """
    flipped = Matrix(M.field, [row[::-1] for row in M.rows], M.ncols).row_basis()
    return Matrix(M.field, [row[::-1] for row in flipped.rows][::-1], M.ncols)


def hamming_code(q: int, r: int) -> LinearCode:
    """The q-ary Hamming code with redundancy r.

    Parity-check columns are the nonzero vectors of GF(q)^r whose first
    nonzero entry is 1, in descending lexicographic rep order; the generator
    is systematic on the right. For q=2, r=3 this gives
    [[1,1,1,1,0,0,0], [0,1,1,0,1,0,0], [1,0,1,0,0,1,0], [1,1,0,0,0,0,1]].
    """
    if r < 2:
        raise ValueError(f"Hamming codes need r >= 2, got {r}")
    F = field_of_order(q)
    cols = [v for v in itertools.product(range(q), repeat=r) if any(v) and next(x for x in v if x) == 1]
    cols.sort(reverse=True)
    H = Matrix(F, cols, r)
    code = from_parity_check(H)
    return LinearCode(F, _right_systematic(code.G), H)


def _shift(v: Sequence[int], s: int) -> list[int]:
    """Cyclic shift to the right by s."""
    n = len(v)
    s %= n
    return list(v[n - s:]) + list(v[: n - s])


def _poly_divmod(F: GF, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    quo = [0] * max(1, len(num) - len(den) + 1)
    inv = F.inv(den[-1])
    while len(num) >= len(den) and any(num):
        c = F.mul(num[-1], inv)
        shift = len(num) - len(den)
        quo[shift] = c
        for i, d in enumerate(den):
            num[shift + i] = F.sub(num[shift + i], F.mul(c, d))
        while num and num[-1] == 0:
            num.pop()
    return quo, num


def cyclic_code(field: GF, g: MultiPoly | Sequence, n: int) -> LinearCode:
    """Cyclic code of length n generated by g.

    ``g`` is a univariate polynomial or its ascending coefficient list. If g
    divides x^n - 1 the generator rows are the n - deg(g) shifts of g;
    otherwise the code is spanned by all n shifts of g mod x^n - 1.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    coeffs = g.coefficients() if isinstance(g, MultiPoly) else [field.coerce(c) for c in g]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ValueError("the generator polynomial is zero")
    xn1 = [field.neg(1)] + [0] * (n - 1) + [1]
    _, rem = _poly_divmod(field, xn1, coeffs)
    if not rem:
        deg = len(coeffs) - 1
        base = coeffs + [0] * (n - len(coeffs))
        rows = [_shift(base, s) for s in range(n - deg)]
        return from_span(field, rows, n)
    # reduce mod x^n - 1 by folding exponents
    folded = [0] * n
    for i, c in enumerate(coeffs):
        folded[i % n] = field.add(folded[i % n], c)
    return from_span(field, [_shift(folded, s) for s in range(n)], n)


def quasi_cyclic_code(field: GF, vectors: Sequence[Sequence]) -> LinearCode:
    """Code spanned by every cyclic shift of every vector.

    ``generators`` holds all len(vectors) * n shift rows in input order.
    """
    vecs = [[field.coerce(x) for x in v] for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError("vectors have different lengths")
    rows = [_shift(v, s) for v in vecs for s in range(n)]
    return from_span(field, rows, n)


def rand_ldpc(n: int, k: int, row_weight: int, seed: int | None = None, max_tries: int = 200) -> LinearCode:
    """Random binary code whose (n-k) x n parity rows each have ``row_weight`` ones.

    Rows are redrawn until the parity rows have full rank; the drawn matrix
    is kept (transposed) as the code's ``H``.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if not 1 <= row_weight <= n:
        raise ValueError(f"row weight {row_weight} out of range 1..{n}")
    F = field_of_order(2)
    rng = random.Random(seed)
    m = n - k
    for _ in range(max_tries):
        rows = []
        for _ in range(m):
            support = set(rng.sample(range(n), row_weight))
            rows.append([int(j in support) for j in range(n)])
        P = Matrix(F, rows, n)
        if P.rank() == m:
            return LinearCode(F, P.nullspace(), P.transpose())
    raise ValueError(f"no full-rank {m}x{n} parity matrix of row weight {row_weight} in {max_tries} draws")
