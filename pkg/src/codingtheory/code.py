"""Linear codes over GF(q).

Conventions: the generator matrix ``G`` is k x n with rows a basis of C; the
parity-check matrix ``H`` is n x (n-k) and its COLUMNS are a basis of the
dual code. Syndromes are therefore row products ``v @ H``, and ``v`` is a
codeword iff ``v @ H == 0``. This is the transpose of the usual textbook
orientation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .galois import GF, FieldElement, field as make_field
from .matgf import Matrix

DEFAULT_ENUMERATION_LIMIT = 2**22


class EnumerationLimitError(ValueError):
    """A brute-force enumeration would exceed the configured bound."""


class LinearCode:
    """A k-dimensional subspace of GF(q)^n.

    ``generators`` keeps the spanning vectors the code was built from (they may
    be dependent); ``G`` is always a basis.
    """

    def __init__(self, field: GF, G: Matrix, H: Matrix | None = None, generators: Matrix | None = None):
        if G.field != field:
            raise ValueError("generator matrix is over a different field")
        if G.ncols < 1:
            raise ValueError("a code needs length n >= 1")
        if G.rank() != G.nrows:
            raise ValueError("generator rows are linearly dependent")
        self.field = field
        self.G = G
        if H is None:
            H = G.nullspace().transpose() if G.nrows else Matrix.identity(field, G.ncols)
        if H.nrows != G.ncols or H.ncols != G.ncols - G.nrows or H.rank() != H.ncols:
            raise ValueError(f"parity-check matrix must be n x (n-k) of full column rank, got {H.shape}")
        if G.nrows and H.ncols and not (G @ H).is_zero():
            raise ValueError("G @ H != 0")
        self.H = H
        self.generators = generators if generators is not None else G

    # parameters ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    length = n
    dim = k

    @property
    def generator_matrix(self) -> Matrix:
        return self.G

    @property
    def parity_check_matrix(self) -> Matrix:
        return self.H

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    information_rate = rate

    @property
    def alphabet(self) -> list[FieldElement]:
        return self.field.elements()

    @property
    def ambient_space(self) -> tuple[GF, int]:
        return self.field, self.n

    def parameters(self) -> tuple[int, int, Fraction]:
        return self.n, self.k, self.rate

    def __repr__(self):
        return f"LinearCode({self.field!r}, [{self.n}, {self.k}])"

    def __str__(self):
        head = "Code with Generator Matrix: "
        lines = str(self.G).splitlines() or ["(zero code)"]
        pad = " " * len(head)
        return head + ("\n" + pad).join(lines)

    # vectors ------------------------------------------------------------

    def _vector(self, v: Sequence, length: int) -> tuple[int, ...]:
        out = tuple(self.field.coerce(x) for x in v)
        if len(out) != length:
            raise ValueError(f"expected a vector of length {length}, got {len(out)}")
        return out

    def encode(self, message: Sequence) -> tuple[int, ...]:
        msg = self._vector(message, self.k)
        return self.G.vecmat(msg) if self.k else (0,) * self.n

    def syndrome(self, v: Sequence) -> tuple[int, ...]:
        vec = self._vector(v, self.n)
        return self.H.vecmat(vec)

    def __contains__(self, v) -> bool:
        return not any(self.syndrome(v))

    # enumeration --------------------------------------------------------

    def _check_limit(self, count: int, limit: int):
        if count > limit:
            raise EnumerationLimitError(
                f"{count} words exceed the enumeration limit {limit}; raise the limit or stream"
            )

    def iter_codewords(self) -> Iterator[tuple[int, ...]]:
        """All codewords as ``m @ G``, messages in lexicographic rep order."""
        F = self.field
        q = F.q
        scaled = [[F.scale_vec(c, row) for c in range(q)] for row in self.G.rows]

        def walk(level, acc):
            if level == self.k:
                yield tuple(acc)
                return
            for c in range(q):
                yield from walk(level + 1, F.add_vec(acc, scaled[level][c]) if c else acc)

        yield from walk(0, [0] * self.n)

    def codewords(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[tuple[int, ...]]:
        self._check_limit(self.field.q**self.k, limit)
        return list(self.iter_codewords())

    def minimum_weight(self, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
        """Exact minimum weight by exhaustive enumeration.

        Weight is invariant under scaling, so only messages whose first
        nonzero symbol is 1 are visited; that covers every nonzero codeword
        up to a scalar.
        """
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codewords")
        q = self.field.q
        self._check_limit(q**self.k, limit)
        F = self.field
        scaled = [[F.scale_vec(c, row) for c in range(q)] for row in self.G.rows]
        best = self.n

        def walk(level, acc):
            nonlocal best
            if level == self.k:
                w = sum(1 for x in acc if x)
                if w < best:
                    best = w
                return
            for c in range(q):
                walk(level + 1, F.add_vec(acc, scaled[level][c]) if c else acc)

        for lead in range(self.k):
            walk(lead + 1, list(self.G.rows[lead]))
            if best == 1:
                break
        return best

    # transforms ---------------------------------------------------------

    def dual(self) -> LinearCode:
        return LinearCode(self.field, self.H.transpose(), self.G.transpose())

    dual_code = dual

    def shorten(self, positions: Sequence[int]) -> LinearCode:
        """Codewords vanishing on ``positions``, with those coordinates deleted."""
        pos = sorted(set(positions))
        for i in pos:
            if not 0 <= i < self.n:
                raise ValueError(f"position {i} out of range for length {self.n}")
        if len(pos) == self.n:
            raise ValueError("cannot shorten away every coordinate")
        units = Matrix._trusted(
            self.field, [[int(j == i) for j in range(self.n)] for i in pos], self.n
        )
        checks = self.H.transpose().stack(units)
        sub = from_parity_check_span(self.field, checks.rows, self.n)
        rows = sub.G.delete_columns(pos).rows
        return from_span(self.field, rows, self.n - len(pos))

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        if self.field != other.field or self.n != other.n or self.k != other.k:
            return False
        return self.G.row_space_equal(other.G)

    __hash__ = None


# --- constructors -------------------------------------------------------------


def _rows_matrix(F: GF, rows: Sequence[Sequence], n: int | None) -> Matrix:
    rows = list(rows)
    if n is None:
        if not rows:
            raise ValueError("cannot infer the length from an empty list of vectors")
        n = len(rows[0])
    return Matrix(F, rows, n)


def from_span(field: GF, rows: Sequence[Sequence], n: int | None = None) -> LinearCode:
    """Row space of ``rows``. Independent rows are kept verbatim as ``G``."""
    M = _rows_matrix(field, rows, n)
    if M.rank() == M.nrows:
        return LinearCode(field, M, generators=M)
    return LinearCode(field, M.row_basis(), generators=M)


def from_generator(M: Matrix) -> LinearCode:
    return from_span(M.field, M.rows, M.ncols)


def from_parity_check_span(field: GF, rows: Sequence[Sequence], n: int | None = None) -> LinearCode:
    """Code of all vectors orthogonal to every row of ``rows``."""
    M = _rows_matrix(field, rows, n)
    G = M.nullspace()
    return LinearCode(field, G, M.row_basis().transpose())


def from_parity_check(H: Matrix) -> LinearCode:
    """``H`` is n x s with columns spanning the dual."""
    return from_parity_check_span(H.field, H.transpose().rows, H.nrows)


def linear_code(*args, parity_check: bool = False) -> LinearCode:
    """Build a code from any of the supported argument shapes.

    ``(F, L)``, ``(F, n, L)``, ``(G)``, ``(p, r, n, L)``; with
    ``parity_check=True`` the list or matrix describes the dual instead,
    and a matrix argument is read with columns spanning the dual.
    """
    if len(args) == 1 and isinstance(args[0], Matrix):
        return from_parity_check(args[0]) if parity_check else from_generator(args[0])
    if len(args) == 2 and isinstance(args[0], GF):
        F, rows, n = args[0], args[1], None
    elif len(args) == 3 and isinstance(args[0], GF):
        F, n, rows = args
    elif len(args) == 4 and all(isinstance(a, int) for a in args[:3]):
        F, n, rows = make_field(args[0], args[1]), args[2], args[3]
    else:
        raise TypeError(f"unsupported argument shape for linear_code: {args!r}")
    if parity_check:
        return from_parity_check_span(F, rows, n)
    return from_span(F, rows, n)


def _check_length(n: int):
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")


def zero_code(field: GF, n: int) -> LinearCode:
    _check_length(n)
    return LinearCode(field, Matrix.zeros(field, 0, n))


def universe_code(field: GF, n: int) -> LinearCode:
    _check_length(n)
    return LinearCode(field, Matrix.identity(field, n))


def repetition_code(field: GF, n: int) -> LinearCode:
    _check_length(n)
    return from_span(field, [[1] * n])


def zero_sum_code(field: GF, n: int) -> LinearCode:
    _check_length(n)
    return from_parity_check_span(field, [[1] * n])


def random_code(field: GF, n: int, k: int, seed: int | None = None, max_tries: int = 1000) -> LinearCode:
    """Random [n, k] code; the generator is redrawn until it has rank k."""
    _check_length(n)
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        M = Matrix._trusted(field, [[rng.randrange(field.q) for _ in range(n)] for _ in range(k)], n)
        if M.rank() == k:
            return LinearCode(field, M)
    raise RuntimeError(f"no rank-{k} generator found in {max_tries} draws")
