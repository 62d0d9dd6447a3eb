"""Tamo-Barg locally recoverable codes.

The evaluation points are partitioned into blocks of size ``locality + 1``
and a good polynomial g (degree ``locality + 1``, constant on every block)
is supplied by the caller. Messages are encoded as

    f(x) = sum_{j < k/locality} sum_{i < locality} m_ij * x^i * g(x)^j

so on any block f agrees with a polynomial of degree < locality, and an
erased symbol is the value of the interpolant through the other symbols of
its block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .code import LinearCode, from_span
from .galois import GF, FieldElement, field_of_order
from .multipoly import MultiPoly


class LRCError(ValueError):
    pass


class DivisibilityError(LRCError):
    """locality does not divide k."""


class PartitionError(LRCError):
    """Blocks are not a partition of n distinct points into (locality+1)-sets."""


class GoodPolynomialError(LRCError):
    """g is not constant on every block, or has the wrong degree."""


class DegreeOverflowError(LRCError):
    """The largest encoded degree does not fit below n."""


def _univariate(field: GF, g) -> MultiPoly:
    if isinstance(g, MultiPoly):
        if g.nvars != 1 or g.field != field:
            raise ValueError("g must be a univariate polynomial over the code's field")
        return g
    return MultiPoly.univariate(field, g)


def is_good_polynomial(g, blocks: Sequence[Sequence], field: GF) -> bool:
    """True iff g has degree equal to the block size and is constant on each block."""
    g = _univariate(field, g)
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1 or g.degree() != sizes.pop():
        return False
    for block in blocks:
        values = {g.eval_rep((field.coerce(x),)) for x in block}
        if len(values) != 1:
            return False
    return True


@dataclass(frozen=True)
class LRCSpec:
    field: GF
    n: int
    k: int
    locality: int
    blocks: tuple[tuple[int, ...], ...]
    g: MultiPoly

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    def validate(self):
        F, ell = self.field, self.locality
        if ell < 1:
            raise LRCError(f"locality must be >= 1, got {ell}")
        if self.k < 1 or self.k % ell:
            raise DivisibilityError(f"locality {ell} does not divide k={self.k}")
        pts = self.points
        if any(len(b) != ell + 1 for b in self.blocks):
            raise PartitionError(f"every block must have {ell + 1} points")
        if len(pts) != self.n:
            raise PartitionError(f"blocks cover {len(pts)} points, expected n={self.n}")
        if len(set(pts)) != len(pts):
            raise PartitionError("blocks overlap or repeat a point")
        if not is_good_polynomial(self.g, self.blocks, F):
            raise GoodPolynomialError(f"{self.g} is not a good polynomial for these blocks")
        top = (self.k // ell - 1) * (ell + 1) + (ell - 1)
        if top > self.n - 1:
            raise DegreeOverflowError(f"encoded degree {top} exceeds n-1={self.n - 1}")


class LRCode:
    """A Tamo-Barg code; ``code`` is the underlying LinearCode.

    Coordinates follow the blocks in order, points within a block in the
    given order. Generator rows are x^i g^j, j-major then i.
    """

    def __init__(self, lspec: LRCSpec):
        lspec.validate()
        self.lspec = lspec
        F = lspec.field
        gvals = [lspec.g.eval_rep((x,)) for x in lspec.points]
        rows = []
        for j in range(lspec.k // lspec.locality):
            for i in range(lspec.locality):
                rows.append([F.mul(F.pow(x, i), F.pow(gv, j)) for x, gv in zip(lspec.points, gvals)])
        self.code: LinearCode = from_span(F, rows, lspec.n)
        if self.code.k != lspec.k:
            raise LRCError(f"generator has rank {self.code.k}, expected {lspec.k}")

    @property
    def field(self) -> GF:
        return self.lspec.field

    @property
    def n(self) -> int:
        return self.lspec.n

    @property
    def k(self) -> int:
        return self.lspec.k

    @property
    def locality(self) -> int:
        return self.lspec.locality

    @property
    def blocks(self):
        return self.lspec.blocks

    def block_of(self, pos: int) -> tuple[int, list[int]]:
        """(block index, coordinate positions of that block) for position ``pos``."""
        if not 0 <= pos < self.n:
            raise IndexError(f"position {pos} out of range for length {self.n}")
        size = self.locality + 1
        b = pos // size
        return b, list(range(b * size, (b + 1) * size))

    def encode(self, message: Sequence) -> tuple[int, ...]:
        return self.code.encode(message)

    def __repr__(self):
        return f"LRCode({self.field!r}, n={self.n}, k={self.k}, locality={self.locality})"


def build_lrc(q: int | GF, n: int, k: int, locality: int, blocks: Sequence[Sequence], g) -> LRCode:
    F = q if isinstance(q, GF) else field_of_order(q)
    lspec = LRCSpec(
        F, n, k, locality,
        tuple(tuple(F.coerce(x) for x in b) for b in blocks),
        _univariate(F, g),
    )
    return LRCode(lspec)


def interpolate_at(field: GF, xs: Sequence[int], ys: Sequence[int], target: int) -> int:
    """Lagrange interpolation through (xs, ys), evaluated at ``target``."""
    F = field
    acc = 0
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num, den = 1, 1
        for j, xj in enumerate(xs):
            if j != i:
                num = F.mul(num, F.sub(target, xj))
                den = F.mul(den, F.sub(xi, xj))
        acc = F.add(acc, F.mul(yi, F.div(num, den)))
    return acc


def recover_in_block(field: GF, points: Sequence[int], values: Sequence[int | None]) -> int:
    """Fill the single ``None`` in ``values`` from the rest of one block."""
    missing = [i for i, v in enumerate(values) if v is None]
    if len(missing) != 1:
        raise ValueError(f"expected exactly one erasure in the block, found {len(missing)}")
    (miss,) = missing
    xs = [x for i, x in enumerate(points) if i != miss]
    ys = [field.coerce(v) for i, v in enumerate(values) if i != miss]
    return interpolate_at(field, xs, ys, points[miss])


def local_recover(lrc: LRCode, word: Sequence, pos: int) -> FieldElement:
    """Recover coordinate ``pos`` of ``word`` from the other symbols of its block.

    Only the block's entries are read; ``word[pos]`` itself is ignored and
    may be ``None``.
    """
    if len(word) != lrc.n:
        raise ValueError(f"word has length {len(word)}, expected {lrc.n}")
    b, positions = lrc.block_of(pos)
    values = [None if p == pos else word[p] for p in positions]
    rep = recover_in_block(lrc.field, lrc.blocks[b], values)
    return FieldElement(lrc.field, rep)
