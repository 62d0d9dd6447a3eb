"""Syndrome decoding with a coset-leader table."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .code import DEFAULT_ENUMERATION_LIMIT, EnumerationLimitError, LinearCode


class UncorrectableError(ValueError):
    """The received word's syndrome has no leader of weight <= t."""


@dataclass(frozen=True)
class SyndromeTable:
    code: LinearCode
    t: int
    table: dict[tuple[int, ...], tuple[int, ...]]

    def leader(self, syndrome: Sequence[int]) -> tuple[int, ...]:
        try:
            return self.table[tuple(syndrome)]
        except KeyError:
            raise UncorrectableError(
                f"syndrome {tuple(syndrome)} has no coset leader of weight <= {self.t}"
            ) from None

    def decode(self, v: Sequence) -> tuple[int, ...]:
        C = self.code
        F = C.field
        vec = tuple(F.coerce(x) for x in v)
        e = self.leader(C.syndrome(vec))
        return tuple(F.sub(a, b) for a, b in zip(vec, e))


def _errors_of_weight(n: int, q: int, w: int) -> list[tuple[int, ...]]:
    out = []
    for support in itertools.combinations(range(n), w):
        for values in itertools.product(range(1, q), repeat=w):
            e = [0] * n
            for i, x in zip(support, values):
                e[i] = x
            out.append(tuple(e))
    out.sort()
    return out


def build_syndrome_table(code: LinearCode, d: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> SyndromeTable:
    """Leaders for every error of weight <= t = (d-1)//2.

    Errors are visited by increasing weight and then lexicographically, and
    the first error to reach a syndrome keeps it, so each leader is the
    lexicographically smallest minimum-weight error in its coset.
    """
    if d < 1:
        raise ValueError(f"minimum distance must be >= 1, got {d}")
    if code.k < 1:
        raise ValueError("syndrome decoding needs a code of dimension >= 1")
    n, q = code.n, code.field.q
    t = (d - 1) // 2
    total = sum(comb(n, w) * (q - 1) ** w for w in range(t + 1))
    if total > limit:
        raise EnumerationLimitError(f"{total} error patterns exceed the enumeration limit {limit}")
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for w in range(t + 1):
        for e in _errors_of_weight(n, q, w):
            table.setdefault(code.H.vecmat(e), e)
    return SyndromeTable(code, t, table)


def syndrome_decode(code: LinearCode, v: Sequence, d: int | None = None) -> tuple[int, ...]:
    """Correct ``v`` to a codeword; ``d`` defaults to the exact minimum weight.

    Vectors are rows throughout (the syndrome is ``v @ H``).
    """
    if d is None:
        d = code.minimum_weight()
    return build_syndrome_table(code, d).decode(v)
