"""Plain-text code files.

    field p r
    modulus c0 ... cr            (only when r > 1)
    generator k n
    <k rows of decimal reps>

Evaluation codes append ``points n m`` (n rows) and ``polys s`` followed by
s blocks ``poly t`` + t term lines ``c e1 ... em``. Locally recoverable codes
append ``blocks b s`` (b rows of point reps) and ``goodpoly c0 c1 ...``.
"""

from __future__ import annotations

from typing import Union

from .code import LinearCode, from_span
from .evalcode import EvaluationCode
from .galois import GF, field as canonical_field
from .lrc import LRCode, build_lrc
from .multipoly import MultiPoly

AnyCode = Union[LinearCode, EvaluationCode, LRCode]


class FormatError(ValueError):
    """Malformed code file."""


def _linear(code: AnyCode) -> LinearCode:
    return code if isinstance(code, LinearCode) else code.code


def dumps(code: AnyCode) -> str:
    C = _linear(code)
    F = C.field
    lines = [F.header(), f"generator {C.k} {C.n}"]
    lines += [" ".join(map(str, row)) for row in C.G.rows]
    if isinstance(code, EvaluationCode):
        lines.append(f"points {len(code.points)} {code.nvars}")
        lines += [" ".join(map(str, pt)) for pt in code.points]
        lines.append(f"polys {len(code.polys)}")
        for f in code.polys:
            lines.append(f"poly {len(f.terms)}")
            if f.terms:
                lines.append(f.to_text())
    if isinstance(code, LRCode):
        blocks = code.blocks
        lines.append(f"blocks {len(blocks)} {len(blocks[0])}")
        lines += [" ".join(map(str, b)) for b in blocks]
        lines.append("goodpoly " + " ".join(map(str, code.lspec.g.coefficients())))
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.lines)

    def peek_keyword(self) -> str | None:
        return None if self.done() else self.lines[self.pos].split()[0]

    def header(self, keyword: str, nargs: int | None = None) -> list[int]:
        if self.done():
            raise FormatError(f"expected '{keyword}' line, found end of file")
        parts = self.lines[self.pos].split()
        if parts[0] != keyword:
            raise FormatError(f"expected '{keyword}' line, found {self.lines[self.pos]!r}")
        try:
            args = [int(x) for x in parts[1:]]
        except ValueError:
            raise FormatError(f"non-integer field in {self.lines[self.pos]!r}") from None
        if nargs is not None and len(args) != nargs:
            raise FormatError(f"'{keyword}' takes {nargs} integers, got {len(args)}")
        self.pos += 1
        return args

    def rows(self, count: int, width: int) -> list[list[int]]:
        out = []
        for _ in range(count):
            if self.done():
                raise FormatError("unexpected end of file inside a matrix block")
            try:
                row = [int(x) for x in self.lines[self.pos].split()]
            except ValueError:
                raise FormatError(f"non-integer entry in {self.lines[self.pos]!r}") from None
            if len(row) != width:
                raise FormatError(f"row {self.lines[self.pos]!r} should have {width} entries")
            out.append(row)
            self.pos += 1
        return out


def _check_reps(F: GF, rows):
    for row in rows:
        for x in row:
            if not 0 <= x < F.q:
                raise FormatError(f"rep {x} out of range for GF({F.q})")


def loads(text: str) -> AnyCode:
    rd = _Reader(text)
    p, r = rd.header("field", 2)
    try:
        if r > 1:
            modulus = rd.header("modulus", r + 1)
            F = canonical_field(p, r)
            if tuple(modulus) != F.modulus:
                F = GF(p, r, modulus)
        else:
            F = canonical_field(p, r)
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None
    k, n = rd.header("generator", 2)
    rows = rd.rows(k, n)
    _check_reps(F, rows)
    try:
        code: AnyCode = from_span(F, rows, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if code.k != k:
        raise FormatError(f"generator rows have rank {code.k}, header says {k}")

    if rd.peek_keyword() == "points":
        npts, m = rd.header("points", 2)
        pts = rd.rows(npts, m)
        _check_reps(F, pts)
        (s,) = rd.header("polys", 1)
        polys = []
        for _ in range(s):
            (t,) = rd.header("poly", 1)
            terms = rd.rows(t, m + 1)
            _check_reps(F, [[row[0]] for row in terms])
            polys.append(MultiPoly(F, m, {tuple(row[1:]): row[0] for row in terms}))
        try:
            ev = EvaluationCode(F, pts, polys)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if ev.code != code:
            raise FormatError("generator block disagrees with the points/polys blocks")
        code = ev

    if rd.peek_keyword() == "blocks":
        b, s = rd.header("blocks", 2)
        blocks = rd.rows(b, s)
        _check_reps(F, blocks)
        g = rd.header("goodpoly")
        _check_reps(F, [g])
        try:
            lrc = build_lrc(F, b * s, k, s - 1, blocks, g)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if lrc.code != _linear(code):
            raise FormatError("generator block disagrees with the blocks/goodpoly sections")
        code = lrc

    if not rd.done():
        raise FormatError(f"unexpected trailing content: {rd.lines[rd.pos]!r}")
    return code


def dump(code: AnyCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(code))


def load(path) -> AnyCode:
    with open(path) as fh:
        return loads(fh.read())
