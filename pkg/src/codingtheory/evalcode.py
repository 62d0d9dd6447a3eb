"""Evaluation codes C_X(S): images of polynomial spans evaluated on point sets."""

from __future__ import annotations

import itertools
import warnings
from typing import Sequence

from .code import LinearCode, from_span
from .galois import GF, field_of_order
from .matgf import Matrix
from .multipoly import GRLEX, LazyIdeal, MonomialOrder, MultiPoly, VanishingIdeal, coerce_points, default_variables, parse_poly


class EvaluationCode:
    """Evaluation code of the polynomials ``polys`` on ``points``.

    Attributes mirror the construction: ``points`` (deduplicated, order
    kept), ``polys`` (the spanning set, possibly dependent), ``raw_eval``
    (``len(polys) x n``, row i = values of polys[i]) and ``code``, the
    underlying :class:`LinearCode`.
    """

    def __init__(self, field: GF, points: Sequence[Sequence], polys: Sequence, order: MonomialOrder = GRLEX):
        pts = []
        seen = set()
        for pt in coerce_points(field, points):
            if pt not in seen:
                seen.add(pt)
                pts.append(pt)
        if not pts:
            raise ValueError("an evaluation code needs at least one point")
        m = len(pts[0])
        polys = [_as_poly(field, m, f) for f in polys]
        if not polys:
            raise ValueError("an evaluation code needs at least one polynomial")
        self.field = field
        self.points = pts
        self.polys = polys
        self.raw_eval = Matrix._trusted(field, [[f.eval_rep(pt) for pt in pts] for f in polys], len(pts))
        self.code = from_span(field, self.raw_eval.rows, len(pts))
        self._ideal = LazyIdeal(field, pts, order)

    @property
    def nvars(self) -> int:
        return len(self.points[0])

    @property
    def linear_code(self) -> LinearCode:
        return self.code

    @property
    def vanishing_ideal(self) -> VanishingIdeal:
        return self._ideal.get()

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def evaluate(self, f: MultiPoly) -> tuple[int, ...]:
        return tuple(f.eval_rep(pt) for pt in self.points)

    def __repr__(self):
        return f"EvaluationCode({self.field!r}, [{self.n}, {self.k}], {len(self.polys)} polys)"

    def __str__(self):
        return str(self.code)


def _as_poly(F: GF, m: int, f) -> MultiPoly:
    if isinstance(f, MultiPoly):
        if f.field != F or f.nvars != m:
            raise ValueError(f"polynomial {f} does not live in GF({F.q})[{m} vars]")
        return f
    if isinstance(f, str):
        return parse_poly(f, F, default_variables(m))
    exps = [int(e) for e in f]
    if len(exps) != m:
        raise ValueError(f"exponent vector {exps} has arity {len(exps)}, points have {m}")
    return MultiPoly.monomial(F, exps)


def evaluation_code(field: GF, points: Sequence[Sequence], polys: Sequence) -> EvaluationCode:
    """``polys`` may mix MultiPoly objects, strings like ``"a+y*z^2"`` and
    exponent vectors (one monomial each)."""
    return EvaluationCode(field, points, polys)


def monomials_up_to(degree: int, caps: Sequence[int]) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree <= degree with e_i <= caps[i], graded then lex."""
    mons = [e for e in itertools.product(*(range(c + 1) for c in caps)) if sum(e) <= degree]
    return sorted(mons, key=lambda e: (sum(e), tuple(-x for x in e)))


def cartesian_code(field: GF, subsets: Sequence[Sequence], d: int | None = None, polys: Sequence | None = None) -> EvaluationCode:
    """Evaluation on the grid A_1 x ... x A_m (last coordinate varies fastest).

    With ``d``, the span is every monomial of total degree <= d whose
    exponent in variable i is at most |A_i| - 1.
    """
    sets = [[field.coerce(x) for x in A] for A in subsets]
    for A in sets:
        if not A:
            raise ValueError("empty subset")
        if len(set(A)) != len(A):
            raise ValueError(f"duplicate entries in subset {A}")
    points = list(itertools.product(*sets))
    if polys is None:
        if d is None or d < 0:
            raise ValueError("give a degree d >= 0 or an explicit polynomial list")
        polys = monomials_up_to(d, [len(A) - 1 for A in sets])
    return EvaluationCode(field, points, polys)


def rm_code(q: int, m: int, d: int) -> EvaluationCode:
    """Generalized Reed-Muller code: degree <= d polynomials on all of GF(q)^m."""
    if m < 1 or d < 0:
        raise ValueError(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    F = field_of_order(q)
    return cartesian_code(F, [list(range(q))] * m, d)


def rs_code(field: GF, points: Sequence, k: int) -> EvaluationCode:
    """Reed-Solomon code: polynomials of degree < k evaluated at distinct scalars."""
    pts = [field.coerce(x) for x in points]
    if len(set(pts)) != len(pts):
        raise ValueError("Reed-Solomon evaluation points must be distinct")
    if not 1 <= k <= len(pts):
        raise ValueError(f"need 1 <= k <= {len(pts)}, got {k}")
    return EvaluationCode(field, [(x,) for x in pts], [(i,) for i in range(k)])


def toric_code(field: GF, exponents: Sequence[Sequence[int]]) -> EvaluationCode:
    """Monomials x^u (u = rows of ``exponents``) evaluated on the torus (F*)^m.

    Exponents are reduced mod q-1, so negative entries are allowed.
    """
    E = [list(map(int, u)) for u in exponents]
    if not E or not E[0]:
        raise ValueError("exponent matrix needs at least one row and one column")
    m = len(E[0])
    if any(len(u) != m for u in E):
        raise ValueError("ragged exponent matrix")
    q = field.q
    if q == 2:
        warnings.warn("the torus over GF(2) is a single point; the toric code has length 1", stacklevel=2)
    points = list(itertools.product(range(1, q), repeat=m))
    monos = [tuple(e % (q - 1) for e in u) for u in E]
    return EvaluationCode(field, points, monos)


def ev_code_graph(field: GF, incidence: Sequence[Sequence[int]], d: int) -> EvaluationCode:
    """Graph code: the rows of a vertex x edge incidence matrix are the points,
    the span is every monomial of total degree exactly d in one variable per edge."""
    rows = [list(map(int, r)) for r in incidence]
    if not rows or not rows[0]:
        raise ValueError("empty incidence matrix")
    if any(x not in (0, 1) for r in rows for x in r):
        raise ValueError("incidence entries must be 0 or 1")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    e = len(rows[0])
    monos = []
    for combo in itertools.combinations_with_replacement(range(e), d):
        exps = [0] * e
        for i in combo:
            exps[i] += 1
        monos.append(tuple(exps))
    return EvaluationCode(field, rows, monos)
