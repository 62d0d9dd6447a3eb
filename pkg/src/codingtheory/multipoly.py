"""Sparse multivariate polynomials over GF(q) and vanishing ideals of points.

Monomials are exponent tuples; a polynomial is a dict monomial -> nonzero rep.
The vanishing ideal of a finite point set is computed with the
Buchberger-Moeller algorithm, which walks monomials in increasing order and
uses Gaussian elimination on their evaluation vectors.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .galois import GF, FieldElement

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grlex`` with x1 the heaviest variable."""

    kind: str = "grlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, mono: Monomial):
        if self.kind == "lex":
            return mono
        return (sum(mono), mono)

    def less(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) < self.key(v)


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def default_variables(nvars: int) -> tuple[str, ...]:
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


class MultiPoly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: GF, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.field = field
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            rep = field.coerce(c)
            if rep:
                clean[mono] = field.add(clean.get(mono, 0), rep)
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def _trusted(cls, field: GF, nvars: int, terms: dict[Monomial, int]) -> MultiPoly:
        f = cls.__new__(cls)
        f.field = field
        f.nvars = nvars
        f.terms = {m: c for m, c in terms.items() if c}
        return f

    @classmethod
    def zero(cls, field: GF, nvars: int) -> MultiPoly:
        return cls._trusted(field, nvars, {})

    @classmethod
    def constant(cls, field: GF, nvars: int, c=1) -> MultiPoly:
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: GF, exps: Sequence[int], c=1) -> MultiPoly:
        return cls(field, len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, field: GF, nvars: int, i: int) -> MultiPoly:
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(field, e)

    @classmethod
    def univariate(cls, field: GF, coeffs: Sequence) -> MultiPoly:
        """From ascending coefficients c0, c1, ..."""
        return cls(field, 1, {(i,): c for i, c in enumerate(coeffs)})

    # structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def coefficients(self) -> list[int]:
        """Ascending coefficient reps of a univariate polynomial."""
        if self.nvars != 1:
            raise ValueError("coefficients() needs a univariate polynomial")
        out = [0] * (self.degree() + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    def leading_monomial(self, order: MonomialOrder = GRLEX) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GRLEX) -> FieldElement:
        return FieldElement(self.field, self.terms[self.leading_monomial(order)])

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.field != self.field or other.nvars != self.nvars:
                raise ValueError("polynomials over different rings")
            return other
        return MultiPoly.constant(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = F.add(out.get(m, 0), c)
        return MultiPoly._trusted(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MultiPoly._trusted(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> MultiPoly:
        F = self.field
        c = F.coerce(c)
        return MultiPoly._trusted(F, self.nvars, {m: F.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._coerce(other)
        F = self.field
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = F.add(out.get(m, 0), F.mul(c1, c2))
        return MultiPoly._trusted(F, self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.field, self.nvars, self.terms) == (other.field, other.nvars, other.terms)
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    __hash__ = None

    # evaluation ---------------------------------------------------------

    def evaluate(self, point: Sequence) -> FieldElement:
        return FieldElement(self.field, self.eval_rep([self.field.coerce(x) for x in point]))

    __call__ = evaluate

    def eval_rep(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"point of arity {len(point)} for {self.nvars} variables")
        F = self.field
        acc = 0
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(point, mono):
                if e:
                    v = F.mul(v, F.pow(x, e))
            acc = F.add(acc, v)
        return acc

    # text ---------------------------------------------------------------

    def sorted_terms(self, order: MonomialOrder = GRLEX) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_string(self, variables: Sequence[str] | None = None, order: MonomialOrder = GRLEX) -> str:
        if not self.terms:
            return "0"
        names = variables or default_variables(self.nvars)
        F = self.field
        parts = []
        for mono, c in self.sorted_terms(order):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            coef = F.render(c)
            if "+" in coef:
                coef = f"({coef})"
            if not factors:
                parts.append(coef)
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([coef] + factors))
        return " + ".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.to_string()})"

    def to_text(self) -> str:
        """One line per term: ``c e1 ... em`` with c a decimal rep."""
        return "\n".join(
            " ".join(map(str, (c,) + mono)) for mono, c in sorted(self.terms.items())
        )

    @classmethod
    def from_text(cls, field: GF, nvars: int, text: str) -> MultiPoly:
        terms: dict[Monomial, int] = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            nums = list(map(int, line.split()))
            if len(nums) != nvars + 1:
                raise ValueError(f"term line {line!r} does not have {nvars + 1} fields")
            if not 0 <= nums[0] < field.q:
                raise ValueError(f"rep {nums[0]} out of range for {field!r}")
            mono = tuple(nums[1:])
            terms[mono] = field.add(terms.get(mono, 0), nums[0])
        return cls(field, nvars, terms)


_FACTOR = re.compile(r"^([A-Za-z_]\w*|\d+)(?:\^(\d+))?$")


def parse_poly(text: str, field: GF, variables: Sequence[str]) -> MultiPoly:
    """Parse a human-readable polynomial such as ``a + y*z^2`` or ``2*x1^2*x3 - 1``.

    ``a`` is the field generator unless it is also listed as a variable.
    Integer literals are integers (mapped into the prime subfield).
    """
    nvars = len(variables)
    index = {v: i for i, v in enumerate(variables)}
    s = text.replace(" ", "")
    if not s or not re.fullmatch(r"(?:[+-]?[^+-]+)+", s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    result = MultiPoly.zero(field, nvars)
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        coef = 1
        exps = [0] * nvars
        for factor in body.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            name, power = m.group(1), int(m.group(2) or 1)
            if name.isdigit():
                coef = field.mul(coef, field.pow(field.from_int(int(name)), power))
            elif name in index:
                exps[index[name]] += power
            elif name == "a" and field.r > 1:
                coef = field.mul(coef, field.pow(field.p, power))
            else:
                raise ValueError(f"unknown symbol {name!r} in {text!r}")
        term = MultiPoly._trusted(field, nvars, {tuple(exps): coef})
        result = result - term if sign == "-" else result + term
    return result


# --- reduction and vanishing ideals -------------------------------------------


def reduce(f: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder = GRLEX) -> MultiPoly:
    """Normal form of ``f`` modulo ``basis`` (multivariate division remainder)."""
    F = f.field
    leads = []
    for g in basis:
        lm = g.leading_monomial(order)
        leads.append((lm, F.inv(g.terms[lm]), g))
    work = dict(f.terms)
    rem: dict[Monomial, int] = {}
    while work:
        lm = max(work, key=order.key)
        c = work[lm]
        for glm, ginv, g in leads:
            if divides(glm, lm):
                factor = F.mul(c, ginv)
                shift = tuple(a - b for a, b in zip(lm, glm))
                for gm, gc in g.terms.items():
                    m = tuple(a + b for a, b in zip(gm, shift))
                    v = F.sub(work.get(m, 0), F.mul(factor, gc))
                    if v:
                        work[m] = v
                    else:
                        work.pop(m, None)
                break
        else:
            rem[lm] = c
            del work[lm]
    return MultiPoly._trusted(F, f.nvars, rem)


@dataclass
class VanishingIdeal:
    """Reduced Groebner basis of I(X) plus the standard monomials."""

    field: GF
    nvars: int
    order: MonomialOrder
    basis: list[MultiPoly]
    standard_monomials: list[Monomial]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return reduce(f, self.basis, self.order)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.basis]


def coerce_points(field: GF, points: Iterable[Sequence]) -> list[tuple[int, ...]]:
    pts = [tuple(field.coerce(x) for x in pt) for pt in points]
    if pts and len({len(p) for p in pts}) != 1:
        raise ValueError("points have different dimensions")
    return pts


def vanishing_ideal(field: GF, points: Iterable[Sequence], order: MonomialOrder = GRLEX) -> VanishingIdeal:
    """Buchberger-Moeller: reduced Groebner basis of the ideal of a finite point set."""
    pts = coerce_points(field, points)
    if not pts:
        raise ValueError("vanishing ideal of an empty point set")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    F = field
    n, m = len(pts), len(pts[0])
    coords = [[pt[i] for pt in pts] for i in range(m)]
    mul_vec = (lambda x, y: [F.mul(a, b) for a, b in zip(x, y)])

    candidates: dict[Monomial, list[int]] = {(0,) * m: [1] * n}
    echelon: list[tuple[int, list[int], dict[Monomial, int]]] = []
    basis: list[MultiPoly] = []
    leads: list[Monomial] = []
    standard: list[Monomial] = []

    while candidates:
        t = min(candidates, key=order.key)
        tvec = candidates.pop(t)
        v = list(tvec)
        poly = {t: 1}
        for piv, bvec, bpoly in echelon:
            c = v[piv]
            if c:
                negc = F.neg(c)
                v = F.axpy(v, negc, bvec)
                for mono, bc in bpoly.items():
                    poly[mono] = F.add(poly.get(mono, 0), F.mul(negc, bc))
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is None:
            basis.append(MultiPoly._trusted(F, m, poly))
            leads.append(t)
            candidates = {u: w for u, w in candidates.items() if not divides(t, u)}
            continue
        inv = F.inv(v[nz])
        echelon.append((nz, F.scale_vec(inv, v), {k: F.mul(inv, c) for k, c in poly.items()}))
        standard.append(t)
        for i in range(m):
            u = t[:i] + (t[i] + 1,) + t[i + 1 :]
            if u in candidates or any(divides(lm, u) for lm in leads):
                continue
            candidates[u] = mul_vec(tvec, coords[i])

    return VanishingIdeal(F, m, order, basis, standard)


class LazyIdeal:
    """Compute-once holder for a vanishing ideal, safe under concurrent access."""

    def __init__(self, field: GF, points, order: MonomialOrder = GRLEX):
        self._args = (field, points, order)
        self._lock = threading.Lock()
        self._value: VanishingIdeal | None = None

    def get(self) -> VanishingIdeal:
        if self._value is None:
            with self._lock:
                if self._value is None:
                    self._value = vanishing_ideal(*self._args)
        return self._value
