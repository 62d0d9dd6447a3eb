"""Exact arithmetic in GF(p) and GF(p^r).

Elements are stored as a single integer ``rep`` in ``[0, q)`` whose base-p
digits (least significant first) are the coefficients of the element as a
polynomial in the generator ``a``. The defining modulus for ``r > 1`` is the
lexicographically smallest monic irreducible polynomial of degree ``r``
(coefficients compared from the constant term upward).
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

# q at or below this gets full add/mul tables
TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, r)`` with ``q == p**r``; raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, r


# --- univariate polynomials over GF(p), ascending coefficient lists ---------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = _trim(list(f))
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def _poly_mulmod(f: Sequence[int], g: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _poly_mod(out, m, p)


def _poly_gcd(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _poly_mod(f, g, p)
    return f


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of ``f`` over GF(p), ``f`` given ascending.

    f of degree r is irreducible iff gcd(f, x^(p^i) - x) = 1 for all i <= r/2.
    """
    f = _trim(list(f))
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(r // 2):
        # power <- power^p mod f
        acc = [1]
        base = power
        e = p
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, f, p)
            base = _poly_mulmod(base, base, f, p)
            e >>= 1
        power = acc
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lex-smallest monic irreducible of degree r over GF(p), ascending coefficients."""
    # product() varies the last slot fastest, so c0 is the most significant key
    for low in itertools.product(range(p), repeat=r):
        coeffs = tuple(low) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("an irreducible polynomial always exists")


class GF:
    """The finite field GF(p^r).

    Arithmetic methods take and return integer reps. ``F(x)`` wraps a value
    as a :class:`FieldElement`; integers are interpreted as reps (for prime
    fields any integer is reduced mod p, so ``F(-1)`` works).
    """

    def __init__(self, p: int, r: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        self.p = p
        self.r = r
        self.q = p**r
        if r == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus: tuple[int, ...] | None = None
        elif modulus is None:
            self.modulus = smallest_irreducible(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {r}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
        self._tables = self.q <= TABLE_LIMIT and self.r > 1
        if self._tables:
            q = self.q
            self.add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self.mul_table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self.neg_table = [self._neg_slow(a) for a in range(q)]
            self.inv_table = [0] + [
                next(b for b in range(1, q) if self.mul_table[a][b] == 1) for a in range(1, q)
            ]
        self._alphabet: tuple[int, ...] | None = None

    # identity ---------------------------------------------------------

    def _key(self):
        return (self.p, self.r, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={self.modulus_string()})"

    def modulus_string(self) -> str:
        if self.modulus is None:
            return ""
        terms = []
        for e in range(self.r, -1, -1):
            c = self.modulus[e]
            if c == 0:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    # digit helpers ----------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def _undigits(self, ds: Iterable[int]) -> int:
        rep = 0
        for d in reversed(list(ds)):
            rep = rep * self.p + d
        return rep

    def _add_slow(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._undigits((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def _neg_slow(self, a):
        if self.p == 2:
            return a
        return self._undigits((-x) % self.p for x in self._digits(a))

    def _mul_slow(self, a, b):
        if not a or not b:
            return 0
        prod = _poly_mulmod(_trim(self._digits(a)), _trim(self._digits(b)), self.modulus, self.p)
        return self._undigits(prod + [0] * (self.r - len(prod)))

    # rep arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self._tables:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.r == 1:
            return -a % self.p
        if self._tables:
            return self.neg_table[a]
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        if self._tables:
            return self.mul_table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        if self._tables:
            return self.inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.r == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # vector helpers used by the hot loops in matgf/code ---------------

    def add_vec(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        if self.r == 1:
            p = self.p
            return [(a + b) % p for a, b in zip(x, y)]
        if self._tables:
            t = self.add_table
            return [t[a][b] for a, b in zip(x, y)]
        return [self._add_slow(a, b) for a, b in zip(x, y)]

    def scale_vec(self, c: int, x: Sequence[int]) -> list[int]:
        if self.r == 1:
            p = self.p
            return [c * a % p for a in x]
        if self._tables:
            row = self.mul_table[c]
            return [row[a] for a in x]
        return [self._mul_slow(c, a) for a in x]

    def axpy(self, y: Sequence[int], c: int, x: Sequence[int]) -> list[int]:
        """Return y + c*x."""
        if c == 0:
            return list(y)
        if self.r == 1:
            p = self.p
            return [(b + c * a) % p for a, b in zip(x, y)]
        if self._tables:
            row = self.mul_table[c]
            t = self.add_table
            return [t[b][row[a]] for a, b in zip(x, y)]
        return [self._add_slow(b, self._mul_slow(c, a)) for a, b in zip(x, y)]

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        if self.r == 1:
            return sum(a * b for a, b in zip(x, y)) % self.p
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc

    # elements ---------------------------------------------------------

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero rep."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def primitive_element(self) -> int:
        return next(a for a in range(1, self.q) if self.order(a) == self.q - 1)

    def alphabet(self) -> tuple[int, ...]:
        """Reps in display order.

        Prime fields: 0, 1, ..., p-1. Extensions: 0 followed by the powers
        g, g^2, ..., g^(q-1) = 1 of the smallest-rep primitive element g.
        """
        if self._alphabet is None:
            if self.r == 1:
                self._alphabet = tuple(range(self.p))
            else:
                g = self.primitive_element()
                seq = [0]
                x = g
                for _ in range(self.q - 1):
                    seq.append(x)
                    x = self.mul(x, g)
                self._alphabet = tuple(seq)
        return self._alphabet

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in self.alphabet()]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of x modulo the defining polynomial (``a``); for prime fields, 1."""
        return FieldElement(self, self.p if self.r > 1 else 1)

    def coerce(self, x) -> int:
        """Turn an int rep, a FieldElement, or a rendered string into a rep."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError(f"element of {x.field!r} used in {self!r}")
            return x.rep
        if isinstance(x, str):
            return self.parse(x).rep
        if isinstance(x, bool):
            raise TypeError("bool is not a field value")
        try:
            n = int(x)
        except (TypeError, ValueError):
            raise TypeError(f"cannot coerce {x!r} into {self!r}") from None
        if n != x:
            raise TypeError(f"cannot coerce {x!r} into {self!r}")
        if self.r == 1:
            return n % self.p
        if not 0 <= n < self.q:
            raise ValueError(f"rep {n} out of range for {self!r}")
        return n

    def from_int(self, n: int) -> int:
        """Rep of the integer n, i.e. n*1 in the prime subfield."""
        return n % self.p

    def __call__(self, x) -> FieldElement:
        return FieldElement(self, self.coerce(x))

    def __len__(self):
        return self.q

    def __iter__(self):
        return iter(self.elements())

    # text -------------------------------------------------------------

    def render(self, a: int) -> str:
        if self.r == 1 or a < self.p:
            return str(a)
        terms = []
        for e, c in reversed(list(enumerate(self._digits(a)))):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = "a" if e == 1 else f"a^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    _TERM = re.compile(r"^(\d*)\*?(a(?:\^(\d+))?)?$")

    def parse(self, text: str) -> FieldElement:
        """Parse ``render`` output; also tolerates signs, ``*`` and spaces."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty field element")
        if not re.fullmatch(r"(?:[+-]?[^+-]+)+", s):
            raise ValueError(f"cannot parse {text!r} as an element of {self!r}")
        acc = 0
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = self._TERM.match(body)
            if not m or (not m.group(1) and not m.group(2)):
                raise ValueError(f"cannot parse {text!r} as an element of {self!r}")
            c = self.from_int(int(m.group(1))) if m.group(1) else 1
            if m.group(2):
                if self.r == 1:
                    raise ValueError(f"{self!r} has no generator 'a'")
                c = self.mul(c, self.pow(self.p, int(m.group(3) or 1)))
            acc = self.sub(acc, c) if sign == "-" else self.add(acc, c)
        return FieldElement(self, acc)

    def header(self) -> str:
        lines = [f"field {self.p} {self.r}"]
        if self.modulus is not None:
            lines.append("modulus " + " ".join(map(str, self.modulus)))
        return "\n".join(lines)


@functools.lru_cache(maxsize=None)
def field(p: int, r: int = 1) -> GF:
    """Canonical GF(p^r), cached."""
    return GF(p, r)


def field_of_order(q: int) -> GF:
    return field(*prime_power(q))


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: GF
    rep: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot mix {self.field!r} and {other.field!r}")
            return other.rep
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.coerce(other)
        raise TypeError(f"unsupported operand {other!r}")

    def _wrap(self, rep):
        return FieldElement(self.field, rep)

    def __add__(self, other):
        return self._wrap(self.field.add(self.rep, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.rep, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.rep))

    def __neg__(self):
        return self._wrap(self.field.neg(self.rep))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.rep, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.rep, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.field.div(self._other(other), self.rep))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.rep, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.rep))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int) and not isinstance(other, bool):
            return self.rep == other
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __bool__(self):
        return self.rep != 0

    def __int__(self):
        return self.rep

    def __str__(self):
        return self.field.render(self.rep)

    def __repr__(self):
        return f"{self.field!r}({self})"
