"""
Exact integer polynomials in the indeterminate q.

A polynomial is stored as a tuple of Python ints, constant term first, with no
trailing zeros. The zero polynomial is the empty tuple.

>>> cyclotomic(30)
QPolynomial('q^8+q^7-q^5-q^4-q^3+q+1')
"""
from __future__ import annotations

import functools
import re

from .errors import BrauerError

__all__ = [
    "QPolynomial",
    "cyclotomic",
    "phi_part",
    "defect",
    "congruent_mod_phi",
    "parse_poly",
]


class QPolynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> QPolynomial:
        if n < 0:
            raise BrauerError("invalid-argument", "negative exponent")
        return cls([0] * n + [c])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return QPolynomial(-c for c in self._coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self._coeffs, other._coeffs
        n = max(len(a), len(b))
        return QPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise BrauerError("invalid-argument", "negative power")
        result = QPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, divisor: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
        """Long division over the integers.

        Requires every step to divide exactly by the divisor's leading
        coefficient (always true for monic divisors).
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise BrauerError("invalid-argument", "division by zero polynomial")
        rem = list(self._coeffs)
        db = divisor._coeffs
        lead = db[-1]
        dq = len(rem) - len(db)
        if dq < 0:
            return QPolynomial(), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(db) - 1]
            if c == 0:
                continue
            if c % lead:
                raise BrauerError("invalid-argument", "division is not exact over the integers")
            f = c // lead
            quot[k] = f
            for j, y in enumerate(db):
                rem[k + j] -= f * y
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: QPolynomial) -> QPolynomial:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise BrauerError("invalid-argument", f"{divisor} does not divide {self}")
        return q

    def divides(self, other: QPolynomial) -> bool:
        """True iff self divides other exactly over the integers."""
        try:
            _, r = _coerce(other).divmod(self)
        except BrauerError:
            return False
        return r.is_zero()

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"QPolynomial('{self}')"


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


_TERM = re.compile(r"([+-]?)([^+-]+)")
_FACTOR = re.compile(r"^(?:(\d+)|q(?:\^(\d+))?)$")


def parse_poly(text: str) -> QPolynomial:
    """Parse sums of products of integers, ``q`` and ``q^n``.

    >>> parse_poly("q^8 + q^7 - 2*q + 1")
    QPolynomial('q^8+q^7-2*q+1')
    """
    s = "".join(text.split())
    if not s:
        raise BrauerError("invalid-argument", "empty polynomial")
    pos = 0
    total = QPolynomial()
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise BrauerError("invalid-argument", f"cannot parse polynomial {text!r}")
        term = QPolynomial.constant(-1 if m.group(1) == "-" else 1)
        for factor in m.group(2).split("*"):
            f = _FACTOR.match(factor)
            if not f:
                raise BrauerError("invalid-argument", f"cannot parse factor {factor!r}")
            if f.group(1) is not None:
                term = term * int(f.group(1))
            else:
                term = term * QPolynomial.monomial(int(f.group(2) or 1))
        total = total + term
        pos = m.end()
    return total


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """The d-th cyclotomic polynomial, by dividing q^d - 1 by the smaller ones."""
    if not isinstance(d, int) or d < 1:
        raise BrauerError("invalid-argument", f"cyclotomic index must be >= 1, got {d!r}")
    p = QPolynomial.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


def phi_part(p: QPolynomial, d: int) -> int:
    """Largest a such that Phi_d^a divides p."""
    p = _coerce(p)
    if p.is_zero():
        raise BrauerError("invalid-argument", "Phi-part of the zero polynomial")
    phi = cyclotomic(d)
    a = 0
    while True:
        quot, rem = p.divmod(phi)
        if not rem.is_zero():
            return a
        p = quot
        a += 1


def defect(deg: QPolynomial, order: QPolynomial, d: int) -> int:
    """Phi_d-valuation of the group order minus that of the degree."""
    deg, order = _coerce(deg), _coerce(order)
    if deg.is_zero() or order.is_zero():
        raise BrauerError("invalid-argument", "defect needs nonzero polynomials")
    a = phi_part(order, d) - phi_part(deg, d)
    if a < 0:
        raise BrauerError(
            "inconsistent-input", "degree has a larger Phi-part than the group order"
        )
    return a


def congruent_mod_phi(p1: QPolynomial, p2: QPolynomial, d: int) -> bool:
    """True iff Phi_d divides p1 - p2."""
    diff = _coerce(p1) - _coerce(p2)
    if diff.is_zero():
        return True
    return diff.divmod(cyclotomic(d))[1].is_zero()
