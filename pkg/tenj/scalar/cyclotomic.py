"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

A value is stored as its conductor N and the rational coefficients of
1, z, ..., z^(phi(N) - 1) where z = exp(2 pi i / N). Values are always kept in
canonical form: reduced modulo the N-th cyclotomic polynomial and moved to the
least conductor that supports them, so equality is a field comparison.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

import numpy as np

Coeffs = Tuple[Fraction, ...]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divide_monic(num: List[int], den: Sequence[int]) -> List[int]:
    num = list(num)
    deg = len(den) - 1
    out = [0] * (len(num) - deg)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + deg]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "division by a cyclotomic factor left a remainder"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divide_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(poly: Sequence[Fraction], n: int) -> Coeffs:
    """Remainder of ``poly`` modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    m = len(phi) - 1
    p = list(poly) + [Fraction(0)] * max(0, m - len(poly))
    for i in range(len(p) - 1, m - 1, -1):
        c = p[i]
        if c:
            for j in range(m + 1):
                p[i - m + j] -= c * phi[j]
    return tuple(Fraction(x) for x in p[:m])


@lru_cache(maxsize=1 << 14)
def _embed(n: int, coeffs: Coeffs, big: int) -> Coeffs:
    """Rewrite a value of conductor n at conductor ``big`` (n divides big)."""
    if n == big:
        return coeffs
    step = big // n
    poly = [Fraction(0)] * ((len(coeffs) - 1) * step + 1)
    for k, c in enumerate(coeffs):
        poly[k * step] = c
    return _reduce(poly, big)


def _solve_square(mat: List[List[Fraction]]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix; raises ZeroDivisionError when singular."""
    size = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _descent(small: int, big: int):
    """Embedding matrix Q(zeta_small) -> Q(zeta_big) and a left inverse on pivot rows."""
    m_small = euler_phi(small)
    unit = [Fraction(0)] * m_small
    columns = []
    for j in range(m_small):
        basis = list(unit)
        basis[j] = Fraction(1)
        columns.append(_embed(small, tuple(basis), big))
    embedding = [[columns[j][i] for j in range(m_small)] for i in range(euler_phi(big))]
    # greedy choice of independent rows
    rows: List[int] = []
    for i in range(len(embedding)):
        trial = rows + [i]
        sub = [embedding[r] for r in trial]
        if _rank(sub) == len(trial):
            rows = trial
        if len(rows) == m_small:
            break
    left = _solve_square([embedding[r] for r in rows])
    return embedding, rows, left


def _rank(mat: List[List[Fraction]]) -> int:
    m = [list(r) for r in mat]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=1 << 16)
def _canonical(n: int, coeffs: Coeffs) -> Tuple[int, Coeffs]:
    if n == 1 or not any(coeffs[1:]):
        return 1, (coeffs[0] if coeffs else Fraction(0),)
    for small in _divisors(n)[1:-1]:
        if small % 4 == 2:
            continue
        embedding, rows, left = _descent(small, n)
        x = [sum((left[i][j] * coeffs[r] for j, r in enumerate(rows)), Fraction(0))
             for i in range(len(left))]
        back = [sum((e * xi for e, xi in zip(row, x)), Fraction(0)) for row in embedding]
        if tuple(back) == coeffs:
            return _canonical(small, tuple(x))
    return n, coeffs


def _poly_trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(num: List[Fraction], den: List[Fraction]):
    num = list(num)
    quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / lead
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return _poly_trim(quot), _poly_trim(num[: len(den) - 1])


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    size = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (size - len(a))
    b = list(b) + [Fraction(0)] * (size - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=1 << 14)
def _mul(n1: int, c1: Coeffs, n2: int, c2: Coeffs) -> Tuple[int, Coeffs]:
    big = _lcm(n1, n2)
    a = _embed(n1, c1, big)
    b = _embed(n2, c2, big)
    return _canonical(big, _reduce(_poly_mul(list(a), list(b)), big))


@lru_cache(maxsize=1 << 14)
def _add(n1: int, c1: Coeffs, n2: int, c2: Coeffs) -> Tuple[int, Coeffs]:
    big = _lcm(n1, n2)
    a = _embed(n1, c1, big)
    b = _embed(n2, c2, big)
    return _canonical(big, tuple(x + y for x, y in zip(a, b)))


@lru_cache(maxsize=1 << 12)
def _inverse(n: int, coeffs: Coeffs) -> Tuple[int, Coeffs]:
    modulus = [Fraction(c) for c in cyclotomic_polynomial(n)]
    r0, r1 = modulus, _poly_trim(list(coeffs))
    s0: List[Fraction] = []
    s1: List[Fraction] = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r0 is the (constant) gcd
    assert len(r0) == 1, "cyclotomic polynomial is irreducible"
    inv = [c / r0[0] for c in s0]
    return _canonical(n, _reduce(inv, n))


class Cyclotomic:
    """An exact element of Q(zeta_N) in canonical form. Immutable."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Union[int, Fraction, str]]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        n, canon = _canonical(conductor, _reduce(coeffs, conductor))
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "coeffs", canon)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, pair: Tuple[int, Coeffs]) -> "Cyclotomic":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "conductor", pair[0])
        object.__setattr__(obj, "coeffs", pair[1])
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def from_rational(cls, value: Union[int, Fraction, str]) -> "Cyclotomic":
        return cls._make((1, (Fraction(value),)))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity exp(2 pi i k / n)."""
        return _zeta(n, k % n)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> Tuple[float, float]:
        """Floating approximation, for display only."""
        k = np.arange(len(self.coeffs))
        powers = np.exp(2j * np.pi * k / self.conductor)
        value = complex(np.dot(np.array([float(c) for c in self.coeffs]), powers))
        return value.real, value.imag

    def conjugate(self) -> "Cyclotomic":
        n = self.conductor
        poly = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            poly[(-k) % n] += c
        return Cyclotomic(n, poly)

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational:
            return Cyclotomic._make((1, (1 / self.coeffs[0],)))
        return Cyclotomic._make(_inverse(self.conductor, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.conductor == 1 and o.conductor == 1:
            return Cyclotomic._make((1, (self.coeffs[0] + o.coeffs[0],)))
        return Cyclotomic._make(_add(self.conductor, self.coeffs, o.conductor, o.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._make((self.conductor, tuple(-c for c in self.coeffs)))

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.conductor == 1:
            c = o.coeffs[0]
            if c == 1:
                return self
            if c == 0:
                return ZERO
            return Cyclotomic._make((self.conductor, tuple(x * c for x in self.coeffs)))
        if self.conductor == 1:
            return o * self
        return Cyclotomic._make(_mul(self.conductor, self.coeffs, o.conductor, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if not isinstance(exponent, (int, np.integer)):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(int(exponent))
        result = ONE
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.conductor == o.conductor and self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash(self.coeffs[0]) if self.is_rational else hash((self.conductor, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __reduce__(self):
        return (Cyclotomic, (self.conductor, self.coeffs))

    def __str__(self) -> str:
        from tenj.scalar.codec import format_exact

        return format_exact(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"


def _coerce(value) -> "Cyclotomic":
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, np.integer):
        value = int(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Cyclotomic._make((1, (Fraction(value),)))
    return None  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _zeta(n: int, k: int) -> Cyclotomic:
    poly = [Fraction(0)] * (k + 1)
    poly[k] = Fraction(1)
    return Cyclotomic(n, poly)


ZERO = Cyclotomic._make((1, (Fraction(0),)))
ONE = Cyclotomic._make((1, (Fraction(1),)))


def as_cyclotomic(value) -> Cyclotomic:
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")
    return out


def cyc_add(a, b) -> Cyclotomic:
    return as_cyclotomic(a) + as_cyclotomic(b)


def cyc_mul(a, b) -> Cyclotomic:
    return as_cyclotomic(a) * as_cyclotomic(b)


def cyc_sub(a, b) -> Cyclotomic:
    return as_cyclotomic(a) - as_cyclotomic(b)


def cyc_neg(a) -> Cyclotomic:
    return -as_cyclotomic(a)


def cyc_div(a, b) -> Cyclotomic:
    """Raises ZeroDivisionError when ``b`` is zero."""
    return as_cyclotomic(a) / as_cyclotomic(b)


def cyc_pow(a, exponent: int) -> Cyclotomic:
    return as_cyclotomic(a) ** exponent


def cyc_inv(a) -> Cyclotomic:
    return as_cyclotomic(a).inverse()


def cyc_to_complex(a) -> Tuple[float, float]:
    return as_cyclotomic(a).to_complex()


def product(values) -> Cyclotomic:
    result = ONE
    for v in values:
        result = result * v
    return result
