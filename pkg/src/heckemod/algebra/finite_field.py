"""Finite fields F_{p^k} with integer-coded elements.

An element of F_{p^k} = F_p[s]/(m(s)) is the residue class of
c_0 + c_1 s + ... + c_{k-1} s^{k-1}; it is stored as the integer
code c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  Field operations are methods
on :class:`FiniteField` acting on codes, which keeps the inner loops of
the oracle cheap.  :class:`FFElement` wraps a code with operators for
readable code elsewhere (curve arithmetic, tests).

The defining modulus is the lexicographically smallest monic irreducible
of degree k over F_p, comparing coefficient tuples from the constant term
up, so codes are reproducible across runs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import ValidationError

TABLE_LIMIT = 256  # full q*q operation tables are built up to this order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise ValidationError."""
    if not isinstance(q, int) or q < 2:
        raise ValidationError(f"{q!r} is not a prime power")
    p = 2
    while q % p:
        p += 1
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValidationError(f"{q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValidationError:
        return False
    return True


def prime_powers(start: int = 2):
    """Yield the prime powers >= start in increasing order."""
    n = max(start, 2)
    while True:
        if is_prime_power(n):
            yield n
        n += 1


class FiniteField:
    """The field with p**k elements; see the module docstring for encoding."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ValidationError(f"characteristic {p!r} is not prime")
        if not isinstance(k, int) or k < 1:
            raise ValidationError(f"extension degree must be >= 1, got {k!r}")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = (0, 1) if k == 1 else _smallest_irreducible(p, k)
        modulus = tuple(modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValidationError("modulus must be monic of degree k")
        self.modulus = modulus
        self._build_logs()
        self._add = self._mul = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers -------------------------------------------

    def _digits(self, a):
        p, out = self.p, []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, cs):
        a = 0
        for c in reversed(cs):
            a = a * self.p + c
        return a

    def _slow_mul(self, a, b):
        p, k, m = self.p, self.k, self.modulus
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * m[j]) % p
        return self._undigits(prod[:k])

    def _slow_add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return self._undigits([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def _build_logs(self):
        q = self.q
        gen = None
        for g in range(1, q):
            x, order = g, 1
            while x != 1:
                x = self._slow_mul(x, g)
                order += 1
            if order == q - 1:
                gen = g
                break
        self.generator = gen
        exp = [0] * (2 * (q - 1))
        log = [None] * q
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        self._exp, self._log = exp, log
        self._neg = [self._undigits([(-c) % self.p for c in self._digits(a)]) for a in range(q)]

    def _build_tables(self):
        q = self.q
        self._add = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self.mul(a, b) for b in range(q)] for a in range(q)]

    def tables(self):
        """Return (add_table, mul_table) for use in tight loops."""
        if self._add is None:
            self._build_tables()
        return self._add, self._mul

    # -- arithmetic on codes --------------------------------------------

    zero = 0
    one = 1

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return self._slow_add(a, b)

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self._neg[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        """Image of the integer n under Z -> F."""
        return n % self.p

    def coefficients(self, a):
        """Coefficient list (c_0, ..., c_{k-1}) of an element code."""
        return tuple(self._digits(a))

    def from_coefficients(self, cs):
        cs = list(cs) + [0] * (self.k - len(cs))
        return self._undigits([c % self.p for c in cs])

    def elements(self):
        return range(self.q)

    def __call__(self, code):
        return FFElement(self, code)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={self.modulus})"

    def to_record(self):
        return {"p": self.p, "k": self.k}


def _smallest_irreducible(p, k):
    # Rabin's test over the prime field; tiny degrees only
    from .fqpoly import is_irreducible

    prime = FiniteField(p, 1)
    for cs in product(range(p), repeat=k):
        f = list(cs) + [1]
        if is_irreducible(prime, f):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def ff_create(p: int, k: int = 1) -> FiniteField:
    """The field with p**k elements under the canonical modulus rule."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    return ff_create(*prime_power(q))


class FFElement:
    """An element of a FiniteField with arithmetic operators."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        if not 0 <= code < field.q:
            raise ValidationError(f"code {code} out of range for F_{field.q}")
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ValidationError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.sub(b, self.code))

    def __neg__(self):
        return FFElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FFElement(self.field, self.field.div(b, self.code))

    def __pow__(self, e):
        return FFElement(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return FFElement(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __repr__(self):
        return f"F{self.field.q}({self.code})"
