"""Univariate polynomials over a FiniteField.

A polynomial is a list of element codes, constant term first, with no
trailing zeros; the zero polynomial is [].
"""

from __future__ import annotations

import re
from itertools import product

from ..errors import ValidationError


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F, f):
    return [F.neg(c) for c in f]


def sub(F, f, g):
    return add(F, f, neg(F, g))


def scale(F, c, f):
    if c == 0:
        return []
    return [F.mul(c, a) for a in f]


def shift(f, k):
    """Multiply by t**k."""
    return [0] * k + list(f) if f else []


def mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lc = F.inv(g[-1])
    if len(f) <= dg:
        return [], trim(f)
    quot = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            c = F.mul(c, inv_lc)
            quot[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] = F.sub(f[i - dg + j], F.mul(c, g[j]))
    return trim(quot), trim(f[:dg])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def monic(F, f):
    if not f:
        return []
    return scale(F, F.inv(f[-1]), f)


def gcd(F, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def powmod(F, f, e, m):
    result = [1]
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return mod(F, result, m)


def evaluate(F, f, a):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, a), c)
    return acc


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F, f):
    """Rabin's irreducibility test over F = F_q."""
    f = trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    t = [0, 1]

    def frob_iter(j):
        # t^(q^j) mod f
        x = t
        for _ in range(j):
            x = powmod(F, x, F.q, f)
        return x

    if sub(F, frob_iter(d), t) != []:
        return False
    for ell in _prime_factors(d):
        h = sub(F, frob_iter(d // ell), t)
        if len(gcd(F, f, h)) != 1:
            return False
    return True


def iter_monic(F, d):
    """All monic polynomials of degree d, lexicographic from the constant term up."""
    for cs in product(range(F.q), repeat=d):
        yield list(cs) + [1]


def iter_monic_irreducibles(F, d):
    for f in iter_monic(F, d):
        if is_irreducible(F, f):
            yield f


def has_factor_of_degree_at_most(F, f, bound):
    """Trial division by every monic polynomial of degree 1..bound.

    Exhaustive and slow; kept as an independent check on is_irreducible.
    """
    for e in range(1, bound + 1):
        for g in iter_monic(F, e):
            if not mod(F, f, g):
                return True
    return False


# -- text rendering and parsing ---------------------------------------------


def render(F, f, var="t"):
    """Render with terms in decreasing degree, e.g. 't^5 + t^2 + 1'.

    Non-unit coefficients are printed as their element code.
    """
    f = trim(f)
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            mon = ""
        elif i == 1:
            mon = var
        else:
            mon = f"{var}^{i}"
        if not mon:
            terms.append(str(c))
        elif c == 1:
            terms.append(mon)
        else:
            terms.append(f"{c}*{mon}")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([a-zA-Z])(?:\^(\d+))?)?$")


def parse(F, text, var="t"):
    """Parse a sum of terms 'c*t^k'; coefficients are element codes.

    Subtraction is accepted for prime fields only.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValidationError("empty polynomial string")
    s = s.replace("-", "+-")
    coeffs = {}
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            if F.k != 1:
                raise ValidationError("negative coefficients only over prime fields")
            sign, raw = -1, raw[1:]
        m = _TERM.match(raw)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValidationError(f"cannot parse term {raw!r} in {text!r}")
        c_txt, v, e_txt = m.groups()
        if v is not None and v != var:
            raise ValidationError(f"unexpected variable {v!r}; expected {var!r}")
        c = int(c_txt) if c_txt is not None else 1
        if F.k == 1:
            c = (sign * c) % F.p
        elif c >= F.q:
            raise ValidationError(f"coefficient code {c} out of range for F_{F.q}")
        e = 0 if v is None else (int(e_txt) if e_txt else 1)
        coeffs[e] = F.add(coeffs.get(e, 0), c)
    deg = max(coeffs) if coeffs else -1
    return trim([coeffs.get(i, 0) for i in range(deg + 1)])
