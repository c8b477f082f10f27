"""The elliptic curve y^2 + y = x^3 + x + 1 over F_2 and its points over F_{2^n}.

The group law is the characteristic-2 Weierstrass law for curves
y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6 (a1 = 0, a3 != 0).  A point is a
pair of FFElements, or None for the point at infinity.
"""

from __future__ import annotations

from functools import lru_cache

from ..algebra.finite_field import FFElement, ff_create
from ..errors import ValidationError

MAX_LEVEL = 12


class WeierstrassChar2:
    """y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_{2^n}, with a3 != 0."""

    def __init__(self, a2=0, a3=1, a4=1, a6=1):
        if a3 % 2 == 0:
            raise ValidationError("a3 must be nonzero (the a1 = 0 shape is supersingular)")
        self.coeffs = (a2, a3, a4, a6)

    def field(self, n):
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"level must be >= 1, got {n!r}")
        if n > MAX_LEVEL:
            raise ValidationError(f"level {n} exceeds the enumeration cap {MAX_LEVEL}")
        return ff_create(2, n)

    def _a(self, F):
        return [FFElement(F, c) for c in self.coeffs]

    def contains(self, P, F):
        if P is None:
            return True
        x, y = P
        a2, a3, a4, a6 = self._a(F)
        return y * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6

    def neg(self, P, F):
        if P is None:
            return None
        _, a3, _, _ = self._a(F)
        return (P[0], P[1] + a3)

    def add(self, P, Q, F):
        if P is None:
            return Q
        if Q is None:
            return P
        a2, a3, a4, _ = self._a(F)
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 + y2 + a3 == 0:  # Q = -P
                return None
            # doubling
            lam = (x1 * x1 + a4) / a3
            x3 = lam * lam + a2
            y3 = lam * (x1 + x3) + y1 + a3
            return (x3, y3)
        lam = (y1 + y2) / (x1 + x2)
        x3 = lam * lam + a2 + x1 + x2
        y3 = lam * (x1 + x3) + y1 + a3
        return (x3, y3)

    def mul(self, k, P, F):
        result, base = None, P
        if k < 0:
            k, base = -k, self.neg(P, F)
        while k:
            if k & 1:
                result = self.add(result, base, F)
            base = self.add(base, base, F)
            k >>= 1
        return result

    def frobenius(self, P):
        if P is None:
            return None
        return (P[0] * P[0], P[1] * P[1])

    def points(self, n):
        """All points over F_{2^n}, infinity first, then by (x, y) codes."""
        F = self.field(n)
        out = [None]
        a2, a3, a4, a6 = self._a(F)
        for xc in range(F.q):
            x = FFElement(F, xc)
            rhs = x * x * x + a2 * x * x + a4 * x + a6
            for yc in range(F.q):
                y = FFElement(F, yc)
                if y * y + a3 * y == rhs:
                    out.append((x, y))
        return out

    def count_by_trace(self, n):
        """#X(F_{2^n}) via: y^2 + a3 y = c is solvable iff Tr(c / a3^2) = 0, then with 2 roots."""
        F = self.field(n)
        a2, a3, a4, a6 = self._a(F)
        count = 1
        for xc in range(F.q):
            x = FFElement(F, xc)
            c = (x * x * x + a2 * x * x + a4 * x + a6) / (a3 * a3)
            tr, z = c, c
            for _ in range(n - 1):
                z = z * z
                tr = tr + z
            if tr == 0:
                count += 2
        return count

    def count_by_frobenius(self, n):
        """#X(F_{2^n}) = 2^n + 1 - s_n, with s_n from the trace of Frobenius over F_2."""
        t = 2 + 1 - len(self.points(1))
        s_prev, s = 2, t  # s_0, s_1 for the roots of T^2 - t T + 2
        for _ in range(n - 1):
            s_prev, s = s, t * s - 2 * s_prev
        return 2**n + 1 - s


CURVE = WeierstrassChar2()


def render_point(P):
    if P is None:
        return "infinity"
    x, y = P
    return f"({x.code}, {y.code})"


def point_record(P):
    if P is None:
        return {"infinity": True}
    return {"x": P[0].code, "y": P[1].code}


@lru_cache(maxsize=None)
def _points(n):
    return tuple(CURVE.points(n))


def count_points(n: int):
    """(N_n, points) for X(F_{2^n})."""
    pts = list(_points(n))
    return len(pts), pts


class ClosedPointE:
    """A Frobenius orbit of points over F_{2^level}; its degree is the orbit size."""

    def __init__(self, name, orbit, level):
        self.name = name
        self.orbit = tuple(orbit)
        self.level = level
        self.degree = len(self.orbit)

    def representative(self):
        return self.orbit[0]

    def render(self):
        return self.name

    def to_record(self):
        return {"name": self.name, "degree": self.degree, "points": [point_record(P) for P in self.orbit]}

    def __eq__(self, other):
        return isinstance(other, ClosedPointE) and self.name == other.name and self.degree == other.degree

    def __hash__(self):
        return hash(("E", self.name, self.degree))

    def __repr__(self):
        return f"ClosedPointE({self.name}, degree {self.degree})"


def _orbit(P):
    orbit = [P]
    Q = CURVE.frobenius(P)
    while Q != P:
        orbit.append(Q)
        Q = CURVE.frobenius(Q)
    return orbit


# names used in the worked example: over F_4 = F_2(a), x1 = (0, a), y1 = (1, a)
_NAMES = {(2, 0, 2): "x", (2, 1, 2): "y"}


@lru_cache(maxsize=None)
def _closed_points(max_degree):
    out = [ClosedPointE("x0", [None], 1)]
    for e in range(1, max_degree + 1):
        seen = set()
        k = 0
        for P in _points(e):
            if P is None or P in seen:
                continue
            orbit = _orbit(P)
            seen.update(orbit)
            if len(orbit) != e:
                continue
            # start the orbit at its smallest member
            orbit.sort(key=lambda R: (R[0].code, R[1].code))
            lead = orbit[0]
            name = _NAMES.get((e, lead[0].code, lead[1].code), f"z{e}_{k}")
            k += 1
            out.append(ClosedPointE(name, orbit, e))
    return tuple(out)


def closed_points_elliptic(max_degree: int):
    """Closed points of degree <= max_degree, by degree then by their smallest geometric point."""
    if not isinstance(max_degree, int) or max_degree < 1:
        raise ValidationError("max_degree must be >= 1")
    if max_degree > MAX_LEVEL:
        raise ValidationError(f"max_degree above the enumeration cap {MAX_LEVEL}")
    return list(_closed_points(max_degree))


def closed_point(name: str, max_degree: int = 2) -> ClosedPointE:
    for z in closed_points_elliptic(max_degree):
        if z.name == name:
            return z
    raise ValidationError(f"no closed point named {name!r} up to degree {max_degree}")

