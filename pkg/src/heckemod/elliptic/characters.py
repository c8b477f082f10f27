"""Characters of Pic^0(X_n) and the T-generator base change.

Pic^0(X_n) is identified with X(F_{2^n}) by P -> class of (P - x0).  For
this curve and n = 2 it is cyclic of order 5, generated by x1 = (0, a).
A character rho_i sends x1 to zeta^i, zeta = zeta_5.

For a closed point z of degree dividing n and a geometric point z' above it,
    rho~(z) = (1/n) sum_{i<n} rho(Fr^i(z')).
"""

from __future__ import annotations

from ..algebra.cyclotomic import Cyclotomic
from ..algebra.finite_field import FFElement
from ..algebra.linalg import inverse, matmul
from ..errors import InvariantError, ValidationError
from .curve import CURVE, closed_points_elliptic, count_points, render_point


def _key(P):
    return None if P is None else (P[0].code, P[1].code)


class PicardGroup:
    """X(F_{2^n}) as a cyclic group with a chosen generator and discrete logs."""

    def __init__(self, n: int = 2, generator=None):
        self.level = n
        self.order, self.points = count_points(n)
        F = CURVE.field(n)
        self.field = F
        if generator is None:
            if n != 2:
                raise ValidationError("a generator must be given away from level 2")
            generator = (FFElement(F, 0), FFElement(F, 2))  # x1
        self.generator = generator
        self.log = {}
        P = None
        for k in range(self.order):
            key = _key(P)
            if key in self.log:
                raise InvariantError(f"generator {render_point(generator)} has order {k} < {self.order}")
            self.log[key] = k
            P = CURVE.add(P, generator, F)
        if P is not None:
            raise InvariantError("generator order does not match the group order")

    def discrete_log(self, P):
        return self.log[_key(P)]

    def group_table(self):
        return [[self.discrete_log(CURVE.add(P, Q, self.field)) for Q in self.points] for P in self.points]


class CharacterDatum:
    def __init__(self, level, index, orbit, values):
        self.level = level
        self.index = index
        self.orbit = orbit  # tuple of character indices in the Frobenius orbit
        self.values = values  # closed point name -> Cyclotomic

    def __call__(self, z):
        name = z if isinstance(z, str) else z.name
        return self.values[name]

    def to_record(self):
        return {
            "level": self.level,
            "index": self.index,
            "orbit": list(self.orbit),
            "values": {k: v.to_record(order=5) for k, v in self.values.items()},
        }


def character_value(group, i, P):
    n = group.order
    return Cyclotomic.zeta(n, i * group.discrete_log(P))


def _frobenius_orbit_of_character(group, i):
    """Indices j with rho_j = rho_i o Fr^k for some k."""
    fg = CURVE.frobenius(group.generator)
    k = group.discrete_log(fg)  # rho_i(Fr(g)) = zeta^(i k), so Fr*(rho_i) = rho_{i k}
    orbit, j = [], i % group.order
    while j not in orbit:
        orbit.append(j)
        j = (j * k) % group.order
    return tuple(sorted(orbit))


def rho_tilde(group, i, z):
    """Average of rho_i over the Frobenius orbit of a point above z."""
    n = group.level
    if n % z.degree:
        raise ValidationError(f"degree of {z.name} does not divide the level {n}")
    P = z.representative()
    acc = Cyclotomic.rational(0)
    for _ in range(n):
        acc = acc + character_value(group, i, P)
        P = CURVE.frobenius(P)
    return acc / n


def character_table(level: int = 2):
    """All characters of Pic^0(X_level) with their rho~ values on closed points of degree | level."""
    group = PicardGroup(level)
    points = [z for z in closed_points_elliptic(level) if level % z.degree == 0]
    out = []
    for i in range(group.order):
        values = {z.name: rho_tilde(group, i, z) for z in points}
        out.append(CharacterDatum(level, i, _frobenius_orbit_of_character(group, i), values))
    return out


def orbit_representatives(table):
    reps, seen = [], set()
    for chi in table:
        if chi.orbit not in seen:
            seen.add(chi.orbit)
            reps.append(chi)
    return reps


def orthogonality_matrix(level: int = 2):
    """G[i][j] = sum_g rho_i(g) conj(rho_j(g)); should be N * identity."""
    group = PicardGroup(level)
    N = group.order
    rows = []
    for i in range(N):
        row = []
        for j in range(N):
            acc = Cyclotomic.rational(0)
            for P in group.points:
                acc = acc + character_value(group, i, P) * character_value(group, j, P).conjugate()
            row.append(acc)
        rows.append(row)
    return rows


class BaseChange:
    """The matrix between {T_{v,z}} and {T_v^{rho~}} for one rank-degree pair v."""

    def __init__(self, v, points, reps):
        self.v = tuple(v)
        self.points = points
        self.reps = reps
        # T^{rho~_i} = sum_z rho~_i(z) T_{v,z}
        self.to_characters = [[rep(z) for z in points] for rep in reps]
        self.to_points = inverse(self.to_characters)

    def round_trip(self):
        return matmul(self.to_points, self.to_characters)

    def is_identity(self):
        n = len(self.points)
        M = self.round_trip()
        return all(M[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def point_in_characters(self, z):
        """Coefficients c_i with T_{v,z} = sum_i c_i T_v^{rho~_i}."""
        k = [p.name for p in self.points].index(z if isinstance(z, str) else z.name)
        return [self.to_points[k][i] for i in range(len(self.reps))]

    def to_record(self):
        def enc(M):
            return [[c.to_record(order=5) for c in row] for row in M]

        return {
            "v": list(self.v),
            "points": [z.name for z in self.points],
            "characters": [f"rho~{rep.index}" for rep in self.reps],
            "to_characters": enc(self.to_characters),
            "to_points": enc(self.to_points),
        }


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def base_change(v, level: int = 2) -> BaseChange:
    """Base change for v = (rank, degree): closed points whose degree divides gcd(v)."""
    g = _gcd(*v)
    if g == 0:
        raise ValidationError("v must be nonzero")
    points = [z for z in closed_points_elliptic(level) if g % z.degree == 0 and level % z.degree == 0]
    table = character_table(level)
    reps = orbit_representatives(table)
    if len(points) != len(reps):
        # only the trivial character survives on degree-1 data
        reps = reps[: len(points)]
    return BaseChange(v, points, reps)



def isolation_weights(z, v=(0, 2), level: int = 2):
    """Coefficients of sum_i rho~_i(z) T_v^{rho~_i} over all characters, in the point basis.

    Orthogonality makes this (N/deg z) T_{v,z'} where z' is the point with
    rho(z') = conj(rho(z)), i.e. z itself when its orbit is closed under inverse.
    """
    table = character_table(level)
    bc = base_change(v, level)
    name = z if isinstance(z, str) else z.name
    out = {}
    for w in bc.points:
        acc = Cyclotomic.rational(0)
        for chi in table:
            acc = acc + chi(name) * chi(w)
        out[w.name] = acc
    return out
