"""Quasi-parabolic rank-2 bundles, Hecke transforms and elementary transforms.

A subsheaf of E = O(a_1) + O(a_2) that agrees with E away from finitely
many finite points is determined by its module of sections over the affine
line, a full-rank F_q[t]-lattice L in F_q[t]^2.  We store L by its Hermite
normal form: basis columns (h11, 0) and (h12, h22) with h11, h22 monic and
deg h12 < deg h11.  Marked lines at the points are kept in coordinates with
respect to this basis, so two quasi-parabolic data are equal exactly when
their normal forms and line coordinates coincide.
"""

from __future__ import annotations

from ..algebra import fqpoly
from ..errors import InvariantError, ValidationError
from .oracle import _coerce_type, _h0_incremental, _read_ladder, modify_multi
from .splitting import SplittingType
from .subspaces import FiberSubspace


def normalize_line(K, vec):
    """Scale a nonzero vector of F(x)^2 to (1, lam) or (0, 1)."""
    vec = tuple(K._pad(c) if not isinstance(c, int) else K.from_base(c) for c in vec)
    if len(vec) != 2:
        raise ValidationError("marked lines live in rank-2 fibers")
    u, w = vec
    if not K.is_zero(u):
        return (K.one, K.mul(K.inv(u), w))
    if not K.is_zero(w):
        return (K.zero, K.one)
    raise ValidationError("the zero vector does not span a line")


class QuasiParabolicData:
    """A rank-2 splitting type with a marked line at each of several distinct points."""

    def __init__(self, E, marks=()):
        E = _coerce_type(E)
        if E.rank != 2:
            raise ValidationError("quasi-parabolic data are rank 2 here")
        out, seen, field = [], set(), None
        for x, line in marks:
            if x in seen:
                raise ValidationError(f"point {x.render()} is marked twice")
            if field is not None and x.field != field:
                raise ValidationError("marked points lie over different base fields")
            field = x.field
            seen.add(x)
            out.append((x, normalize_line(x.residue, line)))
        self.E = E
        self.marks = tuple(out)

    @property
    def points(self):
        return [x for x, _ in self.marks]

    def conditions(self, indices=None):
        idx = range(len(self.marks)) if indices is None else indices
        return [FiberSubspace.span(self.marks[i][0], [self.marks[i][1]]) for i in idx]

    def __repr__(self):
        body = ", ".join(f"{x.render()}: {x.residue.render(l[0])}:{x.residue.render(l[1])}" for x, l in self.marks)
        return f"QuasiParabolicData({self.E}; {body})"


def hecke_transform(data: QuasiParabolicData) -> SplittingType:
    """Type of the subsheaf of sections whose value at each marked point lies on the line."""
    if not data.marks:
        return data.E
    return modify_multi(data.E, data.conditions())


# -- lattices ------------------------------------------------------------------


def _pm_mul(F, A, B):
    """Product of 2x2 polynomial matrices (lists of rows of code lists)."""
    return [
        [fqpoly.add(F, fqpoly.mul(F, A[i][0], B[0][j]), fqpoly.mul(F, A[i][1], B[1][j])) for j in range(2)]
        for i in range(2)
    ]


def _col_op(F, M, dst, src, f):
    """Column dst -= f * column src."""
    for row in M:
        row[dst] = fqpoly.sub(F, row[dst], fqpoly.mul(F, f, row[src]))


def _col_swap(M):
    for row in M:
        row[0], row[1] = row[1], row[0]


def _col_scale(F, M, col, c):
    for row in M:
        row[col] = fqpoly.scale(F, c, row[col])


def hermite(F, B):
    """Hermite normal form H = B U by column operations; returns (H, U)."""
    H = [list(map(list, row)) for row in B]
    U = [[[1], []], [[], [1]]]
    while H[1][0]:
        if H[1][1]:
            qt, _ = fqpoly.divmod_(F, H[1][1], H[1][0])
            _col_op(F, H, 1, 0, qt)
            _col_op(F, U, 1, 0, qt)
        _col_swap(H)
        _col_swap(U)
    if not H[0][0] or not H[1][1]:
        raise InvariantError("lattice basis is singular")
    for col, row in ((0, 0), (1, 1)):
        c = F.inv(H[row][col][-1])
        _col_scale(F, H, col, c)
        _col_scale(F, U, col, c)
    qt, _ = fqpoly.divmod_(F, H[0][1], H[0][0])
    if qt:
        _col_op(F, H, 1, 0, qt)
        _col_op(F, U, 1, 0, qt)
    return H, U


def _eval_matrix(x, M):
    K = x.residue
    return [[K.reduce(e) for e in row] for row in M]


def _solve2(K, M, vec):
    """M^{-1} vec for an invertible 2x2 matrix over F(x)."""
    (a, b), (c, d) = M
    det = K.sub(K.mul(a, d), K.mul(b, c))
    if K.is_zero(det):
        raise InvariantError("transition matrix is singular at an unmodified point")
    inv = K.inv(det)
    u, w = vec
    return (
        K.mul(inv, K.sub(K.mul(d, u), K.mul(b, w))),
        K.mul(inv, K.sub(K.mul(a, w), K.mul(c, u))),
    )


class LatticeData:
    """A quasi-parabolic bundle as an HNF lattice plus line coordinates."""

    def __init__(self, E, field, basis, marks):
        self.E = E
        self.field = field
        self.basis = basis  # 2x2 rows of code lists, upper triangular HNF
        self.marks = tuple(marks)  # (point, normalized line coords w.r.t. basis)

    @classmethod
    def from_data(cls, data: QuasiParabolicData, field=None):
        if field is None:
            if not data.marks:
                raise ValidationError("need a base field for unmarked data")
            field = data.marks[0][0].field
        return cls(data.E, field, [[[1], []], [[], [1]]], data.marks)

    def colength(self):
        return fqpoly.degree(self.basis[0][0]) + fqpoly.degree(self.basis[1][1])

    def _remainder(self, vec):
        """Canonical representative of vec modulo the lattice, flattened."""
        F = self.field
        (h11, h12), (_, h22) = self.basis
        s1, s2 = vec
        qt, r2 = fqpoly.divmod_(F, s2, h22)
        s1 = fqpoly.sub(F, s1, fqpoly.mul(F, qt, h12))
        r1 = fqpoly.mod(F, s1, h11)
        d1, d2 = fqpoly.degree(h11), fqpoly.degree(h22)
        return list(r1) + [0] * (d1 - len(r1)) + list(r2) + [0] * (d2 - len(r2))

    def splitting_type(self) -> SplittingType:
        a = self.E.entries
        R = self.colength()
        if R == 0:
            return self.E
        tvecs = []
        for i in range(2):
            row = []
            for j in range(R):
                e = [[], []]
                e[i] = [0] * j + [1]
                row.append(self._remainder(e))
            tvecs.append(row)
        b_hi, b_lo = max(a), min(a) - R - 1
        h0 = _h0_incremental(self.field, a, tvecs, -b_hi - 1, -b_lo)
        return _read_ladder(self.E, h0, R).result

    def key(self):
        return (
            tuple(tuple(e) for row in self.basis for e in row),
            tuple((x.poly, line) for x, line in self.marks),
        )

    def scaled_by(self, P):
        """The lattice P*L with the same line coordinates."""
        F = self.field
        basis = [[fqpoly.mul(F, P, e) for e in row] for row in self.basis]
        return LatticeData(self.E, F, basis, self.marks)

    def elementary(self, indices):
        """el_S: weight-1 modification along the marked lines at the points of S."""
        out = self
        for i in sorted(set(indices)):
            out = out._elementary_at(i)
        return out

    def _elementary_at(self, i):
        F = self.field
        x, (l1, l2) = self.marks[i]
        K = x.residue
        pi = list(x.poly)
        if K.is_zero(l1):
            C = [[pi, []], [[], [1]]]
            new_line = (K.one, K.zero)
        else:
            lam = fqpoly.trim(K.mul(K.inv(l1), l2))
            C = [[[1], []], [lam, pi]]
            new_line = (K.zero, K.one)
        H, U = hermite(F, _pm_mul(F, self.basis, C))
        M = _pm_mul(F, C, U)
        marks = []
        for j, (y, line) in enumerate(self.marks):
            Ky = y.residue
            if j == i:
                coords = _solve2(Ky, _eval_matrix(y, U), new_line)
            else:
                coords = _solve2(Ky, _eval_matrix(y, M), line)
            marks.append((y, normalize_line(Ky, coords)))
        return LatticeData(self.E, F, H, marks)


class CompositionWitness:
    """Outcome of comparing el_R(el_T(data)) with el_{T symmetric-difference R}(data)."""

    def __init__(self, composed, direct, twist, agree):
        self.composed = composed
        self.direct = direct
        self.twist = twist  # product of pi_x over T & R, as a code list
        self.agree = agree

    def to_record(self):
        return {
            "composed_type": self.composed.splitting_type().to_list(),
            "direct_type": self.direct.splitting_type().to_list(),
            "twist_degree": fqpoly.degree(self.twist),
            "agree": self.agree,
        }


def elementary_transform_compose(data: QuasiParabolicData, T, R) -> CompositionWitness:
    """Check el_R . el_T = el_{T^R} up to twisting by O(-sum of points in T & R).

    T and R are sets of 1-based indices into the marked points.
    """
    n = len(data.marks)
    for S in (T, R):
        for i in S:
            if not (isinstance(i, int) and 1 <= i <= n):
                raise ValidationError(f"index {i!r} out of range 1..{n}")
    T0, R0 = {i - 1 for i in T}, {i - 1 for i in R}
    if not data.marks:
        return CompositionWitness(None, None, [1], True)
    L = LatticeData.from_data(data)
    F = L.field
    composed = L.elementary(T0).elementary(R0)
    direct = L.elementary(T0 ^ R0)
    P = [1]
    for i in sorted(T0 & R0):
        P = fqpoly.mul(F, P, list(data.marks[i][0].poly))
    agree = composed.key() == direct.scaled_by(P).key()
    return CompositionWitness(composed, direct, P, agree)
