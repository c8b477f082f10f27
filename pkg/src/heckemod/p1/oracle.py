"""Brute-force Hecke modifications over P^1.

Given E = O(a_1) + ... + O(a_n), a closed point x and a codimension-r
subspace W of the fiber, E' = {s : s(x) in W}.  Its splitting type is read
off from h^0(E'(m)) for a range of twists m:

    h^0(E'(m)) = sum_i max(0, a_i + m + 1) - rank_m

where rank_m is the rank of the evaluation-and-test map on sections of
E(m), i.e. of the vectors t^j * Phi(e_i), j <= a_i + m, flattened to
F_q^(r d).  Since h^0(E'(m)) = sum_i max(0, a'_i + m + 1), the number of
a'_i >= b is h^0(E'(-b)) - h^0(E'(-b-1)).

The same ladder handles conditions at several points at once, by
concatenating the condition vectors (Chinese remainder theorem).
"""

from __future__ import annotations

from collections import Counter

from ..algebra import Matrix, gaussian_binomial, kernel_dimension
from ..algebra.linalg import EchelonBasis
from ..errors import InvariantError, ResourceCapError, ValidationError
from .splitting import SplittingType
from .subspaces import FiberSubspace, iter_subspaces, subspace_count

DEFAULT_CAP = 10**6


def _coerce_type(E):
    return E if isinstance(E, SplittingType) else SplittingType(E)


def _initial_vectors(conditions, n):
    """For each summand i, the flattened vector Phi(e_i) over all points."""
    vecs = []
    for i in range(n):
        v = []
        for W in conditions:
            for row in W.functionals:
                v.extend(row[i])
        vecs.append(v)
    return vecs


def _mul_t_flat(conditions, vec):
    out, pos = [], 0
    for W in conditions:
        K, d = W.point.residue, W.point.degree
        for _ in range(W.r):
            out.extend(K.mul_t(tuple(vec[pos : pos + d])))
            pos += d
    return out


def _check_conditions(E, conditions):
    F = None
    seen = set()
    for W in conditions:
        if not isinstance(W, FiberSubspace):
            raise ValidationError("conditions must be FiberSubspace instances")
        if W.n != E.rank:
            raise ValidationError(f"subspace lives in dimension {W.n} but the bundle has rank {E.rank}")
        if F is None:
            F = W.point.field
        elif W.point.field != F:
            raise ValidationError("all points must lie over the same base field")
        if W.point in seen:
            raise ValidationError(f"point {W.point.render()} repeated")
        seen.add(W.point)
    return F


class Ladder:
    """Result of an h^0 ladder: the modified type and the h^0 values used."""

    def __init__(self, result, h0, counts):
        self.result = result
        self.h0 = h0  # twist m -> h^0(E'(m))
        self.counts = counts  # b -> #{i : a'_i >= b}

    def to_record(self):
        return {
            "result": self.result.to_list(),
            "h0": [{"twist": m, "h0": h} for m, h in sorted(self.h0.items())],
        }


def _ladder(E, conditions, method="fast"):
    F = _check_conditions(E, conditions)
    a = E.entries
    n = len(a)
    R = sum(W.r * W.point.degree for W in conditions)
    D = sum(W.point.degree for W in conditions)
    b_hi, b_lo = max(a), min(a) - R - 1
    m_lo, m_hi = -b_hi - 1, -b_lo
    h0 = {}
    if R == 0:
        for m in range(m_lo, m_hi + 1):
            h0[m] = sum(max(0, ai + m + 1) for ai in a)
    elif method == "fast":
        base = _initial_vectors(conditions, n)
        tvecs = []
        for i in range(n):
            row, v = [], base[i]
            for _ in range(D):
                row.append(v)
                v = _mul_t_flat(conditions, v)
            tvecs.append(row)
        h0 = _h0_incremental(F, a, tvecs, m_lo, m_hi)
    elif method == "reference":
        base = _initial_vectors(conditions, n)
        for m in range(m_lo, m_hi + 1):
            cols = []
            for i in range(n):
                v = base[i]
                for _ in range(a[i] + m + 1):
                    cols.append(v)
                    v = _mul_t_flat(conditions, v)
            if not cols:
                h0[m] = 0
                continue
            M = Matrix(F, [list(r) for r in zip(*cols)])
            h0[m] = kernel_dimension(M)
    else:
        raise ValidationError(f"unknown method {method!r}")
    return _read_ladder(E, h0, R)


def _h0_incremental(F, a, tvecs, m_lo, m_hi):
    """h^0 for each twist, given the test vectors t^j Phi(e_i) for j < len(tvecs[i]).

    Vectors only ever join the span as m grows, so one echelon basis
    serves the whole ladder.
    """
    h0 = {}
    echelon = EchelonBasis(F)
    rank = 0
    for m in range(m_lo, m_hi + 1):
        for i, ai in enumerate(a):
            j = ai + m
            if 0 <= j < len(tvecs[i]):
                rank += echelon.insert(tvecs[i][j])
        h0[m] = sum(max(0, ai + m + 1) for ai in a) - rank
    return h0


def _read_ladder(E, h0, R):
    """Recover the splitting type of a colength-R subsheaf from its h^0 values."""
    a = E.entries
    n = len(a)
    b_hi, b_lo = max(a), min(a) - R - 1
    m_lo = -b_hi - 1
    counts = {}
    for b in range(b_lo, b_hi + 1):
        counts[b] = h0[-b] - h0[-b - 1]
    # E' is inside E, so E'(m) has no sections once m < -max(a)
    counts[b_hi + 1] = h0[m_lo]
    entries = []
    for b in range(b_hi, b_lo - 1, -1):
        k = counts[b] - counts[b + 1]
        if k < 0:
            raise InvariantError(f"h0 ladder not monotone at {b}")
        entries.extend([b] * k)
    if counts[b_hi + 1] != 0:
        raise InvariantError("sections of E'(m) survive below the expected range")
    if counts[b_lo] != counts[b_lo + 1] or len(entries) != n:
        raise InvariantError(f"h0 ladder self-check failed for {E} (found {entries})")
    result = SplittingType(entries)
    if result.degree != E.degree - R:
        raise InvariantError(f"degree bookkeeping failed: {result} from {E} with r*d = {R}")
    return Ladder(result, h0, counts)


def modify(E, x, W: FiberSubspace, method="fast") -> SplittingType:
    """Splitting type of {s in E : s(x) in W}."""
    E = _coerce_type(E)
    if W.point != x:
        if W.point.field != x.field:
            raise ValidationError("subspace and point lie over different base fields")
        raise ValidationError("subspace is attached to a different point")
    return _ladder(E, [W], method).result


def modify_ladder(E, x, W: FiberSubspace, method="fast") -> Ladder:
    E = _coerce_type(E)
    if W.point != x:
        raise ValidationError("subspace is attached to a different point")
    return _ladder(E, [W], method)


def modify_multi(E, conditions, method="fast") -> SplittingType:
    """Simultaneous modification at several distinct points."""
    E = _coerce_type(E)
    return _ladder(E, list(conditions), method).result


class MultiplicityTable:
    def __init__(self, source, point, weight, counts):
        self.source = source
        self.point = point
        self.weight = weight
        self.counts = dict(sorted(counts.items()))

    @property
    def total(self):
        return sum(self.counts.values())

    def expected_total(self):
        return gaussian_binomial(self.source.rank, self.weight, self.point.residue_size)

    def __getitem__(self, key):
        return self.counts.get(_coerce_type(key), 0)

    def items(self):
        return self.counts.items()

    def to_record(self):
        return {
            "base_field": self.point.field.to_record(),
            "point": self.point.render(),
            "source": self.source.to_list(),
            "weight": self.weight,
            "table": [{"type": k.to_list(), "count": v} for k, v in self.counts.items()],
            "total": self.total,
        }

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.counts.items())
        return f"MultiplicityTable({self.source} at {self.point.render()}, r={self.weight}: {body})"


def multiplicity_table(E, x, r: int, cap: int = DEFAULT_CAP, method="fast") -> MultiplicityTable:
    """Tally modify(E, x, W) over every codimension-r subspace W of the fiber."""
    E = _coerce_type(E)
    if not isinstance(r, int) or not 1 <= r <= E.rank:
        raise ValidationError(f"weight must satisfy 1 <= r <= rank = {E.rank}, got {r!r}")
    need = subspace_count(x, E.rank, r)
    if need > cap:
        raise ResourceCapError(
            f"enumeration needs {need} subspaces, above the cap of {cap}", required=need, cap=cap
        )
    counts = Counter()
    for W in iter_subspaces(x, E.rank, r):
        counts[_ladder(E, [W], method).result] += 1
    table = MultiplicityTable(E, x, r, counts)
    if table.total != need:
        raise InvariantError(f"table total {table.total} differs from subspace count {need}")
    return table
