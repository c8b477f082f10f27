"""Finite linear combinations of sheaf classes with coefficients in Q(zeta)(v)."""

from __future__ import annotations

from ..algebra.ratfunc import RationalFunction


def _coef(c):
    return c if isinstance(c, RationalFunction) else RationalFunction.const(c)


class HallElementP1:
    """sum_c coeff_c * [c], plus marker terms whose coefficients are left symbolic.

    A marker term records that a class occurs in a product without
    computing its coefficient; markers are carried along by scalar
    multiplication but take no part in numeric comparisons.
    """

    def __init__(self, terms=None, markers=None):
        clean = {}
        for cls, c in dict(terms or {}).items():
            c = _coef(c)
            if not c.is_zero():
                clean[cls] = c
        self.terms = clean
        self.markers = dict(markers or {})  # class -> label

    def coefficient(self, cls):
        return self.terms.get(cls, RationalFunction.const(0))

    def support(self):
        return set(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for cls, c in other.terms.items():
            terms[cls] = terms.get(cls, RationalFunction.const(0)) + c
        markers = dict(self.markers)
        markers.update(other.markers)
        return HallElementP1(terms, markers)

    def scale(self, c):
        c = _coef(c)
        return HallElementP1({k: v * c for k, v in self.terms.items()}, self.markers)

    def __eq__(self, other):
        return isinstance(other, HallElementP1) and self.terms == other.terms and (
            set(self.markers) == set(other.markers)
        )

    def to_record(self):
        rows = [(cls.sort_key(), cls, c.render()) for cls, c in self.terms.items()]
        rows += [(cls.sort_key(), cls, f"{label} (not computed)") for cls, label in self.markers.items()]
        rows.sort(key=lambda r: r[0])
        return [{"class": cls.to_record(), "label": cls.render(), "coefficient": txt} for _, cls, txt in rows]

    def render(self):
        return " + ".join(f"[{r['coefficient']}]*{r['label']}" for r in self.to_record()) or "0"

    def __repr__(self):
        return f"HallElementP1({self.render()})"
