"""Classes of coherent sheaves on P^1 and the Euler form."""

from __future__ import annotations

from ..errors import ValidationError
from ..p1.splitting import SplittingType


def _partition(lam):
    lam = tuple(int(k) for k in lam)
    if not lam or any(k <= 0 for k in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValidationError(f"{lam!r} is not a partition (positive, weakly decreasing)")
    return lam


class GenericPoint:
    """A closed point known only by its degree, for symbolic expressions in q."""

    def __init__(self, degree: int, name: str = "x"):
        self.degree = degree
        self.name = name
        self.poly = ()

    def render(self):
        return f"{self.name}(deg {self.degree})"

    def __eq__(self, other):
        return isinstance(other, GenericPoint) and (self.degree, self.name) == (other.degree, other.name)

    def __hash__(self):
        return hash(("generic", self.degree, self.name))

    def __lt__(self, other):
        return (self.degree, self.poly) < (other.degree, other.poly)


class CohClassP1:
    """Isomorphism class of a coherent sheaf on P^1: bundle part plus torsion at finite points."""

    genus = 0
    __slots__ = ("bundle", "torsion")

    def __init__(self, bundle=None, torsion=None):
        if bundle is not None and not isinstance(bundle, SplittingType):
            bundle = SplittingType(bundle)
        parts = {}
        for x, lam in dict(torsion or {}).items():
            parts[x] = _partition(lam)
        if bundle is None and not parts:
            raise ValidationError("the zero sheaf is not a class here")
        object.__setattr__(self, "bundle", bundle)
        object.__setattr__(self, "torsion", tuple(sorted(parts.items(), key=lambda kv: kv[0])))

    def __setattr__(self, name, value):
        raise AttributeError("CohClassP1 is immutable")

    @classmethod
    def skyscraper(cls, x, r: int = 1):
        """K_x^(+r), the partition (1, ..., 1)."""
        return cls(None, {x: (1,) * r})

    @property
    def rank(self):
        return self.bundle.rank if self.bundle is not None else 0

    @property
    def degree(self):
        deg = self.bundle.degree if self.bundle is not None else 0
        return deg + sum(sum(lam) * x.degree for x, lam in self.torsion)

    def is_bundle(self):
        return not self.torsion

    def plus_torsion(self, x, lam):
        t = dict(self.torsion)
        if x in t:
            raise ValidationError("combining torsion at the same point is not supported")
        t[x] = lam
        return CohClassP1(self.bundle, t)

    def sort_key(self):
        return (
            self.rank,
            self.degree,
            self.bundle.entries if self.bundle is not None else (),
            tuple((x.degree, x.poly, lam) for x, lam in self.torsion),
        )

    def render(self):
        parts = [str(self.bundle)] if self.bundle is not None else []
        for x, lam in self.torsion:
            parts.append(f"K[{x.render()}]^({','.join(map(str, lam))})")
        return " + ".join(parts)

    def to_record(self):
        return {
            "bundle": self.bundle.to_list() if self.bundle is not None else None,
            "torsion": [{"point": x.render(), "partition": list(lam)} for x, lam in self.torsion],
        }

    def __eq__(self, other):
        return isinstance(other, CohClassP1) and (self.bundle, self.torsion) == (other.bundle, other.torsion)

    def __hash__(self):
        return hash((self.bundle, self.torsion))

    def __repr__(self):
        return f"CohClassP1({self.render()})"


def euler_form(F, G) -> int:
    """<F, G> = (1 - g) rk F rk G + rk F deg G - rk G deg F."""
    g = getattr(F, "genus", None)
    if g is None or g != getattr(G, "genus", None):
        raise ValidationError("Euler form needs two classes on the same curve")
    return (1 - g) * F.rank * G.rank + F.rank * G.degree - G.rank * F.degree
