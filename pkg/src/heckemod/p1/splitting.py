"""Splitting types: a vector bundle O(a_1) + ... + O(a_n) on P^1 up to isomorphism."""

from __future__ import annotations

from ..errors import ValidationError


class SplittingType:
    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(sorted(int(a) for a in entries))
        if not entries:
            raise ValidationError("a splitting type needs rank >= 1")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("SplittingType is immutable")

    @classmethod
    def parse(cls, text: str):
        try:
            return cls(int(t) for t in text.replace(" ", "").strip("()[]").split(",") if t)
        except ValueError:
            raise ValidationError(f"cannot parse splitting type {text!r}; expected e.g. '0,0' or '-5,5'")

    @property
    def rank(self):
        return len(self.entries)

    @property
    def degree(self):
        return sum(self.entries)

    def twist(self, k: int) -> "SplittingType":
        """E tensor O(k)."""
        return SplittingType(a + k for a in self.entries)

    def projective_class(self) -> int:
        """For rank 2: n with E = O(a) + O(a+n), the class of O + O(n) modulo Pic."""
        if self.rank != 2:
            raise ValidationError("projective classes are defined here for rank 2 only")
        return self.entries[1] - self.entries[0]

    def to_list(self):
        return list(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, SplittingType) and self.entries == other.entries

    def __lt__(self, other):
        return self.entries < other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.entries) + ")"

    def __repr__(self):
        return f"SplittingType{self}"
