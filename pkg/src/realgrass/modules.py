"""Coefficient rings and finitely generated graded modules over them."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import InvalidArgument


@dataclass(frozen=True)
class Piece:
    """``R^free`` plus cyclic torsion summands, relative to some ring R."""

    free: int = 0
    torsion: tuple[int, ...] = ()

    def __add__(self, other: "Piece") -> "Piece":
        return Piece(self.free + other.free, tuple(sorted(self.torsion + other.torsion)))

    def scaled(self, times: int) -> "Piece":
        return Piece(self.free * times, tuple(sorted(self.torsion * times)))


ZERO = Piece()


@dataclass(frozen=True)
class CoefficientRing:
    """One of ``Z``, ``Q`` or ``Z/m`` (``m >= 2``)."""

    name: str
    modulus: int = 0

    def __post_init__(self):
        if self.name not in ("Z", "Q", "Z/m"):
            raise InvalidArgument(f"unsupported coefficient ring {self.name!r}")
        if self.name == "Z/m" and self.modulus < 2:
            raise InvalidArgument(f"modulus must be >= 2, got {self.modulus}")
        if self.name != "Z/m" and self.modulus:
            raise InvalidArgument(f"{self.name} takes no modulus")

    @classmethod
    def integers(cls) -> "CoefficientRing":
        return cls("Z")

    @classmethod
    def rationals(cls) -> "CoefficientRing":
        return cls("Q")

    @classmethod
    def mod(cls, m: int) -> "CoefficientRing":
        return cls("Z/m", m)

    @classmethod
    def parse(cls, text: str) -> "CoefficientRing":
        text = text.strip()
        if text == "Z":
            return cls.integers()
        if text == "Q":
            return cls.rationals()
        match = re.fullmatch(r"Z/(\d+)", text)
        if match:
            return cls.mod(int(match.group(1)))
        raise InvalidArgument(f"cannot parse coefficient ring {text!r}; use Z, Q or Z/<m>")

    def __str__(self):
        return f"Z/{self.modulus}" if self.name == "Z/m" else self.name

    @property
    def is_field(self) -> bool:
        if self.name == "Q":
            return True
        if self.name == "Z":
            return False
        m = self.modulus
        return all(m % p for p in range(2, int(m ** 0.5) + 1))

    def cyclic(self, order: int) -> Piece:
        """The R-module ``Z/order (x) R``, normalised; ``order == 0`` means R."""
        if order == 0:
            return Piece(1)
        if self.name == "Q":
            return ZERO
        if self.name == "Z/m":
            order = gcd(order, self.modulus)
            if order == self.modulus:
                return Piece(1)
        return ZERO if order == 1 else Piece(0, (order,))

    def quotient(self, d: int) -> Piece:
        """``R / dR``."""
        return self.cyclic(abs(d))

    def annihilator(self, d: int) -> Piece:
        """``ker(R --d--> R)``."""
        if d == 0:
            return Piece(1)
        if self.name == "Z/m":
            return self.cyclic(abs(d))
        return ZERO

    def kernel_of_two(self) -> Piece:
        return self.annihilator(2)

    def cokernel_of_two(self) -> Piece:
        return self.quotient(2)


@dataclass(frozen=True)
class GroupEntry:
    degree: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    def describe(self, ring: CoefficientRing) -> str:
        parts = []
        if self.free_rank:
            base = f"({ring})" if "/" in str(ring) else str(ring)
            parts.append(str(ring) if self.free_rank == 1 else f"{base}^{self.free_rank}")
        for order, count in sorted(Counter(self.torsion).items()):
            parts.append(f"Z/{order}" if count == 1 else f"(Z/{order})^{count}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class GradedModule:
    ring: CoefficientRing
    groups: tuple[GroupEntry, ...] = field(default=())

    @classmethod
    def from_pieces(cls, ring: CoefficientRing, pieces: Iterable[Piece]) -> "GradedModule":
        return cls(ring, tuple(GroupEntry(m, p.free, p.torsion) for m, p in enumerate(pieces)))

    def __getitem__(self, degree: int) -> GroupEntry:
        return self.groups[degree]

    def __len__(self):
        return len(self.groups)

    def free_ranks(self) -> list[int]:
        return [g.free_rank for g in self.groups]

    def torsion_counts(self, order: int = 2) -> list[int]:
        return [g.torsion.count(order) for g in self.groups]

    def torsion_orders(self) -> list[int]:
        return sorted({t for g in self.groups for t in g.torsion})

    def differences(self, other: "GradedModule") -> list[str]:
        """Human-readable list of degrees where two modules disagree."""
        out = []
        if self.ring != other.ring:
            out.append(f"rings differ: {self.ring} vs {other.ring}")
        for m in range(max(len(self), len(other))):
            a = self.groups[m] if m < len(self) else GroupEntry(m, 0)
            b = other.groups[m] if m < len(other) else GroupEntry(m, 0)
            if (a.free_rank, a.torsion) != (b.free_rank, b.torsion):
                out.append(f"degree {m}: {a.describe(self.ring)} vs {b.describe(other.ring)}")
        return out

    def __str__(self):
        return ", ".join(g.describe(self.ring) for g in self.groups)
