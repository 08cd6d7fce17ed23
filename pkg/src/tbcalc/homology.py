"""First homology of the presented manifold and of the knot exterior.

Both groups are read off as cokernels of explicit relation matrices:
the manifold from the compressing-curve pairings C alone, the knot
exterior from C extended by a meridian generator that each relation
hits -I_j times.  For data coming from an actual embedded knot that is
nullhomologous, the exterior group is the manifold group plus one free
summand; the check below operationalizes that as a consistency test,
since arbitrary pairing vectors need not come from an embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .heegaard import HeegaardData, nullhomologous_check
from .lattice import IntegerMatrix, invariant_factors

__all__ = [
    "AbelianGroup",
    "h1_manifold",
    "h1_complement",
    "verify_complement_lemma",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion lists the cyclic orders (each at least 2, each dividing the
    next); free_rank counts the infinite cyclic summands.
    """

    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for value in self.torsion:
            if value < 2:
                raise ValueError("torsion orders must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion orders must form a divisibility chain")

    @classmethod
    def from_invariant_factors(cls, factors: Iterable[int]) -> "AbelianGroup":
        """Normalize a padded Smith diagonal: drop units, count zeros."""
        factors = tuple(factors)
        return cls(
            torsion=tuple(f for f in factors if f not in (0, 1)),
            free_rank=sum(1 for f in factors if f == 0),
        )

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def h1_manifold(data: HeegaardData) -> AbelianGroup:
    """First homology of the ambient manifold: the cokernel of C.

    >>> h1_manifold(HeegaardData(1, IntegerMatrix.from_rows([[-2]]), (0,), (0,)))
    AbelianGroup(torsion=(2,), free_rank=0)
    """
    return AbelianGroup.from_invariant_factors(invariant_factors(data.relations))


def h1_complement(data: HeegaardData) -> AbelianGroup:
    """First homology of the knot exterior.

    Presented on the surface generators plus a meridian mu, with relation
    j reading as column j of C together with coefficient -I_j on mu.
    """
    rows = data.relations.to_rows()
    rows.append([-value for value in data.knot_relations])
    return AbelianGroup.from_invariant_factors(
        invariant_factors(IntegerMatrix.from_rows(rows))
    )


def verify_complement_lemma(data: HeegaardData) -> bool | None:
    """Check H1(exterior) == H1(manifold) + Z; None when not applicable.

    Only nullhomologous knots qualify, so data whose knot class is not in
    the image of C yields None rather than a verdict.  A False verdict
    flags pairing data that cannot come from an embedded knot.
    """
    if nullhomologous_check(data) is None:
        return None
    manifold = h1_manifold(data)
    exterior = h1_complement(data)
    return (
        exterior.torsion == manifold.torsion
        and exterior.free_rank == manifold.free_rank + 1
    )
