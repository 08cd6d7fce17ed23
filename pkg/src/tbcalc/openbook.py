"""Open books presented by abstract page data.

A page enters only through its genus and boundary count; the arcs
a_1..a_n of a cut system reducing the page to a disk (n = 2g + r - 1),
the twist curves of the monodromy word, and the knot all enter through
algebraic pairing numbers, never through an embedding.  The monodromy
acts on a class alpha by alpha -> alpha + sign * (T . alpha) * T for
each twist T in word order; iterating this over the cut arcs produces
the pairing matrix C that drives every downstream computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .heegaard import HeegaardData, TbResult
from .lattice import IntegerMatrix, dot, kernel_basis, minimal_order

__all__ = [
    "PageSurface",
    "DehnTwist",
    "OpenBookPresentation",
    "PageKnot",
    "twist_image",
    "monodromy_matrix",
    "monodromy_matrix_reference",
    "tb_open_book",
    "stabilize",
    "to_heegaard",
]

_REFERENCE_TWIST_LIMIT = 20


@dataclass(frozen=True)
class PageSurface:
    """Compact oriented surface with boundary, the page of an open book."""

    genus: int
    boundary_components: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.boundary_components < 1:
            raise ValueError("a page needs at least one boundary component")

    @property
    def arc_count(self) -> int:
        """Arcs in a cut system reducing the page to a disk."""
        return 2 * self.genus + self.boundary_components - 1


@dataclass(frozen=True)
class DehnTwist:
    """One twist of the monodromy word, reduced to pairing data.

    sign +1 is a right-handed twist, -1 a left-handed one; arc_pairings
    lists the algebraic intersections of the twist curve with each cut
    arc.
    """

    sign: int
    arc_pairings: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("twist sign must be 1 or -1")
        object.__setattr__(self, "arc_pairings", tuple(self.arc_pairings))


@dataclass(frozen=True)
class PageKnot:
    """Knot on the page, recorded by its pairings with the cut arcs."""

    arc_pairings: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arc_pairings", tuple(self.arc_pairings))


@dataclass(frozen=True)
class OpenBookPresentation:
    """A page together with an ordered word of Dehn twists.

    twist_pairings holds the pairwise algebraic intersections of the
    twist curves and must be skew-symmetric.
    """

    page: PageSurface
    twists: tuple[DehnTwist, ...]
    twist_pairings: IntegerMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "twists", tuple(self.twists))
        count = len(self.twists)
        if (self.twist_pairings.rows, self.twist_pairings.cols) != (count, count):
            raise ValueError(
                f"twist_pairings must be {count}x{count} for {count} twists"
            )
        for k in range(count):
            if self.twist_pairings[k, k] != 0:
                raise ValueError("twist_pairings diagonal must vanish")
            for m in range(k + 1, count):
                if self.twist_pairings[k, m] != -self.twist_pairings[m, k]:
                    raise ValueError("twist_pairings must be skew-symmetric")
        for index, twist in enumerate(self.twists):
            if len(twist.arc_pairings) != self.page.arc_count:
                raise ValueError(
                    f"twist {index} pairs with {len(twist.arc_pairings)} arcs, "
                    f"page has {self.page.arc_count}"
                )

    @property
    def twist_count(self) -> int:
        return len(self.twists)


def twist_image(
    class_coefficients: tuple[int, tuple[int, ...]],
    twist_index: int,
    open_book: OpenBookPresentation,
) -> tuple[int, tuple[int, ...]]:
    """Apply one twist of the word to a class a_j + sum_m v_m T_m.

    Classes reachable from a cut arc stay in the span of that arc and
    the twist curves, so a class is encoded as (base arc index, twist
    coefficients).  The twist along T_k adds sign * (T_k . class) to the
    k-th coefficient and changes nothing else.
    """
    arc_index, coefficients = class_coefficients
    coefficients = tuple(coefficients)
    twists = open_book.twists
    if not 0 <= twist_index < len(twists):
        raise IndexError(f"twist index {twist_index} out of range")
    if not 0 <= arc_index < open_book.page.arc_count:
        raise IndexError(f"arc index {arc_index} out of range")
    if len(coefficients) != len(twists):
        raise ValueError("need one coefficient per twist")
    twist = twists[twist_index]
    pairing = twist.arc_pairings[arc_index] + sum(
        value * open_book.twist_pairings[twist_index, m]
        for m, value in enumerate(coefficients)
        if value
    )
    updated = list(coefficients)
    updated[twist_index] += twist.sign * pairing
    return (arc_index, tuple(updated))


def monodromy_matrix(open_book: OpenBookPresentation) -> IntegerMatrix:
    """Pairing matrix of the monodromy word acting on the cut arcs.

    Entry (i, j) pairs the image of arc a_j under the full word with arc
    a_i; disjoint arcs contribute nothing themselves, so only the twist
    coefficients of the image matter.  An empty word gives the zero
    matrix.

    >>> annulus = OpenBookPresentation(
    ...     PageSurface(0, 2),
    ...     (DehnTwist(1, (-1,)),),
    ...     IntegerMatrix.from_rows([[0]]),
    ... )
    >>> monodromy_matrix(annulus).to_rows()
    [[1]]
    """
    arc_count = open_book.page.arc_count
    twist_count = len(open_book.twists)
    images = []
    for j in range(arc_count):
        state = (j, (0,) * twist_count)
        for k in range(twist_count):
            state = twist_image(state, k, open_book)
        images.append(state[1])
    rows = [
        [
            sum(
                images[j][m] * open_book.twists[m].arc_pairings[i]
                for m in range(twist_count)
            )
            for j in range(arc_count)
        ]
        for i in range(arc_count)
    ]
    return IntegerMatrix.from_rows(rows)


def monodromy_matrix_reference(open_book: OpenBookPresentation) -> IntegerMatrix:
    """The same pairing matrix by brute-force expansion; an oracle.

    Sums over every nonempty increasing subsequence k_1 < ... < k_m of
    the word: the subsequence contributes
    sign_1 * ... * sign_m
    * (T_km . T_km-1) * ... * (T_k2 . T_k1)
    * (T_k1 . a_j) * (T_km . a_i)
    to entry (i, j).  Exponential in the word length, hence guarded, and
    deliberately free of the sweep logic in monodromy_matrix.
    """
    twist_count = len(open_book.twists)
    if twist_count > _REFERENCE_TWIST_LIMIT:
        raise ValueError(
            f"reference expansion is limited to {_REFERENCE_TWIST_LIMIT} twists"
        )
    arc_count = open_book.page.arc_count
    rows = [[0] * arc_count for _ in range(arc_count)]
    for length in range(1, twist_count + 1):
        for chain in combinations(range(twist_count), length):
            factor = 1
            for k in chain:
                factor *= open_book.twists[k].sign
            for previous, current in zip(chain, chain[1:]):
                factor *= open_book.twist_pairings[current, previous]
                if factor == 0:
                    break
            if factor == 0:
                continue
            first = open_book.twists[chain[0]].arc_pairings
            last = open_book.twists[chain[-1]].arc_pairings
            for i in range(arc_count):
                if last[i]:
                    weight = factor * last[i]
                    for j in range(arc_count):
                        rows[i][j] += weight * first[j]
    return IntegerMatrix(arc_count, arc_count, tuple(e for r in rows for e in r))


def tb_open_book(open_book: OpenBookPresentation, knot: PageKnot) -> TbResult | None:
    """Thurston-Bennequin invariant of a knot on the page.

    With C the monodromy pairing matrix and A the knot's arc pairings,
    solves C @ E == d * A for the least d >= 1 and returns
    tb = -<E, A> / d; the value is independent of the choice of E
    exactly when A is orthogonal to the kernel of C, which the result
    records.  Returns None when no multiple of A lies in the image (the
    knot is not rationally nullhomologous and tb is undefined).
    """
    pairings = knot.arc_pairings
    if len(pairings) != open_book.page.arc_count:
        raise ValueError(
            f"knot pairs with {len(pairings)} arcs, page has "
            f"{open_book.page.arc_count}"
        )
    pairing_matrix = monodromy_matrix(open_book)
    certificate = minimal_order(pairing_matrix, pairings)
    if certificate is None:
        return None
    value = Fraction(-dot(certificate.solution, pairings), certificate.order)
    orthogonal = all(
        dot(vector, pairings) == 0 for vector in kernel_basis(pairing_matrix)
    )
    return TbResult(
        order=certificate.order,
        tb=value,
        certificate=certificate.solution,
        kernel_orthogonal=orthogonal,
    )


def stabilize(
    open_book: OpenBookPresentation, knot: PageKnot, sign: int
) -> tuple[OpenBookPresentation, PageKnot]:
    """Stabilize the open book once, sliding the knot over the new handle.

    Adds a boundary component (so one new cut arc), appends a new
    +1 or -1 twist meeting only the new arc, once, and disjoint from
    every old twist curve; the knot runs once over the new arc.  tb of
    the stabilized knot drops by the sign.
    """
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be 1 or -1")
    if len(knot.arc_pairings) != open_book.page.arc_count:
        raise ValueError("knot does not match the page")
    page = PageSurface(open_book.page.genus, open_book.page.boundary_components + 1)
    twists = tuple(
        DehnTwist(twist.sign, twist.arc_pairings + (0,)) for twist in open_book.twists
    ) + (DehnTwist(sign, (0,) * open_book.page.arc_count + (1,)),)
    old_count = len(open_book.twists)
    pairing_rows = [
        list(open_book.twist_pairings.row(k)) + [0] for k in range(old_count)
    ]
    pairing_rows.append([0] * (old_count + 1))
    stabilized = OpenBookPresentation(
        page=page,
        twists=twists,
        twist_pairings=IntegerMatrix.from_rows(pairing_rows),
    )
    return stabilized, PageKnot(knot.arc_pairings + (1,))


def to_heegaard(open_book: OpenBookPresentation, knot: PageKnot) -> HeegaardData:
    """Reinterpret the open book as Heegaard data for the same manifold.

    Doubling the page gives a Heegaard surface; the orientation reversal
    on the second copy negates the pairing matrix, the knot stays in one
    page so it misses the dividing set, and both knot vectors coincide
    with the arc pairings.
    """
    if len(knot.arc_pairings) != open_book.page.arc_count:
        raise ValueError("knot does not match the page")
    return HeegaardData(
        genus=open_book.page.arc_count,
        relations=-monodromy_matrix(open_book),
        knot_generators=knot.arc_pairings,
        knot_relations=knot.arc_pairings,
        dividing_intersections=0,
    )
