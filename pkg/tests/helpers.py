"""Seeded random generators for property tests."""

from __future__ import annotations

import random

from tbcalc import (
    DehnTwist,
    HeegaardData,
    IntegerMatrix,
    OpenBookPresentation,
    PageKnot,
    PageSurface,
)


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntegerMatrix:
    entries = tuple(rng.randint(-bound, bound) for _ in range(rows * cols))
    return IntegerMatrix(rows, cols, entries)


def random_vector(rng: random.Random, size: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(size))


def random_open_book(
    rng: random.Random,
    max_twists: int = 8,
    max_arcs: int = 4,
    bound: int = 2,
) -> OpenBookPresentation:
    arcs = rng.randint(0, max_arcs)
    # page with 2g + r - 1 = arcs; alternate between planar and positive genus
    if arcs >= 2 and rng.random() < 0.5:
        genus = rng.randint(1, arcs // 2)
        boundary = arcs - 2 * genus + 1
    else:
        genus = 0
        boundary = arcs + 1
    page = PageSurface(genus, boundary)
    count = rng.randint(0, max_twists)
    twists = tuple(
        DehnTwist(rng.choice((1, -1)), random_vector(rng, arcs, bound))
        for _ in range(count)
    )
    pairings = [[0] * count for _ in range(count)]
    for m in range(count):
        for k in range(m + 1, count):
            value = rng.randint(-bound, bound)
            pairings[m][k] = value
            pairings[k][m] = -value
    matrix = IntegerMatrix(count, count, tuple(v for row in pairings for v in row))
    return OpenBookPresentation(page, twists, matrix)


def random_knot(rng: random.Random, open_book: OpenBookPresentation, bound: int = 2) -> PageKnot:
    return PageKnot(random_vector(rng, open_book.page.arc_count, bound))


def random_bounding_knot(rng: random.Random, open_book: OpenBookPresentation, bound: int = 2):
    """A knot guaranteed nullhomologous: its pairings are C @ E for a random E."""
    from tbcalc import monodromy_matrix

    size = open_book.page.arc_count
    certificate = random_vector(rng, size, bound)
    return PageKnot(monodromy_matrix(open_book) @ certificate)


def random_heegaard(rng: random.Random, max_genus: int = 4, bound: int = 3) -> HeegaardData:
    genus = rng.randint(0, max_genus)
    relations = random_matrix(rng, genus, genus, bound)
    generators = random_vector(rng, genus, bound)
    knot_relations = random_vector(rng, genus, bound)
    dividing = 2 * rng.randint(0, 3)
    return HeegaardData(genus, relations, generators, knot_relations, dividing)
