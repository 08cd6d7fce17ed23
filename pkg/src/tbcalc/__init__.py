"""Exact Thurston-Bennequin invariants for knots on open book pages.

A Legendrian knot sitting on a page of a contact open book, or on a convex
Heegaard surface, is described by finitely many integers: how its homology
class pairs against the monodromy curves or the surface relations.  From
that data this package decides whether the knot is rationally
nullhomologous, certifies the minimal order, and evaluates the (rational)
Thurston-Bennequin invariant exactly.  All arithmetic is integer or
``fractions.Fraction``; nothing is ever rounded.
"""

from .documents import (
    DocumentError,
    InputDocument,
    ParseError,
    ValidationError,
    document_from_obj,
    document_to_obj,
    dumps_document,
    load_document,
    parse_document,
    write_document,
)
from .heegaard import HeegaardData, TbResult, nullhomologous_check, tb_heegaard
from .homology import (
    AbelianGroup,
    h1_complement,
    h1_manifold,
    verify_complement_lemma,
)
from .lattice import (
    IntegerMatrix,
    OrderCertificate,
    SmithDecomposition,
    invariant_factors,
    kernel_basis,
    minimal_order,
    smith_normal_form,
    solve_integer,
)
from .openbook import (
    DehnTwist,
    OpenBookPresentation,
    PageKnot,
    PageSurface,
    monodromy_matrix,
    monodromy_matrix_reference,
    stabilize,
    tb_open_book,
    to_heegaard,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "DehnTwist",
    "DocumentError",
    "HeegaardData",
    "InputDocument",
    "IntegerMatrix",
    "OpenBookPresentation",
    "OrderCertificate",
    "PageKnot",
    "PageSurface",
    "ParseError",
    "SmithDecomposition",
    "TbResult",
    "ValidationError",
    "document_from_obj",
    "document_to_obj",
    "dumps_document",
    "h1_complement",
    "h1_manifold",
    "invariant_factors",
    "kernel_basis",
    "load_document",
    "minimal_order",
    "monodromy_matrix",
    "monodromy_matrix_reference",
    "nullhomologous_check",
    "parse_document",
    "smith_normal_form",
    "solve_integer",
    "stabilize",
    "tb_heegaard",
    "tb_open_book",
    "to_heegaard",
    "verify_complement_lemma",
    "write_document",
]
