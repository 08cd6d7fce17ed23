"""Strict parsing, round trips, and every validation path."""

import json

import pytest

import conftest
from tbcalc import (
    ParseError,
    ValidationError,
    document_from_obj,
    document_to_obj,
    dumps_document,
    load_document,
    parse_document,
    write_document,
)


def openbook_obj(**overrides):
    obj = {
        "mode": "openbook",
        "page": {"genus": 0, "boundary": 2},
        "twists": [{"sign": 1, "arcs": [-1]}],
        "twist_pairings": [[0]],
        "knot": {"arcs": [-1]},
    }
    obj.update(overrides)
    return obj


def heegaard_obj(**overrides):
    obj = {
        "mode": "heegaard",
        "genus": 1,
        "C": [[-2]],
        "A": [-1],
        "I": [-1],
        "dividing": 0,
    }
    obj.update(overrides)
    return obj


class TestFixtureCorpus:
    @pytest.mark.parametrize("name", conftest.FIXTURE_NAMES)
    def test_parses(self, name):
        document = load_document(conftest.fixture_path(name))
        assert document.name == name
        assert document.description
        if document.mode == "openbook":
            assert document.open_book is not None
            assert document.heegaard is None
        else:
            assert document.heegaard is not None
            assert document.open_book is None

    @pytest.mark.parametrize("name", conftest.FIXTURE_NAMES)
    def test_round_trips(self, name):
        document = load_document(conftest.fixture_path(name))
        assert parse_document(dumps_document(document)) == document
        assert document_from_obj(document_to_obj(document)) == document

    @pytest.mark.parametrize("name", conftest.FIXTURE_NAMES)
    def test_write_and_reload(self, name, tmp_path):
        document = load_document(conftest.fixture_path(name))
        out = tmp_path / "doc.json"
        write_document(document, out)
        assert load_document(out) == document

    def test_load_from_stream(self):
        with open(conftest.fixture_path("standard-unknot"), encoding="utf-8") as handle:
            document = load_document(handle)
        assert document.mode == "openbook"


class TestParsing:
    def test_openbook_fields(self):
        document = document_from_obj(openbook_obj())
        assert document.mode == "openbook"
        assert document.has_knot
        assert document.open_book.page.arc_count == 1
        assert document.knot.arc_pairings == (-1,)

    def test_openbook_without_knot(self):
        obj = openbook_obj()
        del obj["knot"]
        document = document_from_obj(obj)
        assert not document.has_knot and document.knot is None

    def test_heegaard_fields(self):
        document = document_from_obj(heegaard_obj())
        assert document.mode == "heegaard"
        assert document.has_knot
        assert document.heegaard.knot_generators == (-1,)

    def test_heegaard_without_knot_block(self):
        document = document_from_obj({"mode": "heegaard", "genus": 2, "C": [[1, 0], [0, 1]]})
        assert not document.has_knot
        assert document.heegaard.knot_generators == (0, 0)

    def test_dividing_defaults_to_zero(self):
        obj = heegaard_obj()
        del obj["dividing"]
        assert document_from_obj(obj).heegaard.dividing_intersections == 0

    def test_parse_error_carries_location(self):
        with pytest.raises(ParseError) as info:
            parse_document('{"mode": "openbook",\n  "page": }')
        assert info.value.line == 2
        assert info.value.column is not None

    def test_non_object_top_level(self):
        with pytest.raises(ValidationError, match="top level"):
            parse_document("[1, 2, 3]")


@pytest.mark.parametrize(
    "mutate,fragment",
    [
        (lambda o: o.update(mode="bogus"), "openbook' or 'heegaard"),
        (lambda o: o.update(extra=1), "unknown key"),
        (lambda o: o.pop("page"), "missing required key"),
        (lambda o: o.update(page=[]), "page: expected an object"),
        (lambda o: o.update(page={"genus": 0}), "missing required key"),
        (lambda o: o.update(page={"genus": -1, "boundary": 2}), "nonnegative"),
        (lambda o: o.update(page={"genus": 0, "boundary": 0}), "at least 1"),
        (lambda o: o.update(page={"genus": True, "boundary": 2}), "expected an integer"),
        (lambda o: o.update(page={"genus": 0.5, "boundary": 2}), "expected an integer"),
        (lambda o: o.update(twists={}), "expected an array"),
        (lambda o: o.update(twists=[[]]), "expected an object"),
        (lambda o: o.update(twists=[{"sign": 0, "arcs": [1]}]), "must be 1 or -1"),
        (lambda o: o.update(twists=[{"sign": 1, "arcs": [1, 2]}]), "expected 1 entries"),
        (lambda o: o.update(twists=[{"sign": 1}]), "missing required key"),
        (lambda o: o.update(twist_pairings=[[1]]), "skew-symmetry"),
        (lambda o: o.update(name=7), "expected a string"),
        (lambda o: o.update(knot={"arcs": ["x"]}), r"arcs\[0\]: expected an integer"),
        (lambda o: o.update(knot={"arms": [1]}), "unknown key"),
    ],
)
def test_openbook_validation_errors(mutate, fragment):
    obj = openbook_obj()
    mutate(obj)
    with pytest.raises(ValidationError, match=fragment):
        document_from_obj(obj)


def test_skew_symmetry_off_diagonal():
    obj = {
        "mode": "openbook",
        "page": {"genus": 0, "boundary": 2},
        "twists": [{"sign": 1, "arcs": [1]}, {"sign": 1, "arcs": [0]}],
        "twist_pairings": [[0, 1], [1, 0]],
    }
    with pytest.raises(ValidationError, match="skew-symmetry"):
        document_from_obj(obj)


@pytest.mark.parametrize(
    "mutate,fragment",
    [
        (lambda o: o.update(genus=-1), "nonnegative"),
        (lambda o: o.update(C=[[1, 2]]), "expected 1 entries"),
        (lambda o: o.update(C=[[1], [2]]), "expected 1 rows"),
        (lambda o: o.update(C="nope"), "expected an array of rows"),
        (lambda o: o.pop("A"), "required alongside"),
        (lambda o: o.pop("I"), "required alongside"),
        (lambda o: o.update(dividing=3), "must be even"),
        (lambda o: o.update(dividing=-2), "nonnegative"),
        (lambda o: o.update(A=[True]), "expected an integer"),
    ],
)
def test_heegaard_validation_errors(mutate, fragment):
    obj = heegaard_obj()
    mutate(obj)
    with pytest.raises(ValidationError, match=fragment):
        document_from_obj(obj)


def test_dividing_alone_counts_as_knot_block():
    # dividing is part of the knot block, so it cannot appear by itself
    with pytest.raises(ValidationError, match="required alongside"):
        document_from_obj({"mode": "heegaard", "genus": 1, "C": [[1]], "dividing": 2})


def test_dumps_ends_with_newline():
    document = document_from_obj(heegaard_obj())
    text = dumps_document(document)
    assert text.endswith("\n")
    assert json.loads(text)["mode"] == "heegaard"
