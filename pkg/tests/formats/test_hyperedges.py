import pytest

from hyperci.errors import HypergraphError, ParseError
from hyperci.io import (
    HyperedgeListDocument,
    load_hypergraph,
    parse_hyperedge_list,
    read_hyperedge_list,
    write_hyperedge_list,
)

from tests.utils import EXAMPLE_EDGES, example_hypergraph


def test_read_example_file(example_path):
    document = read_hyperedge_list(example_path)

    assert [list(edge) for edge in document.hyperedges] == EXAMPLE_EDGES
    assert document.lines == [2, 3, 4, 5]
    assert document.source == example_path
    assert not document.warnings


def test_load_example_file(example_path):
    assert load_hypergraph(example_path) == example_hypergraph()


def test_parse_mixed_separators():
    document = parse_hyperedge_list("a,b  c\n\td ,\te\n")
    assert document.hyperedges == [("a", "b", "c"), ("d", "e")]


def test_parse_skips_comments_and_blank_lines():
    document = parse_hyperedge_list("# header\n\n   \na b # trailing\n# c d\ne\n")
    assert document.hyperedges == [("a", "b"), ("e",)]
    assert document.lines == [4, 6]


def test_parse_accepts_missing_final_newline():
    assert parse_hyperedge_list("a b\nc d").hyperedges == [("a", "b"), ("c", "d")]


def test_parse_collapses_repeated_labels():
    document = parse_hyperedge_list("a b a\n", source="edges.txt")

    assert document.hyperedges == [("a", "b")]
    assert len(document.warnings) == 1
    assert document.warnings[0].line == 1
    assert "duplicate labels collapsed: a" in document.warnings[0].message


def test_parse_keeps_repeated_hyperedges():
    hypergraph = parse_hyperedge_list("a b\na b\n").to_hypergraph()
    assert hypergraph.num_edges == 2


def test_parse_labels_are_opaque():
    document = parse_hyperedge_list("007 7 x-1 émile\n")
    assert document.hyperedges == [("007", "7", "x-1", "émile")]
    assert document.to_hypergraph().num_nodes == 4


def test_parse_separator_only_line():
    with pytest.raises(ParseError) as info:
        parse_hyperedge_list("a b\n , ,\n", source="bad.txt")
    assert info.value.line == 2
    assert str(info.value) == "bad.txt:2: line has separators but no labels"


def test_parse_empty_text():
    document = parse_hyperedge_list("# nothing here\n")
    assert len(document) == 0
    assert document.to_hypergraph().num_nodes == 0


def test_to_hypergraph_reports_input_line():
    document = HyperedgeListDocument(hyperedges=[("a",), ()], lines=[3, 9])
    with pytest.raises(HypergraphError, match="line 9"):
        document.to_hypergraph()


def test_write_then_parse_keeps_hyperedges():
    document = parse_hyperedge_list("# c\na,b\n\nb c d\n")
    rewritten = parse_hyperedge_list(write_hyperedge_list(document))

    assert write_hyperedge_list(document) == "a b\nb c d\n"
    assert rewritten == document
    assert rewritten.lines != document.lines


def test_read_invalid_utf8_reports_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"a b\n\xff\xfe c\n")

    with pytest.raises(ParseError) as info:
        read_hyperedge_list(path)
    assert info.value.line == 2
    assert info.value.path == str(path)
    assert str(info.value).endswith("bad.txt:2: invalid UTF-8 (byte 0xff)")


def test_read_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_hyperedge_list(tmp_path / "absent.txt")
