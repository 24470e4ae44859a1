import pytest
from hypothesis import given, settings, strategies as st

from skewbrace.brace import isomorphism
from skewbrace.catalog import Catalog, catalog_io, parse_catalog, parse_raw, read_catalog, render_catalog, write_catalog
from skewbrace.enumeration import enumerate_braces
from skewbrace.errors import ParseError, ValidationError

E4_TEXT = """SKB1
# a o b = a + b + 2ab mod 4
brace e4 n 4
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
end
"""


def small_catalog() -> Catalog:
    return Catalog([e for n in range(1, 5) for e in enumerate_braces(n)])


def test_write_then_read_keeps_keys(tmp_path):
    cat = small_catalog()
    path = tmp_path / "cat.skb"
    catalog_io(path, "write", cat)
    back = catalog_io(path, "read")
    assert back.keys() == cat.keys()
    assert [e.id for e in back] == [e.id for e in cat]
    write_catalog(path, back)
    assert read_catalog(path).keys() == cat.keys()


def test_render_is_stable():
    cat = small_catalog()
    text = render_catalog(cat)
    assert render_catalog(parse_catalog(text)) == text
    assert text.startswith("SKB1\nbrace B1_1 n 1\nadd\n0\nmul\n0\nend\n")


def test_hand_written_e4_matches_enumeration():
    (entry,) = parse_catalog(E4_TEXT)
    assert entry.id == "e4"
    hits = [e for e in enumerate_braces(4) if isomorphism(e.brace, entry.brace) is not None]
    assert len(hits) == 1


def test_non_latin_add_block_names_entry():
    text = E4_TEXT.replace("1 2 3 0\n", "1 2 3 3\n", 1)
    raw = parse_raw(text)
    with pytest.raises(ValidationError) as info:
        raw[0].build()
    assert info.value.entry == "e4"
    with pytest.raises(ValidationError, match="e4"):
        parse_catalog(text)


def test_non_distributive_entry():
    # Z4 again, but generated by 1 with 1 o 1 = 3: a group, incompatible with the addition
    text = E4_TEXT.replace("mul\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", "mul\n0 1 2 3\n1 3 0 2\n2 0 3 1\n3 2 1 0\n")
    with pytest.raises(ValidationError) as info:
        parse_catalog(text)
    assert "a o (b + c)" in info.value.reason


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        (E4_TEXT.rstrip("\n"), 14, "final newline"),
        ("SKB2\n", 1, "SKB1"),
        (E4_TEXT.replace("brace e4 n 4", "brace e4 4"), 3, "brace <id>"),
        (E4_TEXT.replace("mul\n", "mult\n"), 9, "'mul'"),
        (E4_TEXT.replace("1 0 3 2\n", "1 0 3\n"), 11, "expected 4 entries"),
        (E4_TEXT.replace("2 3 0 1\n", "2 x 0 1\n", 1), 7, "non-integer"),
        (E4_TEXT.replace("end\n", "stop\n"), 14, "'end'"),
        (E4_TEXT.replace("end\n", ""), 14, "end of file"),
        (E4_TEXT + E4_TEXT[5:], 16, "duplicate"),
        (E4_TEXT.replace("n 4", "n zero"), 3, "integer"),
    ],
)
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_raw(text)
    assert info.value.line == line
    assert fragment in info.value.reason


def test_comments_are_ignored():
    text = E4_TEXT.replace("add\n", "add\n# rows follow\n")
    assert parse_catalog(text).keys() == parse_catalog(E4_TEXT).keys()


def test_empty_catalog():
    assert len(parse_catalog("SKB1\n")) == 0
    assert render_catalog(Catalog()) == "SKB1\n"


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(list(small_catalog())), max_size=6, unique_by=lambda e: e.id))
def test_round_trip_of_sub_catalogs(entries):
    cat = Catalog(entries)
    assert parse_catalog(render_catalog(cat)).keys() == cat.keys()
