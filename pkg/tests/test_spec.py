import pytest
from hypothesis import given, settings, strategies as st

from gmet.errors import ParseError
from gmet.io import group_to_dict, save_json
from gmet.isomorphism import is_isomorphic
from gmet.spec import build_group, display_name, format_spec, parse_group_spec, spec_order


@pytest.mark.parametrize("text,order", [
    ("C12", 12), ("D4", 8), ("Q8", 8), ("Q12", 12), ("QD4+", 16), ("QD4-", 16),
    ("S4", 24), ("A4", 12), ("SL2(3)", 24), ("C2^3", 8), ("C4xC2", 8), ("(C2xC2)xC3", 12),
    ("GD(C4xC2)", 16), ("W(C2,2,S2)", 8), ("W(C2,3,C3)", 24), ("SD(C7,C3,2)", 21),
    ("SD(C2^2,C4,[0,1,3,2])", 16), ("C1", 1),
])
def test_builds_with_expected_order(text, order):
    G = build_group(text)
    assert G.order == order == spec_order(text)
    assert G.label == text


def test_constructions_agree_with_named_groups():
    assert is_isomorphic(build_group("W(C2,2,S2)"), build_group("D4"))
    assert is_isomorphic(build_group("SD(C3,C2,2)"), build_group("S3"))
    assert is_isomorphic(build_group("GD(C4)"), build_group("D4"))
    assert is_isomorphic(build_group("GD(C3)"), build_group("S3"))
    assert not is_isomorphic(build_group("Q8"), build_group("D4"))


@pytest.mark.parametrize("text,pos", [("", 0), ("X3", 0), ("C", 1), ("C2x", 3), ("W(C2,", 5),
                                      ("C2)", 2), ("é", 0), ("C2xé", 3)])
def test_parse_errors_report_byte_offsets(text, pos):
    with pytest.raises(ParseError) as info:
        parse_group_spec(text)
    assert info.value.position == pos
    assert info.value.expected


def test_display_names():
    assert display_name("W(C2,4,C2xC2)") == "C2wr(C2xC2)"
    assert display_name("W(S3,2,S2)") == "S3wrS2"
    assert display_name("D6") == "D6"


def test_file_specs(tmp_path):
    save_json(tmp_path / "s3.json", group_to_dict(build_group("S3")))
    G = build_group("file:s3.json", base_dir=tmp_path)
    assert G.order == 6 and is_isomorphic(G, build_group("S3"))
    H = build_group(f"(file:{tmp_path / 's3.json'})xC2")
    assert H.order == 12


atoms = st.one_of(
    st.integers(1, 9).map(lambda n: f"C{n}"),
    st.integers(3, 6).map(lambda n: f"D{n}"),
    st.sampled_from(["Q8", "Q12", "QD4+", "QD5-", "S3", "A4", "SL2(5)"]),
)
specs = st.recursive(
    atoms,
    lambda inner: st.one_of(
        st.lists(inner, min_size=2, max_size=3).map(lambda fs: "x".join(f"({f})" for f in fs)),
        st.tuples(inner, st.integers(1, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
        inner.map(lambda s: f"GD({s})"),
        st.tuples(inner, st.sampled_from([(2, "S2"), (3, "C3"), (3, "S3")]))
          .map(lambda t: f"W({t[0]},{t[1][0]},{t[1][1]})"),
    ),
    max_leaves=4,
)


@settings(max_examples=200, deadline=None)
@given(specs)
def test_format_parse_round_trip(text):
    spec = parse_group_spec(text)
    canon = format_spec(spec)
    assert parse_group_spec(canon) == spec
    assert format_spec(parse_group_spec(canon)) == canon
