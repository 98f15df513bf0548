import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from balfam.errors import (
    DuplicateMember,
    ElementOutOfRange,
    EmptyFamily,
    EmptyIndexSet,
    GroundSetTooLarge,
    GroundSetTooSmall,
    IndexOutOfRange,
    MalformedInput,
)
from strategies import families

from balfam.family import (
    SetFamily,
    aggregate,
    complement,
    elements,
    format_family,
    full_mask,
    gen_complete_uniform,
    gen_nonuniform_sharp,
    gen_uniform_sharp,
    is_sperner,
    is_uniform,
    mask_of,
    parse_family,
)


def test_parse_text_basic(fam):
    assert parse_family("n 3\n1,2\n2,3\n") == fam(3, [[1, 2], [2, 3]])


def test_parse_text_empty_set(fam):
    assert parse_family("n 2\n-\n1,2\n") == fam(2, [[], [1, 2]])


def test_parse_rejects_duplicates():
    with pytest.raises(DuplicateMember):
        parse_family("n 3\n1,2\n1,2\n")


def test_parse_allow_duplicates_directive():
    f = parse_family("n 3\nallow_duplicates\n1,2\n2,1\n")
    assert f.allow_duplicates and f.members == (0b11, 0b11)


def test_parse_comments_whitespace_and_inferred_n():
    f = parse_family("# header comment\n\n 1, 3  # trailing\n2\n")
    assert f.n == 3
    assert f.sets() == [[1, 3], [2]]


@pytest.mark.parametrize("text, exc", [
    ("n 3\n1,x\n", MalformedInput),
    ("n 3\n1,4\n", ElementOutOfRange),
    ("n 3\n0\n", ElementOutOfRange),
    ("n 65\n1\n", GroundSetTooLarge),
    ("1\nn 3\n", MalformedInput),
    ("-\n", MalformedInput),
    ("n two\n", MalformedInput),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_family(text)


def test_parse_json(fam):
    f = parse_family('{"n": 4, "sets": [[1, 2], [], [4]]}', "json")
    assert f == fam(4, [[1, 2], [], [4]])
    assert parse_family('{"sets": [[1, 2], [3]]}', "auto").n == 3


@pytest.mark.parametrize("text", ['{"n": 3}', '[1, 2]', '{"sets": [["a"]]}', '{"n": 3, "sets": [[1,', '{"n": true, "sets": []}'])
def test_parse_json_malformed(text):
    with pytest.raises(MalformedInput):
        parse_family(text, "json")


def test_env_cap_lowers_limit(monkeypatch):
    monkeypatch.setenv("BALFAM_MAX_N", "4")
    with pytest.raises(GroundSetTooLarge):
        parse_family("n 5\n1\n")
    monkeypatch.setenv("BALFAM_MAX_N", "100")
    with pytest.raises(GroundSetTooLarge):
        parse_family("n 65\n1\n")


def test_n_64_supported():
    f = parse_family("n 64\n1,64\n")
    assert f.members == ((1 << 63) | 1,)


def test_is_uniform(fam):
    assert is_uniform(fam(4, [[1, 2], [3, 4]])) == 2
    assert is_uniform(fam(3, [[1], [1, 2]])) is None
    assert is_uniform(fam(3, [[]])) == 0
    with pytest.raises(EmptyFamily):
        is_uniform(fam(3, []))


def test_is_sperner(fam):
    assert is_sperner(fam(3, [[1, 2], [2, 3]]))
    assert not is_sperner(fam(2, [[1], [1, 2]]))
    assert is_sperner(fam(3, []))
    assert not is_sperner(fam(2, [[1], [1]], allow_duplicates=True))


def test_aggregate(fam):
    assert elements(aggregate(fam(4, [[1, 2], [3, 4]]), {0, 1}, "union")) == [1, 2, 3, 4]
    assert elements(aggregate(fam(4, [[1, 2], [1, 3]]), {0, 1}, "intersection")) == [1]
    with pytest.raises(EmptyIndexSet):
        aggregate(fam(4, [[1, 2]]), set(), "union")
    with pytest.raises(IndexOutOfRange):
        aggregate(fam(4, [[1, 2]]), [1], "union")


def test_sharp_generators(fam):
    assert gen_nonuniform_sharp(3) == fam(3, [[1], [2], [3], [1, 2, 3]])
    assert gen_nonuniform_sharp(2) == fam(2, [[1], [2], [1, 2]])
    assert gen_uniform_sharp(4) == fam(4, [[2, 3], [1, 2], [1, 3], [1, 4]])
    assert gen_uniform_sharp(3) == fam(3, [[2, 3], [1, 2], [1, 3]])
    with pytest.raises(GroundSetTooSmall):
        gen_nonuniform_sharp(1)
    with pytest.raises(GroundSetTooSmall):
        gen_uniform_sharp(2)


@pytest.mark.parametrize("n", range(3, 20))
def test_uniform_sharp_shape(n):
    f = gen_uniform_sharp(n)
    assert len(f) == n and is_uniform(f) == 2


@pytest.mark.parametrize("n", range(2, 20))
def test_nonuniform_sharp_shape(n):
    f = gen_nonuniform_sharp(n)
    assert len(f) == n + 1 and is_uniform(f) is None


def test_complete_uniform():
    f = gen_complete_uniform(4, 2)
    assert len(f) == 6 and is_uniform(f) == 2
    assert list(f.members) == sorted(f.members)


masks = st.integers(1, 64).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, full_mask(n))))


@given(masks)
def test_complement_laws(nm):
    n, a = nm
    c = complement(a, n)
    assert complement(c, n) == a
    assert a | c == full_mask(n)
    assert a & c == 0


@given(families())
def test_de_morgan_bitwise(f):
    if not f.members:
        return
    idx = range(len(f))
    comp = SetFamily(f.n, tuple(complement(a, f.n) for a in f.members))
    assert complement(aggregate(f, idx, "union"), f.n) == aggregate(comp, idx, "intersection")


@given(families())
def test_round_trip_both_formats(f):
    assert parse_family(format_family(f, "text"), "text") == f
    assert parse_family(format_family(f, "json"), "json") == f
    assert json.loads(format_family(f, "json"))["n"] == f.n


def test_round_trip_duplicates():
    f = SetFamily(3, (3, 3, 0), allow_duplicates=True)
    assert parse_family(format_family(f)) == f
    assert parse_family(format_family(f, "json"), "json") == f


def test_setfamily_validation():
    with pytest.raises(ElementOutOfRange):
        SetFamily(2, (0b100,))
    with pytest.raises(GroundSetTooLarge):
        SetFamily(65, ())
    with pytest.raises(MalformedInput):
        SetFamily(0, ())
    assert mask_of([1, 3]) == 0b101
