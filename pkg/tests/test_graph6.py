import pytest

from histspec import (
    Graph,
    Graph6FormatError,
    complete,
    decode_graph6,
    encode_graph6,
    family_B,
    stream_graph6,
)

from helpers import all_labeled_graphs


def test_hand_encoded_vectors():
    # order byte is n + 63; triangle bits packed high-to-low in 6-bit
    # groups, each + 63.  Worked out by hand from the format definition.
    assert decode_graph6("A_") == complete(2)
    assert encode_graph6(complete(2)) == "A_"
    assert encode_graph6(Graph(1)) == "@"
    assert decode_graph6("@") == Graph(1)
    assert decode_graph6("D??") == Graph(5)
    assert encode_graph6(Graph(5)) == "D??"
    assert encode_graph6(complete(4)) == "C~"
    # path 0-1-2-3: bits (0,1),(1,2),(2,3) -> 101001 -> 'h'
    assert encode_graph6(Graph(4, [(0, 1), (1, 2), (2, 3)])) == "Ch"


def test_header_tolerated():
    assert decode_graph6(">>graph6<<A_") == complete(2)


def test_round_trip_family():
    b8 = family_B(8)
    assert decode_graph6(encode_graph6(b8)) == b8


def test_round_trip_exhaustive_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g


def test_encode_rejects_large():
    with pytest.raises(ValueError):
        encode_graph6(Graph(63))


def test_format_errors_carry_offsets():
    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("")
    assert exc.value.offset == 0

    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("~??")  # long form marker
    assert exc.value.offset == 0

    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("D?")  # truncated: order 5 needs 2 data bytes
    assert exc.value.offset == 2

    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("D???")  # trailing byte
    assert exc.value.offset == 3

    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("B" + chr(40))  # byte below 63
    assert exc.value.offset == 1

    # nonzero padding: order 2 has one data bit, five padding bits
    with pytest.raises(Graph6FormatError) as exc:
        decode_graph6("A" + chr(63 + 1))
    assert exc.value.offset == 1
    assert "padding" in str(exc.value)


def test_stream_reads_with_line_numbers():
    lines = [">>graph6<<A_", "", "C~", "D??"]
    got = list(stream_graph6(lines))
    assert [ln for ln, _ in got] == [1, 3, 4]
    assert got[0][1] == complete(2)
    assert got[1][1] == complete(4)


def test_stream_strict_raises_with_lineno():
    with pytest.raises(Graph6FormatError) as exc:
        list(stream_graph6(["A_", "garbage\x19"]))
    assert exc.value.lineno == 2


def test_stream_skip_and_count():
    bad = []
    got = list(stream_graph6(["A_", "~bad", "C~"], strict=False, bad=bad))
    assert len(got) == 2
    assert len(bad) == 1 and bad[0][0] == 2
