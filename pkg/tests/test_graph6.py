import pytest

from nearindep.graph6 import Graph6Error, emit_graph6, parse_graph6
from nearindep.graphs import make_named
from nearindep.limits import CapabilityError

from conftest import random_graph


def test_hand_decoded_vectors():
    k3 = parse_graph6("Bw")
    assert k3.n == 3 and k3.edge_count() == 3
    assert parse_graph6("A?") == make_named("empty", 2)
    assert parse_graph6("A_") == make_named("path", 2)


def test_hand_encoded_vectors():
    assert emit_graph6(make_named("complete", 3)) == "Bw"
    assert emit_graph6(make_named("empty", 2)) == "A?"
    assert emit_graph6(make_named("path", 2)) == "A_"
    assert emit_graph6(make_named("empty", 0)) == "?"
    assert parse_graph6("?").n == 0


def test_roundtrip_random(rng):
    for _ in range(200):
        g = random_graph(rng.randint(0, 12), rng)
        line = emit_graph6(g)
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


def test_parse_accepts_header_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n").edge_count() == 3
    assert parse_graph6(b"A_") == make_named("path", 2)


def test_parse_errors_carry_offsets():
    with pytest.raises(Graph6Error) as e:
        parse_graph6("B")
    assert e.value.offset == 1
    with pytest.raises(Graph6Error) as e:
        parse_graph6("Bwx")
    assert e.value.offset == 2
    with pytest.raises(Graph6Error):
        parse_graph6(chr(30) + "w")
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(62))
    with pytest.raises(Graph6Error):
        parse_graph6("Ax")  # nonzero padding
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_size_form_caps():
    with pytest.raises(CapabilityError):
        parse_graph6("~??")
    with pytest.raises(CapabilityError):
        emit_graph6(make_named("empty", 63))


def test_codec_covers_order_62():
    g = make_named("star", 62)
    assert parse_graph6(emit_graph6(g)) == g
