
import numpy as np
import pytest
from conftest import random_state
from hypothesis import given, settings, strategies as st

from photon_invariants.catalog import hom_target
from photon_invariants.errors import ParseError
from photon_invariants.expr import format_state, parse_state
from photon_invariants.fock import PureState


def test_examples():
    assert parse_state("1/sqrt(2)*|2,0> - 1/sqrt(2)*|0,2>").allclose(hom_target(), atol=1e-15)
    assert parse_state("|1,1>").allclose(PureState.fock((1, 1)))


@pytest.mark.parametrize("text, expected", [
    ("(0.5+0.5*i)*|1,0> + 0.5*|0,1>", {(1, 0): 0.5 + 0.5j, (0, 1): 0.5}),
    ("-|1>", {(1,): -1}),
    ("exp(i*pi/2)*|2>", {(2,): 1j}),
    ("cos(0)*|1,0> + sin(pi/2)*|0,1>", {(1, 0): 1, (0, 1): 1}),
    ("2^-1*|1,0>", {(1, 0): 0.5}),
    ("3/4*|1,0> + 1e-1*|1,0>", {(1, 0): 0.85}),
    ("-(1 - 2)*|0,3>", {(0, 3): 1}),
])
def test_grammar(text, expected):
    assert dict(parse_state(text).amps) == pytest.approx(expected)


def test_normalize_flag():
    s = parse_state("|1,0> + |0,1>")
    assert s.norm_squared() == pytest.approx(2)
    assert parse_state("|1,0> + |0,1>", normalize=True).is_normalized()


@pytest.mark.parametrize("text, column", [
    ("|1,1> + |2,0,0>", 9),
    ("|1,1> + |3,0>", 9),
    ("2*|1,0> + 3", 11),
    ("", 1),
    ("|1,0> - |1,0>", 1),
    ("|1,0> |0,1>", 7),
    ("|1,0>/2", 7),
    ("foo*|1>", 1),
    ("1/0*|1>", 3),
    ("|1,a>", 1),
    ("2 * (3 + |1>)", 10),
])
def test_errors_report_position(text, column):
    with pytest.raises(ParseError) as info:
        parse_state(text)
    assert info.value.line == 1
    assert info.value.column == column


def test_multiline_position():
    with pytest.raises(ParseError) as info:
        parse_state("|1,0>\n + $")
    assert (info.value.line, info.value.column) == (2, 4)


def test_format_state():
    assert format_state(PureState.fock((1, 1))) == "1*|1,1>"
    text = format_state(PureState({(2, 0): 0.5j, (0, 2): -0.25 + 1j}))
    assert text == "0.5*i*|2,0> + (-0.25+1*i)*|0,2>"


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 2**31))
def test_round_trip(d, n, seed):
    s = random_state(np.random.default_rng(seed), d, n)
    back = parse_state(format_state(s, digits=17))
    assert np.max(np.abs(back.to_vector() - s.to_vector())) <= 1e-12
    back12 = parse_state(format_state(s))
    assert parse_state(format_state(back12)).allclose(back12, atol=1e-12)
