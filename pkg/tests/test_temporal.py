import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SAMPLE_TQ
from oracles import close, pointwise_product, pointwise_sum, random_intervals, value_at
from kgnet.errors import DanglingActivityError, IntervalError, OverlapError
from kgnet.network import Network
from kgnet.semiring import BOOL, REAL
from kgnet.temporal import (
    ACTIVITY,
    TemporalQuantity,
    format_tq,
    one_tq,
    parse_tq,
    time_slice,
    tq_evaluate,
    tq_normalize,
    tq_product,
    tq_sum,
    zero_tq,
)

TQ = TemporalQuantity


def test_normalize_merges_adjacent_equal_values():
    assert tq_normalize([(1, 3, 2), (3, 5, 2)]).intervals == ((1, 5, 2),)


def test_normalize_keeps_sample():
    assert tq_normalize([(1, 5, 2), (6, 8, 1)]).intervals == ((1, 5, 2), (6, 8, 1))


def test_normalize_sorts():
    assert tq_normalize([(6, 8, 1), (1, 5, 2)]).intervals == ((1, 5, 2), (6, 8, 1))


def test_adjacent_different_values_not_merged():
    assert len(tq_normalize([(1, 3, 2), (3, 5, 4)])) == 2


def test_overlap_is_an_error():
    with pytest.raises(OverlapError) as exc:
        tq_normalize([(1, 4, 2), (3, 6, 2)])
    assert exc.value.intervals == ((1, 4, 2), (3, 6, 2))


@pytest.mark.parametrize("bad", [[(5, 5, 1)], [(6, 2, 1)], [(1.5, 3, 1)]])
def test_bad_bounds(bad):
    with pytest.raises(IntervalError):
        tq_normalize(bad)


def test_undefined_values_are_not_stored():
    assert tq_normalize([(1, 3, None), (4, 6, 1)]).intervals == ((4, 6, 1),)


def test_evaluate_sample():
    a = TQ(SAMPLE_TQ)
    assert [tq_evaluate(a, t) for t in (1, 2, 3, 4)] == [2, 2, 2, 2]
    assert tq_evaluate(a, 5) is None
    assert [a(t) for t in (6, 7)] == [1, 1]
    assert a(3) == 2 and a(7) == 1
    assert a(0) is None and a(20) is None and a(19) == 1


def test_sum_example():
    # expected values from the pointwise oracle over 0..8
    a, b = [(1, 5, 2)], [(3, 7, 1)]
    got = tq_sum(TQ(a), TQ(b), REAL)
    assert got.intervals == ((1, 3, 2), (3, 5, 3), (5, 7, 1))
    for t in range(0, 9):
        assert got(t) == pointwise_sum(a, b, t)


def test_sum_disjoint_is_union():
    assert tq_sum(TQ([(1, 2, 5)]), TQ([(4, 6, 5)])).intervals == ((1, 2, 5), (4, 6, 5))


def test_zero_is_additive_identity():
    a = TQ(SAMPLE_TQ)
    assert tq_sum(a, zero_tq()) == a
    assert tq_sum(zero_tq(), a) == a


def test_product_example():
    a, b = [(1, 5, 2)], [(3, 7, 4)]
    got = tq_product(TQ(a), TQ(b), REAL)
    assert got.intervals == ((3, 5, 8),)
    for t in range(0, 9):
        assert got(t) == pointwise_product(a, b, t)


def test_one_is_multiplicative_identity_on_horizon():
    a = TQ(SAMPLE_TQ)
    assert tq_product(a, one_tq(1, 20)) == a
    assert tq_product(one_tq(0, 100), a) == a


def test_product_of_disjoint_is_empty():
    assert len(tq_product(TQ([(1, 3, 1)]), TQ([(3, 6, 1)]))) == 0


def test_zero_annihilates():
    a = TQ(SAMPLE_TQ)
    assert tq_product(a, zero_tq()) == zero_tq()


def test_boolean_semiring_values():
    a = TQ([(0, 4, True)])
    b = TQ([(2, 6, False)])
    assert tq_sum(a, b, BOOL).intervals == ((0, 4, True), (4, 6, False))
    assert tq_product(a, b, BOOL).intervals == ((2, 4, False),)


def test_operators_default_to_real():
    a, b = TQ([(1, 5, 2)]), TQ([(3, 7, 4)])
    assert a + b == tq_sum(a, b) and a * b == tq_product(a, b)


def test_text_form_round_trip():
    a = TQ([(1, 5, 2), (6, 8, 1.5), (-3, 0, -1)])
    assert parse_tq(format_tq(a)) == a
    assert parse_tq(" [ (1, 3 ,2) ; (3,5, 2) ] ") == TQ([(1, 5, 2)])
    assert parse_tq("[]") == zero_tq()
    with pytest.raises(IntervalError):
        parse_tq("(1,2,3)")
    with pytest.raises(IntervalError):
        parse_tq("[(1,2)]")


def test_activity_set():
    assert TQ([(1, 3, 2), (3, 5, 4), (7, 9, 1)]).activity() == [(1, 5), (7, 9)]


# -- properties -------------------------------------------------------------

@st.composite
def interval_lists(draw, values=st.integers(-5, 5)):
    k = draw(st.integers(0, 5))
    points = sorted(draw(st.sets(st.integers(0, 99), min_size=2 * k, max_size=2 * k)))
    return [(points[2 * i], points[2 * i + 1], draw(values)) for i in range(k)]


@given(interval_lists(), interval_lists())
def test_sum_and_product_match_pointwise_oracle(a, b):
    s, p = tq_sum(TQ(a), TQ(b)), tq_product(TQ(a), TQ(b))
    for t in range(100):
        assert s(t) == pointwise_sum(a, b, t)
        assert p(t) == pointwise_product(a, b, t)


@given(interval_lists(), interval_lists())
def test_interval_count_bounds(a, b):
    x, y = TQ(a), TQ(b)
    assert len(tq_sum(x, y)) <= 2 * (len(x) + len(y))
    assert len(tq_product(x, y)) <= len(x) + len(y)


@given(interval_lists())
def test_normalize_is_idempotent(a):
    once = tq_normalize(a)
    assert tq_normalize(once.intervals) == once


@given(interval_lists(), interval_lists(), interval_lists())
@settings(max_examples=200)
def test_semiring_laws_exact_on_integers(a, b, c):
    a, b, c = TQ(a), TQ(b), TQ(c)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * zero_tq() == zero_tq() == zero_tq() * a
    assert a + zero_tq() == a


def test_random_float_laws_pointwise():
    rng = random.Random(7)
    for _ in range(100):
        a, b, c = (random_intervals(rng) for _ in range(3))
        x, y, z = TQ(a), TQ(b), TQ(c)
        lhs, rhs = x * (y + z), x * y + x * z
        for t in range(100):
            assert close(lhs(t), rhs(t))
            assert close((x + y)(t), pointwise_sum(a, b, t))
            assert value_at(a, t) == x(t)


# -- time slices ----------------------------------------------------------

def _temporal_net():
    net = Network()
    u = net.add_node("actors", "u")
    v = net.add_node("actors", "v")
    w = net.add_node("actors", "w")
    net.add_link("r", u, v, weight=TQ([(5, 9, 2)]))
    net.add_link("r", v, w, weight=TQ([(0, 3, 1), (7, 8, 4)]))
    net.add_link("s", u, w, weight=3)
    return net, (u, v, w)


def test_slice_collapses_temporal_weights():
    net, (u, v, w) = _temporal_net()
    s = time_slice(net, 7)
    assert sorted((l.source, l.target, l.weight) for l in s.links()) == [
        (u, v, 2), (u, w, 3), (v, w, 4)]
    s = time_slice(net, 4)
    assert sorted((l.source, l.target, l.weight) for l in s.links()) == [(u, w, 3)]


def test_slice_of_scalar_network_is_unchanged(wa_network):
    for t in (-10, 0, 10**9):
        assert time_slice(wa_network, t).content() == wa_network.content()


def test_slice_drops_inactive_nodes_and_properties():
    net = Network()
    a = net.add_node("x", "a")
    b = net.add_node("x", "b")
    net.set_property(ACTIVITY, b, TQ([(6, 9, 1)]))
    net.set_property("size", a, TQ([(0, 2, 10)]))
    s = time_slice(net, 1)
    assert [nd.id for nd in s.nodes()] == [a]
    assert s.property("size", a) == 10
    s = time_slice(net, 6)
    assert {nd.id for nd in s.nodes()} == {a, b}
    assert s.property("size", a) is None


def test_dangling_activity():
    net = Network()
    a = net.add_node("x", "a")
    b = net.add_node("x", "b")
    net.set_property(ACTIVITY, b, TQ([(6, 9, 1)]))
    link = net.add_link("r", a, b, weight=TQ([(5, 9, 1)]))
    with pytest.raises(DanglingActivityError) as exc:
        time_slice(net, 5)
    assert exc.value.link == link and exc.value.node == b
    assert time_slice(net, 6).m == 1
