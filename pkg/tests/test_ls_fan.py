import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from seshadri.ls_fan import (
    ZERO,
    FanElement,
    LSPath,
    Order,
    canonical_sort_key,
    count_ls_paths,
    enumerate_fan,
    enumerate_ls_paths,
    fan_from_json,
    fan_multiply,
    fan_table_csv,
    fan_to_json,
    in_chain_lattice,
    in_fan,
    is_d_chain,
    is_ls_path,
    is_standard_monomial,
    parse_fan_element,
    path_to_json,
    standard_decompose,
    theta,
    theta_inv,
    triangle_cmp,
    weight_of,
)
from seshadri.root_system import CartanData
from seshadri.strat_poset import build, iter_maximal_chains
from seshadri.weyl import coset

from oracles import brute_ls_paths, chains_through, ordered_standard_decompositions


def _a1(lam):
    cd = CartanData.from_type("A1")
    P = build(cd, (lam,), "1")
    return P, coset(cd, (1,), ()), coset(cd, (), ())


def half_half(s1, e):
    return FanElement.from_dict({s1: F(1, 2), e: F(1, 2)})


def test_is_d_chain_examples():
    P2, s1, e = _a1(2)
    P1, t1, f = _a1(1)
    assert is_d_chain(s1, e, F(1, 2), P2)
    assert not is_d_chain(t1, f, F(1, 2), P1)
    assert is_d_chain(s1, s1, F(1, 3), P2)
    with pytest.raises(ValueError):
        is_d_chain(e, s1, F(1, 2), P2)


def test_in_fan_examples(sl3_adjoint):
    P2, s1, e = _a1(2)
    P1, t1, f = _a1(1)
    assert all(in_fan(FanElement.unit(v), sl3_adjoint) for v in sl3_adjoint.vertices)
    assert in_fan(half_half(s1, e), P2)
    assert not in_fan(half_half(t1, f), P1)
    a2 = sl3_adjoint.cd
    s1_, s2_ = coset(a2, (1,), ()), coset(a2, (2,), ())
    assert not in_fan(FanElement.from_dict({s1_: 1, s2_: 1}), sl3_adjoint)


def test_enumerate_fan_examples(a2):
    P2, s1, e = _a1(2)
    assert set(enumerate_fan(P2, 1)) == {FanElement.unit(s1), half_half(s1, e), FanElement.unit(e)}
    P = build(a2, (1, 0), "w0")
    assert {a.support for a in enumerate_fan(P, 1)} == {(v,) for v in P.vertices}
    assert [v.word for v in P.vertices] == [(), (1,), (2, 1)]
    with pytest.raises(ValueError):
        enumerate_fan(P, -1)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("A3", (0, 1, 1))])
def test_fan_contains_extremal_points(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    elems = set(enumerate_fan(P, 1))
    assert FanElement.unit(P.tau) in elems and FanElement.unit(P.bottom) in elems


def test_weight_examples(sl3_adjoint):
    P2, s1, e = _a1(2)
    assert weight_of(FanElement.unit(e), P2) == (2,)
    assert weight_of(half_half(s1, e), P2) == (0,)
    assert weight_of(FanElement.unit(sl3_adjoint.tau), sl3_adjoint) == (-1, -1)


def test_theta_examples():
    P2, s1, e = _a1(2)
    one = LSPath((s1,), (1,))
    two = LSPath((s1, e), (F(1, 2), 1))
    assert theta(one, 1, P2) == FanElement.unit(s1)
    assert theta(two, 1, P2) == half_half(s1, e)
    assert theta(two, 2, P2) == FanElement.from_dict({s1: 1, e: 1})
    assert theta_inv(half_half(s1, e), 1, P2) == two
    assert theta_inv(FanElement.from_dict({s1: 1, e: 1}), 2, P2) == two
    P1, t1, f = _a1(1)
    with pytest.raises(ValueError):
        theta(LSPath((t1, f), (F(1, 2), 1)), 1, P1)
    with pytest.raises(ValueError):
        theta_inv(half_half(s1, e), 2, P2)


@pytest.mark.parametrize("name,lam,m", [
    ("A1", (2,), 3), ("A1", (3,), 2), ("A2", (1, 1), 2), ("A2", (2, 1), 1), ("B2", (1, 1), 1),
    ("B2", (0, 2), 2), ("G2", (1, 0), 1),
])
def test_ls_paths_match_exhaustive_search(name, lam, m):
    P = build(CartanData.from_type(name), lam, "w0")
    paths = set(enumerate_ls_paths(P, m))
    assert paths == brute_ls_paths(P, m)
    assert all(is_ls_path(p, P, m) for p in paths)
    assert count_ls_paths(P, m) == len(paths) == len(enumerate_fan(P, m))
    assert {theta(p, m, P) for p in paths} == set(enumerate_fan(P, m))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("A3", (1, 1, 1)), ("B2", (2, 1))])
def test_chain_independence(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    for m in (1, 2):
        for a in enumerate_fan(P, m):
            idx = [P.index(v) for v in a.support]
            verdicts = {in_chain_lattice(a, ch, P) for ch in chains_through(P, idx)}
            assert verdicts == {True}


def test_non_members_rejected_on_every_chain(sl3_adjoint):
    P = sl3_adjoint
    # a coefficient grid finer than the bonds allow on the chain
    for ch in iter_maximal_chains(P):
        idx = [P.index(v) for v in ch.elems]
        for a_top in (F(1, 3), F(1, 4)):
            a = FanElement.from_dict({ch.elems[0]: a_top, ch.elems[-1]: 1 - a_top})
            assert not in_fan(a, P)
            assert not any(in_chain_lattice(a, c, P) for c in chains_through(P, [idx[0], idx[-1]]))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 1))])
def test_monoid_closure_per_chain(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    small = enumerate_fan(P, 1) + enumerate_fan(P, 2)
    for ch in itertools.islice(iter_maximal_chains(P), 6):
        idx = [P.index(v) for v in ch.elems]
        on = [a for a in small if in_chain_lattice(a, idx, P)]
        for a, b in itertools.product(on, repeat=2):
            assert in_chain_lattice(a + b, idx, P)


@pytest.mark.parametrize("name,lam", [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 1)), ("A3", (1, 0, 1))])
def test_weights_are_integral(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    for m in (1, 2):
        for a in enumerate_fan(P, m):
            assert all(F(x).denominator == 1 for x in weight_of(a, P))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 2)), ("G2", (1, 1))])
def test_restriction_coherence(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    top = {m: set(enumerate_fan(P, m)) for m in (1, 2)}
    for sigma in P.vertices:
        Q = build(P.cd, lam, sigma)
        low = set(Q.vertices)
        for m in (1, 2):
            assert set(enumerate_fan(Q, m)) == {a for a in top[m] if set(a.support) <= low}


def test_triangle_examples(a2, sl3_adjoint):
    P = build(a2, (1, 0), "w0")
    e, s1, s21 = P.vertices
    assert triangle_cmp(FanElement.unit(s21), FanElement.unit(e)) == Order.GREATER
    assert triangle_cmp(FanElement.unit(s1), FanElement.unit(s21)) == Order.LESS
    x = FanElement.unit(s1)
    assert triangle_cmp(x, x) == Order.EQUAL
    t1, t2 = coset(a2, (1,), ()), coset(a2, (2,), ())
    assert triangle_cmp(FanElement.unit(t1), FanElement.unit(t2)) == Order.INCOMPARABLE
    with pytest.raises(ValueError):
        triangle_cmp(FanElement.unit(e), FanElement.unit(e) * 2)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1))])
def test_canonical_order_extends_triangle_order(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    elems = enumerate_fan(P, 2)
    rank = {a: k for k, a in enumerate(elems)}  # descending
    for a, b in itertools.combinations(elems, 2):
        verdict = triangle_cmp(a, b)
        assert verdict != Order.EQUAL
        if verdict == Order.GREATER:
            assert rank[a] < rank[b]
        elif verdict == Order.LESS:
            assert rank[a] > rank[b]
        assert triangle_cmp(b, a) == {Order.GREATER: Order.LESS, Order.LESS: Order.GREATER}.get(verdict, verdict)


def test_standard_decompose_examples():
    P2, s1, e = _a1(2)
    assert standard_decompose(FanElement.from_dict({s1: 1, e: 1}), P2) == [FanElement.unit(s1), FanElement.unit(e)]
    assert standard_decompose(FanElement.unit(s1, 2), P2) == [FanElement.unit(s1)] * 2
    a = FanElement.from_dict({s1: F(3, 2), e: F(1, 2)})
    assert standard_decompose(a, P2) == [FanElement.unit(s1), half_half(s1, e)]
    with pytest.raises(ValueError):
        standard_decompose(half_half(s1, e) * F(1, 2), P2)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("A1", (3,))])
def test_standard_decomposition_is_unique(name, lam):
    P = build(CartanData.from_type(name), lam, "w0")
    ones = enumerate_fan(P, 1)
    for a in enumerate_fan(P, 2):
        found = ordered_standard_decompositions(a, ones, P)
        assert found == [standard_decompose(a, P)]


def test_is_standard_monomial_examples(sl3_adjoint):
    P2, s1, e = _a1(2)
    top, bot = FanElement.unit(sl3_adjoint.tau), FanElement.unit(sl3_adjoint.bottom)
    assert is_standard_monomial([top, bot])
    assert not is_standard_monomial([bot, top])
    assert not is_standard_monomial([half_half(s1, e), FanElement.unit(s1)])


def test_fan_multiply_examples(a2, sl3_adjoint):
    P2, s1, e = _a1(2)
    top, bot = FanElement.unit(sl3_adjoint.tau), FanElement.unit(sl3_adjoint.bottom)
    assert fan_multiply(top, bot) == top + bot
    t1, t2 = coset(a2, (1,), ()), coset(a2, (2,), ())
    assert fan_multiply(FanElement.unit(t1), FanElement.unit(t2)) is ZERO
    h = half_half(s1, e)
    assert fan_multiply(h, h) == FanElement.from_dict({s1: 1, e: 1})
    # the empty element is the unit, distinct from ZERO
    assert fan_multiply(FanElement(()), h) == h
    assert FanElement(()) != ZERO and not ZERO


@given(st.data())
def test_fan_algebra_laws_random(data):
    P = build(CartanData.from_type("B2"), (1, 1), "w0")
    ones = enumerate_fan(P, 1)
    a = data.draw(st.sampled_from(ones))
    b = data.draw(st.sampled_from(ones + enumerate_fan(P, 2)))
    prod = fan_multiply(a, b)
    comparable = all(P.leq(u, v) or P.leq(v, u) for u in a.support for v in b.support)
    if prod is ZERO:
        assert not comparable
    else:
        assert comparable
        assert prod.degree == a.degree + b.degree
        assert in_fan(prod, P)


def test_json_and_csv_exports(sl3_adjoint):
    P = sl3_adjoint
    for a in enumerate_fan(P, 2):
        assert fan_from_json(fan_to_json(a), P) == a
    path = theta_inv(enumerate_fan(P, 2)[3], 2, P)
    data = path_to_json(path)
    assert data["ds"][-1] == {"num": 1, "den": 1}
    table = fan_table_csv(enumerate_fan(P, 1), P).splitlines()
    assert len(table) == 1 + 8
    assert table[0].split(",")[0] == "degree"


def test_parse_fan_element(sl3_adjoint):
    a = parse_fan_element("2.1:1/2 + 1:1/2", sl3_adjoint)
    assert a.degree == 1 and in_fan(a, sl3_adjoint)
    with pytest.raises(ValueError):
        parse_fan_element("2.1", sl3_adjoint)
    with pytest.raises(ValueError):
        parse_fan_element("1:-1", sl3_adjoint)
