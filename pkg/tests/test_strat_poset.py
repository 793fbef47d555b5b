import itertools
import json
import math
from pathlib import Path

import pytest

from seshadri.root_system import CartanData, pairing
from seshadri.strat_poset import (
    EXTENDED_BOTTOM,
    bond_translation_check,
    build,
    count_maximal_chains,
    from_json,
    iter_maximal_chains,
    lcm_bonds,
    maximal_chains,
    to_dot,
    to_json,
)
from seshadri.weyl import coset, coset_orbit, qset_of

from oracles import cycle_notation, perm_of_word

GOLDEN = Path(__file__).parent / "golden"

# The bonded Hasse diagram of the adjoint representation of SL_3, in cycle
# notation: (lower, upper) -> bond.
SL3_FIGURE = {
    ("id", "(12)"): 1, ("id", "(23)"): 1,
    ("(12)", "(132)"): 2, ("(23)", "(123)"): 2,
    ("(12)", "(123)"): 1, ("(23)", "(132)"): 1,
    ("(132)", "(13)"): 1, ("(123)", "(13)"): 1,
}


def figure_of(P):
    name = lambda v: cycle_notation(perm_of_word(v.word, 3))
    return {(name(e.lower), name(e.upper)): e.bond for e in P.edges}


def test_sl3_adjoint_matches_figure(sl3_adjoint):
    assert len(sl3_adjoint.vertices) == 6
    assert len(sl3_adjoint.edges) == 8
    assert figure_of(sl3_adjoint) == SL3_FIGURE


def test_a1_single_edge(a1_two):
    (e,) = a1_two.edges
    assert (e.lower.word, e.upper.word, e.beta, e.bond) == ((), (1,), (1,), 2)


def test_tau_identity_is_a_point(a2):
    P = build(a2, (1, 1), "id")
    assert len(P.vertices) == 1 and not P.edges
    assert [c.elems for c in maximal_chains(P)] == [(P.bottom,)]
    assert lcm_bonds(P) == 1


def test_maximal_chain_examples(sl3_adjoint, a1_two):
    assert len(maximal_chains(sl3_adjoint)) == 4
    assert len(maximal_chains(a1_two)) == 1
    assert sorted(c.bond_product for c in maximal_chains(sl3_adjoint)) == [1, 1, 2, 2]


def test_lcm_examples(sl3_adjoint, a1):
    assert lcm_bonds(sl3_adjoint) == 2
    assert lcm_bonds(build(a1, (3,), "1")) == 3


def test_input_validation(a2):
    with pytest.raises(ValueError):
        build(a2, (0, 0), "w0")
    with pytest.raises(ValueError):
        build(a2, (1, -1), "w0")
    with pytest.raises(ValueError):
        build(a2, (1,), "w0")
    with pytest.raises(ValueError):
        build(a2, (1, 0), "w0", qset=[1])
    assert build(a2, (1, 0), "w0", qset=[2]).qset == {2}
    assert build(a2, (1, 0), "w0", qset="auto").qset == {2}


CASES = [
    ("A2", (1, 1)), ("A2", (1, 0)), ("A2", (0, 2)), ("B2", (1, 1)), ("B2", (0, 1)),
    ("G2", (1, 1)), ("G2", (1, 0)), ("A3", (1, 1, 1)), ("A3", (0, 1, 0)), ("B3", (1, 0, 1)),
    ("C3", (1, 1, 1)),
]


@pytest.mark.parametrize("name,lam", CASES)
def test_structural_invariants(name, lam):
    cd = CartanData.from_type(name)
    for tau in coset_orbit(cd, qset_of(lam)):
        P = build(cd, lam, tau)
        chains = list(iter_maximal_chains(P))
        assert len(chains) == count_maximal_chains(P)
        assert all(len(c.elems) == tau.length + 1 for c in chains)
        assert all(c.elems[0] == tau and c.elems[-1].length == 0 for c in chains)
        for e in P.edges:
            assert e.bond >= 1
            assert e.bond == pairing(e.lower.act(lam), e.beta, cd)
            assert e.upper.length == e.lower.length + 1
        assert bond_translation_check(P)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (2, 1)), ("G2", (1, 1)), ("A3", (1, 0, 2))])
def test_restriction_coherence(name, lam):
    cd = CartanData.from_type(name)
    q = qset_of(lam)
    top = build(cd, lam, coset_orbit(cd, q)[-1])
    for sigma in top.vertices:
        direct = build(cd, lam, sigma)
        assert direct.same_as(top.restrict(sigma))


@pytest.mark.parametrize("name,lam", [("A3", (1, 1, 1)), ("B3", (1, 1, 1)), ("G2", (2, 1))])
def test_segment_gcd_is_chain_independent(name, lam):
    cd = CartanData.from_type(name)
    P = build(cd, lam, "w0")
    for hi, lo in itertools.product(range(len(P.vertices)), repeat=2):
        if hi == lo or not P.leq_idx(lo, hi):
            continue
        gcds = {math.gcd(*(P.bond_idx(b, a) for a, b in zip(ch, ch[1:])))
                for ch in itertools.islice(P.saturated_chains(hi, lo), 200)}
        assert gcds == {P.segment_gcd(hi, lo)}


def test_extended_poset(sl3_adjoint, a2):
    P = build(a2, (1, 1), "w0", extended=True)
    extra = [e for e in P.extended_edges if e.lower == EXTENDED_BOTTOM]
    assert [(e.upper, e.bond) for e in extra] == [(P.bottom, 1)]
    assert sl3_adjoint.extended_edges == sl3_adjoint.edges
    assert "tau_-1" in to_dot(P)


def test_dot_export(sl3_adjoint):
    dot = to_dot(sl3_adjoint)
    assert dot.count("[label=\"b=") == 8
    assert dot.count("b=2") == 2
    assert dot.startswith("digraph")


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 0)), ("G2", (1, 1))])
def test_json_round_trip(name, lam):
    cd = CartanData.from_type(name)
    P = build(cd, lam, "w0")
    again = from_json(json.dumps(to_json(P)))
    assert again.same_as(P)
    assert [e.bond for e in again.edges] == [e.bond for e in P.edges]


def test_golden_sl3_json(sl3_adjoint):
    golden = json.loads((GOLDEN / "sl3_adjoint_poset.json").read_text())
    assert to_json(sl3_adjoint) == golden
    assert from_json(golden).same_as(sl3_adjoint)


def test_bond_translation_examples(sl3_adjoint, a1, b2):
    assert bond_translation_check(sl3_adjoint)
    for k in range(1, 4):
        assert bond_translation_check(build(a1, (k,), "1"))
    assert bond_translation_check(build(b2, (1, 1), "w0"))
