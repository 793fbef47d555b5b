"""Demazure operators and characters, and the divided-power monomials v_{a,sigma}.

Characters are finitely supported maps weight -> multiplicity in Z[Lambda],
weights in fundamental coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .ls_fan import (
    FanElement,
    count_ls_paths,
    enumerate_fan,
    in_fan,
    path_character_counter,
    weight_of,
)
from .root_system import CartanData, Weight, reflect_weight
from .strat_poset import StratPoset
from .weyl import coset, coset_left_mul, from_word


class NegativeMultiplicity(ArithmeticError):
    pass


class IntegralityViolation(ArithmeticError):
    """A computed exponent is not a nonnegative integer (an upstream bug)."""


class Character:
    """An element of Z[Lambda]; zero multiplicities are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Weight, int] = {}
        for w, c in items:
            w = tuple(w)
            d[w] = d.get(w, 0) + c
        self.terms = {w: c for w, c in d.items() if c}

    @classmethod
    def monomial(cls, mu: Weight, c: int = 1) -> "Character":
        return cls({tuple(mu): c})

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.terms == other.terms

    def __add__(self, other: "Character") -> "Character":
        return Character(list(self.terms.items()) + list(other.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def total(self) -> int:
        """Sum of multiplicities, i.e. the dimension."""
        return sum(self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def items(self):
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "mult": c} for w, c in self.items()]

    def __repr__(self) -> str:
        return f"Character({dict(self.items())})"


def demazure_op(cd: CartanData, i: int, chi: Character, *, nonnegative: bool = False) -> Character:
    """D_i on Z[Lambda], evaluated through the geometric series.

    With k = <mu, alpha_i^vee>:
      k >= 0:  sum_{j=0}^{k} e^{mu - j alpha_i}
      k = -1:  0
      k <= -2: -sum_{j=1}^{-k-1} e^{mu + j alpha_i}
    """
    alpha = cd.simple_root(i)
    out: dict[Weight, int] = {}
    for mu, c in chi.terms.items():
        k = mu[i - 1]
        if k >= 0:
            w = mu
            for _ in range(k + 1):
                out[w] = out.get(w, 0) + c
                w = tuple(x - y for x, y in zip(w, alpha))
        elif k <= -2:
            w = mu
            for _ in range(-k - 1):
                w = tuple(x + y for x, y in zip(w, alpha))
                out[w] = out.get(w, 0) - c
    res = Character(out)
    if nonnegative and not res.is_nonnegative():
        raise NegativeMultiplicity(f"D_{i} produced negative multiplicities")
    return res


@lru_cache(maxsize=4096)
def _demazure_rec(cd: CartanData, top: Weight, word: tuple[int, ...]) -> Character:
    if not word:
        return Character.monomial(top)
    return demazure_op(cd, word[0], _demazure_rec(cd, top, word[1:]), nonnegative=True)


def demazure_character(cd: CartanData, lam: Sequence[int], m: int, word: Sequence[int]) -> Character:
    """D_{i_1} o ... o D_{i_r} (e^{m lam}) for a reduced word (i_1, ..., i_r)."""
    word = tuple(word)
    from_word(cd, word)  # raises on non-reduced words
    top = tuple(m * x for x in lam)
    return _demazure_rec(cd, top, word)


def path_character(P: StratPoset, m: int) -> Character:
    """sum of e^{pi(1)} over LS-paths of shape m*lambda with i(pi) <= tau."""
    if m == 0:
        return Character.monomial((0,) * P.cd.rank)
    return Character(path_character_counter(P, m))


def dimension(P: StratPoset, m: int) -> int:
    """dim V(m lambda)_tau = |LS_lambda^+(m)|, counted without listing."""
    return count_ls_paths(P, m)


def count_standard_monomials(P: StratPoset, m: int) -> int:
    """#{standard sequences a^1, ..., a^m of degree-1 fan elements}.

    Counted by dynamic programming on the maximal support of the next term,
    with the degree-1 elements taken from the enumeration of the fan.
    """
    if m == 0:
        return 1
    ones = enumerate_fan(P, 1)
    n = len(P.vertices)
    top = [P.index(a.support[0]) for a in ones]
    bottom = [P.index(a.support[-1]) for a in ones]
    # g[v]: number of standard sequences of the current length whose first term has max supp v
    g = [0] * n
    for t in top:
        g[t] += 1
    for _ in range(m - 1):
        below = [sum(g[u] for u in range(v + 1) if P.leq_idx(u, v)) for v in range(n)]
        h = [0] * n
        for t, b in zip(top, bottom):
            h[t] += below[b]
        g = h
    return sum(g)


# -- the combinatorial algorithm attached to (a, reduced word) ------------------------


def extremal_exponents(cd: CartanData, lam: Sequence[int], word: Sequence[int], s: int = 1) -> list[tuple[int, int]]:
    """(n_k, i_k) with n_k = <(s_{i_{k+1}} ... s_{i_r})(s lam), alpha_{i_k}^vee>."""
    mu = tuple(s * x for x in lam)
    rev = []
    for i in reversed(word):
        rev.append((mu[i - 1], i))
        mu = reflect_weight(cd, i, mu)
    return rev[::-1]


def s_sequence(a: FanElement, word: Sequence[int], P: StratPoset) -> list[tuple[int, int]]:
    """The sequence ((n_1, i_1), ..., (n_t, i_t)) attached to a and a reduced
    word of the maximal element of supp a.

    Each step takes i = i_1, finds the largest j with s_i tau_j > tau_j,
    reflects the support above tau_j by s_i (merging into tau_j when
    s_i tau_{j+1} = tau_j), records n_1 = sum_{h>j} a_h |<tau_h(lam), alpha_i^vee>|
    and continues with the shortened word until a = deg(a) e_id.
    """
    cd, lam = P.cd, P.lam
    word = tuple(word)
    if not a.coeffs:
        raise ValueError("the zero vector has no maximal support element")
    top = a.support[0]
    if len(word) != top.length or coset(cd, word, P.qset) != top:
        raise ValueError(f"{word} is not a reduced word of {top}")
    if not in_fan(a, P):
        raise ValueError(f"{a} is not in the LS-fan")

    cur = list(a.coeffs)  # top to bottom
    seq = []
    for pos, i in enumerate(word):
        # every support element stays below the original maximum, hence in A_tau
        pair = [P.images[P.index(v)][i - 1] for v, _ in cur]
        # cur[0] is tau_q; index h in cur corresponds to tau_{q-h}
        up = [h for h, x in enumerate(pair) if x > 0]
        split = up[0] if up else len(cur)  # first entry (from the top) moving up: tau_j
        n = sum((c * -pair[h] for h, (_, c) in enumerate(cur[:split])), Fraction(0))
        if n.denominator != 1 or n < 0:
            raise IntegralityViolation(f"exponent {n} at step {pos + 1} for {a}")
        moved = [(coset_left_mul(i, v), c) for v, c in cur[:split]]
        rest = cur[split:]
        if moved and rest and moved[-1][0] == rest[0][0]:
            merged = (rest[0][0], moved[-1][1] + rest[0][1])
            cur = moved[:-1] + [merged] + rest[1:]
        else:
            cur = moved + rest
        seen = [v for v, _ in cur]
        if len(set(seen)) != len(seen):
            raise ArithmeticError(f"support collision at step {pos + 1} for {a}")
        seq.append((int(n), i))
        nxt = FanElement.from_dict(dict(cur))
        if not in_fan(nxt, P):
            raise ArithmeticError(f"step {pos + 1} left the LS-fan: {nxt}")
        expected_top = coset_left_mul(i, top)
        if nxt.support[0] != expected_top:
            raise ArithmeticError(f"maximal support {nxt.support[0]} != {expected_top}")
        top = expected_top
        cur = list(nxt.coeffs)
    if len(cur) != 1 or cur[0][0].length != 0:
        raise ArithmeticError(f"algorithm did not terminate at a multiple of e_id: {cur}")
    return seq


@dataclass(frozen=True)
class DividedPowerMonomial:
    """X_{-i_1}^{(n_1)} ... X_{-i_t}^{(n_t)} v_{m lam}, kept symbolic."""

    factors: tuple[tuple[int, int], ...]  # (i_k, n_k)
    shape: int

    def weight(self, cd: CartanData, lam: Sequence[int]) -> Weight:
        w = [self.shape * x for x in lam]
        for i, n in self.factors:
            alpha = cd.simple_root(i)
            for k in range(len(w)):
                w[k] -= n * alpha[k]
        return tuple(w)

    def __str__(self) -> str:
        parts = [f"X(-{i})^({n})" for i, n in self.factors]
        parts.append(f"v(m={self.shape})")
        return " ".join(parts)


def v_monomial(a: FanElement, word: Sequence[int], P: StratPoset) -> DividedPowerMonomial:
    seq = s_sequence(a, word, P)
    deg = a.degree
    if deg.denominator != 1:
        raise ValueError("degree must be an integer")
    mono = DividedPowerMonomial(tuple((i, n) for n, i in seq), int(deg))
    wa = weight_of(a, P)
    if tuple(Fraction(x) for x in mono.weight(P.cd, P.lam)) != wa:
        raise ArithmeticError(f"weight of {mono} differs from weight(a) = {wa}")
    return mono


def character_to_json(chi: Character) -> str:
    return json.dumps(chi.to_json())
