"""Weyl group elements, minimal coset representatives and the Bruhat order.

An element w is identified by w(rho); a coset w W_Q by w(lambda_Q) where
lambda_Q is the sum of the fundamental weights outside Q (its stabilizer is
exactly W_Q). Reduced words are recovered from these images by repeatedly
reflecting in the smallest index with a negative coordinate, which yields a
canonical reduced word of the minimal-length representative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .root_system import (
    CartanData,
    Root,
    Weight,
    pairing,
    reflect_weight,
    reflect_weight_by_root,
)


class NotACover(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    cd: CartanData = field(compare=False, repr=False)
    word: tuple[int, ...] = field(compare=False)
    rho_image: Weight

    def __post_init__(self):
        if len(self.word) != length(self):
            raise ValueError(f"word {self.word} is not reduced")

    def __len__(self) -> int:
        return len(self.word)

    def act(self, lam: Sequence) -> tuple:
        out = tuple(lam)
        for i in reversed(self.word):
            out = reflect_weight(self.cd, i, out)
        return out

    def __str__(self) -> str:
        return word_to_str(self.word)


def word_to_str(word: Sequence[int]) -> str:
    return ".".join(map(str, word)) if word else "id"


def parse_word(cd: CartanData, text: str | Sequence[int]) -> tuple[int, ...]:
    """Parse ``"1.2.1"``, ``"1,2"``, ``"id"`` or ``"w0"`` into an index tuple."""
    if not isinstance(text, str):
        word = tuple(int(i) for i in text)
    else:
        t = text.strip().lower()
        if t in ("", "id", "e"):
            word = ()
        elif t == "w0":
            word = longest_element(cd).word
        else:
            word = tuple(int(x) for x in re.split(r"[.,\s]+", t) if x)
    for i in word:
        if not 1 <= i <= cd.rank:
            raise ValueError(f"simple index {i} out of range 1..{cd.rank}")
    return word


def _descend(cd: CartanData, mu: Sequence) -> tuple[int, ...]:
    word = []
    mu = tuple(mu)
    while True:
        for i, x in enumerate(mu, start=1):
            if x < 0:
                word.append(i)
                mu = reflect_weight(cd, i, mu)
                break
        else:
            return tuple(word)


def identity(cd: CartanData) -> WeylElement:
    return WeylElement(cd, (), cd.rho)


def from_rho_image(cd: CartanData, mu: Weight) -> WeylElement:
    return WeylElement(cd, _descend(cd, mu), tuple(mu))


def from_word(cd: CartanData, word: Iterable[int], *, reduced: bool = True) -> WeylElement:
    """Element s_{i1} ... s_{ik}; with ``reduced=False`` any word is accepted
    and the stored word is replaced by the canonical reduced one."""
    word = tuple(word)
    mu = cd.rho
    for i in reversed(word):
        mu = reflect_weight(cd, i, mu)
    if reduced:
        return WeylElement(cd, word, mu)
    return from_rho_image(cd, mu)


def longest_element(cd: CartanData) -> WeylElement:
    return from_rho_image(cd, tuple(-x for x in cd.rho))


def length(w: WeylElement) -> int:
    """Number of positive roots beta with w^{-1}(beta) < 0."""
    return sum(1 for beta in w.cd.positive_roots if pairing(w.rho_image, beta, w.cd) < 0)


def left_mul(i: int, w: WeylElement) -> WeylElement:
    return from_rho_image(w.cd, reflect_weight(w.cd, i, w.rho_image))


def has_left_descent(w: WeylElement, i: int) -> bool:
    """True iff l(s_i w) < l(w)."""
    return w.rho_image[i - 1] < 0


# --- cosets ---------------------------------------------------------------


def qset_of(lam: Sequence[int]) -> frozenset[int]:
    """Simple indices i with <lam, alpha_i^vee> = 0."""
    return frozenset(i for i, x in enumerate(lam, start=1) if x == 0)


def _qweight(cd: CartanData, qset: frozenset[int]) -> Weight:
    return tuple(0 if i in qset else 1 for i in range(1, cd.rank + 1))


@dataclass(frozen=True)
class CosetElement:
    """A coset w W_Q, stored through its minimal-length representative."""

    rep: WeylElement
    qset: frozenset[int]

    @property
    def word(self) -> tuple[int, ...]:
        return self.rep.word

    @property
    def length(self) -> int:
        return len(self.rep.word)

    @property
    def cd(self) -> CartanData:
        return self.rep.cd

    @cached_property
    def key(self) -> Weight:
        """The image w(lambda_Q); determines the coset."""
        return self.rep.act(_qweight(self.cd, self.qset))

    def __hash__(self) -> int:
        # equal cosets share rep and qset, hence the key
        return hash(self.key)

    def act(self, lam: Sequence) -> tuple:
        return self.rep.act(lam)

    def sort_key(self) -> tuple:
        return (self.length, self.word)

    def __str__(self) -> str:
        return word_to_str(self.word)

    def __repr__(self) -> str:
        return f"CosetElement({self})"


@lru_cache(maxsize=None)
def _coset_from_key(cd: CartanData, qset: frozenset[int], key: Weight) -> CosetElement:
    return CosetElement(from_word(cd, _descend(cd, key)), qset)


def coset_from_key(cd: CartanData, qset: frozenset[int], key: Weight) -> CosetElement:
    return _coset_from_key(cd, frozenset(qset), tuple(key))


def min_coset_rep(w: WeylElement, qset: Iterable[int]) -> CosetElement:
    qset = frozenset(qset)
    return coset_from_key(w.cd, qset, w.act(_qweight(w.cd, qset)))


def coset(cd: CartanData, word: Iterable[int], qset: Iterable[int]) -> CosetElement:
    return min_coset_rep(from_word(cd, word, reduced=False), qset)


def coset_identity(cd: CartanData, qset: Iterable[int]) -> CosetElement:
    return coset(cd, (), qset)


def coset_left_mul(i: int, sigma: CosetElement) -> CosetElement:
    return coset_from_key(sigma.cd, sigma.qset, reflect_weight(sigma.cd, i, sigma.key))


def reflect_coset(beta: Root, sigma: CosetElement) -> CosetElement:
    return coset_from_key(sigma.cd, sigma.qset, reflect_weight_by_root(sigma.cd, beta, sigma.key))


def bruhat_leq(u: CosetElement | WeylElement, v: CosetElement | WeylElement) -> bool:
    """u <= v, scanning a reduced word of v from the left (subword criterion).

    At each letter s of v: if s is a left descent of u replace u by s u.
    Then u <= v iff u has become the identity.
    """
    if isinstance(u, CosetElement):
        if u.qset != v.qset:
            raise ValueError("cosets for different parabolic subgroups")
        u, v = u.rep, v.rep
    if len(u.word) > len(v.word):
        return False
    cd = u.cd
    mu = u.rho_image
    for i in v.word:
        if mu[i - 1] < 0:
            mu = reflect_weight(cd, i, mu)
    return all(x > 0 for x in mu)


def covering_root(kappa: CosetElement, sigma: CosetElement) -> Root:
    """The positive root beta with s_beta kappa = sigma when kappa is covered
    by sigma; raises NotACover otherwise."""
    if sigma.length != kappa.length + 1:
        raise NotACover(f"{kappa} -> {sigma}: length gap {sigma.length - kappa.length}")
    target = sigma.key
    key = kappa.key
    for beta in kappa.cd.positive_roots:
        if reflect_weight_by_root(kappa.cd, beta, key) == target:
            return beta
    raise NotACover(f"{kappa} -> {sigma}: no reflection relates them")


@lru_cache(maxsize=None)
def coset_orbit(cd: CartanData, qset: frozenset[int]) -> tuple[CosetElement, ...]:
    """All of W/W_Q, sorted by (length, word)."""
    start = _qweight(cd, qset)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(1, cd.rank + 1):
                nu = reflect_weight(cd, i, mu)
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    cosets = [coset_from_key(cd, qset, mu) for mu in seen]
    return tuple(sorted(cosets, key=CosetElement.sort_key))


def enumerate_lower_cosets(tau: CosetElement) -> list[CosetElement]:
    """A_tau = {sigma in W/W_Q : sigma <= tau}, sorted by (length, word)."""
    return [s for s in coset_orbit(tau.cd, tau.qset) if bruhat_leq(s, tau)]
