"""The poset A_tau with its bonded Hasse diagram.

Vertices are the cosets sigma <= tau in W/W_Q, ordered by (length, word).
A covering edge kappa -> s_beta kappa carries the positive root beta and the
bond <kappa(lambda), beta^vee>, kappa being the lower endpoint.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .root_system import CartanData, Root, Weight, pairing, reflect_weight
from .weyl import (
    CosetElement,
    coset,
    coset_from_key,
    enumerate_lower_cosets,
    from_word,
    parse_word,
    qset_of,
    reflect_coset,
    word_to_str,
)

#: label of the extra bottom element tau_{-1} of the extended poset
EXTENDED_BOTTOM = "tau_-1"


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Edge:
    lower: CosetElement
    upper: CosetElement
    beta: Root
    bond: int


@dataclass(frozen=True)
class Chain:
    """A saturated descending chain elems[0] > elems[1] > ...

    ``bonds[k]`` is the bond of the cover elems[k+1] < elems[k]; for a maximal
    chain tau_r > ... > tau_0 this is (b_r, ..., b_1).
    """

    elems: tuple[CosetElement, ...]
    bonds: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bonds)

    @property
    def bond_product(self) -> int:
        return math.prod(self.bonds)

    def __str__(self) -> str:
        parts = [str(self.elems[0])]
        for b, e in zip(self.bonds, self.elems[1:]):
            parts.append(f"-{b}-> {e}")
        return " ".join(parts)


@dataclass(frozen=True, eq=False)
class StratPoset:
    cd: CartanData
    lam: Weight
    tau: CosetElement
    vertices: tuple[CosetElement, ...]
    edges: tuple[Edge, ...]
    extended: bool = False
    _index: dict = field(init=False, repr=False)
    _down: tuple = field(init=False, repr=False)
    _up: tuple = field(init=False, repr=False)
    _bond: dict = field(init=False, repr=False)
    _below: tuple = field(init=False, repr=False)

    def __post_init__(self):
        index = {v: k for k, v in enumerate(self.vertices)}
        n = len(self.vertices)
        down: list[list[int]] = [[] for _ in range(n)]
        up: list[list[int]] = [[] for _ in range(n)]
        bond = {}
        for e in self.edges:
            lo, hi = index[e.lower], index[e.upper]
            down[hi].append(lo)
            up[lo].append(hi)
            bond[lo, hi] = e.bond
        below = [0] * n
        for k in range(n):  # vertices are sorted by length
            mask = 1 << k
            for lo in down[k]:
                mask |= below[lo]
            below[k] = mask
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_down", tuple(tuple(sorted(d)) for d in down))
        object.__setattr__(self, "_up", tuple(tuple(sorted(u)) for u in up))
        object.__setattr__(self, "_bond", bond)
        object.__setattr__(self, "_below", tuple(below))

    # -- structure -----------------------------------------------------------

    @property
    def qset(self) -> frozenset[int]:
        return self.tau.qset

    @property
    def rank(self) -> int:
        """l(tau), the length of every maximal chain."""
        return self.tau.length

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: CosetElement) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    @property
    def bottom(self) -> CosetElement:
        return self.vertices[0]

    def leq(self, u: CosetElement, v: CosetElement) -> bool:
        return bool(self._below[self._index[v]] >> self._index[u] & 1)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self._below[j] >> i & 1)

    def comparable_idx(self, i: int, j: int) -> bool:
        return self.leq_idx(i, j) or self.leq_idx(j, i)

    def bond(self, lower: CosetElement, upper: CosetElement) -> int:
        return self._bond[self._index[lower], self._index[upper]]

    def bond_idx(self, lo: int, hi: int) -> int:
        return self._bond[lo, hi]

    def down_covers(self, k: int) -> tuple[int, ...]:
        return self._down[k]

    def up_covers(self, k: int) -> tuple[int, ...]:
        return self._up[k]

    @cached_property
    def images(self) -> tuple[Weight, ...]:
        """kappa(lambda) for every vertex, in vertex order."""
        return tuple(v.act(self.lam) for v in self.vertices)

    @cached_property
    def lcm(self) -> int:
        return math.lcm(1, *(e.bond for e in self.edges))

    @cached_property
    def _segment_gcd(self) -> dict:
        # gcd of the bonds along one saturated chain between comparable
        # vertices; d * b in Z for every such bond iff d * gcd in Z.
        # Independent of the chain through the segment (tested separately).
        seg = {}
        for hi in range(len(self.vertices)):
            seg[hi, hi] = 0
            for lo in range(hi):
                if not self.leq_idx(lo, hi):
                    continue
                for mid in self._down[hi]:
                    if self.leq_idx(lo, mid):
                        seg[hi, lo] = math.gcd(self._bond[mid, hi], seg[mid, lo])
                        break
        return seg

    def segment_gcd(self, hi: int, lo: int) -> int:
        """gcd of bonds on a saturated chain from vertex ``hi`` down to ``lo``
        (0 for hi == lo, the empty chain)."""
        return self._segment_gcd[hi, lo]

    def saturated_chain(self, hi: int, lo: int) -> list[int]:
        """One saturated chain hi > ... > lo (first choice at every step)."""
        if not self.leq_idx(lo, hi):
            raise ValueError("vertices are not comparable")
        path = [hi]
        while path[-1] != lo:
            path.append(next(m for m in self._down[path[-1]] if self.leq_idx(lo, m)))
        return path

    def saturated_chains(self, hi: int, lo: int) -> Iterator[list[int]]:
        """Every saturated chain hi > ... > lo."""
        if hi == lo:
            yield [hi]
            return
        for mid in self._down[hi]:
            if self.leq_idx(lo, mid):
                for rest in self.saturated_chains(mid, lo):
                    yield [hi] + rest

    def extend_to_maximal(self, support: Sequence[int]) -> list[int]:
        """A maximal chain (top to bottom, vertex indices) through ``support``,
        which must be a chain; raises ValueError otherwise."""
        pts = sorted(set(support), key=lambda k: -self.vertices[k].length)
        top = len(self.vertices) - 1
        stops = [top] + pts + [0]
        path = [top]
        for a, b in zip(stops, stops[1:]):
            if a == b:
                continue
            if not self.leq_idx(b, a):
                raise ValueError("support is not a chain")
            path.extend(self.saturated_chain(a, b)[1:])
        return path

    def chain_from_indices(self, idx: Sequence[int]) -> Chain:
        elems = tuple(self.vertices[k] for k in idx)
        bonds = tuple(self._bond[lo, hi] for hi, lo in zip(idx, idx[1:]))
        return Chain(elems, bonds)

    def restrict(self, sigma: CosetElement) -> "StratPoset":
        """The induced subposet on {kappa <= sigma}."""
        if sigma not in self:
            raise ValueError(f"{sigma} is not in A_tau")
        verts = tuple(v for v in self.vertices if self.leq(v, sigma))
        keep = set(verts)
        edges = tuple(e for e in self.edges if e.upper in keep and e.lower in keep)
        return StratPoset(self.cd, self.lam, sigma, verts, edges, self.extended)

    # -- extended poset --------------------------------------------------------

    @property
    def extended_edges(self) -> tuple:
        """Edges plus (tau_-1 -> id, bond 1) when the poset is extended."""
        if not self.extended:
            return self.edges
        return self.edges + (Edge(EXTENDED_BOTTOM, self.bottom, None, 1),)

    # -- equality for round trips ------------------------------------------------

    def same_as(self, other: "StratPoset") -> bool:
        return (
            self.cd == other.cd
            and tuple(self.lam) == tuple(other.lam)
            and self.tau == other.tau
            and self.vertices == other.vertices
            and set(self.edges) == set(other.edges)
            and self.extended == other.extended
        )


def resolve_qset(lam: Sequence[int], qset=None) -> frozenset[int]:
    auto = qset_of(lam)
    if qset is None or qset == "auto":
        return auto
    qset = frozenset(int(i) for i in qset)
    if qset != auto:
        # bonds <kappa(lam), beta^vee> are only well defined and positive on
        # W/W_Q for Q the stabilizer of lam
        raise ValueError(
            f"qset {sorted(qset)} differs from the stabilizer {sorted(auto)} of lambda"
        )
    return qset


def build(cd: CartanData, lam: Sequence[int], tau, qset=None, *, extended: bool = False) -> StratPoset:
    """Build A_tau with covering edges, roots and bonds.

    ``tau`` may be a CosetElement, a word (sequence of indices) or a string
    accepted by :func:`parse_word` such as ``"2.1"`` or ``"w0"``.
    """
    lam = tuple(int(x) for x in lam)
    if len(lam) != cd.rank:
        raise ValueError(f"lambda has {len(lam)} coordinates, rank is {cd.rank}")
    if any(x < 0 for x in lam):
        raise ValueError("lambda must be dominant")
    if not any(lam):
        raise ValueError("lambda must be nonzero")
    q = resolve_qset(lam, qset)
    if isinstance(tau, CosetElement):
        if tau.qset != q:
            raise ValueError("tau belongs to a different W/W_Q")
    else:
        word = parse_word(cd, tau)
        from_word(cd, word)  # rejects non-reduced words
        tau = coset(cd, word, q)

    verts = tuple(enumerate_lower_cosets(tau))
    vset = set(verts)
    edges = []
    for kappa in verts:
        image = kappa.act(lam)
        key = kappa.key
        seen = set()
        for beta in cd.positive_roots:
            sigma = reflect_coset(beta, kappa)
            if sigma in seen or sigma not in vset or sigma.length != kappa.length + 1:
                continue
            seen.add(sigma)
            b = pairing(image, beta, cd)
            if b < 1:
                raise InvariantViolation(f"bond {b} on {kappa} -> {sigma}")
            edges.append(Edge(kappa, sigma, beta, b))
    P = StratPoset(cd, lam, tau, verts, tuple(edges), extended)
    _check_graded(P)
    return P


def _check_graded(P: StratPoset) -> None:
    top = len(P.vertices) - 1
    if P.vertices[top] != P.tau or P.vertices[0].length != 0:
        raise InvariantViolation("A_tau must have tau on top and id at the bottom")
    for k, v in enumerate(P.vertices):
        if k != 0 and not P.down_covers(k):
            raise InvariantViolation(f"{v} has no lower cover")
        if k != top and not P.up_covers(k):
            raise InvariantViolation(f"{v} has no upper cover")


def iter_maximal_chains(P: StratPoset) -> Iterator[Chain]:
    """Maximal chains tau > ... > id, lexicographic in vertex order."""
    top = len(P.vertices) - 1

    def rec(path):
        k = path[-1]
        if k == 0:
            yield P.chain_from_indices(path)
            return
        for lo in P.down_covers(k):
            path.append(lo)
            yield from rec(path)
            path.pop()

    yield from rec([top])


def maximal_chains(P: StratPoset) -> list[Chain]:
    return list(iter_maximal_chains(P))


def count_maximal_chains(P: StratPoset) -> int:
    count = [0] * len(P.vertices)
    count[0] = 1
    for k in range(1, len(P.vertices)):
        count[k] = sum(count[lo] for lo in P.down_covers(k))
    return count[-1]


def lcm_bonds(P: StratPoset) -> int:
    return P.lcm


def bond_translation_check(P: StratPoset) -> bool:
    """For every cover kappa < sigma and simple alpha with s_alpha sigma < sigma:
    either s_alpha sigma = kappa, or s_alpha kappa < s_alpha sigma is again a
    cover with the same bond."""
    cd = P.cd
    for e in P.edges:
        up_img = e.upper.act(P.lam)
        low_img = e.lower.act(P.lam)
        for i in range(1, cd.rank + 1):
            if up_img[i - 1] >= 0:
                continue
            s_upper = coset_from_key(cd, P.qset, reflect_weight(cd, i, e.upper.key))
            if s_upper == e.lower:
                continue
            if low_img[i - 1] >= 0:
                return False
            s_lower = coset_from_key(cd, P.qset, reflect_weight(cd, i, e.lower.key))
            if s_lower not in P or s_upper not in P:
                return False
            if (P.index(s_lower), P.index(s_upper)) not in P._bond:
                return False
            if P.bond(s_lower, s_upper) != e.bond:
                return False
    return True


# -- exports ------------------------------------------------------------------


def to_dot(P: StratPoset) -> str:
    lines = ["digraph A_tau {", "  rankdir=BT;"]
    names = {v: f"v{k}" for k, v in enumerate(P.vertices)}
    for v in P.vertices:
        lines.append(f'  {names[v]} [label="{v}"];')
    if P.extended:
        lines.append(f'  bottom [label="{EXTENDED_BOTTOM}"];')
    for e in P.edges:
        lines.append(f'  {names[e.lower]} -> {names[e.upper]} [label="b={e.bond}"];')
    if P.extended:
        lines.append(f'  bottom -> {names[P.bottom]} [label="b=1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(P: StratPoset) -> dict:
    return {
        "cartan": P.cd.to_json(),
        "lambda": list(P.lam),
        "tau": word_to_str(P.tau.word),
        "qset": sorted(P.qset),
        "extended": P.extended,
        "vertices": [str(v) for v in P.vertices],
        "edges": [
            {"lower": str(e.lower), "upper": str(e.upper), "beta": list(e.beta), "bond": e.bond}
            for e in P.edges
        ],
    }


def from_json(data: dict | str) -> StratPoset:
    """Re-ingest the output of :func:`to_json` without recomputing edges."""
    if isinstance(data, str):
        data = json.loads(data)
    cd = CartanData.from_json(data["cartan"])
    q = frozenset(data["qset"])
    lam = tuple(data["lambda"])

    def cos(text):
        return coset(cd, parse_word(cd, text), q)

    verts = tuple(cos(v) for v in data["vertices"])
    edges = tuple(
        Edge(cos(e["lower"]), cos(e["upper"]), tuple(e["beta"]), int(e["bond"]))
        for e in data["edges"]
    )
    return StratPoset(cd, lam, cos(data["tau"]), verts, edges, bool(data.get("extended", False)))
