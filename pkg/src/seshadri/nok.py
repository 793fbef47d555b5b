"""The simplicial complex of chains of A_tau, the integral structure on simplices and degrees.

A maximal chain C = (tau_r > ... > tau_0) with bonds b_r, ..., b_1 spans a
simplex Delta_C with vertices e_{tau_j}. The affine map of a chain sends e_{tau_j} to
sum_{k<=j} b_k e_k, so a barycentric point sum a_j e_{tau_j} has k-th
coordinate b_k (a_k + ... + a_r), k = 1..r counted from the bottom bond.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .ls_fan import FanElement, _chain_points, count_ls_paths
from .strat_poset import Chain, StratPoset, count_maximal_chains, iter_maximal_chains


class NonPolynomialData(ArithmeticError):
    """Counts fed to the Hilbert cross-check are not a polynomial of the expected degree."""


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """The order complex of A_tau: faces are chains, facets maximal chains."""

    poset: StratPoset

    @property
    def vertices(self):
        return self.poset.vertices

    @property
    def dim(self) -> int:
        return self.poset.rank

    def facets(self) -> Iterator[Chain]:
        return iter_maximal_chains(self.poset)

    def num_facets(self) -> int:
        return count_maximal_chains(self.poset)

    def is_face(self, idx: Iterable[int]) -> bool:
        idx = sorted(set(idx))
        P = self.poset
        return all(P.comparable_idx(i, j) for i, j in itertools.combinations(idx, 2))

    def is_homogeneous(self) -> bool:
        return all(len(c) == self.dim for c in self.facets())


@dataclass(frozen=True)
class IntegralStructure:
    """The affine chain map on one maximal simplex."""

    chain: Chain

    @cached_property
    def bonds_bottom_up(self) -> tuple[int, ...]:
        return tuple(reversed(self.chain.bonds))

    def vertex_image(self, j: int) -> tuple[int, ...]:
        """Image of e_{tau_j}, j counted from the bottom (tau_0 = id)."""
        b = self.bonds_bottom_up
        return tuple(b[k] if k < j else 0 for k in range(len(b)))

    def __call__(self, point: Mapping) -> tuple[Fraction, ...]:
        return dehy_embed(self.chain, point)


def _barycentric_on_chain(chain: Chain, point) -> list[Fraction]:
    """Coefficients a_r, ..., a_0 along the chain (top to bottom)."""
    if isinstance(point, FanElement):
        point = point.as_dict()
    if isinstance(point, Mapping):
        pos = {v: k for k, v in enumerate(chain.elems)}
        coeffs = [Fraction(0)] * len(chain.elems)
        for v, c in point.items():
            if v not in pos:
                raise ValueError(f"{v} is not on the chain")
            coeffs[pos[v]] = Fraction(c)
    else:
        coeffs = [Fraction(c) for c in point]
        if len(coeffs) != len(chain.elems):
            raise ValueError("need one coefficient per chain element")
    if any(c < 0 for c in coeffs) or sum(coeffs) != 1:
        raise ValueError("point is not barycentric (coefficients >= 0 summing to 1)")
    return coeffs


def dehy_embed(chain: Chain, point) -> tuple[Fraction, ...]:
    """Image of a barycentric point under the affine chain map; coordinates from the bottom bond up.

    ``point`` is a FanElement, a mapping vertex -> coefficient, or a sequence of
    coefficients aligned with ``chain.elems`` (top to bottom).
    """
    coeffs = _barycentric_on_chain(chain, point)
    r = len(chain.bonds)
    # partial sums from the top: top_sum[k] = a_k + ... + a_r with a_r = coeffs[0]
    out = []
    running = Fraction(0)
    tops = []
    for c in coeffs[:r]:
        running += c
        tops.append(running)
    # tops[t] = a_r + ... + a_{r-t}; coordinate k (1..r) uses a_k + ... + a_r = tops[r-k]
    for k in range(1, r + 1):
        b_k = chain.bonds[r - k]
        out.append(b_k * tops[r - k])
    return tuple(out)


def lattice_points(chain: Chain, m: int, P: StratPoset) -> set[FanElement]:
    """Delta_C(m) = {a/m : a in the LS-lattice of C, deg a = m}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    idx = [P.index(v) for v in chain.elems]
    N = P.lcm
    out = set()
    for key in _chain_points(idx, chain.bonds, N, m):
        out.add(FanElement(tuple((P.vertices[i], Fraction(c, N * m)) for i, c in key)))
    return out


def lattice_points_by_embedding(chain: Chain, m: int, face: Sequence | None = None) -> set[FanElement]:
    """{v in Delta_C : m * i(v) integral}, optionally restricted to a face.

    Enumerates the nonincreasing top-sums T_1 >= ... >= T_r in [0, 1] with
    m b_k T_k integral, independently of the fan machinery.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    r = len(chain.bonds)
    bonds_up = tuple(reversed(chain.bonds))  # b_1, ..., b_r
    elems_up = tuple(reversed(chain.elems))  # tau_0, ..., tau_r
    allowed = None if face is None else set(face)
    out = set()

    def rec(k: int, upper: Fraction, acc: list[Fraction]):
        if k > r:
            ts = [Fraction(1)] + acc + [Fraction(0)]  # T_0, ..., T_r, T_{r+1}
            coeffs = {elems_up[j]: ts[j] - ts[j + 1] for j in range(r + 1) if ts[j] != ts[j + 1]}
            if allowed is not None and not set(coeffs) <= allowed:
                return
            out.add(FanElement.from_dict(coeffs))
            return
        den = m * bonds_up[k - 1]
        for num in range(int(upper * den), -1, -1):
            acc.append(Fraction(num, den))
            rec(k + 1, acc[-1], acc)
            acc.pop()

    rec(1, Fraction(1), [])
    return out


def face_lattice_points(face: Sequence, chain: Chain, m: int) -> set[FanElement]:
    """Delta'(m) for the face spanned by ``face`` (vertices on ``chain``), via the affine chain map of ``chain``."""
    if not set(face) <= set(chain.elems):
        raise ValueError("face is not contained in the chain")
    return lattice_points_by_embedding(chain, m, face)


def degree(P: StratPoset) -> int:
    """sum over maximal chains of the product of their bonds."""
    f = [0] * len(P.vertices)
    f[0] = 1
    for k in range(1, len(P.vertices)):
        f[k] = sum(P.bond_idx(lo, k) * f[lo] for lo in P.down_covers(k))
    return f[-1]


def leading_from_counts(counts: Mapping[int, int], r: int) -> int:
    """r! times the leading coefficient of the degree-r polynomial through the data.

    Newton divided differences on exact rationals; any nonzero difference of
    order > r raises NonPolynomialData.
    """
    xs = sorted(counts)
    if len(set(xs)) < r + 1:
        raise ValueError(f"need at least {r + 1} distinct samples, got {len(xs)}")
    table = [Fraction(counts[x]) for x in xs]
    leading = None
    for order in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + order] - xs[i]) for i in range(len(table) - 1)]
        if order == r:
            leading = table[0]
            if any(t != leading for t in table):
                raise NonPolynomialData(f"order-{r} differences are not constant: {table}")
        elif order > r and any(table):
            raise NonPolynomialData(f"nonzero differences of order {order}")
    if r == 0:
        leading = Fraction(counts[xs[0]])
        if any(counts[x] != counts[xs[0]] for x in xs):
            raise NonPolynomialData("expected constant counts")
    result = leading * math.factorial(r)
    if result.denominator != 1:
        raise NonPolynomialData(f"r! * leading coefficient = {result} is not an integer")
    return int(result)


def hilbert_counts(P: StratPoset, samples: Iterable[int]) -> dict[int, int]:
    return {m: count_ls_paths(P, m) for m in samples}


def degree_via_hilbert(P: StratPoset, samples: Iterable[int] | None = None) -> int:
    """The degree read off the Hilbert function m -> dim V(m lambda)_tau.

    Defaults to m = 0, ..., r+1, one more sample than strictly needed so the
    polynomial check has teeth.
    """
    r = P.rank
    samples = range(r + 2) if samples is None else list(samples)
    return leading_from_counts(hilbert_counts(P, samples), r)


def report(P: StratPoset, *, max_m: int | None = None, max_chains: int = 1000) -> dict:
    """JSON-ready summary: maximal chains with bond products, degree and Hilbert counts."""
    r = P.rank
    chains = []
    for ch in itertools.islice(iter_maximal_chains(P), max_chains):
        chains.append({
            "vertices": [str(v) for v in ch.elems],
            "bonds": list(ch.bonds),
            "bond_product": ch.bond_product,
        })
    top = r + 1 if max_m is None else max_m
    counts = hilbert_counts(P, range(top + 1))
    return {
        "chains": chains,
        "num_chains": count_maximal_chains(P),
        "degree": degree(P),
        "hilbert": [{"m": m, "count": c} for m, c in counts.items()],
    }
