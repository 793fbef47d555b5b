"""The LS-fan of monoids, LS-paths and the bijection Theta between them.

A fan element is a nonnegative rational vector on A_tau whose support is a
chain. On a maximal chain tau_r > ... > tau_0 with bonds b_r, ..., b_1 it lies
in the LS-lattice iff the partial sums T_j = a_r + ... + a_j satisfy
b_j T_j in Z for j >= 1 and T_0 in Z.

Internally, enumeration works with integer numerators over N = lcm of all
bonds of the poset; Fractions appear only at the API boundary.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .root_system import RationalWeight, Weight
from .strat_poset import StratPoset, iter_maximal_chains
from .weyl import CosetElement, bruhat_leq


def _desc_key(v: CosetElement):
    return (-v.length, v.word)


@dataclass(frozen=True)
class FanElement:
    """Sparse vector sum a_kappa e_kappa; zero coefficients are never stored.

    ``coeffs`` is ordered by decreasing length of the vertex.
    """

    coeffs: tuple[tuple[CosetElement, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[CosetElement, object]) -> "FanElement":
        items = []
        for v, c in d.items():
            c = Fraction(c)
            if c < 0:
                raise ValueError("fan elements have nonnegative coefficients")
            if c:
                items.append((v, c))
        items.sort(key=lambda vc: _desc_key(vc[0]))
        return cls(tuple(items))

    @classmethod
    def unit(cls, v: CosetElement, c=1) -> "FanElement":
        return cls.from_dict({v: c})

    @property
    def degree(self) -> Fraction:
        return sum((c for _, c in self.coeffs), Fraction(0))

    @property
    def support(self) -> tuple[CosetElement, ...]:
        return tuple(v for v, _ in self.coeffs)

    def as_dict(self) -> dict[CosetElement, Fraction]:
        return dict(self.coeffs)

    def __getitem__(self, v: CosetElement) -> Fraction:
        return self.as_dict().get(v, Fraction(0))

    def __add__(self, other: "FanElement") -> "FanElement":
        d = self.as_dict()
        for v, c in other.coeffs:
            d[v] = d.get(v, 0) + c
        return FanElement.from_dict(d)

    def __mul__(self, k) -> "FanElement":
        return FanElement.from_dict({v: c * k for v, c in self.coeffs})

    __rmul__ = __mul__

    def is_thin(self) -> bool:
        lengths = [v.length for v in self.support]
        return len(lengths) == len(set(lengths))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*e[{v}]" for v, c in self.coeffs)


class _Zero:
    """The zero of the fan algebra, x_a x_b = 0 for incomparable supports.

    Distinct from the empty FanElement, which is the degree-0 unit x_0.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False


ZERO = _Zero()


@dataclass(frozen=True)
class LSPath:
    """(sigma_p > ... > sigma_1 ; 0 < d_p < ... < d_1 = 1).

    ``sigmas[k]`` is paired with ``ds[k]``, so both run from the top element
    of the support down to the bottom one.
    """

    sigmas: tuple[CosetElement, ...]
    ds: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigmas", tuple(self.sigmas))
        object.__setattr__(self, "ds", tuple(Fraction(d) for d in self.ds))
        if len(self.sigmas) != len(self.ds) or not self.sigmas:
            raise ValueError("an LS-path needs matching, non-empty sequences")

    @property
    def support(self) -> tuple[CosetElement, ...]:
        return self.sigmas

    def endpoint(self, lam: Sequence[int], m: int = 1) -> RationalWeight:
        """pi(1) = sum (d_i - d_{i+1}) sigma_i(m lam)."""
        out = [Fraction(0)] * len(lam)
        prev = Fraction(0)
        for s, d in zip(self.sigmas, self.ds):
            img = s.act(lam)
            for k in range(len(out)):
                out[k] += (d - prev) * m * img[k]
            prev = d
        return tuple(out)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.sigmas))}; 0, {', '.join(map(str, self.ds))})"


class Order(enum.Enum):
    LESS = "<"
    GREATER = ">"
    EQUAL = "="
    INCOMPARABLE = "||"


# -- membership ------------------------------------------------------------------


def _indexed(a: FanElement, P: StratPoset) -> list[tuple[int, Fraction]] | None:
    out = []
    for v, c in a.coeffs:
        if v not in P:
            return None
        out.append((P.index(v), c))
    return out


def in_chain_lattice(a: FanElement, chain: Sequence[int], P: StratPoset) -> bool:
    """The LS-lattice conditions of ``a`` on a given maximal chain.

    ``chain`` lists vertex indices from tau down to id.
    """
    coeff = _indexed(a, P)
    if coeff is None:
        return False
    if any(c < 0 for _, c in coeff):
        return False
    # integer numerators over a common denominator L
    L = math.lcm(1, *(c.denominator for _, c in coeff))
    cmap = {k: c.numerator * (L // c.denominator) for k, c in coeff}
    if not cmap.keys() <= set(chain):
        return False
    total = 0
    for hi, lo in zip(chain, chain[1:]):
        total += cmap.get(hi, 0)
        if P.bond_idx(lo, hi) * total % L:
            return False
    total += cmap.get(chain[-1], 0)
    return total % L == 0


def support_is_chain(a: FanElement, P: StratPoset) -> bool:
    idx = [P.index(v) for v in a.support if v in P]
    if len(idx) != len(a.support):
        return False
    return all(P.comparable_idx(i, j) for k, i in enumerate(idx) for j in idx[k + 1:])


def in_fan(a: FanElement, P: StratPoset) -> bool:
    """Membership in LS_lambda^+, tested on one maximal chain through supp a."""
    if not support_is_chain(a, P):
        return False
    chain = P.extend_to_maximal([P.index(v) for v in a.support])
    return in_chain_lattice(a, chain, P)


# -- enumeration -------------------------------------------------------------------


def _chain_points(chain: Sequence[int], bonds: Sequence[int], N: int, m: int) -> Iterator[tuple]:
    """Degree-m lattice points on one maximal chain as keys ((idx, num), ...),
    numerators over N, ordered top to bottom.

    ``bonds[k]`` is the bond between chain[k] and chain[k+1].
    """
    r = len(bonds)
    total = m * N
    steps = [N // b for b in bonds]
    acc: list[tuple[int, int]] = []

    def rec(j: int, t_prev: int):
        # choose T_j (numerator) for position j, T_j >= t_prev
        if j == r:
            c = total - t_prev
            if c:
                acc.append((chain[r], c))
                yield tuple(acc)
                acc.pop()
            else:
                yield tuple(acc)
            return
        step = steps[j]
        start = -(-t_prev // step) * step
        for t in range(start, total + 1, step):
            c = t - t_prev
            if c:
                acc.append((chain[j], c))
                yield from rec(j + 1, t)
                acc.pop()
            else:
                yield from rec(j + 1, t)

    yield from rec(0, 0)


def fan_keys_by_chain(P: StratPoset, m: int) -> set[tuple]:
    """All degree-m elements as integer keys, via every maximal chain."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    keys: set[tuple] = set()
    N = P.lcm
    for ch in iter_maximal_chains(P):
        idx = [P.index(v) for v in ch.elems]
        keys.update(_chain_points(idx, ch.bonds, N, m))
    return keys


def _key_to_element(key: tuple, P: StratPoset) -> FanElement:
    N = P.lcm
    return FanElement(tuple((P.vertices[i], Fraction(c, N)) for i, c in key))


def element_to_key(a: FanElement, P: StratPoset) -> tuple:
    N = P.lcm
    out = []
    for v, c in a.coeffs:
        num = c * N
        if num.denominator != 1:
            raise ValueError(f"{a} has a coefficient outside (1/N)Z")
        out.append((P.index(v), int(num)))
    return tuple(out)


def canonical_sort_key(a: FanElement, P: StratPoset) -> tuple:
    """A linear extension of the triangle order (sort descending)."""
    return tuple((P.index(v), c) for v, c in a.coeffs)


def enumerate_fan(P: StratPoset, m: int) -> list[FanElement]:
    """LS_lambda^+(m): per-chain partial sums, deduplicated across chains,
    sorted descending along a linear extension of the triangle order."""
    elems = [_key_to_element(k, P) for k in fan_keys_by_chain(P, m)]
    elems.sort(key=lambda a: canonical_sort_key(a, P), reverse=True)
    return elems


def weight_of(a: FanElement, P: StratPoset | Sequence[int]) -> RationalWeight:
    """sum a_kappa kappa(lambda), exact."""
    lam = P.lam if isinstance(P, StratPoset) else tuple(P)
    out = [Fraction(0)] * len(lam)
    for v, c in a.coeffs:
        for k, x in enumerate(v.act(lam)):
            out[k] += c * x
    return tuple(out)


def integral_weight(w: RationalWeight) -> Weight:
    if any(Fraction(x).denominator != 1 for x in w):
        raise ValueError(f"weight {w} is not integral")
    return tuple(int(x) for x in w)


# -- LS-paths ------------------------------------------------------------------------


def is_d_chain(kappa: CosetElement, sigma: CosetElement, d, P: StratPoset, shape: int = 1) -> bool:
    """Is one saturated chain kappa > ... > sigma a (d, shape*lambda)-chain?"""
    d = Fraction(d)
    hi, lo = P.index(kappa), P.index(sigma)
    if not P.leq_idx(lo, hi):
        raise ValueError(f"{kappa} and {sigma} are incomparable or wrongly ordered")
    path = P.saturated_chain(hi, lo)
    # |<kappa_i(lambda), beta_i^vee>| is the bond of the cover
    return all((d * shape * P.bond_idx(b, a)).denominator == 1 for a, b in zip(path, path[1:]))


def is_ls_path(pi: LSPath, P: StratPoset, m: int = 1) -> bool:
    """Validity as an LS-path of shape m*lambda with support in A_tau."""
    if any(s not in P for s in pi.sigmas):
        return False
    ds = pi.ds
    if ds[-1] != 1 or ds[0] <= 0 or any(x >= y for x, y in zip(ds, ds[1:])):
        return False
    for s, t in zip(pi.sigmas, pi.sigmas[1:]):
        if s == t or not P.leq(t, s):
            return False
    return all(is_d_chain(s, t, d, P, m) for s, t, d in zip(pi.sigmas, pi.sigmas[1:], ds))


def _iter_path_data(P: StratPoset, m: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """LS-paths of shape m*lambda as (vertex indices, d-numerators over m*N)."""
    N = P.lcm
    D = m * N
    n = len(P.vertices)
    sig: list[int] = []
    ks: list[int] = []

    def rec(s: int, kp: int):
        sig.append(s)
        ks.append(D)
        yield tuple(sig), tuple(ks)
        ks.pop()
        for t in range(s):
            if not P.leq_idx(t, s):
                continue
            step = N // P.segment_gcd(s, t)
            for k in range((kp // step + 1) * step, D, step):
                ks.append(k)
                yield from rec(t, k)
                ks.pop()
        sig.pop()

    for s in range(n):
        yield from rec(s, 0)


def enumerate_ls_paths(P: StratPoset, m: int) -> list[LSPath]:
    """B(m lambda)_tau: all LS-paths of shape m*lambda with i(pi) <= tau."""
    if m < 1:
        raise ValueError("m must be positive")
    D = m * P.lcm
    return [
        LSPath(tuple(P.vertices[i] for i in sig), tuple(Fraction(k, D) for k in ks))
        for sig, ks in _iter_path_data(P, m)
    ]


def count_ls_paths(P: StratPoset, m: int) -> int:
    """|B(m lambda)_tau| by dynamic programming over (vertex, d), no listing.

    f(s, kp) counts completions of a path whose current support element is s
    and whose previous parameter is kp/(mN).
    """
    if m == 0:
        return 1
    N = P.lcm
    D = m * N
    n = len(P.vertices)
    below = [[(t, N // P.segment_gcd(s, t)) for t in range(s) if P.leq_idx(t, s)] for s in range(n)]
    steps = sorted({st for row in below for _, st in row})
    running = [{st: 0 for st in steps} for _ in range(n)]
    f = [0] * n
    for kp in range(D - 1, -1, -1):
        for s in range(n):
            f[s] = 1 + sum(running[t][st] for t, st in below[s])
        if kp:
            for t in range(n):
                for st in steps:
                    if kp % st == 0:
                        running[t][st] += f[t]
    return sum(f)


def path_character_counter(P: StratPoset, m: int) -> dict[Weight, int]:
    """sum over B(m lambda)_tau of e^{pi(1)} as a weight -> multiplicity map."""
    N = P.lcm
    D = m * N
    imgs = P.images
    n = len(P.vertices)
    rank = P.cd.rank
    out: dict[Weight, int] = {}

    # Theta coefficient of sigma_i is (k_i - k_{i+1})/N; accumulate N*weight
    def rec(s: int, kp: int, acc: list[int]):
        img = imgs[s]
        c = D - kp
        w = tuple(acc[j] + c * img[j] for j in range(rank))
        out[w] = out.get(w, 0) + 1
        for t in range(s):
            if not P.leq_idx(t, s):
                continue
            step = N // P.segment_gcd(s, t)
            for k in range((kp // step + 1) * step, D, step):
                c = k - kp
                rec(t, k, [acc[j] + c * img[j] for j in range(rank)])

    for s in range(n):
        rec(s, 0, [0] * rank)
    result = {}
    for w, mult in out.items():
        q = []
        for x in w:
            if x % N:
                raise ArithmeticError(f"non-integral path endpoint {w}/{N}")
            q.append(x // N)
        q = tuple(q)
        result[q] = result.get(q, 0) + mult
    return result


def theta(pi: LSPath, m: int, P: StratPoset, *, check: bool = True) -> FanElement:
    """Theta(pi) = sum (d_j - d_{j+1}) m e_{sigma_j}, with d_{p+1} = 0."""
    if check and not is_ls_path(pi, P, m):
        raise ValueError(f"{pi} is not an LS-path of shape {m}*lambda in A_tau")
    d = {}
    prev = Fraction(0)
    for s, x in zip(pi.sigmas, pi.ds):
        d[s] = (x - prev) * m
        prev = x
    return FanElement.from_dict(d)


def theta_inv(a: FanElement, m: int, P: StratPoset) -> LSPath:
    """The LS-path with d_i = (a_{sigma_p} + ... + a_{sigma_i}) / m."""
    if a.degree != m:
        raise ValueError(f"degree {a.degree} differs from m = {m}")
    if not in_fan(a, P):
        raise ValueError(f"{a} is not in the LS-fan")
    ds = []
    total = Fraction(0)
    for _, c in a.coeffs:
        total += c
        ds.append(total / m)
    return LSPath(a.support, tuple(ds))


# -- order, decomposition and product ---------------------------------------------


def triangle_cmp(a: FanElement, b: FanElement) -> Order:
    """Compare thin elements of equal degree: supports are read by decreasing
    length, comparing first the vertex (Bruhat) then the coefficient."""
    if a.degree != b.degree:
        raise ValueError("triangle order compares elements of equal degree only")
    if not (a.is_thin() and b.is_thin()):
        raise ValueError("triangle order is defined on thin elements only")
    for (u, x), (v, y) in zip(a.coeffs, b.coeffs):
        if u != v:
            if bruhat_leq(v, u):
                return Order.GREATER
            if bruhat_leq(u, v):
                return Order.LESS
            return Order.INCOMPARABLE
        if x != y:
            return Order.GREATER if x > y else Order.LESS
    if len(a.coeffs) != len(b.coeffs):
        # cannot happen for equal degrees with positive coefficients
        raise AssertionError("equal prefixes but different support sizes")
    return Order.EQUAL


def standard_decompose(a: FanElement, P: StratPoset) -> list[FanElement]:
    """The unique standard sum a = a^1 + ... + a^m with a^i in LS^+(1).

    Coefficients, read from the top of the support, tile [0, m]; the i-th
    summand collects the part of that tiling inside [i-1, i].
    """
    deg = a.degree
    if deg.denominator != 1 or deg < 1:
        raise ValueError(f"degree {deg} is not a positive integer")
    if not in_fan(a, P):
        raise ValueError(f"{a} is not in the LS-fan")
    m = int(deg)
    parts: list[dict] = [{} for _ in range(m)]
    lo = Fraction(0)
    for v, c in a.coeffs:
        hi = lo + c
        for i in range(math.floor(lo), min(m, math.ceil(hi))):
            piece = min(hi, i + 1) - max(lo, i)
            if piece > 0:
                parts[i][v] = piece
        lo = hi
    out = [FanElement.from_dict(p) for p in parts]
    for x in out:
        if x.degree != 1 or not in_fan(x, P):
            raise ArithmeticError(f"slice {x} of {a} left LS^+(1)")
    return out


def is_standard_monomial(seq: Sequence[FanElement]) -> bool:
    """min supp a^j >= max supp a^{j+1} for consecutive terms."""
    for a, b in zip(seq, seq[1:]):
        if not bruhat_leq(b.support[0], a.support[-1]):
            return False
    return True


def fan_multiply(a: FanElement, b: FanElement):
    """x_a * x_b in the fan algebra: x_{a+b} if supp a and supp b lie on a
    common chain, else ZERO."""
    supp = sorted(set(a.support) | set(b.support), key=_desc_key)
    for u, v in zip(supp, supp[1:]):
        if not bruhat_leq(v, u):
            return ZERO
    return a + b


# -- exports -------------------------------------------------------------------------


def fan_to_json(a: FanElement) -> dict:
    return {
        "coeffs": [
            {"vertex": str(v), "num": c.numerator, "den": c.denominator} for v, c in a.coeffs
        ],
        "degree": str(a.degree),
    }


def fan_from_json(data: dict, P: StratPoset) -> FanElement:
    from .weyl import coset, parse_word

    d = {}
    for item in data["coeffs"]:
        v = coset(P.cd, parse_word(P.cd, item["vertex"]), P.qset)
        d[v] = Fraction(item["num"], item["den"])
    return FanElement.from_dict(d)


def path_to_json(pi: LSPath) -> dict:
    return {
        "sigmas": [str(s) for s in pi.sigmas],
        "ds": [{"num": d.numerator, "den": d.denominator} for d in pi.ds],
    }


def fan_table_csv(elems: Iterable[FanElement], P: StratPoset) -> str:
    """One row per element, one column per vertex of A_tau."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", *[str(v) for v in P.vertices], "weight"])
    for a in elems:
        d = a.as_dict()
        wt = integral_weight(weight_of(a, P))
        w.writerow([str(a.degree), *[str(d.get(v, 0)) for v in P.vertices], " ".join(map(str, wt))])
    return buf.getvalue()


def parse_fan_element(text: str, P: StratPoset) -> FanElement:
    """Parse ``"2.1:1/2 + 1:1/2"`` (vertex word : coefficient, joined by '+')."""
    from .weyl import coset, parse_word

    d: dict[CosetElement, Fraction] = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            continue
        word, sep, coef = term.partition(":")
        if not sep:
            raise ValueError(f"term {term!r} is not of the form WORD:COEFF")
        v = coset(P.cd, parse_word(P.cd, word), P.qset)
        if v not in P:
            raise ValueError(f"{v} is not in A_tau")
        d[v] = d.get(v, Fraction(0)) + Fraction(coef.strip())
    return FanElement.from_dict(d)
