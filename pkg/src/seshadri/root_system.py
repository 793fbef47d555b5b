"""Finite-type Cartan data, weights and roots in exact integer coordinates.

Convention (used by every other module): ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
Consequently the simple root alpha_j written in the fundamental-weight basis is
column ``j`` of the Cartan matrix.

Weights are tuples of ints (or Fractions) in the basis (omega_1, ..., omega_n);
roots are tuples of ints in the basis of simple roots. Simple indices are
1-based everywhere in the public API, matching the notation s_1, s_2, ...
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence, Union

Weight = tuple  # tuple[int, ...], fundamental-weight coordinates
RationalWeight = tuple  # tuple[Fraction, ...]
Root = tuple  # tuple[int, ...], simple-root coordinates
Number = Union[int, Fraction]


class CartanError(ValueError):
    """Raised for matrices that are not finite-type Cartan matrices."""


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                # d_i C[i][j] = d_j C[j][i]
                dj = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = dj
                    component.append(j)
                    stack.append(j)
                elif d[j] != dj:
                    raise CartanError("matrix is not symmetrizable")
        scale = math.lcm(*(d[i].denominator for i in component))
        ints = [int(d[i] * scale) for i in component]
        g = math.gcd(*ints)
        for i, v in zip(component, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


def _is_positive_definite(mat: Sequence[Sequence[int]]) -> bool:
    # Gaussian elimination without pivoting: all pivots positive iff all
    # leading principal minors positive.
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def _named_matrix(family: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family == "A" and n >= 1:
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        link(n - 2, n - 1, cij=-1, cji=-2)
    elif family == "C" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, cij=-2, cji=-1)
    elif family == "D" and n >= 4:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E" and n in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-6(-7-8), 2 attached to 4
        for i, j in [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]:
            link(i, j)
    elif family == "F" and n == 4:
        link(0, 1)
        link(1, 2, cij=-2, cji=-1)
        link(2, 3)
    elif family == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        link(0, 1, cij=-3, cji=-1)
    else:
        raise CartanError(f"unknown Cartan type {family}{n}")
    return c


@dataclass(frozen=True)
class CartanData:
    """A finite-type Cartan matrix together with its symmetrizer.

    Construction validates the matrix and rejects anything that is not of
    finite type (the symmetrized matrix must be positive definite).
    """

    cartan: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)
    symmetrizer: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        cartan = tuple(tuple(int(x) for x in row) for row in self.cartan)
        object.__setattr__(self, "cartan", cartan)
        n = len(cartan)
        if n == 0 or any(len(row) != n for row in cartan):
            raise CartanError("Cartan matrix must be square and non-empty")
        for i in range(n):
            if cartan[i][i] != 2:
                raise CartanError("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if cartan[i][j] > 0:
                        raise CartanError("off-diagonal entries must be <= 0")
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                        raise CartanError("C[i][j] = 0 must imply C[j][i] = 0")
        d = _symmetrizer(cartan)
        object.__setattr__(self, "symmetrizer", d)
        sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
        if not _is_positive_definite(sym):
            raise CartanError("Cartan matrix is not of finite type")

    @classmethod
    def from_type(cls, name: str, rank: int | None = None) -> "CartanData":
        """Build from a type name such as ``"A2"``, ``"G2"`` or ``("B", 3)``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", name)
        if not m:
            raise CartanError(f"cannot parse Cartan type {name!r}")
        family = m.group(1).upper()
        if m.group(2):
            n = int(m.group(2))
            if rank is not None and rank != n:
                raise CartanError(f"rank {rank} conflicts with type {name}")
        elif rank is not None:
            n = rank
        else:
            raise CartanError(f"type {name!r} needs a rank")
        return cls(tuple(map(tuple, _named_matrix(family, n))), name=f"{family}{n}")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental-weight coordinates (column i of C)."""
        return tuple(row[i - 1] for row in self.cartan)

    def root_to_weight(self, beta: Root) -> Weight:
        n = self.rank
        return tuple(sum(self.cartan[r][j] * beta[j] for j in range(n)) for r in range(n))

    def norm(self, beta: Root) -> int:
        """(beta, beta) for the form with (alpha_i, alpha_i) = 2 d_i."""
        n, c, d = self.rank, self.cartan, self.symmetrizer
        return sum(beta[i] * beta[j] * d[i] * c[i][j] for i in range(n) for j in range(n))

    def coroot(self, beta: Root) -> tuple[int, ...]:
        """beta^vee expanded in the simple coroots alpha_i^vee."""
        return _coroot(self, tuple(beta))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return _positive_roots(self)

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def to_json(self) -> dict:
        return {"type": self.name or None, "rank": self.rank,
                "cartan": [list(row) for row in self.cartan]}

    @classmethod
    def from_json(cls, data: dict | str) -> "CartanData":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(map(tuple, data["cartan"])), name=data.get("type") or "")


@lru_cache(maxsize=None)
def _coroot(cd: CartanData, beta: Root) -> tuple[int, ...]:
    nb = cd.norm(beta)
    out = []
    for k, di in zip(beta, cd.symmetrizer):
        q, r = divmod(2 * k * di, nb)
        if r:
            raise CartanError(f"{beta} is not a root")
        out.append(q)
    return tuple(out)


def _reflect_root(cd: CartanData, i: int, beta: Root) -> Root:
    # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
    row = cd.cartan[i - 1]
    k = sum(row[j] * beta[j] for j in range(cd.rank))
    out = list(beta)
    out[i - 1] -= k
    return tuple(out)


def _positive_roots(cd: CartanData) -> tuple[Root, ...]:
    n = cd.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, n + 1):
                gamma = _reflect_root(cd, i, beta)
                if all(x >= 0 for x in gamma) and gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(seen, key=lambda b: (sum(b), b)))


def positive_roots(cd: CartanData) -> tuple[Root, ...]:
    """All positive roots, sorted by height then coordinates."""
    return cd.positive_roots


def reflect_root(cd: CartanData, i: int, beta: Root) -> Root:
    return _reflect_root(cd, i, beta)


def pairing(lam: Sequence[Number], beta: Root, cd: CartanData) -> Number:
    """<lam, beta^vee> for a weight in fundamental coordinates."""
    return sum(c * x for c, x in zip(cd.coroot(beta), lam))


def reflect_weight(cd: CartanData, i: int, lam: Sequence[Number]) -> tuple:
    """s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    k = lam[i - 1]
    if k == 0:
        return tuple(lam)
    return tuple(x - k * c[i - 1] for x, c in zip(lam, cd.cartan))


def reflect_weight_by_root(cd: CartanData, beta: Root, lam: Sequence[Number]) -> tuple:
    """s_beta(lam) = lam - <lam, beta^vee> beta."""
    k = pairing(lam, beta, cd)
    if k == 0:
        return tuple(lam)
    b = cd.root_to_weight(beta)
    return tuple(x - k * y for x, y in zip(lam, b))


def is_dominant(lam: Sequence[Number]) -> bool:
    return all(x >= 0 for x in lam)


def add(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def scale(k: Number, u: Sequence[Number]) -> tuple:
    return tuple(k * a for a in u)
