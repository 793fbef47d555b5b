"""Built-in invariant suite over a fixed case matrix, used by ``seshadri verify``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import demazure, ls_fan, nok, strat_poset
from .root_system import CartanData
from .weyl import coset_orbit, qset_of

DEFAULT_TYPES = ("A1", "A2", "A3", "B2", "G2")


@dataclass
class VerifyConfig:
    types: tuple[str, ...] = DEFAULT_TYPES
    max_coord: int = 2
    max_m: int = 3
    seed: int = 20240601
    random_pairs: int = 2000
    monomial_samples: int = 100  # per poset and degree
    max_listed: int = 2000  # skip list-based checks on larger degree-2 fans


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def case_matrix(cfg: VerifyConfig) -> Iterator[strat_poset.StratPoset]:
    for ty in cfg.types:
        cd = CartanData.from_type(ty)
        for lam in itertools.product(range(cfg.max_coord + 1), repeat=cd.rank):
            if any(lam):
                for tau in coset_orbit(cd, qset_of(lam)):
                    yield strat_poset.build(cd, lam, tau)


def _label(P, m=None) -> str:
    s = f"{P.cd.name} lam={P.lam} tau={P.tau}"
    return s if m is None else f"{s} m={m}"


def run(cfg: VerifyConfig = VerifyConfig(), log: Callable[[str], None] | None = None) -> list[CheckResult]:
    rng = random.Random(cfg.seed)
    names = ["bond_translation", "character", "degree", "standard_monomials", "theta", "s_sequence", "fan_algebra"]
    res = {n: CheckResult(n) for n in names}

    def check(name, ok, label):
        r = res[name]
        r.cases += 1
        if not ok:
            r.failures.append(label)

    for P in case_matrix(cfg):
        check("bond_translation", strat_poset.bond_translation_check(P), _label(P))
        check("degree", nok.degree(P) == nok.degree_via_hilbert(P), _label(P))
        for m in range(1, cfg.max_m + 1):
            chi = demazure.demazure_character(P.cd, P.lam, m, P.tau.word)
            check("character", chi == demazure.path_character(P, m), _label(P, m))
            check("standard_monomials",
                  demazure.count_standard_monomials(P, m) == demazure.dimension(P, m), _label(P, m))
        if demazure.dimension(P, 2) > cfg.max_listed:
            continue
        for m in (1, 2):
            elems = ls_fan.enumerate_fan(P, m)
            paths = ls_fan.enumerate_ls_paths(P, m)
            ok = len(elems) == len(paths) and {ls_fan.theta(p, m, P, check=False) for p in paths} == set(elems)
            check("theta", ok, _label(P, m))
            sample = elems if len(elems) <= cfg.monomial_samples else rng.sample(elems, cfg.monomial_samples)
            for a in sample:
                try:
                    demazure.v_monomial(a, a.support[0].word, P)
                    check("s_sequence", True, "")
                except ArithmeticError as exc:
                    check("s_sequence", False, f"{_label(P, m)} a={a}: {exc}")
        ones = ls_fan.enumerate_fan(P, 1)
        for _ in range(cfg.random_pairs // 50):
            a, b = rng.choice(ones), rng.choice(ones)
            prod = ls_fan.fan_multiply(a, b)
            ok = prod is ls_fan.ZERO or (prod.degree == 2 and ls_fan.in_fan(prod, P))
            check("fan_algebra", ok, f"{_label(P)} {a} * {b}")
    out = [res[n] for n in names]
    if log:
        for r in out:
            log(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.cases} cases, {len(r.failures)} failures")
    return out
