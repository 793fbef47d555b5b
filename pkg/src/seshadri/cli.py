"""Command-line front end.

Every subcommand builds one poset A_tau from ``--type/--lambda/--tau`` and
delegates to a single library operation. Exit codes: 0 success, 1 bad input,
2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import demazure, ls_fan, nok, strat_poset, verify
from .root_system import CartanData, CartanError
from .weyl import coset, parse_word, word_to_str

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2
DEFAULT_SEED = 20240601


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class JobSpec:
    cd: CartanData
    lam: tuple[int, ...]
    tau_word: tuple[int, ...]
    qset: object
    m: int

    def poset(self, *, extended: bool = False) -> strat_poset.StratPoset:
        return strat_poset.build(self.cd, self.lam, self.tau_word, self.qset, extended=extended)


def parse_lambda(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"bad --lambda {text!r}: {exc}") from None


def job_from_args(args) -> JobSpec:
    cd = CartanData.from_type(args.type, args.rank)
    lam = parse_lambda(args.lam)
    if len(lam) != cd.rank:
        raise UsageError(f"--lambda has {len(lam)} coordinates, rank is {cd.rank}")
    tau = parse_word(cd, args.tau)
    if args.qset in (None, "auto"):
        qset = None
    else:
        qset = [int(x) for x in args.qset.split(",") if x.strip()]
    if args.m < 0:
        raise UsageError("--m must be nonnegative")
    return JobSpec(cd, lam, tau, qset, args.m)


# -- subcommands ---------------------------------------------------------------------


def cmd_poset(job: JobSpec, args) -> str:
    P = job.poset(extended=args.extended)
    if args.format == "dot":
        return strat_poset.to_dot(P)
    if args.format == "csv":
        return _csv([["lower", "upper", "beta", "bond"]] + [
            [str(e.lower), str(e.upper), " ".join(map(str, e.beta)), e.bond] for e in P.edges])
    return _json(strat_poset.to_json(P))


def cmd_chains(job: JobSpec, args) -> str:
    P = job.poset()
    chains = list(_limit(strat_poset.iter_maximal_chains(P), args.limit))
    if args.format == "csv":
        return _csv([["chain", "bonds", "bond_product"]] + [
            [" > ".join(map(str, c.elems)), " ".join(map(str, c.bonds)), c.bond_product] for c in chains])
    return _json({
        "count": strat_poset.count_maximal_chains(P),
        "lcm_bonds": strat_poset.lcm_bonds(P),
        "chains": [{"vertices": [str(v) for v in c.elems], "bonds": list(c.bonds),
                    "bond_product": c.bond_product} for c in chains],
    })


def cmd_ls_enum(job: JobSpec, args) -> str:
    P = job.poset()
    m = _positive_m(job)
    elems = ls_fan.enumerate_fan(P, m)
    if args.format == "csv":
        return ls_fan.fan_table_csv(elems, P)
    rows = []
    for a in elems:
        rows.append({
            "element": ls_fan.fan_to_json(a),
            "path": ls_fan.path_to_json(ls_fan.theta_inv(a, m, P)),
            "weight": list(ls_fan.integral_weight(ls_fan.weight_of(a, P))),
        })
    return _json({"m": m, "count": len(elems), "elements": rows})


def cmd_character(job: JobSpec, args) -> str:
    chi = demazure.demazure_character(job.cd, job.lam, job.m, job.tau_word)
    if args.check:
        other = demazure.path_character(job.poset(), job.m)
        if other != chi:
            raise strat_poset.InvariantViolation("Demazure character differs from the path character")
    if args.format == "csv":
        return _csv([["weight", "mult"]] + [[" ".join(map(str, w)), c] for w, c in chi.items()])
    return _json({"m": job.m, "dim": chi.total(), "character": chi.to_json()})


def cmd_dim(job: JobSpec, args) -> str:
    return _json({"dim": demazure.dimension(job.poset(), job.m)})


def cmd_degree(job: JobSpec, args) -> str:
    P = job.poset()
    d = nok.degree(P)
    if args.check and nok.degree_via_hilbert(P) != d:
        raise strat_poset.InvariantViolation("degree formula disagrees with the Hilbert function")
    return _json({"degree": d})


def cmd_nok(job: JobSpec, args) -> str:
    return _json(nok.report(job.poset(), max_chains=args.limit or 1000))


def cmd_decompose(job: JobSpec, args) -> str:
    P = job.poset()
    a = _element(args, P)
    parts = ls_fan.standard_decompose(a, P)
    if not ls_fan.is_standard_monomial(parts):
        raise strat_poset.InvariantViolation("decomposition is not standard")
    return _json({"element": ls_fan.fan_to_json(a), "parts": [ls_fan.fan_to_json(p) for p in parts]})


def cmd_monomial(job: JobSpec, args) -> str:
    P = job.poset()
    a = _element(args, P)
    if not a.coeffs:
        raise UsageError("empty element")
    word = parse_word(job.cd, args.word) if args.word else a.support[0].word
    mono = demazure.v_monomial(a, word, P)
    return _json({
        "element": ls_fan.fan_to_json(a),
        "word": word_to_str(word),
        "sequence": [{"n": n, "i": i} for i, n in mono.factors],
        "monomial": str(mono),
        "weight": list(mono.weight(P.cd, P.lam)),
    })


def cmd_verify(args, out) -> int:
    cfg = verify.VerifyConfig(seed=args.seed)
    results = verify.run(cfg, log=lambda s: print(s, file=sys.stderr))
    payload = {"ok": all(r.ok for r in results),
               "checks": [{"name": r.name, "cases": r.cases, "failures": r.failures[:20]} for r in results]}
    _emit(_json(payload), out)
    return EXIT_OK if payload["ok"] else EXIT_INVARIANT


COMMANDS = {
    "poset": cmd_poset,
    "chains": cmd_chains,
    "ls-enum": cmd_ls_enum,
    "character": cmd_character,
    "dim": cmd_dim,
    "degree": cmd_degree,
    "nok": cmd_nok,
    "decompose": cmd_decompose,
    "monomial": cmd_monomial,
}


# -- helpers -------------------------------------------------------------------------


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _limit(it, n):
    for k, x in enumerate(it):
        if n is not None and k >= n:
            return
        yield x


def _positive_m(job: JobSpec) -> int:
    if job.m < 1:
        raise UsageError("--m must be >= 1 for this command")
    return job.m


def _element(args, P) -> ls_fan.FanElement:
    if not args.element:
        raise UsageError("--element is required, e.g. --element '2.1:1/2 + 1:1/2'")
    text = args.element.strip()
    if text.startswith("{"):
        a = ls_fan.fan_from_json(json.loads(text), P)
    else:
        a = ls_fan.parse_fan_element(text, P)
    if not ls_fan.in_fan(a, P):
        raise UsageError(f"{a} is not in the LS-fan of this poset")
    return a


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", default="A2", help="Cartan type, e.g. A2, B3, G2 (or a letter with --rank)")
    common.add_argument("--rank", type=int, default=None)
    common.add_argument("--lambda", dest="lam", default=None, help="fundamental coordinates, e.g. 1,1")
    common.add_argument("--tau", default="w0", help="reduced word such as 1.2.1, or w0 / id")
    common.add_argument("--qset", default="auto", help="'auto' or comma-separated simple indices")
    common.add_argument("--m", type=int, default=1)
    common.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", default=None, help="write output to FILE")
    common.add_argument("--element", default=None, help="fan element 'WORD:COEFF + ...' or JSON")
    common.add_argument("--word", default=None, help="reduced word of the maximal support element")
    common.add_argument("--limit", type=int, default=None, help="cap on listed chains")
    common.add_argument("--extended", action="store_true", help="add the extra bottom element")
    common.add_argument("--check", action="store_true", help="cross-check against the independent route")

    parser = _Parser(prog="seshadri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in list(COMMANDS) + ["verify"]:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args, args.out)
        if args.lam is None:
            raise UsageError("--lambda is required")
        if args.format == "dot" and args.command != "poset":
            raise UsageError("--format dot is only available for 'poset'")
        job = job_from_args(args)
        _emit(COMMANDS[args.command](job, args), args.out)
        return EXIT_OK
    except strat_poset.InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, CartanError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
