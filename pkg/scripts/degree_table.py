"""Degrees of Schubert varieties X(w0) in the embedding given by lambda, two ways.

For each type and lambda, compares the sum over maximal chains of bond
products with r! times the leading coefficient of the Hilbert function.
"""

import argparse
import itertools
import json
from dataclasses import dataclass

from seshadri.nok import degree, degree_via_hilbert, hilbert_counts
from seshadri.root_system import CartanData
from seshadri.strat_poset import build, count_maximal_chains
from seshadri.weyl import coset_orbit, qset_of


@dataclass
class TableConfig:
    types: tuple = ("A1", "A2", "B2", "G2", "A3", "B3")
    max_coord: int = 1
    json: bool = False


def rows(cfg: TableConfig):
    for name in cfg.types:
        cd = CartanData.from_type(name)
        for lam in itertools.product(range(cfg.max_coord + 1), repeat=cd.rank):
            if not any(lam):
                continue
            P = build(cd, lam, coset_orbit(cd, qset_of(lam))[-1])
            yield {
                "type": name,
                "lambda": list(lam),
                "vertices": len(P.vertices),
                "chains": count_maximal_chains(P),
                "degree": degree(P),
                "hilbert_degree": degree_via_hilbert(P),
                "hilbert": list(hilbert_counts(P, range(4)).values()),
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", default=",".join(TableConfig.types))
    ap.add_argument("--max-coord", type=int, default=TableConfig.max_coord)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = TableConfig(tuple(args.types.split(",")), args.max_coord, args.json)
    table = list(rows(cfg))
    if cfg.json:
        print(json.dumps(table, indent=2))
        return
    print(f"{'type':<5}{'lambda':<12}{'|A|':>6}{'chains':>9}{'degree':>10}{'hilbert':>10}  dims m=0..3")
    for r in table:
        lam = ",".join(map(str, r["lambda"]))
        flag = "" if r["degree"] == r["hilbert_degree"] else "  MISMATCH"
        print(f"{r['type']:<5}{lam:<12}{r['vertices']:>6}{r['chains']:>9}{r['degree']:>10}"
              f"{r['hilbert_degree']:>10}  {r['hilbert']}{flag}")


if __name__ == "__main__":
    main()
