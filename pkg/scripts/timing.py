"""Wall-clock timings for the main pipelines on growing posets."""

import argparse
import time
from dataclasses import dataclass

from seshadri.demazure import demazure_character, dimension, path_character
from seshadri.ls_fan import enumerate_fan
from seshadri.nok import degree_via_hilbert
from seshadri.root_system import CartanData
from seshadri.strat_poset import build, count_maximal_chains


@dataclass
class Case:
    name: str
    lam: tuple
    m: int


CASES = [
    Case("A2", (1, 1), 3),
    Case("B2", (1, 1), 3),
    Case("G2", (1, 1), 2),
    Case("A3", (1, 1, 1), 2),
    Case("B3", (1, 1, 1), 1),
    Case("A4", (1, 0, 0, 1), 1),
]


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-listing", action="store_true", help="do not list the fan")
    args = ap.parse_args()
    print(f"{'case':<24}{'|A|':>6}{'chains':>10}{'build':>9}{'dim':>9}{'t_dim':>9}"
          f"{'t_list':>9}{'t_char':>9}{'t_paths':>9}{'t_hilb':>9}")
    for c in CASES:
        cd = CartanData.from_type(c.name)
        P, tb = timed(build, cd, c.lam, "w0")
        d, td = timed(dimension, P, c.m)
        tl = float("nan") if args.skip_listing else timed(enumerate_fan, P, c.m)[1]
        chi, tc = timed(demazure_character, cd, c.lam, c.m, P.tau.word)
        pc, tp = timed(path_character, P, c.m)
        assert chi == pc and chi.total() == d
        _, th = timed(degree_via_hilbert, P)
        label = f"{c.name} {c.lam} m={c.m}"
        print(f"{label:<24}{len(P.vertices):>6}{count_maximal_chains(P):>10}{tb:>9.3f}{d:>9}{td:>9.3f}"
              f"{tl:>9.3f}{tc:>9.3f}{tp:>9.3f}{th:>9.3f}")


if __name__ == "__main__":
    main()
