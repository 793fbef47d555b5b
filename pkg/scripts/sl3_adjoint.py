"""The bonded Hasse diagram of the adjoint representation of SL_3 and what it determines.

Prints the edges with bonds, the maximal chains, the degree, the first
values of the Hilbert function and the degree-1 LS-paths.
"""

from seshadri.demazure import demazure_character, dimension
from seshadri.ls_fan import enumerate_fan, theta_inv, weight_of
from seshadri.nok import degree, degree_via_hilbert
from seshadri.root_system import CartanData
from seshadri.strat_poset import build, iter_maximal_chains


def main():
    cd = CartanData.from_type("A2")
    P = build(cd, (1, 1), "w0")
    print("edges (lower -> upper, bond):")
    for e in P.edges:
        print(f"  {e.lower!s:>5} -> {e.upper!s:<5}  beta={e.beta}  b={e.bond}")
    print("maximal chains:")
    for ch in iter_maximal_chains(P):
        print(f"  {ch}   product {ch.bond_product}")
    print(f"degree {degree(P)} (Hilbert check {degree_via_hilbert(P)})")
    print("dim V(m lambda):", [dimension(P, m) for m in range(6)])
    print("degree-1 fan elements, their LS-paths and weights:")
    for a in enumerate_fan(P, 1):
        print(f"  {a!s:<28} {theta_inv(a, 1, P)!s:<24} {tuple(map(int, weight_of(a, P)))}")
    chi = demazure_character(cd, (1, 1), 1, P.tau.word)
    print("character:", dict(chi.items()))


if __name__ == "__main__":
    main()
