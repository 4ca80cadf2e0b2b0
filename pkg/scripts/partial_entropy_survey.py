#!/usr/bin/env python3
"""Spectral versus diagonal one-particle partial entropy.

Surveys the fermionic family (1/sqrt(m)) a+_0 (a+_1 + ... + a+_m)|0>.
Despite the m-term sum, each member is a single Slater determinant: the
bracket is one rotated mode, so rho1 always has eigenvalues {1, 1, 0,
...} and its entropy is exactly one bit.  The diagonal of rho1 tells a
different story: its occupancies (1, 1/m, ..., 1/m) give
1 + log2(m)/2 bits, a basis-dependent figure that grows with m.  The
table prints both, next to the entropy of the rest partition (modes
1..m), which vanishes because the state is a rank-one Schmidt product
across that cut.
"""

import argparse
import math

from fockent import (
    Statistics,
    diagonal_entropy,
    make_fock_state,
    mode_entanglement_entropy,
    n_particle_rdm,
    von_neumann_entropy,
)


def family_state(m: int):
    modes = m + 1
    terms = [
        (tuple(1 if k in (0, j) else 0 for k in range(modes)), 1 / math.sqrt(m))
        for j in range(1, modes)
    ]
    return make_fock_state(Statistics.FERMIONIC, modes, terms)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=8)
    args = parser.parse_args()

    header = f"{'m':>3} {'spectral':>10} {'diagonal':>10} {'1+log2(m)/2':>12} {'S(rest)':>9}"
    print(header)
    print("-" * len(header))
    for m in range(2, args.max_m + 1):
        state = family_state(m)
        rho = n_particle_rdm(state, 1)
        spectral = von_neumann_entropy(rho).value_bits + 0.0
        diagonal = diagonal_entropy(rho)
        rest = mode_entanglement_entropy(state, tuple(range(1, m + 1))).value_bits + 0.0
        target = 1 + math.log2(m) / 2
        print(f"{m:>3} {spectral:>10.6f} {diagonal:>10.6f} {target:>12.6f} {rest:>9.6f}")


if __name__ == "__main__":
    main()
