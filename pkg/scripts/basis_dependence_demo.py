#!/usr/bin/env python3
"""Configuration count and mode entropies before and after a DFT.

A two-boson state occupying two distinct momentum modes is a single
configuration, so every occupation-based measure calls it unentangled.
The discrete Fourier transform re-expresses the same vector in position
modes, where it spreads over several configurations and the mode
partitions pick up entropy.  Transforming back restores the single
configuration exactly: the "entanglement" seen in between is a property
of the chosen single-particle basis, not of the state.
"""

import argparse

from fockent import (
    Statistics,
    apply_single_particle_unitary,
    configuration_count,
    dft_unitary,
    make_fock_state,
    mode_entanglement_entropy,
)


def describe(tag: str, state) -> None:
    print(f"{tag}: {configuration_count(state)} configuration(s)")
    for occ, amp in sorted(state.amplitudes.items(), reverse=True):
        print(f"  |{','.join(str(n) for n in occ)}>  {amp:+.6f}")
    for partition in [(0,), (0, 1)]:
        report = mode_entanglement_entropy(state, partition)
        print(f"  S({report.partition}) = {report.value_bits + 0.0:.6f} bits")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--modes", type=int, default=4, help="lattice size M")
    args = parser.parse_args()

    occupation = tuple(1 if k < 2 else 0 for k in range(args.modes))
    pair = make_fock_state(Statistics.BOSONIC, args.modes, [(occupation, 1.0)])
    dft = dft_unitary(args.modes)

    describe("momentum basis", pair)
    spread = apply_single_particle_unitary(pair, dft)
    describe("position basis (after DFT)", spread)
    restored = apply_single_particle_unitary(spread, dft.adjoint())
    describe("back in momentum basis", restored)


if __name__ == "__main__":
    main()
