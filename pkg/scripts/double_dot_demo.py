#!/usr/bin/env python3
"""Half-filled two-dot states as effective spin registers.

Four modes (dot 1 up, dot 1 down, dot 2 up, dot 2 down) at half filling
carry exactly one particle per dot, so each dot reduces to a spin-1/2.
The singlet and triplet combinations map to maximally entangled
two-spin registers (1 bit per dot), the up/down product state to an
unentangled register, and the doubly occupied dot fails the
half-filling check and has no spin description at all.
"""

from fockent import (
    DOUBLE_DOT_GROUPING,
    NotHalfFilled,
    build_double_dot_state,
    check_half_filling,
    register_entropy,
    to_spin_register,
)

ARROWS = {0: "up", 1: "dn"}


def main() -> None:
    for kind in ("singlet", "triplet0", "product_up_down", "double_occ_dot1"):
        state = build_double_dot_state(kind)
        print(f"{kind}:")
        half = check_half_filling(state, DOUBLE_DOT_GROUPING)
        print(f"  half filled: {half}")
        if not half:
            try:
                to_spin_register(state, DOUBLE_DOT_GROUPING)
            except NotHalfFilled as err:
                print(f"  no spin register: {err}")
            print()
            continue
        register = to_spin_register(state, DOUBLE_DOT_GROUPING)
        for spins, amp in sorted(register.amplitudes.items()):
            label = " ".join(ARROWS[s] for s in spins)
            print(f"  |{label}>  {amp:+.6f}")
        report = register_entropy(register, (0,))
        print(f"  S(dot 1) = {report.value_bits + 0.0:.6f} bits")
        print()


if __name__ == "__main__":
    main()
