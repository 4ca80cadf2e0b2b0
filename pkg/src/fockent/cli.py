"""Command-line interface.

Subcommands: analyze, transform, rdm, yang, spinmap.  Every command reads
a state file (--state), prints a JSON report to standard output, and
exits 0 on success, 1 on input errors, 2 on numerical failure (a reduced
density matrix that is not positive semidefinite).  Reports are
deterministic: fixed key order, fixed element order, all numbers rounded
to 12 significant digits.  --out writes the transformed state file
(transform), the canonical basis unitary (yang), or a copy of the report
(analyze, rdm, spinmap).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import FockError, NotPSD
from .fileio import (
    emit_state_file,
    emit_unitary_file,
    parse_state_file,
    parse_unitary_file,
)
from .first_quant import ProductTensor, from_product_tensor
from .fock import FockState
from .measures import (
    configuration_count,
    diagonal_entropy,
    mode_entanglement_entropy,
    von_neumann_entropy,
)
from .rdm import DensityMatrix, mode_rdm, n_particle_rdm
from .spinmap import OrbitGrouping, register_entropy, to_spin_register
from .transform import apply_single_particle_unitary, dft_unitary
from .yang import coefficient_matrix, yang_decompose


class _ArgumentProblem(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _ArgumentProblem(message)


def _sig(x: float) -> float:
    value = float(f"{float(x):.12g}")
    return 0.0 if value == 0.0 else value


def _pair(z: complex) -> list[float]:
    return [_sig(z.real), _sig(z.imag)]


def _load_state(path: str) -> FockState:
    loaded = parse_state_file(path)
    if isinstance(loaded, ProductTensor):
        return from_product_tensor(loaded)
    return loaded


def _metadata(path: str) -> dict:
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return {"tool": "fockent", "version": __version__, "input_sha256": digest}


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}, expected comma-separated indices")


def _parse_orbits(text: str) -> OrbitGrouping:
    try:
        groups = tuple(
            tuple(int(piece) for piece in group.split(","))
            for group in text.split(";")
        )
    except ValueError:
        raise ValueError(f"bad orbit grouping {text!r}, expected like '0,1;2,3'")
    return OrbitGrouping(groups)


def _matrix_table(dm: DensityMatrix) -> dict:
    eigenvalues = sorted(np.linalg.eigvalsh(dm.entries), reverse=True)
    return {
        "labels": [list(label) for label in dm.labels],
        "trace": _sig(dm.trace),
        "matrix": [[_pair(z) for z in row] for row in dm.entries],
        "eigenvalues": [_sig(v) for v in eigenvalues],
    }


def _cmd_analyze(args: argparse.Namespace) -> dict:
    state = _load_state(args.state)
    rho1 = n_particle_rdm(state, 1)
    entropies = [
        ["one_particle_partial", _sig(von_neumann_entropy(rho1).value_bits)],
        ["one_particle_occupation", _sig(diagonal_entropy(rho1))],
    ]
    for text in args.partition or []:
        report = mode_entanglement_entropy(state, _parse_partition(text))
        entropies.append([report.partition, _sig(report.value_bits)])
    return {
        "command": "analyze",
        "configuration_count": configuration_count(state),
        "entropies": entropies,
        "metadata": _metadata(args.state),
    }


def _cmd_transform(args: argparse.Namespace) -> dict:
    state = _load_state(args.state)
    chosen = sum(1 for flag in (args.unitary, args.dft, args.dft_inverse) if flag)
    if chosen != 1:
        raise ValueError("need exactly one of --unitary, --dft, --dft-inverse")
    if args.unitary:
        unitary = parse_unitary_file(args.unitary)
    elif args.dft:
        unitary = dft_unitary(state.modes)
    else:
        unitary = dft_unitary(state.modes).adjoint()
    transformed = apply_single_particle_unitary(state, unitary)
    emit_state_file(args.out, transformed)
    return {
        "command": "transform",
        "output": args.out,
        "configuration_count": configuration_count(transformed),
        "metadata": _metadata(args.state),
    }


def _cmd_rdm(args: argparse.Namespace) -> dict:
    state = _load_state(args.state)
    if (args.n is None) == (args.partition is None):
        raise ValueError("need exactly one of --n, --partition")
    if args.n is not None:
        dm = n_particle_rdm(state, args.n)
        kind = f"{args.n}-particle"
    else:
        dm = mode_rdm(state, _parse_partition(args.partition))
        kind = f"modes {args.partition}"
    report = {"command": "rdm", "kind": kind}
    report.update(_matrix_table(dm))
    report["metadata"] = _metadata(args.state)
    return report


def _cmd_yang(args: argparse.Namespace) -> dict:
    state = _load_state(args.state)
    form = yang_decompose(coefficient_matrix(state))
    if args.out:
        emit_unitary_file(args.out, form.basis_change)
    return {
        "command": "yang",
        "yang_values": [_sig(v) for v in form.values],
        "rank": form.rank,
        "basis_output": args.out,
        "metadata": _metadata(args.state),
    }


def _cmd_spinmap(args: argparse.Namespace) -> dict:
    state = _load_state(args.state)
    grouping = _parse_orbits(args.orbits)
    register = to_spin_register(state, grouping)
    table = [
        [list(spins), *_pair(amp)]
        for spins, amp in sorted(register.amplitudes.items())
    ]
    entropies = []
    if grouping.orbit_count > 1:
        for orbit in range(grouping.orbit_count):
            report = register_entropy(register, (orbit,))
            entropies.append([report.partition, _sig(report.value_bits)])
    return {
        "command": "spinmap",
        "spin_register": table,
        "entropies": entropies,
        "metadata": _metadata(args.state),
    }


_HANDLERS = {
    "analyze": _cmd_analyze,
    "transform": _cmd_transform,
    "rdm": _cmd_rdm,
    "yang": _cmd_yang,
    "spinmap": _cmd_spinmap,
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="fockent", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="configuration count and entropies")
    analyze.add_argument("--state", required=True)
    analyze.add_argument("--partition", action="append", metavar="LIST")
    analyze.add_argument("--out")

    transform = sub.add_parser("transform", help="apply a single-particle unitary")
    transform.add_argument("--state", required=True)
    transform.add_argument("--unitary", metavar="PATH")
    transform.add_argument("--dft", action="store_true")
    transform.add_argument("--dft-inverse", action="store_true")
    transform.add_argument("--out", required=True)

    rdm = sub.add_parser("rdm", help="n-particle or mode reduced density matrix")
    rdm.add_argument("--state", required=True)
    rdm.add_argument("--n", type=int)
    rdm.add_argument("--partition", metavar="LIST")
    rdm.add_argument("--out")

    yang = sub.add_parser("yang", help="canonical pair values and basis")
    yang.add_argument("--state", required=True)
    yang.add_argument("--out", metavar="PATH", help="write the basis unitary here")

    spinmap = sub.add_parser("spinmap", help="orbit/spin register of a half-filled state")
    spinmap.add_argument("--state", required=True)
    spinmap.add_argument("--orbits", required=True, metavar="GROUPS")
    spinmap.add_argument("--out")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentProblem as problem:
        print(f"usage error: {problem}", file=sys.stderr)
        return 1
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        report = _HANDLERS[args.command](args)
    except NotPSD as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (FockError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=1)
    print(text)
    out = getattr(args, "out", None)
    if out and args.command in ("analyze", "rdm", "spinmap"):
        Path(out).write_text(text + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
