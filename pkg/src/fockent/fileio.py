"""State and unitary files.

Both formats are single JSON objects, hand-editable and diff-friendly.

State file::

    {
      "statistics": "fermionic" | "bosonic",
      "modes": M,
      "representation": "occupation" | "first_quantized",
      "terms": [[indices, re, im], ...]
    }

With representation "occupation" each index list holds the M occupation
numbers of one configuration.  With "first_quantized" each index list
holds the N mode indices of one product-tensor entry; entries not listed
are zero, and the assembled tensor must carry the exchange symmetry of
the statistics.  Amplitudes are not normalized on parse.

Unitary file::

    {"modes": d, "entries": [[re, im], ...]}   # d*d entries, row-major

Malformed files raise ParseError (with line/column when the JSON itself
is broken); semantically bad terms raise the library's typed errors
carrying the offending term index.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import MixedParticleNumber, ParseError
from .fock import FockState, Statistics, make_fock_state
from .first_quant import ProductTensor

STATISTICS_TAGS = {"fermionic": Statistics.FERMIONIC, "bosonic": Statistics.BOSONIC}


def _load_json(path: str | Path) -> object:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc


def _field(data: dict, name: str, kind: type) -> object:
    if name not in data:
        raise ParseError(f"missing field {name!r}")
    value = data[name]
    if not isinstance(value, kind):
        raise ParseError(f"field {name!r} must be {kind.__name__}")
    return value


def _parse_terms(data: dict) -> list[tuple[tuple[int, ...], complex]]:
    raw = _field(data, "terms", list)
    terms: list[tuple[tuple[int, ...], complex]] = []
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not isinstance(item[0], list)
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item[0])
            or not all(isinstance(x, (int, float)) for x in item[1:])
        ):
            raise ParseError(f"term {k} must be [[indices...], re, im]")
        terms.append((tuple(item[0]), complex(item[1], item[2])))
    return terms


def parse_state_file(path: str | Path) -> FockState | ProductTensor:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError("state file must hold a JSON object")
    tag = _field(data, "statistics", str)
    if tag not in STATISTICS_TAGS:
        raise ParseError(f"unknown statistics {tag!r}")
    statistics = STATISTICS_TAGS[tag]
    modes = _field(data, "modes", int)
    representation = _field(data, "representation", str)
    terms = _parse_terms(data)
    if representation == "occupation":
        for k, (occ, _) in enumerate(terms):
            if len(occ) != modes:
                raise ParseError(f"term {k} lists {len(occ)} occupations, need {modes}")
        return make_fock_state(statistics, modes, terms)
    if representation == "first_quantized":
        if not terms:
            raise ParseError("first_quantized file needs at least one term")
        particles = len(terms[0][0])
        entries = np.zeros((modes,) * particles, dtype=complex)
        for k, (indices, value) in enumerate(terms):
            if len(indices) != particles:
                raise MixedParticleNumber(
                    f"term lists {len(indices)} particles, first term lists {particles}",
                    term_index=k,
                )
            if any(not 0 <= i < modes for i in indices):
                raise ParseError(f"term {k} has a mode index outside 0..{modes - 1}")
            entries[indices] += value
        return ProductTensor(statistics, modes, particles, entries)
    raise ParseError(f"unknown representation {representation!r}")


def emit_state_file(path: str | Path, state: FockState) -> None:
    """Write an occupation-representation state file.

    Term order is descending lexicographic in the occupation vector, so
    identical states produce identical bytes; emit-then-parse returns the
    amplitudes exactly.
    """
    tag = "fermionic" if state.statistics is Statistics.FERMIONIC else "bosonic"
    terms = [
        [list(occ), state.amplitudes[occ].real, state.amplitudes[occ].imag]
        for occ in sorted(state.amplitudes, reverse=True)
    ]
    payload = {
        "statistics": tag,
        "modes": state.modes,
        "representation": "occupation",
        "terms": terms,
    }
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def parse_unitary_file(path: str | Path):
    from .transform import SingleParticleUnitary

    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError("unitary file must hold a JSON object")
    modes = _field(data, "modes", int)
    raw = _field(data, "entries", list)
    if len(raw) != modes * modes:
        raise ParseError(f"need {modes * modes} entries, found {len(raw)}")
    values = []
    for k, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, (int, float)) for x in item)
        ):
            raise ParseError(f"entry {k} must be [re, im]")
        values.append(complex(item[0], item[1]))
    matrix = np.array(values, dtype=complex).reshape(modes, modes)
    try:
        return SingleParticleUnitary(matrix)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def emit_unitary_file(path: str | Path, unitary) -> None:
    entries = [[z.real, z.imag] for z in np.asarray(unitary.entries).ravel()]
    payload = {"modes": unitary.dimension, "entries": entries}
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
