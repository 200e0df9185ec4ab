"""Canonical state factories and the state-file format.

State files are UTF-8 JSON documents::

    {"dims": [2, 2], "amps": [[re, im], ...], "label": "optional"}

with amplitudes in the package's row-major order (last subsystem index
fastest).  JSON serialization of Python floats round-trips doubles exactly,
so write/read is lossless.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from math import prod, sqrt

import numpy as np

from ._validation import check_dims
from .core import MultiState, flat_index
from .exceptions import CapacityError


def basis_state(dims, multi) -> MultiState:
    """Computational basis state ``|multi>``."""
    dims = check_dims(dims)
    amps = np.zeros(prod(dims), dtype=np.complex128)
    amps[flat_index(multi, dims)] = 1.0
    return MultiState(dims, amps)


def bell_state() -> MultiState:
    """Two-qubit state ``(|00> + |11>)/sqrt(2)``."""
    return ghz_state(2)


def ghz_state(m: int) -> MultiState:
    """``(|0...0> + |1...1>)/sqrt(2)`` on ``m >= 2`` qubits."""
    if m < 2:
        raise ValueError(f"GHZ states need m >= 2 qubits, got {m}")
    amps = np.zeros(2**m, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / sqrt(2.0)
    return MultiState((2,) * m, amps)


def w_state(m: int) -> MultiState:
    """Uniform superposition of the single-excitation basis states, ``m >= 3``."""
    if m < 3:
        raise ValueError(f"W states need m >= 3 qubits, got {m}")
    amps = np.zeros(2**m, dtype=np.complex128)
    for j in range(m):
        amps[2**j] = 1.0 / sqrt(m)
    return MultiState((2,) * m, amps)


def random_state(dims, seed: int) -> MultiState:
    """Seeded complex-Gaussian amplitudes, normalized (Haar for one draw)."""
    dims = check_dims(dims)
    rng = np.random.default_rng(seed)
    total = prod(dims)
    amps = rng.standard_normal(total) + 1j * rng.standard_normal(total)
    return MultiState(dims, amps, normalize=True)


def product_state(dims, seed: int) -> MultiState:
    """Tensor product of independent seeded random single-subsystem states."""
    dims = check_dims(dims)
    rng = np.random.default_rng(seed)
    amps = np.ones(1, dtype=np.complex128)
    for d in dims:
        factor = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        factor /= np.linalg.norm(factor)
        amps = np.kron(amps, factor)
    return MultiState(dims, amps)


@dataclass(frozen=True)
class StateFile:
    """A state loaded from disk plus its provenance."""

    state: MultiState
    label: str | None
    digest: str  # sha256 of the serialized bytes


def serialize_state(state: MultiState, label: str | None = None) -> str:
    """Render a state as the JSON document format (deterministic bytes)."""
    doc = {
        "dims": list(state.dims),
        "amps": [[float(a.real), float(a.imag)] for a in state.amps],
    }
    if label is not None:
        doc["label"] = label
    return json.dumps(doc, indent=2) + "\n"


def write_state_file(state: MultiState, path: str | os.PathLike, label: str | None = None) -> str:
    """Write ``state`` to ``path``; returns the serialized text."""
    text = serialize_state(state, label)
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(text)
    return text


def parse_state_document(text: str, *, normalize: bool = False) -> StateFile:
    """Parse the JSON document format; see :func:`read_state_file`."""
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed state file: {exc}") from None
    if not isinstance(doc, dict) or "dims" not in doc or "amps" not in doc:
        raise ValueError('malformed state file: expected an object with "dims" and "amps"')
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise ValueError('malformed state file: "label" must be a string')
    raw = doc["amps"]
    if not isinstance(raw, list) or any(
        not isinstance(entry, list) or len(entry) != 2 for entry in raw
    ):
        raise ValueError('malformed state file: "amps" must be a list of [re, im] pairs')
    try:
        amps = np.array([complex(re, im) for re, im in raw], dtype=np.complex128)
        state = MultiState(doc["dims"], amps, normalize=normalize)
    except CapacityError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed state file: {exc}") from None
    return StateFile(state=state, label=label, digest=digest)


def read_state_file(path: str | os.PathLike, *, normalize: bool = False) -> StateFile:
    """Load a state file.

    Unnormalized amplitudes are rejected unless ``normalize`` is True.
    Raises ``ValueError`` on malformed content and ``OSError`` on I/O
    failures.
    """
    with open(path, "r", encoding="utf-8") as fp:
        text = fp.read()
    return parse_state_document(text, normalize=normalize)
