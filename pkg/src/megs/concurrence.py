"""Concurrence classes of a pure multipartite state.

A class value is the root sum of squares of the bilinear expectations
``<psi*|O|psi>`` over all operators enumerated for the class label.  For a
two-qubit state the single EPR class reproduces the familiar pure-state
concurrence ``2|a00*a11 - a01*a10|``.  Aggregates follow the same quadratic
rule: the W value collects all EPR pair classes, the total collects every
class in the generating set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import sqrt

from ._validation import NORM_ATOL
from .catalog import enumerate_megs
from .core import MultiState, bilinear_expectation
from .operators import ClassKind, ClassLabel, enumerate_class_operators


@dataclass(frozen=True)
class ConcurrenceReport:
    """Per-class values plus aggregates for one state.

    ``total**2 == sum of per_class**2`` and ``w_class**2`` collects the EPR
    entries, both by construction.
    """

    per_class: dict[ClassLabel, float]
    w_class: float
    total: float
    state_digest: str


def _require_normalized(state: MultiState) -> None:
    if not state.is_normalized(NORM_ATOL):
        raise ValueError(
            "state must be normalized for concurrence evaluation "
            f"(|amps|^2 = {state.norm()**2:.6g})"
        )


def class_operator_values(state: MultiState, label: ClassLabel) -> list[complex]:
    """Bilinear expectation of every enumerated operator of ``label``."""
    ops = enumerate_class_operators(state.dims, label)
    return [bilinear_expectation(state, op.matrix) for op in ops]


def class_concurrence(
    state: MultiState,
    label: ClassLabel,
    *,
    scale: float = 1.0,
    check_norm: bool = True,
) -> float:
    """Concurrence of one class: root sum of squared operator expectations.

    ``scale`` rescales the result (default 1, which makes the two-qubit EPR
    value coincide with the standard pure-state concurrence).  The value is
    degree-2 homogeneous in the amplitudes; pass ``check_norm=False`` to
    evaluate unnormalized scratch states.
    """
    label.validate_for_dims(state.dims)
    if check_norm:
        _require_normalized(state)
    values = class_operator_values(state, label)
    return scale * sqrt(sum(abs(v) ** 2 for v in values))


def w_class_concurrence(state: MultiState, *, scale: float = 1.0, check_norm: bool = True) -> float:
    """Aggregate over all ``C(m, 2)`` EPR pair classes."""
    if state.m < 2:
        raise ValueError("the W class needs at least 2 subsystems")
    if check_norm:
        _require_normalized(state)
    total = 0.0
    for pair in itertools.combinations(range(state.m), 2):
        value = class_concurrence(
            state, ClassLabel(ClassKind.EPR, pair), scale=scale, check_norm=False
        )
        total += value**2
    return sqrt(total)


def full_report(
    state: MultiState,
    *,
    scale: float = 1.0,
    check_norm: bool = True,
    digest: str | None = None,
) -> ConcurrenceReport:
    """Evaluate every class of the generating set for ``state``.

    ``digest`` identifies the input (defaults to the state's own canonical
    digest; the CLI passes the checksum of the input file bytes).
    """
    if check_norm:
        _require_normalized(state)
    catalog = enumerate_megs(state.m)
    per_class: dict[ClassLabel, float] = {}
    w_sq = 0.0
    total_sq = 0.0
    for label in catalog.labels:
        value = class_concurrence(state, label, scale=scale, check_norm=False)
        per_class[label] = value
        total_sq += value**2
        if label.kind is ClassKind.EPR:
            w_sq += value**2
    return ConcurrenceReport(
        per_class=per_class,
        w_class=sqrt(w_sq),
        total=sqrt(total_sq),
        state_digest=state.digest() if digest is None else digest,
    )
