"""Phase-parameterized POVM matrices and their orthogonal complements.

A single subsystem of dimension ``N`` carries an antisymmetric matrix of
quantum phases ``phi[k, l]``.  The POVM matrix has entries
``e^{i phi[k, l]}`` (unit diagonal, Hermitian); its orthogonal complement
``I - Delta`` has zero diagonal and carries only the phase structure.
Multipartite complements are plain Kronecker products of per-subsystem
complements, so their nonzero entries pick up sums and differences of the
per-subsystem phases.
"""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .core import kron_all

#: Tolerance for the antisymmetry check on phase matrices.
ANTISYMMETRY_ATOL = 1e-12

_HALF_PI = np.pi / 2
_PI = np.pi

# exp() leaves ~1e-16 dust at the quarter-turn phases; the canonical class
# operators must come out with exact 0/±1/±i entries, so those four phases
# are special-cased.
_EXACT_PHASES = (
    (0.0, 1.0 + 0.0j),
    (_HALF_PI, 1.0j),
    (-_HALF_PI, -1.0j),
    (_PI, -1.0 + 0.0j),
    (-_PI, -1.0 + 0.0j),
)


class PhaseKind(enum.Enum):
    """Canonical uniform phase assignments used by the operator classes."""

    HALF_PI = "half_pi"
    PI = "pi"

    @property
    def angle(self) -> float:
        return _HALF_PI if self is PhaseKind.HALF_PI else _PI


class PhaseSpec:
    """Antisymmetric matrix of quantum phases for one subsystem.

    ``phases[k, l] == -phases[l, k]`` with a zero diagonal, leaving
    ``N(N-1)/2`` free parameters in the upper triangle.
    """

    __slots__ = ("dim", "phases")

    def __init__(self, phases):
        arr = np.array(phases, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"phases must be a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 2:
            raise ValueError(f"subsystem dimension must be >= 2, got {arr.shape[0]}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("phases must be finite")
        if np.max(np.abs(arr + arr.T)) > ANTISYMMETRY_ATOL:
            raise ValueError(
                "phase matrix is not antisymmetric: phi[k,l] must equal -phi[l,k] "
                "and the diagonal must vanish"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "dim", arr.shape[0])
        object.__setattr__(self, "phases", arr)

    def __setattr__(self, name, value):
        raise AttributeError("PhaseSpec is immutable")

    @classmethod
    def from_upper(cls, dim: int, values: Sequence[float]) -> "PhaseSpec":
        """Build a spec from the ``dim*(dim-1)/2`` upper-triangle phases.

        Values are consumed row by row: ``(0,1), (0,2), ..., (1,2), ...``.
        """
        values = list(values)
        expected = dim * (dim - 1) // 2
        if len(values) != expected:
            raise ValueError(f"expected {expected} upper-triangle phases, got {len(values)}")
        mat = np.zeros((dim, dim))
        pos = 0
        for k in range(dim):
            for l in range(k + 1, dim):
                mat[k, l] = values[pos]
                mat[l, k] = -values[pos]
                pos += 1
        return cls(mat)

    @classmethod
    def uniform(cls, dim: int, angle: float) -> "PhaseSpec":
        """All upper-triangle phases equal to ``angle``."""
        return cls.from_upper(dim, [angle] * (dim * (dim - 1) // 2))

    def n_free_phases(self) -> int:
        return self.dim * (self.dim - 1) // 2

    def __repr__(self) -> str:
        return f"PhaseSpec(dim={self.dim})"


def canonical_phases(dim: int, kind: PhaseKind) -> PhaseSpec:
    """Uniform pi/2 or pi phases on every upper-triangle pair."""
    if dim < 2:
        raise ValueError(f"subsystem dimension must be >= 2, got {dim}")
    return PhaseSpec.uniform(dim, PhaseKind(kind).angle)


def _unit_phases(phases: np.ndarray) -> np.ndarray:
    out = np.exp(1j * phases)
    for angle, value in _EXACT_PHASES:
        out[phases == angle] = value
    return out


def build_povm(spec: PhaseSpec) -> np.ndarray:
    """Matrix with entries ``e^{i phi[k, l]}``: unit diagonal, Hermitian.

    Positivity is *not* enforced; it holds for cocycle phases
    ``phi[k, l] = theta_k - theta_l`` (rank one, eigenvalues {N, 0, ...})
    but fails for generic assignments.
    """
    return _unit_phases(spec.phases)


def complement(spec: PhaseSpec) -> np.ndarray:
    """Orthogonal complement ``I - Delta``: zero diagonal, trace 0, Hermitian.

    At uniform pi phases this is the sigma_x pattern embedded in dimension
    ``N`` (all off-diagonal entries 1); at uniform pi/2 phases it embeds
    sigma_y (``-i`` above, ``+i`` below the diagonal).
    """
    return np.eye(spec.dim, dtype=np.complex128) - build_povm(spec)


def multipartite_complement(specs: Sequence[PhaseSpec], cap: int | None = None) -> np.ndarray:
    """Kronecker product of per-subsystem complements, in subsystem order.

    Each nonzero entry has phase ``pi*m + sum_j (+/- phi_j)``: a sum or
    difference of phases contributed by every subsystem.
    """
    if len(specs) == 0:
        raise ValueError("multipartite_complement needs at least one PhaseSpec")
    return kron_all((complement(s) for s in specs), cap)
