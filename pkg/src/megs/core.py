"""Dense complex linear algebra and the pure-state data model.

Conventions used throughout the package:

* A composite system with subsystem dimensions ``dims = (N_1, ..., N_m)``
  lives on a dense complex vector of length ``prod(dims)``.
* Basis ordering is row-major with the *last* subsystem index varying
  fastest, so Kronecker products of per-subsystem operators act on the
  joint space without any index permutation.
* Subsystem indices are 0-based everywhere.
"""

from __future__ import annotations

import hashlib
import os
from functools import reduce
from math import prod
from typing import Iterable, Sequence

import numpy as np

from ._validation import NORM_ATOL, as_amplitude_vector, as_square_matrix, check_dims
from .exceptions import CapacityError

#: Default bound on the linear size of any dense object (state length or
#: matrix side).  Big enough for a dozen qubits; small enough that a typo in
#: ``dims`` fails fast instead of exhausting memory.
DEFAULT_DENSE_CAP = 4096

#: Environment variable that overrides :data:`DEFAULT_DENSE_CAP`.
DENSE_CAP_ENV = "MEGS_DENSE_CAP"


def dense_cap() -> int:
    """Return the configured dense-size cap (env override wins)."""
    raw = os.environ.get(DENSE_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{DENSE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 2:
        raise ValueError(f"{DENSE_CAP_ENV} must be >= 2, got {cap}")
    return cap


def _check_capacity(size: int, what: str, cap: int | None = None) -> None:
    limit = dense_cap() if cap is None else cap
    if size > limit:
        raise CapacityError(f"{what} of size {size} exceeds the dense cap {limit}")


def flat_index(multi: Sequence[int], dims: Sequence[int]) -> int:
    """Flatten a multi-index to the row-major position (last index fastest).

    Parameters
    ----------
    multi : per-subsystem basis indices ``(i_1, ..., i_m)``.
    dims : subsystem dimensions ``(N_1, ..., N_m)``.

    Returns
    -------
    int
        ``sum_j multi[j] * prod(dims[j+1:])``.
    """
    if len(multi) != len(dims):
        raise ValueError(f"multi-index length {len(multi)} != dims length {len(dims)}")
    flat = 0
    for j, (i, d) in enumerate(zip(multi, dims)):
        if not 0 <= i < d:
            raise ValueError(f"subsystem {j}: index {i} out of range for dimension {d}")
        flat = flat * d + i
    return flat


def multi_index(flat: int, dims: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`flat_index` for the given ``dims``."""
    total = prod(dims)
    if not 0 <= flat < total:
        raise ValueError(f"flat index {flat} out of range for dims {tuple(dims)}")
    out = []
    for d in reversed(dims):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


def kron(a, b, cap: int | None = None) -> np.ndarray:
    """Kronecker product of two dense complex matrices.

    ``kron(a, b)[i*rB + k, j*cB + l] == a[i, j] * b[k, l]``; the result is
    rejected with :class:`CapacityError` once either side would exceed the
    dense cap.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects two matrices")
    _check_capacity(a.shape[0] * b.shape[0], "kron result rows", cap)
    _check_capacity(a.shape[1] * b.shape[1], "kron result cols", cap)
    return np.kron(a, b)


def kron_all(factors: Iterable[np.ndarray], cap: int | None = None) -> np.ndarray:
    """Left-to-right Kronecker product of a sequence of matrices."""
    mats = list(factors)
    if not mats:
        raise ValueError("kron_all needs at least one factor")
    return reduce(lambda x, y: kron(x, y, cap), mats)


class MultiState:
    """Pure state of an ``m``-partite system.

    Parameters
    ----------
    dims : sequence of int
        Subsystem dimensions, each >= 2.
    amps : sequence of complex
        ``prod(dims)`` amplitudes in row-major order (last subsystem index
        fastest).
    normalize : bool
        Rescale ``amps`` to unit norm (rejects the zero vector).
    validate_norm : bool
        When True (default) the squared norm must be 1 within ``1e-8``;
        pass False only for unnormalized scratch states.

    The amplitude array is frozen after construction, so instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("dims", "amps")

    def __init__(self, dims, amps, *, normalize: bool = False, validate_norm: bool = True):
        dims = check_dims(dims)
        arr = as_amplitude_vector(amps)
        total = prod(dims)
        _check_capacity(total, f"state on dims {dims}")
        if arr.shape[0] != total:
            raise ValueError(
                f"amplitude vector of length {arr.shape[0]} does not match dims {dims} "
                f"(expected {total})"
            )
        if normalize:
            nrm = np.linalg.norm(arr)
            if nrm == 0:
                raise ValueError("cannot normalize the zero vector")
            arr = arr / nrm
        elif validate_norm:
            sq = float(np.vdot(arr, arr).real)
            if abs(sq - 1.0) > NORM_ATOL:
                raise ValueError(
                    f"state is not normalized (|amps|^2 = {sq:.6g}); pass normalize=True "
                    "to renormalize or validate_norm=False for a scratch state"
                )
        arr.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", arr)

    def __setattr__(self, name, value):
        raise AttributeError("MultiState is immutable")

    @property
    def m(self) -> int:
        """Number of subsystems."""
        return len(self.dims)

    @property
    def dim(self) -> int:
        """Total Hilbert-space dimension ``prod(dims)``."""
        return self.amps.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def is_normalized(self, atol: float = NORM_ATOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= atol

    def digest(self) -> str:
        """SHA-256 over a canonical byte encoding of dims and amplitudes."""
        h = hashlib.sha256()
        h.update(("dims:" + ",".join(str(d) for d in self.dims) + ";").encode())
        h.update(np.ascontiguousarray(self.amps, dtype="<c16").tobytes())
        return h.hexdigest()

    def __repr__(self) -> str:
        return f"MultiState(dims={self.dims}, dim={self.dim})"


def conjugate_state(state: MultiState) -> MultiState:
    """Componentwise complex conjugate in the computational basis.

    An involution; the norm is preserved exactly.
    """
    return MultiState(state.dims, np.conj(state.amps), validate_norm=False)


def bilinear_expectation(state: MultiState, matrix) -> complex:
    """Bilinear form ``<psi*|O|psi> = sum_{a,b} amps[a] * O[a,b] * amps[b]``.

    The bra is the *conjugated* state, so the amplitudes enter without any
    additional conjugation.  For ``O = sigma_y (x) sigma_y`` on two qubits
    the magnitude of this form is the familiar pure-state concurrence
    ``2|a00*a11 - a01*a10|``.
    """
    mat = as_square_matrix(matrix)
    if mat.shape[0] != state.dim:
        raise ValueError(
            f"operator of side {mat.shape[0]} does not match state dimension {state.dim}"
        )
    return complex(state.amps @ mat @ state.amps)
