"""Input validation helpers shared by the library, the estimator and the CLI."""

from __future__ import annotations

from typing import Sequence

import numpy as np

#: Absolute tolerance used when a state is required to be normalized.
NORM_ATOL = 1e-8


def check_dims(dims) -> tuple[int, ...]:
    """Validate a vector of subsystem dimensions and return it as a tuple.

    Every entry must be an integer >= 2 and there must be at least one
    subsystem.
    """
    try:
        out = tuple(int(d) for d in dims)
    except (TypeError, ValueError):
        raise ValueError(f"dims must be a sequence of integers, got {dims!r}") from None
    if len(out) == 0:
        raise ValueError("dims must contain at least one subsystem")
    for j, d in enumerate(out):
        if d < 2:
            raise ValueError(f"subsystem {j}: dimension must be >= 2, got {d}")
    return out


def check_subset(subset, m: int) -> tuple[int, ...]:
    """Validate a sorted tuple of distinct subsystem indices in ``0..m-1``."""
    out = tuple(int(j) for j in subset)
    if list(out) != sorted(set(out)):
        raise ValueError(f"subset must be sorted and free of duplicates, got {subset!r}")
    for j in out:
        if not 0 <= j < m:
            raise ValueError(f"subsystem index {j} out of range for {m} subsystems")
    return out


def check_index_pair(pair, dim: int) -> tuple[int, int]:
    """Validate a basis-index pair ``(k, l)`` with ``k < l < dim``."""
    try:
        k, l = (int(x) for x in pair)
    except (TypeError, ValueError):
        raise ValueError(f"index pair must be two integers, got {pair!r}") from None
    if not 0 <= k < l < dim:
        raise ValueError(f"index pair must satisfy 0 <= k < l < {dim}, got ({k}, {l})")
    return k, l


def as_amplitude_vector(amps) -> np.ndarray:
    """Coerce amplitudes to a fresh 1-D complex128 array."""
    arr = np.array(amps, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"amplitudes must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError("amplitudes must be finite")
    return arr


def as_square_matrix(matrix) -> np.ndarray:
    """Coerce ``matrix`` to a 2-D square complex128 array (no copy if possible)."""
    arr = np.asarray(matrix, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def infer_qubit_dims(width: int) -> tuple[int, ...]:
    """Interpret a state-vector length as an all-qubit dimension vector."""
    if width < 2:
        raise ValueError(f"state vectors of length {width} cannot hold any qubits")
    m = int(round(np.log2(width)))
    if 2**m != width:
        raise ValueError(
            f"cannot infer subsystem dimensions: {width} is not a power of two; "
            "pass dims explicitly"
        )
    return (2,) * m


def check_state_batch(
    X,
    dims: Sequence[int] | None = None,
    *,
    normalize: bool = False,
    atol: float = NORM_ATOL,
) -> tuple[np.ndarray, tuple[int, ...]]:
    """Validate a batch of pure-state vectors.

    Parameters
    ----------
    X : array-like of shape (n_samples, prod(dims))
        One state vector per row, complex amplitudes in row-major order with
        the last subsystem index varying fastest.
    dims : sequence of int, optional
        Subsystem dimensions.  When omitted the row width must be a power of
        two and an all-qubit system is assumed.
    normalize : bool
        Renormalize each row instead of rejecting unnormalized rows.
    atol : float
        Norm tolerance used when ``normalize`` is False.

    Returns
    -------
    (X, dims) : the validated complex128 array and the dimension tuple.
    """
    arr = np.array(X, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(
            f"expected a 2-D array of shape (n_samples, dim), got shape {arr.shape}; "
            "reshape single samples with X.reshape(1, -1)"
        )
    if arr.shape[0] == 0:
        raise ValueError("empty batch: need at least one state vector")
    if dims is None:
        dims = infer_qubit_dims(arr.shape[1])
    else:
        dims = check_dims(dims)
    expected = int(np.prod(dims))
    if arr.shape[1] != expected:
        raise ValueError(
            f"state vectors of length {arr.shape[1]} do not match dims {dims} "
            f"(expected length {expected})"
        )
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise ValueError("amplitudes must be finite")
    norms = np.linalg.norm(arr, axis=1)
    if normalize:
        if np.any(norms == 0):
            raise ValueError("cannot normalize a zero state vector")
        arr = arr / norms[:, None]
    else:
        bad = np.nonzero(np.abs(norms**2 - 1.0) > atol)[0]
        if bad.size:
            raise ValueError(
                f"row {bad[0]} is not normalized (|amps|^2 = {norms[bad[0]]**2:.6g}); "
                "pass normalize=True to renormalize"
            )
    return arr, dims
