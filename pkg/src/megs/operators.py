"""EPR and GHZ class operators, their decompositions, and enumeration.

Operators are Kronecker products of *elementary blocks*: a pi/2 block is a
sigma_y pattern embedded at one basis-index pair ``(k, l)``, a pi block the
corresponding sigma_x pattern.  An EPR operator carries pi/2 blocks on two
subsystems and identities elsewhere; a GHZ operator over a subset of size
``k >= 3`` carries pi/2 blocks on two of its members, pi blocks on the rest,
and identities off the subset.  Every operator is Hermitian,
complex-symmetric (O^T = O) and zero-diagonal, exactly.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

import numpy as np

from ._validation import check_dims, check_index_pair, check_subset
from .core import _check_capacity, kron_all
from .povm import PhaseKind

#: One basis-index pair per active subsystem, in subset order.
LambdaPairs = tuple[tuple[int, int], ...]


class ClassKind(enum.Enum):
    EPR = "EPR"
    GHZ = "GHZ"


_LABEL_RE = re.compile(r"^(EPR|GHZ)(\d*)\((\d+(?:,\s*\d+)*)\)$")


@dataclass(frozen=True)
class ClassLabel:
    """One element of the generating set: EPR over a pair or GHZ over a subset.

    ``subset`` holds sorted, distinct 0-based subsystem indices; size 2 for
    EPR, size >= 3 for GHZ.
    """

    kind: ClassKind
    subset: tuple[int, ...]

    def __post_init__(self):
        kind = ClassKind(self.kind)
        subset = tuple(int(j) for j in self.subset)
        if list(subset) != sorted(set(subset)) or any(j < 0 for j in subset):
            raise ValueError(f"subset must be sorted, distinct and nonnegative, got {self.subset!r}")
        if kind is ClassKind.EPR and len(subset) != 2:
            raise ValueError(f"EPR labels need exactly 2 subsystems, got {len(subset)}")
        if kind is ClassKind.GHZ and len(subset) < 3:
            raise ValueError(f"GHZ labels need at least 3 subsystems, got {len(subset)}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "subset", subset)

    @property
    def size(self) -> int:
        return len(self.subset)

    def validate_for_dims(self, dims: Sequence[int]) -> None:
        m = len(dims)
        if self.subset[-1] >= m:
            raise ValueError(f"label {self} does not fit a system of {m} subsystems")

    def sort_key(self) -> tuple:
        # EPR pairs first, then GHZ by (subset size, subset)
        group = 0 if self.kind is ClassKind.EPR else 1
        return (group, self.size, self.subset)

    def __str__(self) -> str:
        if self.kind is ClassKind.EPR:
            return f"EPR({self.subset[0]},{self.subset[1]})"
        return f"GHZ{self.size}({','.join(str(j) for j in self.subset)})"

    @classmethod
    def parse(cls, text: str) -> "ClassLabel":
        """Parse ``"EPR(0,1)"`` or ``"GHZ3(0,1,2)"`` (the size digit is optional)."""
        match = _LABEL_RE.match(text.strip().upper().replace(" ", ""))
        if match is None:
            raise ValueError(f"cannot parse class label {text!r}; expected e.g. EPR(0,1) or GHZ3(0,1,2)")
        kind = ClassKind(match.group(1))
        subset = tuple(int(tok) for tok in match.group(3).split(","))
        if match.group(2) and int(match.group(2)) != len(subset):
            raise ValueError(f"label {text!r}: size {match.group(2)} does not match subset of {len(subset)}")
        return cls(kind, subset)


@dataclass(frozen=True)
class ClassOperator:
    """A class operator on the full Hilbert space plus its build metadata."""

    matrix: np.ndarray = field(repr=False)
    label: ClassLabel
    lam: LambdaPairs
    pi_half_pair: tuple[int, int]
    dims: tuple[int, ...]

    def __post_init__(self):
        self.matrix.setflags(write=False)


def index_pairs(dim: int) -> list[tuple[int, int]]:
    """All ``(k, l)`` with ``k < l < dim`` in lexicographic order."""
    return [(k, l) for k in range(dim) for l in range(k + 1, dim)]


def elementary_block(dim: int, pair: Sequence[int], kind: PhaseKind) -> np.ndarray:
    """Single-pair complement block embedded in dimension ``dim``.

    pi/2 puts ``-i`` at ``(k, l)`` and ``+i`` at ``(l, k)`` (embedded
    sigma_y); pi puts ``1`` at both (embedded sigma_x).  Summing the blocks
    over every index pair reproduces the complement of the corresponding
    canonical phase matrix.
    """
    k, l = check_index_pair(pair, dim)
    block = np.zeros((dim, dim), dtype=np.complex128)
    if PhaseKind(kind) is PhaseKind.HALF_PI:
        block[k, l] = -1.0j
        block[l, k] = 1.0j
    else:
        block[k, l] = 1.0
        block[l, k] = 1.0
    return block


def _coerce_lambda(lam, dims: Sequence[int], subset: Sequence[int]) -> LambdaPairs:
    pairs = tuple(tuple(int(x) for x in p) for p in lam)
    if len(pairs) != len(subset):
        raise ValueError(
            f"lambda needs one index pair per active subsystem ({len(subset)}), got {len(pairs)}"
        )
    return tuple(check_index_pair(p, dims[j]) for j, p in zip(subset, pairs))


def _build_operator(dims, subset, pi_half_pair, lam, cap) -> np.ndarray:
    _check_capacity(prod(dims), f"operator on dims {tuple(dims)}", cap)
    factors = []
    for j, d in enumerate(dims):
        if j not in subset:
            factors.append(np.eye(d, dtype=np.complex128))
            continue
        pair = lam[subset.index(j)]
        kind = PhaseKind.HALF_PI if j in pi_half_pair else PhaseKind.PI
        factors.append(elementary_block(d, pair, kind))
    return kron_all(factors, cap)


def epr_operator(dims, pair, lam, cap: int | None = None) -> ClassOperator:
    """EPR operator: pi/2 blocks on the two paired subsystems, identity elsewhere."""
    dims = check_dims(dims)
    r1, r2 = check_index_pair(pair, len(dims))
    subset = (r1, r2)
    lam = _coerce_lambda(lam, dims, subset)
    matrix = _build_operator(dims, subset, subset, lam, cap)
    return ClassOperator(matrix, ClassLabel(ClassKind.EPR, subset), lam, subset, dims)


def ghz_operator(dims, subset, pi_half_pair, lam, cap: int | None = None) -> ClassOperator:
    """GHZ operator over ``subset``: pi/2 blocks on ``pi_half_pair``, pi blocks
    on the remaining subset members, identity off the subset."""
    dims = check_dims(dims)
    subset = check_subset(subset, len(dims))
    if len(subset) < 3:
        raise ValueError(f"GHZ operators need a subset of size >= 3, got {len(subset)}")
    a, b = (int(x) for x in pi_half_pair)
    if not (a < b and a in subset and b in subset):
        raise ValueError(f"pi_half_pair {pi_half_pair!r} must be an ordered pair inside {subset}")
    lam = _coerce_lambda(lam, dims, subset)
    matrix = _build_operator(dims, subset, (a, b), lam, cap)
    return ClassOperator(matrix, ClassLabel(ClassKind.GHZ, subset), lam, (a, b), dims)


def split_anti_diagonal(op: ClassOperator) -> tuple[np.ndarray, np.ndarray]:
    """Split an EPR operator into its strict upper and lower triangular parts.

    ``U + L`` reconstructs the matrix exactly and ``L = U^H``; for the qubit
    EPR operator the two parts are the upper and lower halves of the
    anti-diagonal.
    """
    if op.label.kind is not ClassKind.EPR:
        raise ValueError("split_anti_diagonal applies to EPR operators only")
    upper = np.triu(op.matrix, 1)
    lower = np.tril(op.matrix, -1)
    return upper, lower


def split_sign_components(op: ClassOperator) -> list[np.ndarray]:
    """Split a GHZ operator into Hermitian two-entry components.

    Each component pairs one nonzero matrix element with its conjugate
    transpose partner; the pairs realize the distinct sign combinations of
    the joint phase (identity factors replicate each combination once per
    inactive diagonal position).  Components are ordered by the row-major
    position of their upper-triangle entry, have pairwise disjoint support,
    and sum to the operator exactly.
    """
    if op.label.kind is not ClassKind.GHZ:
        raise ValueError("split_sign_components applies to GHZ operators; EPR operators use split_anti_diagonal")
    mat = op.matrix
    rows, cols = np.nonzero(mat)
    inactive = prod(d for j, d in enumerate(op.dims) if j not in op.label.subset)
    expected = 2 ** op.label.size * inactive
    if len(rows) != expected or np.any(rows == cols):
        raise ValueError("operator is not in single-lambda-pair form")
    components = []
    for r, c in zip(rows, cols):
        if r >= c:
            continue
        part = np.zeros_like(mat)
        part[r, c] = mat[r, c]
        part[c, r] = mat[c, r]
        components.append(part)
    return components


def enumerate_class_operators(dims, label: ClassLabel, cap: int | None = None) -> list[ClassOperator]:
    """All operators belonging to ``label`` on the system ``dims``.

    EPR labels yield one operator per lambda choice
    (``prod N_j (N_j - 1) / 2`` over the pair, exactly one for qubits);
    GHZ labels additionally range over the ``C(k, 2)`` placements of the
    pi/2 pair.  Ordering is lexicographic by ``(pi_half_pair, lambda)``.
    """
    dims = check_dims(dims)
    label.validate_for_dims(dims)
    subset = label.subset
    lambda_choices = itertools.product(*(index_pairs(dims[j]) for j in subset))
    operators = []
    if label.kind is ClassKind.EPR:
        for lam in lambda_choices:
            operators.append(epr_operator(dims, subset, lam, cap))
    else:
        pairs = list(itertools.combinations(subset, 2))
        for pi_half_pair, lam in itertools.product(pairs, lambda_choices):
            operators.append(ghz_operator(dims, subset, pi_half_pair, lam, cap))
    return operators
