"""Dense complex-matrix substrate for small multipartite operators.

Operators on a tensor product carry an ordered tuple of factor dimensions.
The leftmost tensor slot is the highest-numbered system, so a composite of
systems N, ..., 2, 1 is laid out as d_N x ... x d_2 x d_1 in row-major kron
order, and factor labels passed to :func:`partial_trace` and
:func:`partial_transpose` count 1-based from the right (rightmost slot is
system 1). Basis indices are 0-based everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotAStateError,
    NotHermitianError,
    NotPSDError,
)

DEFAULT_TOL = 1e-9


def _as_matrix(m) -> np.ndarray:
    """Accept a raw array or anything carrying a .matrix attribute."""
    return np.asarray(getattr(m, "matrix", m), dtype=complex)


@dataclass(frozen=True)
class FactoredOperator:
    """Square complex matrix tagged with ordered tensor-factor dimensions.

    ``dims[0]`` is the leftmost (highest-numbered) factor. The matrix is
    stored read-only; operations return new instances.
    """

    matrix: np.ndarray
    dims: tuple[int, ...] = field(default=())

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        dims = tuple(int(d) for d in (self.dims if self.dims else (m.shape[0],)))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise DimensionMismatchError("matrix entries must be finite")
        if any(d < 1 for d in dims):
            raise DimensionMismatchError(f"factor dimensions must be positive, got {dims}")
        if prod(dims) != m.shape[0]:
            raise DimensionMismatchError(
                f"product of dims {dims} is {prod(dims)}, matrix side is {m.shape[0]}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def n_factors(self) -> int:
        return len(self.dims)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))


def unit_matrix(d: int, i: int, j: int) -> np.ndarray:
    """Matrix unit e_ij of size d x d."""
    if not (0 <= i < d and 0 <= j < d):
        raise IndexOutOfRangeError(f"unit indices ({i},{j}) outside range 0..{d - 1}")
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1.0
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product in row-major convention (a is the left factor)."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def tensor(a: FactoredOperator, b: FactoredOperator) -> FactoredOperator:
    """Tensor product of factored operators; a supplies the left factors."""
    return FactoredOperator(np.kron(a.matrix, b.matrix), a.dims + b.dims)


def _positions(op: FactoredOperator, labels) -> list[int]:
    """Translate 1-based right-counted factor labels to axis positions."""
    n = op.n_factors
    out = []
    for k in labels:
        k = int(k)
        if not 1 <= k <= n:
            raise IndexOutOfRangeError(f"factor label {k} outside 1..{n}")
        out.append(n - k)
    if len(set(out)) != len(out):
        raise IndexOutOfRangeError(f"factor labels {tuple(labels)} repeat")
    return out


def partial_trace(op: FactoredOperator, keep) -> FactoredOperator:
    """Trace out every factor not listed in ``keep``.

    ``keep`` holds 1-based labels counted from the right; the kept factors
    retain their original left-to-right order.
    """
    keep_pos = set(_positions(op, keep))
    if not keep_pos:
        raise IndexOutOfRangeError("keep must name at least one factor")
    n = op.n_factors
    drop = sorted(set(range(n)) - keep_pos, reverse=True)
    t = op.matrix.reshape(*op.dims, *op.dims)
    m = n
    for pos in drop:
        t = np.trace(t, axis1=pos, axis2=pos + m)
        m -= 1
    kept_dims = tuple(d for i, d in enumerate(op.dims) if i in keep_pos)
    side = prod(kept_dims)
    return FactoredOperator(t.reshape(side, side), kept_dims)


def trace_out(op: FactoredOperator, factors) -> FactoredOperator:
    """Complement of :func:`partial_trace`: trace out the listed factors."""
    drop_pos = set(_positions(op, factors))
    keep_labels = [op.n_factors - p for p in range(op.n_factors) if p not in drop_pos]
    return partial_trace(op, keep_labels)


def partial_transpose(op: FactoredOperator, factor: int) -> FactoredOperator:
    """Transpose a single factor (1-based label counted from the right)."""
    (pos,) = _positions(op, [factor])
    n = op.n_factors
    t = op.matrix.reshape(*op.dims, *op.dims)
    t = np.swapaxes(t, pos, pos + n)
    side = op.matrix.shape[0]
    return FactoredOperator(t.reshape(side, side), op.dims)


def _spectral_scale(w: np.ndarray) -> float:
    """Tolerance scale: spectral-norm estimate floored at 1."""
    return max(1.0, float(np.abs(w).max(initial=0.0)))


def _check_hermitian(m: np.ndarray, tol: float) -> np.ndarray:
    dev = float(np.abs(m - m.conj().T).max(initial=0.0))
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if dev > tol * scale:
        raise NotHermitianError(f"deviation from Hermiticity {dev:.3e} exceeds {tol:.1e} * {scale:.3e}")
    return 0.5 * (m + m.conj().T)


def is_psd(m, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Positivity test for a Hermitian matrix.

    Returns ``(ok, min_eigenvalue)`` where ok means the smallest eigenvalue
    is above ``-tol`` relative to the spectral-norm estimate. Raises
    :class:`NotHermitianError` on non-Hermitian input.
    """
    h = _check_hermitian(_as_matrix(m), tol)
    w = np.linalg.eigvalsh(h)
    lo = float(w[0])
    return lo >= -tol * _spectral_scale(w), lo


def herm_sqrt(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Principal square root of a PSD matrix via Hermitian eigendecomposition.

    Eigenvalues inside the negative tolerance band are clipped to zero;
    anything below it raises :class:`NotPSDError`.
    """
    h = _check_hermitian(_as_matrix(m), tol)
    w, v = np.linalg.eigh(h)
    if w[0] < -tol * _spectral_scale(w):
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e}, below PSD tolerance")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def check_state(op, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Validate a density operator: Hermitian, PSD, unit trace.

    Accepts a FactoredOperator or raw matrix; returns a FactoredOperator.
    """
    fo = op if isinstance(op, FactoredOperator) else FactoredOperator(np.asarray(op, dtype=complex))
    try:
        ok, lo = is_psd(fo.matrix, tol)
    except NotHermitianError as exc:
        raise NotAStateError(f"state is not Hermitian: {exc}") from exc
    if not ok:
        raise NotAStateError(f"state has negative eigenvalue {lo:.3e}")
    tr = fo.trace()
    if abs(tr - 1.0) > max(tol, 1e-12) * 10:
        raise NotAStateError(f"state trace {tr} differs from 1")
    return fo
