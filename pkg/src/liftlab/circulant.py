"""Circulant two-party states, their partial transposes, and Bell liftings.

C^d x C^d splits into d diagonal subspaces Sigma_alpha spanned by
e_i x e_{i+alpha} (indices mod d). A circulant state is a direct sum of
blocks over these subspaces; its partial transpose is again circulant, with
blocks given by a finite convolution, so positivity of the partial transpose
reduces to d small eigenvalue problems. Liftings that place block alpha
proportional to the input's diagonal entry rho[alpha, alpha] include the
Bell-diagonal family, whose output spectrum factorizes as p_m * rho[n, n].
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classical import as_probability_vector
from .errors import (
    BlockNotPSDError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NotNormalizedError,
    TraceNotOneError,
)
from .matcore import FactoredOperator, check_state, is_psd

DEFAULT_TOL = 1e-9


def circulant_subspaces(d: int) -> list[list[tuple[int, int]]]:
    """Index pairs (i, i+alpha mod d) spanning each subspace Sigma_alpha."""
    if d < 1:
        raise DimensionMismatchError(f"dimension must be positive, got {d}")
    return [[(i, (i + alpha) % d) for i in range(d)] for alpha in range(d)]


def shift_matrix(d: int) -> np.ndarray:
    """Cyclic shift S e_k = e_{k+1 mod d}."""
    s = np.zeros((d, d), dtype=complex)
    for k in range(d):
        s[(k + 1) % d, k] = 1.0
    return s


def _as_blocks(blocks) -> np.ndarray:
    b = np.asarray(blocks, dtype=complex)
    if b.ndim != 3 or b.shape[0] != b.shape[1] or b.shape[1] != b.shape[2]:
        raise DimensionMismatchError(f"blocks must have shape (d, d, d), got {b.shape}")
    return b


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant state data: one PSD d x d block per subspace, traces
    summing to one."""

    blocks: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        b = _as_blocks(self.blocks).copy()
        for alpha in range(b.shape[0]):
            ok, lo = is_psd(b[alpha], self.tol)
            if not ok:
                raise BlockNotPSDError(f"block {alpha} has eigenvalue {lo:.3e}")
        total = sum(np.trace(b[alpha]).real for alpha in range(b.shape[0]))
        if abs(total - 1.0) > max(self.tol, 1e-10):
            raise TraceNotOneError(f"block traces sum to {total!r}, expected 1")
        b.setflags(write=False)
        object.__setattr__(self, "blocks", b)

    @property
    def d(self) -> int:
        return self.blocks.shape[0]


def _assemble(blocks: np.ndarray, row_map, col_map) -> FactoredOperator:
    """Place block entries at (i * d + row_map(i, alpha), j * d + col_map(j, alpha))."""
    d = blocks.shape[0]
    m = np.zeros((d * d, d * d), dtype=complex)
    for alpha in range(d):
        for i in range(d):
            for j in range(d):
                m[i * d + row_map(i, alpha), j * d + col_map(j, alpha)] += blocks[alpha][i, j]
    return FactoredOperator(m, (d, d))


def build_circulant(spec: CirculantSpec) -> FactoredOperator:
    """Assemble the two-party state sum_alpha sum_ij a^(alpha)_ij
    e_ij x e_{i+alpha, j+alpha}."""
    d = spec.d
    return _assemble(spec.blocks, lambda i, a: (i + a) % d, lambda j, a: (j + a) % d)


def circulant_partial_transpose(blocks) -> np.ndarray:
    """Blocks of the partial transpose of a circulant state.

    Transposing the rightmost slot keeps the circulant structure and maps
    the blocks to a~^(alpha) = sum_beta a^(alpha+beta) o (Pi S^beta), with o
    the entrywise product, S the cyclic shift and Pi the permutation matrix
    of i -> -i mod d. Entrywise this is a~^(alpha)[i, j] =
    a^(alpha-i-j)[i, j]. Input blocks need not come from a valid state, so
    this accepts a bare (d, d, d) array.
    """
    b = _as_blocks(blocks)
    d = b.shape[0]
    out = np.zeros_like(b)
    for alpha in range(d):
        for i in range(d):
            for j in range(d):
                out[alpha, i, j] = b[(alpha - i - j) % d, i, j]
    return out


def assemble_partial_transpose(tilde_blocks) -> FactoredOperator:
    """Reassemble partially transposed blocks on the reflected subspaces:
    sum_alpha sum_ij a~^(alpha)_ij e_ij x e_{-i+alpha, -j+alpha}."""
    b = _as_blocks(tilde_blocks)
    d = b.shape[0]
    return _assemble(b, lambda i, a: (a - i) % d, lambda j, a: (a - j) % d)


def is_ppt_circulant(spec: CirculantSpec, tol: float = DEFAULT_TOL) -> tuple[bool, np.ndarray]:
    """Block-level PPT test.

    Returns (all blocks of the partial transpose PSD, the vector of their
    minimal eigenvalues).
    """
    tilde = circulant_partial_transpose(spec.blocks)
    lows = np.empty(spec.d)
    flags = []
    for alpha in range(spec.d):
        ok, lo = is_psd(tilde[alpha], tol)
        flags.append(ok)
        lows[alpha] = lo
    return all(flags), lows


def circulant_lift(cs, rho, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Lift a state along fixed circulant profiles.

    cs[alpha] is a PSD unit-trace d x d matrix; the output circulant state
    carries block rho[alpha, alpha] * cs[alpha], so it depends on rho only
    through its diagonal. Output traces to one for any unit-trace input.
    """
    profiles = _as_blocks(cs)
    d = profiles.shape[0]
    state = check_state(rho, tol)
    if state.matrix.shape[0] != d:
        raise DimensionMismatchError(f"state side {state.matrix.shape[0]} != block count {d}")
    for alpha in range(d):
        ok, lo = is_psd(profiles[alpha], tol)
        if not ok:
            raise BlockNotPSDError(f"profile {alpha} has eigenvalue {lo:.3e}")
        tr = np.trace(profiles[alpha]).real
        if abs(tr - 1.0) > max(tol, 1e-10):
            raise TraceNotOneError(f"profile {alpha} has trace {tr!r}, expected 1")
    p = np.real(np.diag(state.matrix))
    spec = CirculantSpec(np.array([p[alpha] * profiles[alpha] for alpha in range(d)]), tol)
    return build_circulant(spec)


def circulant_lift_isometry(cvecs, rho, tol: float = DEFAULT_TOL) -> tuple[FactoredOperator, np.ndarray]:
    """Isometry form of the circulant lifting.

    cvecs[alpha] is a unit vector; V maps e_alpha to
    sum_j cvecs[alpha][j] e_j x e_{j+alpha}, satisfies V*V = I, and
    E(rho) = V diag(rho) V* matches :func:`circulant_lift` with rank-one
    profiles. Returns (state, V).
    """
    c = np.asarray(cvecs, dtype=complex)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionMismatchError(f"cvecs must be a (d, d) array of row vectors, got {c.shape}")
    d = c.shape[0]
    for alpha in range(d):
        nrm = np.linalg.norm(c[alpha])
        if abs(nrm - 1.0) > max(tol, 1e-10):
            raise NotNormalizedError(f"vector {alpha} has norm {nrm!r}, expected 1")
    state = check_state(rho, tol)
    if state.matrix.shape[0] != d:
        raise DimensionMismatchError(f"state side {state.matrix.shape[0]} != vector count {d}")
    v = np.zeros((d * d, d), dtype=complex)
    for alpha in range(d):
        for j in range(d):
            v[j * d + (j + alpha) % d, alpha] = c[alpha, j]
    out = v @ np.diag(np.real(np.diag(state.matrix)).astype(complex)) @ v.conj().T
    return FactoredOperator(out, (d, d)), v


def maximally_entangled(d: int) -> FactoredOperator:
    """Projector onto (1/sqrt d) sum_i e_i x e_i."""
    m = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            m[i * d + i, j * d + j] = 1.0 / d
    return FactoredOperator(m, (d, d))


def bell_unitary(m: int, n: int, d: int) -> np.ndarray:
    """Weyl unitary U_mn e_k = lambda^{mk} e_{k+n} with lambda = exp(2 pi i / d).

    The d^2 unitaries are trace-orthogonal: Tr(U_mn U_rs^dagger) =
    d delta_mr delta_ns.
    """
    if not (0 <= m < d and 0 <= n < d):
        raise IndexOutOfRangeError(f"indices ({m},{n}) outside range 0..{d - 1}")
    u = np.zeros((d, d), dtype=complex)
    for k in range(d):
        u[(k + n) % d, k] = np.exp(2j * np.pi * m * k / d)
    return u


def bell_state(m: int, n: int, d: int) -> FactoredOperator:
    """Rank-one projector (I x U_mn) P+ (I x U_mn)^dagger, supported on
    subspace Sigma_n."""
    u = np.kron(np.eye(d), bell_unitary(m, n, d))
    base = maximally_entangled(d)
    return FactoredOperator(u @ base.matrix @ u.conj().T, (d, d))


@dataclass(frozen=True)
class BellSpectrum:
    """Joint weights p[m, n] over the d^2 Bell projectors."""

    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        if p.ndim != 2 or p.shape[0] != p.shape[1]:
            raise DimensionMismatchError(f"spectrum must be (d, d), got {p.shape}")
        if p.min() < -1e-12:
            raise BlockNotPSDError(f"spectrum has negative weight {p.min():.3e}")
        if abs(p.sum() - 1.0) > 1e-10:
            raise TraceNotOneError(f"spectrum sums to {p.sum()!r}, expected 1")
        p = np.clip(p, 0.0, None)
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

    @property
    def d(self) -> int:
        return self.p.shape[0]


def bell_diagonal_lift(p, rho, tol: float = DEFAULT_TOL) -> tuple[FactoredOperator, BellSpectrum]:
    """Circulant lifting whose output is Bell diagonal.

    The single profile c[k, l] = (1/d) sum_m p_m lambda^{m(k-l)} is used on
    every subspace; the output equals sum_mn p_m rho[n, n] P_mn, so the Bell
    spectrum of the lift factorizes into the input weight p and the diagonal
    of rho. Returns (state, spectrum).
    """
    weights = as_probability_vector(p)
    d = weights.size
    state = check_state(rho, tol)
    if state.matrix.shape[0] != d:
        raise DimensionMismatchError(f"state side {state.matrix.shape[0]} != weight count {d}")
    phases = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d)
    profile = np.zeros((d, d), dtype=complex)
    for m in range(d):
        profile += weights[m] * np.outer(phases[m], phases[m].conj())
    profile /= d
    lifted = circulant_lift(np.array([profile] * d), state, tol)
    spectrum = BellSpectrum(np.outer(weights, np.real(np.diag(state.matrix))))
    return lifted, spectrum
