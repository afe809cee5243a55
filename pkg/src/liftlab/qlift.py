"""Quantum liftings through conditional-probability operators.

A unital CP map Lambda on M_d defines the operator pi = sum_ij e_ij x
Lambda(e_ij) on two d-dimensional factors. pi is PSD exactly when Lambda is
CP, and tracing out the first (leftmost) slot gives the identity when Lambda
is unital. Sandwiching, E(rho) = (I x sqrt(rho)) pi (I x sqrt(rho)), lifts a
state to a joint state whose first-slot partial trace is rho and whose
second-slot partial trace is the transpose of the adjoint channel applied to
rho. Chaining sandwiched copies of pi yields N-party liftings that reduce to
Markov chains on diagonal data.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotCompatibleError,
    NotCPError,
    NotFaithfulError,
    NotHermitianError,
    NotUnitalError,
)
from .matcore import (
    FactoredOperator,
    check_state,
    herm_sqrt,
    is_psd,
    partial_trace,
    unit_matrix,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class CpMap:
    """Linear map on M_d stored by its images on matrix units.

    units[i, j] holds the image of e_ij; Hermiticity preservation
    (units[i, j]^dagger == units[j, i]) is enforced at construction.
    """

    units: np.ndarray

    def __post_init__(self):
        u = np.array(self.units, dtype=complex)
        if u.ndim != 4 or len(set(u.shape)) != 1:
            raise DimensionMismatchError(f"units must have shape (d, d, d, d), got {u.shape}")
        d = u.shape[0]
        for i in range(d):
            for j in range(i, d):
                if not np.allclose(u[i, j].conj().T, u[j, i], atol=1e-10):
                    raise NotHermitianError(f"units[{i},{j}]^dagger differs from units[{j},{i}]")
        u.setflags(write=False)
        object.__setattr__(self, "units", u)

    @property
    def d(self) -> int:
        return self.units.shape[0]

    @property
    def unital(self) -> bool:
        total = self.units[np.arange(self.d), np.arange(self.d)].sum(axis=0)
        return bool(np.allclose(total, np.eye(self.d), atol=1e-10))

    @property
    def transfer(self) -> np.ndarray:
        """d^2 x d^2 matrix acting on row-major vectorized inputs."""
        d = self.d
        return self.units.transpose(2, 3, 0, 1).reshape(d * d, d * d)

    def apply(self, x) -> np.ndarray:
        """Evaluate Lambda(x) by linearity over matrix units."""
        xm = np.asarray(x, dtype=complex)
        if xm.shape != (self.d, self.d):
            raise DimensionMismatchError(f"input shape {xm.shape}, expected {(self.d, self.d)}")
        return np.einsum("ij,ijkl->kl", xm, self.units)

    def adjoint_apply(self, rho) -> np.ndarray:
        """Adjoint under the bilinear pairing Tr(Lambda(a) rho) = Tr(a Lambda#(rho))."""
        rm = np.asarray(rho, dtype=complex)
        if rm.shape != (self.d, self.d):
            raise DimensionMismatchError(f"input shape {rm.shape}, expected {(self.d, self.d)}")
        return np.einsum("ijkl,lk->ji", self.units, rm)


def cp_identity(d: int) -> CpMap:
    units = np.zeros((d, d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            units[i, j] = unit_matrix(d, i, j)
    return CpMap(units)


def cp_from_kraus(ops) -> CpMap:
    """CP map Lambda(x) = sum_m K_m x K_m^dagger from Kraus operators."""
    ks = [np.asarray(k, dtype=complex) for k in ops]
    if not ks or any(k.shape != ks[0].shape or k.ndim != 2 or k.shape[0] != k.shape[1] for k in ks):
        raise DimensionMismatchError("Kraus operators must be square matrices of one common size")
    d = ks[0].shape[0]
    units = np.zeros((d, d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            units[i, j] = sum(k @ unit_matrix(d, i, j) @ k.conj().T for k in ks)
    return CpMap(units)


def classical_cpmap(conditional) -> CpMap:
    """Diagonal CP map Lambda(e_aa) = sum_i p(a|i) e_ii, zero off the diagonal.

    conditional[a, i] = p(a|i) with unit column sums makes the map unital;
    its conditional-probability operator is the diagonal matrix of a
    classical Markov step.
    """
    c = np.asarray(conditional, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionMismatchError(f"conditional must be square, got shape {c.shape}")
    d = c.shape[0]
    units = np.zeros((d, d, d, d), dtype=complex)
    for a in range(d):
        units[a, a] = np.diag(c[a, :].astype(complex))
    return CpMap(units)


@dataclass(frozen=True)
class QcpOperator:
    """Conditional-probability operator pi = sum_ij e_ij x Lambda(e_ij)
    together with its source map."""

    op: FactoredOperator
    source: CpMap

    @property
    def d(self) -> int:
        return self.source.d

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix


def qcp_from_channel(cp: CpMap, tol: float = DEFAULT_TOL) -> QcpOperator:
    """Build pi from a unital CP map and validate both properties.

    Raises NotUnitalError when the unit-sum of images differs from the
    identity and NotCPError when pi fails positive semidefiniteness.
    """
    d = cp.d
    if not cp.unital:
        raise NotUnitalError("sum of diagonal-unit images differs from the identity")
    pi = cp.units.transpose(0, 2, 1, 3).reshape(d * d, d * d)
    ok, lo = is_psd(pi, tol)
    if not ok:
        raise NotCPError(f"conditional operator has eigenvalue {lo:.3e}; map is not CP")
    return QcpOperator(FactoredOperator(pi, (d, d)), cp)


def _qcp_matrix(pi) -> tuple[np.ndarray, int]:
    if isinstance(pi, QcpOperator):
        return pi.matrix, pi.d
    if isinstance(pi, FactoredOperator):
        if pi.n_factors != 2 or pi.dims[0] != pi.dims[1]:
            raise DimensionMismatchError(f"conditional operator needs dims (d, d), got {pi.dims}")
        return pi.matrix, pi.dims[0]
    m = np.asarray(pi, dtype=complex)
    d = int(round(m.shape[0] ** 0.5))
    if m.ndim != 2 or m.shape[0] != m.shape[1] or d * d != m.shape[0]:
        raise DimensionMismatchError(f"conditional operator must be d^2 x d^2, got shape {m.shape}")
    return m, d


def nonlinear_lift(pi, rho, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Sandwich lifting E(rho) = (I x sqrt(rho)) pi (I x sqrt(rho)).

    Tracing out the first (leftmost) slot returns rho exactly; tracing out
    the second slot returns the transposed adjoint channel of rho.
    """
    m, d = _qcp_matrix(pi)
    state = check_state(rho, tol)
    if state.matrix.shape[0] != d:
        raise DimensionMismatchError(f"state side {state.matrix.shape[0]} != conditional side {d}")
    s = np.kron(np.eye(d), herm_sqrt(state.matrix, tol))
    return FactoredOperator(s @ m @ s, (d, d))


def ohya_lift(rho, parties: int = 2, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Copy lifting sum_k p_k E_k x ... x E_k from the spectral decomposition.

    Eigenprojectors come from the Hermitian eigensolver, so the choice of
    basis inside degenerate eigenspaces follows that solver. Every
    single-party marginal equals rho regardless of the choice.
    """
    if parties < 2:
        raise DimensionMismatchError(f"parties must be at least 2, got {parties}")
    state = check_state(rho, tol)
    d = state.matrix.shape[0]
    w, v = np.linalg.eigh(state.matrix)
    w = np.clip(w, 0.0, None)
    side = d**parties
    out = np.zeros((side, side), dtype=complex)
    for k in range(d):
        proj = np.outer(v[:, k], v[:, k].conj())
        term = np.ones((1, 1), dtype=complex)
        for _ in range(parties):
            term = np.kron(term, proj)
        out += w[k] * term
    return FactoredOperator(out, (d,) * parties)


def compose_qcp(pi1, pi2, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Three-factor composite (I x sqrt(pi1)) (pi2 x I) (I x sqrt(pi1)).

    pi1 occupies the two rightmost slots, pi2 the two leftmost. Tracing out
    the leftmost slot returns pi1; tracing out the two leftmost returns the
    identity.
    """
    m1, d1 = _qcp_matrix(pi1)
    m2, d2 = _qcp_matrix(pi2)
    if d1 != d2:
        raise DimensionMismatchError(f"factor sizes differ: {d1} vs {d2}")
    s = np.kron(np.eye(d1), herm_sqrt(m1, tol))
    return FactoredOperator(s @ np.kron(m2, np.eye(d1)) @ s, (d1, d1, d1))


def n_compose_qcp(pis, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """Chain N-1 conditional operators into an N-factor composite.

    The list orders operators from the innermost link outward: element 0
    couples slots 2 and 1, element 1 couples slots 3 and 2, and so on.
    """
    mats = [_qcp_matrix(p) for p in pis]
    if not mats:
        raise DimensionMismatchError("need at least one conditional operator")
    d = mats[0][1]
    if any(dk != d for _, dk in mats):
        raise DimensionMismatchError("conditional operators must share one factor size")
    cur = mats[-1][0]
    n_factors = 2
    for m, _ in mats[-2::-1]:
        s = np.kron(np.eye(d ** (n_factors - 1)), herm_sqrt(m, tol))
        cur = s @ np.kron(cur, np.eye(d)) @ s
        n_factors += 1
    return FactoredOperator(cur, (d,) * n_factors)


def n_nonlinear_lift(pi, rho, parties: int, tol: float = DEFAULT_TOL) -> FactoredOperator:
    """N-party sandwich lifting from one conditional operator.

    Chains parties-1 copies of pi and sandwiches with sqrt(rho) on the
    rightmost slot. parties = 2 reduces to :func:`nonlinear_lift`; with the
    diagonal operator of a classical conditional matrix and diagonal rho it
    reproduces the Markov-chain state.
    """
    if parties < 2:
        raise DimensionMismatchError(f"parties must be at least 2, got {parties}")
    m, d = _qcp_matrix(pi)
    state = check_state(rho, tol)
    if state.matrix.shape[0] != d:
        raise DimensionMismatchError(f"state side {state.matrix.shape[0]} != conditional side {d}")
    chain = n_compose_qcp([pi] * (parties - 1), tol)
    s = np.kron(np.eye(d ** (parties - 1)), herm_sqrt(state.matrix, tol))
    return FactoredOperator(s @ chain.matrix @ s, (d,) * parties)


def channel_from_compound(theta: FactoredOperator, rho, tol: float = DEFAULT_TOL) -> CpMap:
    """Recover the unital CP map of a compound state with faithful marginal.

    Requires theta PSD with blocks B_ij = theta[(i, :), (j, :)] and
    first-slot partial trace equal to rho, and rho strictly positive. The
    recovered map is Lambda(e_ij) = rho^{-1/2} B_ij rho^{-1/2}, so the
    sandwich lifting of rho through it rebuilds theta.
    """
    if not isinstance(theta, FactoredOperator) or theta.n_factors != 2 or theta.dims[0] != theta.dims[1]:
        raise DimensionMismatchError("compound state must be a FactoredOperator with dims (d, d)")
    d = theta.dims[0]
    rm = np.asarray(getattr(rho, "matrix", rho), dtype=complex)
    if rm.shape != (d, d):
        raise DimensionMismatchError(f"marginal shape {rm.shape}, expected {(d, d)}")
    w, v = np.linalg.eigh(0.5 * (rm + rm.conj().T))
    if w[0] <= tol:
        raise NotFaithfulError(f"marginal has eigenvalue {w[0]:.3e}; need strict positivity")
    ok, lo = is_psd(theta.matrix, tol)
    if not ok:
        raise NotCompatibleError(f"compound state has eigenvalue {lo:.3e}; blocks admit no CP map")
    marg = partial_trace(theta, keep={1}).matrix
    if not np.allclose(marg, rm, atol=max(tol, 1e-10)):
        raise NotCompatibleError("first-slot partial trace of the compound state differs from the marginal")
    inv_s = (v / np.sqrt(w)) @ v.conj().T
    blocks = theta.matrix.reshape(d, d, d, d).transpose(0, 2, 1, 3)
    units = np.einsum("ab,ijbc,cd->ijad", inv_s, blocks, inv_s)
    return CpMap(units)


def robertson_map(x) -> np.ndarray:
    """Positive unital map on 4x4 matrices acting blockwise.

    With X partitioned into 2x2 blocks X11, X12, X21, X22 the image is
    1/2 [[I tr X22, X12 + R(X21)], [X21 + R(X12), I tr X11]] where
    R(Y) = I tr Y - Y.
    """
    xm = np.asarray(x, dtype=complex)
    if xm.shape != (4, 4):
        raise DimensionMismatchError(f"input shape {xm.shape}, expected (4, 4)")
    x11, x12 = xm[:2, :2], xm[:2, 2:]
    x21, x22 = xm[2:, :2], xm[2:, 2:]
    eye2 = np.eye(2)

    def refl(y):
        return eye2 * np.trace(y) - y

    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = eye2 * np.trace(x22)
    out[:2, 2:] = x12 + refl(x21)
    out[2:, :2] = x21 + refl(x12)
    out[2:, 2:] = eye2 * np.trace(x11)
    return 0.5 * out


def lifting_assisted_map(psi: Callable[[np.ndarray], np.ndarray], omega, tol: float = DEFAULT_TOL):
    """Reduce a map on the product space to a map on the system alone.

    Given psi acting on (d * d_omega)-dimensional matrices and an ancilla
    state omega, returns phi with phi(rho) = trace-out-last-slot of
    psi(rho x omega); the system rides the leftmost slot. psi = identity
    gives phi = identity.
    """
    om = check_state(omega, tol).matrix
    dw = om.shape[0]

    def phi(rho: np.ndarray) -> np.ndarray:
        rm = np.asarray(rho, dtype=complex)
        d = rm.shape[0]
        out = np.asarray(psi(np.kron(rm, om)), dtype=complex)
        if out.shape != (d * dw, d * dw):
            raise DimensionMismatchError(f"psi returned shape {out.shape}, expected {(d * dw, d * dw)}")
        joint = FactoredOperator(out, (d, dw))
        return partial_trace(joint, keep={2}).matrix

    return phi


def choi_matrix(phi: Callable[[np.ndarray], np.ndarray], d: int) -> FactoredOperator:
    """Normalized Choi matrix (1/d) sum_ij e_ij x phi(e_ij)."""
    side = d * d
    out = np.zeros((side, side), dtype=complex)
    for i in range(d):
        for j in range(d):
            out += np.kron(unit_matrix(d, i, j), np.asarray(phi(unit_matrix(d, i, j)), dtype=complex))
    return FactoredOperator(out / d, (d, d))
