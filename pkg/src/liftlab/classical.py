"""Classical probability in matrix form: diagonal states and channels.

A probability vector p embeds as the diagonal density matrix sum_i p_i e_ii.
A channel between point sets Omega_1 (size n1) and Omega_2 (size n2) is a
nonnegative weight matrix L with L[i, j] read as the transition weight from
letter i to letter j. Both pictures act through the same contraction
b_j = sum_i a_i L[i, j]; on observables this is the Heisenberg map, on
probability vectors the state map. Column sums of 1 make the channel unital,
row sums of 1 make the state action trace preserving.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    NegativeEntryError,
    NotNormalizedError,
    NotUnitalError,
    SchemaError,
)
from .matcore import FactoredOperator

ATOL = 1e-12


def as_probability_vector(p, atol: float = ATOL) -> np.ndarray:
    """Validate and return a probability vector as a float array."""
    v = np.asarray(p, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatchError(f"probability vector must be 1-d and nonempty, got shape {v.shape}")
    if v.min(initial=0.0) < -atol:
        raise NegativeEntryError(f"probability vector has negative entry {v.min():.3e}")
    if abs(v.sum() - 1.0) > atol * max(1, v.size):
        raise NotNormalizedError(f"probability vector sums to {v.sum()!r}, not 1")
    return np.clip(v, 0.0, None)


def as_channel(weights, atol: float = ATOL) -> np.ndarray:
    """Validate a channel weight matrix: 2-d, real, nonnegative."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 2 or 0 in w.shape:
        raise DimensionMismatchError(f"channel weights must be a nonempty 2-d matrix, got shape {w.shape}")
    if w.min() < -atol:
        raise NegativeEntryError(f"channel weights have negative entry {w.min():.3e}")
    return np.clip(w, 0.0, None)


def as_permutation(perm) -> np.ndarray:
    """Validate a permutation given as the array of images of 0..n-1."""
    s = np.asarray(perm, dtype=int)
    if s.ndim != 1 or s.size == 0:
        raise SchemaError(f"permutation must be a nonempty 1-d array, got shape {s.shape}")
    if sorted(s.tolist()) != list(range(s.size)):
        raise SchemaError(f"images {s.tolist()} are not a permutation of 0..{s.size - 1}")
    return s


def permutation_inverse(perm) -> np.ndarray:
    s = as_permutation(perm)
    inv = np.empty_like(s)
    inv[s] = np.arange(s.size)
    return inv


def is_unital(weights, atol: float = ATOL) -> bool:
    """Columns sum to one (the identity observable is preserved)."""
    w = as_channel(weights)
    return bool(np.allclose(w.sum(axis=0), 1.0, atol=atol))


def is_stochastic(weights, atol: float = ATOL) -> bool:
    """Rows sum to one (the state action preserves total probability)."""
    w = as_channel(weights)
    return bool(np.allclose(w.sum(axis=1), 1.0, atol=atol))


def is_doubly_stochastic(weights, atol: float = ATOL) -> bool:
    return is_unital(weights, atol) and is_stochastic(weights, atol)


def embed_diagonal(p) -> FactoredOperator:
    """Embed a probability vector as a diagonal density operator."""
    v = as_probability_vector(p)
    return FactoredOperator(np.diag(v.astype(complex)), (v.size,))


def _contract(weights: np.ndarray, x: np.ndarray) -> np.ndarray:
    if x.shape[0] != weights.shape[0]:
        raise DimensionMismatchError(
            f"vector of length {x.shape[0]} does not match channel input size {weights.shape[0]}"
        )
    return weights.T @ x


def apply_to_observable(weights, a) -> np.ndarray:
    """Heisenberg action on a diagonal observable: b_j = sum_i a_i L[i, j]."""
    w = as_channel(weights)
    return _contract(w, np.asarray(a, dtype=float))


def apply_to_state(weights, p) -> np.ndarray:
    """State action on a probability vector: b_j = sum_i L[i, j] p_i."""
    w = as_channel(weights)
    return _contract(w, as_probability_vector(p))


def apply_channel(weights, p) -> np.ndarray:
    """Alias for the state action."""
    return apply_to_state(weights, p)


def kraus_from_channel(weights) -> list[np.ndarray]:
    """Kraus operators K_ij = sqrt(L[i, j]) |f_j><e_i| in (i, j) lex order.

    The principal nonnegative real root is used. The full n1*n2 list is
    returned, zero operators included, so ordering is stable.
    """
    w = as_channel(weights)
    n1, n2 = w.shape
    ops = []
    for i in range(n1):
        for j in range(n2):
            k = np.zeros((n2, n1), dtype=complex)
            k[j, i] = np.sqrt(w[i, j])
            ops.append(k)
    return ops


def apply_kraus(ops, rho) -> np.ndarray:
    """Evaluate sum_k K rho K^dagger."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((ops[0].shape[0], ops[0].shape[0]), dtype=complex)
    for k in ops:
        out += k @ rho @ k.conj().T
    return out


def permutation_channel(perm) -> np.ndarray:
    """Deterministic channel moving letter i to pi(i): L[i, j] = delta(j, pi(i))."""
    s = as_permutation(perm)
    w = np.zeros((s.size, s.size))
    w[np.arange(s.size), s] = 1.0
    return w


def channel_from_dilation(perm, sigma) -> np.ndarray:
    """Channel induced by a permutation of system-ancilla pairs.

    The pair (i, k) with system letter i and ancilla letter k is encoded as
    i*n + k. The permutation acts on the n^2 pair labels, the ancilla starts
    in distribution sigma, and the ancilla slot is traced out afterwards.
    Returns weights with L[i, j] = probability that letter i maps to j; the
    state action is always trace preserving, but not unital in general.
    """
    q = as_probability_vector(sigma)
    s = as_permutation(perm)
    n = q.size
    if s.size != n * n:
        raise DimensionMismatchError(f"permutation acts on {s.size} labels, expected n^2 = {n * n}")
    out = np.zeros((n, n))
    for j in range(n):
        for k in range(n):
            a, _ = divmod(int(s[j * n + k]), n)
            out[j, a] += q[k]
    return out


def max_correlated_state(perm) -> FactoredOperator:
    """Two-party diagonal state (1/n) sum_i e_ii x e_{pi(i) pi(i)}."""
    s = as_permutation(perm)
    n = s.size
    m = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        pos = i * n + int(s[i])
        m[pos, pos] = 1.0 / n
    return FactoredOperator(m, (n, n))


def classical_choi(weights, atol: float = ATOL) -> FactoredOperator:
    """Joint state sum_ij (L[i, j]/n2) e_ii x e_jj of a unital channel.

    Column j carries the conditional distribution of the input letter given
    output letter j, so the marginal on the second (rightmost) factor is
    uniform. Requires unitality.
    """
    w = as_channel(weights)
    if not is_unital(w, atol):
        raise NotUnitalError(f"columns sum to {w.sum(axis=0).tolist()}, expected all 1")
    n1, n2 = w.shape
    m = np.zeros((n1 * n2, n1 * n2), dtype=complex)
    for i in range(n1):
        for j in range(n2):
            pos = i * n2 + j
            m[pos, pos] = w[i, j] / n2
    return FactoredOperator(m, (n1, n2))


def classical_teleport(p, perm) -> tuple[np.ndarray, np.ndarray]:
    """Teleport p through the maximally correlated resource of a permutation.

    Projecting the first two slots of rho_A x P_pi onto the diagonal pair
    state and renormalizing leaves Bob with the permuted vector
    bob_i = p[pi^{-1}(i)]; undoing the permutation recovers p. Returns
    (bob, corrected).
    """
    v = as_probability_vector(p)
    s = as_permutation(perm)
    if s.size != v.size:
        raise DimensionMismatchError(f"permutation on {s.size} letters, state on {v.size}")
    inv = permutation_inverse(s)
    bob = v[inv]
    corrected = bob[s]
    return bob, corrected
