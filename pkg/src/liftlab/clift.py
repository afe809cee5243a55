"""Classical liftings: one state in, a joint diagonal state out.

A lifting tensor E over (Omega_1, Omega_2) has entries E[i, j, k] with i the
input letter, j the new-factor letter and k the retained letter; each input
slice sums to one. Lifting a probability vector p produces the two-factor
diagonal state with weights w[j, k] = sum_i E[i, j, k] p_i, new factor on
the left. Iterating the same tensor on the rightmost factor builds N-party
liftings; Markov chains arise from the tensors E[i, j, k] = p(j|i) delta_ik.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .classical import as_probability_vector
from .errors import (
    DimensionMismatchError,
    MapNotPositiveError,
    NegativeEntryError,
    NotNormalizedError,
)
from .matcore import FactoredOperator, is_psd

ATOL = 1e-12


def as_lifting_tensor(t, atol: float = ATOL) -> np.ndarray:
    """Validate a lifting tensor: shape (n1, n2, n1), nonnegative, each
    input slice summing to one."""
    e = np.asarray(t, dtype=float)
    if e.ndim != 3 or e.shape[0] != e.shape[2]:
        raise DimensionMismatchError(f"lifting tensor must have shape (n1, n2, n1), got {e.shape}")
    if e.min() < -atol:
        raise NegativeEntryError(f"lifting tensor has negative entry {e.min():.3e}")
    row = e.sum(axis=(1, 2))
    if not np.allclose(row, 1.0, atol=atol * max(1, e.shape[1] * e.shape[2])):
        raise NotNormalizedError(f"input slices sum to {row.tolist()}, expected all 1")
    return np.clip(e, 0.0, None)


def pure_tensor(images, n2: int | None = None) -> np.ndarray:
    """Deterministic lifting E[i, j, k] = delta(k, i) delta(j, images[i])."""
    s = np.asarray(images, dtype=int)
    n1 = s.size
    n2 = int(n2) if n2 is not None else int(s.max()) + 1
    e = np.zeros((n1, n2, n1))
    for i in range(n1):
        e[i, int(s[i]), i] = 1.0
    return e


def product_tensor(q, n1: int) -> np.ndarray:
    """Constant-output lifting E[i, j, k] = delta(k, i) q_j."""
    v = as_probability_vector(q)
    e = np.zeros((n1, v.size, n1))
    for i in range(n1):
        e[i, :, i] = v
    return e


def ohya_tensor(n: int) -> np.ndarray:
    """Perfect copy lifting E[i, j, k] = delta(k, i) delta(j, k)."""
    e = np.zeros((n, n, n))
    for i in range(n):
        e[i, i, i] = 1.0
    return e


def markov_tensor(conditional) -> np.ndarray:
    """Markovian lifting E[i, j, k] = p(j|i) delta(k, i) from a
    column-stochastic conditional matrix with entry [j, i] = p(j|i)."""
    c = np.asarray(conditional, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionMismatchError(f"conditional must be square, got {c.shape}")
    n = c.shape[0]
    e = np.zeros((n, n, n))
    for i in range(n):
        e[i, :, i] = c[:, i]
    return as_lifting_tensor(e)


def lift(t, p) -> FactoredOperator:
    """Apply a lifting tensor to a probability vector.

    Returns the diagonal two-factor state with weight w[j, k] at
    e_jj x e_kk, the new factor leftmost.
    """
    e = as_lifting_tensor(t)
    v = as_probability_vector(p)
    if v.size != e.shape[0]:
        raise DimensionMismatchError(f"state of length {v.size} does not match tensor input size {e.shape[0]}")
    w = np.einsum("ijk,i->jk", e, v)
    n2, n1 = w.shape
    return FactoredOperator(np.diag(w.reshape(-1).astype(complex)), (n2, n1))


def is_nondemolition(t, atol: float = ATOL) -> bool:
    """True when summing out the new factor returns the identity:
    sum_j E[i, j, k] = delta(i, k), so the retained marginal equals the
    input for every state."""
    e = as_lifting_tensor(t)
    return bool(np.allclose(e.sum(axis=1), np.eye(e.shape[0]), atol=atol * max(1, e.shape[1])))


def is_markovian_lifting(t, atol: float = ATOL) -> tuple[bool, np.ndarray | None]:
    """Detect the form E[i, j, k] = p(j|i) delta(k, i).

    Returns (True, conditional) with conditional[j, i] = p(j|i) when the
    tensor is Markovian, else (False, None).
    """
    e = as_lifting_tensor(t)
    n1 = e.shape[0]
    off = e.copy()
    off[np.arange(n1), :, np.arange(n1)] = 0.0
    if np.abs(off).max() > atol:
        return False, None
    cond = e[np.arange(n1), :, np.arange(n1)].T.copy()
    return True, cond


def gamma_lifting(gamma, sigma, p, atol: float = ATOL) -> FactoredOperator:
    """Lifting assisted by a channel on the joint diagonal algebra.

    Forms the product weights sigma x p (flat index j*n1 + k), pushes them
    through the joint channel in the state picture, and reshapes. The joint
    channel must be nonnegative with rows summing to one.
    """
    g = np.asarray(gamma, dtype=float)
    q = as_probability_vector(sigma)
    v = as_probability_vector(p)
    n2, n1 = q.size, v.size
    if g.shape != (n2 * n1, n2 * n1):
        raise DimensionMismatchError(f"joint channel shape {g.shape}, expected {(n2 * n1, n2 * n1)}")
    if g.min() < -atol:
        raise NegativeEntryError(f"joint channel has negative entry {g.min():.3e}")
    if not np.allclose(g.sum(axis=1), 1.0, atol=atol * max(1, g.shape[0])):
        raise NotNormalizedError("joint channel rows must sum to 1 (trace preservation)")
    w = g.T @ np.outer(q, v).reshape(-1)
    return FactoredOperator(np.diag(w.astype(complex)), (n2, n1))


def n_lift(t, p, parties: int) -> FactoredOperator:
    """Iterate a lifting tensor to an N-party diagonal state.

    Each stage re-lifts the rightmost (original) factor; new factors stack
    so that the earliest one ends up leftmost. parties counts the total
    number of output factors (parties - 1 applications).
    """
    if parties < 2:
        raise DimensionMismatchError(f"parties must be at least 2, got {parties}")
    e = as_lifting_tensor(t)
    w = as_probability_vector(p)
    if w.size != e.shape[0]:
        raise DimensionMismatchError(f"state of length {w.size} does not match tensor input size {e.shape[0]}")
    for _ in range(parties - 1):
        w = np.einsum("...i,ijk->...jk", w, e)
    dims = (e.shape[1],) * (parties - 1) + (e.shape[0],)
    return FactoredOperator(np.diag(w.reshape(-1).astype(complex)), dims)


@dataclass(frozen=True)
class MarkovSpec:
    """Homogeneous Markov chain data: conditional[j, i] = p(j|i) with unit
    column sums, plus the initial distribution."""

    conditional: np.ndarray
    initial: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.conditional, dtype=float)
        p0 = as_probability_vector(self.initial)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise DimensionMismatchError(f"conditional must be square, got shape {c.shape}")
        if c.shape[0] != p0.size:
            raise DimensionMismatchError(f"conditional side {c.shape[0]} != initial length {p0.size}")
        if c.min() < -ATOL:
            raise NegativeEntryError(f"conditional has negative entry {c.min():.3e}")
        if not np.allclose(c.sum(axis=0), 1.0, atol=ATOL * max(1, c.shape[0])):
            raise NotNormalizedError(f"conditional columns sum to {c.sum(axis=0).tolist()}, expected all 1")
        c = np.clip(c, 0.0, None)
        c.setflags(write=False)
        p0.setflags(write=False)
        object.__setattr__(self, "conditional", c)
        object.__setattr__(self, "initial", p0)

    @property
    def n(self) -> int:
        return self.initial.size


def markov_weights(spec: MarkovSpec, parties: int) -> np.ndarray:
    """Joint weights W[i_N, ..., i_1] = p(i_N|i_{N-1}) ... p(i_2|i_1) p(i_1)."""
    if parties < 1:
        raise DimensionMismatchError(f"parties must be at least 1, got {parties}")
    w = spec.initial.copy()
    for _ in range(parties - 1):
        w = np.einsum("ji,i...->ji...", spec.conditional, w)
    return w


def markov_state(spec: MarkovSpec, parties: int) -> FactoredOperator:
    """Diagonal N-party state of a Markov chain, latest index leftmost."""
    w = markov_weights(spec, parties)
    return FactoredOperator(np.diag(w.reshape(-1).astype(complex)), (spec.n,) * parties)


def markov_operator(spec: MarkovSpec, a) -> np.ndarray:
    """One-step Heisenberg operator P(a)_j = sum_i p(i|j) a_i."""
    v = np.asarray(a, dtype=float)
    if v.shape != (spec.n,):
        raise DimensionMismatchError(f"observable shape {v.shape}, expected ({spec.n},)")
    return spec.conditional.T @ v


def transition_expectation_sides(spec: MarkovSpec, observables) -> tuple[float, float]:
    """Both sides of the nested transition-expectation identity.

    observables lists the diagonal observables [a_1, ..., a_N] in chain
    order (a_1 acts on the rightmost slot). The left side contracts the
    full joint state; the right side nests X_N = a_N,
    X_k = P(X_{k+1}) * a_k and evaluates <initial, X_1>.
    """
    obs = [np.asarray(a, dtype=float) for a in observables]
    n_parties = len(obs)
    if n_parties < 1:
        raise DimensionMismatchError("need at least one observable")
    for a in obs:
        if a.shape != (spec.n,):
            raise DimensionMismatchError(f"observable shape {a.shape}, expected ({spec.n},)")
    w = markov_weights(spec, n_parties)
    lhs = w
    for a in obs[::-1]:
        lhs = np.tensordot(a, lhs, axes=(0, 0))
    x = obs[-1]
    for k in range(n_parties - 2, -1, -1):
        x = markov_operator(spec, x) * obs[k]
    rhs = float(spec.initial @ x)
    return float(lhs), rhs


def verify_transition_expectation(spec: MarkovSpec, parties: int, observables, atol: float = ATOL) -> bool:
    """Check the joint expectation against the nested one-step form."""
    obs = list(observables)
    if len(obs) != parties:
        raise DimensionMismatchError(f"{len(obs)} observables for {parties} parties")
    lhs, rhs = transition_expectation_sides(spec, obs)
    return abs(lhs - rhs) <= atol * max(1.0, abs(lhs), abs(rhs))


def separable_n_state(p, maps, atol: float = 1e-9) -> FactoredOperator:
    """Separable N-party state sum_i p_i phi_1(e_ii) x ... x phi_N(e_ii).

    Each map is given by its images on diagonal units: maps[k][i] is the
    matrix phi_{k+1}(e_ii), required PSD. maps[0] supplies the leftmost
    factor.
    """
    v = as_probability_vector(p)
    images = [np.asarray(m, dtype=complex) for m in maps]
    if not images:
        raise DimensionMismatchError("need at least one map")
    for mi, m in enumerate(images):
        if m.ndim != 3 or m.shape[0] != v.size or m.shape[1] != m.shape[2]:
            raise DimensionMismatchError(
                f"map {mi} images must have shape ({v.size}, d, d), got {m.shape}"
            )
        for i in range(v.size):
            ok, lo = is_psd(m[i], atol)
            if not ok:
                raise MapNotPositiveError(f"map {mi} sends unit {i} to eigenvalue {lo:.3e}")
    dims = tuple(m.shape[1] for m in images)
    side = int(np.prod(dims))
    out = np.zeros((side, side), dtype=complex)
    for i in range(v.size):
        term = np.ones((1, 1), dtype=complex)
        for m in images:
            term = np.kron(term, m[i])
        out += v[i] * term
    return FactoredOperator(out, dims)


def all_index_tuples(n: int, parties: int):
    """Iterate over index tuples (i_N, ..., i_1)."""
    return itertools.product(range(n), repeat=parties)
