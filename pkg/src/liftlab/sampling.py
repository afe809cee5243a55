"""Seeded random draws used by the verification suites and tests.

Everything funnels through numpy's default generator (PCG64), so a fixed
seed reproduces the same objects on any platform. States are squared
Gaussians on the diagonal, conjugated by Haar unitaries obtained from the
QR decomposition of complex Gaussian matrices.
"""
from __future__ import annotations

import numpy as np

from .circulant import CirculantSpec
from .clift import MarkovSpec, as_lifting_tensor
from .qlift import CpMap, cp_from_kraus


def rng(seed=None) -> np.random.Generator:
    """Fresh generator; pass an integer for a reproducible stream."""
    return np.random.default_rng(seed)


def probability_vector(g: np.random.Generator, n: int) -> np.ndarray:
    v = np.square(g.standard_normal(n))
    return v / v.sum()


def stochastic(g: np.random.Generator, n_in: int, n_out: int) -> np.ndarray:
    """Weight matrix with unit row sums (trace preserving on states)."""
    return np.stack([probability_vector(g, n_out) for _ in range(n_in)])


def permutation(g: np.random.Generator, n: int) -> np.ndarray:
    return g.permutation(n)


def diagonal_observable(g: np.random.Generator, n: int) -> np.ndarray:
    return g.uniform(-1.0, 1.0, n)


def unitary(g: np.random.Generator, d: int) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition with the phase
    convention that makes R's diagonal positive."""
    z = g.standard_normal((d, d)) + 1j * g.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def density(g: np.random.Generator, d: int) -> np.ndarray:
    """Random state: random spectrum conjugated by a Haar unitary."""
    w = probability_vector(g, d)
    u = unitary(g, d)
    return (u * w) @ u.conj().T


def faithful_density(g: np.random.Generator, d: int, floor: float = 0.05) -> np.ndarray:
    """Full-rank state: a random state mixed with the flat one."""
    return (1.0 - floor) * density(g, d) + floor * np.eye(d) / d


def unital_cpmap(g: np.random.Generator, d: int, terms: int | None = None) -> CpMap:
    """Unital completely positive map from a random isometry.

    Stacks the isometry's d x d blocks B_m and uses K_m = B_m^dagger, so
    sum K_m K_m^dagger = V^dagger V = I and the map fixes the identity.
    """
    k = terms if terms is not None else d
    z = g.standard_normal((k * d, d)) + 1j * g.standard_normal((k * d, d))
    q, _ = np.linalg.qr(z)
    blocks = q.reshape(k, d, d)
    return cp_from_kraus([b.conj().T for b in blocks])


def lifting_tensor(g: np.random.Generator, n1: int, n2: int) -> np.ndarray:
    slices = [probability_vector(g, n2 * n1).reshape(n2, n1) for _ in range(n1)]
    return as_lifting_tensor(np.stack(slices))


def markov_spec(g: np.random.Generator, n: int) -> MarkovSpec:
    return MarkovSpec(stochastic(g, n, n).T, probability_vector(g, n))


def circulant_spec(g: np.random.Generator, d: int) -> CirculantSpec:
    """Random circulant state; blocks are blended toward their diagonals by
    a random amount so both verdicts of the partial-transpose test occur."""
    weights = probability_vector(g, d)
    mix = g.uniform(0.0, 1.0)
    blocks = []
    for alpha in range(d):
        z = g.standard_normal((d, d)) + 1j * g.standard_normal((d, d))
        b = z @ z.conj().T
        b = (1.0 - mix) * b + mix * np.diag(np.diag(b).real)
        b /= np.trace(b).real
        blocks.append(weights[alpha] * b)
    return CirculantSpec(np.array(blocks))
