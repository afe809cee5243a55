"""Walk through classical channels: weights, Kraus form, dilations, teleportation.

Run with: python3 demos/classical_channels.py
"""
import itertools

import numpy as np

from liftlab import (
    apply_kraus,
    apply_to_state,
    channel_from_dilation,
    classical_choi,
    classical_teleport,
    is_doubly_stochastic,
    kraus_from_channel,
    partial_trace,
)

np.set_printoptions(precision=4, suppress=True)

print("=== A channel as a weight matrix ===")
w = np.array([[0.9, 0.1], [0.3, 0.7]])
p = np.array([0.5, 0.5])
print("weights L (row i holds the distribution of the next letter given i):")
print(w)
print("pushed state L^T p:", apply_to_state(w, p))

print()
print("=== The same channel through its operator decomposition ===")
ops = kraus_from_channel(w)
print(f"{len(ops)} operators K_ij = sqrt(L[i, j]) |f_j><e_i|; the first is")
print(ops[0])
rho = np.diag(p.astype(complex))
print("action on diag(p):", np.diag(apply_kraus(ops, rho)).real)

print()
print("=== Channels from a permutation on system x ancilla ===")
sigma = np.array([0.7, 0.3])
print("ancilla distribution sigma =", sigma)
for perm in ([0, 1, 2, 3], [0, 3, 2, 1], [1, 2, 3, 0], [0, 2, 1, 3]):
    lam = channel_from_dilation(perm, sigma)
    tag = "doubly stochastic" if is_doubly_stochastic(lam) else "NOT doubly stochastic"
    print(f"permutation {perm} -> rows {lam.tolist()}  ({tag})")
print("note the last one: a constant map, every input lands on sigma")

census = sum(
    is_doubly_stochastic(channel_from_dilation(list(s), sigma))
    for s in itertools.permutations(range(4))
)
print(f"census over all 24 permutations of the joint space: {census} doubly stochastic")

print()
print("=== The diagonal channel state of a unital channel ===")
u = np.array([[0.8, 0.2], [0.2, 0.8]])
state = classical_choi(u)
print("joint diagonal weights:", np.diag(state.matrix).real)
print("rightmost marginal (uniform):", np.diag(partial_trace(state, {1}).matrix).real)

print()
print("=== Teleporting a distribution through a correlated pair ===")
p = np.array([0.5, 0.3, 0.2])
s = np.array([1, 2, 0])
bob, corrected = classical_teleport(p, s)
print("Alice sends     ", p)
print("Bob receives    ", bob, "(the permuted vector)")
print("after correction", corrected)
