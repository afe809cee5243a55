"""Walk through classical liftings: tensors, copying, Markov chains, separable states.

Run with: python3 demos/classical_liftings.py
"""
import numpy as np

from liftlab import (
    MarkovSpec,
    is_markovian_lifting,
    is_nondemolition,
    lift,
    markov_state,
    markov_tensor,
    n_lift,
    ohya_tensor,
    product_tensor,
    pure_tensor,
    separable_n_state,
    trace_out,
    transition_expectation_sides,
)

np.set_printoptions(precision=4, suppress=True)

print("=== Three basic lifting tensors on two letters ===")
p = np.array([0.6, 0.4])
for label, e in [
    ("product (attach a fixed sigma)", product_tensor([0.2, 0.8], 2)),
    ("copying (perfect clone)", ohya_tensor(2)),
    ("pure (deterministic image)", pure_tensor([1, 0])),
]:
    w = np.diag(lift(e, p).matrix).real
    flags = []
    if is_nondemolition(e):
        flags.append("non-demolition")
    markovian, cond = is_markovian_lifting(e)
    if markovian:
        flags.append("Markovian")
    print(f"{label}: joint weights {w}  [{', '.join(flags)}]")

print()
print("=== Iterating the copying tensor clones the input ===")
copies = n_lift(ohya_tensor(2), p, 4)
print("four-party weights live only on repeated strings:")
w = np.diag(copies.matrix).real
for flat, value in enumerate(w):
    if value > 0:
        digits = np.unravel_index(flat, (2, 2, 2, 2))
        print(f"  index {digits} -> {value:.4f}")
print("any single-party marginal:", np.diag(trace_out(copies, {1, 2, 3}).matrix).real)

print()
print("=== A Markov chain as repeated two-party lifting ===")
spec = MarkovSpec([[0.9, 0.2], [0.1, 0.8]], [0.6, 0.4])
chain = markov_state(spec, 3)
print("three-step joint weights:", np.diag(chain.matrix).real)
two_party = lift(markov_tensor(spec.conditional), spec.initial)
print("one lifting step reproduces the two-party chain:",
      np.allclose(np.diag(markov_state(spec, 2).matrix), np.diag(two_party.matrix)))

print()
print("=== The nested transition-expectation identity ===")
g = np.random.default_rng(0)
obs = [g.uniform(-1, 1, 2) for _ in range(3)]
lhs, rhs = transition_expectation_sides(spec, obs)
print(f"joint contraction {lhs:+.10f}")
print(f"nested one-step   {rhs:+.10f}")
print(f"difference        {abs(lhs - rhs):.2e}")

print()
print("=== Separable many-party states from positive images ===")
plus = np.full((2, 2), 0.5, dtype=complex)
minus = np.array([[0.5, -0.5], [-0.5, 0.5]], dtype=complex)
images = np.stack([plus, minus])
state = separable_n_state([0.5, 0.5], [images, images])
print("two-party mixture of |+><+| x |+><+| and |-><-| x |-><-|:")
print(state.matrix.real)
