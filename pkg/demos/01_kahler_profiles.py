"""Kahler angles of real subspaces of C^m.

A real subspace W of C^m meets the complex structure J at an angle: for
each unit xi in W, J xi splits into a component inside W and one outside,
and the angle phi_xi between J xi and W measures how far xi is from
spanning a complex direction.  Diagonalizing this data gives the principal
Kahler angles, a complete invariant under the unitary group.
"""

import numpy as np

from isoparam import (
    complement,
    congruence_invariant,
    congruent,
    kahler_profile,
    pf_split,
    random_subspace,
    subspace_from_blocks,
    unitary_conjugate,
)


def show(label, profile):
    entries = ", ".join(f"(phi={a:.4f}, mult={m})" for a, m in profile.entries)
    print(f"  {label:38s} {{{entries}}}")


print("Three landmark subspaces of C^2:")
complex_line = subspace_from_blocks(2, [(0.0, 2)])
totally_real = subspace_from_blocks(2, [(np.pi / 2, 2)])
slanted = subspace_from_blocks(2, [(np.pi / 3, 2)])
show("a complex line (angle 0)", congruence_invariant(complex_line))
show("a totally real plane (angle pi/2)", congruence_invariant(totally_real))
show("a constant-angle pi/3 plane", congruence_invariant(slanted))

print("\nThe P/F split of J xi for the pi/3 plane:")
xi = slanted.basis[0]
F, P = pf_split(slanted, xi)
print(f"  |F xi| = {np.linalg.norm(F):.6f} = cos(pi/3)")
print(f"  |P xi| = {np.linalg.norm(P):.6f} = sin(pi/3)")

print("\nUnitary congruence is detected by the profile alone:")
W = random_subspace(4, 5, seed=7)
image = unitary_conjugate(W, seed=8)
other = random_subspace(4, 5, seed=9)
print(f"  W  vs U(W):     congruent = {congruent(W, image)}")
print(f"  W  vs random:   congruent = {congruent(W, other)}")
show("profile of W", congruence_invariant(W))
show("profile of U(W)", congruence_invariant(image))

print("\nA subspace and its complement share all nonzero angles:")
W = random_subspace(3, 3, seed=21)
show("profile of W", congruence_invariant(W))
show("profile of its complement", congruence_invariant(complement(W)))

print("\nEvery 3-dim subspace of C^2 looks the same:")
for seed in range(3):
    profile, _, _ = kahler_profile(random_subspace(2, 3, seed=seed))
    show(f"random 3-plane, seed {seed}", profile)
print("  (this rigidity is what makes the CH^3 story below so short)")
