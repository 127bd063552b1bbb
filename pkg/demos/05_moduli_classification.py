"""The classification and its moduli space.

Isoparametric hypersurfaces in CH^n fall into six congruence cases.
Besides three exceptional families (horospheres, tubes around RH^n,
geodesic spheres), every family is the family of tubes around a ruled
minimal W_w, and congruence classes correspond exactly to Kahler-angle
profiles of w_perp.  Homogeneity, and constancy of the principal
curvatures, hold precisely when the profile is constant (a single angle).
"""

import numpy as np

from isoparam import (
    classify,
    complement,
    congruence_invariant,
    enumerate_profiles,
    random_subspace,
    subspace_from_blocks,
)


def show_report(label, rep):
    inv = rep.invariant
    if hasattr(inv, "entries"):
        inv = "{" + ", ".join(f"({a:.4f},{m})" for a, m in inv.entries) + "}"
    print(
        f"  {label:40s} case {rep.case:3s}  homogeneous={str(rep.homogeneous):5s} "
        f"cpc={str(rep.constant_principal_curvatures):5s}  invariant {inv}"
    )


print("Classifying representative inputs (n as stated, c = -4):")
show_report("horosphere", classify(3, family="horosphere"))
show_report("tube around RH^3", classify(3, family="tube-rhn", r=1.0))
show_report("geodesic spheres", classify(3, family="tube-chk", k=0, r=1.0))
show_report("tube around CH^1 in CH^3", classify(3, family="tube-chk", k=1, r=1.0))
show_report("hyperplane w (Lohnherr)", classify(3, w=random_subspace(2, 3, seed=1), r=0.0))
w_bb = complement(subspace_from_blocks(3, [(np.pi / 3, 2)]))
show_report("constant-angle pi/3, k=2, n=4", classify(4, w=w_bb, r=1.0))
show_report("a real line in C^2 (n=3)", classify(3, w=random_subspace(2, 1, seed=11), r=1.0))

print("\nModuli of tube families: maximal profile families for w_perp:")
for n, k in [(2, 1), (3, 2), (3, 3), (4, 3), (4, 4), (4, 5)]:
    fams = enumerate_profiles(n, k)
    shapes = []
    for fam in fams:
        parts = ", ".join(
            ("(free, %d)" % m) if a is None else f"({a:.4f}, {m})" for a, m in fam.entries
        )
        shapes.append("{" + parts + "}")
    print(f"  n={n}, k={k}:  {';  '.join(shapes)}")

print("\nThe CH^3 story: only one inhomogeneous congruence class exists.")
fams = enumerate_profiles(3, 3)
print(f"  admissible profiles for a 3-dim w_perp in C^2: {len(fams)}")
target = fams[0].at()
hits = 0
for seed in range(200):
    if congruence_invariant(random_subspace(2, 3, seed)).matches(target):
        hits += 1
print(f"  random 3-planes realizing it: {hits}/200")
rep = classify(3, w=random_subspace(2, 1, seed=3), r=1.0)
print(
    f"  its tubes: case ({rep.case}), homogeneous={rep.homogeneous}, "
    f"constant principal curvatures={rep.constant_principal_curvatures}"
)
