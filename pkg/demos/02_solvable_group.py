"""The solvable group model of complex hyperbolic space.

CH^n is isometric to a solvable Lie group AN with a left-invariant metric:
one hyperbolic direction B, a complex Heisenberg part g_alpha = C^(n-1),
and the center direction Z = JB.  Everything geometric (connection,
curvature, geodesics, horocycles) becomes bilinear algebra in the Lie
algebra, and the ruled minimal submanifolds W_w are group orbits.
"""

import numpy as np

from isoparam import (
    ANPoint,
    ANVector,
    an_J,
    an_inner,
    an_norm,
    bracket,
    build_w,
    contains_point,
    curvature_tensor,
    group_product,
    horocycle_point,
    levi_civita,
    random_subspace,
    second_fundamental_form,
    shape_operator,
)

c = -4.0  # sqrt(-c) = 2
n = 3
B = ANVector(1.0, np.zeros(n - 1, complex), 0.0, c)
Z = ANVector(0.0, np.zeros(n - 1, complex), 1.0, c)
U = ANVector(0.0, np.array([1.0, 0.0], complex), 0.0, c)

print("Structure constants at c = -4 (so sqrt(-c) = 2):")
print(f"  [B, Z]   = {bracket(B, Z).x:.0f} Z")
print(f"  [B, U]   = {an_norm(bracket(B, U)):.0f} U  (the 1/2 root)")
print(f"  [U, JU]  = {bracket(U, an_J(U)).x:.0f} Z  (Heisenberg core)")

print("\nConnection and curvature close up exactly:")
rng = np.random.default_rng(0)
X, Y, W = (
    ANVector(rng.standard_normal(), rng.standard_normal(2) + 1j * rng.standard_normal(2), rng.standard_normal(), c)
    for _ in range(3)
)
torsion = levi_civita(X, Y) - levi_civita(Y, X) - bracket(X, Y)
R_alg = curvature_tensor(X, Y, W)
R_conn = levi_civita(X, levi_civita(Y, W)) - levi_civita(Y, levi_civita(X, W)) - levi_civita(bracket(X, Y), W)
print(f"  |torsion|                  = {an_norm(torsion):.2e}")
print(f"  |R_formula - R_connection| = {an_norm(R_alg - R_conn):.2e}")
Xu = (1 / an_norm(X)) * X
print(f"  holomorphic sectional curvature <R(X,JX)JX,X> = {an_inner(curvature_tensor(Xu, an_J(Xu), an_J(Xu)), Xu):.6f}")

print("\nThe group product in exponential coordinates:")
g = ANPoint(ANVector(0.0, np.array([1.0, 0.0], complex), 0.0, c))
h = ANPoint(ANVector(0.0, np.array([1.0j, 0.0], complex), 0.0, c))
gh = group_product(g, h)
print(f"  Exp(e1) . Exp(i e1) = Exp({gh.coords.a:.0f} B + {gh.coords.U[0]} e1 + {gh.coords.x:.0f} Z)")
print("  (the Z component records the symplectic pairing of the Heisenberg factors)")

print("\nA ruled minimal submanifold W_w and its tube data:")
w = random_subspace(n - 1, 1, seed=5)  # a real line in C^2: w_perp is 3-dim
W_w = build_w(w, n, c)
print(f"  dim W_w = {W_w.tangent_dim}, codim k = {W_w.k}")
xi = W_w.normal_frame()[0]
A = shape_operator(W_w, xi)
print(f"  shape operator trace (minimality, exact): {np.trace(A)}")
print("  second fundamental form couples only Z with P(w_perp):")
print(f"    |II(B, Z)| = {an_norm(second_fundamental_form(W_w, B, Z)):.1f}")

print("\nW_w is swept out by horocycles tangent to w:")
Uw = ANVector(0.0, w.basis[0][0::2] + 1j * w.basis[0][1::2], 0.0, c)
p = ANPoint.origin(n, c)
inside = []
for t in (0.6, -1.1, 1.7):
    p = horocycle_point(p, Uw, t)
    inside.append(contains_point(p, W_w, 1e-9))
print(f"  successive horocycle points stay in W_w: {inside}")
