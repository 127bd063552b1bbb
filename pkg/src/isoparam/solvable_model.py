"""The solvable group model of complex hyperbolic space.

CH^n of holomorphic sectional curvature c < 0 is realized as the solvable
part AN of the Iwasawa decomposition of its isometry group, acting simply
transitively.  Its Lie algebra is a + g_alpha + g_2alpha with

    a = R B,   g_alpha = C^(n-1),   g_2alpha = R Z,   Z = J B,

and all structure constants proportional to sqrt(-c).  An ANVector is an
element a B + U + x Z of the algebra; an ANPoint is the group element
Exp(a B + U + x Z) acting on the base point, stored in these canonical
exponential coordinates.

The ruled minimal submanifolds W_w are orbits of the subgroups with
Lie algebra a + w + g_2alpha for a proper real subspace w of g_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotNormal, NotTangent, WNotProper
from .kahler_angle import RealSubspace, _complement_rows, _orth_rows, complex_structure


@dataclass(frozen=True)
class ANVector:
    """a B + U + x Z with U in C^(n-1); c is the ambient curvature."""

    a: float
    U: np.ndarray
    x: float
    c: float = -4.0

    def __post_init__(self):
        U = np.atleast_1d(np.asarray(self.U, dtype=complex))
        if not np.isfinite(U).all() or not np.isfinite([self.a, self.x]).all():
            raise ValueError("non-finite entries")
        if self.c >= 0:
            raise ValueError("curvature c must be negative")
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "x", float(self.x))

    @property
    def n(self) -> int:
        return len(self.U) + 1

    def __add__(self, other: "ANVector") -> "ANVector":
        _check_compatible(self, other)
        return ANVector(self.a + other.a, self.U + other.U, self.x + other.x, self.c)

    def __sub__(self, other: "ANVector") -> "ANVector":
        _check_compatible(self, other)
        return ANVector(self.a - other.a, self.U - other.U, self.x - other.x, self.c)

    def __mul__(self, t: float) -> "ANVector":
        return ANVector(t * self.a, t * self.U, t * self.x, self.c)

    __rmul__ = __mul__

    def __neg__(self) -> "ANVector":
        return self * -1.0

    def flat(self) -> np.ndarray:
        """Coordinates [a, re u1, im u1, ..., x] in R^(2n)."""
        out = np.empty(2 * self.n)
        out[0] = self.a
        out[1:-1:2] = self.U.real
        out[2:-1:2] = self.U.imag
        out[-1] = self.x
        return out

    @staticmethod
    def from_flat(v: np.ndarray, c: float) -> "ANVector":
        v = np.asarray(v, dtype=float)
        U = v[1:-1:2] + 1j * v[2:-1:2]
        return ANVector(v[0], U, v[-1], c)

    @staticmethod
    def zero(n: int, c: float) -> "ANVector":
        return ANVector(0.0, np.zeros(n - 1, dtype=complex), 0.0, c)

    def to_record(self) -> dict:
        """JSON record {"a": ..., "U": [re, im, ...], "x": ...}."""
        return {
            "a": self.a,
            "U": [float(val) for z in self.U for val in (z.real, z.imag)],
            "x": self.x,
        }

    @staticmethod
    def from_record(record: dict, c: float) -> "ANVector":
        u = np.asarray(record["U"], dtype=float)
        return ANVector(float(record["a"]), u[0::2] + 1j * u[1::2], float(record["x"]), c)


def _check_compatible(X: ANVector, Y: ANVector):
    if X.n != Y.n:
        raise DimensionMismatch(f"vectors live in different algebras: n={X.n} vs n={Y.n}")
    if X.c != Y.c:
        raise DimensionMismatch(f"different curvatures: {X.c} vs {Y.c}")


def an_inner(X: ANVector, Y: ANVector) -> float:
    """Left-invariant Riemannian metric: B, Z unit, g_alpha standard."""
    _check_compatible(X, Y)
    return float(X.a * Y.a + np.real(np.vdot(Y.U, X.U)) + X.x * Y.x)


def an_J(X: ANVector) -> ANVector:
    """Complex structure: J B = Z, J Z = -B, J U = i U."""
    return ANVector(-X.x, 1j * X.U, X.a, X.c)


def an_norm(X: ANVector) -> float:
    return float(np.sqrt(an_inner(X, X)))


def bracket(X: ANVector, Y: ANVector) -> ANVector:
    """Lie bracket of a + g_alpha + g_2alpha.

    [B, Z] = sqrt(-c) Z, 2 [B, U] = sqrt(-c) U,
    [U, V] = sqrt(-c) <JU, V> Z, [Z, U] = 0.
    """
    _check_compatible(X, Y)
    sq = np.sqrt(-X.c)
    U_part = 0.5 * sq * (X.a * Y.U - Y.a * X.U)
    juv = np.real(np.vdot(Y.U, 1j * X.U))  # <J U_X, U_Y>
    x_part = sq * (X.a * Y.x - Y.a * X.x + juv)
    return ANVector(0.0, U_part, x_part, X.c)


def levi_civita(X: ANVector, Y: ANVector) -> ANVector:
    """Levi-Civita connection on left-invariant fields.

    nabla_{aB+U+xZ}(bB+V+yZ) = sqrt(-c) { (<U,V>/2 + x y) B
        - (b U + y J U + x J V)/2 + (<JU,V>/2 - b x) Z }.
    """
    _check_compatible(X, Y)
    sq = np.sqrt(-X.c)
    uv = np.real(np.vdot(Y.U, X.U))
    juv = np.real(np.vdot(Y.U, 1j * X.U))
    a_part = sq * (0.5 * uv + X.x * Y.x)
    U_part = -0.5 * sq * (Y.a * X.U + Y.x * (1j * X.U) + X.x * (1j * Y.U))
    x_part = sq * (0.5 * juv - Y.a * X.x)
    return ANVector(a_part, U_part, x_part, X.c)


def curvature_tensor(X: ANVector, Y: ANVector, Zv: ANVector) -> ANVector:
    """Curvature of CH^n:

    R(X,Y)Z = (c/4) ( <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY - 2<JX,Y>JZ ).
    """
    _check_compatible(X, Y)
    _check_compatible(X, Zv)
    JX, JY, JZ = an_J(X), an_J(Y), an_J(Zv)
    out = (
        an_inner(Y, Zv) * X
        - an_inner(X, Zv) * Y
        + an_inner(JY, Zv) * JX
        - an_inner(JX, Zv) * JY
        - 2.0 * an_inner(JX, Y) * JZ
    )
    return (X.c / 4.0) * out


def rho(s: float) -> float:
    """(e^s - 1)/s, with the removable singularity filled by Taylor series."""
    if abs(s) < 1e-3:
        # 6 terms: relative error below 1e-21 at |s| = 1e-3
        return 1.0 + s / 2 + s**2 / 6 + s**3 / 24 + s**4 / 120 + s**5 / 720
    return float(np.expm1(s) / s)


@dataclass(frozen=True)
class ANPoint:
    """A point of CH^n = AN in exponential coordinates: Exp(coords) . o."""

    coords: ANVector

    @property
    def n(self) -> int:
        return self.coords.n

    @property
    def c(self) -> float:
        return self.coords.c

    @staticmethod
    def origin(n: int, c: float) -> "ANPoint":
        return ANPoint(ANVector.zero(n, c))

    def inverse(self) -> "ANPoint":
        return ANPoint(-self.coords)


def group_product(g: ANPoint, h: ANPoint) -> ANPoint:
    """Product of AN in exponential coordinates.

    Exp(aB+U+xZ) Exp(bB+V+yZ) = Exp( (a+b) B
        + rho((a+b)/2)^-1 ( rho(a/2) U + e^(a/2) rho(b/2) V )
        + rho(a+b)^-1 ( rho(a) x + e^a rho(b) y
                        + e^(a/2) sqrt(-c) rho(a/2) rho(b/2) <JU,V> / 2 ) Z ).
    """
    X, Y = g.coords, h.coords
    _check_compatible(X, Y)
    a, b = X.a, Y.a
    sq = np.sqrt(-X.c)
    juv = np.real(np.vdot(Y.U, 1j * X.U))
    U_new = (rho(a / 2) * X.U + np.exp(a / 2) * rho(b / 2) * Y.U) / rho((a + b) / 2)
    x_new = (
        rho(a) * X.x
        + np.exp(a) * rho(b) * Y.x
        + 0.5 * np.exp(a / 2) * sq * rho(a / 2) * rho(b / 2) * juv
    ) / rho(a + b)
    return ANPoint(ANVector(a + b, U_new, x_new, X.c))


# ---------------------------------------------------------------------------
# the ruled minimal submanifolds W_w


@dataclass(frozen=True)
class SubmanifoldW:
    """The orbit W_w of the group with Lie algebra a + w + g_2alpha.

    w is a proper real subspace of g_alpha = C^(n-1).  Stored frames, all
    orthonormal rows in the interleaved coordinates of g_alpha:

        w_perp_basis   normal space, k = dim w_perp,
        p_perp_basis   P w_perp, the tangential images of J on w_perp,
        c_part_basis   g_alpha minus C w_perp (the g_alpha part of the
                       maximal complex subalgebra).

    The tangent space at the base point is spanned by B, Z, c_part and
    P w_perp; the normal space is w_perp.
    """

    n: int
    c: float
    w: RealSubspace
    w_perp_basis: np.ndarray
    p_perp_basis: np.ndarray
    c_part_basis: np.ndarray

    @property
    def k(self) -> int:
        return self.w_perp_basis.shape[0]

    @property
    def tangent_dim(self) -> int:
        return 2 * self.n - self.k

    def w_perp_subspace(self) -> RealSubspace:
        return RealSubspace(self.n - 1, self.w_perp_basis)

    def tangent_frame(self) -> list[ANVector]:
        """Orthonormal tangent frame at o: [B, Z, c_part..., P w_perp...]."""
        out = [
            ANVector(1.0, np.zeros(self.n - 1, dtype=complex), 0.0, self.c),
            ANVector(0.0, np.zeros(self.n - 1, dtype=complex), 1.0, self.c),
        ]
        for row in self.c_part_basis:
            out.append(ANVector(0.0, row[0::2] + 1j * row[1::2], 0.0, self.c))
        for row in self.p_perp_basis:
            out.append(ANVector(0.0, row[0::2] + 1j * row[1::2], 0.0, self.c))
        return out

    def normal_frame(self) -> list[ANVector]:
        return [
            ANVector(0.0, row[0::2] + 1j * row[1::2], 0.0, self.c)
            for row in self.w_perp_basis
        ]


def build_w(w: RealSubspace, n: int, c: float) -> SubmanifoldW:
    """Assemble the frames of W_w from a proper real subspace w of C^(n-1).

    Raises WNotProper when w is all of g_alpha.
    """
    if c >= 0:
        raise ValueError("curvature c must be negative")
    if w.ambient_cdim != n - 1:
        raise DimensionMismatch(f"w lives in C^{w.ambient_cdim}, expected C^{n - 1}")
    m = n - 1
    if w.dim == 2 * m:
        raise WNotProper("w must be a proper subspace of g_alpha")
    w_perp = _complement_rows(w.basis, 2 * m)
    J = complex_structure(m)
    p_cols = np.array([w.project(J @ row) for row in w_perp])
    p_perp = _orth_rows(p_cols) if p_cols.size else np.zeros((0, 2 * m))
    cw = _orth_rows(np.vstack([w_perp, (J @ w_perp.T).T]))
    c_part = _complement_rows(cw, 2 * m)
    return SubmanifoldW(n, c, w, w_perp, p_perp, c_part)


def _galpha_flat(X: ANVector) -> np.ndarray:
    """Interleaved real coordinates of the g_alpha component."""
    out = np.empty(2 * (X.n - 1))
    out[0::2] = X.U.real
    out[1::2] = X.U.imag
    return out


def _tangent_residual(Wspec: SubmanifoldW, X: ANVector) -> float:
    """Norm of the w_perp component of X (zero for tangent vectors)."""
    v = _galpha_flat(X)
    if Wspec.k == 0:
        return 0.0
    return float(np.linalg.norm(Wspec.w_perp_basis @ v))


def second_fundamental_form(
    Wspec: SubmanifoldW, X: ANVector, Y: ANVector, tol: float = 1e-9
) -> ANVector:
    """Second fundamental form of W_w at the base point.

    The only nonzero products pair the Z direction with P w_perp:
        2 II(Z, P xi) = -sqrt(-c) (J P xi)^perp,
    extended as a symmetric bilinear map vanishing on all other frame
    pairs.  Returns a normal vector; raises NotTangent for non-tangent
    arguments.
    """
    for V in (X, Y):
        if V.n != Wspec.n or V.c != Wspec.c:
            raise DimensionMismatch("vector does not match the submanifold data")
        if _tangent_residual(Wspec, V) > tol * max(1.0, an_norm(V)):
            raise NotTangent("argument is not tangent to W_w at o")
    m = Wspec.n - 1
    J = complex_structure(m)
    sq = np.sqrt(-Wspec.c)

    def p_component(V: ANVector) -> np.ndarray:
        v = _galpha_flat(V)
        if Wspec.p_perp_basis.shape[0] == 0:
            return np.zeros(2 * m)
        return Wspec.p_perp_basis.T @ (Wspec.p_perp_basis @ v)

    def normal_part(v: np.ndarray) -> np.ndarray:
        if Wspec.k == 0:
            return np.zeros(2 * m)
        return Wspec.w_perp_basis.T @ (Wspec.w_perp_basis @ v)

    out = -0.5 * sq * (
        X.x * normal_part(J @ p_component(Y)) + Y.x * normal_part(J @ p_component(X))
    )
    return ANVector(0.0, out[0::2] + 1j * out[1::2], 0.0, Wspec.c)


def shape_operator(Wspec: SubmanifoldW, xi: ANVector, tol: float = 1e-9) -> np.ndarray:
    """Matrix of the shape operator of W_w in the tangent_frame() basis.

    <A_xi X, Y> = <II(X, Y), xi>.  The diagonal vanishes identically in
    this frame, so the trace is exactly zero: W_w is minimal.
    """
    if xi.n != Wspec.n or xi.c != Wspec.c:
        raise DimensionMismatch("normal vector does not match the submanifold data")
    v = _galpha_flat(xi)
    if Wspec.k == 0 or np.linalg.norm(
        v - Wspec.w_perp_basis.T @ (Wspec.w_perp_basis @ v)
    ) > tol * max(1.0, an_norm(xi)) or abs(xi.a) > tol or abs(xi.x) > tol:
        raise NotNormal("xi is not normal to W_w at o")
    frame = Wspec.tangent_frame()
    d = len(frame)
    A = np.zeros((d, d))
    for i, Ei in enumerate(frame):
        for j in range(i + 1, d):
            val = an_inner(second_fundamental_form(Wspec, Ei, frame[j]), xi)
            A[i, j] = val
            A[j, i] = val
    return A


def fundamental_equation_residuals(
    Wspec: SubmanifoldW, samples: int = 10, seed: int = 0
) -> tuple[float, float, float]:
    """Max residuals of the Gauss, Codazzi and Ricci equations for W_w.

    All objects are evaluated on left-invariant fields at the base point:
    the intrinsic connection is the tangential part of the ambient one,
    the normal connection its normal part, and the second fundamental
    form enters through its defining Z/P-coupling.  For the ruled minimal
    submanifolds all three residuals vanish to rounding error.
    """
    rng = np.random.default_rng(seed)
    tang = Wspec.tangent_frame()
    norm = Wspec.normal_frame()
    zero = 0.0 * tang[0]

    def tan(V):
        return sum((an_inner(V, E) * E for E in tang), zero)

    def nor(V):
        return sum((an_inner(V, E) * E for E in norm), zero)

    def ii(X, Y):
        return second_fundamental_form(Wspec, X, Y)

    def nab(X, Y):
        return tan(levi_civita(X, Y))

    def nab_perp(X, xi):
        return nor(levi_civita(X, xi))

    def r_int(X, Y, Z):
        return nab(X, nab(Y, Z)) - nab(Y, nab(X, Z)) - nab(bracket(X, Y), Z)

    def r_perp(X, Y, xi):
        return (
            nab_perp(X, nab_perp(Y, xi))
            - nab_perp(Y, nab_perp(X, xi))
            - nab_perp(bracket(X, Y), xi)
        )

    def shape(xi, X):
        return sum((an_inner(ii(X, E), xi) * E for E in tang), zero)

    def d_ii(X, Y, Z):
        return nor(levi_civita(X, ii(Y, Z))) - ii(nab(X, Y), Z) - ii(Y, nab(X, Z))

    gauss = codazzi = ricci = 0.0
    for _ in range(samples):
        X, Y, Z, Wv = (
            sum((rng.standard_normal() * E for E in tang), zero) for _ in range(4)
        )
        xi, eta = (sum((rng.standard_normal() * E for E in norm), zero) for _ in range(2))
        lhs = an_inner(curvature_tensor(X, Y, Z), Wv)
        rhs = (
            an_inner(r_int(X, Y, Z), Wv)
            - an_inner(ii(Y, Z), ii(X, Wv))
            + an_inner(ii(X, Z), ii(Y, Wv))
        )
        gauss = max(gauss, abs(lhs - rhs))
        lhs = an_inner(curvature_tensor(X, Y, Z), xi)
        rhs = an_inner(d_ii(X, Y, Z) - d_ii(Y, X, Z), xi)
        codazzi = max(codazzi, abs(lhs - rhs))
        lhs = an_inner(r_perp(X, Y, xi), eta)
        rhs = an_inner(curvature_tensor(X, Y, xi), eta) + an_inner(
            shape(xi, shape(eta, X)) - shape(eta, shape(xi, X)), Y
        )
        ricci = max(ricci, abs(lhs - rhs))
    return gauss, codazzi, ricci


def horocycle_point(p: ANPoint, U: ANVector, t: float) -> ANPoint:
    """The point p . Exp(t U) on the horocycle through p tangent to U.

    U must be a unit vector of g_alpha; the integral curves of such
    left-invariant fields are horocycles of geodesic curvature
    sqrt(-c)/2 inside totally geodesic real hyperbolic planes.
    """
    if abs(U.a) > 1e-12 or abs(U.x) > 1e-12:
        raise ValueError("U must lie in g_alpha")
    if abs(an_norm(U) - 1.0) > 1e-10:
        raise ValueError("U must be a unit vector")
    _check_compatible(p.coords, U)
    return group_product(p, ANPoint(t * U))


def contains_point(p: ANPoint, Wspec: SubmanifoldW, tol: float = 1e-9) -> bool:
    """Membership of p in W_w: the coordinates have no w_perp component.

    W_w is the orbit of the simply connected solvable group S_w, so it is
    exactly Exp(a + w + g_2alpha) applied to the base point.
    """
    if p.n != Wspec.n or p.c != Wspec.c:
        raise DimensionMismatch("point does not match the submanifold data")
    return _tangent_residual(Wspec, p.coords) <= tol
