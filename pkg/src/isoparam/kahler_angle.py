"""Real subspaces of a complex Hermitian vector space.

A real k-dimensional subspace W of C^m is stored through an orthonormal
real basis in R^(2m), with complex coordinate j occupying the adjacent
slots (2j, 2j+1) as (re, im).  The complex structure J acts on each pair
as (re, im) -> (-im, re).

For xi in W the orthogonal split J xi = F xi + P xi (F into W, P into the
complement) defines the Kahler angle of xi.  Diagonalizing the symmetric
form (xi, eta) -> <F xi, F eta> on W produces the principal Kahler angles,
the complete invariant of W under the unitary group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, VectorNotInSubspace

ANGLE_TOL = 1e-7  # clustering tolerance for angles, radians
BASIS_TOL = 1e-10


def complex_structure(m: int) -> np.ndarray:
    """Matrix of J on R^(2m) in interleaved (re, im) coordinates."""
    J = np.zeros((2 * m, 2 * m))
    for j in range(m):
        J[2 * j, 2 * j + 1] = -1.0
        J[2 * j + 1, 2 * j] = 1.0
    return J


def _orth_rows(V: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal row basis of the row span; absolute singular value cut
    (inputs are unit scale)."""
    V = np.atleast_2d(np.asarray(V, dtype=float))
    if V.shape[0] == 0:
        return V
    q, s, _ = np.linalg.svd(V.T, full_matrices=False)
    rank = int((s > tol).sum())
    return q[:, :rank].T


def _complement_rows(rows: np.ndarray, dim: int) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of orthonormal rows."""
    if rows.shape[0] == 0:
        return np.eye(dim)
    if rows.shape[0] == dim:
        return np.zeros((0, dim))
    _, _, vt = np.linalg.svd(rows, full_matrices=True)
    return vt[rows.shape[0]:]


@dataclass(frozen=True)
class RealSubspace:
    """A real subspace of C^m with an orthonormal basis as rows (k x 2m)."""

    ambient_cdim: int
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=float)
        if basis.ndim == 1:
            basis = basis.reshape(1, -1)
        if basis.size == 0:
            basis = basis.reshape(0, 2 * self.ambient_cdim)
        if basis.shape[1] != 2 * self.ambient_cdim:
            raise DimensionMismatch(
                f"basis vectors have length {basis.shape[1]}, expected {2 * self.ambient_cdim}"
            )
        if basis.shape[0] > 2 * self.ambient_cdim:
            raise DimensionMismatch("more basis vectors than ambient dimensions")
        k = basis.shape[0]
        if k and np.abs(basis @ basis.T - np.eye(k)).max() > BASIS_TOL:
            raise ValueError("basis rows are not orthonormal")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def project(self, v: np.ndarray) -> np.ndarray:
        """Orthogonal projection onto the subspace."""
        return self.basis.T @ (self.basis @ v)

    def contains(self, v: np.ndarray, tol: float = BASIS_TOL) -> bool:
        v = np.asarray(v, dtype=float)
        return bool(np.linalg.norm(v - self.project(v)) <= tol * max(1.0, np.linalg.norm(v)))

    def to_json(self) -> str:
        return json.dumps(
            {"ambient_cdim": self.ambient_cdim, "basis": self.basis.tolist()}
        )

    @staticmethod
    def from_json(text: str) -> "RealSubspace":
        data = json.loads(text)
        return RealSubspace(int(data["ambient_cdim"]), np.asarray(data["basis"], dtype=float))


@dataclass(frozen=True)
class KahlerProfile:
    """Principal Kahler angles with multiplicities, descending by angle."""

    entries: tuple[tuple[float, int], ...]

    def __post_init__(self):
        ents = tuple(sorted(((float(a), int(m)) for a, m in self.entries), reverse=True))
        if any(m <= 0 for _, m in ents):
            raise ValueError("multiplicities must be positive")
        if any(a < -ANGLE_TOL or a > np.pi / 2 + ANGLE_TOL for a, _ in ents):
            raise ValueError("angles must lie in [0, pi/2]")
        # angles below pi/2 only occur with even multiplicity
        if any(m % 2 and a < np.pi / 2 - ANGLE_TOL for a, m in ents):
            raise ValueError("odd multiplicity is only possible at angle pi/2")
        object.__setattr__(self, "entries", ents)

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.entries)

    def matches(self, other: "KahlerProfile", angle_tol: float = ANGLE_TOL) -> bool:
        """Equality of profiles: same multiplicities, angles within angle_tol."""
        if len(self.entries) != len(other.entries):
            return False
        return all(
            ms == mo and abs(a_s - a_o) <= angle_tol
            for (a_s, ms), (a_o, mo) in zip(self.entries, other.entries)
        )

    def nonzero_entries(self, angle_tol: float = ANGLE_TOL) -> tuple[tuple[float, int], ...]:
        return tuple((a, m) for a, m in self.entries if a > angle_tol)


def _angle_from_sq(cos_sq: float) -> float:
    return float(np.arccos(np.sqrt(min(1.0, max(0.0, cos_sq)))))


def pf_split(W: RealSubspace, xi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split J xi = F + P with F in W and P orthogonal to W.

    |F| = cos(phi) |xi| and |P| = sin(phi) |xi| for the Kahler angle phi
    of xi with respect to W.  Raises VectorNotInSubspace when xi is not
    in W within tolerance.
    """
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (2 * W.ambient_cdim,):
        raise DimensionMismatch("vector length does not match the ambient space")
    if not W.contains(xi):
        raise VectorNotInSubspace("xi does not lie in the subspace")
    jxi = complex_structure(W.ambient_cdim) @ xi
    F = W.project(jxi)
    return F, jxi - F


def kahler_profile(W: RealSubspace, angle_tol: float = ANGLE_TOL):
    """Principal Kahler angles, vectors, and constant-angle decomposition.

    Returns (profile, principal_vectors, decomposition): principal_vectors
    is an orthonormal basis of W (rows) diagonalizing <F xi, F eta>, and
    decomposition lists (angle, sub-basis) blocks of constant angle.
    """
    k = W.dim
    if k == 0:
        return KahlerProfile(()), np.zeros((0, 2 * W.ambient_cdim)), []
    J = complex_structure(W.ambient_cdim)
    B = W.basis
    # K[i, j] = <b_i, J b_j>, skew; the form <F xi, F eta> is K^T K = -K^2
    K = B @ J.T @ B.T
    M = K.T @ K
    M = 0.5 * (M + M.T)
    evals, evecs = np.linalg.eigh(M)  # ascending: angles descending
    vectors = (B.T @ evecs).T
    angles = [_angle_from_sq(ev) for ev in evals]
    # group indices by angle
    groups: list[list[int]] = []
    for i, ang in enumerate(angles):
        if groups and abs(ang - angles[groups[-1][0]]) <= angle_tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    entries = []
    decomposition = []
    for g in groups:
        ang = float(np.mean([angles[i] for i in g]))
        if abs(ang) <= angle_tol:
            ang = 0.0
        if abs(ang - np.pi / 2) <= angle_tol:
            ang = float(np.pi / 2)
        entries.append((ang, len(g)))
        decomposition.append((ang, vectors[g]))
    return KahlerProfile(tuple(entries)), vectors, decomposition


def congruence_invariant(w: RealSubspace) -> KahlerProfile:
    """The complete invariant of w under the unitary group: its profile.

    Two subspaces are congruent by a unitary transformation exactly when
    their canonical profiles match.
    """
    profile, _, _ = kahler_profile(w)
    return profile


def congruent(w1: RealSubspace, w2: RealSubspace, angle_tol: float = ANGLE_TOL) -> bool:
    """Whether two subspaces are unitarily congruent."""
    if w1.ambient_cdim != w2.ambient_cdim:
        return False
    return congruence_invariant(w1).matches(congruence_invariant(w2), angle_tol)


def has_constant_angle(W: RealSubspace, tol: float = ANGLE_TOL) -> Optional[float]:
    """The common Kahler angle when the profile has a single entry, else None."""
    if W.dim == 0:
        return None
    profile, _, _ = kahler_profile(W, angle_tol=tol)
    if len(profile.entries) == 1:
        return profile.entries[0][0]
    return None


def random_subspace(m: int, k: int, seed: int) -> RealSubspace:
    """A uniformly random k-plane in C^m: orthonormalized Gaussian vectors.

    Deterministic in the seed.
    """
    if not 0 <= k <= 2 * m:
        raise DimensionMismatch(f"k={k} outside [0, {2 * m}]")
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((2 * m, k))
    q, _ = np.linalg.qr(A)
    return RealSubspace(m, q[:, :k].T)


def complement(W: RealSubspace) -> RealSubspace:
    """The orthogonal complement of W in C^m.

    Its profile shares every nonzero angle of W's profile with equal
    multiplicity; only the complex (angle zero) parts may differ.
    """
    return RealSubspace(W.ambient_cdim, _complement_rows(W.basis, 2 * W.ambient_cdim))


def unitary_conjugate(W: RealSubspace, seed: int) -> RealSubspace:
    """Image of W under a Haar-random unitary transformation of C^m."""
    m = W.ambient_cdim
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    Q, R = np.linalg.qr(Z)
    Q = Q * (np.diagonal(R) / np.abs(np.diagonal(R)))
    # real 2m x 2m matrix of the unitary in interleaved coordinates
    U = np.zeros((2 * m, 2 * m))
    U[0::2, 0::2] = Q.real
    U[0::2, 1::2] = -Q.imag
    U[1::2, 0::2] = Q.imag
    U[1::2, 1::2] = Q.real
    new_basis = W.basis @ U.T
    return RealSubspace(m, _orth_rows(new_basis))


def subspace_from_blocks(m: int, blocks: list[tuple[float, int]]) -> RealSubspace:
    """A subspace of C^m realizing the given (angle, multiplicity) blocks.

    Each angle-0 block of dimension 2d spans d complex coordinates; a
    pi/2 block of dimension p spans p; an intermediate-angle block of
    dimension 2d spans 2d.  Raises DimensionMismatch when the blocks do
    not fit in C^m.
    """
    rows = []
    next_coord = 0

    def unit(c: int, imag: bool) -> np.ndarray:
        v = np.zeros(2 * m)
        v[2 * c + (1 if imag else 0)] = 1.0
        return v

    for angle, mult in blocks:
        if abs(angle) <= ANGLE_TOL:
            if mult % 2:
                raise ValueError("angle-0 blocks must have even dimension")
            for _ in range(mult // 2):
                rows.append(unit(next_coord, False))
                rows.append(unit(next_coord, True))
                next_coord += 1
        elif abs(angle - np.pi / 2) <= ANGLE_TOL:
            for _ in range(mult):
                rows.append(unit(next_coord, False))
                next_coord += 1
        else:
            if mult % 2:
                raise ValueError("intermediate-angle blocks must have even dimension")
            for _ in range(mult // 2):
                a, b = next_coord, next_coord + 1
                rows.append(unit(a, False))
                rows.append(np.cos(angle) * unit(a, True) + np.sin(angle) * unit(b, True))
                next_coord += 2
    if next_coord > m:
        raise DimensionMismatch(
            f"blocks span {next_coord} complex dimensions, ambient has {m}"
        )
    basis = np.array(rows) if rows else np.zeros((0, 2 * m))
    return RealSubspace(m, basis)
