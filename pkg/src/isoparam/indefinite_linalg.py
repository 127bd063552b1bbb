"""Linear algebra over Lorentzian scalar products.

Inner products of signature (1, m-1), self-adjointness tests, and the
classification of self-adjoint operators into the four Jordan canonical
shapes that can occur in Lorentzian signature:

    I   diagonalizable, orthonormal basis (first vector timelike),
    II  one 2x2 Jordan block (eigenvalue defect 1), semi-null basis,
    III one 3x3 Jordan block (eigenvalue defect 2), semi-null basis,
    IV  one complex-conjugate eigenvalue pair, orthonormal basis.

A semi-null basis {u, v, e_1, ...} has all inner products zero except
<u, v> = <e_i, e_i> = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, NondiagnosableOperator

DEFAULT_TOL = 1e-8
SELF_ADJOINT_TOL = 1e-10
BASIS_GRAM_TOL = 1e-9


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class ScalarProduct:
    """A nondegenerate symmetric bilinear form on R^dim, given by its Gram matrix."""

    dim: int
    gram: np.ndarray

    def __post_init__(self):
        gram = _as_matrix(self.gram)
        if gram.shape[0] != self.dim:
            raise DimensionMismatch("gram size does not match dim")
        scale = 1 + np.abs(gram).max()
        if not np.allclose(gram, gram.T, atol=1e-12 * scale):
            raise ValueError("gram matrix must be symmetric")
        if np.linalg.svd(gram, compute_uv=False)[-1] <= 1e-12 * scale:
            raise ValueError("gram matrix is degenerate")
        object.__setattr__(self, "gram", gram)

    @property
    def signature(self) -> tuple[int, int]:
        """(negative, positive) eigenvalue counts of the Gram matrix."""
        eigs = np.linalg.eigvalsh(self.gram)
        neg = int((eigs < 0).sum())
        return neg, self.dim - neg


class LorentzForm(ScalarProduct):
    """A scalar product of Lorentzian signature (1, dim-1)."""

    def __post_init__(self):
        super().__post_init__()
        neg, _ = self.signature
        if neg != 1:
            raise ValueError(
                f"expected signature (1, {self.dim - 1}), got {neg} negative directions"
            )


def euclidean_form(dim: int) -> ScalarProduct:
    """The standard positive-definite scalar product on R^dim."""
    return ScalarProduct(dim, np.eye(dim))


def minkowski_form(dim: int, negative_index: int = 0) -> LorentzForm:
    """diag(+1, ..., +1) with a single -1 at negative_index."""
    d = np.ones(dim)
    d[negative_index] = -1.0
    return LorentzForm(dim, np.diag(d))


def inner(form: ScalarProduct, x, y) -> float:
    """Evaluate the bilinear form: x^T gram y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (form.dim,) or y.shape != (form.dim,):
        raise DimensionMismatch("vector length does not match form.dim")
    return float(x @ form.gram @ y)


def is_self_adjoint(form: ScalarProduct, A, tol: float = SELF_ADJOINT_TOL) -> bool:
    """True iff gram@A is symmetric, relative to its own max norm.

    <Ax, y> = <x, Ay> for all x, y is equivalent to gram@A symmetric.
    """
    A = _as_matrix(A)
    if A.shape[0] != form.dim:
        raise DimensionMismatch("matrix size does not match form.dim")
    GA = form.gram @ A
    scale = np.abs(GA).max()
    if scale == 0.0:
        return True
    return bool(np.abs(GA - GA.T).max() <= tol * scale)


@dataclass(frozen=True)
class SelfAdjointOperator:
    """An operator self-adjoint with respect to a scalar product."""

    form: ScalarProduct
    matrix: np.ndarray
    tol: float = SELF_ADJOINT_TOL

    def __post_init__(self):
        mat = _as_matrix(self.matrix)
        if mat.shape[0] != self.form.dim:
            raise DimensionMismatch("matrix size does not match form.dim")
        if not is_self_adjoint(self.form, mat, self.tol):
            raise ValueError("matrix is not self-adjoint for the given form")
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.form.dim


@dataclass(frozen=True)
class JordanClassification:
    """Canonical data of a Lorentz-self-adjoint operator.

    real_eigs: (value, algebraic multiplicity, geometric multiplicity),
    sorted by value.  complex_pair: (a, b) with b > 0 when the type IV pair
    a +- ib is present.  epsilon: the +-1 entry of the type II block.
    adapted_basis: canonical basis as columns; the operator takes the shape
    of canonical_matrix() in it and the basis Gram equals canonical_gram().
    diag: eigenvalue of each diagonal basis column, in basis order, after
    the leading canonical block (all columns for type I).
    """

    jtype: str  # 'I', 'II', 'III' or 'IV'
    real_eigs: tuple[tuple[float, int, int], ...]
    complex_pair: Optional[tuple[float, float]]
    epsilon: Optional[int]
    adapted_basis: np.ndarray
    diag: tuple[float, ...]
    dim: int

    @property
    def defective_eig(self) -> Optional[float]:
        """The eigenvalue whose multiplicities differ (types II and III)."""
        for value, alg, geo in self.real_eigs:
            if alg != geo:
                return value
        return None

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        return tuple(value for value, _, _ in self.real_eigs)

    def canonical_matrix(self) -> np.ndarray:
        """The type I/II/III/IV matrix realized in adapted_basis."""
        M = np.zeros((self.dim, self.dim))
        if self.jtype == "I":
            np.fill_diagonal(M, self.diag)
            return M
        if self.jtype == "II":
            lam = self.defective_eig
            M[0, 0] = M[1, 1] = lam
            M[1, 0] = float(self.epsilon)
            off = 2
        elif self.jtype == "III":
            lam = self.defective_eig
            M[0, 0] = M[1, 1] = M[2, 2] = lam
            M[0, 2] = 1.0
            M[2, 1] = 1.0
            off = 3
        else:  # IV
            a, b = self.complex_pair
            M[0, 0] = M[1, 1] = a
            M[0, 1] = -b
            M[1, 0] = b
            off = 2
        for i, v in enumerate(self.diag):
            M[off + i, off + i] = v
        return M

    def canonical_gram(self) -> np.ndarray:
        """Gram matrix of the adapted basis: orthonormal or semi-null."""
        G = np.eye(self.dim)
        if self.jtype in ("I", "IV"):
            G[0, 0] = -1.0
        else:
            G[0, 0] = G[1, 1] = 0.0
            G[0, 1] = G[1, 0] = 1.0
        return G


# ---------------------------------------------------------------------------
# classification


def classify_jordan(
    op: SelfAdjointOperator,
    tol: float = DEFAULT_TOL,
    cluster_tol: Optional[float] = None,
    jordan_tol: Optional[float] = None,
) -> JordanClassification:
    """Classify a Lorentz-self-adjoint operator into its canonical type.

    Eigenvalues come from the plain unsymmetric eigenproblem and are merged
    at cluster_tol, default 1e-7 * (1 + max|A|).  Geometric multiplicity of
    lambda is dim - rank(A - lambda I), counting singular values above
    tol * (1 + max|A|).  If the first pass matches no canonical shape the
    eigenvalues are re-merged at a ladder of coarser scales up to
    jordan_tol, default 1e-4 * (1 + max|A|): a numerically assembled 3x3
    Jordan block splits its eigenvalue at the cube root of the backward
    error, far beyond any first-pass tolerance, and the rank tests then
    settle the structure.  The ladder keeps nearby distinct eigenvalues
    apart as long as their gap exceeds the noise floor of the splitting.

    Raises NondiagnosableOperator when no canonical shape fits at any
    scale.
    """
    A = op.matrix
    scale = 1.0 + np.abs(A).max()
    if cluster_tol is None:
        cluster_tol = 1e-7 * scale
    if jordan_tol is None:
        jordan_tol = 1e-4 * scale
    rank_threshold = tol * scale

    w = np.linalg.eig(A)[0]

    ladder = [cluster_tol]
    step = cluster_tol
    while step < jordan_tol:
        step = min(5 * step, jordan_tol)
        ladder.append(step)

    last_error: Optional[NondiagnosableOperator] = None
    for merge_tol in ladder:
        try:
            return _classify_pass(op, w, merge_tol, rank_threshold)
        except NondiagnosableOperator as exc:
            last_error = exc
    raise last_error


def _cluster_reals(values: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Merge sorted real values into (center, count) clusters."""
    clusters: list[list[float]] = []
    for v in np.sort(values):
        if clusters and abs(v - np.mean(clusters[-1])) <= tol:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    return [(float(np.mean(cl)), len(cl)) for cl in clusters]


def _split_spectrum(w: np.ndarray, merge_tol: float):
    """Separate a conjugate pair from the real spectrum."""
    im_big = np.abs(w.imag) > merge_tol
    complex_pair = None
    if im_big.any():
        vals = w[im_big]
        if len(vals) != 2:
            raise NondiagnosableOperator(
                f"{len(vals)} eigenvalues off the real axis; at most one conjugate pair is possible"
            )
        v1, v2 = vals
        if abs(v1 - np.conj(v2)) > 2 * merge_tol * (1 + abs(v1)):
            raise NondiagnosableOperator("non-conjugate complex eigenvalues")
        complex_pair = (float(vals.real.mean()), float(np.abs(vals.imag).mean()))
    reals = w[~im_big].real
    return complex_pair, _cluster_reals(reals, merge_tol)


def _rank(mat: np.ndarray, threshold: float) -> int:
    s = np.linalg.svd(mat, compute_uv=False)
    return int((s > threshold).sum())


def _eigenspace(A: np.ndarray, value: float, count: int, power: int) -> np.ndarray:
    """Orthonormal columns spanning the count-dim most-null right subspace
    of (A - value I)^power."""
    n = A.shape[0]
    M = np.linalg.matrix_power(A - value * np.eye(n), power)
    _, _, vt = np.linalg.svd(M)
    return vt[n - count:].T


def _form_orthonormalize(G: np.ndarray, basis: np.ndarray):
    """Orthonormalize columns against an (in)definite form.

    Returns (columns, signs): columns^T G columns = diag(signs), signs in
    {-1, +1}, negative first.
    """
    S = basis.T @ G @ basis
    S = 0.5 * (S + S.T)
    evals, evecs = np.linalg.eigh(S)
    norms = np.sqrt(np.abs(evals))
    if norms.size and norms.min() <= 1e-10 * (1 + norms.max()):
        raise NondiagnosableOperator("degenerate restricted Gram on an eigenspace")
    cols = (basis @ evecs) / norms
    signs = np.where(evals < 0, -1, 1)
    order = np.argsort(signs)
    return cols[:, order], signs[order]


def _kernel_complement(A, G, value, geo, chain_null, chain_unit):
    """Directions of ker(A - value I) G-orthogonal to a semi-null chain.

    chain_null is the null kernel vector of the chain (b2 or e1), chain_unit
    its semi-null partner (b1 or e2, with <chain_null, chain_unit> = 1).
    Returns geo - 1 spacelike columns.
    """
    K = _eigenspace(A, value, geo, 1)
    pair = float(chain_null @ G @ chain_unit)
    K = K - np.outer(chain_null, (chain_unit @ G @ K) / pair)
    q, s, _ = np.linalg.svd(K, full_matrices=False)
    return q[:, : geo - 1]


def _classify_pass(op: SelfAdjointOperator, w, merge_tol, rank_threshold):
    A = op.matrix
    G = op.form.gram
    n = op.dim

    complex_pair, real_clusters = _split_spectrum(w, merge_tol)

    eigs: list[tuple[float, int, int]] = []
    defects: list[tuple[float, int, int]] = []
    for center, alg in real_clusters:
        geo = n - _rank(A - center * np.eye(n), rank_threshold)
        if geo < 1 or geo > alg:
            raise NondiagnosableOperator(
                f"inconsistent multiplicities at {center:.6g}: alg={alg}, geo={geo}"
            )
        eigs.append((center, alg, geo))
        if geo != alg:
            defects.append((center, alg, geo))

    if complex_pair is not None:
        if defects:
            raise NondiagnosableOperator("complex pair combined with a defective eigenvalue")
        jtype = "IV"
    elif not defects:
        jtype = "I"
    elif len(defects) == 1 and defects[0][1] - defects[0][2] == 1:
        jtype = "II"
    elif len(defects) == 1 and defects[0][1] - defects[0][2] == 2:
        jtype = "III"
    else:
        raise NondiagnosableOperator(f"defect pattern matches no canonical shape: {defects}")

    total = sum(alg for _, alg, _ in eigs) + (2 if complex_pair else 0)
    if total != n:
        raise NondiagnosableOperator(f"multiplicities sum to {total}, expected {n}")

    basis, epsilon, diag = _adapted_basis(A, G, n, jtype, eigs, complex_pair)

    cls = JordanClassification(
        jtype=jtype,
        real_eigs=tuple(sorted(eigs)),
        complex_pair=complex_pair,
        epsilon=epsilon,
        adapted_basis=basis,
        diag=tuple(diag),
        dim=n,
    )
    gram_err = np.abs(basis.T @ G @ basis - cls.canonical_gram()).max()
    shape_err = np.abs(A @ basis - basis @ cls.canonical_matrix()).max()
    guard = 100 * merge_tol * (1 + np.abs(A).max())
    if gram_err > guard or shape_err > guard:
        raise NondiagnosableOperator(
            f"canonical reconstruction failed (gram {gram_err:.2e}, shape {shape_err:.2e})"
        )
    return cls


def _adapted_basis(A, G, n, jtype, eigs, complex_pair):
    cols: list[np.ndarray] = []
    diag: list[float] = []
    epsilon = None
    defective = [(v, a, g) for v, a, g in eigs if a != g]
    clean = [(v, a, g) for v, a, g in eigs if a == g]

    if jtype == "IV":
        a, b = complex_pair
        wv, vecs = np.linalg.eig(A)
        idx = int(np.argmin(np.abs(wv - (a + 1j * b))))
        z = vecs[:, idx]
        x, y = z.real.copy(), z.imag.copy()
        # rotate z -> e^{i theta} z to make <x, y> = 0 with <x, x> > 0;
        # self-adjointness forces <y, y> = -<x, x>
        gxx = float(x @ G @ x)
        gxy = float(x @ G @ y)
        theta = 0.5 * np.arctan2(-gxy, gxx)
        xr = np.cos(theta) * x - np.sin(theta) * y
        yr = np.sin(theta) * x + np.cos(theta) * y
        sq = float(xr @ G @ xr)
        if sq <= 0:
            raise NondiagnosableOperator("complex block carries no spacelike direction")
        norm = np.sqrt(sq)
        cols.extend([yr / norm, xr / norm])

    elif jtype == "II":
        lam, alg, geo = defective[0]
        V = _eigenspace(A, lam, alg, 2)
        N = V.T @ (A - lam * np.eye(n)) @ V  # 2-step nilpotent, rank 1
        w_small = np.linalg.svd(N)[2][0]
        wv = V @ w_small
        z = (A - lam * np.eye(n)) @ wv
        s_val = float(z @ G @ wv)
        if abs(s_val) < 1e-12 * (1 + np.abs(A).max()):
            raise NondiagnosableOperator("degenerate semi-null pairing in type II block")
        epsilon = 1 if s_val > 0 else -1
        wv = wv - (float(wv @ G @ wv) / (2 * s_val)) * z  # null out <w, w>
        beta = np.sqrt(abs(s_val))
        b1 = wv / beta
        b2 = z / (epsilon * beta)
        cols.extend([b1, b2])
        if geo > 1:
            K = _kernel_complement(A, G, lam, geo, b2, b1)
            Kcols, signs = _form_orthonormalize(G, K)
            if (signs < 0).any():
                raise NondiagnosableOperator("type II kernel complement is not spacelike")
            cols.extend(Kcols.T)
            diag.extend([lam] * (geo - 1))

    elif jtype == "III":
        lam, alg, geo = defective[0]
        V = _eigenspace(A, lam, alg, 3)
        N = V.T @ (A - lam * np.eye(n)) @ V  # 3-step nilpotent, N^2 rank 1
        w_small = np.linalg.svd(N @ N)[2][0]
        Nfull = A - lam * np.eye(n)
        e2 = V @ w_small
        e3 = Nfull @ e2
        e1 = Nfull @ e3
        t = float(e1 @ G @ e2)
        if t <= 1e-12 * (1 + np.abs(A).max()) ** 2:
            raise NondiagnosableOperator("type III chain has nonpositive pairing")
        e1, e2, e3 = e1 / np.sqrt(t), e2 / np.sqrt(t), e3 / np.sqrt(t)
        # shift e2 along e1 and e3 to null out <e2, e3> and <e2, e2>
        b_adj = -0.5 * float(e2 @ G @ e3)
        a_adj = -0.5 * (float(e2 @ G @ e2) + 2 * b_adj * float(e2 @ G @ e3) + b_adj**2)
        e2 = e2 + a_adj * e1 + b_adj * e3
        e3 = Nfull @ e2
        e1 = Nfull @ e3
        cols.extend([e1, e2, e3])
        if geo > 1:
            K = _kernel_complement(A, G, lam, geo, e1, e2)
            Kcols, signs = _form_orthonormalize(G, K)
            if (signs < 0).any():
                raise NondiagnosableOperator("type III kernel complement is not spacelike")
            cols.extend(Kcols.T)
            diag.extend([lam] * (geo - 1))

    # diagonalizable eigenvalues; in type I the Lorentzian block leads
    timelike_used = jtype != "I"
    blocks = []
    for value, alg, geo in clean:
        V = _eigenspace(A, value, alg, 1)
        Vcols, signs = _form_orthonormalize(G, V)
        has_neg = bool((signs < 0).any())
        if has_neg:
            if timelike_used or (signs < 0).sum() > 1:
                raise NondiagnosableOperator("too many timelike eigendirections")
            timelike_used = True
        blocks.append((value, Vcols, has_neg))
    if not timelike_used:
        raise NondiagnosableOperator("no timelike eigendirection found for type I")

    if jtype == "I":
        blocks.sort(key=lambda blk: (0 if blk[2] else 1, blk[0]))
    else:
        blocks.sort(key=lambda blk: blk[0])
    for value, Vcols, _ in blocks:
        cols.extend(Vcols.T)
        diag.extend([value] * Vcols.shape[1])

    basis = np.column_stack(cols)
    if basis.shape != (n, n):
        raise NondiagnosableOperator("adapted basis has wrong dimension")
    return basis, epsilon, diag
