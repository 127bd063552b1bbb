"""Randomized verification suites for the library invariants.

Each suite replays the defining identities of one module on seeded random
data and reports structured pass/fail records: failures are data, not
exceptions.  Results are deterministic in (seed, suite): every check
derives its own generator from the run seed and a fixed check index, so
aggregation order does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import classifier, hopf_lift, indefinite_linalg as il, kahler_angle as ka
from . import solvable_model as sm
from . import tube_geometry as tg

SUITES = ("cartan", "jordan", "tube", "kahler", "group", "lift")


@dataclass
class RunConfig:
    curvature_c: float = -4.0
    tol: float = 1e-9
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if self.curvature_c >= 0:
            raise ValueError("curvature must be negative")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.output_format not in ("json", "csv", "table"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass
class CheckResult:
    module: str
    name: str
    samples: int
    max_residual: float
    tol: float
    passed: bool
    worst_input: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {
            "module": self.module,
            "name": self.name,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tol": self.tol,
            "passed": self.passed,
        }
        if not self.passed and self.worst_input is not None:
            out["worst_input"] = self.worst_input
        return out


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for ch in self.checks if ch.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [ch.to_dict() for ch in self.checks],
        }


def _rng(config: RunConfig, suite: str, index: int) -> np.random.Generator:
    return np.random.default_rng([config.seed, SUITES.index(suite), index])


def _record(results, module, name, residuals, tol, inputs=None):
    residuals = np.atleast_1d(np.asarray(residuals, dtype=float))
    worst = int(np.argmax(residuals)) if residuals.size else 0
    max_res = float(residuals.max()) if residuals.size else 0.0
    results.append(
        CheckResult(
            module=module,
            name=name,
            samples=int(residuals.size),
            max_residual=max_res,
            tol=tol,
            passed=bool(max_res <= tol),
            worst_input=None if inputs is None else inputs[worst],
        )
    )


def _random_an(rng, n, c) -> sm.ANVector:
    return sm.ANVector(
        rng.standard_normal(),
        rng.standard_normal(n - 1) + 1j * rng.standard_normal(n - 1),
        rng.standard_normal(),
        c,
    )


# ---------------------------------------------------------------------------
# suites


def _suite_kahler(config: RunConfig) -> SuiteResult:
    out = SuiteResult("kahler")
    c = out.checks

    rng = _rng(config, "kahler", 0)
    res, inputs = [], []
    for trial in range(1000):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(0, 2 * m + 1))
        seed = int(rng.integers(2**31))
        W = ka.random_subspace(m, k, seed)
        base = ka.congruence_invariant(W)
        conj = ka.congruence_invariant(ka.unitary_conjugate(W, seed + 1))
        if len(base.entries) != len(conj.entries) or any(
            mb != mc for (_, mb), (_, mc) in zip(base.entries, conj.entries)
        ):
            res.append(np.inf)
        else:
            res.append(
                max(
                    (abs(ab - ac) for (ab, _), (ac, _) in zip(base.entries, conj.entries)),
                    default=0.0,
                )
            )
        inputs.append({"m": m, "k": k, "seed": seed})
    _record(out.checks, "kahler_angle", "profile_unitary_invariance", res, 1e-8, inputs)

    rng = _rng(config, "kahler", 1)
    res, inputs = [], []
    for trial in range(300):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(0, 2 * m + 1))
        seed = int(rng.integers(2**31))
        W = ka.random_subspace(m, k, seed)
        p1 = ka.congruence_invariant(W).nonzero_entries()
        p2 = ka.congruence_invariant(ka.complement(W)).nonzero_entries()
        if len(p1) != len(p2) or any(m1 != m2 for (_, m1), (_, m2) in zip(p1, p2)):
            res.append(np.inf)
        else:
            res.append(max((abs(a1 - a2) for (a1, _), (a2, _) in zip(p1, p2)), default=0.0))
        inputs.append({"m": m, "k": k, "seed": seed})
    _record(out.checks, "kahler_angle", "complement_angle_matching", res, 1e-8, inputs)

    rng = _rng(config, "kahler", 2)
    res = []
    for trial in range(200):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(1, 2 * m + 1))
        W = ka.random_subspace(m, k, int(rng.integers(2**31)))
        J = ka.complex_structure(m)
        B = W.basis
        K = B @ J.T @ B.T  # F in the basis coordinates
        res.append(np.abs(K + K.T).max())
    _record(out.checks, "kahler_angle", "f_skew_adjoint", res, 1e-10)

    rng = _rng(config, "kahler", 3)
    res = []
    for trial in range(200):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(1, 2 * m + 1))
        W = ka.random_subspace(m, k, int(rng.integers(2**31)))
        profile, vectors, decomposition = ka.kahler_profile(W)
        J = ka.complex_structure(m)
        worst = 0.0
        for angle, block in decomposition:
            for xi in block:
                F, _ = ka.pf_split(W, xi)
                F2 = W.project(J @ F)
                worst = max(worst, np.abs(F2 + np.cos(angle) ** 2 * xi).max())
        res.append(worst)
    _record(out.checks, "kahler_angle", "f_squared_identity", res, 1e-9)

    rng = _rng(config, "kahler", 4)
    res = []
    for trial in range(300):
        m = int(rng.integers(1, 6))
        k = int(rng.integers(0, 2 * m + 1))
        W = ka.random_subspace(m, k, int(rng.integers(2**31)))
        profile = ka.congruence_invariant(W)
        bad = sum(
            1
            for a, mult in profile.entries
            if a < np.pi / 2 - ka.ANGLE_TOL and mult % 2
        )
        res.append(float(bad))
    _record(out.checks, "kahler_angle", "multiplicity_parity", res, 0.0)

    return out


def _random_isometry(rng, gram: np.ndarray, scale: float = 0.3) -> np.ndarray:
    S = rng.standard_normal(gram.shape) * scale
    S = S - S.T
    K = np.linalg.solve(gram, S)
    # matrix exponential by scaling and squaring on the series
    T = np.eye(gram.shape[0])
    term = np.eye(gram.shape[0])
    for i in range(1, 18):
        term = term @ K / i
        T = T + term
    return T


def _suite_jordan(config: RunConfig) -> SuiteResult:
    out = SuiteResult("jordan")

    rng = _rng(config, "jordan", 0)
    res = []
    for trial in range(100):
        dim = int(rng.integers(2, 6))
        form = il.minkowski_form(dim)
        S = rng.standard_normal((dim, dim))
        A = np.linalg.solve(form.gram, 0.5 * (S + S.T))
        cls = il.classify_jordan(il.SelfAdjointOperator(form, A))
        gram_err = np.abs(
            cls.adapted_basis.T @ form.gram @ cls.adapted_basis - cls.canonical_gram()
        ).max()
        shape_err = np.abs(A @ cls.adapted_basis - cls.adapted_basis @ cls.canonical_matrix()).max()
        res.append(max(gram_err, shape_err))
    _record(out.checks, "indefinite_linalg", "canonical_basis_reconstruction", res, 1e-9)

    rng = _rng(config, "jordan", 1)
    res = []
    for trial in range(100):
        dim = int(rng.integers(2, 6))
        form = il.minkowski_form(dim)
        S = rng.standard_normal((dim, dim))
        A = np.linalg.solve(form.gram, 0.5 * (S + S.T))
        cls = il.classify_jordan(il.SelfAdjointOperator(form, A))
        T = _random_isometry(rng, form.gram)
        A2 = np.linalg.solve(T, A @ T)
        cls2 = il.classify_jordan(il.SelfAdjointOperator(form, A2, tol=1e-7))
        if cls.jtype != cls2.jtype or len(cls.real_eigs) != len(cls2.real_eigs):
            res.append(np.inf)
            continue
        worst = 0.0
        for (v1, a1, g1), (v2, a2, g2) in zip(cls.real_eigs, cls2.real_eigs):
            if a1 != a2 or g1 != g2:
                worst = np.inf
            worst = max(worst, abs(v1 - v2))
        if cls.complex_pair is not None:
            worst = max(
                worst,
                abs(cls.complex_pair[0] - cls2.complex_pair[0]),
                abs(cls.complex_pair[1] - cls2.complex_pair[1]),
            )
        res.append(worst)
    _record(out.checks, "indefinite_linalg", "conjugation_invariance", res, 1e-8)

    rng = _rng(config, "jordan", 2)
    res = []
    for trial in range(100):
        form = il.minkowski_form(4)
        S = rng.standard_normal((4, 4))
        A = np.linalg.solve(form.gram, 0.5 * (S + S.T))
        cls = il.classify_jordan(il.SelfAdjointOperator(form, A))
        worst = 0.0
        if any(a < g for _, a, g in cls.real_eigs):
            worst = np.inf
        # dense complex eigendecomposition oracle
        w = np.linalg.eigvals(A)
        for value, alg, geo in cls.real_eigs:
            count = int(np.sum(np.abs(w - value) <= 1e-6 * (1 + abs(value))))
            if count != alg:
                worst = np.inf
        res.append(worst)
    _record(out.checks, "indefinite_linalg", "alg_geo_vs_dense_oracle", res, 0.0)

    return out


def _suite_group(config: RunConfig) -> SuiteResult:
    out = SuiteResult("group")
    cc = config.curvature_c

    rng = _rng(config, "group", 0)
    res_t, res_m, res_c, res_j = [], [], [], []
    for trial in range(500):
        n = int(rng.integers(2, 6))
        X, Y, Z = (_random_an(rng, n, cc) for _ in range(3))
        res_t.append(
            sm.an_norm(sm.levi_civita(X, Y) - sm.levi_civita(Y, X) - sm.bracket(X, Y))
        )
        res_m.append(
            abs(sm.an_inner(sm.levi_civita(X, Y), Z) + sm.an_inner(Y, sm.levi_civita(X, Z)))
        )
        R1 = sm.curvature_tensor(X, Y, Z)
        R2 = (
            sm.levi_civita(X, sm.levi_civita(Y, Z))
            - sm.levi_civita(Y, sm.levi_civita(X, Z))
            - sm.levi_civita(sm.bracket(X, Y), Z)
        )
        res_c.append(sm.an_norm(R1 - R2))
        res_j.append(
            sm.an_norm(
                sm.bracket(X, sm.bracket(Y, Z))
                + sm.bracket(Y, sm.bracket(Z, X))
                + sm.bracket(Z, sm.bracket(X, Y))
            )
        )
    _record(out.checks, "solvable_model", "torsion_free", res_t, 1e-10)
    _record(out.checks, "solvable_model", "metric_compatibility", res_m, 1e-10)
    _record(out.checks, "solvable_model", "curvature_vs_connection", res_c, 1e-9)
    _record(out.checks, "solvable_model", "jacobi_identity", res_j, 1e-10)

    rng = _rng(config, "group", 1)
    res = []
    for trial in range(200):
        n = int(rng.integers(2, 6))
        p1, p2, p3 = (sm.ANPoint(0.5 * _random_an(rng, n, cc)) for _ in range(3))
        left = sm.group_product(sm.group_product(p1, p2), p3).coords
        right = sm.group_product(p1, sm.group_product(p2, p3)).coords
        res.append(sm.an_norm(left - right))
    _record(out.checks, "solvable_model", "associativity", res, 1e-10)

    rng = _rng(config, "group", 2)
    res = []
    for trial in range(20):
        n = int(rng.integers(2, 6))
        m = n - 1
        k = int(rng.integers(1, 2 * m + 1))
        w = ka.random_subspace(m, 2 * m - k, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc)
        p = sm.ANPoint.origin(n, cc)
        for _ in range(200):
            a, x = 0.15 * rng.standard_normal(2)
            if w.dim:
                coefs = 0.2 * rng.standard_normal(w.dim)
                U = coefs @ (w.basis[:, 0::2] + 1j * w.basis[:, 1::2])
            else:
                U = np.zeros(m, dtype=complex)
            p = sm.group_product(p, sm.ANPoint(sm.ANVector(a, U, x, cc)))
        res.append(np.linalg.norm(W.w_perp_basis @ sm._galpha_flat(p.coords)))
    _record(out.checks, "solvable_model", "subgroup_closure_200_factors", res, 1e-9)

    rng = _rng(config, "group", 3)
    res = []
    for trial in range(50):
        n = int(rng.integers(2, 6))
        m = n - 1
        k = int(rng.integers(1, 2 * m + 1))
        w = ka.random_subspace(m, 2 * m - k, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc)
        worst = 0.0
        for xi in W.normal_frame():
            worst = max(worst, abs(np.trace(sm.shape_operator(W, xi))))
        res.append(worst)
    _record(out.checks, "solvable_model", "minimality_exact_trace", res, 0.0)

    rng = _rng(config, "group", 5)
    res = []
    for trial in range(15):
        n = int(rng.integers(2, 6))
        m = n - 1
        k = int(rng.integers(1, 2 * m + 1))
        w = ka.random_subspace(m, 2 * m - k, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc)
        res.extend(
            sm.fundamental_equation_residuals(W, samples=8, seed=int(rng.integers(2**31)))
        )
    _record(out.checks, "solvable_model", "gauss_codazzi_ricci", res, 1e-10)

    rng = _rng(config, "group", 4)
    res = []
    for trial in range(100):
        n = int(rng.integers(2, 6))
        m = n - 1
        kw = int(rng.integers(1, 2 * m + 1))  # dim w >= 1 so a horocycle exists
        w = ka.random_subspace(m, kw, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc) if kw < 2 * m else None
        if W is None:
            res.append(0.0)
            continue
        coefs = rng.standard_normal(kw)
        U_flat = coefs @ w.basis
        U_flat /= np.linalg.norm(U_flat)
        U = sm.ANVector(0.0, U_flat[0::2] + 1j * U_flat[1::2], 0.0, cc)
        p = sm.ANPoint.origin(n, cc)
        for _ in range(3):
            t = float(rng.uniform(-2, 2))
            p = sm.horocycle_point(p, U, t)
        res.append(np.linalg.norm(W.w_perp_basis @ sm._galpha_flat(p.coords)))
    _record(out.checks, "solvable_model", "horocycle_membership", res, 1e-9)

    return out


def _suite_tube(config: RunConfig) -> SuiteResult:
    out = SuiteResult("tube")
    cc = config.curvature_c

    rng = _rng(config, "tube", 0)
    res, inputs = [], []
    for trial in range(200):
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, 2 * n - 2))
        r = float(rng.uniform(1e-3, 3.0))
        phi = np.pi / 2 if k == 1 else float(rng.uniform(0, np.pi / 2))
        roots = tg.tube_char_roots(n, k, r, phi, cc)
        H = tg.tube_mean_curvature(n, k, r, cc)
        res.append(abs(roots.sum() - H) / abs(H))
        inputs.append({"n": n, "k": k, "r": r, "phi": phi})
    _record(out.checks, "tube_geometry", "trace_identity", res, 1e-9, inputs)

    rng = _rng(config, "tube", 1)
    res = []
    for r in np.linspace(0.01, 5.0, 100):
        s0 = np.sqrt(-cc) / 2
        mu = s0 / np.tanh(s0 * r)
        g, _, _, _ = tg.jacobi_scalars(mu, r, cc)
        res.append(abs(g))
    _record(out.checks, "tube_geometry", "focal_collapse_g_mu", res, 1e-12)

    res = []
    for r in np.linspace(0.2, 5.0, 50):
        lam, mu, alpha, beta, focal = tg.parallel_data(r, r - 1e-6, cc)
        res.append(lam / np.sqrt(-cc))
    _record(out.checks, "tube_geometry", "focal_collapse_lambda", res, 1e-5)

    rng = _rng(config, "tube", 2)
    res = []
    for trial in range(100):
        r = float(rng.uniform(0.3, 3.0))
        ts = np.linspace(0, r * 0.999, 30)
        lams = [tg.parallel_data(r, t, cc)[0] for t in ts]
        mus = [tg.parallel_data(r, t, cc)[1] for t in ts]
        bad = float(np.any(np.diff(lams) >= 0)) + float(np.any(np.diff(mus) <= 0))
        res.append(bad)
    _record(out.checks, "tube_geometry", "monotone_evolution", res, 0.0)

    rng = _rng(config, "tube", 3)
    res = []
    hstep = 1e-4

    def _d5(fun, t):
        # five-point stencil: mu' grows like (r - t)^-2, so the extra
        # accuracy is needed when t comes close to the focal radius
        return (
            8 * (fun(t + hstep) - fun(t - hstep)) - (fun(t + 2 * hstep) - fun(t - 2 * hstep))
        ) / (12 * hstep)

    for trial in range(100):
        r = float(rng.uniform(0.7, 3.0))
        t = float(rng.uniform(0.05 * r, min(0.9 * r, r - 0.2)))
        lam_p = _d5(lambda t_: tg.parallel_data(r, t_, cc)[0], t)
        mu_p = _d5(lambda t_: tg.parallel_data(r, t_, cc)[1], t)
        lam, mu = tg.parallel_data(r, t, cc)[:2]
        # moving toward the focal set: d(lam)/dt = lam^2 + c/4
        res.append(abs(lam_p - (lam**2 + cc / 4)))
        res.append(abs(mu_p - (mu**2 + cc / 4)))
    _record(out.checks, "tube_geometry", "riccati_evolution", res, 1e-8)

    rng = _rng(config, "tube", 4)
    res = []
    for trial in range(100):
        r = float(rng.uniform(0.2, 3.0))
        lam = np.sqrt(-cc) / 2 * np.tanh(np.sqrt(-cc) / 2 * r)
        roots = tg._poly_roots(tg.angle_factor_cubic(lam, np.pi / 2, cc))
        # three real roots: imaginary parts were dropped; check by residual
        vals = np.polyval(tg.angle_factor_cubic(lam, np.pi / 2, cc), roots)
        res.append(np.abs(vals).max())
        # scaling consistency x -> s x under c -> s^2 c, r -> r/s
        s = float(rng.uniform(0.5, 2.0))
        lam2 = np.sqrt(-cc * s**2) / 2 * np.tanh(np.sqrt(-cc * s**2) / 2 * (r / s))
        roots2 = tg._poly_roots(tg.angle_factor_cubic(lam2, np.pi / 2, cc * s**2))
        res.append(np.abs(np.sort(roots2) - s * np.sort(roots)).max())
    _record(out.checks, "tube_geometry", "pi2_cubic_real_roots_and_scaling", res, 1e-8)

    rng = _rng(config, "tube", 5)
    res, inputs = [], []
    for trial in range(100):
        n = int(rng.integers(2, 6))
        m = n - 1
        k = int(rng.integers(1, 2 * n - 2))
        w = ka.random_subspace(m, 2 * m - k, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc)
        r = float(rng.uniform(0.2, 2.5))
        spec = tg.TubeSpec(W, r)
        coef = rng.standard_normal(k)
        v = W.w_perp_basis.T @ coef
        v /= np.linalg.norm(v)
        xi = sm.ANVector(0.0, v[0::2] + 1j * v[1::2], 0.0, cc)
        S = tg.numeric_shape_operator(spec, xi)
        evals = np.linalg.eigvalsh(0.5 * (S.matrix + S.matrix.T))
        phi = tg.normal_kahler_angle(W, xi)
        roots = tg.tube_char_roots(n, k, r, phi, cc)
        res.append(np.abs(np.sort(evals) - roots).max())
        inputs.append({"n": n, "k": k, "r": r, "phi": phi})
    _record(out.checks, "tube_geometry", "numeric_vs_charpoly", res, 1e-8, inputs)

    return out


def _suite_lift(config: RunConfig) -> SuiteResult:
    out = SuiteResult("lift")
    cc = config.curvature_c

    rng = _rng(config, "lift", 0)
    res, inputs = [], []
    expected = {"tube-chk": "I", "horosphere": "II", "tube-rhn": "IV"}
    for trial in range(50):
        r = float(rng.uniform(0.2, 2.5))
        n = int(rng.integers(2, 7))
        for fam, etype in expected.items():
            k = int(rng.integers(0, n)) if fam == "tube-chk" else None
            spec = tg.standard_spectrum(fam, n, r=r, c=cc, k=k)
            cls = hopf_lift.classify_lift(hopf_lift.hopf_lift_data(spec, cc))
            down = hopf_lift.project_spectrum(cls, cc)
            bad = 0.0 if cls.jtype == etype else np.inf
            if not spec.matches(down, tol=1e-8):
                bad = np.inf
            worst_v = max(
                (abs(v1 - v2) for (v1, _, _), (v2, _, _) in zip(spec.entries, down.entries)),
                default=0.0,
            )
            res.append(max(bad, worst_v))
            inputs.append({"family": fam, "n": n, "r": r, "k": k})
    _record(out.checks, "hopf_lift", "standard_family_round_trip", res, 1e-8, inputs)

    rng = _rng(config, "lift", 1)
    res = []
    for trial in range(100):
        n = int(rng.integers(2, 7))
        r = float(rng.uniform(0.2, 2.5))
        fam = ["tube-chk", "horosphere", "tube-rhn"][trial % 3]
        k = int(rng.integers(0, n)) if fam == "tube-chk" else None
        spec = tg.standard_spectrum(fam, n, r=r, c=cc, k=k)
        lifted = hopf_lift.lift_shape_operator(hopf_lift.hopf_lift_data(spec, cc))
        res.append(abs(np.trace(lifted.matrix) - spec.trace()))
    _record(out.checks, "hopf_lift", "trace_preservation", res, 1e-12)

    rng = _rng(config, "lift", 2)
    res = []
    for trial in range(50):
        n = int(rng.integers(2, 7))
        spec = tg.standard_spectrum("horosphere", n, c=cc)
        cls = hopf_lift.classify_lift(hopf_lift.hopf_lift_data(spec, cc))
        lam = cls.real_eigs[0][0]
        bad = 0.0 if cls.jtype == "II" else np.inf
        res.append(max(bad, abs(abs(lam) - np.sqrt(-cc) / 2)))
    _record(out.checks, "hopf_lift", "type_ii_eigenvalue_half", res, 1e-10)

    rng = _rng(config, "lift", 3)
    res, inputs = [], []
    for trial in range(40):
        n = int(rng.integers(3, 6))
        m = n - 1
        k = int(rng.integers(2, 2 * n - 2))
        w = ka.random_subspace(m, 2 * m - k, int(rng.integers(2**31)))
        W = sm.build_w(w, n, cc)
        r = float(rng.uniform(0.3, 2.0))
        spec = tg.TubeSpec(W, r)
        xi = None
        for attempt in range(100):
            coef = rng.standard_normal(k)
            v = W.w_perp_basis.T @ coef
            v /= np.linalg.norm(v)
            cand = sm.ANVector(0.0, v[0::2] + 1j * v[1::2], 0.0, cc)
            if tg.normal_kahler_angle(W, cand) > 0.1:
                xi = cand
                break
        if xi is None:
            res.append(0.0)  # w_perp is complex: no type III direction exists
            inputs.append({"n": n, "k": k, "r": r})
            continue
        cls = hopf_lift.classify_lift(hopf_lift.tube_lift_data(spec, xi))
        lam = cls.defective_eig
        bad = 0.0 if cls.jtype == "III" else np.inf
        if lam is None or abs(lam) >= np.sqrt(-cc) / 2:
            bad = np.inf
        lam_true = np.sqrt(-cc) / 2 * np.tanh(np.sqrt(-cc) / 2 * r)
        res.append(max(bad, abs(lam - lam_true)))
        inputs.append({"n": n, "k": k, "r": r})
    _record(out.checks, "hopf_lift", "w_tube_type_iii", res, 1e-8, inputs)

    return out


def _suite_cartan(config: RunConfig) -> SuiteResult:
    out = SuiteResult("cartan")
    cc = config.curvature_c
    s0 = np.sqrt(-cc) / 2

    rng = _rng(config, "cartan", 0)
    res = []
    for trial in range(100):
        r = float(rng.uniform(0.05, 4.0))
        lam = s0 * np.tanh(s0 * r)
        mu = -cc / (4 * lam)
        m1, m2 = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        spectrum = [(lam, m1), (mu, m2)]
        res.append(abs(classifier.cartan_residual(spectrum, 0, cc)))
        res.append(abs(classifier.cartan_residual(spectrum, 1, cc)))
    _record(out.checks, "classifier", "type_i_pair_residual", res, 1e-9)

    rng = _rng(config, "cartan", 1)
    res = []
    for trial in range(30):
        n = int(rng.integers(2, 6))
        r = float(rng.uniform(0.2, 2.5))
        for fam in ("tube-chk", "horosphere", "tube-rhn"):
            k = int(rng.integers(0, n)) if fam == "tube-chk" else None
            spec = tg.standard_spectrum(fam, n, r=r, c=cc, k=k)
            cls = hopf_lift.classify_lift(hopf_lift.hopf_lift_data(spec, cc))
            upstairs = [(v, a) for v, a, _ in cls.real_eigs]
            for i in range(len(upstairs)):
                res.append(abs(classifier.cartan_residual(upstairs, i, cc)))
    _record(out.checks, "classifier", "lifted_spectrum_residual", res, 1e-9)

    res = []
    xs = np.linspace(0.01, 4.0, 100)
    ps = np.linspace(0.05, 4.0, 100)
    for p in ps:
        for x in xs:
            if abs(x - p) < 1e-9:
                continue
            value, predicate = classifier.inside_cartan_phi(float(x), float(p), cc)
            res.append(0.0 if (value > 0) == predicate else np.inf)
    _record(out.checks, "classifier", "phi_filter_grid_agreement", res, 0.0)

    return out


_SUITE_RUNNERS = {
    "kahler": _suite_kahler,
    "jordan": _suite_jordan,
    "group": _suite_group,
    "tube": _suite_tube,
    "lift": _suite_lift,
    "cartan": _suite_cartan,
}


def verify_suites(config: RunConfig, suites=SUITES) -> dict:
    """Run the requested suites and return a structured summary.

    Deterministic given (seed, suites); failures are recorded with the
    module, invariant name, worst input and residual.
    """
    unknown = [s for s in suites if s not in _SUITE_RUNNERS]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    results = [_SUITE_RUNNERS[s](config) for s in suites]
    return {
        "seed": config.seed,
        "curvature": config.curvature_c,
        "suites": [r.to_dict() for r in results],
        "passed": sum(r.passed for r in results),
        "failed": sum(r.failed for r in results),
        "ok": all(r.failed == 0 for r in results),
    }
