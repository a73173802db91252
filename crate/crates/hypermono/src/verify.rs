//! Named verification suites over seeded random points.
//!
//! Each suite evaluates a battery of closed-form identities, equation
//! residuals, and deliberate negative controls, and reports one
//! [`CheckResult`] per check: the worst value seen over the sample, the
//! tolerance, and the comparison sense. Positive checks bound the value
//! from above; negative controls bound it from below, so a check that
//! silently computes zero everywhere cannot pass the suite.
//!
//! Finite-difference residuals are evaluated at `params.points` sample
//! points with stencil `params.h`; exact algebraic identities are cheap
//! and always use at least 100 points regardless of `params.points`.
//! Points are drawn from `x, y ∈ [−1.5, 1.5]`, `ρ ∈ [0.4, 2.5]` with a
//! seeded generator, so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    c, cl, cl_scalar, conj_gauge, conj_spinor, decompose, dual, pair, tensor, trace_pair,
    GaugeSpinor, Mat2, Spinor,
};
use crate::deformations::{
    bare_rotation_coord_grad, chi, clifford_decomposition_rhs, contract_field, eigen_residual,
    eigenspinor, eigenspinors, gauge_fix_residual, killing_spinor_residual, off_shell,
    pluricomplex_j, pure_gauge, real_deformation_clifford, real_deformation_spinor, tangent_vector,
    GaugeGenerator, KillingSpinorBasis, Sign,
};
use crate::geometry::{
    clifford_frame, commutator_field, dirac_spinor, fd_partial, killing_field, killing_jacobian,
    killing_residual, killing_residual_of, metric_pair, pt, star_1to2, star_2to1, Axis, FdOrder,
    FdScheme, KillingKind, Point, AXES,
};
use crate::monopole::{DyonGauge, GaugeField, Monopole};

/// Direction of a check: positive checks bound the value above,
/// negative controls bound it below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    AtMost,
    AtLeast,
}

/// One named check with its observed value and verdict.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub sense: Sense,
    pub pass: bool,
}

impl CheckResult {
    pub fn at_most(name: &str, value: f64, tolerance: f64) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            value,
            tolerance,
            sense: Sense::AtMost,
            pass: value <= tolerance,
        }
    }

    pub fn at_least(name: &str, value: f64, tolerance: f64) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            value,
            tolerance,
            sense: Sense::AtLeast,
            pass: value >= tolerance,
        }
    }
}

/// Sampling parameters shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    /// Base finite-difference step (effective step is `h·max(1, ρ)`).
    pub h: f64,
    /// Number of sample points for finite-difference residuals.
    pub points: usize,
    /// Seed of the point generator.
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> SuiteParams {
        SuiteParams {
            h: 1e-4,
            points: 10,
            seed: 42,
        }
    }
}

impl SuiteParams {
    fn scheme(&self) -> FdScheme {
        FdScheme::new(self.h, FdOrder::Two)
    }
}

/// Seeded sample points in the standard box.
pub fn sample_points(count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            pt(
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-1.5..1.5),
                rng.gen_range(0.4..2.5),
            )
        })
        .collect()
}

fn random_su2(rng: &mut ChaCha8Rng) -> Mat2 {
    let a = rng.gen_range(-1.0..1.0);
    let b = rng.gen_range(-1.0..1.0);
    let d = rng.gen_range(-1.0..1.0);
    Mat2::SIGMA1.scale(c(0.0, a)) + Mat2::SIGMA2.scale(c(0.0, b)) + Mat2::SIGMA3.scale(c(0.0, d))
}

fn random_gauge_spinor(rng: &mut ChaCha8Rng) -> GaugeSpinor {
    let mut m = || {
        random_su2(rng).scale(c(1.0, 0.0)) + random_su2(rng).scale(c(0.0, rng.gen_range(-1.0..1.0)))
    };
    let s1 = m();
    let s2 = m();
    GaugeSpinor::new(s1, s2)
}

fn random_spinor(rng: &mut ChaCha8Rng) -> Spinor {
    Spinor::new(
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
    )
}

/// Measured convergence order of a residual as the stencil shrinks
/// through `{1e-3, 5e-4, 2.5e-4}`: the smallest halving exponent.
pub fn measured_order<F>(residual_at: F) -> f64
where
    F: Fn(f64) -> f64,
{
    let r: Vec<f64> = [1e-3, 5e-4, 2.5e-4]
        .iter()
        .map(|&h| residual_at(h))
        .collect();
    let mut worst = f64::INFINITY;
    for w in r.windows(2) {
        worst = worst.min((w[0] / w[1]).log2());
    }
    worst
}

/// Identity-grade point count: at least 100 regardless of `points`.
fn identity_points(params: &SuiteParams) -> Vec<Point> {
    sample_points(params.points.max(100), params.seed)
}

/// Algebraic identities of the matrix, spinor, and Clifford layers.
pub fn suite_algebra(params: &SuiteParams) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut out = Vec::new();

    // Pauli commutators: [σ_i, σ_j] = 2iε_{ijk}σ_k.
    let mut worst: f64 = 0.0;
    let sig = [Mat2::SIGMA1, Mat2::SIGMA2, Mat2::SIGMA3];
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        worst = worst.max((sig[i].comm(&sig[j]) - sig[k].scale(c(0.0, 2.0))).max_abs());
    }
    out.push(CheckResult::at_most("pauli-commutators", worst, 1e-15));

    // Oriented Clifford volume: the frame product against the volume
    // orientation is +1.
    let f = clifford_frame();
    let vol = (f[0] * f[1] * f[2]).scale(c(-1.0, 0.0));
    out.push(CheckResult::at_most(
        "clifford-volume-oriented",
        (vol - Mat2::ID).max_abs(),
        1e-15,
    ));

    // Unit 1-forms square to −1 under the scalar Clifford map.
    let mut worst: f64 = 0.0;
    for rho in [0.5, 1.0, 2.0] {
        for dir in 0..3 {
            let mut a = [c(0.0, 0.0); 3];
            a[dir] = c(1.0 / rho, 0.0);
            let m = cl_scalar(&a, c(0.0, 0.0), rho);
            worst = worst.max((m * m + Mat2::ID).max_abs());
        }
    }
    out.push(CheckResult::at_most("clifford-unit-squares", worst, 1e-15));

    // (s, t) = dual(s)·t and conj² = −1.
    let mut worst_pair: f64 = 0.0;
    let mut worst_conj: f64 = 0.0;
    let mut worst_anti: f64 = 0.0;
    for _ in 0..200 {
        let s = random_spinor(&mut rng);
        let t = random_spinor(&mut rng);
        worst_pair = worst_pair.max((pair(&s, &t) - dual(&s).apply(&t)).norm());
        worst_conj = worst_conj.max((conj_spinor(&conj_spinor(&s)) + s).max_abs());
        let u = random_gauge_spinor(&mut rng);
        let v = random_gauge_spinor(&mut rng);
        worst_anti = worst_anti.max((trace_pair(&u, &v) + trace_pair(&v, &u)).norm());
    }
    out.push(CheckResult::at_most("dual-pairing", worst_pair, 1e-12));
    out.push(CheckResult::at_most(
        "conjugation-involution",
        worst_conj,
        1e-12,
    ));
    out.push(CheckResult::at_most(
        "pairing-antisymmetry",
        worst_anti,
        1e-12,
    ));

    // decompose ∘ tensor is the identity over any nondegenerate basis.
    let basis = KillingSpinorBasis::minus();
    let mut worst: f64 = 0.0;
    for p in identity_points(params) {
        let n1 = random_gauge_spinor(&mut rng);
        let n2 = random_gauge_spinor(&mut rng);
        let p1 = basis.psi(1, p);
        let p2 = basis.psi(2, p);
        let e = tensor(&n1, &dual(&p1)) + tensor(&n2, &dual(&p2));
        let (d1, d2) = decompose(&e, &p1, &p2).expect("Killing basis is nondegenerate");
        worst = worst.max((d1 - n1).max_abs()).max((d2 - n2).max_abs());
    }
    out.push(CheckResult::at_most("decompose-roundtrip", worst, 1e-9));

    // Gauge conjugation squares to −1 on gauge spinors with su(2) blocks.
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let v = GaugeSpinor::new(random_su2(&mut rng), random_su2(&mut rng));
        worst = worst.max((conj_gauge(&conj_gauge(&v)) + v).max_abs());
    }
    out.push(CheckResult::at_most(
        "gauge-conjugation-involution",
        worst,
        1e-12,
    ));

    out
}

/// Hyperbolic frame geometry: Killing fields, brackets, the Hodge star,
/// and the finite-difference stencils themselves.
pub fn suite_geometry(params: &SuiteParams) -> Vec<CheckResult> {
    let fd = params.scheme();
    let pts = sample_points(params.points, params.seed);
    let mut out = Vec::new();

    let all_kinds = [
        KillingKind::X1,
        KillingKind::X2,
        KillingKind::X3,
        KillingKind::Y1,
        KillingKind::Y2,
        KillingKind::Y3,
        KillingKind::Z1,
        KillingKind::Z2,
        KillingKind::Z3,
    ];

    // The nine symmetry fields satisfy the Killing equation.
    let mut worst: f64 = 0.0;
    for &kind in &all_kinds {
        for &p in &pts {
            worst = worst.max(killing_residual(kind, p, fd));
        }
    }
    out.push(CheckResult::at_most("killing-residuals", worst, 1e-5));

    // Negative control: x∂_x is not Killing (residual 2/ρ²).
    let mut least = f64::INFINITY;
    for &p in &pts {
        let r = killing_residual_of(|q| crate::geometry::TangentVec3::real(q.x, 0.0, 0.0), p, fd);
        least = least.min(r);
    }
    out.push(CheckResult::at_least(
        "killing-negative-control",
        least,
        1e-1,
    ));

    // Bracket table: [X_i, X_j] = −ε X_k, [X_i, Y_j] = −ε Y_k,
    // [Y_i, Y_j] = +ε X_k.
    use KillingKind::*;
    let xk = [X1, X2, X3];
    let yk = [Y1, Y2, Y3];
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        for &p in &pts {
            let xx = commutator_field(xk[i], xk[j], p) + killing_field(xk[k], p);
            let xy = commutator_field(xk[i], yk[j], p) + killing_field(yk[k], p);
            let yy = commutator_field(yk[i], yk[j], p) - killing_field(xk[k], p);
            worst = worst.max(xx.max_abs()).max(xy.max_abs()).max(yy.max_abs());
        }
    }
    out.push(CheckResult::at_most("symmetry-bracket-table", worst, 1e-10));

    // The complex combinations are orthonormal: g(Z_j, Z_k) = δ_jk.
    let zk = [Z1, Z2, Z3];
    let mut worst: f64 = 0.0;
    for j in 0..3 {
        for k in 0..3 {
            for &p in &pts {
                let g = metric_pair(&killing_field(zk[j], p), &killing_field(zk[k], p), p);
                let target = if j == k { c(1.0, 0.0) } else { c(0.0, 0.0) };
                worst = worst.max((g - target).norm());
            }
        }
    }
    out.push(CheckResult::at_most(
        "complex-frame-orthonormality",
        worst,
        1e-10,
    ));

    // Analytic Jacobians agree with stencils.
    let mut worst: f64 = 0.0;
    for &kind in &all_kinds {
        for &p in &pts {
            let jac = killing_jacobian(kind, p);
            for (col, axis) in AXES.iter().enumerate() {
                let num = fd_partial(|q| killing_field(kind, q), p, *axis, fd);
                let diff = [
                    (jac[0][col] - num.vx).norm(),
                    (jac[1][col] - num.vy).norm(),
                    (jac[2][col] - num.vrho).norm(),
                ];
                for d in diff {
                    worst = worst.max(d);
                }
            }
        }
    }
    out.push(CheckResult::at_most("jacobian-vs-stencil", worst, 1e-6));

    // The Hodge star squares to one on both degrees.
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut worst: f64 = 0.0;
    for &p in &pts {
        let a = [
            random_su2(&mut rng),
            random_su2(&mut rng),
            random_su2(&mut rng),
        ];
        let round1 = star_2to1(&star_1to2(&a, p.rho), p.rho);
        let round2 = star_1to2(&star_2to1(&a, p.rho), p.rho);
        for i in 0..3 {
            worst = worst
                .max((round1[i] - a[i]).max_abs())
                .max((round2[i] - a[i]).max_abs());
        }
    }
    out.push(CheckResult::at_most("star-involution", worst, 1e-12));

    // Measured order of the second-order stencil on a smooth profile.
    let probe = |h: f64| {
        let fd = FdScheme::new(h, FdOrder::Two);
        let p = pt(0.3, -0.5, 1.2);
        let f = |q: Point| (q.x * q.rho).sin() * (q.y - q.rho).cos();
        let exact = {
            let (x, y, r) = (p.x, p.y, p.rho);
            r * (x * r).cos() * (y - r).cos()
        };
        (fd_partial(f, p, Axis::X, fd) - exact).abs()
    };
    out.push(CheckResult::at_least(
        "stencil-order",
        measured_order(probe),
        1.7,
    ));

    out
}

/// The monopole family: field equation, structure identities, boundary
/// behaviour, and the dyonic gauge transformation.
pub fn suite_monopole(params: &SuiteParams) -> Vec<CheckResult> {
    let fd = params.scheme();
    let pts = sample_points(params.points, params.seed);
    let cfgs = [
        Monopole::unit(),
        Monopole::new(0.6, -0.4, 1.8),
        Monopole::new(-0.9, 0.2, 0.7),
    ];
    let mut out = Vec::new();

    // Field equation residual d^AΦ − ∗F at seeded points.
    let mut worst: f64 = 0.0;
    for cfg in &cfgs {
        for &p in &pts {
            worst = worst.max(cfg.bogomolny_residual(p, fd));
        }
    }
    out.push(CheckResult::at_most("field-equation-residual", worst, 1e-5));

    // Its stencil order.
    let cfg = Monopole::unit();
    let order = measured_order(|h| {
        cfg.bogomolny_residual(pt(0.4, -0.2, 0.9), FdScheme::new(h, FdOrder::Two))
    });
    out.push(CheckResult::at_least("field-equation-order", order, 1.7));

    // F = dA + A∧A pointwise from the closed forms.
    let mut worst: f64 = 0.0;
    for cfg in &cfgs {
        for &p in &pts {
            let a = cfg.connection(p);
            let da = cfg.connection_curl(p);
            let f = cfg.curvature(p);
            let build = [
                da[0] + a[0].comm(&a[1]),
                da[1] + a[1].comm(&a[2]),
                da[2] + a[2].comm(&a[0]),
            ];
            let comps = f.comps();
            for i in 0..3 {
                worst = worst.max((build[i] - comps[i]).max_abs());
            }
        }
    }
    out.push(CheckResult::at_most("curvature-structure", worst, 1e-12));

    // Higgs boundary value (i/2)σ₃ to O(ρ).
    let target = Mat2::SIGMA3.scale(c(0.0, 0.5));
    let mut worst: f64 = 0.0;
    for cfg in &cfgs {
        for &p in &pts {
            let q = pt(p.x, p.y, 1e-4);
            worst = worst.max((cfg.higgs(q) - target).max_abs());
        }
    }
    out.push(CheckResult::at_most("higgs-boundary-value", worst, 1e-3));

    // Energy density identity against the raw field norms.
    let mut worst: f64 = 0.0;
    for cfg in &cfgs {
        for &p in &pts {
            let r2 = p.rho * p.rho;
            let f = cfg.curvature(p).comps();
            let d = cfg.higgs_cov_grad(p);
            let mut s = c(0.0, 0.0);
            for i in 0..3 {
                s += (f[i] * f[i]).trace() * (r2 * r2) + (d[i] * d[i]).trace() * r2;
            }
            let lhs = c(cfg.energy_density(p), 0.0);
            worst = worst.max((lhs + s * 0.25).norm());
        }
    }
    out.push(CheckResult::at_most(
        "energy-density-identity",
        worst,
        1e-12,
    ));

    // Model point values: f = 1/2, Φ = 0 at the centre of the unit
    // configuration.
    let p0 = pt(0.0, 0.0, 1.0);
    let model = (cfg.profile(p0) - 0.5)
        .abs()
        .max(cfg.higgs(p0).max_abs())
        .max((cfg.energy_density(p0) - 0.75).abs());
    out.push(CheckResult::at_most("model-point-values", model, 1e-15));

    // Dyonic transformation: unitary, fixes Φ, analytic gradient.
    let mut worst_unit: f64 = 0.0;
    let mut worst_fix: f64 = 0.0;
    let mut worst_grad: f64 = 0.0;
    for &s in &[0.1, -0.35, 2.0] {
        let dyon = DyonGauge::new(&cfg, s);
        for &p in &pts {
            let g = dyon.transform(p);
            worst_unit = worst_unit.max((g.dagger() * g - Mat2::ID).max_abs());
            worst_fix = worst_fix.max((g.dagger() * cfg.higgs(p) * g - cfg.higgs(p)).max_abs());
            let analytic = dyon.transform_grad(p);
            for (i, axis) in AXES.iter().enumerate() {
                let num = fd_partial(|q| dyon.transform(q), p, *axis, fd);
                worst_grad = worst_grad.max((analytic[i] - num).max_abs());
            }
        }
    }
    out.push(CheckResult::at_most("dyon-unitarity", worst_unit, 1e-12));
    out.push(CheckResult::at_most(
        "dyon-higgs-invariance",
        worst_fix,
        1e-12,
    ));
    out.push(CheckResult::at_most(
        "dyon-gradient-vs-stencil",
        worst_grad,
        1e-6,
    ));

    out
}

/// Killing spinors, eigenspinors, tangent vectors, gauge fixing, and the
/// closed-form identities tying them together.
pub fn suite_deformations(params: &SuiteParams) -> Vec<CheckResult> {
    let fd = params.scheme();
    let pts = sample_points(params.points, params.seed);
    let id_pts = identity_points(params);
    let cfg = Monopole::unit();
    let shifted = Monopole::new(0.3, -0.7, 1.4);
    let mut out = Vec::new();

    // Killing spinor residuals, both families.
    let mut worst: f64 = 0.0;
    for basis in [KillingSpinorBasis::minus(), KillingSpinorBasis::plus()] {
        for &p in &pts {
            for alpha in [1, 2] {
                worst = worst.max(killing_spinor_residual(
                    |q| basis.psi(alpha, q),
                    basis.killing_constant(),
                    p,
                    fd,
                ));
            }
        }
    }
    out.push(CheckResult::at_most("killing-spinor-residual", worst, 1e-5));

    let order = measured_order(|h| {
        let basis = KillingSpinorBasis::minus();
        killing_spinor_residual(
            |q| basis.psi(2, q),
            basis.killing_constant(),
            pt(0.4, -0.2, 0.9),
            FdScheme::new(h, FdOrder::Two),
        )
    });
    out.push(CheckResult::at_least("killing-spinor-order", order, 1.7));

    // Dirac eigenvalue ∓3i/2 on the families.
    let mut worst: f64 = 0.0;
    for basis in [KillingSpinorBasis::minus(), KillingSpinorBasis::plus()] {
        let ev = basis.dirac_eigenvalue();
        for &p in &pts {
            for alpha in [1, 2] {
                let d = dirac_spinor(|q| basis.psi(alpha, q), p, fd);
                worst = worst.max((d - basis.psi(alpha, p).scale(ev)).max_abs());
            }
        }
    }
    out.push(CheckResult::at_most(
        "dirac-eigenvalue-residual",
        worst,
        1e-5,
    ));

    // Pairing normalisation (ψ₁, ψ₂) = 1, identity grade.
    let mut worst: f64 = 0.0;
    for basis in [KillingSpinorBasis::minus(), KillingSpinorBasis::plus()] {
        for &p in &id_pts {
            worst = worst.max((pair(&basis.psi(1, p), &basis.psi(2, p)) - c(1.0, 0.0)).norm());
        }
    }
    out.push(CheckResult::at_most(
        "spinor-pair-normalisation",
        worst,
        1e-10,
    ));

    // Eigen equation for ν_α (minus) and its conjugates (plus).
    let mut worst: f64 = 0.0;
    for &p in &pts {
        for alpha in [1, 2] {
            worst = worst.max(eigen_residual(
                &cfg,
                |q| eigenspinor(&cfg, alpha, q),
                Sign::Minus,
                p,
                fd,
            ));
            worst = worst.max(eigen_residual(
                &cfg,
                |q| conj_gauge(&eigenspinor(&cfg, alpha, q)),
                Sign::Plus,
                p,
                fd,
            ));
        }
    }
    out.push(CheckResult::at_most("eigen-equation-residual", worst, 1e-5));

    let order = measured_order(|h| {
        eigen_residual(
            &cfg,
            |q| eigenspinor(&cfg, 1, q),
            Sign::Minus,
            pt(0.4, -0.2, 0.9),
            FdScheme::new(h, FdOrder::Two),
        )
    });
    out.push(CheckResult::at_least("eigen-equation-order", order, 1.7));

    // Gauge fixing on the minus branch for all four tangents, plus both
    // branches for the Higgs tangent (whose scalar part vanishes).
    let mut worst: f64 = 0.0;
    for &p in &pts {
        for mu in 0..=3 {
            let d = tangent_vector(&cfg, mu);
            worst = worst.max(gauge_fix_residual(&cfg, &d, Sign::Minus, p, fd));
        }
        let d0 = tangent_vector(&cfg, 0);
        worst = worst.max(gauge_fix_residual(&cfg, &d0, Sign::Plus, p, fd));
    }
    out.push(CheckResult::at_most("gauge-fixing-residual", worst, 1e-5));

    let order = measured_order(|h| {
        let d = tangent_vector(&cfg, 1);
        gauge_fix_residual(
            &cfg,
            &d,
            Sign::Minus,
            pt(0.4, -0.2, 0.9),
            FdScheme::new(h, FdOrder::Two),
        )
    });
    out.push(CheckResult::at_least("gauge-fixing-order", order, 1.7));

    // Negative control: the unframed rotation fails gauge fixing.
    let bare = pure_gauge(&cfg, GaugeGenerator::BareRotation);
    let mut least = f64::INFINITY;
    for &p in &pts {
        least = least.min(gauge_fix_residual(&cfg, &bare, Sign::Minus, p, fd));
    }
    out.push(CheckResult::at_least(
        "gauge-fixing-negative-control",
        least,
        1e-3,
    ));

    // Linearised field equation on tangents and pure-gauge modes.
    let mut worst: f64 = 0.0;
    for &p in &pts {
        for mu in 0..=3 {
            let d = tangent_vector(&cfg, mu);
            worst = worst.max(lin_res(&cfg, &d, p, fd));
        }
        for j in 1..=3 {
            let d = pure_gauge(&cfg, GaugeGenerator::Framed(j));
            worst = worst.max(lin_res(&cfg, &d, p, fd));
        }
    }
    out.push(CheckResult::at_most(
        "linearised-equation-residual",
        worst,
        1e-5,
    ));

    let order = measured_order(|h| {
        let d = tangent_vector(&cfg, 2);
        lin_res(&cfg, &d, pt(0.4, -0.2, 0.9), FdScheme::new(h, FdOrder::Two))
    });
    out.push(CheckResult::at_least(
        "linearised-equation-order",
        order,
        1.7,
    ));

    // Negative control: the off-shell field fails the linearisation.
    let off = off_shell(&cfg);
    let mut least = f64::INFINITY;
    for &p in &pts {
        least = least.min(lin_res(&cfg, &off, p, fd));
    }
    out.push(CheckResult::at_least(
        "linearised-negative-control",
        least,
        1e-2,
    ));

    // --- identity-grade closed-form checks (1e-10) ---

    // Rank-one expansion of the Higgs tangent.
    let basis = KillingSpinorBasis::minus();
    let mut worst: f64 = 0.0;
    for cfg in [&cfg, &shifted] {
        for &p in &id_pts {
            let v = tangent_vector(cfg, 0).value(p);
            let lhs = cl(&v.a, &v.phi, p.rho);
            let (n1, n2) = eigenspinors(cfg, p);
            let rhs = tensor(&n1, &dual(&basis.psi(2, p))) - tensor(&n2, &dual(&basis.psi(1, p)));
            worst = worst.max((lhs - rhs).max_abs());
        }
    }
    out.push(CheckResult::at_most("gauge-action-rank-one", worst, 1e-10));

    // All four tangents decompose over the coefficient matrices.
    let mut worst: f64 = 0.0;
    for cfg in [&cfg, &shifted] {
        for &p in &id_pts {
            for mu in 0..=3 {
                let v = tangent_vector(cfg, mu).value(p);
                let lhs = cl(&v.a, &v.phi, p.rho);
                worst = worst.max((lhs - clifford_decomposition_rhs(cfg, mu, p)).max_abs());
            }
        }
    }
    out.push(CheckResult::at_most("tangent-decomposition", worst, 1e-10));

    // Rotation contractions equal the framed pure-gauge modes.
    let xk = [KillingKind::X1, KillingKind::X2, KillingKind::X3];
    let mut worst: f64 = 0.0;
    for &p in &id_pts {
        for j in 1..=3 {
            let lhs = contract_field(&cfg, xk[j - 1], p);
            let rhs = pure_gauge(&cfg, GaugeGenerator::Framed(j)).value(p);
            worst = worst.max((lhs - rhs).max_abs());
        }
    }
    out.push(CheckResult::at_most(
        "rotation-gauge-identity",
        worst,
        1e-10,
    ));

    // Boost contractions complete the complex tangents.
    let yk = [KillingKind::Y1, KillingKind::Y2, KillingKind::Y3];
    let mut worst: f64 = 0.0;
    for &p in &id_pts {
        for j in 1..=3 {
            let boost = contract_field(&cfg, yk[j - 1], p);
            let gauge = pure_gauge(&cfg, GaugeGenerator::Framed(j)).value(p);
            let lhs = boost + gauge.scale(c(0.0, 1.0));
            let rhs = tangent_vector(&cfg, j).value(p);
            worst = worst.max((lhs - rhs).max_abs());
        }
    }
    out.push(CheckResult::at_most("boost-split-identity", worst, 1e-10));

    // Complex structure squares to −1 on tangent values.
    let mut worst: f64 = 0.0;
    for &p in &id_pts {
        for mu in 0..=3 {
            let v = tangent_vector(&cfg, mu).value(p);
            let jj = pluricomplex_j(&pluricomplex_j(&v, p.rho), p.rho);
            worst = worst.max((jj + v).max_abs());
        }
    }
    out.push(CheckResult::at_most(
        "complex-structure-squares",
        worst,
        1e-10,
    ));

    // Pair trace closed form Tr(ν₁, ν₂) = −6ρ⁴f².
    let mut worst: f64 = 0.0;
    for cfg in [&cfg, &shifted] {
        for &p in &id_pts {
            let (n1, n2) = eigenspinors(cfg, p);
            let f = cfg.profile(p);
            let expect = c(-6.0 * p.rho.powi(4) * f * f, 0.0);
            worst = worst.max((trace_pair(&n1, &n2) - expect).norm());
        }
    }
    out.push(CheckResult::at_most("pair-trace-closed-form", worst, 1e-10));

    // Real deformations round-trip through their spinor.
    let mut worst: f64 = 0.0;
    for &p in &id_pts {
        let v = tangent_vector(&cfg, 0).value(p);
        let nu = real_deformation_spinor(&v, p);
        let rebuilt = real_deformation_clifford(&nu, p);
        worst = worst.max((rebuilt - cl(&v.a, &v.phi, p.rho)).max_abs());
    }
    out.push(CheckResult::at_most("real-spinor-roundtrip", worst, 1e-10));

    // Sanity: the unframed generator's gradient stays traceless and
    // antihermitian (guards the negative controls against typos).
    let mut worst: f64 = 0.0;
    for &p in &id_pts {
        for g in bare_rotation_coord_grad(p) {
            worst = worst
                .max(g.traceless_defect())
                .max(g.antihermitian_defect());
        }
        for j in 1..=3 {
            let g = chi(j, p);
            worst = worst
                .max(g.traceless_defect())
                .max(g.antihermitian_defect());
        }
    }
    out.push(CheckResult::at_most(
        "generator-algebra-valued",
        worst,
        1e-12,
    ));

    out
}

fn lin_res(
    cfg: &Monopole,
    d: &crate::deformations::Deformation<'_>,
    p: Point,
    fd: FdScheme,
) -> f64 {
    crate::deformations::lin_bogomolny_residual(cfg, d, p, fd)
}

/// All four suites with their names, in dependency order.
pub fn all_suites(params: &SuiteParams) -> Vec<(&'static str, Vec<CheckResult>)> {
    vec![
        ("algebra", suite_algebra(params)),
        ("geometry", suite_geometry(params)),
        ("monopole", suite_monopole(params)),
        ("deformations", suite_deformations(params)),
    ]
}

/// Run one suite by name; `None` if the name is unknown.
pub fn suite_by_name(name: &str, params: &SuiteParams) -> Option<Vec<CheckResult>> {
    match name {
        "algebra" => Some(suite_algebra(params)),
        "geometry" => Some(suite_geometry(params)),
        "monopole" => Some(suite_monopole(params)),
        "deformations" => Some(suite_deformations(params)),
        _ => None,
    }
}
