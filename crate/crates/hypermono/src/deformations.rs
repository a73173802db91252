//! Killing spinors, curvature eigenspinors, and the tangent space of the
//! monopole at its symmetric orbit.
//!
//! The half-space carries two rank-1 families of Killing spinors,
//! `∇_X ψ = κ (X·ψ)` with `κ = ∓i/2`; the `κ = −i/2` family is explicit:
//!
//! ```text
//! ψ₁ = ρ^{−1/2} (1, 0),    ψ₂ = ρ^{−1/2} (−x + iy, ρ),    (ψ₁, ψ₂) = 1,
//! ```
//!
//! and the other family is its quaternionic conjugate. Contracting the
//! monopole curvature with these produces eigenspinors of the coupled
//! Dirac operator, `ν_α = cl(F)ψ_α`, with `(D^A − [Φ,·])ν = −(i/2)ν`.
//!
//! Deformations of the configuration are pairs `(a, φ)` of a gauge-valued
//! 1-form and scalar. The module provides, all in closed form:
//!
//! * the four symmetry tangent vectors — `μ = 0` the Higgs translation
//!   `(∗F, 0)` and `μ = j` the contractions `(Z_j ⌟ F, Z_j ⌟ d^AΦ)`;
//! * pure-gauge deformations `(d^Aχ, [Φ, χ])` for the framed rotation
//!   generators `χ_j` of the unit configuration and for the unframed
//!   rotation `iσ₃/(1+|x|²)` used as a negative control;
//! * the residuals of the gauge-fixing equation
//!   `∗d^A∗a + [Φ, φ] ± 2iφ = 0` and of the linearised field equation
//!   `d^Aφ + [a, Φ] = ∗d^Aa`;
//! * the complex structure `J(a_x, a_y, a_ρ, φ) = (−a_y, a_x, −φ/ρ, ρa_ρ)`
//!   and the spinor encoding `ν = −iρ^{3/2}(a_x − ia_y, −a_ρ + iφ/ρ)` of a
//!   real deformation.

use crate::algebra::{
    c, conj_gauge, conj_spinor, dual, tensor, GaugeSpinor, Mat2, SpinEndo, Spinor, C,
};
use crate::geometry::{
    cov_deriv_spinor, covariant_curl, covariant_grad, killing_field, star_2to1, star_d_star,
    FdScheme, KillingKind, Point, AXES,
};
use crate::monopole::{GaugeField, Monopole};

/// Which Killing constant a spinor family satisfies: `Minus` is `κ = −i/2`
/// (the family with explicit formulas), `Plus` its conjugate, `κ = +i/2`.
/// The same label picks the branch of the gauge-fixing equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

/// Basis of the two-dimensional space of Killing spinors for one sign.
#[derive(Clone, Copy, Debug)]
pub struct KillingSpinorBasis {
    pub sign: Sign,
}

impl KillingSpinorBasis {
    pub fn minus() -> KillingSpinorBasis {
        KillingSpinorBasis { sign: Sign::Minus }
    }

    pub fn plus() -> KillingSpinorBasis {
        KillingSpinorBasis { sign: Sign::Plus }
    }

    /// Killing constant `κ` with `∇_X ψ = κ X·ψ`.
    pub fn killing_constant(&self) -> C {
        match self.sign {
            Sign::Minus => c(0.0, -0.5),
            Sign::Plus => c(0.0, 0.5),
        }
    }

    /// Dirac eigenvalue `−3κ` of the family.
    pub fn dirac_eigenvalue(&self) -> C {
        self.killing_constant() * c(-3.0, 0.0)
    }

    /// Basis spinor `ψ_α`, `α ∈ {1, 2}`; the plus family is the
    /// quaternionic conjugate of the minus family, so both satisfy
    /// `(ψ₁, ψ₂) = 1`.
    pub fn psi(&self, alpha: usize, p: Point) -> Spinor {
        let r = p.rho.powf(-0.5);
        let minus = match alpha {
            1 => Spinor::new(c(r, 0.0), c(0.0, 0.0)),
            2 => Spinor::new(c(-p.x, p.y) * c(r, 0.0), c(p.rho * r, 0.0)),
            _ => panic!("spinor index {alpha} out of range 1..=2"),
        };
        match self.sign {
            Sign::Minus => minus,
            Sign::Plus => conj_spinor(&minus),
        }
    }
}

/// Bounded rescaling `(4/(1+|x|²))^{1/4} ρ^{1/2} ψ_α` of the Killing
/// spinors, written in a frame that stays finite at the boundary; used
/// only to check boundedness near `ρ = 0`.
pub fn bounded_frame_spinor(alpha: usize, p: Point) -> Spinor {
    let q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    let scale = (4.0 / q).powf(0.25) * p.rho.sqrt();
    KillingSpinorBasis::minus().psi(alpha, p) * scale
}

/// Max-norm of `∇_i ψ − κ cl((∂_i)♭) ψ` over the three coordinate
/// directions — zero (to stencil error) for Killing spinors.
pub fn killing_spinor_residual<F>(psi: F, kappa: C, p: Point, fd: FdScheme) -> f64
where
    F: Fn(Point) -> Spinor + Copy,
{
    // cl((∂_i)♭) = cl(dx^i/ρ²) = −iσ_{k(i)}/ρ.
    let sigmas = [Mat2::SIGMA1, Mat2::SIGMA2, Mat2::SIGMA3];
    let mut worst: f64 = 0.0;
    for (i, axis) in AXES.iter().enumerate() {
        let cov = cov_deriv_spinor(psi, p, *axis, fd);
        let target = sigmas[i]
            .scale(kappa * c(0.0, -1.0 / p.rho))
            .mul_spinor(&psi(p));
        worst = worst.max((cov - target).max_abs());
    }
    worst
}

/// Clifford action of a curvature 2-form,
/// `cl(F) = −iρ² (F_xy σ₃ + F_yρ σ₁ + F_ρx σ₂)` as a spin endomorphism
/// with gauge-algebra blocks.
pub fn curvature_clifford(f: &crate::monopole::FieldStrength, rho: f64) -> SpinEndo {
    let s = c(0.0, -rho * rho);
    let i = c(0.0, 1.0);
    SpinEndo {
        b: [
            [f.xy.scale(s), (f.yrho - f.rhox.scale(i)).scale(s)],
            [(f.yrho + f.rhox.scale(i)).scale(s), f.xy.scale(-s)],
        ],
    }
}

/// Dirac eigenspinor `ν_α = cl(F)ψ_α` of the minus family, in closed form:
///
/// ```text
/// ν₁ = −iρ^{3/2} (F_xy,  F_yρ + iF_ρx)
/// ν₂ =  iρ^{3/2} ((x−iy)F_xy − ρ(F_yρ − iF_ρx),  (x−iy)(F_yρ + iF_ρx) + ρF_xy)
/// ```
pub fn eigenspinor(cfg: &Monopole, alpha: usize, p: Point) -> GaugeSpinor {
    let f = cfg.curvature(p);
    let i = c(0.0, 1.0);
    let r32 = p.rho.powf(1.5);
    match alpha {
        1 => {
            let s = c(0.0, -r32);
            GaugeSpinor::new(f.xy.scale(s), (f.yrho + f.rhox.scale(i)).scale(s))
        }
        2 => {
            let s = c(0.0, r32);
            let w = c(p.x, -p.y); // x − iy
            let rr = c(p.rho, 0.0);
            GaugeSpinor::new(
                (f.xy.scale(w) - (f.yrho - f.rhox.scale(i)).scale(rr)).scale(s),
                ((f.yrho + f.rhox.scale(i)).scale(w) + f.xy.scale(rr)).scale(s),
            )
        }
        _ => panic!("eigenspinor index {alpha} out of range 1..=2"),
    }
}

/// Both eigenspinors at once.
pub fn eigenspinors(cfg: &Monopole, p: Point) -> (GaugeSpinor, GaugeSpinor) {
    (eigenspinor(cfg, 1, p), eigenspinor(cfg, 2, p))
}

/// Same spinors through the Clifford route `cl(F)ψ_α` — used to cross-check
/// the closed forms.
pub fn eigenspinor_from_clifford(cfg: &Monopole, alpha: usize, p: Point) -> GaugeSpinor {
    let basis = KillingSpinorBasis::minus();
    curvature_clifford(&cfg.curvature(p), p.rho).apply(&basis.psi(alpha, p))
}

/// Max-norm of the eigen-equation residual
/// `D^Aν − [Φ, ν] − eigenvalue·ν` for a gauge-spinor field.
pub fn eigen_residual<F>(cfg: &Monopole, nu: F, sign: Sign, p: Point, fd: FdScheme) -> f64
where
    F: Fn(Point) -> GaugeSpinor + Copy,
{
    let conn = |q: Point| cfg.connection(q);
    let dirac = crate::geometry::dirac_gauge_spinor(nu, conn, p, fd);
    let phi = cfg.higgs(p);
    let v = nu(p);
    let bracket = GaugeSpinor::new(phi.comm(&v.s1), phi.comm(&v.s2));
    let eigenvalue = match sign {
        Sign::Minus => c(0.0, -0.5),
        Sign::Plus => c(0.0, 0.5),
    };
    (dirac - bracket - v.scale(eigenvalue)).max_abs()
}

/// Value of a deformation at a point: gauge-valued 1-form components
/// `a = [a_x, a_y, a_ρ]` and Higgs variation `φ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformationValue {
    pub a: [Mat2; 3],
    pub phi: Mat2,
}

impl DeformationValue {
    pub const ZERO: DeformationValue = DeformationValue {
        a: [Mat2::ZERO, Mat2::ZERO, Mat2::ZERO],
        phi: Mat2::ZERO,
    };

    #[inline]
    pub fn scale(&self, z: C) -> DeformationValue {
        DeformationValue {
            a: [self.a[0].scale(z), self.a[1].scale(z), self.a[2].scale(z)],
            phi: self.phi.scale(z),
        }
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.a[0]
            .max_abs()
            .max(self.a[1].max_abs())
            .max(self.a[2].max_abs())
            .max(self.phi.max_abs())
    }
}

impl std::ops::Add for DeformationValue {
    type Output = DeformationValue;
    fn add(self, rhs: DeformationValue) -> DeformationValue {
        DeformationValue {
            a: [
                self.a[0] + rhs.a[0],
                self.a[1] + rhs.a[1],
                self.a[2] + rhs.a[2],
            ],
            phi: self.phi + rhs.phi,
        }
    }
}

impl std::ops::Sub for DeformationValue {
    type Output = DeformationValue;
    fn sub(self, rhs: DeformationValue) -> DeformationValue {
        DeformationValue {
            a: [
                self.a[0] - rhs.a[0],
                self.a[1] - rhs.a[1],
                self.a[2] - rhs.a[2],
            ],
            phi: self.phi - rhs.phi,
        }
    }
}

/// Built-in gauge-transformation generators of the unit configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeGenerator {
    /// Framed rotation generator `χ_j`, `j ∈ 1..=3`.
    Framed(usize),
    /// The unframed rotation `iσ₃/(1+|x|²)`; generates the same boundary
    /// rotation as `χ₃` but fails both the framing integral and the
    /// gauge-fixing equation — kept as a negative control.
    BareRotation,
}

/// A deformation of the monopole with closed-form values.
#[derive(Clone, Copy, Debug)]
pub struct Deformation<'a> {
    pub cfg: &'a Monopole,
    pub kind: DeformationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformationKind {
    /// `μ = 0`: `(∗F, 0)`; `μ = j`: `(Z_j ⌟ F, Z_j ⌟ d^AΦ)`.
    Symmetry(usize),
    /// Pure gauge `(d^Aχ, [Φ, χ])` for a built-in generator (unit
    /// configuration only).
    PureGauge(GaugeGenerator),
    /// A fixed smooth field that is *not* a solution of the linearised
    /// equations; negative control for the residual suites.
    OffShell,
}

/// The symmetry tangent vector `μ ∈ 0..=3`.
pub fn tangent_vector(cfg: &Monopole, mu: usize) -> Deformation<'_> {
    assert!(mu <= 3, "tangent index {mu} out of range 0..=3");
    Deformation {
        cfg,
        kind: DeformationKind::Symmetry(mu),
    }
}

/// Pure-gauge deformation generated by `gen`; the built-in generators are
/// specific to the unit configuration.
pub fn pure_gauge(cfg: &Monopole, gen: GaugeGenerator) -> Deformation<'_> {
    assert!(
        cfg.x0 == 0.0 && cfg.y0 == 0.0 && cfg.lambda == 1.0,
        "built-in gauge generators are defined for the unit configuration only"
    );
    if let GaugeGenerator::Framed(j) = gen {
        assert!(
            (1..=3).contains(&j),
            "generator index {j} out of range 1..=3"
        );
    }
    Deformation {
        cfg,
        kind: DeformationKind::PureGauge(gen),
    }
}

/// The built-in off-shell deformation (negative control).
pub fn off_shell(cfg: &Monopole) -> Deformation<'_> {
    Deformation {
        cfg,
        kind: DeformationKind::OffShell,
    }
}

/// Contraction of a vector field into the curvature pair:
/// `a = V ⌟ F`, `φ = V ⌟ d^AΦ`, with
/// `(V⌟F)_x = −V^y F_xy + V^ρ F_ρx`, `(V⌟F)_y = V^x F_xy − V^ρ F_yρ`,
/// `(V⌟F)_ρ = V^y F_yρ − V^x F_ρx`.
pub fn contract_field(cfg: &Monopole, kind: KillingKind, p: Point) -> DeformationValue {
    let v = killing_field(kind, p);
    let f = cfg.curvature(p);
    let grad = cfg.higgs_cov_grad(p);
    let ax = f.rhox.scale(v.vrho) - f.xy.scale(v.vy);
    let ay = f.xy.scale(v.vx) - f.yrho.scale(v.vrho);
    let arho = f.yrho.scale(v.vy) - f.rhox.scale(v.vx);
    let phi = grad[0].scale(v.vx) + grad[1].scale(v.vy) + grad[2].scale(v.vrho);
    DeformationValue {
        a: [ax, ay, arho],
        phi,
    }
}

/// Framed rotation generator `χ_j` of the unit configuration, with
/// `Q = 1 + x² + y² + ρ²`:
///
/// ```text
/// χ₁ = i(ρσ₁ − xσ₃)/Q,   χ₂ = i(ρσ₂ − yσ₃)/Q,   χ₃ = iσ₃/Q − Φ.
/// ```
///
/// These satisfy `(X_j ⌟ F, X_j ⌟ d^AΦ) = (d^Aχ_j, [Φ, χ_j])` and have
/// vanishing framing integral `∫ Tr(F ∧ d^Aχ_j)`.
pub fn chi(j: usize, p: Point) -> Mat2 {
    let q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    let iq = c(0.0, 1.0 / q);
    match j {
        1 => (Mat2::SIGMA1.scale(c(p.rho, 0.0)) - Mat2::SIGMA3.scale(c(p.x, 0.0))).scale(iq),
        2 => (Mat2::SIGMA2.scale(c(p.rho, 0.0)) - Mat2::SIGMA3.scale(c(p.y, 0.0))).scale(iq),
        3 => Mat2::SIGMA3.scale(iq) - Monopole::unit().higgs(p),
        _ => panic!("generator index {j} out of range 1..=3"),
    }
}

/// Coordinate gradient `∂_i χ_j`, closed form.
pub fn chi_coord_grad(j: usize, p: Point) -> [Mat2; 3] {
    let (x, y, rho) = (p.x, p.y, p.rho);
    let q = 1.0 + x * x + y * y + rho * rho;
    let dq = [2.0 * x, 2.0 * y, 2.0 * rho];
    let i = c(0.0, 1.0);
    match j {
        1 | 2 => {
            // χ = i N/Q with N = ρσ_j − w σ₃, w = x (j=1) or y (j=2).
            let (sig, w, dw) = match j {
                1 => (Mat2::SIGMA1, x, [1.0, 0.0, 0.0]),
                _ => (Mat2::SIGMA2, y, [0.0, 1.0, 0.0]),
            };
            let n = sig.scale(c(rho, 0.0)) - Mat2::SIGMA3.scale(c(w, 0.0));
            let dn = |k: usize| {
                let drho = if k == 2 { 1.0 } else { 0.0 };
                sig.scale(c(drho, 0.0)) - Mat2::SIGMA3.scale(c(dw[k], 0.0))
            };
            let mut out = [Mat2::ZERO; 3];
            for k in 0..3 {
                out[k] = (dn(k).scale(c(1.0 / q, 0.0)) - n.scale(c(dq[k] / (q * q), 0.0))).scale(i);
            }
            out
        }
        3 => {
            let dphi = Monopole::unit().higgs_coord_grad(p);
            let mut out = [Mat2::ZERO; 3];
            for k in 0..3 {
                out[k] = Mat2::SIGMA3.scale(c(0.0, -dq[k] / (q * q))) - dphi[k];
            }
            out
        }
        _ => panic!("generator index {j} out of range 1..=3"),
    }
}

/// The unframed rotation generator `iσ₃/(1+|x|²)`.
pub fn bare_rotation(p: Point) -> Mat2 {
    let q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    Mat2::SIGMA3.scale(c(0.0, 1.0 / q))
}

/// Coordinate gradient of [`bare_rotation`].
pub fn bare_rotation_coord_grad(p: Point) -> [Mat2; 3] {
    let q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
    let dq = [2.0 * p.x, 2.0 * p.y, 2.0 * p.rho];
    let mut out = [Mat2::ZERO; 3];
    for k in 0..3 {
        out[k] = Mat2::SIGMA3.scale(c(0.0, -dq[k] / (q * q)));
    }
    out
}

impl Deformation<'_> {
    /// Short name for reports.
    pub fn label(&self) -> String {
        match self.kind {
            DeformationKind::Symmetry(mu) => format!("tangent-{mu}"),
            DeformationKind::PureGauge(GaugeGenerator::Framed(j)) => format!("gauge-chi{j}"),
            DeformationKind::PureGauge(GaugeGenerator::BareRotation) => "gauge-bare".to_string(),
            DeformationKind::OffShell => "off-shell".to_string(),
        }
    }

    /// Closed-form value at a point.
    pub fn value(&self, p: Point) -> DeformationValue {
        match self.kind {
            DeformationKind::Symmetry(0) => DeformationValue {
                a: star_2to1(&self.cfg.curvature(p).comps(), p.rho),
                phi: Mat2::ZERO,
            },
            DeformationKind::Symmetry(j @ 1..=3) => {
                let kind = match j {
                    1 => KillingKind::Z1,
                    2 => KillingKind::Z2,
                    _ => KillingKind::Z3,
                };
                contract_field(self.cfg, kind, p)
            }
            DeformationKind::Symmetry(mu) => panic!("tangent index {mu} out of range"),
            DeformationKind::PureGauge(gen) => {
                let (g, dg) = match gen {
                    GaugeGenerator::Framed(j) => (chi(j, p), chi_coord_grad(j, p)),
                    GaugeGenerator::BareRotation => (bare_rotation(p), bare_rotation_coord_grad(p)),
                };
                let conn = self.cfg.connection(p);
                let phi = self.cfg.higgs(p);
                DeformationValue {
                    a: [
                        dg[0] + conn[0].comm(&g),
                        dg[1] + conn[1].comm(&g),
                        dg[2] + conn[2].comm(&g),
                    ],
                    phi: phi.comm(&g),
                }
            }
            DeformationKind::OffShell => {
                // Smooth, decaying, deliberately not a solution.
                let q = 1.0 + p.x * p.x + p.y * p.y + p.rho * p.rho;
                let s = 1.0 / q;
                DeformationValue {
                    a: [
                        Mat2::SIGMA1.scale(c(0.0, p.rho * s)),
                        Mat2::SIGMA2.scale(c(0.0, p.x * s)),
                        Mat2::SIGMA3.scale(c(0.0, p.y * s)),
                    ],
                    phi: Mat2::SIGMA3.scale(c(0.0, s)),
                }
            }
        }
    }
}

/// Max-norm of the gauge-fixing residual `∗d^A∗a + [Φ, φ] ± 2iφ` at a
/// point (`Minus` takes `−2iφ`, `Plus` takes `+2iφ`).
pub fn gauge_fix_residual(
    cfg: &Monopole,
    d: &Deformation<'_>,
    sign: Sign,
    p: Point,
    fd: FdScheme,
) -> f64 {
    let codiff = star_d_star(|q| d.value(q).a, |q| cfg.connection(q), p, fd);
    let phi = cfg.higgs(p);
    let v = d.value(p).phi;
    let two_i = match sign {
        Sign::Minus => c(0.0, -2.0),
        Sign::Plus => c(0.0, 2.0),
    };
    (codiff + phi.comm(&v) + v.scale(two_i)).max_abs()
}

/// Max-norm of the linearised-equation residual
/// `d^Aφ + [a, Φ] − ∗d^Aa` over the three components.
pub fn lin_bogomolny_residual(cfg: &Monopole, d: &Deformation<'_>, p: Point, fd: FdScheme) -> f64 {
    let conn = |q: Point| cfg.connection(q);
    let dphi = covariant_grad(|q| d.value(q).phi, conn, p, fd);
    let curl = covariant_curl(|q| d.value(q).a, conn, p, fd);
    let star_curl = star_2to1(&curl, p.rho);
    let phi = cfg.higgs(p);
    let v = d.value(p);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let r = dphi[i] + v.a[i].comm(&phi) - star_curl[i];
        worst = worst.max(r.max_abs());
    }
    worst
}

/// Coefficients `C^μ` of the rank-one expansion
/// `cl(a_μ, φ_μ) = Σ_{αβ} C^μ_{αβ} ν_α ⊗ ψ_β∗` for the four symmetry
/// tangent vectors.
pub fn symmetry_coefficients(mu: usize) -> [[C; 2]; 2] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match mu {
        0 => [[z, one], [-one, z]],
        1 => [[-i, z], [z, i]],
        2 => [[-one, z], [z, -one]],
        3 => [[z, i], [i, z]],
        _ => panic!("tangent index {mu} out of range 0..=3"),
    }
}

/// The rank-one side `Σ C^μ_{αβ} ν_α ⊗ ψ_β∗` of the expansion above.
pub fn clifford_decomposition_rhs(cfg: &Monopole, mu: usize, p: Point) -> SpinEndo {
    let basis = KillingSpinorBasis::minus();
    let (nu1, nu2) = eigenspinors(cfg, p);
    let nus = [nu1, nu2];
    let cmat = symmetry_coefficients(mu);
    let mut out = SpinEndo::ZERO;
    for (ai, nu) in nus.iter().enumerate() {
        for (bi, beta) in [1usize, 2].iter().enumerate() {
            let w = dual(&basis.psi(*beta, p));
            out = out + tensor(nu, &w).scale(cmat[ai][bi]);
        }
    }
    out
}

/// The complex structure on deformations:
/// `(a_x, a_y, a_ρ, φ) ↦ (−a_y, a_x, −φ/ρ, ρ a_ρ)`. Squares to `−1`.
pub fn pluricomplex_j(v: &DeformationValue, rho: f64) -> DeformationValue {
    DeformationValue {
        a: [-v.a[1], v.a[0], v.phi.scale(c(-1.0 / rho, 0.0))],
        phi: v.a[2].scale(c(rho, 0.0)),
    }
}

/// Spinor encoding of a real deformation:
/// `ν = −iρ^{3/2} (a_x − i a_y, −a_ρ + iφ/ρ)`, the unique gauge spinor with
/// `cl(a, φ) = ν ⊗ ψ₁∗ + conj(ν) ⊗ conj(ψ₁)∗` over the minus basis.
pub fn real_deformation_spinor(v: &DeformationValue, p: Point) -> GaugeSpinor {
    let i = c(0.0, 1.0);
    let s = c(0.0, -p.rho.powf(1.5));
    GaugeSpinor::new(
        (v.a[0] - v.a[1].scale(i)).scale(s),
        (v.phi.scale(c(0.0, 1.0 / p.rho)) - v.a[2]).scale(s),
    )
}

/// Rebuild `cl(a, φ)` from the encoding of [`real_deformation_spinor`].
pub fn real_deformation_clifford(nu: &GaugeSpinor, p: Point) -> SpinEndo {
    let basis = KillingSpinorBasis::minus();
    let psi1 = basis.psi(1, p);
    tensor(nu, &dual(&psi1)) + tensor(&conj_gauge(nu), &dual(&conj_spinor(&psi1)))
}
