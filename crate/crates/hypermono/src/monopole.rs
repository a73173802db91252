//! The explicit charge-1 monopole on the half-space, all in closed form.
//!
//! With centre `(x₀, y₀)`, scale `λ > 0`, offsets `X = x − x₀`, `Y = y − y₀`
//! and `D = λ² + X² + Y² + ρ²`:
//!
//! ```text
//! A = i[(ρσ₂ − Yσ₃) dx + (Xσ₃ − ρσ₁) dy + (Yσ₁ − Xσ₂) dρ] / D
//! Φ = (i/2)σ₃ − (iρ/D)(ρσ₃ + Xσ₁ + Yσ₂)
//! F = i f (σ₃ dx∧dy + σ₁ dy∧dρ + σ₂ dρ∧dx),      f = 2λ²/D²
//! ```
//!
//! The pair solves `d^A Φ = ∗F`, has magnetic charge 1 and boundary Higgs
//! norm 1/2, and total energy `2π · 1 · 1/2 = π` with pointwise energy
//! density `3ρ⁴f²` against the hyperbolic measure `ρ⁻³ dx dy dρ`.
//!
//! [`DyonGauge`] is the one-parameter family of gauge transforms
//! `g_s = exp(sΦ)`, used to probe the Chern–Simons functional: it fixes Φ,
//! conjugates F, and shifts A by `g†dg`.

use crate::algebra::{c, Mat2};
use crate::geometry::{covariant_grad, star_2to1, FdScheme, Point};

/// Curvature 2-form components in the order `xy`, `yρ`, `ρx`.
#[derive(Clone, Copy, Debug)]
pub struct FieldStrength {
    pub xy: Mat2,
    pub yrho: Mat2,
    pub rhox: Mat2,
}

impl FieldStrength {
    /// Components as an array `[F_xy, F_yρ, F_ρx]`.
    #[inline]
    pub fn comps(&self) -> [Mat2; 3] {
        [self.xy, self.yrho, self.rhox]
    }

    #[inline]
    pub fn from_comps(b: [Mat2; 3]) -> FieldStrength {
        FieldStrength {
            xy: b[0],
            yrho: b[1],
            rhox: b[2],
        }
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.xy
            .max_abs()
            .max(self.yrho.max_abs())
            .max(self.rhox.max_abs())
    }
}

/// A connection-plus-curvature pair; implemented by the monopole itself and
/// by its gauge transforms, so integrals can be written once for both.
pub trait GaugeField {
    fn connection(&self, p: Point) -> [Mat2; 3];
    fn curvature(&self, p: Point) -> FieldStrength;
}

/// Charge-1 monopole configuration with centre `(x0, y0)` and scale `lambda`.
#[derive(Clone, Copy, Debug)]
pub struct Monopole {
    pub x0: f64,
    pub y0: f64,
    pub lambda: f64,
}

impl Monopole {
    pub fn new(x0: f64, y0: f64, lambda: f64) -> Monopole {
        assert!(
            lambda > 0.0 && lambda.is_finite(),
            "scale must be positive, got {lambda}"
        );
        Monopole { x0, y0, lambda }
    }

    /// Centre at the origin, unit scale.
    pub fn unit() -> Monopole {
        Monopole::new(0.0, 0.0, 1.0)
    }

    /// Magnetic charge `n`.
    pub fn charge(&self) -> u32 {
        1
    }

    /// Boundary Higgs norm `p` (the mass parameter).
    pub fn mass(&self) -> f64 {
        0.5
    }

    /// Total energy `2π n p` of the configuration.
    pub fn expected_energy(&self) -> f64 {
        2.0 * std::f64::consts::PI * f64::from(self.charge()) * self.mass()
    }

    #[inline]
    fn offsets(&self, p: Point) -> (f64, f64, f64) {
        (p.x - self.x0, p.y - self.y0, p.rho)
    }

    /// `D = λ² + X² + Y² + ρ²`.
    #[inline]
    pub fn denom(&self, p: Point) -> f64 {
        let (xx, yy, rho) = self.offsets(p);
        self.lambda * self.lambda + xx * xx + yy * yy + rho * rho
    }

    /// Curvature profile `f = 2λ²/D²`.
    #[inline]
    pub fn profile(&self, p: Point) -> f64 {
        let d = self.denom(p);
        2.0 * self.lambda * self.lambda / (d * d)
    }

    /// Higgs field `Φ = (i/2)σ₃ − (iρ/D)(ρσ₃ + Xσ₁ + Yσ₂)`.
    pub fn higgs(&self, p: Point) -> Mat2 {
        let (xx, yy, rho) = self.offsets(p);
        let d = self.denom(p);
        let core = Mat2::SIGMA3.scale(c(0.0, 0.5));
        let tail = Mat2::SIGMA3.scale(c(rho, 0.0))
            + Mat2::SIGMA1.scale(c(xx, 0.0))
            + Mat2::SIGMA2.scale(c(yy, 0.0));
        core - tail.scale(c(0.0, rho / d))
    }

    /// Energy density against the hyperbolic measure: `3ρ⁴f²`.
    #[inline]
    pub fn energy_density(&self, p: Point) -> f64 {
        let f = self.profile(p);
        3.0 * p.rho.powi(4) * f * f
    }

    /// Coordinate exterior derivative `dA` of the connection, components
    /// `xy`, `yρ`, `ρx` — closed form, used to cross-check `F = dA + A∧A`.
    pub fn connection_curl(&self, p: Point) -> [Mat2; 3] {
        let (xx, yy, rho) = self.offsets(p);
        let d = self.denom(p);
        let l2 = self.lambda * self.lambda;
        let s = c(0.0, 2.0 / (d * d));
        let xy = (Mat2::SIGMA3.scale(c(l2 + rho * rho, 0.0))
            + (Mat2::SIGMA1.scale(c(xx, 0.0)) + Mat2::SIGMA2.scale(c(yy, 0.0))).scale(c(rho, 0.0)))
        .scale(s);
        let yrho = (Mat2::SIGMA1.scale(c(l2 + xx * xx, 0.0))
            + Mat2::SIGMA2.scale(c(xx * yy, 0.0))
            + Mat2::SIGMA3.scale(c(xx * rho, 0.0)))
        .scale(s);
        let rhox = (Mat2::SIGMA2.scale(c(l2 + yy * yy, 0.0))
            + Mat2::SIGMA1.scale(c(xx * yy, 0.0))
            + Mat2::SIGMA3.scale(c(yy * rho, 0.0)))
        .scale(s);
        [xy, yrho, rhox]
    }

    /// Covariant Higgs gradient `(d^A Φ)_i`, equal to `(∗F)_i` in closed form.
    pub fn higgs_cov_grad(&self, p: Point) -> [Mat2; 3] {
        star_2to1(&self.curvature(p).comps(), p.rho)
    }

    /// Coordinate gradient `∂_i Φ = (d^A Φ)_i − [A_i, Φ]`, closed form.
    pub fn higgs_coord_grad(&self, p: Point) -> [Mat2; 3] {
        let a = self.connection(p);
        let phi = self.higgs(p);
        let cov = self.higgs_cov_grad(p);
        [
            cov[0] - a[0].comm(&phi),
            cov[1] - a[1].comm(&phi),
            cov[2] - a[2].comm(&phi),
        ]
    }

    /// Max-norm of `d^A Φ − ∗F` with the gradient taken by finite
    /// differences — the equation the closed forms are supposed to solve.
    pub fn bogomolny_residual(&self, p: Point, fd: FdScheme) -> f64 {
        let grad = covariant_grad(|q| self.higgs(q), |q| self.connection(q), p, fd);
        let star_f = star_2to1(&self.curvature(p).comps(), p.rho);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            worst = worst.max((grad[i] - star_f[i]).max_abs());
        }
        worst
    }
}

impl GaugeField for Monopole {
    /// `A_x = i(ρσ₂ − Yσ₃)/D`, `A_y = i(Xσ₃ − ρσ₁)/D`, `A_ρ = i(Yσ₁ − Xσ₂)/D`.
    fn connection(&self, p: Point) -> [Mat2; 3] {
        let (xx, yy, rho) = self.offsets(p);
        let s = c(0.0, 1.0 / self.denom(p));
        [
            (Mat2::SIGMA2.scale(c(rho, 0.0)) - Mat2::SIGMA3.scale(c(yy, 0.0))).scale(s),
            (Mat2::SIGMA3.scale(c(xx, 0.0)) - Mat2::SIGMA1.scale(c(rho, 0.0))).scale(s),
            (Mat2::SIGMA1.scale(c(yy, 0.0)) - Mat2::SIGMA2.scale(c(xx, 0.0))).scale(s),
        ]
    }

    /// `F = if (σ₃, σ₁, σ₂)` in components `(xy, yρ, ρx)`.
    fn curvature(&self, p: Point) -> FieldStrength {
        let f = c(0.0, self.profile(p));
        FieldStrength {
            xy: Mat2::SIGMA3.scale(f),
            yrho: Mat2::SIGMA1.scale(f),
            rhox: Mat2::SIGMA2.scale(f),
        }
    }
}

/// `cos(s√u)` and `sinc(s√u)` together with their `u`-derivatives, stable
/// for small `s²u` via series.
fn rotation_profiles(s: f64, u: f64) -> (f64, f64, f64, f64) {
    let m = s * s * u;
    if m <= 1e-3 {
        // cos = 1 − m/2 + m²/24 − m³/720, sinc = 1 − m/6 + m²/120 − m³/5040;
        // truncation error below 1e-16 for m ≤ 1e-3.
        let cosv = 1.0 - m / 2.0 + m * m / 24.0 - m * m * m / 720.0;
        let sincv = 1.0 - m / 6.0 + m * m / 120.0 - m * m * m / 5040.0;
        let dsinc_dm = -1.0 / 6.0 + m / 60.0 - m * m / 1680.0;
        let dcos_du = -(s * s / 2.0) * sincv;
        let dsinc_du = s * s * dsinc_dm;
        (cosv, sincv, dcos_du, dsinc_du)
    } else {
        let z = s * u.sqrt();
        let cosv = z.cos();
        let sincv = z.sin() / z;
        let dcos_du = -(s * s / 2.0) * sincv;
        let dsinc_du = (cosv - sincv) / (2.0 * u);
        (cosv, sincv, dcos_du, dsinc_du)
    }
}

/// The gauge transform `g_s = exp(sΦ)` applied to a monopole: connection
/// `g†Ag + g†dg`, curvature `g†Fg`, Higgs field unchanged.
#[derive(Clone, Copy, Debug)]
pub struct DyonGauge<'a> {
    pub base: &'a Monopole,
    pub s: f64,
}

impl<'a> DyonGauge<'a> {
    pub fn new(base: &'a Monopole, s: f64) -> DyonGauge<'a> {
        DyonGauge { base, s }
    }

    /// Real coefficients `v_k = Tr(Φσ_k)/(2i)`, so `Φ = i v·σ`.
    fn higgs_vector(&self, p: Point) -> [f64; 3] {
        let phi = self.base.higgs(p);
        let mut v = [0.0; 3];
        for (k, sig) in [Mat2::SIGMA1, Mat2::SIGMA2, Mat2::SIGMA3]
            .iter()
            .enumerate()
        {
            let t = (phi * *sig).trace();
            v[k] = t.im / 2.0; // Tr(Φσ)/(2i) = Im Tr(Φσ)/2 for anti-hermitian Φ
        }
        v
    }

    fn higgs_vector_grad(&self, p: Point) -> [[f64; 3]; 3] {
        // dv[i][k] = ∂_i v_k from the closed-form coordinate gradient of Φ.
        let grad = self.base.higgs_coord_grad(p);
        let mut dv = [[0.0; 3]; 3];
        for i in 0..3 {
            for (k, sig) in [Mat2::SIGMA1, Mat2::SIGMA2, Mat2::SIGMA3]
                .iter()
                .enumerate()
            {
                dv[i][k] = (grad[i] * *sig).trace().im / 2.0;
            }
        }
        dv
    }

    /// `g = cos(s|v|) + i sinc(s|v|) s v·σ`, i.e. `exp(sΦ)` with `Φ = iv·σ`.
    pub fn transform(&self, p: Point) -> Mat2 {
        let v = self.higgs_vector(p);
        let u = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        let (cosv, sincv, _, _) = rotation_profiles(self.s, u);
        let vdots = Mat2::SIGMA1.scale(c(v[0], 0.0))
            + Mat2::SIGMA2.scale(c(v[1], 0.0))
            + Mat2::SIGMA3.scale(c(v[2], 0.0));
        Mat2::ID.scale(c(cosv, 0.0)) + vdots.scale(c(0.0, self.s * sincv))
    }

    /// Closed-form coordinate gradient `∂_i g`, avoiding nested finite
    /// differences in curvature checks.
    pub fn transform_grad(&self, p: Point) -> [Mat2; 3] {
        let v = self.higgs_vector(p);
        let dv = self.higgs_vector_grad(p);
        let u = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        let (_, sincv, dcos_du, dsinc_du) = rotation_profiles(self.s, u);
        let vdots = Mat2::SIGMA1.scale(c(v[0], 0.0))
            + Mat2::SIGMA2.scale(c(v[1], 0.0))
            + Mat2::SIGMA3.scale(c(v[2], 0.0));
        let mut out = [Mat2::ZERO; 3];
        for i in 0..3 {
            let du_i = 2.0 * (v[0] * dv[i][0] + v[1] * dv[i][1] + v[2] * dv[i][2]);
            let dvdots = Mat2::SIGMA1.scale(c(dv[i][0], 0.0))
                + Mat2::SIGMA2.scale(c(dv[i][1], 0.0))
                + Mat2::SIGMA3.scale(c(dv[i][2], 0.0));
            out[i] = Mat2::ID.scale(c(dcos_du * du_i, 0.0))
                + vdots.scale(c(0.0, self.s * dsinc_du * du_i))
                + dvdots.scale(c(0.0, self.s * sincv));
        }
        out
    }
}

impl GaugeField for DyonGauge<'_> {
    fn connection(&self, p: Point) -> [Mat2; 3] {
        let g = self.transform(p);
        let gd = g.dagger();
        let a = self.base.connection(p);
        let dg = self.transform_grad(p);
        [
            gd * a[0] * g + gd * dg[0],
            gd * a[1] * g + gd * dg[1],
            gd * a[2] * g + gd * dg[2],
        ]
    }

    fn curvature(&self, p: Point) -> FieldStrength {
        let g = self.transform(p);
        let gd = g.dagger();
        let f = self.base.curvature(p);
        FieldStrength {
            xy: gd * f.xy * g,
            yrho: gd * f.yrho * g,
            rhox: gd * f.rhox * g,
        }
    }
}
